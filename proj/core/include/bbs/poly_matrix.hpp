#pragma once

#include <functional>
#include <vector>

#include "bbs/polynomial.hpp"

namespace bbs {

/// Dense matrix of polynomials sharing one context.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(ContextPtr ctx, int rows, int cols);
  static PolyMatrix identity(ContextPtr ctx, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const ContextPtr& context() const { return ctx_; }

  Polynomial& at(int r, int c) { return entries_[index(r, c)]; }
  const Polynomial& at(int r, int c) const { return entries_[index(r, c)]; }
  std::vector<Polynomial> column(int c) const;
  void set_column(int c, const std::vector<Polynomial>& col);

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  std::vector<Polynomial> operator*(const std::vector<Polynomial>& v) const;
  PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& f) const;

  bool is_zero() const;
  bool operator==(const PolyMatrix& other) const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  ContextPtr ctx_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial> entries_;
};

std::vector<Polynomial> vector_sub(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);
std::vector<Polynomial> vector_add(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

}  // namespace bbs
