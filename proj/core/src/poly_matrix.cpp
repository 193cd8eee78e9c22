#include "bbs/poly_matrix.hpp"

#include <algorithm>

#include "bbs/error.hpp"

namespace bbs {

PolyMatrix::PolyMatrix(ContextPtr ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Polynomial(ctx_)) {}

PolyMatrix PolyMatrix::identity(ContextPtr ctx, int n) {
  PolyMatrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ctx, 1);
  return m;
}

std::vector<Polynomial> PolyMatrix::column(int c) const {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

void PolyMatrix::set_column(int c, const std::vector<Polynomial>& col) {
  if (static_cast<int>(col.size()) != rows_) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
  for (int r = 0; r < rows_; ++r) at(r, c) = col[static_cast<std::size_t>(r)];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  PolyMatrix out(ctx_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Polynomial& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Polynomial& b = other.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += other.entries_[k];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= other.entries_[k];
  return out;
}

std::vector<Polynomial> PolyMatrix::operator*(const std::vector<Polynomial>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Polynomial> out(static_cast<std::size_t>(rows_), Polynomial(ctx_));
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Polynomial& a = at(i, k);
      if (!a.is_zero() && !v[static_cast<std::size_t>(k)].is_zero()) out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::map(const std::function<Polynomial(const Polynomial&)>& f) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = f(e);
  if (!out.entries_.empty()) out.ctx_ = out.entries_.front().context();
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<Polynomial> vector_sub(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<Polynomial> out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

std::vector<Polynomial> vector_add(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<Polynomial> out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

}  // namespace bbs
