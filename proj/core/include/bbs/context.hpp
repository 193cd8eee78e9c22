#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bbs {

enum class VarKind : int { Main = 0, Param = 1, Deform = 2 };

struct VarRef {
  VarKind kind = VarKind::Main;
  int index = 0;

  auto operator<=>(const VarRef&) const = default;
};

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

/// The variables a polynomial may use: main variables x_1..x_n, parameters
/// (usually the grid c_ij of a generic border prebasis) and at most one
/// deformation variable, which doubles as the homogenizing variable x_0.
class VariableContext {
 public:
  static ContextPtr make(std::vector<std::string> main_vars,
                         std::vector<std::string> param_vars = {},
                         std::optional<std::string> deform_var = std::nullopt);

  /// Parameters c<i>_<j> for 1 <= i <= rows, 1 <= j <= cols, flattened
  /// row-major.
  static ContextPtr with_parameter_grid(std::vector<std::string> main_vars,
                                        int rows, int cols,
                                        std::optional<std::string> deform_var);

  static std::string grid_name(int row, int col);

  int num_main() const { return static_cast<int>(main_.size()); }
  int num_params() const { return static_cast<int>(params_.size()); }
  bool has_deform() const { return deform_.has_value(); }
  int num_vars() const { return num_main() + num_params() + (has_deform() ? 1 : 0); }

  const std::vector<std::string>& main_vars() const { return main_; }
  const std::vector<std::string>& param_vars() const { return params_; }
  const std::optional<std::string>& deform_var() const { return deform_; }

  bool has_grid() const { return grid_rows_ > 0; }
  int grid_rows() const { return grid_rows_; }
  int grid_cols() const { return grid_cols_; }
  /// 1-based (row, col) to flat parameter index.
  int param_index(int row, int col) const;
  /// Flat parameter index to 1-based (row, col).
  std::pair<int, int> param_position(int flat) const;

  std::optional<VarRef> find(std::string_view name) const;
  const std::string& name(VarRef v) const;

  bool operator==(const VariableContext& other) const;

 private:
  VariableContext() = default;
  void index_names();

  std::vector<std::string> main_;
  std::vector<std::string> params_;
  std::optional<std::string> deform_;
  int grid_rows_ = 0;
  int grid_cols_ = 0;
  std::unordered_map<std::string, VarRef> lookup_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace bbs
