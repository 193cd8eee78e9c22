#include "bbs/context.hpp"

#include <set>

#include "bbs/error.hpp"

namespace bbs {

ContextPtr VariableContext::make(std::vector<std::string> main_vars,
                                 std::vector<std::string> param_vars,
                                 std::optional<std::string> deform_var) {
  if (main_vars.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a context needs at least one main variable");
  }
  std::shared_ptr<VariableContext> ctx(new VariableContext());
  ctx->main_ = std::move(main_vars);
  ctx->params_ = std::move(param_vars);
  ctx->deform_ = std::move(deform_var);
  ctx->index_names();
  return ctx;
}

std::string VariableContext::grid_name(int row, int col) {
  return "c" + std::to_string(row) + "_" + std::to_string(col);
}

ContextPtr VariableContext::with_parameter_grid(std::vector<std::string> main_vars, int rows,
                                                int cols, std::optional<std::string> deform_var) {
  if (main_vars.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a context needs at least one main variable");
  }
  std::shared_ptr<VariableContext> ctx(new VariableContext());
  ctx->main_ = std::move(main_vars);
  ctx->deform_ = std::move(deform_var);
  ctx->grid_rows_ = rows;
  ctx->grid_cols_ = cols;
  ctx->params_.reserve(static_cast<std::size_t>(rows * cols));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) ctx->params_.push_back(grid_name(i, j));
  }
  ctx->index_names();
  return ctx;
}

void VariableContext::index_names() {
  auto add = [this](const std::string& name, VarRef ref) {
    if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    if (!lookup_.emplace(name, ref).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + name + "'");
    }
  };
  for (int i = 0; i < num_main(); ++i) add(main_[static_cast<std::size_t>(i)], {VarKind::Main, i});
  for (int i = 0; i < num_params(); ++i) add(params_[static_cast<std::size_t>(i)], {VarKind::Param, i});
  if (deform_) add(*deform_, {VarKind::Deform, 0});
}

int VariableContext::param_index(int row, int col) const {
  if (!has_grid() || row < 1 || row > grid_rows_ || col < 1 || col > grid_cols_) {
    throw Error(ErrorCode::InvalidArgument, "parameter index out of range");
  }
  return (row - 1) * grid_cols_ + (col - 1);
}

std::pair<int, int> VariableContext::param_position(int flat) const {
  if (!has_grid() || flat < 0 || flat >= num_params()) {
    throw Error(ErrorCode::InvalidArgument, "parameter position out of range");
  }
  return {flat / grid_cols_ + 1, flat % grid_cols_ + 1};
}

std::optional<VarRef> VariableContext::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

const std::string& VariableContext::name(VarRef v) const {
  switch (v.kind) {
    case VarKind::Main: return main_.at(static_cast<std::size_t>(v.index));
    case VarKind::Param: return params_.at(static_cast<std::size_t>(v.index));
    case VarKind::Deform: break;
  }
  if (!deform_) throw Error(ErrorCode::MissingVariable, "context has no deformation variable");
  return *deform_;
}

bool VariableContext::operator==(const VariableContext& other) const {
  return main_ == other.main_ && params_ == other.params_ && deform_ == other.deform_;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace bbs
