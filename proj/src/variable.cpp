#include "diffelim/variable.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace diffelim {

namespace {

struct NameTable {
  std::mutex mu;
  std::unordered_map<std::string, int> ids;
  std::deque<std::string> names;  // stable references
};

NameTable& table() {
  static NameTable t;
  return t;
}

}  // namespace

int intern_name(const std::string& s) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(s);
  if (it != t.ids.end()) return it->second;
  int id = static_cast<int>(t.names.size());
  t.names.push_back(s);
  t.ids.emplace(s, id);
  return id;
}

const std::string& name_of(int id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.at(static_cast<std::size_t>(id));
}

Variable Variable::diff_ind(int j, int k, int name_id) { return {VarKind::DiffInd, j, k, name_id}; }

Variable Variable::diff_ind(int j, int k) {
  return diff_ind(j, k, intern_name("u" + std::to_string(j)));
}

Variable Variable::diff_param(const std::string& name, int k) {
  return {VarKind::DiffParam, intern_name(name), k, 0};
}

int Variable::order() const {
  switch (kind) {
    case VarKind::DiffInd:
    case VarKind::DiffParam:
      return b;
    case VarKind::DiffCoeff:
      return c;
    default:
      return 0;
  }
}

Variable Variable::with_order(int k) const {
  Variable v = *this;
  switch (kind) {
    case VarKind::DiffInd:
    case VarKind::DiffParam:
      v.b = k;
      break;
    case VarKind::DiffCoeff:
      v.c = k;
      break;
    default:
      throw std::logic_error("variable has no derivative order: " + name());
  }
  return v;
}

std::string derivative_suffix(int k) {
  if (k <= 0) return {};
  if (k <= 2) return std::string(static_cast<std::size_t>(k), '\'');
  return "^(" + std::to_string(k) + ")";
}

std::string Variable::name() const {
  switch (kind) {
    case VarKind::DiffInd:
      return name_of(c) + derivative_suffix(b);
    case VarKind::DiffParam:
      return name_of(a) + derivative_suffix(b);
    case VarKind::DiffCoeff:
      return "a" + std::to_string(a) + "_" + std::to_string(b) + derivative_suffix(c);
    case VarKind::GenCoeff:
      return "c" + std::to_string(a) + "_" + std::to_string(b);
    case VarKind::AlgVar:
      return "y" + std::to_string(a);
    case VarKind::Structural:
      return "x" + std::to_string(a) + "_" + std::to_string(b);
  }
  return "?";
}

bool var_less(const Variable& x, const Variable& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.kind == VarKind::DiffParam) {
    if (x.a != y.a) return name_of(x.a) < name_of(y.a);
    return x.b < y.b;
  }
  return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
}

}  // namespace diffelim
