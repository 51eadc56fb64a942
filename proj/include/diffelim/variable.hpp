#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace diffelim {

// Kinds are listed in their comparison order.
enum class VarKind : std::uint8_t {
  DiffInd,     // u_{j,k}: a = j (1-based), b = k, c = name id
  DiffParam,   // base symbol of the coefficient domain: a = name id, b = k
  DiffCoeff,   // generic differential coefficient a{i}_{h}^{(k)}: a = i, b = h, c = k
  GenCoeff,    // c{l}_{h}: a = l, b = h
  AlgVar,      // y{m}: a = m
  Structural,  // x{i}_{j} of the structural matrix: a = i, b = j
};

struct Variable {
  VarKind kind = VarKind::DiffInd;
  std::int32_t a = 0, b = 0, c = 0;

  bool operator==(const Variable&) const = default;

  static Variable diff_ind(int j, int k, int name_id);
  static Variable diff_ind(int j, int k);  // named "u{j}"
  static Variable diff_param(const std::string& name, int k = 0);
  static Variable diff_coeff(int i, int h, int k = 0) { return {VarKind::DiffCoeff, i, h, k}; }
  static Variable gen_coeff(int l, int h) { return {VarKind::GenCoeff, l, h, 0}; }
  static Variable alg(int m) { return {VarKind::AlgVar, m, 0, 0}; }
  static Variable structural(int i, int j) { return {VarKind::Structural, i, j, 0}; }

  // Derivative order for kinds that carry one, 0 otherwise.
  int order() const;
  // Same variable with derivative order k (DiffInd, DiffParam, DiffCoeff only).
  Variable with_order(int k) const;
  bool differential() const {
    return kind == VarKind::DiffInd || kind == VarKind::DiffParam || kind == VarKind::DiffCoeff;
  }

  std::string name() const;
};

// Strict total order, fixed for the process.
bool var_less(const Variable& x, const Variable& y);
inline bool operator<(const Variable& x, const Variable& y) { return var_less(x, y); }

// Interned names for differential indeterminates and parameters.
int intern_name(const std::string& s);
const std::string& name_of(int id);

std::string derivative_suffix(int k);

}  // namespace diffelim

template <>
struct std::hash<diffelim::Variable> {
  std::size_t operator()(const diffelim::Variable& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.kind);
    h = h * 1000003u ^ static_cast<std::uint32_t>(v.a);
    h = h * 1000003u ^ static_cast<std::uint32_t>(v.b);
    h = h * 1000003u ^ static_cast<std::uint32_t>(v.c);
    return h;
  }
};
