#pragma once

#include <string>

#include "diffelim/system.hpp"

namespace diffelim {

// Grammar:
//   system {
//     diffvars: u1, u2;
//     params: t (dt=1), x;     # x without a rule has derivatives x', x'', ...
//     consts: a1, b1;          # parameters with zero derivative
//     mode: generic;           # optional, default concrete
//     f1 = u1' + t*u1^2 - x;
//   }
// Derivatives: u1', u1'', u1^(3). Laurent powers: u1^-2. Rational literals: 3/4.
DiffSystem parse_system(const std::string& text);

// A single expression. Identifiers c{l}_{h}, a{i}_{h}, y{m}, u{j}, x{i}_{j} map to the
// corresponding variable kinds; names declared in `context` resolve as in that system;
// anything else is a free differential parameter.
MultiPoly parse_poly(const std::string& text, const DiffSystem* context = nullptr);

std::string print_system(const DiffSystem& sys);

// Replaces every equation by the generic polynomial with the same support in the u's.
void make_generic(DiffSystem& sys);
DiffSystem genericize(const DiffSystem& sys);

}  // namespace diffelim
