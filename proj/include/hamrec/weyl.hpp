#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hamrec/phase_poly.hpp"

namespace hamrec {

/// One factor of an ordered ladder word: a_i or a_i^* on dof i.
struct LadderFactor {
  int dof = 0;
  bool creation = false;  // false: a_i, true: a_i^*
};

/// Total Weyl symbol of the ordered operator product b_1 ... b_l, expressed in
/// the Weyl-monomial basis with explicit hbar corrections. Pure grade equals
/// the word length.
PhasePoly ladder_to_weyl(int dof, const std::vector<LadderFactor>& word);

/// Bivariate polynomial in (P, hbar) with real coefficients; value type for
/// diagonal matrix elements of one-dof Weyl monomials.
using PHbarPoly = std::map<std::pair<int, int>, double>;  // (P pow, hbar pow)

/// <mu| Op^W(|z|^{2j}) |mu> as a polynomial in P = (mu + 1/2) hbar and hbar,
/// obtained from the normal-ordered expansion of the Weyl monomial.
const PHbarPoly& weyl_diagonal_polynomial(int j);

double eval_phbar(const PHbarPoly& w, double P, double hbar);

/// Exact diagonal matrix element <mu,nu| Op^W(f) |mu,nu>. Off-diagonal keys
/// (j != k or d != 0) contribute zero; diagonal keys evaluate at
/// P_i = (mu_i + 1/2) hbar, D_t = 2 pi nu hbar.
cplx diagonal_eval(const PhasePoly& f, const FockState& state);

/// Normal-ordered expansion of a one-dof Weyl monomial: coefficients gamma_c
/// with Op^W(z^j zbar^k) = sum_c gamma_c hbar^c (a^*)^{k-c} (a)^{j-c}.
std::vector<double> weyl_to_normal_order(int j, int k);

}  // namespace hamrec
