#include "hamrec/weyl.hpp"

#include <cmath>
#include <mutex>

namespace hamrec {

namespace {

Caps word_caps(int length) { return Caps{length, 0}; }

// symbol of the normal-ordered word (a^*)^u a^v on one dof: zbar^u * z^v
PhasePoly normal_word_symbol(int u, int v) {
  PhasePoly acc = PhasePoly::constant(1, 1.0);
  const Caps caps = word_caps(u + v);
  for (int q = 0; q < u; ++q) acc = star_product(acc, PhasePoly::zbar(1, 0), caps);
  for (int q = 0; q < v; ++q) acc = star_product(acc, PhasePoly::z(1, 0), caps);
  return acc;
}

}  // namespace

PhasePoly ladder_to_weyl(int dof, const std::vector<LadderFactor>& word) {
  PhasePoly acc = PhasePoly::constant(dof, 1.0);
  const Caps caps = word_caps(static_cast<int>(word.size()));
  for (const LadderFactor& b : word) {
    PhasePoly factor = b.creation ? PhasePoly::zbar(dof, b.dof)
                                  : PhasePoly::z(dof, b.dof);
    acc = star_product(acc, factor, caps);
  }
  return acc;
}

std::vector<double> weyl_to_normal_order(int j, int k) {
  // Triangular solve: z^j zbar^k = sum_c gamma_c hbar^c sigma(u=k-c, v=j-c)
  // where sigma(u,v) is the symbol of (a^*)^u a^v.
  const int cmax = std::min(j, k);
  std::vector<double> gamma(cmax + 1, 0.0);
  MonomialKey target(1);
  target.j[0] = j;
  target.k[0] = k;
  PhasePoly residue = PhasePoly::monomial(target, 1.0);
  for (int c = 0; c <= cmax; ++c) {
    MonomialKey lead(1);
    lead.hbar = c;
    lead.j[0] = j - c;
    lead.k[0] = k - c;
    cplx coeff = residue.coeff(lead);
    gamma[c] = coeff.real();
    if (gamma[c] != 0.0)
      residue -= normal_word_symbol(k - c, j - c).mul_hbar(c) * cplx(gamma[c]);
  }
  if (residue.max_abs_coeff() > 1e-10)
    throw std::logic_error("weyl_to_normal_order: triangular solve residue");
  return gamma;
}

const PHbarPoly& weyl_diagonal_polynomial(int j) {
  static std::map<int, PHbarPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(j);
  if (it != cache.end()) return it->second;

  // <mu|(a^*)^l a^l|mu> = prod_{r<l} (mu - r) hbar = prod_{r<l} (P - (2r+1) hbar/2)
  PHbarPoly w;
  std::vector<double> gamma = weyl_to_normal_order(j, j);
  for (int c = 0; c <= j; ++c) {
    if (gamma[c] == 0.0) continue;
    const int l = j - c;
    PHbarPoly prod{{{0, c}, gamma[c]}};  // hbar^c prefactor
    for (int r = 0; r < l; ++r) {
      PHbarPoly next;
      for (const auto& [pw, coeff] : prod) {
        next[{pw.first + 1, pw.second}] += coeff;
        next[{pw.first, pw.second + 1}] += -coeff * (2 * r + 1) * 0.5;
      }
      prod = std::move(next);
    }
    for (const auto& [pw, coeff] : prod) w[pw] += coeff;
  }
  for (auto itw = w.begin(); itw != w.end();)
    itw = (std::abs(itw->second) < 1e-14) ? w.erase(itw) : std::next(itw);
  return cache.emplace(j, std::move(w)).first->second;
}

double eval_phbar(const PHbarPoly& w, double P, double hbar) {
  double total = 0;
  for (const auto& [pw, coeff] : w)
    total += coeff * std::pow(P, pw.first) * std::pow(hbar, pw.second);
  return total;
}

cplx diagonal_eval(const PhasePoly& f, const FockState& state) {
  if (static_cast<int>(state.mu.size()) != f.dof())
    throw DimensionError("state dof mismatch");
  const double h = state.hbar;
  cplx total = 0;
  for (const auto& [key, c] : f.terms()) {
    if (!key.resonant()) continue;  // ladder selection rule
    double v = std::pow(h, key.hbar);
    for (int e = 0; e < key.tau; ++e) v *= kTwoPi * state.nu * h;
    for (int i = 0; i < f.dof(); ++i) {
      const double P = (state.mu[i] + 0.5) * h;
      v *= eval_phbar(weyl_diagonal_polynomial(key.j[i]), P, h);
    }
    total += c * v;
  }
  return total;
}

}  // namespace hamrec
