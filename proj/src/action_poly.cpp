#include "hamrec/action_poly.hpp"

#include <cmath>

namespace hamrec {

ActionPoly& ActionPoly::operator+=(const ActionPoly& g) {
  if (dof_ != g.dof_) throw DimensionError("dof mismatch");
  for (const auto& [key, c] : g.terms_) add_term(key, c);
  return *this;
}

ActionPoly& ActionPoly::operator-=(const ActionPoly& g) {
  if (dof_ != g.dof_) throw DimensionError("dof mismatch");
  for (const auto& [key, c] : g.terms_) add_term(key, -c);
  return *this;
}

ActionPoly& ActionPoly::operator*=(double c) {
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

ActionPoly ActionPoly::graded_part(int r) const {
  ActionPoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (key.grade() == r) out.terms_.emplace(key, c);
  return out;
}

ActionPoly ActionPoly::graded_at_most(int r) const {
  ActionPoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (key.grade() <= r) out.terms_.emplace(key, c);
  return out;
}

ActionPoly ActionPoly::hbar_slice(int p) const {
  ActionPoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (key.hbar == p) out.terms_.emplace(key, c);
  return out;
}

double ActionPoly::max_abs_coeff() const {
  double m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void ActionPoly::prune(double rel_tol) {
  std::map<int, double> grade_max;
  for (const auto& [key, c] : terms_) {
    double& m = grade_max[key.grade()];
    m = std::max(m, std::abs(c));
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < rel_tol * grade_max[it->first.grade()])
      it = terms_.erase(it);
    else
      ++it;
  }
}

double ActionPoly::eval(const std::vector<double>& actions, double tau_val,
                        double hbar_val) const {
  if (static_cast<int>(actions.size()) != dof_)
    throw DimensionError("eval point dof mismatch");
  double total = 0;
  for (const auto& [key, c] : terms_) {
    double v = c;
    for (int i = 0; i < dof_; ++i)
      for (int e = 0; e < key.l[i]; ++e) v *= actions[i];
    for (int e = 0; e < key.tau; ++e) v *= tau_val;
    for (int e = 0; e < key.hbar; ++e) v *= hbar_val;
    total += v;
  }
  return total;
}

ActionPoly diagonal_to_action(const PhasePoly& f, double imag_tol) {
  ActionPoly out(f.dof());
  double scale = std::max(1.0, f.max_abs_coeff());
  for (const auto& [key, c] : f.terms()) {
    if (!key.resonant()) continue;
    if (std::abs(c.imag()) > imag_tol * scale)
      throw InfeasibleInputError("diagonal coefficient with imaginary part " +
                                 std::to_string(c.imag()) + " at " + key.str());
    ActionKey ak;
    ak.l = key.j;
    ak.tau = key.tau;
    ak.hbar = key.hbar;
    out.add_term(ak, c.real());
  }
  return out;
}

std::map<ActionKey, cplx> diagonal_to_action_complex(const PhasePoly& f) {
  std::map<ActionKey, cplx> out;
  for (const auto& [key, c] : f.terms()) {
    if (!key.resonant()) continue;
    ActionKey ak;
    ak.l = key.j;
    ak.tau = key.tau;
    ak.hbar = key.hbar;
    out[ak] += c;
  }
  return out;
}

PhasePoly action_to_phase(const ActionPoly& h) {
  PhasePoly out(h.dof());
  for (const auto& [key, c] : h.terms()) {
    MonomialKey mk(h.dof());
    mk.j = key.l;
    mk.k = key.l;
    mk.tau = key.tau;
    mk.hbar = key.hbar;
    out.add_term(mk, c);
  }
  return out;
}

}  // namespace hamrec
