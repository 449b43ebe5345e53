#pragma once

#include <map>

#include "hamrec/phase_poly.hpp"

namespace hamrec {

/// Real polynomial in the action variables A (plus tau and hbar); the home of
/// normal forms and angle-averaged observables. Corresponds to the diagonal
/// sub-polynomial j = k, d = 0 of a PhasePoly under (z zbar)^l -> A^l.
class ActionPoly {
 public:
  using TermMap = std::map<ActionKey, double>;

  ActionPoly() : dof_(0) {}
  explicit ActionPoly(int dof) : dof_(dof) {}

  int dof() const { return dof_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  double coeff(const ActionKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0.0 : it->second;
  }

  void add_term(const ActionKey& key, double c) {
    if (key.l.size() != static_cast<size_t>(dof_))
      throw DimensionError("action key dof mismatch");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) it->second += c;
    if (!inserted && std::abs(it->second) < 1e-300) terms_.erase(it);
  }

  ActionPoly& operator+=(const ActionPoly& g);
  ActionPoly& operator-=(const ActionPoly& g);
  ActionPoly& operator*=(double c);
  friend ActionPoly operator+(ActionPoly f, const ActionPoly& g) { return f += g; }
  friend ActionPoly operator-(ActionPoly f, const ActionPoly& g) { return f -= g; }
  friend ActionPoly operator*(ActionPoly f, double c) { return f *= c; }

  ActionPoly graded_part(int r) const;
  ActionPoly graded_at_most(int r) const;
  ActionPoly hbar_slice(int p) const;
  double max_abs_coeff() const;
  void prune(double rel_tol = kZeroTol);

  /// Evaluate at numeric actions (and tau, hbar).
  double eval(const std::vector<double>& actions, double tau_val = 0.0,
              double hbar_val = 0.0) const;

 private:
  int dof_;
  TermMap terms_;
};

/// Diagonal part of a PhasePoly as an ActionPoly: (p, j, j, m, 0) -> (j, m, p).
/// Throws when a kept coefficient has an imaginary part above tol; callers
/// pass the off-diagonal-free polys produced by averaging.
ActionPoly diagonal_to_action(const PhasePoly& f, double imag_tol = 1e-9);

/// Complex-coefficient variant used while assembling inversion data.
std::map<ActionKey, cplx> diagonal_to_action_complex(const PhasePoly& f);

/// Embed A^l tau^s hbar^p back as the diagonal monomial z^l zbar^l tau^s hbar^p.
PhasePoly action_to_phase(const ActionPoly& h);

}  // namespace hamrec
