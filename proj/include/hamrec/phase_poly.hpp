#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hamrec/monomial.hpp"
#include "hamrec/types.hpp"

namespace hamrec {

/// Sparse graded polynomial in (z, zbar, tau, hbar) with trigonometric
/// dependence on the loop angle t through integer Fourier modes.
///
/// This is the symbol class underlying the whole engine: classical
/// observables, total Weyl symbols and generating functions all live here.
/// Values are immutable in spirit; all operations below are pure.
class PhasePoly {
 public:
  using TermMap = std::map<MonomialKey, cplx>;

  PhasePoly() : dof_(0) {}
  explicit PhasePoly(int dof) : dof_(dof) {
    if (dof < 0) throw DimensionError("negative dof");
  }

  int dof() const { return dof_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // --- factories -----------------------------------------------------------

  static PhasePoly zero(int dof) { return PhasePoly(dof); }
  static PhasePoly constant(int dof, cplx c);
  static PhasePoly z(int dof, int i);
  static PhasePoly zbar(int dof, int i);
  static PhasePoly tau(int dof);
  static PhasePoly hbar(int dof);
  static PhasePoly fourier(int dof, int d);          // e^{i 2 pi d t}
  static PhasePoly x(int dof, int i);                // (z + zbar)/sqrt(2)
  static PhasePoly xi(int dof, int i);               // (z - zbar)/(i sqrt 2)
  static PhasePoly monomial(MonomialKey key, cplx c);

  // --- term access ---------------------------------------------------------

  cplx coeff(const MonomialKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? cplx(0) : it->second;
  }

  void set_coeff(const MonomialKey& key, cplx c);
  void add_term(const MonomialKey& key, cplx c);

  double max_abs_coeff() const;
  int min_grade() const;  // grade of the lowest-grade term; -1 when empty
  int max_grade() const;

  // --- arithmetic ----------------------------------------------------------

  PhasePoly& operator+=(const PhasePoly& g);
  PhasePoly& operator-=(const PhasePoly& g);
  PhasePoly& operator*=(cplx c);
  friend PhasePoly operator+(PhasePoly f, const PhasePoly& g) { return f += g; }
  friend PhasePoly operator-(PhasePoly f, const PhasePoly& g) { return f -= g; }
  friend PhasePoly operator*(PhasePoly f, cplx c) { return f *= c; }
  friend PhasePoly operator*(cplx c, PhasePoly f) { return f *= c; }

  // --- structure -----------------------------------------------------------

  PhasePoly graded_part(int r) const;
  PhasePoly graded_at_most(int r) const;
  PhasePoly hbar_slice(int p) const;               // terms with hbar power p
  PhasePoly diagonal_part() const;                 // keys with j == k, d == 0
  PhasePoly offdiagonal_part() const;
  PhasePoly truncated(const Caps& caps, TruncationReport* rep = nullptr) const;

  /// Complex conjugate of the symbol as a function of real phase space:
  /// (p,j,k,m,d) -> (p,k,j,m,-d) with conjugated coefficient.
  PhasePoly conj_symbol() const;
  bool is_real_symbol(double tol = 1e-10) const;

  /// Drop terms small relative to the largest coefficient of the same grade.
  void prune(double rel_tol = kZeroTol);

  /// Numeric evaluation (hbar substituted as well); for tests and Hessians.
  cplx eval(const std::vector<double>& x, const std::vector<double>& xi,
            double t = 0.0, double tau_val = 0.0, double hbar_val = 0.0) const;

  /// Partial derivatives as symbol operations.
  PhasePoly d_z(int i) const;
  PhasePoly d_zbar(int i) const;
  PhasePoly d_tau() const;
  PhasePoly d_t() const;    // each Fourier mode d multiplies by i 2 pi d
  PhasePoly mul_hbar(int p = 1) const;

  void check_same_dof(const PhasePoly& g) const {
    if (dof_ != g.dof_) throw DimensionError("dof mismatch");
  }

 private:
  int dof_;
  TermMap terms_;
};

/// Commutative symbol product truncated at caps.
PhasePoly mul(const PhasePoly& f, const PhasePoly& g, const Caps& caps,
              TruncationReport* rep = nullptr);

/// Poisson bracket on the cylinder in complex coordinates,
///   {f,g} = -i sum_i (d_z f d_zbar g - d_zbar f d_z g)
///           + d_t f d_tau g - d_tau f d_t g.
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g,
                          const Caps& caps, TruncationReport* rep = nullptr);

/// Weyl star product (finite on this polynomial class), with explicit formal
/// hbar powers in the keys.
PhasePoly star_product(const PhasePoly& f, const PhasePoly& g, const Caps& caps,
                       TruncationReport* rep = nullptr);

/// Moyal bracket: exact Weyl-symbol commutator divided by i hbar. The
/// hbar-power-0 part coincides with the Poisson bracket.
PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, const Caps& caps,
                        TruncationReport* rep = nullptr);

inline PhasePoly bracket(Mode mode, const PhasePoly& f, const PhasePoly& g,
                         const Caps& caps, TruncationReport* rep = nullptr) {
  return mode == Mode::Classical ? poisson_bracket(f, g, caps, rep)
                                 : moyal_bracket(f, g, caps, rep);
}

}  // namespace hamrec
