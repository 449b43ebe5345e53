#pragma once

#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hamrec/types.hpp"

namespace hamrec {

/// Exponent key of one phase-space monomial
///   hbar^p  z^j  zbar^k  tau^m  e^{i 2 pi d t}.
/// The total grade 2p + |j| + |k| + 2m is the grading used everywhere.
struct MonomialKey {
  int hbar = 0;
  std::vector<int> j;  // z exponents, one per degree of freedom
  std::vector<int> k;  // zbar exponents
  int tau = 0;
  int fourier = 0;     // d

  MonomialKey() = default;
  explicit MonomialKey(int dof) : j(dof, 0), k(dof, 0) {}

  int dof() const { return static_cast<int>(j.size()); }

  int grade() const {
    int s = 2 * hbar + 2 * tau;
    for (int e : j) s += e;
    for (int e : k) s += e;
    return s;
  }

  bool resonant() const { return j == k && fourier == 0; }

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;

  // Canonical ordering (p, j, k, m, d); map iteration order doubles as the
  // serialization order.
  friend bool operator<(const MonomialKey& a, const MonomialKey& b) {
    if (a.hbar != b.hbar) return a.hbar < b.hbar;
    if (a.j != b.j) return a.j < b.j;
    if (a.k != b.k) return a.k < b.k;
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.fourier < b.fourier;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(p=" << hbar << ",j=[";
    for (size_t i = 0; i < j.size(); ++i) os << (i ? "," : "") << j[i];
    os << "],k=[";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << "],m=" << tau << ",d=" << fourier << ")";
    return os.str();
  }
};

inline int grade(const MonomialKey& key) { return key.grade(); }

/// Key of an action-space monomial A^l tau^s hbar^p.
struct ActionKey {
  std::vector<int> l;
  int tau = 0;
  int hbar = 0;

  ActionKey() = default;
  explicit ActionKey(int dof) : l(dof, 0) {}

  int grade() const {
    int s = 2 * tau + 2 * hbar;
    for (int e : l) s += 2 * e;
    return s;
  }

  friend bool operator==(const ActionKey&, const ActionKey&) = default;
  friend bool operator<(const ActionKey& a, const ActionKey& b) {
    if (a.hbar != b.hbar) return a.hbar < b.hbar;
    if (a.l != b.l) return a.l < b.l;
    return a.tau < b.tau;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(l=[";
    for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << "],s=" << tau << ",p=" << hbar << ")";
    return os.str();
  }
};

/// Joint eigenstate label of (P_1..P_n, D_t): P_i -> (mu_i + 1/2) hbar,
/// D_t -> 2 pi nu hbar.
struct FockState {
  std::vector<int> mu;
  int nu = 0;
  double hbar = 1.0;

  FockState(std::vector<int> mu_, int nu_, double hbar_)
      : mu(std::move(mu_)), nu(nu_), hbar(hbar_) {
    if (hbar <= 0) throw DimensionError("FockState requires hbar > 0");
    for (int m : mu)
      if (m < 0) throw DimensionError("FockState requires mu >= 0");
  }
};

}  // namespace hamrec
