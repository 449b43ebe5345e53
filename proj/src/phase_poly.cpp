#include "hamrec/phase_poly.hpp"

#include <algorithm>
#include <cmath>

namespace hamrec {

namespace {

constexpr double kAbsFloor = 1e-300;

// falling factorial e (e-1) ... (e-c+1)
double falling(int e, int c) {
  double v = 1.0;
  for (int r = 0; r < c; ++r) v *= static_cast<double>(e - r);
  return v;
}

double factorial(int c) {
  double v = 1.0;
  for (int r = 2; r <= c; ++r) v *= r;
  return v;
}

}  // namespace

PhasePoly PhasePoly::constant(int dof, cplx c) {
  PhasePoly p(dof);
  if (c != cplx(0)) p.terms_[MonomialKey(dof)] = c;
  return p;
}

PhasePoly PhasePoly::monomial(MonomialKey key, cplx c) {
  PhasePoly p(key.dof());
  if (c != cplx(0)) p.terms_[std::move(key)] = c;
  return p;
}

PhasePoly PhasePoly::z(int dof, int i) {
  MonomialKey key(dof);
  key.j.at(i) = 1;
  return monomial(key, 1.0);
}

PhasePoly PhasePoly::zbar(int dof, int i) {
  MonomialKey key(dof);
  key.k.at(i) = 1;
  return monomial(key, 1.0);
}

PhasePoly PhasePoly::tau(int dof) {
  MonomialKey key(dof);
  key.tau = 1;
  return monomial(key, 1.0);
}

PhasePoly PhasePoly::hbar(int dof) {
  MonomialKey key(dof);
  key.hbar = 1;
  return monomial(key, 1.0);
}

PhasePoly PhasePoly::fourier(int dof, int d) {
  MonomialKey key(dof);
  key.fourier = d;
  return monomial(key, 1.0);
}

PhasePoly PhasePoly::x(int dof, int i) {
  const double s = 1.0 / std::sqrt(2.0);
  PhasePoly p = z(dof, i) * cplx(s) + zbar(dof, i) * cplx(s);
  return p;
}

PhasePoly PhasePoly::xi(int dof, int i) {
  const cplx s = cplx(0, -1.0 / std::sqrt(2.0));
  return z(dof, i) * s - zbar(dof, i) * s;
}

void PhasePoly::set_coeff(const MonomialKey& key, cplx c) {
  if (key.dof() != dof_) throw DimensionError("key dof mismatch");
  if (c == cplx(0))
    terms_.erase(key);
  else
    terms_[key] = c;
}

void PhasePoly::add_term(const MonomialKey& key, cplx c) {
  if (key.dof() != dof_) throw DimensionError("key dof mismatch");
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (std::abs(it->second) < kAbsFloor) terms_.erase(it);
  }
}

double PhasePoly::max_abs_coeff() const {
  double m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

int PhasePoly::min_grade() const {
  int g = -1;
  for (const auto& [key, c] : terms_) {
    int r = key.grade();
    if (g < 0 || r < g) g = r;
  }
  return g;
}

int PhasePoly::max_grade() const {
  int g = -1;
  for (const auto& [key, c] : terms_) g = std::max(g, key.grade());
  return g;
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& g) {
  check_same_dof(g);
  for (const auto& [key, c] : g.terms_) add_term(key, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& g) {
  check_same_dof(g);
  for (const auto& [key, c] : g.terms_) add_term(key, -c);
  return *this;
}

PhasePoly& PhasePoly::operator*=(cplx c) {
  if (c == cplx(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

PhasePoly PhasePoly::graded_part(int r) const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (key.grade() == r) out.terms_.emplace(key, c);
  return out;
}

PhasePoly PhasePoly::graded_at_most(int r) const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (key.grade() <= r) out.terms_.emplace(key, c);
  return out;
}

PhasePoly PhasePoly::hbar_slice(int p) const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (key.hbar == p) out.terms_.emplace(key, c);
  return out;
}

PhasePoly PhasePoly::diagonal_part() const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (key.resonant()) out.terms_.emplace(key, c);
  return out;
}

PhasePoly PhasePoly::offdiagonal_part() const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_)
    if (!key.resonant()) out.terms_.emplace(key, c);
  return out;
}

PhasePoly PhasePoly::truncated(const Caps& caps, TruncationReport* rep) const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_) {
    if (key.grade() > caps.order || std::abs(key.fourier) > caps.band) {
      if (rep) rep->note(std::abs(c));
      continue;
    }
    out.terms_.emplace(key, c);
  }
  return out;
}

PhasePoly PhasePoly::conj_symbol() const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_) {
    MonomialKey ck = key;
    std::swap(ck.j, ck.k);
    ck.fourier = -ck.fourier;
    out.add_term(ck, std::conj(c));
  }
  return out;
}

bool PhasePoly::is_real_symbol(double tol) const {
  PhasePoly diff = *this - conj_symbol();
  double scale = std::max(1.0, max_abs_coeff());
  return diff.max_abs_coeff() <= tol * scale;
}

void PhasePoly::prune(double rel_tol) {
  std::map<int, double> grade_max;
  for (const auto& [key, c] : terms_) {
    double& m = grade_max[key.grade()];
    m = std::max(m, std::abs(c));
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    double m = grade_max[it->first.grade()];
    if (std::abs(it->second) < rel_tol * m || std::abs(it->second) < kAbsFloor)
      it = terms_.erase(it);
    else
      ++it;
  }
}

cplx PhasePoly::eval(const std::vector<double>& x, const std::vector<double>& xi,
                     double t, double tau_val, double hbar_val) const {
  if (static_cast<int>(x.size()) != dof_ || static_cast<int>(xi.size()) != dof_)
    throw DimensionError("eval point dof mismatch");
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> zv(dof_), zbv(dof_);
  for (int i = 0; i < dof_; ++i) {
    zv[i] = cplx(x[i], xi[i]) * s;
    zbv[i] = std::conj(zv[i]);
  }
  cplx total = 0;
  for (const auto& [key, c] : terms_) {
    cplx v = c;
    for (int i = 0; i < dof_; ++i) {
      for (int e = 0; e < key.j[i]; ++e) v *= zv[i];
      for (int e = 0; e < key.k[i]; ++e) v *= zbv[i];
    }
    for (int e = 0; e < key.tau; ++e) v *= tau_val;
    for (int e = 0; e < key.hbar; ++e) v *= hbar_val;
    if (key.fourier != 0) v *= std::exp(cplx(0, kTwoPi * key.fourier * t));
    total += v;
  }
  return total;
}

PhasePoly PhasePoly::d_z(int i) const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_) {
    if (key.j[i] == 0) continue;
    MonomialKey dk = key;
    dk.j[i] -= 1;
    out.add_term(dk, c * static_cast<double>(key.j[i]));
  }
  return out;
}

PhasePoly PhasePoly::d_zbar(int i) const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_) {
    if (key.k[i] == 0) continue;
    MonomialKey dk = key;
    dk.k[i] -= 1;
    out.add_term(dk, c * static_cast<double>(key.k[i]));
  }
  return out;
}

PhasePoly PhasePoly::d_tau() const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_) {
    if (key.tau == 0) continue;
    MonomialKey dk = key;
    dk.tau -= 1;
    out.add_term(dk, c * static_cast<double>(key.tau));
  }
  return out;
}

PhasePoly PhasePoly::d_t() const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_) {
    if (key.fourier == 0) continue;
    out.add_term(key, c * cplx(0, kTwoPi * key.fourier));
  }
  return out;
}

PhasePoly PhasePoly::mul_hbar(int p) const {
  PhasePoly out(dof_);
  for (const auto& [key, c] : terms_) {
    MonomialKey mk = key;
    mk.hbar += p;
    out.terms_.emplace(mk, c);
  }
  return out;
}

PhasePoly mul(const PhasePoly& f, const PhasePoly& g, const Caps& caps,
              TruncationReport* rep) {
  f.check_same_dof(g);
  const int n = f.dof();
  PhasePoly out(n);
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      MonomialKey key(n);
      key.hbar = kf.hbar + kg.hbar;
      key.tau = kf.tau + kg.tau;
      key.fourier = kf.fourier + kg.fourier;
      for (int i = 0; i < n; ++i) {
        key.j[i] = kf.j[i] + kg.j[i];
        key.k[i] = kf.k[i] + kg.k[i];
      }
      cplx c = cf * cg;
      if (key.grade() > caps.order || std::abs(key.fourier) > caps.band) {
        if (rep) rep->note(std::abs(c));
        continue;
      }
      out.add_term(key, c);
    }
  }
  out.prune();
  return out;
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g,
                          const Caps& caps, TruncationReport* rep) {
  f.check_same_dof(g);
  const int n = f.dof();
  PhasePoly out(n);
  const cplx mi(0, -1);
  for (int i = 0; i < n; ++i) {
    out += mi * mul(f.d_z(i), g.d_zbar(i), caps, rep);
    out -= mi * mul(f.d_zbar(i), g.d_z(i), caps, rep);
  }
  out += mul(f.d_t(), g.d_tau(), caps, rep);
  out -= mul(f.d_tau(), g.d_t(), caps, rep);
  out.prune();
  return out;
}

PhasePoly star_product(const PhasePoly& f, const PhasePoly& g, const Caps& caps,
                       TruncationReport* rep) {
  f.check_same_dof(g);
  const int n = f.dof();
  PhasePoly out(n);

  std::vector<int> a(n), b(n);
  // Enumerate the bidifferential expansion of exp applied to one term pair:
  // a_i counts d_z on f paired with d_zbar on g, b_i the reverse, s counts
  // d_tau on f / d_t on g, r the reverse.
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      // bounds for a and b given the two keys
      std::vector<int> amax(n), bmax(n);
      for (int i = 0; i < n; ++i) {
        amax[i] = std::min(kf.j[i], kg.k[i]);
        bmax[i] = std::min(kf.k[i], kg.j[i]);
      }
      const int smax = kf.tau;  // tau derivatives on f
      const int rmax = kg.tau;  // tau derivatives on g

      std::fill(a.begin(), a.end(), 0);
      std::fill(b.begin(), b.end(), 0);
      // flat enumeration over (a, b, r, s)
      while (true) {
        for (int s = 0; s <= smax; ++s) {
          for (int r = 0; r <= rmax; ++r) {
            int absum = 0;
            double comb = 1.0;
            for (int i = 0; i < n; ++i) {
              absum += a[i] + b[i];
              comb *= falling(kf.j[i], a[i]) * falling(kg.k[i], a[i]) /
                      factorial(a[i]);
              comb *= falling(kf.k[i], b[i]) * falling(kg.j[i], b[i]) /
                      factorial(b[i]);
            }
            comb *= falling(kf.tau, s) * falling(kg.tau, r) /
                    (factorial(s) * factorial(r));
            if (comb == 0.0) continue;

            int bsum = 0;
            for (int i = 0; i < n; ++i) bsum += b[i];

            cplx c = cf * cg * comb;
            c *= std::pow(0.5, absum);
            if (bsum % 2) c = -c;
            // (i/2)^{r+s} (-1)^s, with t-derivatives contributing the
            // Fourier factors (i 2 pi d)^{count}
            c *= std::pow(cplx(0, 0.5), r + s);
            if (s % 2) c = -c;
            for (int q = 0; q < r; ++q) c *= cplx(0, kTwoPi * kf.fourier);
            for (int q = 0; q < s; ++q) c *= cplx(0, kTwoPi * kg.fourier);
            if (c == cplx(0)) continue;

            MonomialKey key(n);
            key.hbar = kf.hbar + kg.hbar + absum + r + s;
            key.tau = (kf.tau - s) + (kg.tau - r);
            key.fourier = kf.fourier + kg.fourier;
            for (int i = 0; i < n; ++i) {
              key.j[i] = (kf.j[i] - a[i]) + (kg.j[i] - b[i]);
              key.k[i] = (kf.k[i] - b[i]) + (kg.k[i] - a[i]);
            }
            if (key.grade() > caps.order || std::abs(key.fourier) > caps.band) {
              if (rep) rep->note(std::abs(c));
              continue;
            }
            out.add_term(key, c);
          }
        }
        // odometer increment over (a, b)
        int pos = 0;
        for (; pos < 2 * n; ++pos) {
          if (pos < n) {
            if (a[pos] < amax[pos]) {
              ++a[pos];
              break;
            }
            a[pos] = 0;
          } else {
            int i = pos - n;
            if (b[i] < bmax[i]) {
              ++b[i];
              break;
            }
            b[i] = 0;
          }
        }
        if (pos == 2 * n) break;
      }
    }
  }
  out.prune();
  return out;
}

PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, const Caps& caps,
                        TruncationReport* rep) {
  // Raise the cap: the commutator carries at least one extra hbar before the
  // division, so intermediate grades run two above the requested cap.
  Caps inner{caps.order + 2, caps.band};
  PhasePoly comm = star_product(f, g, inner, rep) - star_product(g, f, inner, rep);
  PhasePoly out(f.dof());
  for (const auto& [key, c] : comm.terms()) {
    if (key.hbar < 1)
      throw std::logic_error("moyal commutator term without hbar factor");
    MonomialKey dk = key;
    dk.hbar -= 1;
    out.add_term(dk, c * cplx(0, -1));  // divide by i
  }
  out = out.truncated(caps, rep);
  out.prune();
  return out;
}

}  // namespace hamrec
