#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamrec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Relative pruning threshold: coefficients below kZeroTol times the largest
// coefficient of the same grade are dropped.
inline constexpr double kZeroTol = 1e-12;

enum class Setting { Well, Periodic, Schrodinger };
enum class Mode { Classical, Quantum };

inline const char* to_string(Setting s) {
  switch (s) {
    case Setting::Well: return "well";
    case Setting::Periodic: return "periodic";
    case Setting::Schrodinger: return "schrodinger";
  }
  return "?";
}

inline const char* to_string(Mode m) {
  return m == Mode::Classical ? "classical" : "quantum";
}

// Truncation parameters for one computation: total grade cap and Fourier band.
struct Caps {
  int order = 8;
  int band = 0;
};

// Tally of terms silently discarded by grade/band truncation.
struct TruncationReport {
  std::uint64_t dropped_terms = 0;
  double dropped_mass = 0.0;

  void note(double magnitude) {
    ++dropped_terms;
    dropped_mass += magnitude;
  }
  void absorb(const TruncationReport& other) {
    dropped_terms += other.dropped_terms;
    dropped_mass += other.dropped_mass;
  }
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SmallDivisorError : std::runtime_error {
  std::string key_description;
  double magnitude;
  SmallDivisorError(std::string key_desc, double mag)
      : std::runtime_error("small divisor " + std::to_string(mag) + " at key " + key_desc),
        key_description(std::move(key_desc)),
        magnitude(mag) {}
};

struct RankDeficiencyError : std::runtime_error {
  std::string detail;
  explicit RankDeficiencyError(std::string d)
      : std::runtime_error("rank-deficient response system: " + d), detail(std::move(d)) {}
};

struct InfeasibleInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResidualError : std::runtime_error {
  double residual;
  ResidualError(std::string what, double r)
      : std::runtime_error(std::move(what)), residual(r) {}
};

}  // namespace hamrec
