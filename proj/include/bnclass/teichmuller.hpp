#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bnclass/rational.hpp"

namespace bnclass {

/// Teichmuller curve invariants. k = 1 needs the Lyapunov sum L; k = 2 needs
/// the area Siegel-Veech constant.
struct TeichCurve {
  int k = 1;
  int g = 2;
  Rational chi;
  std::optional<Rational> lyapunov_sum;
  std::optional<Rational> c_sv;

  /// Throws Error(InvalidInput) or Error(MissingParameter).
  void validate() const;

  /// c_SV; for k = 1 derived as L - (g-1)/4 unless given explicitly.
  Rational siegel_veech() const;
};

/// Ample class eta, lambda, psi, delta_0 .. delta_{g-1} coefficients.
struct AmpleVector {
  Rational c_eta;
  Rational c_lambda;
  Rational c_psi;
  std::vector<Rational> c_delta;

  /// Parses (c_eta, c_lambda, c_psi, c_0, ..., c_{g-1}); length must be g + 3.
  static AmpleVector from_list(int g, std::span<const Rational> values);
  Rational max_delta() const;
};

/// Intersection numbers of a curve with the generators. For k = 1 `boundary`
/// is the delta_0 degree (all other delta_i vanish); for k = 2 it is the total
/// boundary delta.
struct IntersectionTable {
  int k = 1;
  Rational lambda;
  Rational boundary;
  Rational psi;
  Rational eta;
  Rational incidence;  // C . (k psi - eta)
};

/// Throws Error(InvariantViolation) if k psi - eta disagrees with the closed
/// form chi/4 (k = 1) or chi/3 (k = 2).
IntersectionTable intersections(const TeichCurve& tc);

/// C.psi == 2 (C.lambda - C.delta_0/12)/(g-1). Requires k = 1.
bool consistency_psi(const TeichCurve& tc);

/// Per-curve value of d solving C . (incidence + d A) = 0.
Rational threshold_d(const TeichCurve& tc, const AmpleVector& ample);

struct ThresholdSummary {
  Rational infimum;
  bool positive = false;
  /// k = 1 only: the per-curve expression at L = 0 and L = g (nullopt if the
  /// denominator vanishes there).
  std::optional<Rational> at_l_zero;
  std::optional<Rational> at_l_genus;
  bool extremes_positive = false;
};

/// Minimum of per-curve thresholds over a nonempty list with uniform (k, g).
ThresholdSummary infimum_threshold(std::span<const TeichCurve> curves, const AmpleVector& ample);

}  // namespace bnclass
