#include "bnclass/teichmuller.hpp"

#include <algorithm>
#include <string>

#include "bnclass/error.hpp"

namespace bnclass {

void TeichCurve::validate() const {
  if (k != 1 && k != 2) {
    throw Error(ErrorCode::InvalidInput, "Teichmuller curves are supported for k in {1, 2}");
  }
  if (g < 2) {
    throw Error(ErrorCode::InvalidInput, "genus must be at least 2");
  }
  if (k == 1) {
    if (!lyapunov_sum) {
      throw Error(ErrorCode::MissingParameter, "k = 1 needs the Lyapunov sum L");
    }
    if (*lyapunov_sum < 0 || *lyapunov_sum > g) {
      throw Error(ErrorCode::InvalidInput, "Lyapunov sum must satisfy 0 <= L <= g");
    }
  } else if (!c_sv) {
    throw Error(ErrorCode::MissingParameter, "k = 2 needs the Siegel-Veech constant c_sv");
  }
}

Rational TeichCurve::siegel_veech() const {
  if (c_sv) {
    return *c_sv;
  }
  if (k == 1 && lyapunov_sum) {
    return *lyapunov_sum - make_rational(g - 1, 4);
  }
  throw Error(ErrorCode::MissingParameter, "no Siegel-Veech constant available");
}

AmpleVector AmpleVector::from_list(int g, std::span<const Rational> values) {
  if (values.size() != static_cast<std::size_t>(g) + 3) {
    throw Error(ErrorCode::InvalidInput, "ample vector needs g + 3 = " + std::to_string(g + 3) +
                                             " entries (eta, lambda, psi, delta_0..delta_{g-1})");
  }
  AmpleVector out;
  out.c_eta = values[0];
  out.c_lambda = values[1];
  out.c_psi = values[2];
  out.c_delta.assign(values.begin() + 3, values.end());
  return out;
}

Rational AmpleVector::max_delta() const {
  if (c_delta.empty()) {
    throw Error(ErrorCode::InvalidInput, "ample vector has no boundary coefficients");
  }
  return *std::max_element(c_delta.begin(), c_delta.end());
}

IntersectionTable intersections(const TeichCurve& tc) {
  tc.validate();
  const Rational& chi = tc.chi;
  const int g = tc.g;
  IntersectionTable t;
  t.k = tc.k;
  Rational closed_form;
  if (tc.k == 1) {
    const Rational& L = *tc.lyapunov_sum;
    t.lambda = -chi * L / 2;
    t.boundary = -make_rational(3, 2) * chi * (4 * L - g + 1);
    t.psi = -chi / 4;
    t.eta = -chi / 2;
    closed_form = chi / 4;
  } else {
    const Rational csv = *tc.c_sv;
    t.lambda = -chi / 36 * (18 * csv + 5 * (g - 1));
    t.boundary = -6 * chi * csv;
    t.psi = -chi / 3;
    t.eta = -chi;
    closed_form = chi / 3;
  }
  t.incidence = tc.k * t.psi - t.eta;
  if (t.incidence != closed_form) {
    throw Error(ErrorCode::InvariantViolation, "incidence degree disagrees with its closed form");
  }
  return t;
}

bool consistency_psi(const TeichCurve& tc) {
  if (tc.k != 1) {
    throw Error(ErrorCode::InvalidInput, "psi consistency check applies to k = 1");
  }
  const IntersectionTable t = intersections(tc);
  return t.psi == 2 * (t.lambda - t.boundary / 12) / (tc.g - 1);
}

namespace {

Rational threshold_denominator(int k, int g, const Rational& invariant, const AmpleVector& ample) {
  if (k == 1) {
    const Rational& L = invariant;
    const Rational& c0 = ample.c_delta.at(0);
    return 2 * ample.c_eta + ample.c_psi - 6 * (g - 1) * c0 + 2 * L * (ample.c_lambda + 12 * c0);
  }
  const Rational& csv = invariant;
  return 36 * ample.c_eta + 12 * ample.c_psi + 5 * (g - 1) * ample.c_lambda +
         csv * (18 * ample.c_lambda + 216 * ample.max_delta());
}

Rational threshold_from(int k, const Rational& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::ZeroDenominator, "threshold denominator vanishes");
  }
  return Rational(k == 1 ? 1 : 12) / denominator;
}

}  // namespace

Rational threshold_d(const TeichCurve& tc, const AmpleVector& ample) {
  tc.validate();
  if (ample.c_delta.size() != static_cast<std::size_t>(tc.g)) {
    throw Error(ErrorCode::InvalidInput, "ample vector genus does not match the curve");
  }
  const Rational invariant = tc.k == 1 ? *tc.lyapunov_sum : *tc.c_sv;
  return threshold_from(tc.k, threshold_denominator(tc.k, tc.g, invariant, ample));
}

ThresholdSummary infimum_threshold(std::span<const TeichCurve> curves, const AmpleVector& ample) {
  if (curves.empty()) {
    throw Error(ErrorCode::InvalidInput, "curve list is empty");
  }
  const int k = curves.front().k;
  const int g = curves.front().g;
  ThresholdSummary out;
  bool first = true;
  for (const auto& c : curves) {
    if (c.k != k || c.g != g) {
      throw Error(ErrorCode::InvalidInput, "curve list must share (k, g)");
    }
    Rational d = threshold_d(c, ample);
    if (first || d < out.infimum) {
      out.infimum = std::move(d);
    }
    first = false;
  }
  out.positive = out.infimum > 0;
  if (k == 1) {
    const auto at = [&](const Rational& L) -> std::optional<Rational> {
      const Rational den = threshold_denominator(1, g, L, ample);
      if (den == 0) return std::nullopt;
      return threshold_from(1, den);
    };
    out.at_l_zero = at(Rational(0));
    out.at_l_genus = at(Rational(g));
    out.extremes_positive = out.at_l_zero && out.at_l_genus && *out.at_l_zero > 0 && *out.at_l_genus > 0;
  }
  return out;
}

}  // namespace bnclass
