#include "bnclass/divisor_classes.hpp"

#include "bnclass/error.hpp"

namespace bnclass {

namespace {

void require_k(int k) {
  if (k < 1) {
    throw Error(ErrorCode::InvalidInput, "k must be at least 1");
  }
}

}  // namespace

MuNu resolve_mu_nu(const BNData& data) {
  data.validate();
  if (data.g == 2) {
    if (is_weierstrass_data(data)) {
      return MuNu{0, 1};
    }
    throw Error(ErrorCode::Unsupported, "mu and nu are undefined at g = 2 away from the Weierstrass datum");
  }
  return mu_nu(data);
}

DownClass weierstrass_k_class(int g, int k) {
  if (g < 2) {
    throw Error(ErrorCode::InvalidInput, "genus must be at least 2");
  }
  require_k(k);
  DownClass c = DownClass::zero(g, k);
  c.eta = -g * (g * g - 1);
  c.lambda = k * (6 * g * g + 4 * g + 2);
  c.delta[0] = -k * (g * (g + 1) / 2);
  for (int i = 1; i <= g / 2; ++i) {
    c.delta[i] = -k * (g + 3) * i * (g - i);
  }
  return c;
}

DownClass bn_k_class_direct(const BNData& data, int k) {
  require_k(k);
  const MuNu mn = resolve_mu_nu(data);
  const int g = data.g;
  const Rational& mu = mn.mu;
  const Rational& nu = mn.nu;
  DownClass c = DownClass::zero(g, k);
  c.eta = -g * (g * g - 1) * nu;
  c.lambda = 2 * (g - 1) * (g + 3) * k * mu + 2 * (3 * g * g + 2 * g + 1) * k * nu;
  // Stored signed: the closed form subtracts c_i delta_i.
  c.delta[0] = -(make_rational(g * g - 1, 3) * k * mu + make_rational(g * (g + 1), 2) * k * nu);
  for (int i = 1; i <= g / 2; ++i) {
    c.delta[i] = -(2 * i * (g - i) * (g - 1) * k * mu + i * (g - i) * (g + 3) * k * nu);
  }
  return c;
}

DownClass bn_k_class_pushforward(const BNData& data, int k) {
  require_k(k);
  const MuNu mn = resolve_mu_nu(data);
  const int g = data.g;
  const UpClass pointed = mn.mu * brill_noether_pointed_class(g, k) + mn.nu * weierstrass_pointed_class(g, k);
  return pushforward_product(incidence_class(g, k), pointed);
}

ConeCoefficients cone_decomposition(const BNData& data, int k) {
  require_k(k);
  const MuNu mn = resolve_mu_nu(data);
  const int g = data.g;
  ConeCoefficients out{2 * k * (g - 1) * mn.mu, mn.nu};
  const DownClass combined =
      out.bn * downstairs_bn_pullback(g, k) + out.weierstrass * weierstrass_k_class(g, k);
  if (!(combined == bn_k_class_direct(data, k))) {
    throw Error(ErrorCode::InvariantViolation, "cone combination does not reproduce the closed-form class");
  }
  return out;
}

DownClass h22_combined_strata() {
  DownClass c = DownClass::zero(2, 2);
  c.eta = -10;
  c.lambda = 72;
  c.delta[0] = -6;
  c.delta[1] = -6;
  return c;
}

DownClass stratum_h22() {
  const DownClass twice = h22_combined_strata() - weierstrass_k_class(2, 2);
  for (const Rational& x : twice.coefficients()) {
    if (!is_integer(x) || x.get_num() % 2 != 0) {
      throw Error(ErrorCode::InvariantViolation, "stratum class does not halve exactly");
    }
  }
  DownClass out = make_rational(1, 2) * twice;
  DownClass expected = DownClass::zero(2, 2);
  expected.eta = -2;
  expected.lambda = 12;
  expected.delta[0] = -1;
  if (!classes_equal(out, expected)) {
    throw Error(ErrorCode::InvariantViolation, "stratum class disagrees with -2 eta + 12 lambda - delta_0");
  }
  return out;
}

}  // namespace bnclass
