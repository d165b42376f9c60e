#include "bnclass/picard.hpp"

#include <algorithm>
#include <string>

#include "bnclass/error.hpp"

namespace bnclass {

namespace {

void require_same_context(int g1, int k1, int g2, int k2) {
  if (g1 != g2 || k1 != k2) {
    throw Error(ErrorCode::ContextMismatch, "classes live over different (g, k): (" + std::to_string(g1) + "," +
                                                std::to_string(k1) + ") vs (" + std::to_string(g2) + "," +
                                                std::to_string(k2) + ")");
  }
}

void require_genus(int g) {
  if (g < 2) {
    throw Error(ErrorCode::InvalidInput, "genus must be at least 2");
  }
}

Rational binom2(int n) { return make_rational(Integer(n) * (n - 1), 2); }

// pi_*(psi * c) for every generator of c, psi^2 included.
DownClass push_psi_times(const UpClass& c) {
  const int g = c.g;
  DownClass out = DownClass::zero(g, c.k);
  const int half = g / 2;
  out.lambda += 12 * c.psi;  // kappa_1
  for (int i = 0; i <= half; ++i) {
    out.delta[i] -= c.psi;
  }
  out.lambda += (2 * g - 2) * c.lambda;
  out.eta += (2 * g - 2) * c.eta;
  out.delta[0] += (2 * g - 2) * c.delta[0];
  for (int j = 1; j < g; ++j) {
    const int folded = std::min(j, g - j);
    // The j <= g/2 and g-j <= g/2 rules coincide at j = g/2 and are summed.
    const int factor = (2 * j == g) ? 2 * g - 2 : 2 * j - 1;
    out.delta[folded] += factor * c.delta[j];
  }
  return out;
}

}  // namespace

DownClass DownClass::zero(int g, int k) {
  DownClass c;
  c.g = g;
  c.k = k;
  c.delta.assign(static_cast<std::size_t>(g / 2 + 1), Rational(0));
  return c;
}

std::vector<Rational> DownClass::coefficients() const {
  std::vector<Rational> out;
  out.reserve(generator_count());
  out.push_back(eta);
  out.push_back(lambda);
  out.insert(out.end(), delta.begin(), delta.end());
  return out;
}

DownClass DownClass::from_coefficients(int g, int k, const std::vector<Rational>& coeffs) {
  DownClass c = zero(g, k);
  if (coeffs.size() != c.generator_count()) {
    throw Error(ErrorCode::InvalidInput, "coefficient vector has the wrong length");
  }
  c.eta = coeffs[0];
  c.lambda = coeffs[1];
  std::copy(coeffs.begin() + 2, coeffs.end(), c.delta.begin());
  return c;
}

DownClass& DownClass::operator+=(const DownClass& o) {
  require_same_context(g, k, o.g, o.k);
  eta += o.eta;
  lambda += o.lambda;
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] += o.delta[i];
  return *this;
}

DownClass& DownClass::operator-=(const DownClass& o) {
  require_same_context(g, k, o.g, o.k);
  eta -= o.eta;
  lambda -= o.lambda;
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= o.delta[i];
  return *this;
}

DownClass& DownClass::operator*=(const Rational& s) {
  eta *= s;
  lambda *= s;
  for (auto& x : delta) x *= s;
  return *this;
}

UpClass UpClass::zero(int g, int k) {
  UpClass c;
  c.g = g;
  c.k = k;
  c.delta.assign(static_cast<std::size_t>(g), Rational(0));
  return c;
}

UpClass& UpClass::operator+=(const UpClass& o) {
  require_same_context(g, k, o.g, o.k);
  eta += o.eta;
  lambda += o.lambda;
  psi += o.psi;
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] += o.delta[i];
  return *this;
}

UpClass& UpClass::operator-=(const UpClass& o) {
  require_same_context(g, k, o.g, o.k);
  eta -= o.eta;
  lambda -= o.lambda;
  psi -= o.psi;
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= o.delta[i];
  return *this;
}

UpClass& UpClass::operator*=(const Rational& s) {
  eta *= s;
  lambda *= s;
  psi *= s;
  for (auto& x : delta) x *= s;
  return *this;
}

DownClass operator+(DownClass a, const DownClass& b) { return a += b; }
DownClass operator-(DownClass a, const DownClass& b) { return a -= b; }
DownClass operator*(const Rational& s, DownClass a) { return a *= s; }
UpClass operator+(UpClass a, const UpClass& b) { return a += b; }
UpClass operator-(UpClass a, const UpClass& b) { return a -= b; }
UpClass operator*(const Rational& s, UpClass a) { return a *= s; }

void validate(const DownClass& c) {
  require_genus(c.g);
  if (c.delta.size() != static_cast<std::size_t>(c.g / 2 + 1)) {
    throw Error(ErrorCode::InvalidInput, "unpointed class needs floor(g/2)+1 boundary coefficients");
  }
}

void validate(const UpClass& c) {
  require_genus(c.g);
  if (c.delta.size() != static_cast<std::size_t>(c.g)) {
    throw Error(ErrorCode::InvalidInput, "pointed class needs g boundary coefficients");
  }
}

UpClass weierstrass_pointed_class(int g, int k) {
  require_genus(g);
  UpClass c = UpClass::zero(g, k);
  c.psi = binom2(g + 1);
  c.lambda = -1;
  for (int i = 1; i < g; ++i) {
    c.delta[i] = -binom2(g - i + 1);
  }
  return c;
}

UpClass brill_noether_pointed_class(int g, int k) {
  require_genus(g);
  UpClass c = UpClass::zero(g, k);
  c.lambda = g + 3;
  c.delta[0] = -make_rational(g + 1, 6);
  for (int i = 1; i < g; ++i) {
    c.delta[i] = -i * (g - i);
  }
  return c;
}

UpClass incidence_class(int g, int k) {
  require_genus(g);
  if (k < 1) {
    throw Error(ErrorCode::InvalidInput, "k must be at least 1");
  }
  UpClass c = UpClass::zero(g, k);
  c.psi = k;
  c.eta = -1;
  return c;
}

DownClass downstairs_bn_pullback(int g, int k) {
  require_genus(g);
  DownClass c = DownClass::zero(g, k);
  c.lambda = g + 3;
  c.delta[0] = -make_rational(g + 1, 6);
  for (int i = 1; i <= g / 2; ++i) {
    c.delta[i] = -i * (g - i);
  }
  return c;
}

DownClass pushforward_product(const UpClass& c1, const UpClass& c2) {
  validate(c1);
  validate(c2);
  require_same_context(c1.g, c1.k, c2.g, c2.k);
  // Expand bilinearly: every surviving monomial contains psi. Terms psi*y come
  // from c1.psi * c2; terms x*psi with x != psi come from c2.psi * (c1 - psi part).
  UpClass rest = c1;
  rest.psi = 0;
  DownClass out = c1.psi * push_psi_times(c2);
  out += c2.psi * push_psi_times(rest);
  return out;
}

DownClass genus_two_relation(int k) {
  DownClass rel = DownClass::zero(2, k);
  rel.lambda = 10;
  rel.delta[0] = -1;
  rel.delta[1] = -2;
  return rel;
}

DownClass eliminate_delta1(const DownClass& c) {
  validate(c);
  if (c.g != 2) {
    throw Error(ErrorCode::InvalidInput, "delta_1 elimination only applies in genus 2");
  }
  const Rational t = c.delta[1] / 2;
  return c + t * genus_two_relation(c.k);
}

bool classes_equal(const DownClass& c1, const DownClass& c2) {
  validate(c1);
  validate(c2);
  require_same_context(c1.g, c1.k, c2.g, c2.k);
  if (c1.g != 2) {
    return c1 == c2;
  }
  const DownClass diff = c1 - c2;
  const Rational t = diff.lambda / 10;
  return diff.eta == 0 && diff.delta[0] == -t && diff.delta[1] == -2 * t;
}

}  // namespace bnclass
