#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "bnclass/brill_noether.hpp"
#include "bnclass/picard.hpp"
#include "bnclass/rational.hpp"

namespace bnclass::testing {

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline DownClass down(int g, int k, const std::vector<std::string>& coeffs) {
  std::vector<Rational> q;
  for (const auto& c : coeffs) q.push_back(Q(c));
  return DownClass::from_coefficients(g, k, q);
}

inline BNData datum(int g, int d, std::vector<int> a) { return BNData{g, d, VanishingSequence(std::move(a))}; }

struct FrozenDatum {
  int g;
  int d;
  std::vector<int> a;
  std::string n;
  std::string mu;
  std::string nu;
  std::vector<std::string> cls;  // k = 1
};

// Hand-rolled generators; every suite seeds its own engine so runs are reproducible.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_abs_num = 50, int max_den = 12) {
    Rational q(integer(-max_abs_num, max_abs_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational rational_in(const Rational& lo, const Rational& hi, int den = 97) {
    Rational t(integer(0, den), den);
    t.canonicalize();
    return lo + (hi - lo) * t;
  }

  UpClass up_class(int g, int k) {
    UpClass c = UpClass::zero(g, k);
    c.eta = rational();
    c.lambda = rational();
    c.psi = rational();
    for (auto& x : c.delta) x = rational();
    return c;
  }

  DownClass down_class(int g, int k) {
    DownClass c = DownClass::zero(g, k);
    c.eta = rational();
    c.lambda = rational();
    for (auto& x : c.delta) x = rational();
    return c;
  }

  /// Random strictly increasing sequence of length r+1 inside [0, top].
  std::vector<int> sequence(int r, int top) {
    std::vector<int> pool(static_cast<std::size_t>(top + 1));
    for (int i = 0; i <= top; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng_);
    std::vector<int> out(pool.begin(), pool.begin() + r + 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace bnclass::testing
