#include "bnclass/brill_noether.hpp"

#include <numeric>
#include <string>

#include "bnclass/error.hpp"

namespace bnclass {

namespace {

bool strictly_increasing_nonnegative(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || (i > 0 && v[i - 1] >= v[i])) {
      return false;
    }
  }
  return true;
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Next strictly increasing sequence of length m in [0, top], lexicographically.
bool next_combination(std::vector<int>& c, int top) {
  const int m = static_cast<int>(c.size());
  for (int i = m - 1; i >= 0; --i) {
    if (c[i] < top - (m - 1 - i)) {
      ++c[i];
      for (int j = i + 1; j < m; ++j) {
        c[j] = c[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

VanishingSequence::VanishingSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!strictly_increasing_nonnegative(entries_)) {
    throw Error(ErrorCode::InvalidInput, "vanishing sequence must be nonnegative and strictly increasing");
  }
}

std::optional<VanishingSequence> VanishingSequence::try_make(std::vector<int> entries) {
  if (!strictly_increasing_nonnegative(entries)) {
    return std::nullopt;
  }
  return VanishingSequence(std::move(entries));
}

void BNData::validate() const {
  if (g < 2) {
    throw Error(ErrorCode::InvalidInput, "genus must be at least 2");
  }
  if (d < 1) {
    throw Error(ErrorCode::InvalidInput, "degree must be at least 1");
  }
  if (a.size() == 0) {
    throw Error(ErrorCode::InvalidInput, "vanishing sequence is empty");
  }
  if (a.back() > d) {
    throw Error(ErrorCode::InvalidInput, "vanishing order a_r exceeds the degree");
  }
}

int rho(int g, int r, int d, const VanishingSequence& a) {
  if (g < 0) {
    throw Error(ErrorCode::InvalidInput, "genus must be nonnegative");
  }
  if (a.size() == 0 || a.r() != r) {
    throw Error(ErrorCode::InvalidInput, "vanishing sequence length must be r+1");
  }
  if (a.back() > d) {
    throw Error(ErrorCode::InvalidInput, "vanishing order a_r exceeds the degree");
  }
  int excess = 0;
  for (int i = 0; i <= r; ++i) {
    excess += a[i] - i;
  }
  return g - (r + 1) * (g - d + r) - excess;
}

int rho(const BNData& data) { return rho(data.g, data.r(), data.d, data.a); }

std::optional<VanishingSequence> derived_sequence(const VanishingSequence& a, int i) {
  if (i < 0 || i > a.r()) {
    throw Error(ErrorCode::InvalidInput, "derived sequence index out of range");
  }
  std::vector<int> shifted = a.entries();
  for (int j = 0; j <= a.r(); ++j) {
    if (j != i) {
      ++shifted[j];
    }
  }
  return VanishingSequence::try_make(std::move(shifted));
}

Rational special_count_sum(int g, int d, std::span<const int> a) {
  if (g < 1) {
    throw Error(ErrorCode::InvalidInput, "genus must be at least 1");
  }
  const int r = static_cast<int>(a.size()) - 1;
  Rational sum = 0;
  std::vector<int> shifted(a.size());
  for (int k1 = 0; k1 <= r; ++k1) {
    for (int k2 = k1 + 1; k2 <= r; ++k2) {
      bool vanishes = false;
      Integer denominator = 1;
      for (int i = 0; i <= r; ++i) {
        shifted[i] = a[i] - (i == k1) - (i == k2);
        const int arg = g - d + r + shifted[i];
        if (arg < 0) {
          vanishes = true;  // 1/(negative)! = 0
          break;
        }
        denominator *= factorial(arg);
      }
      if (vanishes) {
        continue;
      }
      Integer vandermonde = 1;
      for (int i = 0; i <= r && vandermonde != 0; ++i) {
        for (int j = i + 1; j <= r; ++j) {
          vandermonde *= shifted[j] - shifted[i];
        }
      }
      const long gap = a[k2] - a[k1];
      sum += make_rational(Integer(gap * gap - 1) * vandermonde, denominator);
    }
  }
  sum *= factorial(g);
  return sum;
}

Integer special_count_formula(int g, int d, std::span<const int> a) {
  const Rational sum = special_count_sum(g, d, a);
  if (!is_integer(sum)) {
    throw Error(ErrorCode::InvariantViolation, "special point count is not an integer: " + to_string(sum));
  }
  return sum.get_num();
}

Integer count_special(const BNData& data) {
  data.validate();
  if (rho(data) != -1) {
    throw Error(ErrorCode::RhoNotMinusOne, "count requires rho == -1, got " + std::to_string(rho(data)));
  }
  const Integer n = special_count_formula(data.g, data.d, data.a.entries());
  if (n < 0) {
    throw Error(ErrorCode::InvariantViolation, "special point count is negative");
  }
  return n;
}

MuNu mu_nu(const BNData& data) {
  data.validate();
  if (data.g < 3) {
    throw Error(ErrorCode::GenusTooSmall, "mu and nu need g >= 3 (binom(g-1,2) vanishes at g = 2)");
  }
  if (rho(data) != -1) {
    throw Error(ErrorCode::RhoNotMinusOne, "mu and nu need rho == -1, got " + std::to_string(rho(data)));
  }
  const int g = data.g;
  const Integer n = count_special(data);

  // Non-strict derived sequences index no linear series and contribute 0.
  Integer lower = 0;
  for (int i = 0; i <= data.r(); ++i) {
    if (auto ai = derived_sequence(data.a, i)) {
      lower += special_count_formula(g - 1, data.d, ai->entries());
    }
  }
  const Integer gg = Integer(g) * g - 1;  // g^2 - 1
  const Integer binom = Integer(g - 1) * (g - 2) / 2;
  MuNu out;
  out.mu = -make_rational(n, 2 * gg) + make_rational(lower, 4 * binom);
  out.nu = make_rational(n, g * gg);
  return out;
}

std::vector<BNData> enumerate_divisorial(int g, int r_max, int d_max) {
  std::vector<BNData> out;
  if (g < 2) {
    throw Error(ErrorCode::InvalidInput, "genus must be at least 2");
  }
  for (int r = 0; r <= r_max; ++r) {
    for (int d = r + 1; d <= d_max; ++d) {
      std::vector<int> c(static_cast<std::size_t>(r + 1));
      std::iota(c.begin(), c.end(), 0);
      do {
        VanishingSequence a(c);
        if (rho(g, r, d, a) == -1) {
          out.push_back(BNData{g, d, std::move(a)});
        }
      } while (next_combination(c, d));
    }
  }
  return out;
}

BNData weierstrass_data(int g) {
  if (g < 2) {
    throw Error(ErrorCode::InvalidInput, "genus must be at least 2");
  }
  std::vector<int> a(static_cast<std::size_t>(g));
  std::iota(a.begin(), a.end() - 1, 0);
  a.back() = g;
  return BNData{g, 2 * g - 2, VanishingSequence(std::move(a))};
}

bool is_weierstrass_data(const BNData& data) {
  return data.g >= 2 && data == weierstrass_data(data.g);
}

}  // namespace bnclass
