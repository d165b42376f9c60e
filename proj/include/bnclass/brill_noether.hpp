#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bnclass/rational.hpp"

namespace bnclass {

/// Strictly increasing sequence of nonnegative vanishing orders a_0 < ... < a_r.
class VanishingSequence {
 public:
  VanishingSequence() = default;
  /// Throws Error(InvalidInput) unless the entries are nonnegative and strictly increasing.
  explicit VanishingSequence(std::vector<int> entries);

  /// Returns nullopt instead of throwing.
  static std::optional<VanishingSequence> try_make(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int r() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const noexcept { return entries_.size(); }
  int back() const { return entries_.back(); }

  friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
  friend auto operator<=>(const VanishingSequence&, const VanishingSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// A pointed Brill-Noether condition (g, d, a); r is implied by a.
struct BNData {
  int g = 0;
  int d = 0;
  VanishingSequence a;

  int r() const noexcept { return a.r(); }

  /// Throws Error(InvalidInput) unless g >= 2, d >= 1, a nonempty and a_r <= d.
  void validate() const;

  friend bool operator==(const BNData&, const BNData&) = default;
};

struct MuNu {
  Rational mu;
  Rational nu;
};

/// Adjusted Brill-Noether number g - (r+1)(g-d+r) - sum(a_i - i).
int rho(int g, int r, int d, const VanishingSequence& a);
int rho(const BNData& data);

/// Adds 1 to every entry except entry i; nullopt when the result is not strictly increasing.
std::optional<VanishingSequence> derived_sequence(const VanishingSequence& a, int i);

/// Number of pairs (P, l) on a general curve with vanishing sequence at least a.
/// Requires rho(data) == -1; the count is only finite there.
Integer count_special(const BNData& data);

/// Raw evaluation of the closed-form count for genus g >= 1 and any strictly
/// increasing sequence (entries may exceed d). Terms whose factorial
/// denominators have a negative argument contribute 0. Off the rho = -1 locus
/// the value need not be an integer.
Rational special_count_sum(int g, int d, std::span<const int> a);

/// special_count_sum, throwing Error(InvariantViolation) unless it is an integer.
Integer special_count_formula(int g, int d, std::span<const int> a);

/// Coefficients of the pointed divisor mu*BN_g + nu*W_g. Requires g >= 3 and rho == -1.
MuNu mu_nu(const BNData& data);

/// Every (r, d, a) with r <= r_max, r < d <= d_max and rho == -1, in
/// lexicographic order of (r, d, a).
std::vector<BNData> enumerate_divisorial(int g, int r_max, int d_max);

/// The Weierstrass datum d = 2g-2, a = (0, 1, ..., g-2, g).
BNData weierstrass_data(int g);
bool is_weierstrass_data(const BNData& data);

}  // namespace bnclass
