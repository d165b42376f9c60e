#pragma once

#include <vector>

#include "bnclass/rational.hpp"

namespace bnclass {

/// Divisor class on the projectivized k-th Hodge bundle over the moduli of
/// genus-g curves, in the basis eta, lambda, delta_0 .. delta_{g/2}.
/// Coefficients are stored signed, exactly as they multiply each generator.
struct DownClass {
  int g = 0;
  int k = 0;
  Rational eta;
  Rational lambda;
  std::vector<Rational> delta;

  /// Zero class with the right number of boundary slots.
  static DownClass zero(int g, int k);

  int max_boundary_index() const noexcept { return g / 2; }
  /// Number of generators: eta, lambda and the boundary classes.
  std::size_t generator_count() const noexcept { return 2 + delta.size(); }
  /// Coefficients as one vector (eta, lambda, delta_0, ...).
  std::vector<Rational> coefficients() const;
  static DownClass from_coefficients(int g, int k, const std::vector<Rational>& coeffs);

  DownClass& operator+=(const DownClass& other);
  DownClass& operator-=(const DownClass& other);
  DownClass& operator*=(const Rational& s);

  friend bool operator==(const DownClass&, const DownClass&) = default;
};

/// Divisor class on the pointed version, basis eta, lambda, psi, delta_0 .. delta_{g-1}.
struct UpClass {
  int g = 0;
  int k = 0;
  Rational eta;
  Rational lambda;
  Rational psi;
  std::vector<Rational> delta;

  static UpClass zero(int g, int k);

  UpClass& operator+=(const UpClass& other);
  UpClass& operator-=(const UpClass& other);
  UpClass& operator*=(const Rational& s);

  friend bool operator==(const UpClass&, const UpClass&) = default;
};

DownClass operator+(DownClass a, const DownClass& b);
DownClass operator-(DownClass a, const DownClass& b);
DownClass operator*(const Rational& s, DownClass a);
UpClass operator+(UpClass a, const UpClass& b);
UpClass operator-(UpClass a, const UpClass& b);
UpClass operator*(const Rational& s, UpClass a);

/// Throw Error(InvalidInput) when the boundary vector has the wrong length.
void validate(const DownClass& c);
void validate(const UpClass& c);

/// Class of the divisor of marked Weierstrass points, pulled back with eta = 0.
UpClass weierstrass_pointed_class(int g, int k = 1);

/// Pullback of the Brill-Noether divisor class to the pointed space.
UpClass brill_noether_pointed_class(int g, int k = 1);

/// Incidence divisor (differential vanishing at the marked point): k psi - eta.
UpClass incidence_class(int g, int k);

/// Brill-Noether divisor class pulled back to the unpointed Hodge bundle space.
DownClass downstairs_bn_pullback(int g, int k = 1);

/// Push-forward along the forgetful map of the product c1 * c2.
///
/// Only products with a psi factor survive:
///   psi^2         -> kappa_1 = 12 lambda - sum_{i=0}^{g/2} delta_i
///   psi lambda    -> (2g-2) lambda,   psi eta -> (2g-2) eta,   psi delta_0 -> (2g-2) delta_0
///   psi delta_j   -> (2j-1) delta_{min(j, g-j)}, j != g/2
///   psi delta_g/2 -> (2g-2) delta_{g/2}  (both rules land on the same generator)
DownClass pushforward_product(const UpClass& c1, const UpClass& c2);

/// Exact equality; for g = 2 equality modulo the relation 10 lambda = delta_0 + 2 delta_1.
bool classes_equal(const DownClass& c1, const DownClass& c2);

/// Genus 2 only: the representative of c (modulo the relation) whose delta_1
/// coefficient is zero.
DownClass eliminate_delta1(const DownClass& c);

/// The g = 2 relation vector (0, 10, -1, -2); it represents the zero class.
DownClass genus_two_relation(int k);

}  // namespace bnclass
