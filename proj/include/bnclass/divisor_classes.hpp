#pragma once

#include "bnclass/brill_noether.hpp"
#include "bnclass/picard.hpp"

namespace bnclass {

/// mu_nu for g >= 3; at g = 2 only the Weierstrass datum is accepted, with
/// (mu, nu) = (0, 1). Anything else at g = 2 throws Error(Unsupported).
MuNu resolve_mu_nu(const BNData& data);

/// Closed form for the closure of the divisor of k-differentials vanishing at a
/// Weierstrass point.
DownClass weierstrass_k_class(int g, int k);

/// Class of the Brill-Noether incidence divisor from the expanded closed form.
DownClass bn_k_class_direct(const BNData& data, int k);

/// Same class, computed as pi_*((k psi - eta) * (mu BN_g + nu W_g)).
DownClass bn_k_class_pushforward(const BNData& data, int k);

struct ConeCoefficients {
  Rational bn;           // multiple of the pulled-back Brill-Noether class
  Rational weierstrass;  // multiple of weierstrass_k_class
};

/// (2k(g-1) mu, nu). Throws Error(InvariantViolation) if the combination does
/// not reproduce bn_k_class_direct.
ConeCoefficients cone_decomposition(const BNData& data, int k);

/// Sum of the two g = k = 2 double-zero strata (72 lambda - 10 eta - 6 delta_0 - 6 delta_1).
DownClass h22_combined_strata();

/// Class of the stratum of squares of abelian differentials in genus 2, before
/// any reduction by the Pic relation: (combined - W) / 2.
DownClass stratum_h22();

}  // namespace bnclass
