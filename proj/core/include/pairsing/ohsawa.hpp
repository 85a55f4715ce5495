#pragma once

// The Ohsawa measure's pole divisor on Y' and the local integrability
// predicate. The measure dV[psi] of a weight with poles along Y + D, taken
// against a volume form with zeros along Z, descends to Y' with poles along
//
//     (f*Y + f*D - Y' - Z_total)|_{Y'}
//
// where Z_total collects the relative canonical divisor of f together with
// the pulled-back zeros of dV_X. An optional twist e^{-phi_B} adds the
// restriction of f*B. Local integrability is exactly "every pole coefficient
// < 1".

#include <pairsing/adjunction.hpp>
#include <pairsing/model.hpp>
#include <pairsing/weights.hpp>

#include <optional>

namespace pairsing {

struct OhsawaSetup {
    SncModel model;

    // f*D on X' for the auxiliary divisor D in the weight's poles. D itself
    // determines this only together with resolution data, so the pullback
    // coefficients are supplied per record; components of D needing strict
    // transforms are declared as boundary records with coefficient 0.
    // Support must exclude Y'.
    QDivisor aux_pullback_d;

    // Extra zeros of dV_X on X', effective, on top of the model's own
    // volume_zero_divisor.
    QDivisor volume_zeros;

    // Include the twist e^{-phi_B} with B the model's boundary.
    bool twist_by_boundary = false;
};

// Throws std::invalid_argument when the setup breaks its invariants.
void require_valid(const OhsawaSetup& s, const std::string& where);

struct IntegrabilityVerdict {
    bool integrable = false;
    QDivisor pole_divisor_on_yprime;
    std::optional<PrimeId> blocking_curve;  // witness with coefficient >= 1
};

// Pole divisor of (the possibly twisted) dV[psi] on Y'.
QDivisor pole_divisor(const OhsawaSetup& s);

IntegrabilityVerdict is_locally_integrable(const OhsawaSetup& s);

// Cross-checks the integrability verdict against the klt-of-the-different
// verdict computed on Y' by the adjunction module; the two sides follow the
// pole-divisor path and the Delta_{X'} path independently and must coincide.
// Requires D and volume zeros empty, and the twist to match the model's
// boundary (twist on, or boundary empty).
bool theorem_equivalence_check(const OhsawaSetup& s);

// Exponent vector of the dV[psi] density on {z_n = 0} for a local monomial
// weight: coordinate k carries -2 a_k plus the volume form's zero exponent.
// beta may be shorter than n-1; missing entries count as 0.
std::vector<Rational> smooth_density_exponents(const MonomialWeight& w,
                                               const std::vector<Rational>& volume_beta);

}  // namespace pairsing
