#pragma once

// Restriction to the strict transform Y', the divisorial pushforward to the
// normalization of Y, and the different Diff(B) with its inversion-of-
// adjunction cross-check.
//
// The klt-of-the-different test is run upstairs on Y' (all restricted
// coefficients, including curves whose image drops to codimension >= 2):
// the pushed-forward divisor alone loses information whenever a dropped
// curve carries coefficient >= 1, and then the upstairs verdict governs.

#include <pairsing/classify.hpp>
#include <pairsing/model.hpp>

#include <map>

namespace pairsing {

struct RestrictedDivisor {
    QDivisor on_yprime;
    // which X'-records fed each Y'-curve, with their contributed amounts
    std::map<PrimeId, QDivisor> provenance;
};

// Restriction of a divisor on X' to Y' through the model's incidence data.
// Linear in d. The support of d must consist of records and exclude Y'.
RestrictedDivisor restrict_to_yprime(const SncModel& m, const QDivisor& d);

// Divisorial pushforward Y' -> Y^nu: keeps exactly the curves whose image
// stays codimension 1, relabeled to Y^nu, coefficients unchanged.
QDivisor pushforward_to_ynu(const SncModel& m, const RestrictedDivisor& r);

// The divisor (Delta_{X'} - Y')|_{Y'} that both the different and the Ohsawa
// pole bookkeeping descend from.
RestrictedDivisor gamma_on_yprime(const SncModel& m);

// Diff(B) on Y^nu: divisorial pushforward of (Delta_{X'} - Y')|_{Y'}.
QDivisor different(const SncModel& m);

// Exact check of Diff(B) = Diff(0) + (f*B restricted and pushed forward).
bool diff_decomposition_check(const SncModel& m);

struct InversionReport {
    PairClass klt_of_different;  // decided upstairs on Y'
    PairClass plt_near_y;
    bool consistent = false;  // klt on the Y'-side <=> PLT of (X, Y+B)
    bool applicable = false;  // the theorem assumes B effective
};

// Runs both sides of inversion of adjunction. For effective B the sides must
// agree; for non-effective B the report is informational and consistent may
// legitimately be false.
InversionReport inversion_check(const SncModel& m);

// True iff every boundary coefficient (and hence f*B multiplicity) is >= 0.
bool boundary_is_effective(const SncModel& m);

// Copy of the model with B = 0: boundary coefficients and every f*B
// multiplicity zeroed, divisors kept in place. Diff(0) of a model with
// boundary is different(strip_boundary(m)).
SncModel strip_boundary(const SncModel& m);

}  // namespace pairsing
