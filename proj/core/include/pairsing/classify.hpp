#pragma once

// Discrepancies and the klt/plt/lc classification of (X, Y+B) near Y, read
// off an SncModel.

#include <pairsing/model.hpp>

#include <optional>

namespace pairsing {

// Ordered from worst to best so that "never a strictly better verdict"
// monotonicity statements are plain comparisons.
enum class Verdict { NotLC = 0, LC = 1, Plt = 2, Klt = 3 };

std::string to_string(Verdict v);

struct PairClass {
    Verdict verdict = Verdict::Klt;
    std::optional<PrimeId> witness;
    std::optional<Rational> witness_discrepancy;
};

// Coefficients of Delta_{X'} defined by K_{X'} + Delta_{X'} = f*(K_X + Y + B):
// each record contributes mult_in_pullback_y + mult_in_pullback_b -
// rel_canonical; the strict transform of Y carries exactly 1.
QDivisor delta_prime(const SncModel& m);

// a(E, X, Y+B) = -(coefficient of E in Delta_{X'}); -1 for Y' itself.
Rational discrepancy(const SncModel& m, const PrimeId& e);

// Verdict of (X, Y+B) in a neighborhood of Y. Y' sits at coefficient exactly
// 1 by construction, so the verdict over the remaining records is:
//   NOT_LC  if some coefficient > 1,
//   LC      if some coefficient = 1,
//   PLT     otherwise (Y' is then the unique coefficient-1 divisor).
// The pure-boundary KLT verdict is the business of classify_absolute.
PairClass classify_pair(const SncModel& m);

// klt test for an snc boundary divisor on a smooth ambient space:
// KLT iff all coefficients < 1, LC iff all <= 1 with one exactly 1,
// NOT_LC otherwise.
PairClass classify_absolute(const QDivisor& boundary);

}  // namespace pairsing
