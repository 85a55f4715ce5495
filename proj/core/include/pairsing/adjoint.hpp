#pragma once

// Algebraic adjoint ideal as vanishing-order data on X', monomial membership
// through the floor conditions, and the triviality <=> plt predicate. The
// analytic weighted-integral definition is realized through its proven
// equivalence with the floor conditions; a direct lambda_i(epsilon)
// evaluation is kept as a second route for cross-checks.

#include <pairsing/model.hpp>

#include <map>
#include <optional>
#include <vector>

namespace pairsing {

struct VanishingOrderSpec {
    // required pullback order per record on X'; the strict transform of Y
    // never carries a requirement and is absent
    std::map<PrimeId, BigInt> required_orders;

    bool all_zero() const {
        for (const auto& [p, k] : required_orders)
            if (k != 0) return false;
        return true;
    }
};

// Required order on each record: max(0, floor(c + b - rel_canonical)).
// Negative floors are allowed poles, which holomorphic germs never exploit.
VanishingOrderSpec vanishing_orders(const SncModel& m);

// A chart of X' in which the relevant divisors are coordinate hyperplanes:
// coordinate i is the hyperplane of record coords[i], or free (nullopt).
struct ChartSpec {
    std::vector<std::optional<std::string>> coords;
};

// g∘f as a monomial in the chart coordinates; exponents >= 0.
struct MonomialGerm {
    std::vector<BigInt> exponents;
};

// Floor-condition membership: the germ's order along each charted divisor
// meets its required order. Divisors with a positive requirement must appear
// in the chart; a chart naming unknown or repeated records is inconsistent.
bool monomial_membership(const SncModel& m, const ChartSpec& chart,
                         const MonomialGerm& g);

// Direct evaluation of the weighted-integral conditions at a fixed
// epsilon > 0:
//   lambda_i = 2 a_i - 2(1+eps) b_i - 2 c_i + 2 d_i + 1,
// required >= -1 where b_i > 0 and > -1 where b_i = 0. For small epsilon this
// agrees with monomial_membership; requires effective B.
bool monomial_membership_weighted(const SncModel& m, const ChartSpec& chart,
                                  const MonomialGerm& g, const Rational& epsilon);

// Adj(X, Y; B) = O_X iff every required order is 0 (iff the pair is plt
// near Y).
bool is_trivial(const SncModel& m);

// Supremum of the perturbations epsilon for which the floor conditions match
// their epsilon = 0+ values: min over records with b > 0 of
// (floor(e) + 1 - e)/b with e = b + c - d. nullopt means unbounded (B = 0).
// Requires effective B.
std::optional<Rational> epsilon_threshold(const SncModel& m);

}  // namespace pairsing
