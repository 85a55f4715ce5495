#pragma once

// Local monomial weight data shared by the exact layer and the Monte Carlo
// oracle: psi(z) = log( |z_n|^2 * prod_{k<=N} |z_k|^{2 a_k} ) on a polydisk,
// with Y = (z_n = 0) and D supported on the first N coordinate hyperplanes.

#include <pairsing/rational.hpp>

#include <stdexcept>
#include <vector>

namespace pairsing {

struct MonomialWeight {
    int n = 2;               // ambient dimension
    std::vector<Rational> a;  // pole exponents a_1..a_N, N < n, each >= 0

    void check() const {
        if (n < 1) throw std::invalid_argument("MonomialWeight: n >= 1 required");
        if (static_cast<int>(a.size()) >= n)
            throw std::invalid_argument("MonomialWeight: requires N < n");
        for (const auto& ak : a)
            if (ak < 0)
                throw std::invalid_argument("MonomialWeight: exponents must be >= 0");
    }
};

}  // namespace pairsing
