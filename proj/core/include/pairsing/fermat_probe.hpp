#pragma once

// Desk-scale numeric probes of the Fermat family z_1^d + ... + z_n^d = 0:
// shell integrals of psi = log|f|^2 and a tube surrogate for the surface
// integral of 1/|df|^2 on Y. Both probes only classify trends; the exact
// layer owns the actual verdicts.

#include <pairsing/montecarlo.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pairsing {

enum class Trend { Convergent, Divergent, Inconclusive };

std::string to_string(Trend t);

struct FermatProbe {
    int n = 0;
    int d = 0;
    std::vector<double> t_grid;
    std::vector<ShellEstimate> estimates;
    Trend trend = Trend::Inconclusive;
};

inline const std::vector<double> kDefaultTGrid{-8.0, -12.0, -16.0, -20.0};

// Shell integrals of psi = log|f|^2 with a fixed product bump around the
// origin. Sampling substitutes v = f(z): the shell is an explicit annulus in
// v and e^{-psi} cancels exactly, so deep shells cost the same as shallow
// ones. The d branch values of z_n share one modulus, which is all the
// radial bump sees. Trend CONVERGENT is expected iff d <= n-1, DIVERGENT iff
// d >= n+1; d = n diverges too slowly for the factor test and may come back
// INCONCLUSIVE.
FermatProbe fermat_probe(int n, int d, const std::vector<double>& t_grid = kDefaultTGrid,
                         std::uint64_t samples = kDefaultSamples,
                         std::uint64_t seed = kDefaultSeed, int workers = 1);

struct DfDensityReport {
    int n = 0;
    int d = 0;
    std::vector<double> tube_grid;            // shrinking tube half-widths
    std::vector<ShellEstimate> estimates;     // .t holds the tube half-width
    Trend trend = Trend::Inconclusive;
};

inline const std::vector<double> kDefaultTubeGrid{1e-3, 1e-5, 1e-7, 1e-9};

// Tube estimate of int_{Y cap ball} dS / sum_j |z_j|^{2(d-1)}: volume of
// {|f| < delta} weighted by |df|^2 / sum, over the complex-tube normalization
// pi delta^2. The integrand's co-area density on Y is exactly the 1/|df|^2
// volume up to the bounded factor d^2, so the estimates stabilize iff
// d - 1 <= n - 2.
DfDensityReport df_density_probe(int n, int d,
                                 const std::vector<double>& tube_grid = kDefaultTubeGrid,
                                 std::uint64_t samples = kDefaultSamples,
                                 std::uint64_t seed = kDefaultSeed, int workers = 1);

}  // namespace pairsing
