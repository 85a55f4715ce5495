#pragma once

// Monte Carlo shell integrals for the Ohsawa measure of a local monomial
// weight. Sampling runs in log-radial coordinates (r_k = e^{u_k}), where the
// shell {t < psi < t+1} is an explicit slab of width 1/2 in u_n: the sampler
// hits it exactly for arbitrarily negative t instead of collapsing under
// rejection.

#include <pairsing/weights.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pairsing {

// Product of annular bumps in the moduli |z_1|..|z_{n-1}| with a fixed
// quartic profile (1-s^2)^2. Supports must stay away from all coordinate
// axes so the log-radial sampling box is bounded.
struct BumpFunction {
    std::vector<double> center;  // bump centers in |z_k|
    std::vector<double> radius;  // support half-widths

    static double profile(double s);  // (1-s^2)^2 on [-1,1], else 0
    double operator()(const std::vector<double>& moduli) const;
    void check(int n) const;
};

// Continuous extensions of the bump across the z_n-direction, both equal to
// the bump on {z_n = 0}: the proof's taper 1 - |z_n|, and a product bump.
enum class ShellExtension { ProductBump, Tapered };

struct ShellEstimate {
    double t = 0.0;
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSamples = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 0;

// Estimate of int_{t < psi < t+1} g~ e^{-psi} dlambda_n. Deterministic for a
// fixed seed, independent of worker count. Requires t <= -3 and samples >=
// 10^4.
ShellEstimate shell_integral(const MonomialWeight& w, const BumpFunction& g,
                             ShellExtension extension, double t,
                             std::uint64_t samples = kDefaultSamples,
                             std::uint64_t seed = kDefaultSeed, int workers = 1);

// Analytic value of the t -> -infty limit,
//   pi * int g / prod |z_k|^{2 a_k} dlambda_{n-1},
// computed by adaptive quadrature on each radial factor.
double shell_limit_reference(const MonomialWeight& w, const BumpFunction& g);

struct LimitReport {
    std::vector<ShellEstimate> estimates;  // TAPERED, shared seed across t
    double fitted_limit = 0.0;             // L in I(t) = L - C e^{t/2}
    double fitted_coeff = 0.0;             // C
    double decay_exponent = 0.0;           // slope of log(L - I(t)) vs t
    double residual = 0.0;                 // rms residual of the linear fit
    double analytic_rhs = 0.0;
    bool fit_ok = false;
    std::string note;
};

// Fits the shell estimates over a decreasing grid of at least 4 t-values
// against L - C e^{t/2} and reports the fitted limit, coefficient and decay
// exponent next to the quadrature reference. Fit failure is reported in the
// note, not thrown.
LimitReport limit_convergence_check(const MonomialWeight& w, const BumpFunction& g,
                                    const std::vector<double>& t_grid,
                                    std::uint64_t samples = kDefaultSamples,
                                    std::uint64_t seed = kDefaultSeed, int workers = 1);

struct ExtensionIndependenceReport {
    ShellEstimate tapered_coarse, product_coarse;
    ShellEstimate tapered_fine, product_fine;
    double diff_coarse = 0.0;
    double diff_fine = 0.0;
    bool shrinks = false;  // |difference| smaller at the deeper shell
};

// Compares the two extensions at a coarse and a deeper shell (t_fine <
// t_coarse <= -10), all four runs sharing one seed.
ExtensionIndependenceReport extension_independence_check(
    const MonomialWeight& w, const BumpFunction& g, double t_coarse, double t_fine,
    std::uint64_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed,
    int workers = 1);

}  // namespace pairsing
