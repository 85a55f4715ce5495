#include <pairsing/montecarlo.hpp>

#include <pairsing/detail/mc_runner.hpp>
#include <pairsing/quadrature.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pairsing {

namespace {

constexpr double kPi = std::numbers::pi;

double extension_factor(ShellExtension ext, double r_n) {
    switch (ext) {
        case ShellExtension::Tapered:
            return r_n < 1.0 ? 1.0 - r_n : 0.0;
        case ShellExtension::ProductBump:
            return BumpFunction::profile(r_n / 0.8);
    }
    throw std::invalid_argument("shell_integral: invalid extension tag");
}

}  // namespace

double BumpFunction::profile(double s) {
    const double q = 1.0 - s * s;
    return q > 0.0 ? q * q : 0.0;
}

double BumpFunction::operator()(const std::vector<double>& moduli) const {
    double out = 1.0;
    for (std::size_t k = 0; k < center.size(); ++k)
        out *= profile((moduli[k] - center[k]) / radius[k]);
    return out;
}

void BumpFunction::check(int n) const {
    if (center.size() != radius.size() ||
        center.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("BumpFunction: needs n-1 center/radius pairs");
    for (std::size_t k = 0; k < center.size(); ++k) {
        if (radius[k] <= 0.0)
            throw std::invalid_argument("BumpFunction: radii must be positive");
        if (center[k] - radius[k] <= 0.0)
            throw std::invalid_argument(
                "BumpFunction: support must avoid the coordinate axes "
                "(center - radius > 0)");
    }
}

ShellEstimate shell_integral(const MonomialWeight& w, const BumpFunction& g,
                             ShellExtension extension, double t,
                             std::uint64_t samples, std::uint64_t seed, int workers) {
    w.check();
    g.check(w.n);
    if (t > -3.0) throw std::invalid_argument("shell_integral: requires t <= -3");
    if (samples < 10'000)
        throw std::invalid_argument("shell_integral: requires samples >= 10^4");
    (void)extension_factor(extension, 0.0);  // rejects invalid tags up front

    const int n = w.n;
    const std::size_t nm1 = static_cast<std::size_t>(n - 1);
    const std::size_t big_n = w.a.size();
    std::vector<double> af(big_n);
    for (std::size_t k = 0; k < big_n; ++k) af[k] = to_double(w.a[k]);

    std::vector<double> lo(nm1), width(nm1);
    double box_volume = 1.0;
    for (std::size_t k = 0; k < nm1; ++k) {
        lo[k] = std::log(g.center[k] - g.radius[k]);
        const double hi = std::log(g.center[k] + g.radius[k]);
        width[k] = hi - lo[k];
        box_volume *= width[k];
    }

    // int over the slab {t < 2 u_n + sum 2 a_k u_k < t+1}: after cancelling
    // e^{-psi} against the jacobian prod r_k^2, the integrand only retains
    // the bump, the extension factor and prod r_k^{2(1-a_k)} (r_k^2 on free
    // coordinates)
    const double weight = box_volume * 0.5 * std::pow(2.0 * kPi, n);

    auto sample = [&](detail::McRng& rng) {
        std::vector<double> r(nm1);
        double shift = 0.0;   // sum 2 a_k u_k
        double logfac = 0.0;  // sum 2(1 - a_k) u_k + free-coordinate part
        for (std::size_t k = 0; k < nm1; ++k) {
            const double u = lo[k] + width[k] * rng.uniform01();
            r[k] = std::exp(u);
            const double ak = k < big_n ? af[k] : 0.0;
            shift += 2.0 * ak * u;
            logfac += 2.0 * (1.0 - ak) * u;
        }
        const double u_n = 0.5 * (t - shift) + 0.5 * rng.uniform01();
        const double r_n = std::exp(u_n);
        return g(r) * extension_factor(extension, r_n) * std::exp(logfac);
    };

    const auto mc = detail::run_streams(samples, seed, workers, sample);
    ShellEstimate out;
    out.t = t;
    out.value = weight * mc.mean;
    out.std_error = weight * mc.std_error;
    out.samples = samples;
    out.seed = seed;
    return out;
}

double shell_limit_reference(const MonomialWeight& w, const BumpFunction& g) {
    w.check();
    g.check(w.n);
    double out = kPi;
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(w.n); ++k) {
        const double ak = k < w.a.size() ? to_double(w.a[k]) : 0.0;
        const double c = g.center[k], rho = g.radius[k];
        out *= 2.0 * kPi *
               adaptive_simpson(
                   [&](double r) {
                       return BumpFunction::profile((r - c) / rho) *
                              std::pow(r, 1.0 - 2.0 * ak);
                   },
                   c - rho, c + rho);
    }
    return out;
}

LimitReport limit_convergence_check(const MonomialWeight& w, const BumpFunction& g,
                                    const std::vector<double>& t_grid,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers) {
    if (t_grid.size() < 4)
        throw std::invalid_argument("limit_convergence_check: insufficient grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] >= t_grid[i - 1])
            throw std::invalid_argument(
                "limit_convergence_check: t grid must be decreasing");

    LimitReport rep;
    rep.analytic_rhs = shell_limit_reference(w, g);
    for (const double t : t_grid)
        rep.estimates.push_back(
            shell_integral(w, g, ShellExtension::Tapered, t, samples, seed, workers));

    // least squares for I(t) = L - C x with x = e^{t/2}
    const std::size_t m = t_grid.size();
    double sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::exp(0.5 * t_grid[i]);
        const double y = rep.estimates[i].value;
        sx += x;
        sxx += x * x;
        sy += y;
        sxy += x * y;
    }
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    if (denom == 0.0) {
        rep.note = "degenerate grid: e^{t/2} values coincide";
        return rep;
    }
    const double slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
    rep.fitted_coeff = -slope;
    rep.fitted_limit = (sy - slope * sx) / static_cast<double>(m);

    double ss = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::exp(0.5 * t_grid[i]);
        const double resid = rep.estimates[i].value - (rep.fitted_limit - rep.fitted_coeff * x);
        ss += resid * resid;
    }
    rep.residual = std::sqrt(ss / static_cast<double>(m));

    // decay exponent from log(L - I(t)) against t
    double st = 0, stt = 0, sl = 0, stl = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double gap = rep.fitted_limit - rep.estimates[i].value;
        if (gap <= 0.0) continue;
        const double lg = std::log(gap);
        st += t_grid[i];
        stt += t_grid[i] * t_grid[i];
        sl += lg;
        stl += t_grid[i] * lg;
        ++used;
    }
    if (used < 2) {
        rep.note = "fit failure: too few positive gaps L - I(t)";
        return rep;
    }
    const double dn = static_cast<double>(used) * stt - st * st;
    if (dn == 0.0) {
        rep.note = "fit failure: degenerate t values";
        return rep;
    }
    rep.decay_exponent = (static_cast<double>(used) * stl - st * sl) / dn;
    rep.fit_ok = true;
    return rep;
}

ExtensionIndependenceReport extension_independence_check(
    const MonomialWeight& w, const BumpFunction& g, double t_coarse, double t_fine,
    std::uint64_t samples, std::uint64_t seed, int workers) {
    if (t_coarse > -10.0)
        throw std::invalid_argument("extension_independence_check: requires t <= -10");
    if (t_fine >= t_coarse)
        throw std::invalid_argument(
            "extension_independence_check: t_fine must be below t_coarse");

    ExtensionIndependenceReport rep;
    rep.tapered_coarse = shell_integral(w, g, ShellExtension::Tapered, t_coarse,
                                        samples, seed, workers);
    rep.product_coarse = shell_integral(w, g, ShellExtension::ProductBump, t_coarse,
                                        samples, seed, workers);
    rep.tapered_fine =
        shell_integral(w, g, ShellExtension::Tapered, t_fine, samples, seed, workers);
    rep.product_fine = shell_integral(w, g, ShellExtension::ProductBump, t_fine,
                                      samples, seed, workers);
    rep.diff_coarse = std::fabs(rep.tapered_coarse.value - rep.product_coarse.value);
    rep.diff_fine = std::fabs(rep.tapered_fine.value - rep.product_fine.value);
    rep.shrinks = rep.diff_fine < rep.diff_coarse;
    return rep;
}

}  // namespace pairsing
