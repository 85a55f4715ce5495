#include <pairsing/fermat_probe.hpp>

#include <pairsing/detail/mc_runner.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace pairsing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBallRadius = 0.8;

void check_range(int n, int d, const char* where) {
    if (n < 2 || n > 4)
        throw std::invalid_argument(std::string(where) + ": requires 2 <= n <= 4");
    if (d < 1 || d > 6)
        throw std::invalid_argument(std::string(where) + ": requires 1 <= d <= 6");
}

struct TrendInputs {
    std::vector<double> value;
    std::vector<double> se;
};

bool monotone_up(const TrendInputs& in) {
    for (std::size_t k = 0; k + 1 < in.value.size(); ++k) {
        const double slack = 3.0 * (in.se[k] + in.se[k + 1]);
        if (in.value[k + 1] < in.value[k] - slack) return false;
    }
    return true;
}

bool cauchy_tail(const TrendInputs& in, double rel_tol) {
    const std::size_t m = in.value.size();
    const double gap = std::fabs(in.value[m - 1] - in.value[m - 2]);
    const double tol = std::max(rel_tol * std::fabs(in.value[m - 1]),
                                3.0 * (in.se[m - 1] + in.se[m - 2]));
    return gap <= tol;
}

bool factor_growth(const TrendInputs& in, double factor) {
    return in.value.front() > 0.0 && in.value.back() >= factor * in.value.front();
}

}  // namespace

std::string to_string(Trend t) {
    switch (t) {
        case Trend::Convergent: return "CONVERGENT";
        case Trend::Divergent: return "DIVERGENT";
        case Trend::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

FermatProbe fermat_probe(int n, int d, const std::vector<double>& t_grid,
                         std::uint64_t samples, std::uint64_t seed, int workers) {
    check_range(n, d, "fermat_probe");
    if (t_grid.size() < 2)
        throw std::invalid_argument("fermat_probe: needs at least two t values");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] >= t_grid[i - 1])
            throw std::invalid_argument("fermat_probe: t grid must be decreasing");
    for (const double t : t_grid)
        if (t > -3.0) throw std::invalid_argument("fermat_probe: requires t <= -3");

    const double r_disk = kBallRadius;
    const std::size_t nm1 = static_cast<std::size_t>(n - 1);
    // z' uniform on the polydisk, v = f(z) uniform-in-log on the shell
    // annulus, all d branches of z_n share |v - s|^{1/d}
    const double weight =
        std::pow(kPi * r_disk * r_disk, static_cast<double>(nm1)) * kPi / d;
    const double inv_d = 1.0 / d;
    const double branch_exp = 2.0 * (1.0 - d) / d;

    FermatProbe probe;
    probe.n = n;
    probe.d = d;
    probe.t_grid = t_grid;

    for (const double t : t_grid) {
        auto sample = [&](detail::McRng& rng) {
            std::complex<double> s(0.0, 0.0);
            double bump = 1.0;
            for (std::size_t k = 0; k < nm1; ++k) {
                const double r = r_disk * std::sqrt(rng.uniform01());
                const double th = 2.0 * kPi * rng.uniform01();
                s += std::polar(std::pow(r, d), d * th);
                bump *= BumpFunction::profile(r / kBallRadius);
            }
            if (bump == 0.0) {
                rng.uniform01();  // keep the draw count per sample fixed
                rng.uniform01();
                return 0.0;
            }
            const double sigma = rng.uniform01();
            const double th_v = 2.0 * kPi * rng.uniform01();
            const std::complex<double> v = std::polar(std::exp(0.5 * (t + sigma)), th_v);
            const double r_n = std::pow(std::abs(v - s), inv_d);
            bump *= BumpFunction::profile(r_n / kBallRadius);
            if (bump == 0.0) return 0.0;
            return bump * std::pow(std::abs(v - s), branch_exp);
        };
        const auto mc = detail::run_streams(samples, seed, workers, sample);
        ShellEstimate est;
        est.t = t;
        est.value = weight * mc.mean;
        est.std_error = weight * mc.std_error;
        est.samples = samples;
        est.seed = seed;
        probe.estimates.push_back(est);
    }

    TrendInputs in;
    for (const auto& e : probe.estimates) {
        in.value.push_back(e.value);
        in.se.push_back(e.std_error);
    }
    if (monotone_up(in) && factor_growth(in, 3.0)) {
        probe.trend = Trend::Divergent;
    } else if (cauchy_tail(in, 0.05) && !factor_growth(in, 3.0)) {
        probe.trend = Trend::Convergent;
    } else {
        probe.trend = Trend::Inconclusive;
    }
    return probe;
}

DfDensityReport df_density_probe(int n, int d, const std::vector<double>& tube_grid,
                                 std::uint64_t samples, std::uint64_t seed,
                                 int workers) {
    check_range(n, d, "df_density_probe");
    if (tube_grid.size() < 2)
        throw std::invalid_argument("df_density_probe: needs at least two tube widths");
    for (std::size_t i = 0; i < tube_grid.size(); ++i) {
        if (tube_grid[i] <= 0.0)
            throw std::invalid_argument("df_density_probe: tube widths must be positive");
        if (i > 0 && tube_grid[i] >= tube_grid[i - 1])
            throw std::invalid_argument("df_density_probe: tube grid must shrink");
    }

    const double r_disk = kBallRadius;
    const std::size_t nm1 = static_cast<std::size_t>(n - 1);
    const double weight =
        std::pow(kPi * r_disk * r_disk, static_cast<double>(nm1)) * d;
    const double inv_d = 1.0 / d;
    const double branch_exp = 2.0 * (1.0 - d) / d;
    const double ball_sq = kBallRadius * kBallRadius;

    DfDensityReport rep;
    rep.n = n;
    rep.d = d;
    rep.tube_grid = tube_grid;

    for (const double delta : tube_grid) {
        auto sample = [&](detail::McRng& rng) {
            std::complex<double> s(0.0, 0.0);
            double norm_sq = 0.0;
            for (std::size_t k = 0; k < nm1; ++k) {
                const double r = r_disk * std::sqrt(rng.uniform01());
                const double th = 2.0 * kPi * rng.uniform01();
                s += std::polar(std::pow(r, d), d * th);
                norm_sq += r * r;
            }
            const double rw = delta * std::sqrt(rng.uniform01());
            const double th_w = 2.0 * kPi * rng.uniform01();
            const std::complex<double> w = std::polar(rw, th_w);
            const double rn_sq = std::pow(std::abs(w - s), 2.0 * inv_d);
            if (norm_sq + rn_sq > ball_sq) return 0.0;
            return std::pow(std::abs(w - s), branch_exp);
        };
        const auto mc = detail::run_streams(samples, seed, workers, sample);
        ShellEstimate est;
        est.t = delta;
        est.value = weight * mc.mean;
        est.std_error = weight * mc.std_error;
        est.samples = samples;
        est.seed = seed;
        rep.estimates.push_back(est);
    }

    TrendInputs in;
    for (const auto& e : rep.estimates) {
        in.value.push_back(e.value);
        in.se.push_back(e.std_error);
    }
    const std::size_t m = in.value.size();
    const double first_gap = in.value[1] - in.value[0];
    const double last_gap = in.value[m - 1] - in.value[m - 2];
    const double gap_noise = 3.0 * (in.se[m - 1] + in.se[m - 2]);
    if (cauchy_tail(in, 0.05)) {
        rep.trend = Trend::Convergent;
    } else if (monotone_up(in) &&
               (factor_growth(in, 3.0) ||
                (last_gap > gap_noise && last_gap >= 0.5 * first_gap))) {
        // log-type divergence keeps the increments from decaying even when
        // the total growth stays under the factor threshold
        rep.trend = Trend::Divergent;
    } else {
        rep.trend = Trend::Inconclusive;
    }
    return rep;
}

}  // namespace pairsing
