#include <pairsing/ohsawa.hpp>

namespace pairsing {

void require_valid(const OhsawaSetup& s, const std::string& where) {
    require_valid(s.model, where);
    const DivisorRecord* y = s.model.strict_y();
    for (const auto& [p, c] : s.aux_pullback_d.terms()) {
        if (p.name == y->id.name)
            throw std::invalid_argument(where + ": D's support must not contain Y");
        if (!s.model.find_record(p.name))
            throw std::invalid_argument(where + ": f*D supported on unknown divisor '" +
                                        p.name + "'");
    }
    if (!s.volume_zeros.is_effective())
        throw std::invalid_argument(where + ": volume zeros must be effective");
    for (const auto& [p, c] : s.volume_zeros.terms()) {
        if (p.name == y->id.name)
            throw std::invalid_argument(where +
                                        ": volume zeros along Y' are not modeled");
        if (!s.model.find_record(p.name))
            throw std::invalid_argument(where + ": zeros supported on unknown divisor '" +
                                        p.name + "'");
    }
}

QDivisor pole_divisor(const OhsawaSetup& s) {
    require_valid(s, "pole_divisor");
    const SncModel& m = s.model;

    QDivisor z_total = m.volume_zero_divisor + s.volume_zeros;

    // (f*Y - Y') + f*D - Z_total (with the relative canonical folded in),
    // plus f*B when twisting
    QDivisor upstairs;
    for (const auto& r : m.records) {
        Rational c = r.mult_in_pullback_y - r.rel_canonical;
        if (r.kind == RecordKind::StrictY) continue;  // f*Y - Y' drops Y'
        c += s.aux_pullback_d.coeff(r.id);
        c -= z_total.coeff(r.id);
        if (s.twist_by_boundary) c += r.mult_in_pullback_b;
        upstairs.add_term(r.id, c);
    }
    return restrict_to_yprime(m, upstairs).on_yprime;
}

IntegrabilityVerdict is_locally_integrable(const OhsawaSetup& s) {
    IntegrabilityVerdict out;
    out.pole_divisor_on_yprime = pole_divisor(s);
    const auto [worst, worst_id] = max_coefficient(out.pole_divisor_on_yprime);
    out.integrable = worst < 1;
    if (!out.integrable) out.blocking_curve = worst_id;
    return out;
}

bool theorem_equivalence_check(const OhsawaSetup& s) {
    require_valid(s, "theorem_equivalence_check");
    if (!s.aux_pullback_d.empty() || !s.volume_zeros.empty() ||
        !s.model.volume_zero_divisor.empty())
        throw std::invalid_argument(
            "theorem_equivalence_check: requires D = 0 and smooth dV_X");
    if (!s.twist_by_boundary) {
        const bool boundary_empty =
            s.model.boundary.components.empty() &&
            [&] {
                for (const auto& r : s.model.records)
                    if (r.mult_in_pullback_b != 0) return false;
                return true;
            }();
        if (!boundary_empty)
            throw std::invalid_argument(
                "theorem_equivalence_check: twist and adjunction boundary must agree");
    }

    const bool integrable = is_locally_integrable(s).integrable;
    const bool klt_side =
        classify_absolute(gamma_on_yprime(s.model).on_yprime).verdict == Verdict::Klt;
    return integrable == klt_side;
}

std::vector<Rational> smooth_density_exponents(const MonomialWeight& w,
                                               const std::vector<Rational>& volume_beta) {
    w.check();
    if (static_cast<int>(volume_beta.size()) > w.n - 1)
        throw std::invalid_argument("smooth_density_exponents: beta longer than n-1");
    std::vector<Rational> out(static_cast<std::size_t>(w.n - 1), Rational(0));
    for (std::size_t k = 0; k < w.a.size(); ++k) out[k] = -2 * w.a[k];
    for (std::size_t k = 0; k < volume_beta.size(); ++k) out[k] += volume_beta[k];
    return out;
}

}  // namespace pairsing
