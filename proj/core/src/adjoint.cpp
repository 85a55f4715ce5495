#include <pairsing/adjoint.hpp>

#include <pairsing/adjunction.hpp>

#include <set>

namespace pairsing {

VanishingOrderSpec vanishing_orders(const SncModel& m) {
    require_valid(m, "vanishing_orders");
    VanishingOrderSpec out;
    for (const auto& r : m.records) {
        if (r.kind == RecordKind::StrictY) continue;
        BigInt order =
            floor_int(r.mult_in_pullback_y + r.mult_in_pullback_b - r.rel_canonical);
        if (order < 0) order = 0;
        out.required_orders.emplace(r.id, order);
    }
    return out;
}

namespace {

// resolves each chart coordinate to its record (nullptr = free), checking
// shape, exponent signs and repeats
std::vector<const DivisorRecord*> resolve_chart(const SncModel& m,
                                                const ChartSpec& chart,
                                                const MonomialGerm& g,
                                                const std::string& where) {
    if (chart.coords.size() != g.exponents.size())
        throw std::invalid_argument(where + ": chart and germ sizes differ");
    for (const auto& e : g.exponents)
        if (e < 0)
            throw std::invalid_argument(where + ": germ exponents must be >= 0");
    std::vector<const DivisorRecord*> out;
    std::set<std::string> seen;
    for (const auto& name : chart.coords) {
        if (!name) {
            out.push_back(nullptr);
            continue;
        }
        const DivisorRecord* r = m.find_record(*name);
        if (!r)
            throw std::invalid_argument(where + ": chart names unknown record '" +
                                        *name + "'");
        if (!seen.insert(*name).second)
            throw std::invalid_argument(where + ": chart repeats record '" + *name +
                                        "'");
        out.push_back(r);
    }
    return out;
}

}  // namespace

bool monomial_membership(const SncModel& m, const ChartSpec& chart,
                         const MonomialGerm& g) {
    const auto orders = vanishing_orders(m);
    const auto charted = resolve_chart(m, chart, g, "monomial_membership");

    std::set<std::string> in_chart;
    for (const auto* r : charted)
        if (r) in_chart.insert(r->id.name);
    for (const auto& [p, k] : orders.required_orders) {
        if (k > 0 && !in_chart.count(p.name))
            throw std::invalid_argument(
                "monomial_membership: chart does not exhibit '" + p.name +
                "', which carries a positive required order");
    }

    for (std::size_t i = 0; i < charted.size(); ++i) {
        const DivisorRecord* r = charted[i];
        if (!r || r->kind == RecordKind::StrictY) continue;
        if (g.exponents[i] < orders.required_orders.at(r->id)) return false;
    }
    return true;
}

bool monomial_membership_weighted(const SncModel& m, const ChartSpec& chart,
                                  const MonomialGerm& g, const Rational& epsilon) {
    require_valid(m, "monomial_membership_weighted");
    if (epsilon <= 0)
        throw std::invalid_argument("monomial_membership_weighted: epsilon > 0 required");
    if (!boundary_is_effective(m))
        throw std::invalid_argument(
            "monomial_membership_weighted: requires effective B");
    const auto charted = resolve_chart(m, chart, g, "monomial_membership_weighted");

    for (std::size_t i = 0; i < charted.size(); ++i) {
        const DivisorRecord* r = charted[i];
        if (!r) continue;  // free coordinate: lambda = 2a+1 >= -1 always
        if (r->kind == RecordKind::StrictY) continue;  // absorbed by the log^2 factor
        const Rational alpha(g.exponents[i]);
        const Rational b = r->mult_in_pullback_b;
        const Rational lambda = 2 * alpha - 2 * (1 + epsilon) * b -
                                2 * r->mult_in_pullback_y + 2 * r->rel_canonical + 1;
        if (b > 0) {
            if (lambda < -1) return false;
        } else {
            if (lambda <= -1) return false;
        }
    }
    return true;
}

bool is_trivial(const SncModel& m) { return vanishing_orders(m).all_zero(); }

std::optional<Rational> epsilon_threshold(const SncModel& m) {
    require_valid(m, "epsilon_threshold");
    if (!boundary_is_effective(m))
        throw std::invalid_argument("epsilon_threshold: requires effective B");
    std::optional<Rational> eps0;
    for (const auto& r : m.records) {
        if (r.kind == RecordKind::StrictY) continue;
        const Rational b = r.mult_in_pullback_b;
        if (b <= 0) continue;
        const Rational e = b + r.mult_in_pullback_y - r.rel_canonical;
        const Rational step = (floor_rational(e) + 1 - e) / b;
        if (!eps0 || step < *eps0) eps0 = step;
    }
    return eps0;
}

}  // namespace pairsing
