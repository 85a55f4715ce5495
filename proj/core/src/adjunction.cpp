#include <pairsing/adjunction.hpp>

namespace pairsing {

RestrictedDivisor restrict_to_yprime(const SncModel& m, const QDivisor& d) {
    RestrictedDivisor out;
    const DivisorRecord* y = m.strict_y();
    for (const auto& [p, c] : d.terms()) {
        if (y && p.name == y->id.name)
            throw std::invalid_argument(
                "restrict_to_yprime: restriction of Y' to itself is not modeled");
        const DivisorRecord* r = m.find_record(p.name);
        if (!r)
            throw std::invalid_argument("restrict_to_yprime: unknown divisor '" +
                                        p.name + "'");
        for (const auto& t : r->restriction_to_yprime) {
            const Rational contribution = c * Rational(t.mult);
            out.on_yprime.add_term(t.curve, contribution);
            out.provenance[t.curve].add_term(p, contribution);
        }
    }
    return out;
}

QDivisor pushforward_to_ynu(const SncModel& m, const RestrictedDivisor& r) {
    // codimension tags are validated globally consistent, so one lookup per
    // curve suffices
    std::map<std::string, ImageCodim> codim;
    for (const auto& rec : m.records)
        for (const auto& t : rec.restriction_to_yprime)
            codim.emplace(t.curve.name, t.image_codim);

    QDivisor out;
    for (const auto& [curve, c] : r.on_yprime.terms()) {
        auto it = codim.find(curve.name);
        if (it == codim.end() || it->second != ImageCodim::One) continue;
        out.add_term(on_y_nu(curve.name), c);
    }
    return out;
}

RestrictedDivisor gamma_on_yprime(const SncModel& m) {
    require_valid(m, "gamma_on_yprime");
    QDivisor delta = delta_prime(m);
    const DivisorRecord* y = m.strict_y();
    delta.add_term(y->id, -delta.coeff(y->id));
    return restrict_to_yprime(m, delta);
}

QDivisor different(const SncModel& m) {
    return pushforward_to_ynu(m, gamma_on_yprime(m));
}

SncModel strip_boundary(const SncModel& m) {
    SncModel out = m;
    for (auto& bc : out.boundary.components) bc.coeff = 0;
    for (auto& r : out.records) r.mult_in_pullback_b = 0;
    return out;
}

bool diff_decomposition_check(const SncModel& m) {
    require_valid(m, "diff_decomposition_check");

    const QDivisor diff_b = different(m);
    const QDivisor diff_0 = different(strip_boundary(m));

    QDivisor pullback_b;
    for (const auto& r : m.records) pullback_b.add_term(r.id, r.mult_in_pullback_b);
    const QDivisor b_part = pushforward_to_ynu(m, restrict_to_yprime(m, pullback_b));

    return diff_b == diff_0 + b_part;
}

bool boundary_is_effective(const SncModel& m) {
    for (const auto& bc : m.boundary.components)
        if (bc.coeff < 0) return false;
    for (const auto& r : m.records)
        if (r.mult_in_pullback_b < 0) return false;
    return true;
}

InversionReport inversion_check(const SncModel& m) {
    require_valid(m, "inversion_check");
    InversionReport out;
    out.klt_of_different = classify_absolute(gamma_on_yprime(m).on_yprime);
    out.plt_near_y = classify_pair(m);
    out.applicable = boundary_is_effective(m);
    out.consistent = (out.klt_of_different.verdict == Verdict::Klt) ==
                     (out.plt_near_y.verdict >= Verdict::Plt);
    return out;
}

}  // namespace pairsing
