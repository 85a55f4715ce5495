#include <pairsing/classify.hpp>

namespace pairsing {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Klt: return "KLT";
        case Verdict::Plt: return "PLT";
        case Verdict::LC: return "LC";
        case Verdict::NotLC: return "NOT_LC";
    }
    return "NOT_LC";
}

QDivisor delta_prime(const SncModel& m) {
    require_valid(m, "delta_prime");
    QDivisor out;
    for (const auto& r : m.records) {
        out.add_term(r.id,
                     r.mult_in_pullback_y + r.mult_in_pullback_b - r.rel_canonical);
    }
    return out;
}

Rational discrepancy(const SncModel& m, const PrimeId& e) {
    if (!m.find_record(e.name))
        throw std::invalid_argument("discrepancy: unknown divisor '" + e.name + "'");
    return -delta_prime(m).coeff(on_x_prime(e.name));
}

PairClass classify_pair(const SncModel& m) {
    require_valid(m, "classify_pair");

    // scan all records except Y' for the largest Delta_{X'} coefficient,
    // zero coefficients included (unlike a pruned QDivisor), ties by name
    std::optional<Rational> worst;
    std::optional<PrimeId> worst_id;
    for (const auto& r : m.records) {
        if (r.kind == RecordKind::StrictY) continue;
        const Rational c =
            r.mult_in_pullback_y + r.mult_in_pullback_b - r.rel_canonical;
        if (!worst || c > *worst || (c == *worst && r.id.name < worst_id->name)) {
            worst = c;
            worst_id = r.id;
        }
    }

    PairClass out;
    if (!worst) {
        // nothing beyond Y' in the model: plt, with the distinguished divisor
        // as witness
        out.verdict = Verdict::Plt;
        out.witness = m.strict_y()->id;
        out.witness_discrepancy = Rational(-1);
        return out;
    }
    out.witness = worst_id;
    out.witness_discrepancy = -*worst;
    if (*worst > 1) {
        out.verdict = Verdict::NotLC;
    } else if (*worst == 1) {
        out.verdict = Verdict::LC;
    } else {
        out.verdict = Verdict::Plt;
    }
    return out;
}

PairClass classify_absolute(const QDivisor& boundary) {
    PairClass out;
    if (boundary.empty()) {
        out.verdict = Verdict::Klt;
        return out;
    }
    const auto [worst, worst_id] = max_coefficient(boundary);
    out.witness = worst_id;
    out.witness_discrepancy = -worst;
    if (worst > 1) {
        out.verdict = Verdict::NotLC;
    } else if (worst == 1) {
        out.verdict = Verdict::LC;
    } else {
        out.verdict = Verdict::Klt;
    }
    return out;
}

}  // namespace pairsing
