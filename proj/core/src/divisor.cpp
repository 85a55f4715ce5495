#include <pairsing/divisor.hpp>

#include <sstream>

namespace pairsing {

std::string to_fraction_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

std::optional<Rational> parse_fraction(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        BigInt n(num), d(den);
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

QDivisor::QDivisor(std::initializer_list<std::pair<PrimeId, Rational>> terms) {
    for (const auto& [p, c] : terms) add_term(p, c);
}

void QDivisor::add_term(const PrimeId& p, const Rational& c) {
    if (p.name.empty()) throw std::invalid_argument("QDivisor: empty prime name");
    if (!terms_.empty() && terms_.begin()->first.space != p.space) {
        throw std::invalid_argument("QDivisor: namespace mismatch: '" + p.space +
                                    "' vs '" + terms_.begin()->first.space + "'");
    }
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

const Rational& QDivisor::coeff(const PrimeId& p) const {
    static const Rational zero(0);
    auto it = terms_.find(p);
    return it == terms_.end() ? zero : it->second;
}

std::optional<std::string> QDivisor::space() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.space;
}

std::vector<PrimeId> QDivisor::support() const {
    std::vector<PrimeId> out;
    out.reserve(terms_.size());
    for (const auto& [p, c] : terms_) out.push_back(p);
    return out;
}

bool QDivisor::is_effective() const {
    for (const auto& [p, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool QDivisor::has_integer_coefficients() const {
    for (const auto& [p, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

QDivisor add(const QDivisor& a, const QDivisor& b) {
    if (!a.empty() && !b.empty() && *a.space() != *b.space()) {
        throw std::invalid_argument("add: namespace mismatch: '" + *a.space() +
                                    "' vs '" + *b.space() + "'");
    }
    QDivisor out = a;
    for (const auto& [p, c] : b.terms()) out.add_term(p, c);
    return out;
}

QDivisor scale(const Rational& c, const QDivisor& a) {
    QDivisor out;
    if (c == 0) return out;
    for (const auto& [p, v] : a.terms()) out.add_term(p, c * v);
    return out;
}

QDivisor floor_divisor(const QDivisor& a) {
    QDivisor out;
    for (const auto& [p, v] : a.terms()) out.add_term(p, floor_rational(v));
    return out;
}

std::pair<Rational, std::optional<PrimeId>> max_coefficient(const QDivisor& a) {
    if (a.empty()) return {Rational(0), std::nullopt};
    auto best = a.terms().begin();
    for (auto it = std::next(best); it != a.terms().end(); ++it) {
        // strictly greater: name order already favors the earlier key on ties
        if (it->second > best->second) best = it;
    }
    return {best->second, best->first};
}

std::string to_string(const PrimeId& p) { return p.name; }

std::string to_string(const QDivisor& d) {
    if (d.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : d.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_fraction_string(c) << "*[" << p.name << "]";
    }
    return os.str();
}

}  // namespace pairsing
