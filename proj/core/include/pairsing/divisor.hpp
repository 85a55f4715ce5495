#pragma once

// Formal Q-divisors: finite sums of named prime divisors with exact rational
// coefficients. A divisor lives on one ambient space ("namespace"); mixing
// spaces in arithmetic is a caller error.

#include <pairsing/rational.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pairsing {

// Well-known ambient space tags used throughout the toolkit.
namespace space {
inline const std::string x = "X";         // the base
inline const std::string x_prime = "X'";  // the log resolution
inline const std::string y_prime = "Y'";  // strict transform of Y
inline const std::string y_nu = "Ynu";    // normalization of Y
}  // namespace space

struct PrimeId {
    std::string name;
    std::string space;

    friend auto operator<=>(const PrimeId&, const PrimeId&) = default;
};

inline PrimeId on_x(std::string name) { return {std::move(name), space::x}; }
inline PrimeId on_x_prime(std::string name) { return {std::move(name), space::x_prime}; }
inline PrimeId on_y_prime(std::string name) { return {std::move(name), space::y_prime}; }
inline PrimeId on_y_nu(std::string name) { return {std::move(name), space::y_nu}; }

// Map ordering is (space, name); within a single divisor the space is
// uniform, so iteration order is name order. Zero coefficients are never
// stored.
class QDivisor {
  public:
    using TermMap = std::map<PrimeId, Rational>;

    QDivisor() = default;
    explicit QDivisor(std::initializer_list<std::pair<PrimeId, Rational>> terms);

    // Adds c to the coefficient of p, pruning zeros. Throws on space mismatch
    // with existing terms.
    void add_term(const PrimeId& p, const Rational& c);

    const Rational& coeff(const PrimeId& p) const;  // 0 for absent keys
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Space shared by all terms; nullopt for the empty divisor.
    std::optional<std::string> space() const;

    std::vector<PrimeId> support() const;

    bool is_effective() const;  // all coefficients >= 0
    bool has_integer_coefficients() const;

    friend bool operator==(const QDivisor&, const QDivisor&) = default;

  private:
    TermMap terms_;
};

QDivisor add(const QDivisor& a, const QDivisor& b);
QDivisor scale(const Rational& c, const QDivisor& a);

inline QDivisor operator+(const QDivisor& a, const QDivisor& b) { return add(a, b); }
inline QDivisor operator*(const Rational& c, const QDivisor& a) { return scale(c, a); }
inline QDivisor operator-(const QDivisor& a) { return scale(Rational(-1), a); }
inline QDivisor operator-(const QDivisor& a, const QDivisor& b) { return add(a, -b); }

// Coefficient-wise floor; the result has integer coefficients (and zero terms
// pruned, so floors landing on 0 vanish from the support).
QDivisor floor_divisor(const QDivisor& a);

// Largest coefficient together with one prime attaining it; ties broken by
// name order. The empty divisor reports (0, nullopt).
std::pair<Rational, std::optional<PrimeId>> max_coefficient(const QDivisor& a);

std::string to_string(const PrimeId& p);
std::string to_string(const QDivisor& d);

}  // namespace pairsing
