#pragma once

// A log resolution f: X' -> X of a pair (X, Y+B), stored as pure coefficient
// and incidence data. The toolkit never computes resolutions of polynomials;
// models arrive as data, either from the built-in families below or from
// JSON (see serialize.hpp).

#include <pairsing/divisor.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pairsing {

enum class RecordKind { StrictY, StrictB, Exceptional };

// Codimension of a Y'-curve's image in the normalization of Y. Only the
// "is it still a divisor" bit matters, so >= 2 collapses to Big.
enum class ImageCodim { One, Big };

struct RestrictionTerm {
    PrimeId curve;          // prime divisor on Y'
    std::int64_t mult = 1;  // multiplicity of the curve in record|_{Y'}
    ImageCodim image_codim = ImageCodim::One;
};

// One prime divisor on X' with its pullback bookkeeping:
//   mult_in_pullback_y  = coefficient in f*Y        (the paper's c_i)
//   mult_in_pullback_b  = coefficient in f*B        (b_i-weighted pullback)
//   rel_canonical       = coefficient in K_{X'} - f*K_X   (the d_i)
struct DivisorRecord {
    PrimeId id;  // lives on space::x_prime
    RecordKind kind = RecordKind::Exceptional;
    std::string boundary_ref;  // for StrictB: id.name of the B_j downstairs
    Rational mult_in_pullback_y = 0;
    Rational mult_in_pullback_b = 0;
    Rational rel_canonical = 0;
    std::vector<RestrictionTerm> restriction_to_yprime;
};

struct BoundaryComponent {
    PrimeId id;  // lives on space::x
    Rational coeff;
};

// B = sum b_j B_j; Y itself is carried separately with implicit coefficient 1.
// Coefficients may be negative (B = B+ - B- is allowed).
struct BoundarySpec {
    PrimeId y_id{"Y", space::x};
    std::vector<BoundaryComponent> components;
};

struct SncModel {
    BoundarySpec boundary;
    std::vector<DivisorRecord> records;
    bool x_smooth = true;
    // Zeros of the reference volume form dV_X, pulled back to X'. Default
    // empty (strictly positive density).
    QDivisor volume_zero_divisor;

    const DivisorRecord* find_record(const std::string& name) const;
    const DivisorRecord* strict_y() const;
};

enum class Severity { Error, Warning };

struct Violation {
    Severity severity = Severity::Error;
    std::string rule;     // short machine-friendly tag
    std::string subject;  // record/component the rule fired on
    std::string detail;
};

// Empty list (modulo warnings) iff the model satisfies the structural
// invariants. Violations are data, not faults. The snc-ness of the restricted
// boundary is not decidable from coefficient data; it is recorded as a
// standing warning, never an error.
std::vector<Violation> validate(const SncModel& m);

inline bool has_errors(const std::vector<Violation>& vs) {
    for (const auto& v : vs)
        if (v.severity == Severity::Error) return true;
    return false;
}

std::string describe(const std::vector<Violation>& vs);

// Throws std::invalid_argument listing the violations when validate() finds
// errors. Internal entry guard for every operation whose precondition is a
// valid model.
void require_valid(const SncModel& m, const std::string& where);

// --- numerical pullback -----------------------------------------------------

// Solves intersection_matrix * c = -strict_dot_e exactly over the rationals.
// The matrix must be negative definite (checked via leading principal minors);
// the solution gives the mult_in_pullback_y coefficients of an exceptional
// chain. Throws std::invalid_argument otherwise.
std::vector<Rational> solve_pullback_coefficients(
    const std::vector<std::vector<std::int64_t>>& intersection_matrix,
    const std::vector<std::int64_t>& strict_dot_e);

// --- built-in families -------------------------------------------------------

// Smooth Y inside smooth X; the resolution is the identity.
SncModel identity_model();

struct ConeModelParams {
    int n = 2;             // ambient dimension, >= 2
    int d = 1;             // multiplicity of the cone point, >= 1
    int branch_count = 1;  // prime components of E ∩ Y'
};

// Single blowup of a cone point with smooth projectivized tangent cone
// (the Fermat cone qualifies): exceptional E with f*Y-multiplicity d and
// relative canonical n-1. For n = 2 the branches are points on the curve Y
// (image codimension 1, multiplicities summing to d); for n >= 3 they map to
// the cone point (codimension >= 2, reduced).
SncModel cone_blowup_model(const ConeModelParams& p);

// Fermat shorthand: branch_count d for surfaces, 1 in higher dimension.
SncModel fermat_cone_model(int n, int d);

// Minimal resolution of the A_{m-1} surface point xy = z^m, with Y one of the
// two axes. Crepant chain of m-1 (-2)-curves; pullback coefficients come from
// solve_pullback_coefficients. m = 1 degenerates to the identity model.
SncModel a_surface_model(int m);

// X = C^2, Y = (x=0), B = 2(x-y=0) - 2(x+y=0), one blowup of the origin.
// B restricts to the zero divisor on Y while the pair (X, Y+B) is not lc:
// the standard counterexample to inversion of adjunction for non-effective B.
SncModel kollar_example_model();

// Parses family shorthands: "fermat:n,d" | "node" | "a-surface:m" | "kollar".
std::optional<SncModel> parse_family_spec(const std::string& spec);

}  // namespace pairsing
