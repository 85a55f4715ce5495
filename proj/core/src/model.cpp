#include <pairsing/model.hpp>

#include <map>
#include <sstream>

namespace pairsing {

const DivisorRecord* SncModel::find_record(const std::string& name) const {
    for (const auto& r : records)
        if (r.id.name == name) return &r;
    return nullptr;
}

const DivisorRecord* SncModel::strict_y() const {
    for (const auto& r : records)
        if (r.kind == RecordKind::StrictY) return &r;
    return nullptr;
}

namespace {

void push(std::vector<Violation>& out, Severity sev, std::string rule,
          std::string subject, std::string detail) {
    out.push_back({sev, std::move(rule), std::move(subject), std::move(detail)});
}

}  // namespace

std::vector<Violation> validate(const SncModel& m) {
    std::vector<Violation> out;

    // boundary: Y must not reappear among the B_j
    std::map<std::string, Rational> boundary_coeffs;
    for (const auto& bc : m.boundary.components) {
        if (bc.id.name == m.boundary.y_id.name) {
            push(out, Severity::Error, "y-in-boundary", bc.id.name,
                 "Y appears among the boundary components");
        }
        if (!boundary_coeffs.emplace(bc.id.name, bc.coeff).second) {
            push(out, Severity::Error, "duplicate-boundary-component", bc.id.name,
                 "boundary component listed twice");
        }
    }

    int strict_y_count = 0;
    std::map<std::string, int> id_count;
    std::map<std::string, ImageCodim> curve_codim;

    for (const auto& r : m.records) {
        ++id_count[r.id.name];
        if (r.id.space != space::x_prime) {
            push(out, Severity::Error, "record-space", r.id.name,
                 "record ids must live on X'");
        }
        switch (r.kind) {
            case RecordKind::StrictY: {
                ++strict_y_count;
                if (r.mult_in_pullback_y != 1)
                    push(out, Severity::Error, "strict-y-pullback", r.id.name,
                         "strict transform of Y must have coefficient 1 in f*Y");
                if (r.mult_in_pullback_b != 0)
                    push(out, Severity::Error, "strict-y-b-pullback", r.id.name,
                         "strict transform of Y carries no f*B multiplicity");
                if (!r.restriction_to_yprime.empty())
                    push(out, Severity::Error, "strict-y-self-restriction", r.id.name,
                         "restriction of Y' to itself is not modeled");
                break;
            }
            case RecordKind::StrictB: {
                if (boundary_coeffs.find(r.boundary_ref) == boundary_coeffs.end())
                    push(out, Severity::Error, "dangling-strict-b", r.id.name,
                         "strict transform of unknown boundary component '" +
                             r.boundary_ref + "'");
                else if (r.mult_in_pullback_b != boundary_coeffs.at(r.boundary_ref))
                    push(out, Severity::Error, "strict-b-coefficient", r.id.name,
                         "strict transform of B_j must carry b_j in f*B");
                break;
            }
            case RecordKind::Exceptional:
                break;
        }
        if (r.mult_in_pullback_y < 0)
            push(out, Severity::Error, "negative-pullback-multiplicity", r.id.name,
                 "coefficient in f*Y must be nonnegative");
        if (m.x_smooth) {
            if (r.rel_canonical < 0)
                push(out, Severity::Error, "negative-relative-canonical", r.id.name,
                     "relative canonical is nonnegative over smooth X");
            if (!is_integer(r.rel_canonical))
                push(out, Severity::Error, "fractional-relative-canonical", r.id.name,
                     "relative canonical is an integer over smooth X");
            if (r.kind != RecordKind::Exceptional && r.rel_canonical != 0)
                push(out, Severity::Error, "strict-transform-discrepancy", r.id.name,
                     "strict transforms are not exceptional: rel_canonical must be 0");
        }
        for (const auto& t : r.restriction_to_yprime) {
            if (t.curve.space != space::y_prime)
                push(out, Severity::Error, "restriction-space", r.id.name,
                     "restriction curves must live on Y'");
            if (t.mult <= 0)
                push(out, Severity::Error, "nonpositive-restriction-multiplicity",
                     r.id.name, "restriction multiplicities are positive integers");
            auto [it, inserted] = curve_codim.emplace(t.curve.name, t.image_codim);
            if (!inserted && it->second != t.image_codim)
                push(out, Severity::Error, "inconsistent-image-codim", t.curve.name,
                     "curve declared with two different image codimensions");
        }
    }

    if (strict_y_count == 0)
        push(out, Severity::Error, "missing-strict-transform", m.boundary.y_id.name,
             "model carries no strict transform of Y");
    if (strict_y_count > 1)
        push(out, Severity::Error, "duplicate-strict-transform", m.boundary.y_id.name,
             "model carries more than one strict transform of Y");
    for (const auto& [name, count] : id_count) {
        if (count > 1)
            push(out, Severity::Error, "duplicate-record-id", name,
                 "record id appears more than once");
    }
    if (auto zspace = m.volume_zero_divisor.space();
        zspace && *zspace != space::x_prime)
        push(out, Severity::Error, "volume-zeros-space", *zspace,
             "volume zero divisor lives on X'");
    if (!m.volume_zero_divisor.is_effective())
        push(out, Severity::Error, "volume-zeros-negative", "volume_zeros",
             "volume zero divisor must be effective");
    for (const auto& [p, c] : m.volume_zero_divisor.terms()) {
        if (!m.find_record(p.name))
            push(out, Severity::Error, "volume-zeros-unknown-record", p.name,
                 "volume zero divisor supported outside the records");
    }

    // not decidable from coefficient data; trust-the-caller precondition
    push(out, Severity::Warning, "snc-not-verified", "model",
         "snc-ness of the restricted boundary is assumed, not checked");

    return out;
}

std::string describe(const std::vector<Violation>& vs) {
    std::ostringstream os;
    for (const auto& v : vs) {
        os << (v.severity == Severity::Error ? "error" : "warning") << " [" << v.rule
           << "] " << v.subject << ": " << v.detail << "\n";
    }
    return os.str();
}

void require_valid(const SncModel& m, const std::string& where) {
    auto vs = validate(m);
    if (has_errors(vs))
        throw std::invalid_argument(where + ": invalid model\n" + describe(vs));
}

// --- exact linear algebra ----------------------------------------------------

namespace {

// Determinant of the leading k x k minor, exact rational Gaussian elimination.
Rational leading_minor_det(const std::vector<std::vector<Rational>>& a, std::size_t k) {
    std::vector<std::vector<Rational>> w(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) w[i][j] = a[i][j];
    Rational det(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && w[pivot][col] == 0) ++pivot;
        if (pivot == k) return Rational(0);
        if (pivot != col) {
            std::swap(w[pivot], w[col]);
            det = -det;
        }
        det *= w[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (w[row][col] == 0) continue;
            Rational factor = w[row][col] / w[col][col];
            for (std::size_t j = col; j < k; ++j) w[row][j] -= factor * w[col][j];
        }
    }
    return det;
}

}  // namespace

std::vector<Rational> solve_pullback_coefficients(
    const std::vector<std::vector<std::int64_t>>& intersection_matrix,
    const std::vector<std::int64_t>& strict_dot_e) {
    const std::size_t n = intersection_matrix.size();
    if (n == 0) return {};
    if (strict_dot_e.size() != n)
        throw std::invalid_argument("solve_pullback_coefficients: size mismatch");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (intersection_matrix[i].size() != n)
            throw std::invalid_argument("solve_pullback_coefficients: matrix not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = intersection_matrix[i][j];
    }

    // negative definite <=> (-1)^k det(M_k) > 0 for all leading minors
    for (std::size_t k = 1; k <= n; ++k) {
        Rational det = leading_minor_det(a, k);
        if (k % 2 == 1) det = -det;
        if (det <= 0)
            throw std::invalid_argument(
                "solve_pullback_coefficients: intersection matrix is not negative definite");
    }

    // augmented elimination on M c = -v
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = Rational(-strict_dot_e[i]);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (a[pivot][col] == 0) ++pivot;  // nonsingular by the minor check
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = rhs[i] / a[i][i];
    return c;
}

}  // namespace pairsing
