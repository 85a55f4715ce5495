#include <pairsing/model.hpp>

#include <charconv>
#include <string_view>

namespace pairsing {

SncModel identity_model() {
    SncModel m;
    m.x_smooth = true;
    DivisorRecord y;
    y.id = on_x_prime("Y'");
    y.kind = RecordKind::StrictY;
    y.mult_in_pullback_y = 1;
    m.records.push_back(std::move(y));
    return m;
}

SncModel cone_blowup_model(const ConeModelParams& p) {
    if (p.n < 2) throw std::invalid_argument("cone_blowup_model: n >= 2 required");
    if (p.d < 1) throw std::invalid_argument("cone_blowup_model: d >= 1 required");
    if (p.branch_count < 1)
        throw std::invalid_argument("cone_blowup_model: branch_count >= 1 required");

    // total multiplicity of E|_{Y'}: the intersection number d on a surface,
    // reduced components over the cone point in higher dimension
    const int total = p.n == 2 ? p.d : p.branch_count;
    if (total % p.branch_count != 0)
        throw std::invalid_argument(
            "cone_blowup_model: branch_count must divide the total multiplicity");
    const int mult_each = total / p.branch_count;

    SncModel m;
    m.x_smooth = true;

    DivisorRecord y;
    y.id = on_x_prime("Y'");
    y.kind = RecordKind::StrictY;
    y.mult_in_pullback_y = 1;
    m.records.push_back(std::move(y));

    DivisorRecord e;
    e.id = on_x_prime("E");
    e.kind = RecordKind::Exceptional;
    e.mult_in_pullback_y = p.d;
    e.rel_canonical = p.n - 1;
    for (int i = 1; i <= p.branch_count; ++i) {
        RestrictionTerm t;
        t.curve = on_y_prime((p.n == 2 ? "p" : "gamma") + std::to_string(i));
        t.mult = mult_each;
        t.image_codim = p.n == 2 ? ImageCodim::One : ImageCodim::Big;
        e.restriction_to_yprime.push_back(std::move(t));
    }
    m.records.push_back(std::move(e));
    return m;
}

SncModel fermat_cone_model(int n, int d) {
    ConeModelParams p;
    p.n = n;
    p.d = d;
    p.branch_count = n == 2 ? d : 1;
    return cone_blowup_model(p);
}

SncModel a_surface_model(int m) {
    if (m < 1) throw std::invalid_argument("a_surface_model: m >= 1 required");
    if (m == 1) return identity_model();

    const int k = m - 1;  // length of the (-2)-chain
    std::vector<std::vector<std::int64_t>> mat(k, std::vector<std::int64_t>(k, 0));
    for (int i = 0; i < k; ++i) {
        mat[i][i] = -2;
        if (i > 0) mat[i][i - 1] = 1;
        if (i + 1 < k) mat[i][i + 1] = 1;
    }
    std::vector<std::int64_t> strict_dot(k, 0);
    strict_dot[0] = 1;  // Y' meets only the first curve of the chain
    const auto c = solve_pullback_coefficients(mat, strict_dot);

    SncModel model;
    model.x_smooth = false;

    DivisorRecord y;
    y.id = on_x_prime("Y'");
    y.kind = RecordKind::StrictY;
    y.mult_in_pullback_y = 1;
    model.records.push_back(std::move(y));

    for (int i = 0; i < k; ++i) {
        DivisorRecord e;
        e.id = on_x_prime("E" + std::to_string(i + 1));
        e.kind = RecordKind::Exceptional;
        e.mult_in_pullback_y = c[i];
        e.rel_canonical = 0;  // minimal resolution of a Du Val point is crepant
        if (i == 0) {
            RestrictionTerm t;
            t.curve = on_y_prime("p");
            t.mult = 1;
            t.image_codim = ImageCodim::One;
            e.restriction_to_yprime.push_back(std::move(t));
        }
        model.records.push_back(std::move(e));
    }
    return model;
}

SncModel kollar_example_model() {
    SncModel m;
    m.x_smooth = true;
    m.boundary.y_id = on_x("Y");
    m.boundary.components.push_back({on_x("H1"), Rational(2)});
    m.boundary.components.push_back({on_x("H2"), Rational(-2)});

    DivisorRecord y;
    y.id = on_x_prime("Y'");
    y.kind = RecordKind::StrictY;
    y.mult_in_pullback_y = 1;
    m.records.push_back(std::move(y));

    DivisorRecord h1;
    h1.id = on_x_prime("H1'");
    h1.kind = RecordKind::StrictB;
    h1.boundary_ref = "H1";
    h1.mult_in_pullback_b = 2;
    m.records.push_back(std::move(h1));

    DivisorRecord h2;
    h2.id = on_x_prime("H2'");
    h2.kind = RecordKind::StrictB;
    h2.boundary_ref = "H2";
    h2.mult_in_pullback_b = -2;
    m.records.push_back(std::move(h2));

    // all three lines pass through the origin once, so f*B picks up
    // (2 - 2) E = 0 and f*Y picks up E
    DivisorRecord e;
    e.id = on_x_prime("E");
    e.kind = RecordKind::Exceptional;
    e.mult_in_pullback_y = 1;
    e.mult_in_pullback_b = 0;
    e.rel_canonical = 1;
    e.restriction_to_yprime.push_back({on_y_prime("p"), 1, ImageCodim::One});
    m.records.push_back(std::move(e));
    return m;
}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

std::optional<SncModel> parse_family_spec(const std::string& spec) {
    if (spec == "node") return fermat_cone_model(2, 2);
    if (spec == "kollar") return kollar_example_model();
    if (spec.rfind("fermat:", 0) == 0) {
        std::string_view rest(spec);
        rest.remove_prefix(7);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) return std::nullopt;
        auto n = parse_int(rest.substr(0, comma));
        auto d = parse_int(rest.substr(comma + 1));
        if (!n || !d || *n < 2 || *d < 1) return std::nullopt;
        return fermat_cone_model(*n, *d);
    }
    if (spec.rfind("a-surface:", 0) == 0) {
        auto m = parse_int(std::string_view(spec).substr(10));
        if (!m || *m < 1) return std::nullopt;
        return a_surface_model(*m);
    }
    return std::nullopt;
}

}  // namespace pairsing
