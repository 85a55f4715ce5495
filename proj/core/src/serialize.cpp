#include <pairsing/serialize.hpp>

#include <fstream>
#include <sstream>

namespace pairsing {

using nlohmann::json;

namespace {

Rational require_fraction(const json& j, const std::string& where) {
    if (!j.is_string())
        throw std::invalid_argument(where + ": expected a \"num/den\" string");
    auto q = parse_fraction(j.get<std::string>());
    if (!q) throw std::invalid_argument(where + ": malformed rational '" +
                                        j.get<std::string>() + "'");
    return *q;
}

std::string kind_to_string(const DivisorRecord& r) {
    switch (r.kind) {
        case RecordKind::StrictY: return "strict_y";
        case RecordKind::StrictB: return "strict_b:" + r.boundary_ref;
        case RecordKind::Exceptional: return "exceptional";
    }
    return "exceptional";
}

void kind_from_string(const std::string& s, DivisorRecord& r) {
    if (s == "strict_y") {
        r.kind = RecordKind::StrictY;
    } else if (s == "exceptional") {
        r.kind = RecordKind::Exceptional;
    } else if (s.rfind("strict_b:", 0) == 0) {
        r.kind = RecordKind::StrictB;
        r.boundary_ref = s.substr(9);
        if (r.boundary_ref.empty())
            throw std::invalid_argument("record kind: strict_b needs a component name");
    } else {
        throw std::invalid_argument("record kind: unknown tag '" + s + "'");
    }
}

}  // namespace

json divisor_to_json(const QDivisor& d) {
    json out = json::object();
    for (const auto& [p, c] : d.terms()) out[p.name] = to_fraction_string(c);
    return out;
}

QDivisor divisor_from_json(const json& j, const std::string& space) {
    if (!j.is_object()) throw std::invalid_argument("divisor: expected a JSON object");
    QDivisor d;
    for (auto it = j.begin(); it != j.end(); ++it) {
        d.add_term(PrimeId{it.key(), space}, require_fraction(it.value(), it.key()));
    }
    return d;
}

json model_to_json(const SncModel& m) {
    json boundary;
    boundary["y_id"] = m.boundary.y_id.name;
    json components = json::array();
    for (const auto& bc : m.boundary.components) {
        components.push_back(
            {{"id", bc.id.name}, {"coeff", to_fraction_string(bc.coeff)}});
    }
    boundary["components"] = std::move(components);

    json records = json::array();
    for (const auto& r : m.records) {
        json restriction = json::array();
        for (const auto& t : r.restriction_to_yprime) {
            restriction.push_back({{"curve", t.curve.name},
                                   {"mult", t.mult},
                                   {"image_codim", t.image_codim == ImageCodim::One ? 1 : 2}});
        }
        records.push_back({{"id", r.id.name},
                           {"kind", kind_to_string(r)},
                           {"c", to_fraction_string(r.mult_in_pullback_y)},
                           {"b_pullback", to_fraction_string(r.mult_in_pullback_b)},
                           {"rel_canonical", to_fraction_string(r.rel_canonical)},
                           {"restriction", std::move(restriction)}});
    }

    return json{{"boundary", std::move(boundary)},
                {"records", std::move(records)},
                {"x_smooth", m.x_smooth},
                {"volume_zeros", divisor_to_json(m.volume_zero_divisor)}};
}

SncModel model_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("model: expected a JSON object");
    SncModel m;

    const auto& boundary = j.at("boundary");
    m.boundary.y_id = on_x(boundary.at("y_id").get<std::string>());
    if (boundary.contains("components")) {
        for (const auto& bc : boundary.at("components")) {
            m.boundary.components.push_back(
                {on_x(bc.at("id").get<std::string>()),
                 require_fraction(bc.at("coeff"), "boundary coeff")});
        }
    }

    for (const auto& rj : j.at("records")) {
        DivisorRecord r;
        r.id = on_x_prime(rj.at("id").get<std::string>());
        kind_from_string(rj.at("kind").get<std::string>(), r);
        r.mult_in_pullback_y = require_fraction(rj.at("c"), r.id.name + ".c");
        r.mult_in_pullback_b =
            require_fraction(rj.at("b_pullback"), r.id.name + ".b_pullback");
        r.rel_canonical =
            require_fraction(rj.at("rel_canonical"), r.id.name + ".rel_canonical");
        if (rj.contains("restriction")) {
            for (const auto& tj : rj.at("restriction")) {
                RestrictionTerm t;
                t.curve = on_y_prime(tj.at("curve").get<std::string>());
                t.mult = tj.at("mult").get<std::int64_t>();
                const int codim = tj.at("image_codim").get<int>();
                if (codim < 1)
                    throw std::invalid_argument("restriction: image_codim must be >= 1");
                t.image_codim = codim == 1 ? ImageCodim::One : ImageCodim::Big;
                r.restriction_to_yprime.push_back(std::move(t));
            }
        }
        m.records.push_back(std::move(r));
    }

    m.x_smooth = j.at("x_smooth").get<bool>();
    if (j.contains("volume_zeros"))
        m.volume_zero_divisor = divisor_from_json(j.at("volume_zeros"), space::x_prime);
    return m;
}

SncModel model_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("model: JSON parse error: ") + e.what());
    }
    try {
        return model_from_json(j);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("model: schema error: ") + e.what());
    }
}

SncModel model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("model: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_string(buf.str());
}

}  // namespace pairsing
