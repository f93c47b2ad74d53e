#include "sie/json_io.hpp"

#include <stdexcept>

namespace sie {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const Sequence& s) {
    json arr = json::array();
    for (const Rational& r : s) arr.push_back(r.str());
    return arr;
}

json to_json(const DifferenceTriangle& t) {
    json rows = json::array();
    for (const Sequence& row : t.rows) rows.push_back(to_json(row));
    return {{"orientation",
             t.orientation == DifferenceTriangle::Orientation::difference ? "difference"
                                                                          : "rotated"},
            {"rows", rows}};
}

json to_json(const SubsetFunction& f) {
    return {{"w", f.ground_set_size}, {"values", to_json(f.values)}};
}

json to_json(const UrnSpec& spec) {
    json arr = json::array();
    for (const Urn& u : spec.urns) arr.push_back({{"r", u.red.str()}, {"b", u.black.str()}});
    return arr;
}

json to_json(const SimulationReport& r) {
    return {{"trials", r.trials},   {"successes", r.successes}, {"estimate", r.estimate},
            {"exact", r.exact.str()}, {"z_score", r.z_score},     {"seed", r.seed},
            {"workers", r.workers}};
}

json to_json(const HypergeometricSpec& spec) {
    return {{"upper", to_json(spec.upper)}, {"lower", to_json(spec.lower)},
            {"x", spec.argument.str()}};
}

json to_json(const PowerSeries& s) { return to_json(s.coefficients()); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw std::invalid_argument("expected a rational string or integer");
}

Sequence sequence_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
    Sequence s;
    s.reserve(j.size());
    for (const json& v : j) s.push_back(rational_from_json(v));
    return s;
}

DifferenceTriangle triangle_from_json(const json& j) {
    DifferenceTriangle t;
    const std::string orientation = j.at("orientation").get<std::string>();
    if (orientation == "difference")
        t.orientation = DifferenceTriangle::Orientation::difference;
    else if (orientation == "rotated")
        t.orientation = DifferenceTriangle::Orientation::rotated;
    else
        throw std::invalid_argument("unknown orientation: " + orientation);
    for (const json& row : j.at("rows")) t.rows.push_back(sequence_from_json(row));
    return t;
}

SubsetFunction subset_function_from_json(const json& j) {
    return SubsetFunction(j.at("w").get<int>(), sequence_from_json(j.at("values")));
}

UrnSpec urn_spec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of urns");
    UrnSpec spec;
    for (const json& u : j)
        spec.urns.push_back({rational_from_json(u.at("r")), rational_from_json(u.at("b"))});
    return spec;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = text.find(sep);
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return parts;
}

}  // namespace

Sequence parse_sequence(std::string_view csv) {
    Sequence s;
    for (std::string_view part : split(csv, ',')) s.push_back(Rational::parse(part));
    return s;
}

UrnSpec parse_urns(std::string_view text) {
    UrnSpec spec;
    for (std::string_view part : split(text, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("urn spec entries must look like r:b");
        spec.urns.push_back(
            {Rational::parse(part.substr(0, colon)), Rational::parse(part.substr(colon + 1))});
    }
    return spec;
}

FiniteIndexSet parse_index_set(std::string_view csv) {
    std::vector<long> members;
    for (std::string_view part : split(csv, ',')) {
        const Rational r = Rational::parse(part);
        if (!r.is_integer()) throw std::invalid_argument("index set entries must be integers");
        members.push_back(r.numerator().get_si());
    }
    return FiniteIndexSet(std::move(members));
}

}  // namespace sie
