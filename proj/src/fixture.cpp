#include "mku/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mku/errors.hpp"

namespace mku {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json const & need(json const & j, char const * key) {
    auto it = j.find(key);
    if (it == j.end())
        throw invalid_fixture(std::string("fixture is missing \"") + key + "\"");
    return *it;
}

std::string need_string(json const & j, char const * key) {
    json const & v = need(j, key);
    if (!v.is_string() || v.get<std::string>().empty())
        throw invalid_fixture(std::string("fixture \"") + key +
                              "\" must be a nonempty string");
    return v.get<std::string>();
}

/* Integer coefficient: a JSON integer, or a decimal string for values
 * beyond what JSON numbers carry exactly. */
mpz_class parse_coefficient(json const & v) {
    if (v.is_number_integer())
        return mpz_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        mpz_class z;
        if (z.set_str(v.get<std::string>(), 10) != 0)
            throw invalid_fixture("min_poly entry is not an integer: " +
                                  v.get<std::string>());
        return z;
    }
    throw invalid_fixture("min_poly entries must be integers");
}

RatPoly parse_coordinates(json const & v, char const * what) {
    if (!v.is_array())
        throw invalid_fixture(std::string(what) +
                              " must be an array of rational strings");
    RatPoly out;
    for (json const & c : v) {
        if (!c.is_string())
            throw invalid_fixture(std::string(what) +
                                  " coordinates must be rational strings");
        out.push_back(parse_rational(c.get<std::string>()));
    }
    if (out.empty())
        throw invalid_fixture(std::string(what) + " has no coordinates");
    return out;
}

} // namespace

Fixture parse_fixture(std::string const & text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw invalid_fixture("fixture is not valid json");
    if (!j.is_object())
        throw invalid_fixture("fixture is not a json object");

    Fixture fx;
    fx.label = need_string(j, "label");

    json const & mp = need(j, "min_poly");
    if (!mp.is_array() || mp.size() < 3)
        throw invalid_fixture("min_poly must be an array of degree at least 2");
    for (json const & c : mp)
        fx.min_poly.push_back(parse_coefficient(c));

    json const & us = need(j, "units");
    if (!us.is_array())
        throw invalid_fixture("units must be an array");
    for (json const & u : us)
        fx.units.push_back(parse_coordinates(u, "unit"));

    if (auto it = j.find("subfields"); it != j.end()) {
        if (!it->is_array())
            throw invalid_fixture("subfields must be an array");
        for (json const & s : *it) {
            if (!s.is_object())
                throw invalid_fixture("each subfield must be an object");
            SubfieldSpec spec;
            spec.label = need_string(s, "label");
            spec.generator = parse_coordinates(need(s, "generator"), "generator");
            fx.subfields.push_back(std::move(spec));
        }
    }

    for (std::size_t a = 0; a < fx.subfields.size(); ++a)
        for (std::size_t b = a + 1; b < fx.subfields.size(); ++b)
            if (fx.subfields[a].label == fx.subfields[b].label)
                throw invalid_fixture("duplicate subfield label: " +
                                      fx.subfields[a].label);
    return fx;
}

Fixture load_fixture(std::string const & path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_fixture("cannot read fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

std::string fixture_json(Fixture const & fx) {
    ordered_json j;
    j["label"] = fx.label;
    j["min_poly"] = ordered_json::array();
    for (mpz_class const & c : fx.min_poly) {
        if (c.fits_slong_p())
            j["min_poly"].push_back(c.get_si());
        else
            j["min_poly"].push_back(c.get_str());
    }
    j["units"] = ordered_json::array();
    for (RatPoly const & u : fx.units) {
        ordered_json row = ordered_json::array();
        for (mpq_class const & c : u)
            row.push_back(rational_string(c));
        j["units"].push_back(std::move(row));
    }
    j["subfields"] = ordered_json::array();
    for (SubfieldSpec const & s : fx.subfields) {
        ordered_json row;
        row["label"] = s.label;
        row["generator"] = ordered_json::array();
        for (mpq_class const & c : s.generator)
            row["generator"].push_back(rational_string(c));
        j["subfields"].push_back(std::move(row));
    }
    return j.dump(2);
}

FieldContext::FieldContext(Fixture const & fx, mpfr_prec_t prec)
    : field(fx.label, fx.min_poly),
      group(recover_automorphisms(
          field, PrecisionPolicy{prec, std::max<mpfr_prec_t>(
                                           prec, PrecisionPolicy{}.ceiling)})),
      places(compute_places(field, prec)) {
    for (RatPoly const & u : fx.units) {
        FieldElement e(field, u);
        if (!is_unit(e))
            throw invalid_fixture("declared unit is not a unit in " + fx.label);
        units.push_back(std::move(e));
    }
}

FieldElement subfield_generator(FieldContext const & ctx, Fixture const & fx,
                                std::string const & label) {
    for (SubfieldSpec const & s : fx.subfields)
        if (s.label == label)
            return FieldElement(ctx.field, s.generator);
    throw invalid_fixture("fixture has no subfield labeled " + label);
}

} // namespace mku
