#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mku/driver.hpp"
#include "mku/errors.hpp"
#include "mku/fixture.hpp"

using namespace mku;
using nlohmann::json;

namespace {

std::string fixture_path(char const * name) {
    return std::string(MKU_FIXTURE_DIR) + "/" + name;
}

std::string write_temp(std::string const & name, std::string const & body) {
    std::ofstream out(name);
    out << body;
    return name;
}

Fixture corpus_fixture(std::string const & label) {
    for (Fixture const & f : bundled_corpus())
        if (f.label == label)
            return f;
    throw std::runtime_error("no such corpus fixture");
}

RunOptions options_for(std::string const & path) {
    RunOptions opt;
    opt.field_path = path;
    return opt;
}

} // namespace

TEST_CASE("fixture serialization round trips") {
    for (Fixture const & fx : bundled_corpus()) {
        Fixture back = parse_fixture(fixture_json(fx));
        CHECK(back == fx);
    }
}

TEST_CASE("fixture parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_fixture("{"), invalid_fixture);
    CHECK_THROWS_AS(parse_fixture("[]"), invalid_fixture);
    CHECK_THROWS_AS(parse_fixture(R"({"min_poly": [-2, 0, 1], "units": []})"),
                    invalid_fixture);
    CHECK_THROWS_AS(parse_fixture(R"({"label": "x", "min_poly": [3, 1], "units": []})"),
                    invalid_fixture);
    CHECK_THROWS_AS(
        parse_fixture(R"({"label": "x", "min_poly": [-2, "zero", 1], "units": []})"),
        invalid_fixture);
    CHECK_THROWS_AS(
        parse_fixture(R"({"label": "x", "min_poly": [-2, 0, 1], "units": [[1, 1]]})"),
        invalid_fixture);
    CHECK_THROWS_AS(
        parse_fixture(R"({"label": "x", "min_poly": [-2, 0, 1], "units": [["1/q"]]})"),
        invalid_fixture);
    CHECK_THROWS_AS(
        parse_fixture(
            R"({"label": "x", "min_poly": [-2, 0, 1], "units": [], "subfields": [{"label": "s"}]})"),
        invalid_fixture);
    CHECK_THROWS_AS(
        parse_fixture(
            R"({"label": "x", "min_poly": [-2, 0, 1], "units": [], "subfields": [{"label": "s", "generator": ["0", "1"]}, {"label": "s", "generator": ["0", "2"]}]})"),
        invalid_fixture);
}

TEST_CASE("fixture files on disk match the bundled corpus") {
    for (char const * name : {"sqrt2", "sqrt5", "biquad", "zeta5", "zeta20"}) {
        Fixture disk = load_fixture(fixture_path((std::string(name) + ".json").c_str()));
        CHECK(disk == corpus_fixture(name));
    }
    Fixture extra = load_fixture(fixture_path("sqrt3.json"));
    CHECK(extra.label == "sqrt3");
    FieldContext ctx(extra, 128);
    CHECK(ctx.places.count() == 2);
}

TEST_CASE("field context validates declared units") {
    Fixture bad{"sqrt2", {-2, 0, 1}, {{mpq_class(2)}}, {}};
    CHECK_THROWS_AS(FieldContext(bad, 128), invalid_fixture);

    Fixture good = corpus_fixture("biquad");
    FieldContext ctx(good, 128);
    CHECK(ctx.units.size() == 3);
    CHECK_THROWS_AS(subfield_generator(ctx, good, "sqrt7"), invalid_fixture);
}

TEST_CASE("info reports the field shape") {
    RunResult r = run_info(options_for(fixture_path("sqrt2.json")));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["degree"] == 2);
    CHECK(j["place_count"] == 2);
    CHECK(j["real_places"] == 2);
    CHECK(j["group"]["order"] == 2);
    CHECK(j["group"]["name"] == "C2");
    CHECK(j["unit_rank"] == 1);
    CHECK(j["verdict"] == "certified");

    RunOptions t = options_for(fixture_path("sqrt2.json"));
    t.text = true;
    RunResult rt = run_info(t);
    CHECK(rt.exit_code == 0);
    CHECK(rt.output.find("degree = 2") != std::string::npos);
    CHECK(rt.output.find("group.name = C2") != std::string::npos);

    json j20 = json::parse(run_info(options_for(fixture_path("zeta20.json"))).output);
    CHECK(j20["degree"] == 8);
    CHECK(j20["place_count"] == 4);
    CHECK(j20["complex_places"] == 4);
    CHECK(j20["group"]["name"] == "C4xC2");
}

TEST_CASE("special certificates are deterministic and verifiable") {
    RunOptions opt = options_for(fixture_path("sqrt2.json"));
    RunResult a = run_special(opt);
    RunResult b = run_special(opt);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    json j = json::parse(a.output);
    CHECK(j["verdict"] == "certified");
    CHECK(j["special"]["beta"] == json::array({"1", "1"}));
    CHECK(j["matrix"]["rank"] == 1);
    CHECK(j["unit_indices"] == json::array({0}));
    CHECK(j["conjugate_subgroup"]["bound_ok"] == true);

    std::string cert = write_temp("tmp_cert_sqrt2.json", a.output);
    RunResult v = run_verify(cert, false);
    REQUIRE(v.exit_code == 0);
    json vj = json::parse(v.output);
    CHECK(vj["matches"] == true);
    CHECK(vj["verdict"] == "certified");

    std::string tampered = a.output;
    auto pos = tampered.find("\"rank\": 1");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 9, "\"rank\": 2");
    std::string bad = write_temp("tmp_cert_tampered.json", tampered);
    RunResult vb = run_verify(bad, false);
    CHECK(vb.exit_code == 1);
    CHECK(json::parse(vb.output)["matches"] == false);
}

TEST_CASE("relative certificates cover both verdict families") {
    RunOptions opt = options_for(fixture_path("biquad.json"));
    opt.subfield = "sqrt2";
    RunResult r = run_relative(opt);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["extension"]["relative_rank"] == 2);
    CHECK(j["extension"]["fixing_group"].size() == 2);
    CHECK(j["relative_unit"]["one_norm"] == 2);
    CHECK(j["relative_unit"]["independence_rank"] == 2);
    CHECK(j["verdict"] == "certified");

    std::string cert = write_temp("tmp_cert_biquad_rel.json", r.output);
    RunResult v = run_verify(cert, false);
    CHECK(v.exit_code == 0);

    RunOptions ex = options_for(fixture_path("zeta5.json"));
    ex.subfield = "sqrt5";
    RunResult e = run_relative(ex);
    CHECK(e.exit_code == 4);
    CHECK(json::parse(e.output)["verdict"] == "excluded case");

    RunOptions unknown = options_for(fixture_path("biquad.json"));
    unknown.subfield = "sqrt7";
    CHECK(run_relative(unknown).exit_code == 3);

    RunOptions missing = options_for(fixture_path("biquad.json"));
    CHECK(run_relative(missing).exit_code == 3);
}

TEST_CASE("bad inputs map to the documented exit codes") {
    CHECK(run_info(options_for("no_such_file.json")).exit_code == 3);

    RunOptions place = options_for(fixture_path("sqrt2.json"));
    place.place = 9;
    CHECK(run_special(place).exit_code == 3);

    RunOptions units = options_for(fixture_path("sqrt2.json"));
    units.unit_subset = {5};
    CHECK(run_special(units).exit_code == 3);

    std::string garbled = write_temp("tmp_cert_garbled.json", "not json");
    CHECK(run_verify(garbled, false).exit_code == 3);
}

TEST_CASE("selftest passes the bundled corpus") {
    RunResult r = run_selftest(128, 8192, false);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["failed"] == 0);
    CHECK(j["passed"] == static_cast<int>(selftest_plan().size()));
    for (json const & row : j["checks"])
        CHECK(row["ok"] == true);
    json zeta5_rel = j["checks"][10];
    CHECK(zeta5_rel["fixture"] == "zeta5");
    CHECK(zeta5_rel["verdict"] == "excluded case");
}
