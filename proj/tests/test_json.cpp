#include "cvlab/report_json.hpp"
#include "cvlab/suite.hpp"

#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace {

using cvlab::Caps;
using cvlab::GaussianRational;
using cvlab::Rational;
using cvlab::dump_json;
using nlohmann::json;

GaussianRational g(long re, long im = 0) {
    return {Rational(re), Rational(im)};
}

// dump -> parse -> dump must reproduce the bytes exactly.
void check_round_trip(const json& doc) {
    const std::string once = dump_json(doc);
    const std::string twice = dump_json(json::parse(once));
    CHECK(once == twice);
}

void check_no_floats(const json& doc) {
    CHECK_FALSE(doc.is_number_float());
    if (doc.is_object() || doc.is_array())
        for (const auto& child : doc) check_no_floats(child);
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("identity reports round-trip byte-identically") {
    const json r = cvlab::to_json(cvlab::check_eq8(Caps({2, 1}), {g(1), g(0, 1)}, 2));
    CHECK(r.at("identity_id") == "eq8");
    CHECK(r.at("verdict") == "holds");
    CHECK(r.at("lhs") == "4+2i");
    CHECK(r.at("params").at("caps") == "2,1");
    check_round_trip(r);
    check_no_floats(r);
}

TEST_CASE("paired identity reports serialize both equations") {
    const json r =
        cvlab::to_json(cvlab::check_eq15_16_corrected(1, 1, 1, g(2), g(3), 1));
    REQUIRE(r.at("lhs").is_array());
    CHECK(r.at("lhs").size() == 2);
    CHECK(r.at("lhs")[0] == "6");
    CHECK(r.at("lhs")[1] == "4");
    CHECK(r.at("printed_rhs").is_array());
    CHECK(r.at("note").get<std::string>().find("erratum") != std::string::npos);
    check_round_trip(r);
    check_no_floats(r);
}

TEST_CASE("erratum reports expose the printed right-hand side") {
    const json r = cvlab::to_json(cvlab::check_eq14_corrected(1, 1, g(1), 1));
    CHECK(r.at("verdict") == "holds");
    CHECK(r.at("rhs") == "2");
    CHECK(r.at("printed_rhs") == "4");
    check_round_trip(r);
}

TEST_CASE("multiset specs round-trip through json") {
    const cvlab::MultisetSpec spec({g(1), g(0, 1), g(-2)}, Caps({2, 1, 3}));
    const json j = cvlab::to_json(spec);
    const cvlab::MultisetSpec back = cvlab::multiset_spec_from_json(j);
    CHECK(back.values == spec.values);
    CHECK(back.mults.parts() == spec.mults.parts());
    check_round_trip(j);
}

TEST_CASE("pmf serialization is ordered and exact") {
    const cvlab::MultisetSpec spec({g(1), g(2)}, Caps({2, 1}));
    const json j = cvlab::to_json(cvlab::pmf(spec, 2), 2);
    CHECK(j.at("m") == 2);
    CHECK(j.at("subsets") == "3");
    REQUIRE(j.at("entries").size() == 2);
    CHECK(j.at("entries")[0].at("value") == "2");
    CHECK(j.at("entries")[0].at("prob") == "1/3");
    CHECK(j.at("entries")[1].at("value") == "3");
    CHECK(j.at("entries")[1].at("prob") == "2/3");
    check_round_trip(j);
    check_no_floats(j);
}

TEST_CASE("monte-carlo moment reports carry their provenance") {
    const cvlab::MultisetSpec spec({g(1), g(2), g(3)}, Caps({1, 1, 1}));
    const auto reports = cvlab::sample_moments(spec, 2, 100, 7);
    for (const auto& rep : reports) {
        const json j = cvlab::to_json(rep);
        CHECK(j.at("method") == "monte_carlo");
        CHECK(j.at("prng") == "mt19937_64");
        CHECK(j.at("trials") == 100);
        CHECK(j.at("seed") == 7);
        CHECK(j.contains("se_sq"));
        check_round_trip(j);
        check_no_floats(j);
    }
}

TEST_CASE("matrices round-trip through json") {
    const cvlab::ExactMatrix a{2, 2, {g(1), g(0, 1), g(-2), g(0)}};
    const json j = cvlab::to_json(a);
    CHECK(cvlab::matrix_from_json(j) == a);
    check_round_trip(j);

    const json r = cvlab::to_json(cvlab::check_eq29(
        Caps({1, 1}),
        {cvlab::ExactMatrix{2, 2, {g(0), g(1), g(0), g(0)}},
         cvlab::ExactMatrix{2, 2, {g(0), g(0), g(1), g(0)}}},
        2));
    CHECK(r.at("verdict") == "holds");
    CHECK(r.at("lhs").at("rows") == 2);
    check_round_trip(r);
    check_no_floats(r);
}

TEST_CASE("congruence reports round-trip") {
    const json glaisher = cvlab::to_json(cvlab::check_glaisher(5, 2));
    CHECK(glaisher.at("congruence_id") == "glaisher");
    CHECK(glaisher.at("residue").at("value") == "2");
    CHECK(glaisher.at("residue").at("modulus") == "125");
    check_round_trip(glaisher);
    check_no_floats(glaisher);

    const json c18 = cvlab::to_json(cvlab::check_congruence18(5, 2, true));
    CHECK(c18.at("congruence_id") == "eq18");
    CHECK(c18.at("lhs").at("value") == "15");
    CHECK(c18.at("paths_agree") == true);
    CHECK(c18.contains("direct_lhs"));
    check_round_trip(c18);

    const json c20 = cvlab::to_json(cvlab::check_congruence20(16843, 1));
    CHECK(c20.at("congruence_id") == "eq20");
    CHECK(c20.at("verdict") == "holds");
    check_round_trip(c20);
}

TEST_CASE("scan records use the frozen checkpoint shape") {
    cvlab::ScanRecord rec;
    rec.p = 16843;
    rec.residue.p = 16843;
    rec.residue.k = 4;
    rec.residue.value = 1;
    rec.residue.modulus = 1;
    for (int i = 0; i < 4; ++i) rec.residue.modulus *= 16843UL;
    rec.is_wolstenholme = true;
    const json j = cvlab::to_json(rec);
    CHECK(j.dump() ==
          R"({"modulus":"p^4","p":16843,"residue":"1","wolstenholme":true})");

    const cvlab::ScanRecord back = cvlab::scan_record_from_json(j);
    CHECK(back.p == rec.p);
    CHECK(back.residue.value == rec.residue.value);
    CHECK(back.residue.modulus == rec.residue.modulus);
    CHECK(back.is_wolstenholme);
}

TEST_CASE("run_suite_item dispatches every known id") {
    CHECK(cvlab::known_suite_ids().size() == 17);
    const json items = json::array({
        {{"id", "eq8"}, {"caps", {2, 1}}, {"z", {"1", "0+1i"}}, {"m", 2}},
        {{"id", "eq12"}, {"caps", {2, 2}}, {"m", 2}},
        {{"id", "eq13"}, {"a", 2}, {"b", 3}, {"m", 2}},
        {{"id", "eq14"}, {"n1", 1}, {"n2", 1}, {"z", "1"}, {"m", 1}},
        {{"id", "eq15_16"},
         {"n1", 1},
         {"n2", 1},
         {"n3", 1},
         {"z", "2"},
         {"w", "3"},
         {"m", 1}},
        {{"id", "eq17"}, {"s", 2}, {"l", 2}, {"m", 2}},
        {{"id", "eq21"}, {"n", 2}, {"s", 3}, {"m", 2}},
        {{"id", "eq22"}, {"caps", {2, 1}}, {"z", {"1", "0+1i"}}, {"m", 2}},
        {{"id", "eq26"}, {"s", 2}, {"l", 2}, {"m", 2}},
        {{"id", "eq27"}, {"caps", {1, 1}}, {"z", {"1", "1"}}, {"m", 1}},
        {{"id", "remark22"}, {"k1", 2}, {"k2", 1}, {"n", 2}},
        {{"id", "glaisher"}, {"p", 5}, {"s", 2}},
        {{"id", "eq18"}, {"p", 5}, {"s", 2}, {"direct", true}},
        {{"id", "eq20"}, {"p", 16843}, {"s", 1}},
    });
    for (const auto& item : items) {
        const json report = cvlab::run_suite_item(item);
        CHECK(report.at("verdict") == "holds");
        check_round_trip(report);
        check_no_floats(report);
    }

    const json e12 = json{{"id", "eq28"},
                          {"caps", {1, 1}},
                          {"m", 1},
                          {"matrices",
                           {{{"rows", 2}, {"cols", 2},
                             {"entries", {"0", "1", "0", "0"}}},
                            {{"rows", 2}, {"cols", 2},
                             {"entries", {"0", "0", "1", "0"}}}}}};
    CHECK(cvlab::run_suite_item(e12).at("verdict") == "holds");
    json e29 = e12;
    e29["id"] = "eq29";
    e29["m"] = 2;
    CHECK(cvlab::run_suite_item(e29).at("verdict") == "holds");
    json e30 = e12;
    e30["id"] = "eq30";
    CHECK(cvlab::run_suite_item(e30).at("verdict") == "holds");
}

TEST_CASE("run_suite_item rejects malformed items") {
    CHECK_THROWS_AS(cvlab::run_suite_item(json{{"id", "nosuch"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cvlab::run_suite_item(json{{"id", "eq13"}, {"a", 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cvlab::run_suite_item(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(
        cvlab::run_suite_item(json{{"id", "eq13"}, {"a", "x"}, {"b", 1}, {"m", 1}}),
        std::invalid_argument);
    // Domain preconditions surface as domain_error, distinct from bad shapes.
    CHECK_THROWS_AS(
        cvlab::run_suite_item(json{{"id", "eq13"}, {"a", -1}, {"b", 1}, {"m", 1}}),
        std::domain_error);
}

TEST_CASE("a failing verdict serializes without throwing") {
    const json r = cvlab::run_suite_item(
        json{{"id", "glaisher"}, {"p", 5}, {"s", 2}, {"k", 4}});
    CHECK(r.at("verdict") == "fails");
    CHECK(r.at("residue").at("value") == "252");
    check_round_trip(r);
}

}  // TEST_SUITE
