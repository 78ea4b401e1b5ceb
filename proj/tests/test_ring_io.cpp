#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "freefusion/errors.hpp"
#include "freefusion/gallery.hpp"
#include "freefusion/group.hpp"
#include "freefusion/ring_io.hpp"

using namespace freefusion;
using nlohmann::json;

namespace {

void check_same_ring(const FusionRing& x, const FusionRing& y) {
    REQUIRE(x.size() == y.size());
    CHECK(x.name() == y.name());
    CHECK(x.label_name(x.unit()) == y.label_name(y.unit()));
    for (Label a = 0; a < x.size(); ++a) {
        CHECK(x.label_name(a) == y.label_name(a));
        CHECK(x.label_name(x.dual(a)) == y.label_name(y.dual(a)));
        for (Label b = 0; b < x.size(); ++b) {
            CHECK(x.fuse_overflows(a, b) == y.fuse_overflows(a, b));
            for (Label c = 0; c < x.size(); ++c) CHECK(x.mult(a, b, c) == y.mult(a, b, c));
        }
    }
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("ring JSON round-trips through parse and serialize") {
    for (const char* name : {"fib", "rep_s3", "s3", "tlj:5", "tlj-generic:3", "tlj-even:8"}) {
        const FusionRing r = *builtin_ring(name);
        check_same_ring(r, parse_ring(ring_to_json(r), "unused"));
    }
}

TEST_CASE("ring files round-trip on disk") {
    const auto path = temp_file("freefusion-roundtrip-ring.json");
    const FusionRing r = tlj_generic(3);
    save_ring_file(r, path.string());
    check_same_ring(r, load_ring_file(path.string()));
    std::filesystem::remove(path);
}

TEST_CASE("fixture files load with the expected content") {
    const FusionRing fib = load_ring_file("rings/fib.json");
    check_same_ring(fib, fibonacci_ring());
    const FusionRing z3 = load_ring_file("rings/z3.json");
    check_same_ring(z3, *builtin_ring("z3"));
    const FusionRing broken = load_ring_file("rings/broken-assoc.json");
    CHECK(!validate_ring(broken).ok());
}

TEST_CASE("ring parsing rejects malformed documents") {
    const json good = {{"labels", {"1", "x"}},
                       {"unit", "1"},
                       {"dual", {{"1", "1"}, {"x", "x"}}},
                       {"N", json::array({json::array({"1", "1", "1", 1})})}};
    CHECK_NOTHROW(parse_ring(good, "toy"));
    CHECK(parse_ring(good, "toy").name() == "toy"); // fallback name applies

    CHECK_THROWS_AS(parse_ring(json::array(), "t"), input_error); // not an object
    auto drop = [&](const char* field) {
        json bad = good;
        bad.erase(field);
        CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    };
    drop("labels");
    drop("unit");
    drop("dual");
    drop("N");

    json bad = good;
    bad["labels"] = "1 x";
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["labels"] = json::array({"1", 7});
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["name"] = 3;
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["dual"] = {{"1", "1"}, {"x", "zz"}};
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["N"] = json::array({json::array({"1", "1", "1"})}); // not a 4-tuple
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["N"] = json::array({json::array({"1", "1", "zz", 1})});
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["N"] = json::array({json::array({"1", "1", "1", 0})}); // multiplicity below one
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["N"] = json::array({json::array({"1", "1", "1", 1.5})});
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
    bad = good;
    bad["overflow"] = json::array({json::array({"1"})});
    CHECK_THROWS_AS(parse_ring(bad, "t"), input_error);
}

TEST_CASE("unreadable or unparsable files raise input errors") {
    CHECK_THROWS_AS(load_ring_file("no-such-file.json"), input_error);
    const auto path = temp_file("freefusion-bad.json");
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(load_ring_file(path.string()), input_error);
    std::filesystem::remove(path);
}

TEST_CASE("group JSON round-trips and cross-checks the inverse table") {
    const GroupTable s3 = *builtin_group("s3");
    const json doc = group_to_json(s3);
    const GroupTable back = parse_group(doc, "unused");
    REQUIRE(back.size() == s3.size());
    CHECK(back.name() == "s3");
    for (GElem a = 0; a < s3.size(); ++a) {
        CHECK(back.element_name(a) == s3.element_name(a));
        for (GElem b = 0; b < s3.size(); ++b) CHECK(back.mul(a, b) == s3.mul(a, b));
    }

    json bad = doc;
    bad["inverse"]["(12)"] = "(13)";
    CHECK_THROWS_AS(parse_group(bad, "t"), input_error);
    bad = doc;
    bad["mult"].erase(0);
    CHECK_THROWS_AS(parse_group(bad, "t"), input_error); // missing product
    bad = doc;
    bad["mult"].push_back(bad["mult"][0]);
    CHECK_THROWS_AS(parse_group(bad, "t"), input_error); // duplicate product

    const auto path = temp_file("freefusion-roundtrip-group.json");
    save_group_file(s3, path.string());
    CHECK(load_group_file(path.string()).size() == 6);
    std::filesystem::remove(path);
}

TEST_CASE("group parsing enforces the group axioms via the table type") {
    // identity not listed first
    json doc = {{"elements", {"g", "e"}},
                {"mult", json::array({json::array({"g", "g", "e"}), json::array({"g", "e", "g"}),
                                      json::array({"e", "g", "g"}), json::array({"e", "e", "e"})})}};
    CHECK_THROWS_AS(parse_group(doc, "t"), input_error);
    // broken associativity cannot happen in a complete latin square with
    // two elements, so corrupt a product instead: g*g = g makes g a second
    // identity-like element and breaks inverses
    json doc2 = {{"elements", {"e", "g"}},
                 {"mult", json::array({json::array({"e", "e", "e"}), json::array({"e", "g", "g"}),
                                       json::array({"g", "e", "g"}), json::array({"g", "g", "g"})})}};
    CHECK_THROWS_AS(parse_group(doc2, "t"), input_error);
}

TEST_CASE("ring_from_spec resolves files, extended files, then built-ins") {
    CHECK(ring_from_spec("rings/fib").name() == "fib");      // adds .json
    CHECK(ring_from_spec("rings/fib.json").name() == "fib"); // as-is
    CHECK(ring_from_spec("fib").size() == 2);                // built-in
    CHECK(ring_from_spec("tlj:4").size() == 3);
    CHECK_THROWS_AS(ring_from_spec("no-such-ring"), input_error);
    CHECK_THROWS_AS(ring_from_spec("tlj:x"), input_error);

    CHECK(group_from_spec("s3").size() == 6);
    CHECK_THROWS_AS(group_from_spec("no-such-group"), input_error);
}
