#include "doctest.h"

#include <cstdio>

#include "json.hpp"
#include "mcdg/catfile.hpp"
#include "mcdg/complexes.hpp"
#include "util.hpp"

using namespace mcdg;
using mcdg_tests::thrown_message;

TEST_SUITE("catfile") {

TEST_CASE("field names parse and reject") {
    CHECK(parse_field_name("Q") == Field::rationals());
    CHECK(parse_field_name("F2") == Field::prime(2));
    CHECK(parse_field_name("F2147483647") == Field::prime(2147483647));
    CHECK(thrown_message([] { parse_field_name("F4"); }).find("not prime") !=
          std::string::npos);
    CHECK(thrown_message([] { parse_field_name("GF(2)"); }) != "");
    CHECK(thrown_message([] { parse_field_name("F"); }) != "");
    CHECK(thrown_message([] { parse_field_name("F12x"); }) != "");
}

TEST_CASE("emission is a fixed point of parsing") {
    for (const auto& v : {DimVec{1, 1, 1}, DimVec{1, 2, 1}, DimVec{2, 1}}) {
        for (const Field& k : {Field::rationals(), Field::prime(5)}) {
            DGCategory P = endo_category(v, k);
            std::string doc = emit_category(P);
            DGCategory Q = parse_category(doc);
            validate_category(Q);
            CHECK(emit_category(Q) == doc);
            CHECK(Q.objects == P.objects);
            CHECK(Q.bound == P.bound);
        }
    }
}

TEST_CASE("whitespace is the only tolerated variation") {
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::prime(3));
    std::string doc = emit_category(P);
    // reflow the same JSON with a different indentation style
    std::string reflowed = nlohmann::ordered_json::parse(doc).dump();
    CHECK(reflowed != doc);
    CHECK(emit_category(parse_category(reflowed)) == doc);
}

TEST_CASE("malformed documents are rejected with a reason") {
    DGCategory P = endo_category(DimVec{1, 1}, Field::rationals());
    std::string doc = emit_category(P);
    auto mutate = [&](auto fn) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(doc);
        fn(j);
        return j.dump(2) + "\n";
    };
    SUBCASE("empty input") {
        CHECK(thrown_message([] { parse_category(""); }).find("empty") != std::string::npos);
    }
    SUBCASE("broken JSON") {
        CHECK(thrown_message([&] { parse_category(doc.substr(0, doc.size() / 2)); })
                  .find("parse") != std::string::npos);
    }
    SUBCASE("unknown top-level key") {
        std::string bad = mutate([](auto& j) { j["extra"] = 1; });
        CHECK(thrown_message([&] { parse_category(bad); }).find("extra") != std::string::npos);
    }
    SUBCASE("wrong format tag") {
        std::string bad = mutate([](auto& j) { j["format"] = "dg-cat"; });
        CHECK(thrown_message([&] { parse_category(bad); }).find("format") != std::string::npos);
    }
    SUBCASE("duplicate object label") {
        std::string bad = mutate([](auto& j) { j["objects"] = {"E", "E"}; });
        std::string msg = thrown_message([&] { parse_category(bad); });
        CHECK(msg.find("duplicate") != std::string::npos);
        CHECK(msg.find("E") != std::string::npos);
    }
    SUBCASE("non-canonical scalar") {
        std::string bad = mutate([](auto& j) {
            j["identities"][0]["coeffs"][0] = "2/4";
        });
        CHECK(thrown_message([&] { parse_category(bad); }).find("2/4") != std::string::npos);
    }
    SUBCASE("zero composition coefficient") {
        std::string bad = mutate([](auto& j) {
            j["comps"][0]["entries"][0][3] = "0";
        });
        CHECK(thrown_message([&] { parse_category(bad); })
                  .find("zero") != std::string::npos);
    }
    SUBCASE("out-of-order hom blocks") {
        DGCategory P2 = endo_category(std::vector<DimVec>{{1, 1}, {1}}, Field::rationals());
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(emit_category(P2));
        REQUIRE(j["homs"].size() > 1);
        std::swap(j["homs"][0], j["homs"][1]);
        std::string bad = j.dump(2) + "\n";
        CHECK(thrown_message([&] { parse_category(bad); })
                  .find("order") != std::string::npos);
    }
    SUBCASE("unknown field name") {
        std::string bad = mutate([](auto& j) { j["ring"]["field"] = "F6"; });
        CHECK(thrown_message([&] { parse_category(bad); }).find("not prime") !=
              std::string::npos);
    }
}

TEST_CASE("reduction maps coefficients exactly") {
    DGCategory P = endo_category(DimVec{1, 2, 1}, Field::rationals());
    DGCategory P5 = reduce_category(P, Field::prime(5));
    validate_category(P5);
    CHECK(P5.ring.base() == Field::prime(5));
    CHECK(P5.objects == P.objects);
    // structure constants of the endo category are 0/1, so emission texts
    // agree except for the ring header
    std::string a = emit_category(P);
    std::string b = emit_category(P5);
    std::string qtag = "\"field\": \"Q\"";
    REQUIRE(a.find(qtag) != std::string::npos);
    CHECK(b.find("\"field\": \"F5\"") != std::string::npos);
    std::string a2 = a;
    a2.replace(a2.find(qtag), qtag.size(), "\"field\": \"F5\"");
    CHECK(a2 == b);
}

TEST_CASE("file io reports the path") {
    CHECK(thrown_message([] { read_file("/nonexistent/path.cat"); })
              .find("/nonexistent/path.cat") != std::string::npos);
    std::string tmp = "/tmp/mcdg_catfile_test.cat";
    write_file(tmp, "hello\n");
    CHECK(read_file(tmp) == "hello\n");
    std::remove(tmp.c_str());
}

TEST_CASE("shipped sample files parse, validate, and round-trip") {
    for (const char* name : {"endo-111.cat", "endo-121.cat",
                             "endo-1111.cat", "two-object.cat"}) {
        std::string path = std::string(MCDG_SOURCE_DIR) + "/data/" + name;
        std::string doc = read_file(path);
        DGCategory P = parse_category(doc);
        validate_category(P);
        CHECK(emit_category(P) == doc);
    }
}

} // TEST_SUITE
