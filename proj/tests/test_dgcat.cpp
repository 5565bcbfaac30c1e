#include "doctest.h"

#include "mcdg/complexes.hpp"
#include "mcdg/dgcat.hpp"
#include "mcdg/sampling.hpp"
#include "util.hpp"

using namespace mcdg;
using mcdg_tests::thrown_message;

TEST_SUITE("dgcat") {

TEST_CASE("endo category of a three-step space passes every axiom") {
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::rationals());
    validate_category(P);
    CHECK(P.objects == std::vector<std::string>{"E0"});
    CHECK(P.bound == 2);
    CHECK(P.dim(0, 0, 0) == 3);
    CHECK(P.dim(0, 0, 1) == 2);
    CHECK(P.dim(0, 0, -1) == 2);
    CHECK(P.dim(0, 0, 2) == 1);
    CHECK(P.dim(0, 0, 3) == 0);
}

TEST_CASE("composition follows the block structure") {
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::rationals());
    Element x1 = basis_element(P, 0, 0, 1, 0); // step 0 -> 1
    Element x2 = basis_element(P, 0, 0, 1, 1); // step 1 -> 2
    Element up = compose(P, x2, x1);           // x2 after x1 spans both steps
    CHECK(up.degree == 2);
    CHECK(up.coeffs == std::vector<Scalar>{Scalar(1)});
    CHECK(is_zero(P, compose(P, x1, x2))); // blocks do not meet
    CHECK(is_zero(P, compose(P, x1, x1)));
}

TEST_CASE("identities act as units and the differential is zero") {
    DGCategory P = endo_category(DimVec{2, 1}, Field::prime(5));
    Element one = identity_element(P, 0);
    Rng rng(4);
    for (int d = P.min_degree(0, 0); d <= P.max_degree(0, 0); ++d) {
        Element x = random_element(rng, P, 0, 0, d);
        CHECK(equal(P, compose(P, one, x), x));
        CHECK(equal(P, compose(P, x, one), x));
        CHECK(is_zero(P, diff(P, x)));
    }
}

TEST_CASE("element arithmetic and printing") {
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::rationals());
    Element a = basis_element(P, 0, 0, 1, 0);
    Element b = basis_element(P, 0, 0, 1, 1);
    Element s = add(P, a, b);
    CHECK(s.coeffs == std::vector<Scalar>{Scalar(1), Scalar(1)});
    CHECK(is_zero(P, sub(P, s, add(P, b, a))));
    CHECK(equal(P, negate(P, negate(P, a)), a));
    CHECK(element_to_string(P, s) == "(1, 1)");
    Element z = zero_element(P, 0, 0, 1);
    CHECK(element_to_string(P, z) == "(0, 0)");
}

TEST_CASE("compose rejects mismatched shapes") {
    DGCategory P = endo_category(std::vector<DimVec>{{1, 1}, {1}}, Field::rationals());
    Element f = basis_element(P, 0, 1, 0, 0);
    CHECK(thrown_message([&] { compose(P, f, f); }) != ""); // dst != src
    Element x = basis_element(P, 0, 0, 1, 0);
    Element bad = x;
    bad.coeffs.push_back(Scalar(1));
    CHECK(thrown_message([&] { compose(P, x, bad); }) != "");
}

TEST_CASE("validation names a broken unit") {
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::rationals());
    P.ids[0][1] = Scalar(2);
    std::string msg = thrown_message([&] { validate_category(P); });
    CHECK(msg.find("unit") != std::string::npos);
}

TEST_CASE("validation names broken associativity") {
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::rationals());
    // corrupt the (P^1, P^1) -> P^2 composition block
    auto key = CompKey{0, 0, 0, 1, 1};
    auto it = P.comps.find(key);
    REQUIRE(it != P.comps.end());
    CompBlock block = *it->second;
    block.t[0] = Scalar(3);
    it->second = std::make_shared<const CompBlock>(block);
    std::string msg = thrown_message([&] { validate_category(P); });
    CHECK(msg != "");
    CHECK(msg.find("associativ") != std::string::npos);
}

TEST_CASE("base change to the dual numbers keeps the axioms") {
    DGCategory P = endo_category(DimVec{1, 2, 1}, Field::prime(3));
    DGCategory PB = base_change(P, Ring::dual_numbers(Field::prime(3)));
    validate_category(PB);
    CHECK(PB.ring.width() == 2);
    CHECK(PB.dim(0, 0, 1) == P.dim(0, 0, 1)); // dims count ring-basis slots
    Element one = identity_element(PB, 0);
    Element x = basis_element(PB, 0, 0, 1, 0);
    CHECK(equal(PB, compose(PB, one, x), x));
}

TEST_CASE("two-object category composes across objects") {
    DGCategory P = endo_category(std::vector<DimVec>{{1, 1}, {1}}, Field::rationals());
    validate_category(P);
    CHECK(P.objects.size() == 2);
    CHECK(P.index_of("E1") == 1);
    CHECK(thrown_message([&] { P.index_of("nope"); }) != "");
    // hom(E0,E1) in degree 0 has a map per matching step pair
    CHECK(P.dim(0, 1, 0) == 1);
    Element f = basis_element(P, 0, 1, 0, 0);
    Element g = basis_element(P, 1, 0, 0, 0);
    Element gf = compose(P, g, f);
    CHECK(gf.src == 0);
    CHECK(gf.dst == 0);
}

} // TEST_SUITE
