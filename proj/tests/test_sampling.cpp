#include "doctest.h"

#include <set>

#include "mcdg/complexes.hpp"
#include "mcdg/sampling.hpp"
#include "util.hpp"

using namespace mcdg;

TEST_SUITE("sampling") {

TEST_CASE("rng is deterministic and respects bounds") {
    Rng a(7), b(7);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 200; ++i) {
        std::int64_t x = a.uniform(-3, 5);
        CHECK(x == b.uniform(-3, 5));
        CHECK(x >= -3);
        CHECK(x <= 5);
        seen.insert(x);
    }
    CHECK(seen.size() == 9); // all residues hit over 200 draws
}

TEST_CASE("random scalars stay canonical") {
    Rng rng(3);
    Field k5 = Field::prime(5);
    for (int i = 0; i < 50; ++i) {
        Scalar c = random_scalar(rng, k5);
        CHECK(k5.canon(c) == c); // already a canonical residue
        CHECK(denominator(c) == 1);
        CHECK(numerator(c) >= 0);
        CHECK(numerator(c) < 5);
    }
    Field q = Field::rationals();
    for (int i = 0; i < 50; ++i) {
        Scalar c = random_scalar(rng, q);
        CHECK(abs(numerator(c)) <= 4);
        CHECK(denominator(c) <= 3);
    }
}

TEST_CASE("complex points satisfy the quadratic equations exactly") {
    Rng rng(11);
    for (const DimVec& v : {DimVec{1, 1, 1}, DimVec{1, 2, 1}, DimVec{2, 1, 2},
                            DimVec{2, 3, 2, 1}}) {
        for (const Field& k : {Field::rationals(), Field::prime(5)}) {
            DGCategory P = endo_category(v, k);
            for (int trial = 0; trial < 10; ++trial) {
                Element pt = random_complex_point(rng, P, 0, v);
                CHECK(pt.degree == 1);
                CHECK(is_mc(P, pt));
            }
        }
    }
}

TEST_CASE("complex points are not all zero") {
    Rng rng(4);
    DGCategory P = endo_category(DimVec{2, 2, 2}, Field::prime(7));
    int nonzero = 0;
    for (int trial = 0; trial < 30; ++trial)
        if (!is_zero(P, random_complex_point(rng, P, 0, {2, 2, 2}))) ++nonzero;
    CHECK(nonzero > 15);
}

TEST_CASE("twisted cocycles are closed for the sampled twists") {
    Rng rng(21);
    DGCategory P = endo_category(DimVec{1, 2, 1}, Field::prime(3));
    Element eta = random_complex_point(rng, P, 0, {1, 2, 1});
    Element zeta = random_complex_point(rng, P, 0, {1, 2, 1});
    for (int degree = -1; degree <= 1; ++degree) {
        for (int trial = 0; trial < 10; ++trial) {
            Element c = random_twisted_cocycle(rng, P, eta, zeta, degree);
            CHECK(is_zero(P, twisted_diff(P, eta, zeta, c)));
        }
    }
}

TEST_CASE("random chain complexes have exact boundaries") {
    Rng rng(31);
    for (const Field& k : {Field::rationals(), Field::prime(2)}) {
        for (int trial = 0; trial < 10; ++trial) {
            ChainComplex C = random_chain_complex(rng, k, 4, 3);
            CHECK(C.dims.size() == 5);
            validate_complex(C);
            for (int d : C.dims) {
                CHECK(d >= 1);
                CHECK(d <= 3);
            }
        }
    }
}

TEST_CASE("strict inverses are exact two-sided inverses") {
    Rng rng(13);
    DGCategory P = endo_category(DimVec{1, 2, 1}, Field::prime(5));
    SUBCASE("identity inverts to itself") {
        auto inv = strict_inverse(P, identity_element(P, 0));
        REQUIRE(inv.has_value());
        CHECK(equal(P, *inv, identity_element(P, 0)));
    }
    SUBCASE("random invertibles really invert") {
        for (int trial = 0; trial < 10; ++trial) {
            Element g = random_invertible(rng, P, 0);
            auto inv = strict_inverse(P, g);
            REQUIRE(inv.has_value());
            CHECK(equal(P, compose(P, *inv, g), identity_element(P, 0)));
            CHECK(equal(P, compose(P, g, *inv), identity_element(P, 0)));
        }
    }
    SUBCASE("the zero endomorphism has no inverse") {
        CHECK(!strict_inverse(P, zero_element(P, 0, 0, 0)).has_value());
    }
}

TEST_CASE("generated lift problems validate and carry ideal-trivial reductions") {
    Rng rng(17);
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::prime(5));
    for (const Ring& B :
         {Ring::dual_numbers(Field::prime(5)), Ring::truncated_poly3(Field::prime(5))}) {
        for (int trial = 0; trial < 10; ++trial) {
            GeneratedLift gen = random_lift_problem(rng, P, B, 0);
            validate_problem(gen.prob); // throws on any broken congruence
            CHECK(gen.prob.PB->ring == B);
            CHECK(is_mc(*gen.PB, gen.prob.eta));
            CHECK(is_mc(*gen.PmodI, gen.prob.zeta_I));
        }
    }
}

TEST_CASE("generated problems agree with a supplied basepoint") {
    Rng rng(23);
    DGCategory P = endo_category(DimVec{1, 2, 1}, Field::rationals());
    Ring B = Ring::dual_numbers(Field::rationals());
    Element base = random_complex_point(rng, P, 0, {1, 2, 1});
    GeneratedLift gen = random_lift_problem(rng, P, B, 0, &base);
    // eta reduces to the basepoint: the ideal part rides on top of eta0
    const DGCategory& PB = *gen.PB;
    Element eta_body = reduce_element(PB, *gen.PmodI, gen.prob.eta);
    Element base_q = zero_element(*gen.PmodI, 0, 0, 1);
    base_q.coeffs = base.coeffs;
    CHECK(equal(*gen.PmodI, eta_body, base_q));
}

} // TEST_SUITE
