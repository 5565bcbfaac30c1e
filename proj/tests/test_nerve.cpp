#include "doctest.h"

#include "mcdg/complexes.hpp"
#include "mcdg/nerve.hpp"
#include "mcdg/sampling.hpp"
#include "util.hpp"

using namespace mcdg;
using mcdg_tests::thrown_message;

namespace {

Int int_pow(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// All coordinate vectors of the given length over a small prime field.
std::vector<std::vector<Scalar>> all_vectors(const Field& k, int len) {
    std::vector<std::vector<Scalar>> out;
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    int p = static_cast<int>(k.characteristic());
    while (true) {
        std::vector<Scalar> v;
        for (int d : digits) v.push_back(Scalar(d));
        out.push_back(std::move(v));
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (digits.empty() || i == digits.size()) break;
    }
    return out;
}

} // namespace

TEST_SUITE("nerve") {

TEST_CASE("row zero of the nerve is the object set") {
    DGCategory A = endo_category(std::vector<DimVec>{{1, 1}, {1}}, Field::prime(3));
    DPHoms H = dp_homs(A, 2);
    NerveSlice S = nerve_slice(H);
    for (int m = 0; m <= 2; ++m) {
        const NerveLevel& L = S.level(0, m);
        REQUIRE(L.tuples.size() == 2);
        for (const NerveTuple& t : L.tuples) {
            CHECK(t.objects.size() == 1);
            CHECK(t.factor_rank.empty());
        }
        CHECK(level_cardinality(Field::prime(3), L) == 2);
    }
}

TEST_CASE("single-object levels are plain powers of the hom realization") {
    Field k = Field::prime(3);
    DGCategory A = endo_category(DimVec{1, 1, 1}, k);
    DPHoms H = dp_homs(A, 2);
    NerveSlice S = nerve_slice(H);
    const SimplicialModule& M = H.mod(0, 0);
    CHECK(M.ranks == std::vector<int>{3, 5, 8}); // untwisted: Z^0 = P^0
    for (int n = 0; n <= 2; ++n) {
        for (int m = 0; m <= 2; ++m) {
            const NerveLevel& L = S.level(n, m);
            REQUIRE(L.tuples.size() == 1);
            CHECK(L.tuples[0].factor_rank ==
                  std::vector<int>(static_cast<std::size_t>(n), M.rank(m)));
            CHECK(level_cardinality(k, L) == int_pow(Int(3), n * M.rank(m)));
        }
    }
    CHECK(thrown_message([&] { level_cardinality(Field::rationals(), S.level(1, 1)); })
              .find("infinite") != std::string::npos);
}

TEST_CASE("a twisted one-object nerve level has the expected cardinality") {
    // d = 1 on the two-step complex: the hom chain complex is (1, 1), so the
    // realization ranks are 1, 2, 3 and level (2,1) holds 2^(2*2) = 16 elements
    Field k = Field::prime(2);
    DGCategory P = endo_category(DimVec{1, 1}, k);
    Element eta = zero_element(P, 0, 0, 1);
    eta.coeffs[0] = Scalar(1);
    DGCategory A = mc_category(P, {MCObject{0, eta}});
    DPHoms H = dp_homs(A, 2);
    CHECK(H.trunc(0, 0).C.dims == std::vector<int>{1, 1});
    CHECK(H.mod(0, 0).ranks == std::vector<int>{1, 2, 3});
    NerveSlice S = nerve_slice(H);
    CHECK(level_cardinality(k, S.level(2, 1)) == 16);
    MaterializedLevel M = materialize_level(k, S.level(2, 1));
    std::size_t total = 0;
    for (const auto& per_tuple : M.elems) total += per_tuple.size();
    CHECK(total == 16);
}

TEST_CASE("materialization refuses what it cannot enumerate") {
    DGCategory A = endo_category(DimVec{1, 1, 1}, Field::prime(5));
    DPHoms H = dp_homs(A, 2);
    NerveSlice S = nerve_slice(H);
    CHECK(thrown_message([&] { materialize_level(Field::rationals(), S.level(1, 0)); })
              .find("infinite") != std::string::npos);
    CHECK(thrown_message([&] { materialize_level(Field::prime(5), S.level(2, 2), 10); })
              .find("guard") != std::string::npos);
}

TEST_CASE("the Segal comparison is a bijection on every checkable level") {
    Field k = Field::prime(2);
    DGCategory A = endo_category(std::vector<DimVec>{{1, 1}, {1}}, k);
    DPHoms H = dp_homs(A, 3);
    NerveSlice S = nerve_slice(H);
    for (int n = 2; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) CHECK(segal_check(k, S, n, m));
    SUBCASE("a dropped tuple is detected") {
        NerveSlice broken = S;
        broken.levels[static_cast<std::size_t>(2 * (S.cap + 1) + 1)].tuples.pop_back();
        CHECK(!segal_check(k, broken, 2, 1));
    }
    SUBCASE("a wrong factor rank is detected") {
        NerveSlice broken = S;
        broken.levels[static_cast<std::size_t>(3 * (S.cap + 1))].tuples[0].factor_rank[0] += 1;
        CHECK(!segal_check(k, broken, 3, 0));
    }
    SUBCASE("n below two is rejected") {
        CHECK(thrown_message([&] { segal_check(k, S, 1, 0); })
                  .find("at least 2") != std::string::npos);
    }
}

TEST_CASE("H^0 statistics on a one-step object") {
    for (std::int64_t p : {2, 5}) {
        Field k = Field::prime(p);
        DGCategory A = endo_category(DimVec{1}, k);
        DPHoms H = dp_homs(A, 1);
        H0Stats st = h0_stats(H, 0, 0);
        CHECK(st.z0 == 1);
        CHECK(st.b0 == 0);
        CHECK(st.h0 == 1);
        CHECK(st.classes == p);
        CHECK(st.invertible == p - 1);
    }
}

TEST_CASE("interior membership needs an invertible vertex class") {
    DGCategory A = endo_category(DimVec{1}, Field::prime(2));
    DPHoms H = dp_homs(A, 1);
    // level-1 simplices of the hom realization are single coordinates
    CHECK(H.mod(0, 0).rank(1) == 1);
    CHECK(interior_member(H, {0}, {}));
    CHECK(!interior_member(H, {0, 0}, {{Scalar(0)}}));
    CHECK(interior_member(H, {0, 0}, {{Scalar(1)}}));
}

TEST_CASE("interior counts match a brute-force sweep of the realization") {
    Field k = Field::prime(2);
    DGCategory P = endo_category(DimVec{1, 1, 1}, k);
    PrestackValue V = mc_prestack_value(P, Ring::field(k), 2);
    REQUIRE(V.points.size() == 3); // solutions of x2.x1 = 0 over F2
    REQUIRE(V.counted);
    REQUIRE(V.interior.size() == 3);
    CHECK(V.interior[0].total == 3);

    const InteriorLevel& L = V.interior[1];
    CHECK(L.tuples.size() == 9);
    Int brute_total = 0;
    for (std::size_t t = 0; t < L.tuples.size(); ++t) {
        const NerveTuple& tup = L.tuples[t];
        REQUIRE(tup.factor_rank.size() == 1);
        Int per_tuple = 0;
        for (const auto& x : all_vectors(k, tup.factor_rank[0]))
            if (interior_member(V.homs, tup.objects, {x})) per_tuple += 1;
        CHECK(per_tuple == L.count[t]);
        brute_total += per_tuple;
    }
    CHECK(brute_total == L.total);
    CHECK(L.total == 20);
}

TEST_CASE("interior totals ignore the object numbering") {
    Field k = Field::prime(2);
    DGCategory P1 = endo_category(std::vector<DimVec>{{1, 1}, {1}}, k);
    DGCategory P2 = endo_category(std::vector<DimVec>{{1}, {1, 1}}, k);
    PrestackValue V1 = mc_prestack_value(P1, Ring::field(k), 2);
    PrestackValue V2 = mc_prestack_value(P2, Ring::field(k), 2);
    REQUIRE(V1.points.size() == V2.points.size());
    REQUIRE(V1.interior.size() == V2.interior.size());
    for (std::size_t n = 0; n < V1.interior.size(); ++n)
        CHECK(V1.interior[n].total == V2.interior[n].total);
}

TEST_CASE("prestack values over an infinite field carry no counts") {
    DGCategory P = endo_category(DimVec{1, 1, 1}, Field::rationals());
    std::vector<Element> pts{zero_element(P, 0, 0, 1)};
    PrestackValue V = mc_prestack_value(P, Ring::field(Field::rationals()), 1, &pts);
    CHECK(V.points.size() == 1);
    CHECK(!V.counted);
    CHECK(V.interior.empty());
    CHECK(V.nerve.level(0, 0).tuples.size() == 1);
    SUBCASE("enumeration without points is refused") {
        CHECK(thrown_message([&] {
                  mc_prestack_value(P, Ring::field(Field::rationals()), 1);
              }).find("finite") != std::string::npos);
    }
}

TEST_CASE("prestack values over the dual numbers count the thickened points") {
    Field k = Field::prime(2);
    DGCategory P = endo_category(DimVec{1, 1, 1}, k);
    PrestackValue V = mc_prestack_value(P, Ring::dual_numbers(k), 1);
    CHECK(V.points.size() == 8); // 4 + 2 + 2 solutions over F2[t]/(t^2)
    CHECK(V.counted);
    DGCategory PR = base_change(P, Ring::dual_numbers(k));
    for (const MCObject& o : V.points) CHECK(is_mc(PR, o.eta));
}

} // TEST_SUITE
