#include "mcdg/nerve.hpp"

#include <algorithm>
#include <string>

#include "mcdg/mc.hpp"

namespace mcdg {

namespace {

Int int_pow(const Int& q, int e) { return pow(q, static_cast<unsigned>(e)); }

/// Lexicographic odometer over object tuples; returns false when exhausted.
bool next_tuple(std::vector<int>& tup, int nobj) {
    int i = static_cast<int>(tup.size()) - 1;
    while (i >= 0 && ++tup[static_cast<std::size_t>(i)] == nobj) {
        tup[static_cast<std::size_t>(i)] = 0;
        --i;
    }
    return i >= 0;
}

} // namespace

const TruncatedComplex& DPHoms::trunc(int a, int b) const {
    require(a >= 0 && a < nobj && b >= 0 && b < nobj, "dp_homs: object index out of range");
    return tr[static_cast<std::size_t>(a * nobj + b)];
}

const SimplicialModule& DPHoms::mod(int a, int b) const {
    require(a >= 0 && a < nobj && b >= 0 && b < nobj, "dp_homs: object index out of range");
    return dp[static_cast<std::size_t>(a * nobj + b)];
}

DPHoms dp_homs(const DGCategory& A, int cap) {
    require(cap >= 0, "dp_homs: negative cap");
    DPHoms H;
    H.A = &A;
    H.cap = cap;
    H.nobj = static_cast<int>(A.objects.size());
    for (int a = 0; a < H.nobj; ++a) {
        Element za = zero_element(A, a, a, 1);
        for (int b = 0; b < H.nobj; ++b) {
            Element zb = zero_element(A, b, b, 1);
            H.tr.push_back(truncate_hom(A, za, zb));
            H.dp.push_back(dold_puppe(H.tr.back().C, cap));
        }
    }
    return H;
}

const NerveLevel& NerveSlice::level(int n, int m) const {
    require(n >= 0 && n <= cap && m >= 0 && m <= cap, "nerve: level out of range");
    return levels[static_cast<std::size_t>(n * (cap + 1) + m)];
}

NerveSlice nerve_slice(const DPHoms& H) {
    NerveSlice S;
    S.cap = H.cap;
    S.objects = H.nobj;
    for (int n = 0; n <= H.cap; ++n)
        for (int m = 0; m <= H.cap; ++m) {
            NerveLevel L;
            L.n = n;
            L.m = m;
            if (H.nobj > 0) {
                std::vector<int> tup(static_cast<std::size_t>(n) + 1, 0);
                do {
                    NerveTuple T;
                    T.objects = tup;
                    for (int i = 0; i < n; ++i)
                        T.factor_rank.push_back(
                            H.mod(tup[static_cast<std::size_t>(i)],
                                  tup[static_cast<std::size_t>(i + 1)])
                                .rank(m));
                    L.tuples.push_back(std::move(T));
                } while (next_tuple(tup, H.nobj));
            }
            S.levels.push_back(std::move(L));
        }
    return S;
}

Int level_cardinality(const Field& k, const NerveLevel& L) {
    require(k.is_finite(), "level_cardinality: infinite field");
    Int q(k.size());
    Int total = 0;
    for (const NerveTuple& T : L.tuples) {
        int r = 0;
        for (int f : T.factor_rank) r += f;
        total += int_pow(q, r);
    }
    return total;
}

MaterializedLevel materialize_level(const Field& k, const NerveLevel& L, std::uint64_t guard) {
    require(k.is_finite(), "materialization requested over an infinite ring");
    require(k.characteristic() < 256, "materialization needs residues that fit a byte");
    require(level_cardinality(k, L) <= Int(guard),
            "materialization size exceeds the guard (" + std::to_string(guard) + ")");
    std::uint8_t q = static_cast<std::uint8_t>(k.characteristic());
    MaterializedLevel M;
    M.n = L.n;
    M.m = L.m;
    for (const NerveTuple& T : L.tuples) {
        int r = 0;
        for (int f : T.factor_rank) r += f;
        std::vector<std::vector<std::uint8_t>> elems;
        std::vector<std::uint8_t> c(static_cast<std::size_t>(r), 0);
        while (true) {
            elems.push_back(c);
            std::size_t i = c.size();
            while (i-- > 0) {
                if (++c[i] < q) break;
                c[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
        M.elems.push_back(std::move(elems));
    }
    return M;
}

bool segal_check(const Field& k, const NerveSlice& S, int n, int m, std::uint64_t guard) {
    require(n >= 2, "segal_check: n must be at least 2");
    require(n <= S.cap && m >= 0 && m <= S.cap, "segal_check: level beyond the cap");

    // level (0,m) must be exactly the object set
    const NerveLevel& L0 = S.level(0, m);
    if (static_cast<int>(L0.tuples.size()) != S.objects) return false;
    for (int x = 0; x < S.objects; ++x) {
        if (L0.tuples[static_cast<std::size_t>(x)].objects != std::vector<int>{x}) return false;
        if (!L0.tuples[static_cast<std::size_t>(x)].factor_rank.empty()) return false;
    }

    // spine edge data from level (1,m)
    const NerveLevel& L1 = S.level(1, m);
    if (L1.tuples.size() != static_cast<std::size_t>(S.objects) * static_cast<std::size_t>(S.objects))
        return false;
    std::vector<int> edge_rank(L1.tuples.size(), 0);
    {
        std::size_t t = 0;
        for (int a = 0; a < S.objects; ++a)
            for (int b = 0; b < S.objects; ++b, ++t) {
                const NerveTuple& T = L1.tuples[t];
                if (T.objects != std::vector<int>{a, b}) return false;
                if (T.factor_rank.size() != 1) return false;
                edge_rank[t] = T.factor_rank[0];
            }
    }

    // reconstruct level (n,m) as the n-fold fiber product of the spine
    std::vector<NerveTuple> expect;
    if (S.objects > 0) {
        std::vector<int> tup(static_cast<std::size_t>(n) + 1, 0);
        do {
            NerveTuple T;
            T.objects = tup;
            for (int i = 0; i < n; ++i)
                T.factor_rank.push_back(
                    edge_rank[static_cast<std::size_t>(tup[static_cast<std::size_t>(i)] * S.objects +
                                                       tup[static_cast<std::size_t>(i + 1)])]);
            expect.push_back(std::move(T));
        } while (next_tuple(tup, S.objects));
    }
    const NerveLevel& Ln = S.level(n, m);
    if (Ln.tuples != expect) return false;
    if (!k.is_finite()) return true;

    // cardinality of the slice level against the fiber product of edge sets
    Int q(k.size());
    Int rhs = 0;
    for (const NerveTuple& T : expect) {
        Int c = 1;
        for (int r : T.factor_rank) c *= int_pow(q, r);
        rhs += c;
    }
    if (level_cardinality(k, Ln) != rhs) return false;

    // elementwise: spine concatenation reproduces every element exactly once
    MaterializedLevel Mn = materialize_level(k, Ln, guard);
    MaterializedLevel M1 = materialize_level(k, L1, guard);
    if (Mn.elems.size() != expect.size()) return false;
    for (std::size_t t = 0; t < expect.size(); ++t) {
        const NerveTuple& T = expect[t];
        std::vector<std::vector<std::uint8_t>> prod(1);
        for (int i = 0; i < n; ++i) {
            std::size_t pair = static_cast<std::size_t>(
                T.objects[static_cast<std::size_t>(i)] * S.objects +
                T.objects[static_cast<std::size_t>(i + 1)]);
            const auto& edges = M1.elems[pair];
            std::vector<std::vector<std::uint8_t>> next;
            next.reserve(prod.size() * edges.size());
            for (const auto& pfx : prod)
                for (const auto& e : edges) {
                    std::vector<std::uint8_t> v = pfx;
                    v.insert(v.end(), e.begin(), e.end());
                    next.push_back(std::move(v));
                }
            prod = std::move(next);
            require(prod.size() <= guard, "segal_check: fiber product exceeds the guard");
        }
        std::vector<std::vector<std::uint8_t>> lhs = Mn.elems[t];
        std::sort(lhs.begin(), lhs.end());
        std::sort(prod.begin(), prod.end());
        if (lhs != prod) return false;
    }
    return true;
}

H0Stats h0_stats(const DPHoms& H, int a, int b, std::uint64_t guard) {
    const Field& k = H.A->ring.base();
    const TruncatedComplex& T = H.trunc(a, b);
    H0Stats st;
    st.z0 = T.C.dim(0);
    KMatrix B = T.C.bnd(1);
    st.b0 = static_cast<int>(kmat_rank(k, B));
    st.h0 = st.z0 - st.b0;
    require(k.is_finite(), "h0_stats: class enumeration needs a finite base field");
    Int q(k.size());
    st.classes = int_pow(q, st.h0);
    require(st.classes <= Int(guard), "h0_stats: class count exceeds the guard");

    // coordinates completing the boundary image to all of Z^0
    std::vector<std::size_t> comp;
    KMatrix cur = B;
    std::size_t r = static_cast<std::size_t>(st.b0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(st.z0) &&
                            comp.size() < static_cast<std::size_t>(st.h0);
         ++i) {
        KMatrix ext(cur.rows, cur.cols + 1);
        for (std::size_t rr = 0; rr < cur.rows; ++rr)
            for (std::size_t cc = 0; cc < cur.cols; ++cc) ext.at(rr, cc) = cur.at(rr, cc);
        ext.at(i, cur.cols) = Scalar(1);
        if (kmat_rank(k, ext) > r) {
            comp.push_back(i);
            cur = std::move(ext);
            ++r;
        }
    }

    Element za = zero_element(*H.A, a, a, 1);
    Element zb = zero_element(*H.A, b, b, 1);
    std::int64_t p = k.size();
    std::vector<std::int64_t> digits(comp.size(), 0);
    while (true) {
        std::vector<Scalar> z0c(static_cast<std::size_t>(st.z0), Scalar(0));
        for (std::size_t i = 0; i < comp.size(); ++i) z0c[comp[i]] = k.from_int(digits[i]);
        Element f = zero_element(*H.A, a, b, 0);
        f.coeffs = kmat_apply(k, T.z0_inclusion, z0c);
        if (h0_inverse(*H.A, za, zb, f).has_value()) st.invertible += 1;
        std::size_t i = digits.size();
        while (i-- > 0) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return st;
}

bool interior_member(const DPHoms& H, const std::vector<int>& objects,
                     const std::vector<std::vector<Scalar>>& factors) {
    require(!objects.empty() && objects.size() == factors.size() + 1,
            "interior_member: malformed spine");
    int n = static_cast<int>(factors.size());
    if (n == 0) return true;
    require(n <= H.cap, "interior_member: level beyond the cap");
    const Field& k = H.A->ring.base();
    for (int i = 0; i < n; ++i) {
        int a = objects[static_cast<std::size_t>(i)];
        int b = objects[static_cast<std::size_t>(i + 1)];
        const TruncatedComplex& T = H.trunc(a, b);
        const SimplicialModule& M = H.mod(a, b);
        require(factors[static_cast<std::size_t>(i)].size() ==
                    static_cast<std::size_t>(M.rank(n)),
                "interior_member: factor coordinate length mismatch");
        KMatrix V = dp_structure_matrix(T.C, {0}, n); // vertex 0 of the simplex
        std::vector<Scalar> v = kmat_apply(k, V, factors[static_cast<std::size_t>(i)]);
        Element f = zero_element(*H.A, a, b, 0);
        f.coeffs = kmat_apply(k, T.z0_inclusion, v);
        Element za = zero_element(*H.A, a, a, 1);
        Element zb = zero_element(*H.A, b, b, 1);
        if (!h0_inverse(*H.A, za, zb, f).has_value()) return false;
    }
    return true;
}

std::vector<InteriorLevel> interior_diagonal(const DPHoms& H, std::uint64_t guard) {
    const Field& k = H.A->ring.base();
    require(k.is_finite(),
            "interior counts requested over an infinite field; only finite coefficients "
            "are enumerable");
    std::vector<H0Stats> stats(static_cast<std::size_t>(H.nobj) *
                               static_cast<std::size_t>(H.nobj));
    for (int a = 0; a < H.nobj; ++a)
        for (int b = 0; b < H.nobj; ++b)
            stats[static_cast<std::size_t>(a * H.nobj + b)] = h0_stats(H, a, b, guard);
    Int q(k.size());
    std::vector<InteriorLevel> out;
    for (int n = 0; n <= H.cap; ++n) {
        InteriorLevel L;
        L.n = n;
        if (H.nobj > 0) {
            std::vector<int> tup(static_cast<std::size_t>(n) + 1, 0);
            do {
                NerveTuple T;
                T.objects = tup;
                Int c = 1;
                for (int i = 0; i < n; ++i) {
                    int a = tup[static_cast<std::size_t>(i)];
                    int b = tup[static_cast<std::size_t>(i + 1)];
                    const H0Stats& st = stats[static_cast<std::size_t>(a * H.nobj + b)];
                    int rank = H.mod(a, b).rank(n);
                    T.factor_rank.push_back(rank);
                    c *= st.invertible * int_pow(q, rank - st.h0);
                }
                L.tuples.push_back(std::move(T));
                L.count.push_back(c);
                L.total += c;
            } while (next_tuple(tup, H.nobj));
        }
        out.push_back(std::move(L));
    }
    return out;
}

PrestackValue mc_prestack_value(const DGCategory& P, const Ring& R, int N,
                                const std::vector<Element>* points, std::size_t guard) {
    require(P.ring.width() == 1, "prestack: the base category must live over a field");
    require(N >= 0, "prestack: negative cap");
    DGCategory PR = base_change(P, R);
    std::vector<MCObject> objs;
    if (points) {
        for (const Element& e : *points) objs.push_back({e.src, e});
    } else {
        require(R.base().is_finite(),
                "prestack: Maurer-Cartan enumeration needs a finite coefficient ring "
                "(or an explicit point list)");
        for (int obj = 0; obj < static_cast<int>(P.objects.size()); ++obj) {
            CurvatureIdeal I = curvature_ideal(P, obj);
            auto pts = enumerate_points(I, R, guard);
            for (const auto& z : pts) {
                Element eta = zero_element(PR, obj, obj, 1);
                for (std::size_t i = 0; i < z.size(); ++i)
                    for (std::size_t l = 0; l < R.width(); ++l)
                        eta.coeffs[i * R.width() + l] = z[i][l];
                objs.push_back({obj, std::move(eta)});
            }
        }
    }
    PrestackValue V;
    V.category = std::make_shared<DGCategory>(mc_category(PR, objs));
    V.points = std::move(objs);
    V.homs = dp_homs(*V.category, N);
    V.nerve = nerve_slice(V.homs);
    if (R.base().is_finite()) {
        V.interior = interior_diagonal(V.homs, guard);
        V.counted = true;
    }
    return V;
}

} // namespace mcdg
