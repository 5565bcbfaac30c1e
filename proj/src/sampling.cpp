#include "mcdg/sampling.hpp"

#include <algorithm>

namespace mcdg {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(g);
}

Scalar random_scalar(Rng& rng, const Field& k) {
    if (k.is_finite()) return k.from_int(rng.uniform(0, k.size() - 1));
    return Scalar(Int(rng.uniform(-4, 4)), Int(rng.uniform(1, 3)));
}

std::vector<Scalar> random_vector(Rng& rng, const Field& k, std::size_t n) {
    std::vector<Scalar> v(n);
    for (Scalar& x : v) x = random_scalar(rng, k);
    return v;
}

Element random_element(Rng& rng, const DGCategory& P, int src, int dst, int degree) {
    Element x = zero_element(P, src, dst, degree);
    x.coeffs = random_vector(rng, P.ring.base(), x.coeffs.size());
    return x;
}

Element random_complex_point(Rng& rng, const DGCategory& P, int obj, const DimVec& dims) {
    require(P.ring.width() == 1, "random_complex_point: field categories only");
    const Field& k = P.ring.base();
    int d = static_cast<int>(dims.size()) - 1;
    std::vector<KMatrix> M(static_cast<std::size_t>(std::max(d, 0)));
    for (int j = d - 1; j >= 0; --j) {
        std::size_t rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(j + 1)]);
        std::size_t cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(j)]);
        KMatrix m(rows, cols);
        if (rows && cols) {
            bool constrained = j + 1 < d && dims[static_cast<std::size_t>(j + 2)] > 0;
            if (constrained) {
                KMatrix K = kernel_basis(k, M[static_cast<std::size_t>(j + 1)]);
                for (std::size_t c = 0; c < cols; ++c) {
                    std::vector<Scalar> col =
                        kmat_apply(k, K, random_vector(rng, k, K.cols));
                    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = col[r];
                }
            } else {
                for (Scalar& v : m.a) v = random_scalar(rng, k);
            }
        }
        M[static_cast<std::size_t>(j)] = std::move(m);
    }
    Element eta = zero_element(P, obj, obj, 1);
    std::size_t off = 0;
    for (int j = 0; j + 1 <= d; ++j) {
        std::size_t rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(j + 1)]);
        std::size_t cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(j)]);
        if (rows * cols == 0) continue;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t s = 0; s < cols; ++s)
                eta.coeffs[off + r * cols + s] = M[static_cast<std::size_t>(j)].at(r, s);
        off += rows * cols;
    }
    require(off == eta.coeffs.size(),
            "random_complex_point: dimension vector does not match the object");
    require(is_mc(P, eta), "random_complex_point: sampled point is not Maurer-Cartan");
    return eta;
}

Element random_twisted_cocycle(Rng& rng, const DGCategory& P, const Element& eta,
                               const Element& zeta, int degree) {
    const Field& k = P.ring.base();
    KMatrix K = kernel_basis(k, twisted_diff_kmatrix(P, eta, zeta, degree));
    Element x = zero_element(P, eta.src, zeta.src, degree);
    x.coeffs = kmat_apply(k, K, random_vector(rng, k, K.cols));
    return x;
}

ChainComplex random_chain_complex(Rng& rng, const Field& k, int len, int maxdim) {
    require(len >= 0 && maxdim >= 1, "random_chain_complex: bad shape bounds");
    ChainComplex C;
    C.k = k;
    C.dims.resize(static_cast<std::size_t>(len) + 1);
    for (int& d : C.dims) d = static_cast<int>(rng.uniform(1, maxdim));
    C.boundary.assign(static_cast<std::size_t>(len) + 1, KMatrix());
    for (int j = 1; j <= len; ++j) {
        std::size_t rows = static_cast<std::size_t>(C.dims[static_cast<std::size_t>(j - 1)]);
        std::size_t cols = static_cast<std::size_t>(C.dims[static_cast<std::size_t>(j)]);
        KMatrix b(rows, cols);
        if (j == 1) {
            for (Scalar& v : b.a) v = random_scalar(rng, k);
        } else {
            KMatrix K = kernel_basis(k, C.boundary[static_cast<std::size_t>(j - 1)]);
            for (std::size_t c = 0; c < cols; ++c) {
                std::vector<Scalar> col = kmat_apply(k, K, random_vector(rng, k, K.cols));
                for (std::size_t r = 0; r < rows; ++r) b.at(r, c) = col[r];
            }
        }
        C.boundary[static_cast<std::size_t>(j)] = std::move(b);
    }
    validate_complex(C);
    return C;
}

std::optional<Element> strict_inverse(const DGCategory& P, const Element& g) {
    require(g.degree == 0, "strict_inverse: degree-0 elements only");
    int E = g.src, F = g.dst;
    // h: F -> E with g.h = 1_F, then the left identity is checked
    KMatrix M = postcompose_kmatrix(P, g, F, 0);
    auto h = solve_linear(P.ring.base(), M, identity_element(P, F).coeffs);
    if (!h) return std::nullopt;
    Element inv = zero_element(P, F, E, 0);
    inv.coeffs = std::move(*h);
    if (!equal(P, compose(P, inv, g), identity_element(P, E))) return std::nullopt;
    return inv;
}

Element random_invertible(Rng& rng, const DGCategory& P, int obj, int attempts) {
    for (int t = 0; t < attempts; ++t) {
        Element g = random_element(rng, P, obj, obj, 0);
        if (strict_inverse(P, g)) return g;
    }
    return identity_element(P, obj);
}

GeneratedLift random_lift_problem(Rng& rng, const DGCategory& P, const Ring& B, int obj,
                                  const Element* eta0) {
    require(P.ring.width() == 1, "random_lift_problem: the base category must be over a field");
    require(B.base() == P.ring.base(), "random_lift_problem: ring base field mismatch");
    require(!B.ideal_indices().empty(), "random_lift_problem: B has no square-zero ideal");

    GeneratedLift out;
    out.PB = std::make_shared<DGCategory>(base_change(P, B));
    out.PmodI = std::make_shared<DGCategory>(base_change(P, B.quotient()));
    const DGCategory& PB = *out.PB;
    const DGCategory& PI = *out.PmodI;
    std::size_t wB = B.width();

    Element e0 = eta0 ? *eta0 : zero_element(P, obj, obj, 1);
    require(is_mc(P, e0), "random_lift_problem: basepoint is not Maurer-Cartan");

    // ideal-direction tail: closed xi always works for the dual numbers; for
    // the x^3 truncation a psi with d(psi) = -xi.xi is needed, else xi = 0
    Element xi = random_twisted_cocycle(rng, P, e0, e0, 1);
    Element psi = zero_element(P, obj, obj, 1);
    if (wB >= 3) {
        TwistedComplex T{&P, e0, e0};
        auto s = solve_coboundary(T, negate(P, compose(P, xi, xi)));
        if (s)
            psi = *s;
        else
            xi = zero_element(P, obj, obj, 1);
    }
    Element eta = zero_element(PB, obj, obj, 1);
    for (std::size_t i = 0; i < e0.coeffs.size(); ++i) {
        eta.coeffs[i * wB] = e0.coeffs[i];
        if (wB >= 2) eta.coeffs[i * wB + 1] = xi.coeffs[i];
        if (wB >= 3) eta.coeffs[i * wB + 2] = psi.coeffs[i];
    }
    require(is_mc(PB, eta),
            "random_lift_problem: generated eta is not MC (unsupported ring shape)");

    // gauge transform of eta mod I by a random invertible degree-0 element
    Element eta_I = reduce_element(PB, PI, eta);
    Element g = random_invertible(rng, PI, obj);
    Element ginv = *strict_inverse(PI, g);
    Element zeta_I =
        compose(PI, sub(PI, compose(PI, g, eta_I), diff(PI, g)), ginv);
    require(is_mc(PI, zeta_I), "random_lift_problem: gauge transform lost the MC equation");

    Element alpha_I = ginv;
    if (PI.dim(obj, obj, -1) > 0) {
        Element m = random_element(rng, PI, obj, obj, -1);
        alpha_I = add(PI, alpha_I, twisted_diff(PI, zeta_I, eta_I, m));
    }
    auto h0 = h0_inverse(PI, zeta_I, eta_I, alpha_I);
    require(h0.has_value(), "random_lift_problem: alpha_I lost invertibility");

    out.prob.PB = out.PB.get();
    out.prob.PmodI = out.PmodI.get();
    out.prob.E = obj;
    out.prob.F = obj;
    out.prob.eta = std::move(eta);
    out.prob.zeta_I = std::move(zeta_I);
    out.prob.alpha_I = std::move(alpha_I);
    out.prob.a_I = h0->b;
    out.prob.g_I = h0->h;
    out.prob.h_I = h0->g;
    validate_problem(out.prob);
    return out;
}

} // namespace mcdg
