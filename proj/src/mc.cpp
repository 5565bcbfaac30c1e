#include "mcdg/mc.hpp"

#include <string>

namespace mcdg {

namespace {

void require_degree1_endo(const DGCategory& P, const Element& eta, const char* who) {
    require(eta.degree == 1, std::string(who) + ": twist must have degree 1, got degree " +
                                 std::to_string(eta.degree));
    require(eta.src == eta.dst, std::string(who) + ": twist must be an endomorphism");
    require(eta.coeffs.size() ==
                static_cast<std::size_t>(P.dim(eta.src, eta.src, 1)) * P.ring.width(),
            std::string(who) + ": twist coefficient vector has wrong length");
}

} // namespace

Element curvature(const DGCategory& P, const Element& eta) {
    require_degree1_endo(P, eta, "curvature");
    return add(P, diff(P, eta), compose(P, eta, eta));
}

bool is_mc(const DGCategory& P, const Element& eta) { return is_zero(P, curvature(P, eta)); }

Element twisted_diff(const DGCategory& P, const Element& eta, const Element& zeta,
                     const Element& a) {
    require_degree1_endo(P, eta, "twisted_diff");
    require_degree1_endo(P, zeta, "twisted_diff");
    require(a.src == eta.src, "twisted_diff: source twist lives on a different object");
    require(a.dst == zeta.src, "twisted_diff: target twist lives on a different object");
    Element out = add(P, diff(P, a), compose(P, zeta, a));
    Element tail = compose(P, a, eta);
    return (a.degree % 2 != 0) ? add(P, out, tail) : sub(P, out, tail);
}

Element bianchi_defect(const DGCategory& P, const Element& zeta) {
    return twisted_diff(P, zeta, zeta, curvature(P, zeta));
}

KMatrix twisted_diff_kmatrix(const DGCategory& P, const Element& eta, const Element& zeta,
                             int degree) {
    std::size_t w = P.ring.width();
    int E = eta.src, F = zeta.src;
    std::size_t nin = static_cast<std::size_t>(P.dim(E, F, degree)) * w;
    std::size_t nout = static_cast<std::size_t>(P.dim(E, F, degree + 1)) * w;
    KMatrix A(nout, nin);
    Element x = zero_element(P, E, F, degree);
    for (std::size_t c = 0; c < nin; ++c) {
        x.coeffs[c] = Scalar(1);
        Element y = twisted_diff(P, eta, zeta, x);
        for (std::size_t r = 0; r < nout; ++r) A.at(r, c) = y.coeffs[r];
        x.coeffs[c] = Scalar(0);
    }
    return A;
}

KMatrix postcompose_kmatrix(const DGCategory& P, const Element& beta, int src, int degree) {
    std::size_t w = P.ring.width();
    std::size_t nin = static_cast<std::size_t>(P.dim(src, beta.src, degree)) * w;
    std::size_t nout =
        static_cast<std::size_t>(P.dim(src, beta.dst, degree + beta.degree)) * w;
    KMatrix A(nout, nin);
    Element x = zero_element(P, src, beta.src, degree);
    for (std::size_t c = 0; c < nin; ++c) {
        x.coeffs[c] = Scalar(1);
        Element y = compose(P, beta, x);
        for (std::size_t r = 0; r < nout; ++r) A.at(r, c) = y.coeffs[r];
        x.coeffs[c] = Scalar(0);
    }
    return A;
}

KMatrix precompose_kmatrix(const DGCategory& P, const Element& alpha, int dst, int degree) {
    std::size_t w = P.ring.width();
    std::size_t nin = static_cast<std::size_t>(P.dim(alpha.dst, dst, degree)) * w;
    std::size_t nout =
        static_cast<std::size_t>(P.dim(alpha.src, dst, degree + alpha.degree)) * w;
    KMatrix A(nout, nin);
    Element y = zero_element(P, alpha.dst, dst, degree);
    for (std::size_t c = 0; c < nin; ++c) {
        y.coeffs[c] = Scalar(1);
        Element z = compose(P, y, alpha);
        for (std::size_t r = 0; r < nout; ++r) A.at(r, c) = z.coeffs[r];
        y.coeffs[c] = Scalar(0);
    }
    return A;
}

std::optional<Element> solve_coboundary(const TwistedComplex& T, const Element& target) {
    const DGCategory& P = *T.P;
    require(is_mc(P, T.eta) && is_mc(P, T.zeta),
            "solve_coboundary: twisted complex endpoint is not Maurer-Cartan");
    require(target.src == T.eta.src && target.dst == T.zeta.src,
            "solve_coboundary: target lives outside the twisted complex");
    KMatrix A = twisted_diff_kmatrix(P, T.eta, T.zeta, target.degree - 1);
    Solver solver(P.ring.base(), A);
    auto x = solver.solve(target.coeffs);
    if (!x) return std::nullopt;
    Element g = zero_element(P, target.src, target.dst, target.degree - 1);
    g.coeffs = std::move(*x);
    return g;
}

std::optional<H0Inverse> h0_inverse(const DGCategory& P, const Element& eta, const Element& zeta,
                                    const Element& f) {
    require_degree1_endo(P, eta, "h0_inverse");
    require_degree1_endo(P, zeta, "h0_inverse");
    require(f.degree == 0, "h0_inverse: f must have degree 0");
    require(f.src == eta.src && f.dst == zeta.src,
            "h0_inverse: f does not connect the twisted objects");
    require(is_zero(P, twisted_diff(P, eta, zeta, f)), "h0_inverse: f is not closed");

    const Field& k = P.ring.base();
    std::size_t w = P.ring.width();
    int E = eta.src, F = zeta.src;
    std::size_t nb = static_cast<std::size_t>(P.dim(F, E, 0)) * w;
    std::size_t ng = static_cast<std::size_t>(P.dim(E, E, -1)) * w;
    std::size_t nh = static_cast<std::size_t>(P.dim(F, F, -1)) * w;

    // rows: b closed; compose(b,f) - 1_E = d(g); compose(f,b) - 1_F = d(h)
    KMatrix Db = twisted_diff_kmatrix(P, zeta, eta, 0);
    KMatrix Pre = precompose_kmatrix(P, f, E, 0);
    KMatrix Post = postcompose_kmatrix(P, f, F, 0);
    KMatrix Dg = twisted_diff_kmatrix(P, eta, eta, -1);
    KMatrix Dh = twisted_diff_kmatrix(P, zeta, zeta, -1);

    std::size_t r1 = Db.rows, r2 = Pre.rows, r3 = Post.rows;
    KMatrix A(r1 + r2 + r3, nb + ng + nh);
    for (std::size_t r = 0; r < r1; ++r)
        for (std::size_t c = 0; c < nb; ++c) A.at(r, c) = Db.at(r, c);
    for (std::size_t r = 0; r < r2; ++r) {
        for (std::size_t c = 0; c < nb; ++c) A.at(r1 + r, c) = Pre.at(r, c);
        for (std::size_t c = 0; c < ng; ++c) A.at(r1 + r, nb + c) = k.neg(Dg.at(r, c));
    }
    for (std::size_t r = 0; r < r3; ++r) {
        for (std::size_t c = 0; c < nb; ++c) A.at(r1 + r2 + r, c) = Post.at(r, c);
        for (std::size_t c = 0; c < nh; ++c) A.at(r1 + r2 + r, nb + ng + c) = k.neg(Dh.at(r, c));
    }
    std::vector<Scalar> rhs(r1 + r2 + r3, Scalar(0));
    const std::vector<Scalar>& idE = P.ids[static_cast<std::size_t>(E)];
    const std::vector<Scalar>& idF = P.ids[static_cast<std::size_t>(F)];
    for (std::size_t i = 0; i < r2; ++i) rhs[r1 + i] = idE[i];
    for (std::size_t i = 0; i < r3; ++i) rhs[r1 + r2 + i] = idF[i];

    Solver solver(k, A);
    auto x = solver.solve(rhs);
    if (!x) return std::nullopt;
    H0Inverse out;
    out.b = zero_element(P, F, E, 0);
    out.g = zero_element(P, E, E, -1);
    out.h = zero_element(P, F, F, -1);
    for (std::size_t i = 0; i < nb; ++i) out.b.coeffs[i] = (*x)[i];
    for (std::size_t i = 0; i < ng; ++i) out.g.coeffs[i] = (*x)[nb + i];
    for (std::size_t i = 0; i < nh; ++i) out.h.coeffs[i] = (*x)[nb + ng + i];
    return out;
}

DGCategory mc_category(const DGCategory& P, const std::vector<MCObject>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const MCObject& pt = points[i];
        require(pt.eta.src == pt.object && pt.eta.dst == pt.object,
                "mc_category: point " + std::to_string(i) + " twist is not on its object");
        require(is_mc(P, pt.eta), "mc_category: point " + std::to_string(i) + " on object '" +
                                      P.objects[static_cast<std::size_t>(pt.object)] +
                                      "' is not Maurer-Cartan");
    }
    DGCategory M;
    M.ring = P.ring;
    M.bound = P.bound;
    std::size_t w = P.ring.width();
    int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        std::string label =
            P.objects[static_cast<std::size_t>(points[static_cast<std::size_t>(i)].object)] +
            "@" + std::to_string(i);
        M.objects.push_back(label);
        M.object_index[label] = i;
        M.ids.push_back(P.ids[static_cast<std::size_t>(points[static_cast<std::size_t>(i)].object)]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int oa = points[static_cast<std::size_t>(a)].object;
            int ob = points[static_cast<std::size_t>(b)].object;
            auto it = P.homs.find({oa, ob});
            if (it == P.homs.end()) continue;
            M.homs[{a, b}] = it->second;
            const Element& eta = points[static_cast<std::size_t>(a)].eta;
            const Element& zeta = points[static_cast<std::size_t>(b)].eta;
            for (const auto& [deg, d] : it->second) {
                std::size_t dout = static_cast<std::size_t>(P.dim(oa, ob, deg + 1));
                if (d == 0 || dout == 0) continue;
                RMat m(dout, static_cast<std::size_t>(d), w);
                bool nonzero = false;
                for (int c = 0; c < d; ++c) {
                    Element x = basis_element(P, oa, ob, deg, static_cast<std::size_t>(c));
                    Element y = twisted_diff(P, eta, zeta, x);
                    for (std::size_t r = 0; r < dout; ++r) {
                        const Scalar* v = y.coeffs.data() + r * w;
                        if (!P.ring.is_zero(v)) nonzero = true;
                        std::copy(v, v + w, m.entry(r, static_cast<std::size_t>(c)));
                    }
                }
                if (nonzero) M.diffs[{a, b, deg}] = std::move(m);
            }
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int oa = points[static_cast<std::size_t>(a)].object;
                int ob = points[static_cast<std::size_t>(b)].object;
                int oc = points[static_cast<std::size_t>(c)].object;
                for (const auto& [key, blk] : P.comps) {
                    auto [ka, kb, kc, i, j] = key;
                    if (ka == oa && kb == ob && kc == oc) M.comps[{a, b, c, i, j}] = blk;
                }
            }
    return M;
}

} // namespace mcdg
