#include "mcdg/simplicial.hpp"

#include <algorithm>
#include <string>

namespace mcdg {

KMatrix ChainComplex::bnd(int j) const {
    if (j >= 1 && j < static_cast<int>(boundary.size()) &&
        boundary[static_cast<std::size_t>(j)].rows != 0 &&
        boundary[static_cast<std::size_t>(j)].cols != 0)
        return boundary[static_cast<std::size_t>(j)];
    return KMatrix(static_cast<std::size_t>(dim(j - 1)), static_cast<std::size_t>(dim(j)));
}

void validate_complex(const ChainComplex& C) {
    require(C.boundary.size() == C.dims.size() || C.boundary.empty(),
            "complex: boundary list length mismatch");
    for (int d : C.dims) require(d >= 0, "complex: negative dimension");
    for (int j = 1; j < static_cast<int>(C.dims.size()); ++j) {
        KMatrix b = C.bnd(j);
        require(b.rows == static_cast<std::size_t>(C.dim(j - 1)) &&
                    b.cols == static_cast<std::size_t>(C.dim(j)),
                "complex: boundary shape mismatch at degree " + std::to_string(j));
        if (j >= 2)
            require(kmat_is_zero(kmat_mul(C.k, C.bnd(j - 1), b)),
                    "complex: boundary squared is nonzero at degree " + std::to_string(j));
    }
}

TruncatedComplex truncate_hom(const DGCategory& P, const Element& eta, const Element& zeta) {
    require(is_mc(P, eta) && is_mc(P, zeta),
            "truncate: twist is not Maurer-Cartan, the hom complex does not square to zero");
    TruncatedComplex T;
    T.P = &P;
    T.eta = eta;
    T.zeta = zeta;
    T.src = eta.src;
    T.dst = zeta.src;
    std::size_t w = P.ring.width();
    const Field& k = P.ring.base();
    T.C.k = k;
    int n = P.bound;
    T.C.dims.assign(static_cast<std::size_t>(n) + 1, 0);
    T.C.boundary.assign(static_cast<std::size_t>(n) + 1, KMatrix());

    T.z0_inclusion = kernel_basis(k, twisted_diff_kmatrix(P, eta, zeta, 0));
    T.C.dims[0] = static_cast<int>(T.z0_inclusion.cols);
    for (int j = 1; j <= n; ++j)
        T.C.dims[static_cast<std::size_t>(j)] =
            P.dim(T.src, T.dst, -j) * static_cast<int>(w);

    if (n >= 1) {
        // d: P^{-1} -> P^0 lands in Z^0; express it in the kernel basis
        KMatrix D = twisted_diff_kmatrix(P, eta, zeta, -1);
        Solver s(k, T.z0_inclusion);
        KMatrix b1(static_cast<std::size_t>(T.C.dims[0]), D.cols);
        for (std::size_t c = 0; c < D.cols; ++c) {
            std::vector<Scalar> col(D.rows);
            for (std::size_t r = 0; r < D.rows; ++r) col[r] = D.at(r, c);
            auto x = s.solve(col);
            require(x.has_value(), "truncate: image of d^{-1} falls outside Z^0");
            for (std::size_t r = 0; r < b1.rows; ++r) b1.at(r, c) = (*x)[r];
        }
        T.C.boundary[1] = std::move(b1);
    }
    for (int j = 2; j <= n; ++j)
        T.C.boundary[static_cast<std::size_t>(j)] = twisted_diff_kmatrix(P, eta, zeta, -j);
    validate_complex(T.C);
    return T;
}

TruncatedComplex truncate(const TruncatedComplex& T) {
    // a non-negatively graded complex has no positive differential, so its
    // degree-0 cycles are the whole degree-0 space: re-truncation is identity
    return T;
}

std::vector<int> Surjection::values() const {
    std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        v[static_cast<std::size_t>(i)] =
            v[static_cast<std::size_t>(i - 1)] + ((mask >> (i - 1)) & 1u ? 0 : 1);
    return v;
}

std::vector<Surjection> surjections(int n) {
    require(n >= 0 && n < 30, "surjections: level out of range");
    std::vector<Surjection> out;
    for (int k = 0; k <= n; ++k) {
        int merges = n - k;
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (static_cast<int>(__builtin_popcount(mask)) == merges) out.push_back({n, k, mask});
    }
    return out;
}

int DPLayout::index_of(const Surjection& s) const {
    for (std::size_t i = 0; i < surj.size(); ++i)
        if (surj[i] == s) return static_cast<int>(i);
    return -1;
}

DPLayout dp_layout(const ChainComplex& C, int n) {
    DPLayout L;
    L.surj = surjections(n);
    L.offset.resize(L.surj.size());
    int off = 0;
    for (std::size_t i = 0; i < L.surj.size(); ++i) {
        L.offset[i] = off;
        off += C.dim(L.surj[i].k);
    }
    L.rank = off;
    return L;
}

KMatrix dp_structure_matrix(const ChainComplex& C, const std::vector<int>& alpha, int n) {
    int m = static_cast<int>(alpha.size()) - 1;
    require(m >= 0, "dp_structure_matrix: empty map");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        require(alpha[i] >= 0 && alpha[i] <= n, "dp_structure_matrix: value out of range");
        require(i == 0 || alpha[i] >= alpha[i - 1], "dp_structure_matrix: map not monotone");
    }
    DPLayout from = dp_layout(C, n);
    DPLayout to = dp_layout(C, m);
    KMatrix out(static_cast<std::size_t>(to.rank), static_cast<std::size_t>(from.rank));
    for (std::size_t s = 0; s < from.surj.size(); ++s) {
        const Surjection& eta = from.surj[s];
        int kdim = C.dim(eta.k);
        if (kdim == 0) continue;
        std::vector<int> ev = eta.values();
        // phi = eta o alpha: [m] -> [eta.k]
        std::vector<int> phi(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i)
            phi[i] = ev[static_cast<std::size_t>(alpha[i])];
        // epi-mono factorization: phi = iota o tau with tau surjective
        std::vector<int> image;
        for (int v : phi)
            if (image.empty() || image.back() != v) image.push_back(v);
        int l = static_cast<int>(image.size()) - 1;
        Surjection tau{m, l, 0};
        {
            int prev = phi[0];
            for (int i = 1; i <= m; ++i) {
                if (phi[static_cast<std::size_t>(i)] == prev) tau.mask |= 1u << (i - 1);
                prev = phi[static_cast<std::size_t>(i)];
            }
        }
        bool iota_id = (l == eta.k) && image[0] == 0;
        bool iota_d0 = (l == eta.k - 1) && !image.empty() && image[0] == 1 &&
                       image.back() == eta.k;
        if (!iota_id && !iota_d0) continue;
        int tgt = to.index_of(tau);
        require(tgt >= 0, "dp_structure_matrix: factorization produced a foreign surjection");
        int roff = to.offset[static_cast<std::size_t>(tgt)];
        int coff = from.offset[s];
        if (iota_id) {
            for (int r = 0; r < kdim; ++r)
                out.at(static_cast<std::size_t>(roff + r), static_cast<std::size_t>(coff + r)) =
                    Scalar(1);
        } else {
            KMatrix b = C.bnd(eta.k); // C_k -> C_{k-1}
            for (std::size_t r = 0; r < b.rows; ++r)
                for (std::size_t c = 0; c < b.cols; ++c)
                    if (!b.at(r, c).is_zero())
                        out.at(static_cast<std::size_t>(roff) + r,
                               static_cast<std::size_t>(coff) + c) = b.at(r, c);
        }
    }
    return out;
}

SimplicialModule dold_puppe(const ChainComplex& C, int N) {
    require(N >= 0, "dold_puppe: negative cap");
    validate_complex(C);
    SimplicialModule S;
    S.k = C.k;
    S.cap = N;
    S.ranks.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) S.ranks[static_cast<std::size_t>(n)] = dp_layout(C, n).rank;
    S.face.resize(static_cast<std::size_t>(N) + 1);
    S.degen.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<int> delta;
            for (int v = 0; v <= n; ++v)
                if (v != i) delta.push_back(v);
            S.face[static_cast<std::size_t>(n)].push_back(dp_structure_matrix(C, delta, n));
        }
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j) {
            std::vector<int> sigma;
            for (int v = 0; v <= n; ++v) {
                sigma.push_back(v);
                if (v == j) sigma.push_back(v);
            }
            S.degen[static_cast<std::size_t>(n)].push_back(dp_structure_matrix(C, sigma, n));
        }
    check_simplicial_identities(S);
    return S;
}

void check_simplicial_identities(const SimplicialModule& S) {
    const Field& k = S.k;
    auto fc = [&](int n, int i) -> const KMatrix& {
        return S.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    };
    auto dg = [&](int n, int j) -> const KMatrix& {
        return S.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
    };
    for (int n = 2; n <= S.cap; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                require(kmat_mul(k, fc(n - 1, i), fc(n, j)) ==
                            kmat_mul(k, fc(n - 1, j - 1), fc(n, i)),
                        "simplicial identity d_i d_j = d_{j-1} d_i fails at level " +
                            std::to_string(n) + " (i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + ")");
    for (int n = 0; n + 2 <= S.cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                require(kmat_mul(k, dg(n + 1, i), dg(n, j)) ==
                            kmat_mul(k, dg(n + 1, j + 1), dg(n, i)),
                        "simplicial identity s_i s_j = s_{j+1} s_i fails at level " +
                            std::to_string(n) + " (i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + ")");
    for (int n = 0; n + 1 <= S.cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                KMatrix got = kmat_mul(k, fc(n + 1, i), dg(n, j));
                KMatrix want;
                if (i == j || i == j + 1) want = kmat_identity(static_cast<std::size_t>(S.rank(n)));
                else if (i < j) want = kmat_mul(k, dg(n - 1, j - 1), fc(n, i));
                else want = kmat_mul(k, dg(n - 1, j), fc(n, i - 1));
                require(got == want, "simplicial identity d_i s_j fails at level " +
                                         std::to_string(n) + " (i=" + std::to_string(i) +
                                         ", j=" + std::to_string(j) + ")");
            }
}

KMatrix surjection_matrix(const SimplicialModule& S, const Surjection& eta) {
    // factor eta into codegeneracies, peeling the smallest merged position
    std::vector<int> factors;
    int removed = 0;
    for (int i = 1; i <= eta.n; ++i)
        if ((eta.mask >> (i - 1)) & 1u) {
            factors.push_back(i - 1 - removed);
            ++removed;
        }
    KMatrix M = kmat_identity(static_cast<std::size_t>(S.rank(eta.k)));
    int level = eta.k;
    for (int t = static_cast<int>(factors.size()) - 1; t >= 0; --t) {
        M = kmat_mul(S.k,
                     S.degen[static_cast<std::size_t>(level)]
                            [static_cast<std::size_t>(factors[static_cast<std::size_t>(t)])],
                     M);
        ++level;
    }
    return M;
}

NormalizedChains normalize(const SimplicialModule& S) {
    NormalizedChains NS;
    NS.C.k = S.k;
    NS.C.dims.assign(static_cast<std::size_t>(S.cap) + 1, 0);
    NS.C.boundary.assign(static_cast<std::size_t>(S.cap) + 1, KMatrix());
    NS.inclusion.resize(static_cast<std::size_t>(S.cap) + 1);
    NS.inclusion[0] = kmat_identity(static_cast<std::size_t>(S.rank(0)));
    NS.C.dims[0] = S.rank(0);
    for (int j = 1; j <= S.cap; ++j) {
        std::size_t rj = static_cast<std::size_t>(S.rank(j));
        std::size_t rjm1 = static_cast<std::size_t>(S.rank(j - 1));
        KMatrix stacked(rjm1 * static_cast<std::size_t>(j), rj);
        for (int i = 1; i <= j; ++i) {
            const KMatrix& f = S.face[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            for (std::size_t r = 0; r < rjm1; ++r)
                for (std::size_t c = 0; c < rj; ++c)
                    stacked.at(static_cast<std::size_t>(i - 1) * rjm1 + r, c) = f.at(r, c);
        }
        NS.inclusion[static_cast<std::size_t>(j)] = kernel_basis(S.k, stacked);
        NS.C.dims[static_cast<std::size_t>(j)] =
            static_cast<int>(NS.inclusion[static_cast<std::size_t>(j)].cols);

        KMatrix d0N = kmat_mul(S.k, S.face[static_cast<std::size_t>(j)][0],
                               NS.inclusion[static_cast<std::size_t>(j)]);
        Solver s(S.k, NS.inclusion[static_cast<std::size_t>(j - 1)]);
        KMatrix b(static_cast<std::size_t>(NS.C.dims[static_cast<std::size_t>(j - 1)]), d0N.cols);
        for (std::size_t c = 0; c < d0N.cols; ++c) {
            std::vector<Scalar> col(d0N.rows);
            for (std::size_t r = 0; r < d0N.rows; ++r) col[r] = d0N.at(r, c);
            auto x = s.solve(col);
            require(x.has_value(),
                    "normalize: boundary leaves the normalized subspace at level " +
                        std::to_string(j));
            for (std::size_t r = 0; r < b.rows; ++r) b.at(r, c) = (*x)[r];
        }
        NS.C.boundary[static_cast<std::size_t>(j)] = std::move(b);
    }
    validate_complex(NS.C);
    return NS;
}

std::vector<KMatrix> dold_kan_roundtrip_iso(const ChainComplex& C, const SimplicialModule& S,
                                            const NormalizedChains& NS) {
    std::vector<KMatrix> iso(static_cast<std::size_t>(S.cap) + 1);
    for (int j = 0; j <= S.cap; ++j) {
        DPLayout lay = dp_layout(C, j);
        int idx = lay.index_of(Surjection{j, j, 0});
        require(idx >= 0, "roundtrip: identity surjection missing from layout");
        int off = lay.offset[static_cast<std::size_t>(idx)];
        std::size_t dc = static_cast<std::size_t>(C.dim(j));
        KMatrix proj(dc, static_cast<std::size_t>(S.rank(j)));
        for (std::size_t r = 0; r < dc; ++r)
            proj.at(r, static_cast<std::size_t>(off) + r) = Scalar(1);
        iso[static_cast<std::size_t>(j)] =
            kmat_mul(C.k, proj, NS.inclusion[static_cast<std::size_t>(j)]);
        require(iso[static_cast<std::size_t>(j)].rows == iso[static_cast<std::size_t>(j)].cols,
                "roundtrip: normalized rank differs from the complex dimension at degree " +
                    std::to_string(j));
        require(kmat_rank(C.k, iso[static_cast<std::size_t>(j)]) == dc,
                "roundtrip: projection onto the identity summand is singular at degree " +
                    std::to_string(j));
    }
    for (int j = 1; j <= S.cap; ++j) {
        KMatrix lhs = kmat_mul(C.k, iso[static_cast<std::size_t>(j - 1)], NS.C.bnd(j));
        KMatrix rhs = kmat_mul(C.k, C.bnd(j), iso[static_cast<std::size_t>(j)]);
        require(lhs == rhs,
                "roundtrip: projection does not commute with the boundary at degree " +
                    std::to_string(j));
    }
    return iso;
}

namespace {

SimplicialModule tensor_module(const Field& k, const SimplicialModule& A,
                               const SimplicialModule& B) {
    SimplicialModule T;
    T.k = k;
    T.cap = A.cap;
    T.ranks.resize(static_cast<std::size_t>(T.cap) + 1);
    for (int n = 0; n <= T.cap; ++n)
        T.ranks[static_cast<std::size_t>(n)] = A.rank(n) * B.rank(n);
    T.face.resize(static_cast<std::size_t>(T.cap) + 1);
    T.degen.resize(static_cast<std::size_t>(T.cap) + 1);
    for (int n = 1; n <= T.cap; ++n)
        for (int i = 0; i <= n; ++i)
            T.face[static_cast<std::size_t>(n)].push_back(
                kmat_kron(k, A.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)],
                          B.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]));
    for (int n = 0; n < T.cap; ++n)
        for (int j = 0; j <= n; ++j)
            T.degen[static_cast<std::size_t>(n)].push_back(
                kmat_kron(k, A.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)],
                          B.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]));
    check_simplicial_identities(T);
    return T;
}

/// Projection onto the identity-surjection summand of level p.
KMatrix id_summand_projection(const ChainComplex& C, int p, int rank) {
    DPLayout lay = dp_layout(C, p);
    int idx = lay.index_of(Surjection{p, p, 0});
    int off = lay.offset[static_cast<std::size_t>(idx)];
    std::size_t dc = static_cast<std::size_t>(C.dim(p));
    KMatrix proj(dc, static_cast<std::size_t>(rank));
    for (std::size_t r = 0; r < dc; ++r) proj.at(r, static_cast<std::size_t>(off) + r) = Scalar(1);
    return proj;
}

} // namespace

DPComposer::DPComposer(const DGCategory& P, const Element& etaX, const Element& etaY,
                       const Element& etaZ, int cap)
    : P_(&P), cap_(cap) {
    require(cap >= 0, "composer: negative cap");
    trYZ_ = truncate_hom(P, etaY, etaZ);
    trXY_ = truncate_hom(P, etaX, etaY);
    trXZ_ = truncate_hom(P, etaX, etaZ);
    A_ = dold_puppe(trYZ_.C, cap);
    B_ = dold_puppe(trXY_.C, cap);
    T_ = dold_puppe(trXZ_.C, cap);
    const Field& k = P.ring.base();
    tensor_ = tensor_module(k, A_, B_);
    NormalizedChains NT = normalize(tensor_);
    ntensor_ = NT.inclusion;

    // chain map N(tensor) -> target complex: Alexander-Whitney, then the
    // category composition, degree by degree
    chain_map_.resize(static_cast<std::size_t>(cap) + 1);
    std::size_t w = P.ring.width();
    Solver zsolve(k, trXZ_.z0_inclusion);
    for (int q = 0; q <= cap; ++q) {
        std::size_t edim = static_cast<std::size_t>(trXZ_.C.dim(q));
        KMatrix phi(edim, static_cast<std::size_t>(tensor_.rank(q)));
        for (int p = 0; p <= q; ++p) {
            int pp = q - p;
            std::size_t dc = static_cast<std::size_t>(trYZ_.C.dim(p));
            std::size_t dd = static_cast<std::size_t>(trXY_.C.dim(pp));
            if (dc == 0 || dd == 0 || edim == 0) continue;
            // front face on the left factor, back face on the right factor
            KMatrix FA = kmat_identity(static_cast<std::size_t>(A_.rank(q)));
            for (int j = q; j >= p + 1; --j)
                FA = kmat_mul(
                    k, A_.face[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)], FA);
            KMatrix BB = kmat_identity(static_cast<std::size_t>(B_.rank(q)));
            for (int j = q; j >= pp + 1; --j)
                BB = kmat_mul(k, B_.face[static_cast<std::size_t>(j)][0], BB);
            KMatrix PA = kmat_mul(k, id_summand_projection(trYZ_.C, p, A_.rank(p)), FA);
            KMatrix PB = kmat_mul(k, id_summand_projection(trXY_.C, pp, B_.rank(pp)), BB);

            // composition C_p (x) D_pp -> E_q on basis pairs
            KMatrix mu(edim, dc * dd);
            for (std::size_t i = 0; i < dc; ++i) {
                Element c = zero_element(P, trYZ_.src, trYZ_.dst, -p);
                if (p == 0)
                    for (std::size_t r = 0; r < trYZ_.z0_inclusion.rows; ++r)
                        c.coeffs[r] = trYZ_.z0_inclusion.at(r, i);
                else
                    c.coeffs[i] = Scalar(1);
                for (std::size_t jj = 0; jj < dd; ++jj) {
                    Element d = zero_element(P, trXY_.src, trXY_.dst, -pp);
                    if (pp == 0)
                        for (std::size_t r = 0; r < trXY_.z0_inclusion.rows; ++r)
                            d.coeffs[r] = trXY_.z0_inclusion.at(r, jj);
                    else
                        d.coeffs[jj] = Scalar(1);
                    Element prod = compose(P, c, d);
                    std::vector<Scalar> coords;
                    if (q == 0) {
                        auto x = zsolve.solve(prod.coeffs);
                        require(x.has_value(),
                                "composer: a product of cocycles is not a cocycle");
                        coords = std::move(*x);
                    } else {
                        coords = prod.coeffs;
                    }
                    for (std::size_t r = 0; r < edim; ++r)
                        mu.at(r, i * dd + jj) = coords[r];
                }
            }
            phi = kmat_add(k, phi, kmat_mul(k, mu, kmat_kron(k, PA, PB)));
        }
        chain_map_[static_cast<std::size_t>(q)] =
            kmat_mul(k, phi, ntensor_[static_cast<std::size_t>(q)]);
    }
    (void)w;

    // Dold-Kan decomposition solvers per level
    decomp_.resize(static_cast<std::size_t>(cap) + 1);
    for (int m = 0; m <= cap; ++m) {
        LevelSolve& L = decomp_[static_cast<std::size_t>(m)];
        L.surj = surjections(m);
        std::size_t total = 0;
        for (const Surjection& s : L.surj) {
            L.offset.push_back(static_cast<int>(total));
            total += ntensor_[static_cast<std::size_t>(s.k)].cols;
        }
        KMatrix psi(static_cast<std::size_t>(tensor_.rank(m)), total);
        for (std::size_t si = 0; si < L.surj.size(); ++si) {
            KMatrix cols = kmat_mul(k, surjection_matrix(tensor_, L.surj[si]),
                                    ntensor_[static_cast<std::size_t>(L.surj[si].k)]);
            for (std::size_t r = 0; r < cols.rows; ++r)
                for (std::size_t c = 0; c < cols.cols; ++c)
                    psi.at(r, static_cast<std::size_t>(L.offset[si]) + c) = cols.at(r, c);
        }
        L.psi = Solver(k, psi);
    }
}

std::vector<Scalar> DPComposer::compose_simplices(const std::vector<Scalar>& sigma,
                                                  const std::vector<Scalar>& tau, int m) const {
    require(m >= 0 && m <= cap_, "composer: level beyond the cap");
    std::size_t ra = static_cast<std::size_t>(A_.rank(m));
    std::size_t rb = static_cast<std::size_t>(B_.rank(m));
    require(sigma.size() == ra && tau.size() == rb,
            "composer: simplex coordinate length mismatch");
    const Field& k = P_->ring.base();
    std::vector<Scalar> x(ra * rb, Scalar(0));
    for (std::size_t a = 0; a < ra; ++a) {
        if (sigma[a].is_zero()) continue;
        for (std::size_t b = 0; b < rb; ++b) x[a * rb + b] = k.mul(sigma[a], tau[b]);
    }
    const LevelSolve& L = decomp_[static_cast<std::size_t>(m)];
    auto sol = L.psi.solve(x);
    require(sol.has_value(), "composer: Dold-Kan decomposition failed (not a valid simplex)");

    DPLayout layT = dp_layout(trXZ_.C, m);
    std::vector<Scalar> out(static_cast<std::size_t>(T_.rank(m)), Scalar(0));
    for (std::size_t si = 0; si < L.surj.size(); ++si) {
        int kk = L.surj[si].k;
        const KMatrix& cm = chain_map_[static_cast<std::size_t>(kk)];
        if (cm.rows == 0) continue;
        std::vector<Scalar> n_eta(cm.cols);
        for (std::size_t c = 0; c < cm.cols; ++c)
            n_eta[c] = (*sol)[static_cast<std::size_t>(L.offset[si]) + c];
        std::vector<Scalar> e = kmat_apply(k, cm, n_eta);
        int toff = layT.offset[si];
        for (std::size_t r = 0; r < e.size(); ++r)
            out[static_cast<std::size_t>(toff) + r] = k.add(
                out[static_cast<std::size_t>(toff) + r], e[r]);
    }
    return out;
}

} // namespace mcdg
