#include "mcdg/complexes.hpp"

#include <algorithm>

namespace mcdg {

namespace {

struct BlockIndex {
    // basis offsets of Hom(E^j, F^{j+i}) inside P^i(E,F), per pair and degree
    // index: (j, r, s) -> offset + r*nE[j] + s
    std::map<int, std::vector<std::pair<int, int>>> layout; // degree -> list of (j, offset)

    static BlockIndex build(const DimVec& e, const DimVec& f) {
        BlockIndex bi;
        int de = static_cast<int>(e.size()) - 1;
        int df = static_cast<int>(f.size()) - 1;
        for (int i = -de; i <= df; ++i) {
            int off = 0;
            std::vector<std::pair<int, int>> blocks;
            for (int j = 0; j <= de; ++j) {
                int jt = j + i;
                if (jt < 0 || jt > df) continue;
                int sz = e[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(jt)];
                if (sz == 0) continue;
                blocks.push_back({j, off});
                off += sz;
            }
            if (off > 0) bi.layout[i] = std::move(blocks);
        }
        return bi;
    }

    int dim(const DimVec& e, const DimVec& f, int i) const {
        auto it = layout.find(i);
        if (it == layout.end()) return 0;
        int total = 0;
        for (auto [j, off] : it->second) {
            (void)off;
            total += e[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(j + i)];
        }
        return total;
    }

    /// offset of block j in degree i, or -1
    int offset(int i, int j) const {
        auto it = layout.find(i);
        if (it == layout.end()) return -1;
        for (auto [jj, off] : it->second)
            if (jj == j) return off;
        return -1;
    }
};

} // namespace

DGCategory endo_category(const std::vector<DimVec>& vectors, const Field& k) {
    require(!vectors.empty(), "endo_category: no dimension vectors");
    for (const DimVec& v : vectors) {
        require(!v.empty(), "endo_category: empty dimension vector");
        bool nonzero = false;
        for (int d : v) {
            require(d >= 0, "endo_category: negative dimension");
            nonzero = nonzero || d > 0;
        }
        require(nonzero, "endo_category: dimension vector is identically zero");
    }
    DGCategory P;
    P.ring = Ring::field(k);
    int n = static_cast<int>(vectors.size());
    int max_len = 0;
    for (const DimVec& v : vectors) max_len = std::max(max_len, static_cast<int>(v.size()) - 1);
    P.bound = std::max(1, max_len);
    for (int o = 0; o < n; ++o) {
        P.objects.push_back("E" + std::to_string(o));
        P.object_index[P.objects.back()] = o;
    }

    std::map<std::pair<int, int>, BlockIndex> layouts;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const DimVec& e = vectors[static_cast<std::size_t>(a)];
            const DimVec& f = vectors[static_cast<std::size_t>(b)];
            BlockIndex bi = BlockIndex::build(e, f);
            std::map<int, int> dims;
            for (const auto& [i, blocks] : bi.layout) {
                (void)blocks;
                dims[i] = bi.dim(e, f, i);
            }
            if (!dims.empty()) P.homs[{a, b}] = std::move(dims);
            layouts[{a, b}] = std::move(bi);
        }

    // composition tensors: product of elementary matrix units
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const DimVec& e = vectors[static_cast<std::size_t>(a)];
                const DimVec& f = vectors[static_cast<std::size_t>(b)];
                const DimVec& g = vectors[static_cast<std::size_t>(c)];
                const BlockIndex& lab = layouts[{a, b}];
                const BlockIndex& lbc = layouts[{b, c}];
                const BlockIndex& lac = layouts[{a, c}];
                for (const auto& [i1, blocks1] : lab.layout)
                    for (const auto& [i2, blocks2] : lbc.layout) {
                        int iout = i1 + i2;
                        if (lac.layout.find(iout) == lac.layout.end()) continue;
                        std::size_t di = static_cast<std::size_t>(lab.dim(e, f, i1));
                        std::size_t dj = static_cast<std::size_t>(lbc.dim(f, g, i2));
                        std::size_t dout = static_cast<std::size_t>(lac.dim(e, g, iout));
                        auto blk = std::make_shared<CompBlock>(dj, di, dout, 1);
                        bool nonzero = false;
                        for (auto [j1, off1] : blocks1) {
                            int ne = e[static_cast<std::size_t>(j1)];
                            int nf = f[static_cast<std::size_t>(j1 + i1)];
                            for (auto [j2, off2] : blocks2) {
                                if (j2 != j1 + i1) continue;
                                int ng = g[static_cast<std::size_t>(j2 + i2)];
                                int offo = lac.offset(iout, j1);
                                if (offo < 0) continue;
                                // unit (j2, r2, s2) . unit (j1, r1, s1) = [s2 == r1] unit (j1, r2, s1)
                                for (int r2 = 0; r2 < ng; ++r2)
                                    for (int s2 = 0; s2 < nf; ++s2)
                                        for (int s1 = 0; s1 < ne; ++s1) {
                                            std::size_t bj =
                                                static_cast<std::size_t>(off2 + r2 * nf + s2);
                                            std::size_t ai =
                                                static_cast<std::size_t>(off1 + s2 * ne + s1);
                                            std::size_t o =
                                                static_cast<std::size_t>(offo + r2 * ne + s1);
                                            blk->entry(bj, ai, o)[0] = Scalar(1);
                                            nonzero = true;
                                        }
                            }
                        }
                        if (nonzero) P.comps[{a, b, c, i1, i2}] = std::move(blk);
                    }
            }

    for (int o = 0; o < n; ++o) {
        const DimVec& e = vectors[static_cast<std::size_t>(o)];
        const BlockIndex& l = layouts[{o, o}];
        std::vector<Scalar> id(static_cast<std::size_t>(l.dim(e, e, 0)), Scalar(0));
        auto it = l.layout.find(0);
        if (it != l.layout.end())
            for (auto [j, off] : it->second) {
                int ne = e[static_cast<std::size_t>(j)];
                for (int t = 0; t < ne; ++t)
                    id[static_cast<std::size_t>(off + t * ne + t)] = Scalar(1);
            }
        P.ids.push_back(std::move(id));
    }
    return P;
}

CurvatureIdeal buchsbaum_eisenbud_ideal(const DimVec& v, const Field& k) {
    CurvatureIdeal I;
    I.k = k;
    I.object = "E0";
    int d = static_cast<int>(v.size()) - 1;
    // variable layout: step j block of Hom(E^j, E^{j+1}), row-major
    std::vector<int> var_off(static_cast<std::size_t>(std::max(d, 0)) + 1, 0);
    int r = 0;
    for (int j = 0; j < d; ++j) {
        var_off[static_cast<std::size_t>(j)] = r;
        r += v[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j + 1)];
    }
    I.r = r;
    int s = 0;
    std::vector<int> gen_off;
    for (int j = 0; j + 2 <= d; ++j) {
        gen_off.push_back(s);
        s += v[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j + 2)];
    }
    I.s = s;
    I.gens.assign(static_cast<std::size_t>(s), GenPoly{});
    for (int j = 0; j + 2 <= d; ++j) {
        int ne = v[static_cast<std::size_t>(j)];
        int nf = v[static_cast<std::size_t>(j + 1)];
        int ng = v[static_cast<std::size_t>(j + 2)];
        for (int u = 0; u < ng; ++u)
            for (int t = 0; t < ne; ++t) {
                // entry (u,t) of M_{j+1} M_j: sum over w of (M_{j+1})_{u,w} (M_j)_{w,t}
                GenPoly& gen =
                    I.gens[static_cast<std::size_t>(gen_off[static_cast<std::size_t>(j)] + u * ne + t)];
                for (int w = 0; w < nf; ++w) {
                    int i1 = var_off[static_cast<std::size_t>(j + 1)] + u * nf + w;
                    int i2 = var_off[static_cast<std::size_t>(j)] + w * ne + t;
                    gen.quad.push_back({i1, i2, Scalar(1)});
                }
            }
    }
    return I;
}

} // namespace mcdg
