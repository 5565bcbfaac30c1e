#include "mcdg/dgcat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mcdg {

int DGCategory::dim(int a, int b, int i) const {
    auto it = homs.find({a, b});
    if (it == homs.end()) return 0;
    auto jt = it->second.find(i);
    return jt == it->second.end() ? 0 : jt->second;
}

int DGCategory::min_degree(int a, int b) const {
    auto it = homs.find({a, b});
    if (it == homs.end() || it->second.empty()) return 0;
    return it->second.begin()->first;
}

int DGCategory::max_degree(int a, int b) const {
    auto it = homs.find({a, b});
    if (it == homs.end() || it->second.empty()) return 0;
    return it->second.rbegin()->first;
}

RMat DGCategory::diff_matrix(int a, int b, int i) const {
    auto it = diffs.find({a, b, i});
    if (it != diffs.end()) return it->second;
    return RMat(static_cast<std::size_t>(dim(a, b, i + 1)), static_cast<std::size_t>(dim(a, b, i)),
                ring.width());
}

const CompBlock* DGCategory::comp_block(int a, int b, int c, int i, int j) const {
    auto it = comps.find({a, b, c, i, j});
    return it == comps.end() ? nullptr : it->second.get();
}

int DGCategory::index_of(const std::string& label) const {
    auto it = object_index.find(label);
    require(it != object_index.end(), "unknown object label '" + label + "'");
    return it->second;
}

Element zero_element(const DGCategory& P, int src, int dst, int degree) {
    Element x;
    x.src = src;
    x.dst = dst;
    x.degree = degree;
    x.coeffs.assign(static_cast<std::size_t>(P.dim(src, dst, degree)) * P.ring.width(), Scalar(0));
    return x;
}

Element basis_element(const DGCategory& P, int src, int dst, int degree, std::size_t idx) {
    Element x = zero_element(P, src, dst, degree);
    require(idx < static_cast<std::size_t>(P.dim(src, dst, degree)), "basis_element: index out of range");
    x.coeffs[idx * P.ring.width()] = Scalar(1);
    return x;
}

Element identity_element(const DGCategory& P, int obj) {
    Element x = zero_element(P, obj, obj, 0);
    x.coeffs = P.ids[static_cast<std::size_t>(obj)];
    return x;
}

bool is_zero(const DGCategory&, const Element& x) {
    for (const Scalar& c : x.coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool equal(const DGCategory& P, const Element& x, const Element& y) {
    return x.src == y.src && x.dst == y.dst && x.degree == y.degree &&
           is_zero(P, sub(P, x, y));
}

Element add(const DGCategory& P, const Element& x, const Element& y) {
    require(x.src == y.src && x.dst == y.dst && x.degree == y.degree,
            "element add: operands live in different hom components");
    Element z = x;
    const Field& k = P.ring.base();
    for (std::size_t i = 0; i < z.coeffs.size(); ++i) k.add_to(z.coeffs[i], y.coeffs[i]);
    return z;
}

Element sub(const DGCategory& P, const Element& x, const Element& y) {
    require(x.src == y.src && x.dst == y.dst && x.degree == y.degree,
            "element sub: operands live in different hom components");
    Element z = x;
    const Field& k = P.ring.base();
    for (std::size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] = k.sub(z.coeffs[i], y.coeffs[i]);
    return z;
}

Element negate(const DGCategory& P, const Element& x) {
    Element z = x;
    const Field& k = P.ring.base();
    for (Scalar& c : z.coeffs) c = k.neg(c);
    return z;
}

Element scale(const DGCategory& P, const RVec& c, const Element& x) {
    std::size_t w = P.ring.width();
    Element z = zero_element(P, x.src, x.dst, x.degree);
    std::size_t dim = z.coeffs.size() / std::max<std::size_t>(w, 1);
    for (std::size_t t = 0; t < dim; ++t)
        P.ring.mul_add(z.coeffs.data() + t * w, c.data(), x.coeffs.data() + t * w);
    return z;
}

std::string element_to_string(const DGCategory& P, const Element& x) {
    std::size_t w = P.ring.width();
    std::size_t dim = x.coeffs.size() / w;
    std::ostringstream os;
    os << "(";
    for (std::size_t t = 0; t < dim; ++t) {
        if (t) os << ", ";
        RVec c(x.coeffs.begin() + static_cast<std::ptrdiff_t>(t * w),
               x.coeffs.begin() + static_cast<std::ptrdiff_t>((t + 1) * w));
        os << P.ring.to_string(c);
    }
    os << ")";
    return os.str();
}

Element compose(const DGCategory& P, const Element& beta, const Element& alpha) {
    require(alpha.dst == beta.src,
            "compose: target of the first factor differs from source of the second");
    std::size_t w = P.ring.width();
    require(alpha.coeffs.size() ==
                static_cast<std::size_t>(P.dim(alpha.src, alpha.dst, alpha.degree)) * w,
            "compose: first factor has a wrong coefficient count");
    require(beta.coeffs.size() ==
                static_cast<std::size_t>(P.dim(beta.src, beta.dst, beta.degree)) * w,
            "compose: second factor has a wrong coefficient count");
    Element out = zero_element(P, alpha.src, beta.dst, alpha.degree + beta.degree);
    const CompBlock* blk =
        P.comp_block(alpha.src, alpha.dst, beta.dst, alpha.degree, beta.degree);
    if (!blk || out.coeffs.empty()) return out;
    std::size_t di = blk->di, dj = blk->dj, dout = blk->dout;
    std::vector<Scalar> prod(w);
    for (std::size_t bj = 0; bj < dj; ++bj) {
        const Scalar* bc = beta.coeffs.data() + bj * w;
        if (P.ring.is_zero(bc)) continue;
        for (std::size_t ai = 0; ai < di; ++ai) {
            const Scalar* ac = alpha.coeffs.data() + ai * w;
            if (P.ring.is_zero(ac)) continue;
            std::fill(prod.begin(), prod.end(), Scalar(0));
            P.ring.mul_add(prod.data(), bc, ac);
            for (std::size_t o = 0; o < dout; ++o) {
                const Scalar* tv = blk->entry(bj, ai, o);
                if (!P.ring.is_zero(tv))
                    P.ring.mul_add(out.coeffs.data() + o * w, prod.data(), tv);
            }
        }
    }
    return out;
}

Element diff(const DGCategory& P, const Element& x) {
    std::size_t w = P.ring.width();
    Element out = zero_element(P, x.src, x.dst, x.degree + 1);
    auto it = P.diffs.find({x.src, x.dst, x.degree});
    if (it == P.diffs.end()) return out;
    const RMat& m = it->second;
    for (std::size_t c = 0; c < m.cols; ++c) {
        const Scalar* xc = x.coeffs.data() + c * w;
        if (P.ring.is_zero(xc)) continue;
        for (std::size_t r = 0; r < m.rows; ++r) {
            const Scalar* mv = m.entry(r, c);
            if (!P.ring.is_zero(mv)) P.ring.mul_add(out.coeffs.data() + r * w, mv, xc);
        }
    }
    return out;
}

namespace {

std::string obj_name(const DGCategory& P, int a) { return P.objects[static_cast<std::size_t>(a)]; }

void check_shapes(const DGCategory& P) {
    std::size_t w = P.ring.width();
    require(P.bound >= 1, "category: vanishing bound must be >= 1");
    require(!P.objects.empty(), "category: no objects");
    require(P.objects.size() == P.ids.size(), "category: identity list length mismatch");
    std::set<std::string> seen;
    for (const std::string& name : P.objects)
        require(seen.insert(name).second, "category: duplicate object label '" + name + "'");
    int n_obj = static_cast<int>(P.objects.size());
    for (const auto& [pair, degs] : P.homs) {
        require(pair.first >= 0 && pair.first < n_obj && pair.second >= 0 && pair.second < n_obj,
                "category: hom pair references unknown object");
        for (const auto& [deg, d] : degs)
            require(d >= 0, "category: negative hom dimension for pair (" +
                                obj_name(P, pair.first) + "," + obj_name(P, pair.second) +
                                ") degree " + std::to_string(deg));
    }
    for (const auto& [key, m] : P.diffs) {
        auto [a, b, i] = key;
        require(m.w == w, "category: differential entry width mismatch");
        require(m.cols == static_cast<std::size_t>(P.dim(a, b, i)) &&
                    m.rows == static_cast<std::size_t>(P.dim(a, b, i + 1)),
                "category: differential matrix shape mismatch for pair (" + obj_name(P, a) + "," +
                    obj_name(P, b) + ") degree " + std::to_string(i));
    }
    for (const auto& [key, blk] : P.comps) {
        auto [a, b, c, i, j] = key;
        require(blk != nullptr, "category: null composition block");
        require(blk->w == w, "category: composition entry width mismatch");
        require(blk->di == static_cast<std::size_t>(P.dim(a, b, i)) &&
                    blk->dj == static_cast<std::size_t>(P.dim(b, c, j)) &&
                    blk->dout == static_cast<std::size_t>(P.dim(a, c, i + j)),
                "category: composition tensor shape mismatch for (" + obj_name(P, a) + "," +
                    obj_name(P, b) + "," + obj_name(P, c) + ") degrees (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
    }
    for (int e = 0; e < n_obj; ++e)
        require(P.ids[static_cast<std::size_t>(e)].size() ==
                    static_cast<std::size_t>(P.dim(e, e, 0)) * w,
                "category: identity coefficient length mismatch for object " + obj_name(P, e));
}

void check_d_squared(const DGCategory& P) {
    for (const auto& [pair, degs] : P.homs) {
        auto [a, b] = pair;
        for (const auto& [i, d] : degs) {
            if (d == 0) continue;
            for (int t = 0; t < d; ++t) {
                Element x = basis_element(P, a, b, i, static_cast<std::size_t>(t));
                Element dd = diff(P, diff(P, x));
                if (!is_zero(P, dd))
                    fail("axiom d^2=0 fails: pair (" + obj_name(P, a) + "," + obj_name(P, b) +
                         "), degree " + std::to_string(i) + ", basis " + std::to_string(t));
            }
        }
    }
}

void check_leibniz(const DGCategory& P) {
    const Field& k = P.ring.base();
    int n_obj = static_cast<int>(P.objects.size());
    for (int a = 0; a < n_obj; ++a)
        for (int b = 0; b < n_obj; ++b) {
            auto hab = P.homs.find({a, b});
            if (hab == P.homs.end()) continue;
            for (int c = 0; c < n_obj; ++c) {
                auto hbc = P.homs.find({b, c});
                if (hbc == P.homs.end()) continue;
                for (const auto& [i, di] : hab->second)
                    for (const auto& [j, dj] : hbc->second) {
                        if (di == 0 || dj == 0) continue;
                        Scalar sign = (j % 2 == 0) ? k.one() : k.neg(k.one());
                        for (int ai = 0; ai < di; ++ai)
                            for (int bj = 0; bj < dj; ++bj) {
                                Element ea = basis_element(P, a, b, i, static_cast<std::size_t>(ai));
                                Element eb = basis_element(P, b, c, j, static_cast<std::size_t>(bj));
                                Element lhs = diff(P, compose(P, eb, ea));
                                Element rhs = compose(P, diff(P, eb), ea);
                                Element second = compose(P, eb, diff(P, ea));
                                const Scalar* s = &sign;
                                for (std::size_t t = 0; t < rhs.coeffs.size(); ++t)
                                    k.mul_add(rhs.coeffs[t], *s, second.coeffs[t]);
                                if (!is_zero(P, sub(P, lhs, rhs)))
                                    fail("axiom Leibniz fails: triple (" + obj_name(P, a) + "," +
                                         obj_name(P, b) + "," + obj_name(P, c) + "), degrees (" +
                                         std::to_string(i) + "," + std::to_string(j) +
                                         "), basis pair (" + std::to_string(ai) + "," +
                                         std::to_string(bj) + ")");
                            }
                    }
            }
        }
}

void check_associativity(const DGCategory& P) {
    int n_obj = static_cast<int>(P.objects.size());
    // distinct composition data is checked once: the four blocks entering an
    // instance identify it up to relabeling of objects
    std::set<std::tuple<const void*, const void*, const void*, const void*>> seen;
    for (int a = 0; a < n_obj; ++a)
        for (int b = 0; b < n_obj; ++b) {
            auto hab = P.homs.find({a, b});
            if (hab == P.homs.end()) continue;
            for (int c = 0; c < n_obj; ++c) {
                auto hbc = P.homs.find({b, c});
                if (hbc == P.homs.end()) continue;
                for (int e = 0; e < n_obj; ++e) {
                    auto hce = P.homs.find({c, e});
                    if (hce == P.homs.end()) continue;
                    for (const auto& [i, di] : hab->second)
                        for (const auto& [j, dj] : hbc->second)
                            for (const auto& [l, dl] : hce->second) {
                                if (di == 0 || dj == 0 || dl == 0) continue;
                                const void* k1 = P.comp_block(a, b, c, i, j);
                                const void* k2 = P.comp_block(a, c, e, i + j, l);
                                const void* k3 = P.comp_block(b, c, e, j, l);
                                const void* k4 = P.comp_block(a, b, e, i, j + l);
                                if (!k1 && !k2 && !k3 && !k4) continue;
                                if (!seen.insert({k1, k2, k3, k4}).second) continue;
                                for (int ai = 0; ai < di; ++ai)
                                    for (int bj = 0; bj < dj; ++bj)
                                        for (int cl = 0; cl < dl; ++cl) {
                                            Element ea = basis_element(P, a, b, i,
                                                                       static_cast<std::size_t>(ai));
                                            Element eb = basis_element(P, b, c, j,
                                                                       static_cast<std::size_t>(bj));
                                            Element ec = basis_element(P, c, e, l,
                                                                       static_cast<std::size_t>(cl));
                                            Element lhs = compose(P, ec, compose(P, eb, ea));
                                            Element rhs = compose(P, compose(P, ec, eb), ea);
                                            if (!is_zero(P, sub(P, lhs, rhs)))
                                                fail("axiom associativity fails: objects (" +
                                                     obj_name(P, a) + "," + obj_name(P, b) + "," +
                                                     obj_name(P, c) + "," + obj_name(P, e) +
                                                     "), degrees (" + std::to_string(i) + "," +
                                                     std::to_string(j) + "," + std::to_string(l) +
                                                     "), basis triple (" + std::to_string(ai) +
                                                     "," + std::to_string(bj) + "," +
                                                     std::to_string(cl) + ")");
                                        }
                            }
                }
            }
        }
}

void check_units(const DGCategory& P) {
    int n_obj = static_cast<int>(P.objects.size());
    for (int e = 0; e < n_obj; ++e) {
        Element one = identity_element(P, e);
        if (!is_zero(P, diff(P, one)))
            fail("axiom unit fails: d(1) != 0 for object " + obj_name(P, e));
    }
    for (int a = 0; a < n_obj; ++a)
        for (int b = 0; b < n_obj; ++b) {
            auto hab = P.homs.find({a, b});
            if (hab == P.homs.end()) continue;
            Element ia = identity_element(P, a);
            Element ib = identity_element(P, b);
            for (const auto& [i, di] : hab->second)
                for (int t = 0; t < di; ++t) {
                    Element x = basis_element(P, a, b, i, static_cast<std::size_t>(t));
                    if (!equal(P, compose(P, ib, x), x))
                        fail("axiom unit fails: 1 . x != x for pair (" + obj_name(P, a) + "," +
                             obj_name(P, b) + "), degree " + std::to_string(i) + ", basis " +
                             std::to_string(t));
                    if (!equal(P, compose(P, x, ia), x))
                        fail("axiom unit fails: x . 1 != x for pair (" + obj_name(P, a) + "," +
                             obj_name(P, b) + "), degree " + std::to_string(i) + ", basis " +
                             std::to_string(t));
                }
        }
}

void check_bound(const DGCategory& P) {
    for (const auto& [pair, degs] : P.homs)
        for (const auto& [deg, d] : degs)
            if (d > 0 && deg < -P.bound)
                fail("axiom degree bound fails: pair (" + obj_name(P, pair.first) + "," +
                     obj_name(P, pair.second) + ") has dimension " + std::to_string(d) +
                     " in degree " + std::to_string(deg) + " below -" + std::to_string(P.bound));
}

} // namespace

void validate_category(const DGCategory& P) {
    check_shapes(P);
    check_d_squared(P);
    check_leibniz(P);
    check_associativity(P);
    check_units(P);
    check_bound(P);
}

DGCategory base_change(const DGCategory& P, const Ring& R) {
    require(P.ring.is_field(), "base_change: category is not defined over its base field");
    require(P.ring.base() == R.base(), "base_change: ring is not an algebra over the category's field");
    DGCategory Q;
    Q.ring = R;
    Q.bound = P.bound;
    Q.objects = P.objects;
    Q.object_index = P.object_index;
    Q.homs = P.homs;
    std::size_t w = R.width();
    auto widen = [&](const std::vector<Scalar>& src) {
        std::vector<Scalar> out(src.size() * w, Scalar(0));
        for (std::size_t t = 0; t < src.size(); ++t) out[t * w] = src[t];
        return out;
    };
    for (const auto& [key, m] : P.diffs) {
        RMat wm(m.rows, m.cols, w);
        wm.a = widen(m.a);
        Q.diffs.emplace(key, std::move(wm));
    }
    for (const auto& [key, blk] : P.comps) {
        auto wb = std::make_shared<CompBlock>(blk->dj, blk->di, blk->dout, w);
        wb->t = widen(blk->t);
        Q.comps.emplace(key, std::move(wb));
    }
    for (const auto& id : P.ids) Q.ids.push_back(widen(id));
    return Q;
}

} // namespace mcdg
