#include "mcdg/variety.hpp"

#include <sstream>

namespace mcdg {

StructureConstants extract_structure_constants(const DGCategory& P, int obj) {
    require(P.ring.is_field(), "extract_structure_constants: category must be defined over a field");
    StructureConstants sc;
    sc.r = P.dim(obj, obj, 1);
    sc.s = P.dim(obj, obj, 2);
    sc.b.reserve(static_cast<std::size_t>(sc.r));
    for (int i = 0; i < sc.r; ++i) {
        Element e = basis_element(P, obj, obj, 1, static_cast<std::size_t>(i));
        sc.b.push_back(diff(P, e).coeffs);
    }
    for (int i = 0; i < sc.r; ++i)
        for (int j = 0; j < sc.r; ++j) {
            Element ei = basis_element(P, obj, obj, 1, static_cast<std::size_t>(i));
            Element ej = basis_element(P, obj, obj, 1, static_cast<std::size_t>(j));
            Element prod = compose(P, ei, ej);
            if (!is_zero(P, prod)) sc.a[{i, j}] = prod.coeffs;
        }
    return sc;
}

CurvatureIdeal curvature_ideal(const DGCategory& P, int obj) {
    StructureConstants sc = extract_structure_constants(P, obj);
    CurvatureIdeal I;
    I.k = P.ring.base();
    I.object = P.objects[static_cast<std::size_t>(obj)];
    I.r = sc.r;
    I.s = sc.s;
    I.gens.assign(static_cast<std::size_t>(sc.s), GenPoly{});
    for (int i = 0; i < sc.r; ++i)
        for (int l = 0; l < sc.s; ++l) {
            const Scalar& c = sc.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            if (!c.is_zero()) I.gens[static_cast<std::size_t>(l)].lin.push_back({i, c});
        }
    for (const auto& [pair, coeffs] : sc.a)
        for (int l = 0; l < sc.s; ++l)
            if (!coeffs[static_cast<std::size_t>(l)].is_zero())
                I.gens[static_cast<std::size_t>(l)].quad.push_back(
                    {pair.first, pair.second, coeffs[static_cast<std::size_t>(l)]});
    return I;
}

std::vector<RVec> evaluate_ideal(const CurvatureIdeal& I, const Ring& B,
                                 const std::vector<RVec>& z) {
    require(B.base() == I.k, "evaluate_ideal: ring is not an algebra over the ideal's field");
    require(z.size() == static_cast<std::size_t>(I.r), "evaluate_ideal: point has wrong length");
    for (const RVec& v : z)
        require(v.size() == B.width(), "evaluate_ideal: point coordinate has wrong width");
    std::vector<RVec> out;
    out.reserve(I.gens.size());
    for (const GenPoly& g : I.gens) {
        RVec acc = B.zero();
        for (const LinTerm& t : g.lin)
            B.axpy(acc.data(), t.c, z[static_cast<std::size_t>(t.i)].data());
        for (const QuadTerm& t : g.quad) {
            RVec prod = B.zero();
            B.mul_add(prod.data(), z[static_cast<std::size_t>(t.i)].data(),
                      z[static_cast<std::size_t>(t.j)].data());
            B.axpy(acc.data(), t.c, prod.data());
        }
        out.push_back(std::move(acc));
    }
    return out;
}

bool is_point(const CurvatureIdeal& I, const Ring& B, const std::vector<RVec>& z) {
    for (const RVec& v : evaluate_ideal(I, B, z))
        if (!B.is_zero(v.data())) return false;
    return true;
}

std::vector<std::vector<RVec>> enumerate_points(const CurvatureIdeal& I, const Ring& B,
                                                std::size_t guard) {
    require(B.base().is_finite(), "enumerate_points: ring is not finite");
    std::int64_t q = B.base().size();
    std::size_t coords = static_cast<std::size_t>(I.r) * B.width();
    double space = 1.0;
    for (std::size_t i = 0; i < coords; ++i) space *= static_cast<double>(q);
    require(space <= static_cast<double>(guard),
            "enumerate_points: search space of size about " + std::to_string(space) +
                " exceeds the guard threshold " + std::to_string(guard));
    std::vector<std::vector<RVec>> points;
    std::vector<std::int64_t> odo(coords, 0);
    std::vector<RVec> z(static_cast<std::size_t>(I.r), B.zero());
    bool done = coords == 0;
    while (true) {
        for (std::size_t t = 0; t < coords; ++t)
            z[t / B.width()][t % B.width()] = Scalar(odo[t]);
        if (is_point(I, B, z)) points.push_back(z);
        if (done) break;
        std::size_t pos = 0;
        while (pos < coords) {
            if (++odo[pos] < q) break;
            odo[pos] = 0;
            ++pos;
        }
        if (pos == coords) break;
    }
    return points;
}

std::vector<std::vector<Scalar>> enumerate_points(const CurvatureIdeal& I, std::size_t guard) {
    Ring B = Ring::field(I.k);
    std::vector<std::vector<Scalar>> out;
    for (const auto& pt : enumerate_points(I, B, guard)) {
        std::vector<Scalar> flat;
        flat.reserve(pt.size());
        for (const RVec& v : pt) flat.push_back(v[0]);
        out.push_back(std::move(flat));
    }
    return out;
}

std::string emit_ideal(const CurvatureIdeal& I) {
    std::ostringstream os;
    os << "# curvature ideal\n";
    os << "# object: " << I.object << "\n";
    os << "# r: " << I.r << "\n";
    os << "# s: " << I.s << "\n";
    for (std::size_t l = 0; l < I.gens.size(); ++l) {
        os << "c_" << (l + 1) << " =";
        const GenPoly& g = I.gens[l];
        bool first = true;
        for (const LinTerm& t : g.lin) {
            os << (first ? " " : " + ") << I.k.to_string(t.c) << "*x" << (t.i + 1);
            first = false;
        }
        for (const QuadTerm& t : g.quad) {
            os << (first ? " " : " + ") << I.k.to_string(t.c) << "*x" << (t.i + 1) << "*x"
               << (t.j + 1);
            first = false;
        }
        if (first) os << " 0";
        os << "\n";
    }
    return os.str();
}

bool ideal_equal(const CurvatureIdeal& A, const CurvatureIdeal& B) {
    return A.k == B.k && A.r == B.r && A.s == B.s && A.gens == B.gens;
}

namespace {

GenPoly normalize_poly(const Field& k, const GenPoly& g) {
    GenPoly out;
    out.lin = g.lin;
    std::map<std::pair<int, int>, Scalar> quad;
    for (const QuadTerm& t : g.quad) {
        std::pair<int, int> key = t.i <= t.j ? std::make_pair(t.i, t.j) : std::make_pair(t.j, t.i);
        auto [it, fresh] = quad.emplace(key, t.c);
        if (!fresh) it->second = k.add(it->second, t.c);
    }
    for (const auto& [key, c] : quad)
        if (!c.is_zero()) out.quad.push_back({key.first, key.second, c});
    return out;
}

} // namespace

bool ideal_equal_normalized(const CurvatureIdeal& A, const CurvatureIdeal& B) {
    if (A.k != B.k || A.r != B.r || A.s != B.s || A.gens.size() != B.gens.size()) return false;
    for (std::size_t l = 0; l < A.gens.size(); ++l)
        if (!(normalize_poly(A.k, A.gens[l]) == normalize_poly(B.k, B.gens[l]))) return false;
    return true;
}

} // namespace mcdg
