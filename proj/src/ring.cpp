#include "mcdg/ring.hpp"

#include <algorithm>
#include <sstream>

namespace mcdg {

Ring Ring::field(const Field& k) {
    Ring r(k);
    r.basis_ = {"1"};
    r.mult_ = {RVec{k.one()}};
    r.in_ideal_ = {0};
    r.name_ = k.name();
    return r;
}

Ring Ring::square_zero(const Field& k, std::vector<std::string> basis,
                       std::vector<RVec> mult, std::vector<std::size_t> ideal,
                       std::string name) {
    Ring r(k);
    r.basis_ = std::move(basis);
    r.mult_ = std::move(mult);
    r.ideal_ = std::move(ideal);
    r.name_ = std::move(name);
    std::sort(r.ideal_.begin(), r.ideal_.end());
    r.in_ideal_.assign(r.basis_.size(), 0);
    for (std::size_t s : r.ideal_) {
        require(s < r.basis_.size(), "ring: ideal index out of range");
        require(s != 0, "ring: unit cannot lie in the ideal basis");
        r.in_ideal_[s] = 1;
    }
    r.validate();
    return r;
}

Ring Ring::dual_numbers(const Field& k) {
    std::size_t n = 2;
    std::vector<RVec> mult(n * n, RVec(n, k.zero()));
    mult[0 * n + 0][0] = k.one(); // 1*1 = 1
    mult[0 * n + 1][1] = k.one(); // 1*t = t
    mult[1 * n + 0][1] = k.one(); // t*1 = t
    // t*t = 0
    return square_zero(k, {"1", "t"}, std::move(mult), {1}, k.name() + "[t]/(t^2)");
}

Ring Ring::truncated_poly3(const Field& k) {
    std::size_t n = 3;
    std::vector<RVec> mult(n * n, RVec(n, k.zero()));
    auto set = [&](std::size_t i, std::size_t j, std::size_t l) { mult[i * n + j][l] = k.one(); };
    set(0, 0, 0); set(0, 1, 1); set(1, 0, 1);
    set(0, 2, 2); set(2, 0, 2); set(1, 1, 2);
    // x*x^2 = x^2*x = x^2*x^2 = 0
    return square_zero(k, {"1", "x", "x2"}, std::move(mult), {2}, k.name() + "[x]/(x^3)");
}

void Ring::validate() const {
    std::size_t n = width();
    require(n >= 1, "ring: empty basis");
    require(mult_.size() == n * n, "ring: multiplication table has wrong size");
    for (const RVec& v : mult_)
        require(v.size() == n, "ring: multiplication entry has wrong length");

    auto tbl = [&](std::size_t i, std::size_t j) -> const RVec& { return mult_[i * n + j]; };

    for (std::size_t i = 0; i < n; ++i) {
        // unit laws on the basis
        for (std::size_t l = 0; l < n; ++l) {
            Scalar want = (l == i) ? k_.one() : k_.zero();
            require(tbl(0, i)[l] == want && tbl(i, 0)[l] == want,
                    "ring: basis element 0 is not a unit (witness index " + std::to_string(i) + ")");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                require(tbl(i, j)[l] == tbl(j, i)[l],
                        "ring: not commutative (witness basis pair " + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    // associativity on basis triples: (r_i r_j) r_l == r_i (r_j r_l)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                RVec lhs(n, k_.zero()), rhs(n, k_.zero());
                for (std::size_t m = 0; m < n; ++m) {
                    if (!tbl(i, j)[m].is_zero())
                        for (std::size_t o = 0; o < n; ++o)
                            k_.mul_add(lhs[o], tbl(i, j)[m], tbl(m, l)[o]);
                    if (!tbl(j, l)[m].is_zero())
                        for (std::size_t o = 0; o < n; ++o)
                            k_.mul_add(rhs[o], tbl(j, l)[m], tbl(i, m)[o]);
                }
                require(lhs == rhs, "ring: not associative (witness basis triple " +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(l) + ")");
            }
    // span(ideal basis) is an ideal: r_i * r_s stays in the span
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < n; ++s) {
            if (!in_ideal_[s]) continue;
            for (std::size_t l = 0; l < n; ++l)
                require(in_ideal_[l] || tbl(i, s)[l].is_zero(),
                        "ring: ideal basis does not span an ideal (witness pair " +
                            std::to_string(i) + "," + std::to_string(s) + ")");
        }
    // square-zero: products of ideal basis elements vanish
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            if (!in_ideal_[s] || !in_ideal_[t]) continue;
            for (std::size_t l = 0; l < n; ++l)
                require(tbl(s, t)[l].is_zero(),
                        "ring: ideal is not square-zero (witness pair " + std::to_string(s) +
                            "," + std::to_string(t) + ")");
        }
}

std::int64_t Ring::size() const {
    std::int64_t q = k_.size();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < width(); ++i) total *= q;
    return total;
}

RVec Ring::one() const {
    RVec v = zero();
    v[0] = k_.one();
    return v;
}

RVec Ring::from_scalar(const Scalar& c) const {
    RVec v = zero();
    v[0] = k_.canon(c);
    return v;
}

void Ring::clear(Scalar* x) const {
    for (std::size_t l = 0; l < width(); ++l) x[l] = Scalar(0);
}

void Ring::add_to(Scalar* acc, const Scalar* x) const {
    for (std::size_t l = 0; l < width(); ++l) k_.add_to(acc[l], x[l]);
}

void Ring::sub_from(Scalar* acc, const Scalar* x) const {
    for (std::size_t l = 0; l < width(); ++l) acc[l] = k_.sub(acc[l], x[l]);
}

void Ring::neg(Scalar* x) const {
    for (std::size_t l = 0; l < width(); ++l) x[l] = k_.neg(x[l]);
}

void Ring::mul_add(Scalar* acc, const Scalar* a, const Scalar* b) const {
    std::size_t n = width();
    if (n == 1) { k_.mul_add(acc[0], a[0], b[0]); return; }
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = k_.mul(a[i], b[j]);
            const RVec& t = mult_[i * n + j];
            for (std::size_t l = 0; l < n; ++l)
                if (!t[l].is_zero()) k_.mul_add(acc[l], c, t[l]);
        }
    }
}

void Ring::axpy(Scalar* acc, const Scalar& c, const Scalar* x) const {
    if (c.is_zero()) return;
    for (std::size_t l = 0; l < width(); ++l)
        if (!x[l].is_zero()) k_.mul_add(acc[l], c, x[l]);
}

bool Ring::is_zero(const Scalar* x) const {
    for (std::size_t l = 0; l < width(); ++l)
        if (!x[l].is_zero()) return false;
    return true;
}

bool Ring::equal(const Scalar* x, const Scalar* y) const {
    for (std::size_t l = 0; l < width(); ++l)
        if (x[l] != y[l]) return false;
    return true;
}

bool Ring::in_ideal_span(const Scalar* x) const {
    for (std::size_t l = 0; l < width(); ++l)
        if (!in_ideal_[l] && !x[l].is_zero()) return false;
    return true;
}

RVec Ring::mul(const RVec& a, const RVec& b) const {
    RVec out = zero();
    mul_add(out.data(), a.data(), b.data());
    return out;
}

RVec Ring::add(const RVec& a, const RVec& b) const {
    RVec out = a;
    add_to(out.data(), b.data());
    return out;
}

RVec Ring::sub(const RVec& a, const RVec& b) const {
    RVec out = a;
    sub_from(out.data(), b.data());
    return out;
}

void Ring::mul_matrix(const Scalar* x, std::vector<Scalar>& out) const {
    std::size_t n = width();
    out.assign(n * n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const RVec& t = mult_[i * n + j];
            for (std::size_t l = 0; l < n; ++l)
                if (!t[l].is_zero()) k_.mul_add(out[l * n + j], x[i], t[l]);
        }
    }
}

Ring Ring::quotient() const {
    require(!ideal_.empty(), "ring: quotient requested but the ideal is zero");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < width(); ++i)
        if (!in_ideal_[i]) keep.push_back(i);
    std::size_t m = keep.size();
    if (m == 1) return Ring::field(k_);
    std::vector<std::string> basis(m);
    std::vector<RVec> mult(m * m, RVec(m, k_.zero()));
    for (std::size_t a = 0; a < m; ++a) basis[a] = basis_[keep[a]];
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const RVec& t = mult_[keep[a] * width() + keep[b]];
            for (std::size_t c = 0; c < m; ++c) mult[a * m + b][c] = t[keep[c]];
        }
    // Distinguished ideal of the quotient: the basis elements that multiply
    // every non-unit basis element to zero. When that candidate fails the
    // square-zero ring contract the quotient simply carries no ideal.
    std::vector<std::size_t> ideal;
    for (std::size_t a = 1; a < m; ++a) {
        bool kills = true;
        for (std::size_t b = 1; b < m && kills; ++b)
            for (std::size_t c = 0; c < m && kills; ++c)
                if (!mult[a * m + b][c].is_zero()) kills = false;
        if (kills) ideal.push_back(a);
    }
    Ring q(k_);
    q.basis_ = basis;
    q.mult_ = mult;
    q.name_ = name_ + "/I";
    q.ideal_ = ideal;
    q.in_ideal_.assign(m, 0);
    for (std::size_t s : q.ideal_) q.in_ideal_[s] = 1;
    try {
        q.validate();
    } catch (const error&) {
        q.ideal_.clear();
        q.in_ideal_.assign(m, 0);
        q.validate();
    }
    return q;
}

RVec Ring::reduce_mod_ideal(const RVec& x) const {
    require(x.size() == width(), "reduce_mod_ideal: wrong element length");
    RVec out;
    out.reserve(width() - ideal_.size());
    for (std::size_t i = 0; i < width(); ++i)
        if (!in_ideal_[i]) out.push_back(x[i]);
    return out;
}

RVec Ring::lift_section(const RVec& y) const {
    require(y.size() == width() - ideal_.size(), "lift_section: wrong element length");
    RVec out(width(), Scalar(0));
    std::size_t j = 0;
    for (std::size_t i = 0; i < width(); ++i)
        if (!in_ideal_[i]) out[i] = y[j++];
    return out;
}

std::string Ring::to_string(const RVec& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < width(); ++i) {
        if (x[i].is_zero()) continue;
        if (!first) os << " + ";
        os << k_.to_string(x[i]);
        if (i > 0) os << "*" << basis_[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool Ring::operator==(const Ring& o) const {
    return k_ == o.k_ && basis_ == o.basis_ && mult_ == o.mult_ && ideal_ == o.ideal_;
}

} // namespace mcdg
