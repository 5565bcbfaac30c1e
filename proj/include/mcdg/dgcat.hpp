#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "mcdg/linalg.hpp"
#include "mcdg/ring.hpp"

namespace mcdg {

/// Matrix over a coefficient ring: entries are ring elements, stored flat and
/// strided by the ring width. Entry (r,c) occupies a[(r*cols+c)*w .. +w).
struct RMat {
    std::size_t rows = 0, cols = 0, w = 1;
    std::vector<Scalar> a;

    RMat() = default;
    RMat(std::size_t r, std::size_t c, std::size_t width)
        : rows(r), cols(c), w(width), a(r * c * width, Scalar(0)) {}

    Scalar* entry(std::size_t r, std::size_t c) { return a.data() + (r * cols + c) * w; }
    const Scalar* entry(std::size_t r, std::size_t c) const {
        return a.data() + (r * cols + c) * w;
    }
    bool operator==(const RMat& o) const = default;
};

/// Homogeneous morphism: degree-i element of P^i(src, dst) as a coefficient
/// vector over the hom basis; each coefficient is a ring element (width
/// Scalars), so coeffs.size() == dim * width.
struct Element {
    int src = 0, dst = 0;
    int degree = 0;
    std::vector<Scalar> coeffs;
};

/// Composition tensor block for P^j(b,c) x P^i(a,b) -> P^{i+j}(a,c):
/// t[((bj*di + ai)*dout + o)*w + l] is coefficient l of the o-th output
/// coordinate of (basis bj) . (basis ai).
struct CompBlock {
    std::size_t dj = 0, di = 0, dout = 0, w = 1;
    std::vector<Scalar> t;

    CompBlock() = default;
    CompBlock(std::size_t j, std::size_t i, std::size_t out, std::size_t width)
        : dj(j), di(i), dout(out), w(width), t(j * i * out * width, Scalar(0)) {}

    Scalar* entry(std::size_t bj, std::size_t ai, std::size_t o) {
        return t.data() + ((bj * di + ai) * dout + o) * w;
    }
    const Scalar* entry(std::size_t bj, std::size_t ai, std::size_t o) const {
        return t.data() + ((bj * di + ai) * dout + o) * w;
    }
};

using CompKey = std::tuple<int, int, int, int, int>; // (a, b, c, i, j)

/// dg-category presented by structure constants: finitely many objects,
/// per-degree hom bases, differential matrices, composition tensors, and
/// identity coefficient vectors. P^i vanishes below degree -bound.
struct DGCategory {
    Ring ring = Ring::field(Field::rationals());
    int bound = 1;
    std::vector<std::string> objects;
    std::map<std::string, int> object_index;
    std::map<std::pair<int, int>, std::map<int, int>> homs; // (src,dst) -> degree -> dim
    std::map<std::tuple<int, int, int>, RMat> diffs;        // (src,dst,i)
    std::map<CompKey, std::shared_ptr<const CompBlock>> comps;
    std::vector<std::vector<Scalar>> ids; // per object, length dim P^0(E,E) * width

    int dim(int a, int b, int i) const;
    int min_degree(int a, int b) const;
    int max_degree(int a, int b) const;
    /// Differential matrix P^i(a,b) -> P^{i+1}(a,b); zero matrix if absent.
    RMat diff_matrix(int a, int b, int i) const;
    const CompBlock* comp_block(int a, int b, int c, int i, int j) const;
    int index_of(const std::string& label) const;
};

Element zero_element(const DGCategory& P, int src, int dst, int degree);
Element basis_element(const DGCategory& P, int src, int dst, int degree, std::size_t idx);
Element identity_element(const DGCategory& P, int obj);
bool is_zero(const DGCategory& P, const Element& x);
bool equal(const DGCategory& P, const Element& x, const Element& y);
Element add(const DGCategory& P, const Element& x, const Element& y);
Element sub(const DGCategory& P, const Element& x, const Element& y);
Element negate(const DGCategory& P, const Element& x);
/// Scale by a ring element.
Element scale(const DGCategory& P, const RVec& c, const Element& x);
std::string element_to_string(const DGCategory& P, const Element& x);

/// beta after alpha: requires alpha.dst == beta.src; degrees add.
Element compose(const DGCategory& P, const Element& beta, const Element& alpha);
/// Apply the stored differential.
Element diff(const DGCategory& P, const Element& x);

/// Exhaustive axiom check on basis tuples. Throws mcdg::error naming the
/// first violated axiom with a witnessing basis tuple, in the order:
/// shape consistency, d^2, Leibniz, associativity, unit laws, degree bound.
/// Composition blocks shared between object tuples (shared_ptr identity) are
/// checked once per distinct data tuple.
void validate_category(const DGCategory& P);

/// Extension of scalars along k -> R (unit embedding). P must be defined
/// over the field underlying R.
DGCategory base_change(const DGCategory& P, const Ring& R);

} // namespace mcdg
