#pragma once

#include <optional>
#include <vector>

#include "mcdg/dgcat.hpp"

namespace mcdg {

/// Object of the twisted category: a base object together with a degree-1
/// endomorphism eta satisfying curvature(eta) = 0.
struct MCObject {
    int object = 0;
    Element eta;
};

/// The graded spaces P^i(E,F) with the twisted differential d_{eta,zeta};
/// eta twists the source object E, zeta the target object F.
struct TwistedComplex {
    const DGCategory* P = nullptr;
    Element eta;
    Element zeta;
};

/// diff(eta) + compose(eta, eta) for a degree-1 endomorphism.
Element curvature(const DGCategory& P, const Element& eta);

/// True iff curvature(eta) vanishes exactly.
bool is_mc(const DGCategory& P, const Element& eta);

/// d_{eta,zeta}(a) = d(a) + zeta.a - (-1)^{|a|} a.eta for a: E -> F with eta
/// degree 1 on (E,E) and zeta degree 1 on (F,F). Neither twist need be MC.
Element twisted_diff(const DGCategory& P, const Element& eta, const Element& zeta,
                     const Element& a);

/// twisted_diff(zeta, zeta, curvature(zeta)). Zero for every degree-1 zeta,
/// MC or not; exposed so the identity stays testable.
Element bianchi_defect(const DGCategory& P, const Element& zeta);

/// Matrix of d_{eta,zeta}: P^i(E,F) -> P^{i+1}(E,F) with ring coefficients
/// flattened over the base field; column order (basis slot, ring-basis slot).
KMatrix twisted_diff_kmatrix(const DGCategory& P, const Element& eta, const Element& zeta,
                             int degree);

/// Matrix of x |-> compose(beta, x) on P^degree(src, beta.src), flattened
/// over the base field.
KMatrix postcompose_kmatrix(const DGCategory& P, const Element& beta, int src, int degree);

/// Matrix of y |-> compose(y, alpha) on P^degree(alpha.dst, dst), flattened
/// over the base field.
KMatrix precompose_kmatrix(const DGCategory& P, const Element& alpha, int dst, int degree);

/// Preimage of target under the twisted differential: some x of degree
/// target.degree - 1 with d_{eta,zeta}(x) = target, or nullopt when target
/// is not a coboundary. Requires both twists MC (so the complex squares to
/// zero). Works over any coefficient ring by flattening to the base field.
std::optional<Element> solve_coboundary(const TwistedComplex& T, const Element& target);

/// Witness that a closed degree-0 element f is invertible in H^0:
/// b closed, compose(b, f) - 1 = d_{eta,eta}(g), compose(f, b) - 1 =
/// d_{zeta,zeta}(h). g lives on the source object of f, h on the target.
struct H0Inverse {
    Element b;
    Element g;
    Element h;
};

/// One exact linear solve in the stacked unknowns (b, g, h); nullopt when f
/// has no inverse class. Errors if f is not closed.
std::optional<H0Inverse> h0_inverse(const DGCategory& P, const Element& eta, const Element& zeta,
                                    const Element& f);

/// The dg-category with the given MC-objects as objects, the same graded hom
/// spaces, twisted differentials, and inherited composition and identities.
/// Objects are labeled "<base label>@<index in points>". Errors when a
/// listed eta is not MC. Composition tensors are shared with P, not copied.
DGCategory mc_category(const DGCategory& P, const std::vector<MCObject>& points);

} // namespace mcdg
