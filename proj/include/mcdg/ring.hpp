#pragma once

#include <cstddef>
#include <vector>

#include "mcdg/scalar.hpp"

namespace mcdg {

/// Ring element: coefficient vector over the ring's basis.
using RVec = std::vector<Scalar>;

/// A coefficient ring: either a field k itself (width 1) or a
/// finite-dimensional commutative unital k-algebra given by structure
/// constants, together with a distinguished square-zero ideal spanned by a
/// subset of the basis.
///
/// Elements are coefficient vectors of length width(); most operations also
/// come in a raw-pointer form so they can act in place on slices of larger
/// flat arrays.
class Ring {
public:
    /// The field itself, as the trivial ring (width 1, empty ideal).
    static Ring field(const Field& k);

    /// General constructor; validates commutativity, associativity, unit,
    /// the ideal property of span(ideal basis), and square-zero-ness.
    /// mult[i*n+j] is the coefficient vector of r_i * r_j; basis[0] is the unit.
    static Ring square_zero(const Field& k, std::vector<std::string> basis,
                            std::vector<RVec> mult, std::vector<std::size_t> ideal,
                            std::string name);

    /// k[t]/(t^2) with ideal (t).
    static Ring dual_numbers(const Field& k);

    /// k[x]/(x^3) with square-zero ideal (x^2); its quotient is k[x]/(x^2).
    static Ring truncated_poly3(const Field& k);

    const Field& base() const { return k_; }
    std::size_t width() const { return basis_.size(); }
    bool is_field() const { return basis_.size() == 1; }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const std::vector<std::size_t>& ideal_indices() const { return ideal_; }
    bool index_in_ideal(std::size_t i) const { return in_ideal_[i]; }
    const std::string& name() const { return name_; }

    /// Number of elements (finite base field only): |k|^width.
    std::int64_t size() const;

    RVec zero() const { return RVec(width(), Scalar(0)); }
    RVec one() const;
    RVec from_scalar(const Scalar& c) const;

    // ---- raw-pointer element ops; all slices have length width() ----
    void clear(Scalar* x) const;
    void add_to(Scalar* acc, const Scalar* x) const;
    void sub_from(Scalar* acc, const Scalar* x) const;
    void neg(Scalar* x) const;
    /// acc += a * b (ring product)
    void mul_add(Scalar* acc, const Scalar* a, const Scalar* b) const;
    /// acc += c * x with c in k
    void axpy(Scalar* acc, const Scalar& c, const Scalar* x) const;
    bool is_zero(const Scalar* x) const;
    bool equal(const Scalar* x, const Scalar* y) const;
    /// true when every coefficient outside the ideal basis vanishes
    bool in_ideal_span(const Scalar* x) const;

    RVec mul(const RVec& a, const RVec& b) const;
    RVec add(const RVec& a, const RVec& b) const;
    RVec sub(const RVec& a, const RVec& b) const;

    /// Matrix of multiplication by x in the basis (width x width, column j =
    /// coefficients of x * r_j). Used to flatten ring-linear maps over k.
    void mul_matrix(const Scalar* x, std::vector<Scalar>& out) const;

    /// Quotient by the distinguished ideal: basis = non-ideal basis elements,
    /// structure constants projected.
    Ring quotient() const;

    /// Drop ideal coordinates; result lives in quotient().
    RVec reduce_mod_ideal(const RVec& x) const;
    /// The canonical k-linear section of the quotient map: ideal
    /// coordinates are set to zero. reduce_mod_ideal(lift_section(y)) == y.
    RVec lift_section(const RVec& y) const;

    std::string to_string(const RVec& x) const;

    bool operator==(const Ring& o) const;

private:
    Ring(Field k) : k_(k) {}
    Field k_;
    std::vector<std::string> basis_;
    std::vector<RVec> mult_;          // mult_[i*n+j], each of length n
    std::vector<std::size_t> ideal_;  // sorted indices into basis_
    std::vector<char> in_ideal_;
    std::string name_;

    void validate() const;
};

} // namespace mcdg
