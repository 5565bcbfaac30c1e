#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "mcdg/error.hpp"

namespace mcdg {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals or a prime field F_p.
/// Prime-field values are kept as canonical residues 0..p-1 (denominator 1),
/// so equality of scalars is plain equality of representations.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::int64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }
    std::int64_t characteristic() const { return p_; }

    /// Number of elements; only defined for finite fields.
    std::int64_t size() const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(std::int64_t n) const;
    Scalar canon(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    void add_to(Scalar& acc, const Scalar& x) const;
    /// acc += a*b
    void mul_add(Scalar& acc, const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

    /// Canonical text form: "n" or "n/d" with d > 0.
    std::string to_string(const Scalar& a) const;
    /// Parses the canonical form; rejects everything else.
    Scalar parse(const std::string& text) const;

    /// "Q" or "F<p>".
    std::string name() const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_; // 0 for the rationals

    std::int64_t res(const Scalar& a) const;
};

} // namespace mcdg
