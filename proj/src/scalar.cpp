#include "mcdg/scalar.hpp"

#include <cctype>

namespace mcdg {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero residue mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (r != 1) fail("mod_inverse: " + std::to_string(a) + " not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return t;
}

} // namespace

Field Field::prime(std::int64_t p) {
    require(is_prime(p), "Field::prime: " + std::to_string(p) + " is not prime");
    require(p < (std::int64_t{1} << 31), "Field::prime: characteristic too large");
    return Field(p);
}

std::int64_t Field::size() const {
    require(is_finite(), "Field::size: field is infinite");
    return p_;
}

std::int64_t Field::res(const Scalar& a) const {
    // prime-field values are canonical residues, numerator fits in int64
    return static_cast<std::int64_t>(numerator(a));
}

Scalar Field::from_int(std::int64_t n) const {
    if (p_ == 0) return Scalar(n);
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar Field::canon(const Scalar& x) const {
    if (p_ == 0) return x;
    Int num = numerator(x), den = denominator(x);
    Int pn(p_);
    Int r = num % pn;
    if (r < 0) r += pn;
    std::int64_t rn = static_cast<std::int64_t>(r);
    Int d = den % pn;
    if (d < 0) d += pn;
    std::int64_t dn = static_cast<std::int64_t>(d);
    require(dn != 0, "Field::canon: denominator divisible by " + std::to_string(p_));
    if (dn != 1) rn = (static_cast<__int128>(rn) * mod_inverse(dn, p_)) % p_;
    return Scalar(rn);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a + b;
    std::int64_t r = res(a) + res(b);
    if (r >= p_) r -= p_;
    return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a - b;
    std::int64_t r = res(a) - res(b);
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a * b;
    std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(res(a)) * res(b)) % p_);
    return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ == 0) return -a;
    std::int64_t r = res(a);
    return Scalar(r == 0 ? 0 : p_ - r);
}

Scalar Field::inv(const Scalar& a) const {
    if (p_ == 0) {
        require(!a.is_zero(), "Field::inv: division by zero");
        return Scalar(1) / a;
    }
    std::int64_t r = res(a);
    require(r != 0, "Field::inv: division by zero");
    return Scalar(mod_inverse(r, p_));
}

void Field::add_to(Scalar& acc, const Scalar& x) const {
    if (p_ == 0) { acc += x; return; }
    std::int64_t r = res(acc) + res(x);
    if (r >= p_) r -= p_;
    acc = r;
}

void Field::mul_add(Scalar& acc, const Scalar& a, const Scalar& b) const {
    if (p_ == 0) { acc += a * b; return; }
    std::int64_t r = res(acc) + static_cast<std::int64_t>((static_cast<__int128>(res(a)) * res(b)) % p_);
    if (r >= p_) r -= p_;
    acc = r;
}

std::string Field::to_string(const Scalar& a) const {
    Int num = numerator(a), den = denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar Field::parse(const std::string& text) const {
    require(!text.empty(), "scalar parse: empty token");
    size_t i = 0;
    auto read_int = [&](const char* what) -> Int {
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
        require(digits > 0, std::string("scalar parse: expected ") + what + " in '" + text + "'");
        return Int(text.substr(start, i - start));
    };
    Int num = read_int("integer");
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int("denominator");
        require(den > 0, "scalar parse: denominator must be positive in '" + text + "'");
    }
    require(i == text.size(), "scalar parse: trailing characters in '" + text + "'");
    Scalar v(num, den);
    if (p_ != 0) v = canon(v);
    return v;
}

std::string Field::name() const {
    if (p_ == 0) return "Q";
    return "F" + std::to_string(p_);
}

} // namespace mcdg
