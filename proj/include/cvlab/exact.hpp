#ifndef CVLAB_EXACT_HPP
#define CVLAB_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cvlab {

/// Arbitrary-precision signed integer. GMP keeps the representation
/// canonical (unique sign/zero encoding), which the report layer relies on.
using BigInt = mpz_class;

/// Exact rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

/// Builds a canonical Rational from a numerator/denominator pair.
/// Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// C(n, k) with the vanishing convention: 0 when k < 0 or k > n, and
/// C(0, 0) = 1. Negative n is a domain error. Computed by the iterative
/// product with exact intermediate division; small results are memoized
/// in a bounded per-thread cache.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Element of Q(i): a complex number with rational real and imaginary
/// parts. All arithmetic is exact field arithmetic.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT implicit
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}  // NOLINT implicit
    GaussianRational(const BigInt& r) : re(r), im(0) {}  // NOLINT implicit

    bool is_real() const { return sgn(im) == 0; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 = re^2 + im^2, a nonnegative Rational.
    Rational abs_sq() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        a += b;
        return a;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        a -= b;
        return a;
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);

    /// Exact division; divisor must be nonzero.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return cmp(a.re, b.re) == 0 && cmp(a.im, b.im) == 0;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// z^e for e >= 0 (z^0 = 1).
    GaussianRational pow(unsigned e) const;
};

GaussianRational operator*(const GaussianRational& a, const BigInt& w);
GaussianRational operator*(const BigInt& w, const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const Rational& w);
GaussianRational operator*(const Rational& w, const GaussianRational& a);

/// Strict total order (lexicographic on re, then im); used for map keys.
struct GaussianLess {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const {
        const int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

// Decimal-string serialization. Rationals print as "num/den" ("num" when the
// denominator is 1); Gaussian rationals as "a", "a+bi" or "a-bi".
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
std::string to_string(const GaussianRational& v);

BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);

/// Parses "a/b+c/di" with optional parts: "1", "0+1i", "2/3-1/2i", "-i".
GaussianRational parse_gaussian(std::string_view text);

}  // namespace cvlab

#endif
