#include "cvlab/exact.hpp"

#include <cstddef>
#include <unordered_map>
#include <utility>

namespace cvlab {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

// Memo for binomial values. Bounded so pathological argument streams cannot
// grow the cache without limit; beyond the bound we just recompute.
constexpr std::size_t kBinomialMemoCap = 1'000'000;

BigInt binomial_product(std::int64_t n, std::int64_t k) {
    // k is already reduced to min(k, n - k) by the caller.
    BigInt result(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) is always divisible by i: the running value
        // equals C(n - k + i, i), an integer.
        result *= n - k + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    if (k == 0) return BigInt(1);

    thread_local std::unordered_map<std::uint64_t, BigInt> memo;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    BigInt result = binomial_product(n, k);
    if (memo.size() < kBinomialMemoCap) memo.emplace(key, result);
    return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational d = b.abs_sq();
    if (sgn(d) == 0) throw std::domain_error("GaussianRational: division by zero");
    // a / b = a * conj(b) / |b|^2
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

GaussianRational GaussianRational::pow(unsigned e) const {
    GaussianRational base = *this;
    GaussianRational acc(Rational(1));
    while (e != 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

GaussianRational operator*(const GaussianRational& a, const BigInt& w) {
    return {a.re * w, a.im * w};
}

GaussianRational operator*(const BigInt& w, const GaussianRational& a) { return a * w; }

GaussianRational operator*(const GaussianRational& a, const Rational& w) {
    return {a.re * w, a.im * w};
}

GaussianRational operator*(const Rational& w, const GaussianRational& a) { return a * w; }

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_string(const GaussianRational& v) {
    if (v.is_real()) return to_string(v.re);
    std::string s = to_string(v.re);
    // The imaginary part carries its own sign; insert '+' only when needed.
    if (sgn(v.im) > 0) s += "+";
    s += to_string(v.im);
    s += "i";
    return s;
}

BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    BigInt v;
    if (digits.empty() || v.set_str(std::string(digits), 10) != 0)
        throw std::invalid_argument("parse_bigint: bad integer '" + std::string(text) + "'");
    return v;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    return make_rational(num, den);
}

namespace {

// Parses one real coefficient, allowing the shorthand "" / "+" / "-" that a
// bare "i" or "-i" produces for the imaginary part.
Rational parse_coefficient(std::string_view text) {
    if (text.empty() || text == "+") return Rational(1);
    if (text == "-") return Rational(-1);
    return parse_rational(text);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_gaussian: empty string");
    if (text.back() != 'i') return {parse_rational(text), Rational(0)};

    std::string_view body = text.substr(0, text.size() - 1);
    // Find the sign that separates real and imaginary terms: the last '+'
    // or '-' that is not a leading sign and does not follow '/' (rationals
    // keep their sign on the numerator after canonicalization, but accept
    // hand-written input defensively).
    std::size_t split = std::string_view::npos;
    for (std::size_t pos = body.size(); pos-- > 1;) {
        const char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != '/') {
            split = pos;
            break;
        }
    }
    if (split == std::string_view::npos) return {Rational(0), parse_coefficient(body)};

    Rational re = parse_rational(body.substr(0, split));
    std::string_view im_text = body.substr(split);
    Rational im = parse_coefficient(im_text);
    return {std::move(re), std::move(im)};
}

}  // namespace cvlab
