#include "cvlab/identities.hpp"

#include <sstream>

namespace cvlab {

namespace {

std::string caps_to_string(const Caps& caps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (i) os << ",";
        os << caps[i];
    }
    return os.str();
}

std::string zs_to_string(const std::vector<GaussianRational>& z) {
    std::ostringstream os;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) os << ",";
        os << to_string(z[i]);
    }
    return os.str();
}

void require_z_matches(const Caps& caps, const std::vector<GaussianRational>& z) {
    if (z.size() != caps.size())
        throw std::domain_error("z list and caps must have the same length");
}

void require_m_range(std::int64_t m, std::int64_t N, std::int64_t lo = 1) {
    if (m < lo || m > N)
        throw std::domain_error("m out of range for this identity");
}

void finish(IdentityReport& r) {
    r.holds = r.lhs == r.rhs &&
              (!r.lhs2.has_value() || *r.lhs2 == *r.rhs2);
}

}  // namespace

IdentityReport check_eq8(const Caps& caps, const std::vector<GaussianRational>& z,
                         std::int64_t m, std::uint64_t budget) {
    require_z_matches(caps, z);
    const std::int64_t N = caps.total();
    require_m_range(m, N);

    IdentityReport r;
    r.identity_id = "eq8";
    r.params = {{"caps", caps_to_string(caps)},
                {"z", zs_to_string(z)},
                {"m", std::to_string(m)}};

    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const auto& k = en.current();
        GaussianRational inner;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) inner += z[i] * BigInt(k[i]);
        r.lhs += inner * composition_weight(k, caps);
    }

    GaussianRational weighted;
    for (std::size_t i = 0; i < z.size(); ++i) weighted += z[i] * BigInt(caps[i]);
    r.rhs = weighted * make_rational(BigInt(m) * binomial(N, m), N);

    finish(r);
    return r;
}

IdentityReport check_eq12(const Caps& caps, std::int64_t m, std::uint64_t budget) {
    require_m_range(m, caps.total());

    IdentityReport r;
    r.identity_id = "eq12";
    r.params = {{"caps", caps_to_string(caps)}, {"m", std::to_string(m)}};
    r.lhs = GaussianRational(Rational(count_compositions(caps, m, budget)));
    r.rhs = GaussianRational(Rational(binomial(caps.total(), m)));
    finish(r);
    return r;
}

IdentityReport check_eq13(std::int64_t a, std::int64_t b, std::int64_t m) {
    if (a < 0 || b < 0 || m < 0)
        throw std::domain_error("check_eq13: a, b, m must be >= 0");

    IdentityReport r;
    r.identity_id = "eq13";
    r.params = {{"a", std::to_string(a)},
                {"b", std::to_string(b)},
                {"m", std::to_string(m)}};

    BigInt lhs(0);
    for (std::int64_t k = 0; k <= m; ++k) lhs += binomial(a, k) * binomial(b, m - k);
    r.lhs = GaussianRational(Rational(lhs));
    r.rhs = GaussianRational(Rational(binomial(a + b, m)));
    finish(r);
    return r;
}

IdentityReport check_eq14_corrected(std::int64_t n1, std::int64_t n2,
                                    const GaussianRational& z, std::int64_t m) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("check_eq14: n1, n2 must be >= 1");
    require_m_range(m, n1 + n2);

    IdentityReport r;
    r.identity_id = "eq14";
    r.params = {{"n1", std::to_string(n1)},
                {"n2", std::to_string(n2)},
                {"z", to_string(z)},
                {"m", std::to_string(m)}};

    for (std::int64_t k = 0; k <= m; ++k) {
        const BigInt w = binomial(n1, k) * binomial(n2, m - k);
        if (sgn(w) == 0) continue;
        r.lhs += (z * BigInt(k) + GaussianRational(Rational(m - k))) * w;
    }

    const GaussianRational base =
        (z * BigInt(n1) + GaussianRational(Rational(n2))) *
        make_rational(binomial(n1 + n2, m), n1 + n2);
    r.rhs = base * Rational(m);
    r.printed_rhs = base * Rational(2 * m);
    r.note = "erratum: printed right-hand side carries factor 2m; "
             "the oracle-verified factor is m";
    finish(r);
    return r;
}

IdentityReport check_eq15_16_corrected(std::int64_t n1, std::int64_t n2,
                                       std::int64_t n3, const GaussianRational& z,
                                       const GaussianRational& w, std::int64_t m,
                                       std::uint64_t budget) {
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw std::domain_error("check_eq15_16: n1, n2, n3 must be >= 1");
    const std::int64_t N = n1 + n2 + n3;
    require_m_range(m, N);

    IdentityReport r;
    r.identity_id = "eq15_16";
    r.params = {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)},
                {"n3", std::to_string(n3)}, {"z", to_string(z)},
                {"w", to_string(w)},        {"m", std::to_string(m)}};

    const Caps caps({n1, n2, n3});
    GaussianRational lhs16;
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const auto& k = en.current();
        const BigInt weight = composition_weight(k, caps);
        GaussianRational inner = z * BigInt(k[0]) + w * BigInt(k[1]) +
                                 GaussianRational(Rational(k[2]));
        r.lhs += inner * weight;
        lhs16 += GaussianRational(Rational(2 * m - k[0] - k[1])) * weight;
    }
    r.lhs2 = lhs16;

    const Rational unit = make_rational(binomial(N, m), N);
    const GaussianRational dir15 =
        z * BigInt(n1) + w * BigInt(n2) + GaussianRational(Rational(n3));
    const GaussianRational dir16(Rational(n1 + n2 + 2 * n3));
    r.rhs = dir15 * (unit * Rational(m));
    r.rhs2 = dir16 * (unit * Rational(m));
    r.printed_rhs = dir15 * (unit * Rational(2 * m));
    r.printed_rhs2 = dir16 * (unit * Rational(2 * m));
    r.note = "erratum: both printed right-hand sides carry factor 2m; "
             "the oracle-verified factor is m";
    finish(r);
    return r;
}

IdentityReport check_eq17(std::int64_t s, std::int64_t l, std::int64_t m,
                          std::uint64_t budget) {
    if (s < 1 || l < 1) throw std::domain_error("check_eq17: s, l must be >= 1");
    require_m_range(m, s * l);

    IdentityReport r;
    r.identity_id = "eq17";
    r.params = {{"s", std::to_string(s)},
                {"l", std::to_string(l)},
                {"m", std::to_string(m)}};

    const Caps caps(std::vector<std::int64_t>(static_cast<std::size_t>(s), l));
    BigInt lhs(0);
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const auto& k = en.current();
        std::int64_t linear = 0;
        for (std::size_t i = 0; i < k.size(); ++i)
            linear += static_cast<std::int64_t>(i + 1) * k[i];
        lhs += composition_weight(k, caps) * linear;
    }
    r.lhs = GaussianRational(Rational(lhs));

    const Rational rhs =
        make_rational(BigInt(m) * (s + 1), 2) * Rational(binomial(s * l, m));
    r.rhs = GaussianRational(rhs);
    finish(r);
    r.holds = r.holds && rhs.get_den() == 1;  // right side must be an integer
    return r;
}

IdentityReport check_eq21(std::int64_t n, std::int64_t s, std::int64_t m,
                          std::uint64_t budget) {
    if (n < 2) throw std::domain_error("check_eq21: n must be >= 2");
    if (s < 1) throw std::domain_error("check_eq21: s must be >= 1");
    require_m_range(m, s * (n - 1));

    IdentityReport r;
    r.identity_id = "eq21";
    r.params = {{"n", std::to_string(n)},
                {"s", std::to_string(s)},
                {"m", std::to_string(m)}};

    // Digit weights 1, n, n^2, ..., n^{s-1}.
    std::vector<BigInt> digit(static_cast<std::size_t>(s));
    digit[0] = 1;
    for (std::size_t i = 1; i < digit.size(); ++i) digit[i] = digit[i - 1] * n;

    const Caps caps(std::vector<std::int64_t>(static_cast<std::size_t>(s), n - 1));
    BigInt lhs(0);
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const auto& k = en.current();
        BigInt value(0);
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) value += digit[i] * k[i];
        lhs += composition_weight(k, caps) * value;
    }
    r.lhs = GaussianRational(Rational(lhs));

    BigInt pow_ns(1);
    for (std::int64_t i = 0; i < s; ++i) pow_ns *= n;
    r.rhs = GaussianRational(Rational((pow_ns - 1) * binomial(s * (n - 1) - 1, m - 1)));
    finish(r);

    // Binary cross-check: digit vectors with digit sum m below 2^s are
    // exactly the integers below 2^s with m one-bits.
    if (n == 2 && s <= 62) {
        BigInt popcount_sum(0);
        const std::uint64_t limit = std::uint64_t{1} << static_cast<unsigned>(s);
        for (std::uint64_t v = 0; v < limit; ++v)
            if (__builtin_popcountll(v) == m) popcount_sum += v;
        if (GaussianRational(Rational(popcount_sum)) != r.lhs) {
            r.holds = false;
            r.note = "binary cross-check disagrees with the composition sum";
        }
    }
    return r;
}

IdentityReport check_eq22(const Caps& caps, const std::vector<GaussianRational>& z,
                          std::int64_t m, std::uint64_t budget) {
    require_z_matches(caps, z);
    const std::int64_t N = caps.total();
    require_m_range(m, N, /*lo=*/2);

    IdentityReport r;
    r.identity_id = "eq22";
    r.params = {{"caps", caps_to_string(caps)},
                {"z", zs_to_string(z)},
                {"m", std::to_string(m)}};

    Rational lhs;
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const auto& k = en.current();
        GaussianRational inner;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) inner += z[i] * BigInt(k[i]);
        lhs += inner.abs_sq() * Rational(composition_weight(k, caps));
    }
    r.lhs = GaussianRational(lhs);

    Rational sum_abs;
    GaussianRational weighted;
    for (std::size_t i = 0; i < z.size(); ++i) {
        sum_abs += Rational(caps[i]) * z[i].abs_sq();
        weighted += z[i] * BigInt(caps[i]);
    }
    r.rhs = GaussianRational(Rational(binomial(N - 2, m - 1)) * sum_abs +
                             Rational(binomial(N - 2, m - 2)) * weighted.abs_sq());
    finish(r);
    return r;
}

IdentityReport check_eq26(std::int64_t s, std::int64_t l, std::int64_t m,
                          std::uint64_t budget) {
    if (s < 1 || l < 1) throw std::domain_error("check_eq26: s, l must be >= 1");
    if (s * l < 2) throw std::domain_error("check_eq26: sl >= 2 required");
    require_m_range(m, s * l, /*lo=*/2);

    IdentityReport r;
    r.identity_id = "eq26";
    r.params = {{"s", std::to_string(s)},
                {"l", std::to_string(l)},
                {"m", std::to_string(m)}};

    const Caps caps(std::vector<std::int64_t>(static_cast<std::size_t>(s), l));
    BigInt lhs(0);
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const auto& k = en.current();
        std::int64_t linear = 0;
        for (std::size_t i = 0; i < k.size(); ++i)
            linear += static_cast<std::int64_t>(i + 1) * k[i];
        lhs += composition_weight(k, caps) * (BigInt(linear) * linear);
    }
    r.lhs = GaussianRational(Rational(lhs));

    const BigInt poly = BigInt(3) * s * s * l * m + BigInt(3) * s * l * m +
                        BigInt(s) * s * l - BigInt(4) * s * m - BigInt(s) * l -
                        BigInt(2) * m;
    const Rational rhs = make_rational(BigInt(m) * (s + 1) * poly,
                                       BigInt(12) * (s * l - 1)) *
                         Rational(binomial(s * l, m));
    r.rhs = GaussianRational(rhs);
    finish(r);
    r.holds = r.holds && rhs.get_den() == 1;
    return r;
}

IdentityReport check_eq27_corrected(const Caps& caps,
                                    const std::vector<GaussianRational>& z,
                                    std::int64_t m, std::uint64_t budget) {
    require_z_matches(caps, z);
    const std::int64_t N = caps.total();
    if (N < 2) throw std::domain_error("check_eq27: N >= 2 required");
    require_m_range(m, N);

    IdentityReport r;
    r.identity_id = "eq27";
    r.params = {{"caps", caps_to_string(caps)},
                {"z", zs_to_string(z)},
                {"m", std::to_string(m)}};

    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const auto& k = en.current();
        GaussianRational inner;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) inner += z[i] * BigInt(k[i]);
        r.lhs += inner.pow(3) * composition_weight(k, caps);
    }

    GaussianRational sum1, sum2, sum3;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const BigInt n(caps[i]);
        sum1 += z[i] * n;
        sum2 += z[i].pow(2) * n;
        sum3 += z[i].pow(3) * n;
    }
    const Rational denom = make_rational(1, BigInt(N) * (N - 1));
    const GaussianRational printed_bracket =
        sum3 * (Rational(BigInt(m) * (N + 2 - 3 * m)) * denom) +
        sum2 * sum1 * (Rational(BigInt(3) * m * (m - 1)) * denom);
    GaussianRational bracket = printed_bracket;
    if (m >= 3) {
        // Distinct-index triples, absent from the printed right-hand side.
        // The term vanishes for m <= 2, which is what keeps it hidden on
        // small regression instances; m >= 3 forces N >= 3 here.
        const Rational triple_scale = make_rational(
            BigInt(m) * (m - 1) * (m - 2), BigInt(N) * (N - 1) * (N - 2));
        bracket += (sum1.pow(3) - sum2 * sum1 * Rational(3) + sum3 * Rational(2)) *
                   triple_scale;
    }
    r.rhs = bracket * Rational(binomial(N, m));
    r.printed_rhs = printed_bracket;
    r.note =
        "erratum: printed right-hand side omits the C(N,m) factor and the "
        "distinct-triples term that first appears at m = 3";
    finish(r);
    return r;
}

IdentityReport check_remark22(std::int64_t k1, std::int64_t k2, std::int64_t n) {
    if (k1 < 1 || k2 < 1)
        throw std::domain_error("check_remark22: k1, k2 must be >= 1");
    if (n < 0) throw std::domain_error("check_remark22: n must be >= 0");

    IdentityReport r;
    r.identity_id = "remark22";
    r.params = {{"k1", std::to_string(k1)},
                {"k2", std::to_string(k2)},
                {"n", std::to_string(n)}};

    BigInt lhs(0);
    for (std::int64_t v = 0; v <= n; ++v)
        lhs += binomial(k1 + v - 1, v) * binomial(k2 + n - v - 1, n - v);
    r.lhs = GaussianRational(Rational(lhs));
    r.rhs = GaussianRational(Rational(binomial(k1 + k2 + n - 1, n)));
    finish(r);
    return r;
}

}  // namespace cvlab
