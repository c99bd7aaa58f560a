#include "cvlab/distribution.hpp"

#include <random>
#include <set>
#include <utility>

namespace cvlab {

MultisetSpec::MultisetSpec(std::vector<GaussianRational> values_in, Caps mults_in)
    : values(std::move(values_in)), mults(std::move(mults_in)) {
    if (values.size() != mults.size())
        throw std::domain_error("MultisetSpec: values/mults length mismatch");
    std::set<GaussianRational, GaussianLess> seen;
    for (const auto& z : values)
        if (!seen.insert(z).second)
            throw std::domain_error("MultisetSpec: values must be pairwise distinct");
}

namespace {

void require_m_range(const MultisetSpec& spec, std::int64_t m) {
    if (m < 1 || m > spec.total())
        throw std::domain_error("m must satisfy 1 <= m <= N");
}

GaussianRational subset_sum(const MultisetSpec& spec, const BoundedComposition& k) {
    GaussianRational sum;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] != 0) sum += spec.values[i] * BigInt(k[i]);
    return sum;
}

}  // namespace

Pmf pmf(const MultisetSpec& spec, std::int64_t m, std::uint64_t budget) {
    require_m_range(spec, m);
    Pmf out;
    out.subsets = binomial(spec.total(), m);
    CompositionEnumerator en(spec.mults, m, budget);
    while (en.advance()) {
        const BigInt w = composition_weight(en.current(), spec.mults);
        out.entries[subset_sum(spec, en.current())].q += w;
    }
    for (auto& [value, entry] : out.entries)
        entry.prob = make_rational(entry.q, out.subsets);
    return out;
}

MomentReport moment_oracle(const MultisetSpec& spec, std::int64_t m, int order,
                           bool absolute, std::uint64_t budget) {
    require_m_range(spec, m);
    if (order < 1) throw std::domain_error("moment_oracle: order must be >= 1");
    if (absolute && order % 2 != 0)
        throw std::domain_error(
            "moment_oracle: odd absolute moments are not rational; order must be "
            "even when absolute");

    GaussianRational total;
    CompositionEnumerator en(spec.mults, m, budget);
    while (en.advance()) {
        const BigInt w = composition_weight(en.current(), spec.mults);
        const GaussianRational sum = subset_sum(spec, en.current());
        GaussianRational term =
            absolute ? GaussianRational(Rational(sum.abs_sq()))
                           .pow(static_cast<unsigned>(order / 2))
                     : sum.pow(static_cast<unsigned>(order));
        total += term * w;
    }

    MomentReport r;
    r.order = order;
    r.absolute = absolute;
    r.method = MomentMethod::oracle;
    r.value = total * make_rational(1, binomial(spec.total(), m));
    return r;
}

MomentReport mean_closed(const MultisetSpec& spec, std::int64_t m) {
    require_m_range(spec, m);
    GaussianRational weighted;
    for (std::size_t i = 0; i < spec.distinct(); ++i)
        weighted += spec.values[i] * BigInt(spec.mults[i]);

    MomentReport r;
    r.order = 1;
    r.method = MomentMethod::closed_form;
    r.value = weighted * make_rational(m, spec.total());
    return r;
}

MomentReport second_abs_moment_closed(const MultisetSpec& spec, std::int64_t m) {
    const std::int64_t N = spec.total();
    if (N < 2) throw std::domain_error("second_abs_moment_closed: N >= 2 required");
    require_m_range(spec, m);

    Rational sum_abs;           // sum n_i |z_i|^2
    GaussianRational weighted;  // sum n_i z_i
    for (std::size_t i = 0; i < spec.distinct(); ++i) {
        sum_abs += Rational(spec.mults[i]) * spec.values[i].abs_sq();
        weighted += spec.values[i] * BigInt(spec.mults[i]);
    }

    MomentReport r;
    r.order = 2;
    r.absolute = true;
    r.method = MomentMethod::closed_form;
    const Rational scale = make_rational(m, BigInt(N) * (N - 1));
    r.value = GaussianRational(
        scale * (Rational(N - m) * sum_abs + Rational(m - 1) * weighted.abs_sq()));
    return r;
}

MomentReport third_moment_closed(const MultisetSpec& spec, std::int64_t m) {
    const std::int64_t N = spec.total();
    if (N < 2) throw std::domain_error("third_moment_closed: N >= 2 required");
    require_m_range(spec, m);

    GaussianRational sum1, sum2, sum3;  // sum n_i z_i^e for e = 1, 2, 3
    for (std::size_t i = 0; i < spec.distinct(); ++i) {
        const BigInt n(spec.mults[i]);
        const GaussianRational& z = spec.values[i];
        sum1 += z * n;
        sum2 += z.pow(2) * n;
        sum3 += z.pow(3) * n;
    }

    MomentReport r;
    r.order = 3;
    r.method = MomentMethod::closed_form;
    const Rational scale = make_rational(m, BigInt(N) * (N - 1));
    r.value = (sum3 * Rational(N + 2 - 3 * m) + sum2 * sum1 * Rational(3 * (m - 1))) *
              scale;
    if (m >= 3) {
        // Distinct-index triples: each unordered triple inside the drawn
        // subset contributes 6 z_i z_k z_n; m >= 3 forces N >= 3 here.
        const Rational triple_scale = make_rational(
            BigInt(m) * (m - 1) * (m - 2), BigInt(N) * (N - 1) * (N - 2));
        r.value += (sum1.pow(3) - sum2 * sum1 * Rational(3) + sum3 * Rational(2)) *
                   triple_scale;
    }
    return r;
}

namespace {

// Unbiased uniform draw from [0, n) by rejection; the loop discards the
// partial final block of the 64-bit range, so every residue is equally
// likely under any generator the standard pins down bit-exactly.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) return r % n;
    }
}

}  // namespace

std::vector<MomentReport> sample_moments(const MultisetSpec& spec, std::int64_t m,
                                         std::uint64_t trials, std::uint64_t seed) {
    require_m_range(spec, m);
    if (trials < 1) throw std::domain_error("sample_moments: trials must be >= 1");

    // Expand the compressed multiset into one slot per element.
    std::vector<const GaussianRational*> slots;
    slots.reserve(static_cast<std::size_t>(spec.total()));
    for (std::size_t i = 0; i < spec.distinct(); ++i)
        for (std::int64_t c = 0; c < spec.mults[i]; ++c)
            slots.push_back(&spec.values[i]);

    std::mt19937_64 gen(seed);
    const std::size_t N = slots.size();
    const auto mm = static_cast<std::size_t>(m);

    GaussianRational sum1;  // sum of draws X_t
    GaussianRational sum3;  // sum of X_t^3
    Rational abs1;          // sum of |X_t|^2
    Rational abs2;          // sum of |X_t|^4
    Rational abs3;          // sum of |X_t|^6 = |X_t^3|^2

    for (std::uint64_t t = 0; t < trials; ++t) {
        // Partial Fisher-Yates: after the loop, slots[0..m) is a uniform
        // m-subset of the multiset.
        for (std::size_t i = 0; i < mm; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(
                                          uniform_below(gen, N - i));
            std::swap(slots[i], slots[j]);
        }
        GaussianRational x;
        for (std::size_t i = 0; i < mm; ++i) x += *slots[i];

        const Rational a = x.abs_sq();
        sum1 += x;
        sum3 += x.pow(3);
        abs1 += a;
        abs2 += a * a;
        abs3 += a * a * a;
    }

    const Rational inv_n = make_rational(1, BigInt(trials));

    // Exact squared standard error of a sample mean: with S1 = sum of the
    // observations and S2 = sum of their |.|^2,
    //   se^2 = (S2 - |S1|^2 / n) / (n (n - 1)).
    const auto se_sq = [&](const Rational& s2_abs,
                           const Rational& s1_abs_sq) -> std::optional<Rational> {
        if (trials < 2) return std::nullopt;
        return (s2_abs - s1_abs_sq * inv_n) *
               make_rational(1, BigInt(trials) * BigInt(trials - 1));
    };

    const auto base = [&](int order, bool absolute) {
        MomentReport r;
        r.order = order;
        r.absolute = absolute;
        r.method = MomentMethod::monte_carlo;
        r.trials = trials;
        r.seed = seed;
        r.prng = "mt19937_64";
        return r;
    };

    MomentReport mean = base(1, false);
    mean.value = sum1 * inv_n;
    mean.se_sq = se_sq(abs1, sum1.abs_sq());

    MomentReport second = base(2, true);
    second.value = GaussianRational(abs1 * inv_n);
    second.se_sq = se_sq(abs2, abs1 * abs1);

    MomentReport third = base(3, false);
    third.value = sum3 * inv_n;
    third.se_sq = se_sq(abs3, sum3.abs_sq());

    return {mean, second, third};
}

}  // namespace cvlab
