#ifndef CVLAB_DISTRIBUTION_HPP
#define CVLAB_DISTRIBUTION_HPP

#include "cvlab/compositions.hpp"
#include "cvlab/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cvlab {

/// A multiset of N = sum(mults) complex numbers given in compressed form:
/// pairwise-distinct values z_i, each with positive multiplicity n_i.
struct MultisetSpec {
    std::vector<GaussianRational> values;
    Caps mults;

    MultisetSpec(std::vector<GaussianRational> values_in, Caps mults_in);

    std::size_t distinct() const { return values.size(); }
    std::int64_t total() const { return mults.total(); }
};

struct PmfEntry {
    BigInt q;       // number of m-subsets of indices hitting this sum
    Rational prob;  // q / C(N, m)
};

/// Distribution of the subset-sum value: value -> (q, probability).
struct Pmf {
    std::map<GaussianRational, PmfEntry, GaussianLess> entries;
    BigInt subsets;  // C(N, m) = sum of all q
};

enum class MomentMethod { oracle, closed_form, monte_carlo };

struct MomentReport {
    int order = 1;
    bool absolute = false;
    GaussianRational value;  // real (im = 0) whenever absolute
    MomentMethod method = MomentMethod::oracle;

    // Monte-Carlo extras: the generator name, trial count, seed, and the
    // exact squared standard error of the estimate (present when trials >= 2).
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string prng;
    std::optional<Rational> se_sq;
};

/// Exact pmf of X(m, spec) by composition enumeration: equal values are
/// interchangeable, so each bounded composition contributes its binomial
/// weight to the q-count of its sum.
Pmf pmf(const MultisetSpec& spec, std::int64_t m,
        std::uint64_t budget = kDefaultBudget);

/// Brute-force moment: (1/C(N,m)) * sum of weight * f(subset sum), where
/// f is the order-th power, or |.|^order when absolute (order must then be
/// even, since only even absolute moments are rational).
MomentReport moment_oracle(const MultisetSpec& spec, std::int64_t m, int order,
                           bool absolute, std::uint64_t budget = kDefaultBudget);

/// E[X] = (m/N) * sum n_i z_i. Allows N = 1.
MomentReport mean_closed(const MultisetSpec& spec, std::int64_t m);

/// E[|X|^2] = m/(N(N-1)) * ((N-m) sum n_i |z_i|^2 + (m-1) |sum n_i z_i|^2).
/// Requires N >= 2.
MomentReport second_abs_moment_closed(const MultisetSpec& spec, std::int64_t m);

/// E[X^3], with P_e = sum n_i z_i^e:
///   m/(N(N-1)) * ((N+2-3m) P3 + 3(m-1) P2 P1)
///   + m(m-1)(m-2)/(N(N-1)(N-2)) * (P1^3 - 3 P1 P2 + 2 P3).
/// The second line collects the distinct-index triples of each subset and
/// vanishes for m <= 2. Requires N >= 2.
MomentReport third_moment_closed(const MultisetSpec& spec, std::int64_t m);

/// Monte-Carlo estimates of E[X], E[|X|^2], E[X^3] from `trials` uniform
/// m-subsets drawn without replacement (partial Fisher-Yates shuffle under
/// mt19937_64). Deterministic for a fixed seed. All accumulation is exact;
/// se_sq is the exact squared standard error of each estimate.
std::vector<MomentReport> sample_moments(const MultisetSpec& spec, std::int64_t m,
                                         std::uint64_t trials, std::uint64_t seed);

}  // namespace cvlab

#endif
