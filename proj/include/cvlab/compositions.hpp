#ifndef CVLAB_COMPOSITIONS_HPP
#define CVLAB_COMPOSITIONS_HPP

#include "cvlab/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cvlab {

/// Default cap on how many compositions one enumeration may yield.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Thrown when an enumeration would exceed its composition budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The multiplicity vector (n_1,...,n_s): s >= 1 positive integers.
class Caps {
public:
    explicit Caps(std::vector<std::int64_t> parts);

    std::size_t size() const { return parts_.size(); }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<std::int64_t>& parts() const { return parts_; }

    /// N = n_1 + ... + n_s.
    std::int64_t total() const { return total_; }

private:
    std::vector<std::int64_t> parts_;
    std::int64_t total_;
};

/// A tuple (k_1,...,k_s) with sum m and 0 <= k_i <= n_i.
using BoundedComposition = std::vector<std::int64_t>;

/// Streams every bounded composition of m under the given caps exactly once,
/// largest tuple first (lexicographically descending), in O(s) memory.
///
///   CompositionEnumerator en(caps, m);
///   while (en.advance()) use(en.current());
///
/// advance() throws BudgetExceeded once more than `budget` compositions
/// have been yielded.
class CompositionEnumerator {
public:
    CompositionEnumerator(Caps caps, std::int64_t m,
                          std::uint64_t budget = kDefaultBudget);

    /// Moves to the next composition; false when the stream is exhausted.
    bool advance();

    /// Valid only after advance() returned true.
    const BoundedComposition& current() const { return k_; }

    std::uint64_t yielded() const { return yielded_; }

private:
    Caps caps_;
    std::int64_t m_;
    std::uint64_t budget_;
    std::uint64_t yielded_ = 0;
    bool started_ = false;
    bool done_ = false;
    BoundedComposition k_;
    std::vector<std::int64_t> suffix_caps_;  // suffix_caps_[i] = n_{i+1}+...+n_s
};

/// Product C(n_1,k_1)...C(n_s,k_s); k must be entrywise within caps.
BigInt composition_weight(const BoundedComposition& k, const Caps& caps);

/// Sum of composition_weight over all bounded compositions of m.
/// Equals C(N, m).
BigInt count_compositions(const Caps& caps, std::int64_t m,
                          std::uint64_t budget = kDefaultBudget);

/// Sum of composition_weight * k_j (j is 1-based) over all bounded
/// compositions of m. Equals n_j * C(N-1, m-1).
BigInt weighted_linear_sum(const Caps& caps, std::int64_t m, std::size_t j,
                           std::uint64_t budget = kDefaultBudget);

}  // namespace cvlab

#endif
