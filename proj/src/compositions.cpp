#include "cvlab/compositions.hpp"

#include <numeric>
#include <utility>

namespace cvlab {

Caps::Caps(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::domain_error("Caps: need at least one part");
    for (const auto n : parts_)
        if (n < 1) throw std::domain_error("Caps: every part must be >= 1");
    total_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

CompositionEnumerator::CompositionEnumerator(Caps caps, std::int64_t m,
                                             std::uint64_t budget)
    : caps_(std::move(caps)), m_(m), budget_(budget) {
    if (m_ < 0) throw std::domain_error("bounded_compositions: m < 0");
    done_ = m_ > caps_.total();  // empty stream, not an error
    const std::size_t s = caps_.size();
    k_.assign(s, 0);
    suffix_caps_.assign(s, 0);
    std::int64_t acc = 0;
    for (std::size_t i = s; i-- > 0;) {
        suffix_caps_[i] = acc;
        acc += caps_[i];
    }
}

bool CompositionEnumerator::advance() {
    if (done_) return false;
    const std::size_t s = caps_.size();

    if (!started_) {
        // Largest tuple: greedy fill left to right.
        started_ = true;
        std::int64_t rem = m_;
        for (std::size_t i = 0; i < s; ++i) {
            k_[i] = std::min(caps_[i], rem);
            rem -= k_[i];
        }
    } else {
        // Successor in descending order: decrement the rightmost position
        // whose suffix can absorb the displaced amount, then refill the
        // suffix greedily. The last position is determined by its prefix,
        // so the search starts at s-2.
        bool found = false;
        std::int64_t m_rem = m_;  // m minus the prefix sum up to position i
        for (std::size_t i = 0; i + 1 < s; ++i) m_rem -= k_[i];
        for (std::size_t i = s - 1; i-- > 0;) {
            m_rem += k_[i];  // now m - sum(k_0..k_{i-1})
            if (k_[i] > 0 && k_[i] - 1 >= m_rem - suffix_caps_[i]) {
                k_[i] -= 1;
                std::int64_t rem = m_rem - k_[i];
                for (std::size_t j = i + 1; j < s; ++j) {
                    k_[j] = std::min(caps_[j], rem);
                    rem -= k_[j];
                }
                found = true;
                break;
            }
        }
        if (!found) {
            done_ = true;
            return false;
        }
    }

    if (++yielded_ > budget_)
        throw BudgetExceeded("composition budget exceeded after " +
                             std::to_string(budget_) + " compositions");
    return true;
}

BigInt composition_weight(const BoundedComposition& k, const Caps& caps) {
    if (k.size() != caps.size())
        throw std::domain_error("composition_weight: length mismatch");
    BigInt w(1);
    for (std::size_t i = 0; i < k.size(); ++i) w *= binomial(caps[i], k[i]);
    return w;
}

BigInt count_compositions(const Caps& caps, std::int64_t m, std::uint64_t budget) {
    BigInt total(0);
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) total += composition_weight(en.current(), caps);
    return total;
}

BigInt weighted_linear_sum(const Caps& caps, std::int64_t m, std::size_t j,
                           std::uint64_t budget) {
    if (j < 1 || j > caps.size())
        throw std::domain_error("weighted_linear_sum: index j out of range");
    BigInt total(0);
    CompositionEnumerator en(caps, m, budget);
    while (en.advance())
        total += composition_weight(en.current(), caps) * en.current()[j - 1];
    return total;
}

}  // namespace cvlab
