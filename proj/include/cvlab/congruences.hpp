#ifndef CVLAB_CONGRUENCES_HPP
#define CVLAB_CONGRUENCES_HPP

#include "cvlab/compositions.hpp"
#include "cvlab/exact.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cvlab {

/// Deterministic trial division; intended for desk-scale ranges.
bool is_prime(std::uint64_t n);

/// A residue with its prime-power modulus spelled out.
struct ResidueClass {
    BigInt value;    // canonical: 0 <= value < modulus
    BigInt modulus;  // = p^k
    std::uint64_t p = 0;
    int k = 0;

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.value == b.value && a.modulus == b.modulus;
    }
};

/// C(a,b) mod p^k for prime p and 1 <= k <= 5.
///
/// Fast paths (O(p) unit products, one modular inversion):
///   - C(2p-1, p-1) = prod_{i=1..p-1} (p+i) / i
///   - C(sp, p)     = s * prod_{i=1..p-1} ((s-1)p + i) / i   for any s >= 1
/// Every divided factor is a unit mod p^k, so both products are exact
/// residue computations. Other shapes fall back to the exact BigInt value
/// reduced mod p^k.
ResidueClass binom_mod_pk(std::int64_t a, std::int64_t b, std::uint64_t p, int k);

struct GlaisherReport {
    std::uint64_t p = 0;
    std::int64_t s = 0;
    ResidueClass residue;  // C(sp, p) mod p^k
    BigInt expected;       // s mod p^k
    bool holds = false;
};

/// Glaisher/Ljunggren congruence C(sp,p) == s (mod p^k), default k = 3.
/// Requires p >= 5 prime, s >= 1.
GlaisherReport check_glaisher(std::uint64_t p, std::int64_t s, int k = 3);

struct Congruence18Report {
    std::uint64_t p = 0;
    std::int64_t s = 0;
    ResidueClass lhs;  // composition sum mod p^4, via the collapsed product
    ResidueClass rhs;  // s(s+1)p/2 mod p^4
    std::optional<ResidueClass> direct_lhs;  // enumeration path, when requested
    bool paths_agree = true;  // collapsed == direct (vacuously true otherwise)
    bool mod_p_holds = false;  // the same residue reduced mod p
    bool holds = false;
};

/// sum over compositions of p into s parts of prod C(p,k_i) * (sum i k_i)
///   == s(s+1)p/2 (mod p^4), p >= 5 prime.
///
/// The collapsed path evaluates the sum as (s+1)p/2 * C(sp,p) without
/// enumerating; with direct=true the composition sum is also enumerated
/// exactly and both residues must be bit-identical. The mod-p reduction of
/// the same residue is checked alongside.
Congruence18Report check_congruence18(std::uint64_t p, std::int64_t s, bool direct,
                                      std::uint64_t budget = kDefaultBudget);

/// Thrown by check_congruence20 when p fails the mod-p^4 Wolstenholme test.
class NotWolstenholme : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Congruence20Report {
    std::uint64_t p = 0;
    std::int64_t s = 0;
    ResidueClass glaisher_mod_p4;  // C(sp,p) mod p^4, expected s
    bool glaisher_mod_p4_holds = false;
    ResidueClass lhs;  // (s+1)p/2 * C(sp,p) mod p^5
    ResidueClass rhs;  // s(s+1)p/2 mod p^5
    bool holds = false;
};

/// The mod-p^5 strengthening of congruence 18, valid for Wolstenholme
/// primes. p is certified first (C(2p-1,p-1) == 1 mod p^4); failing that,
/// NotWolstenholme is thrown.
Congruence20Report check_congruence20(std::uint64_t p, std::int64_t s);

struct ScanRecord {
    std::uint64_t p = 0;
    ResidueClass residue;  // C(2p-1, p-1) mod p^4
    bool is_wolstenholme = false;
};

/// Tests C(2p-1,p-1) == 1 (mod p^4) for every prime start_p <= p <= max_p,
/// in increasing order, invoking sink per prime.
void wolstenholme_scan(std::uint64_t max_p,
                       const std::function<void(const ScanRecord&)>& sink,
                       std::uint64_t start_p = 5);

/// Materialized scan over 5 <= p <= max_p.
std::vector<ScanRecord> wolstenholme_scan(std::uint64_t max_p);

}  // namespace cvlab

#endif
