#ifndef CVLAB_IDENTITIES_HPP
#define CVLAB_IDENTITIES_HPP

#include "cvlab/compositions.hpp"
#include "cvlab/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cvlab {

/// Outcome of one identity check. The left-hand side always comes from an
/// independent enumeration over bounded compositions; the right-hand side is
/// the closed form. `holds` is exact equality of every reported pair.
///
/// Checkers that correct a typographical factor also evaluate the uncorrected
/// (printed) right-hand side and describe the correction in `note`, so that
/// the erratum stays regression-testable.
///
/// The eq15/eq16 checker verifies two coupled equations and fills the second
/// pair (lhs2/rhs2); everywhere else those are empty.
struct IdentityReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> params;  // echo of inputs
    GaussianRational lhs;
    GaussianRational rhs;
    std::optional<GaussianRational> lhs2;
    std::optional<GaussianRational> rhs2;
    bool holds = false;
    std::string note;
    std::optional<GaussianRational> printed_rhs;
    std::optional<GaussianRational> printed_rhs2;
};

/// sum weight * (sum k_i z_i)  =  C(N,m) * m * (sum n_i z_i) / N.
IdentityReport check_eq8(const Caps& caps, const std::vector<GaussianRational>& z,
                         std::int64_t m, std::uint64_t budget = kDefaultBudget);

/// sum weight  =  C(N, m).
IdentityReport check_eq12(const Caps& caps, std::int64_t m,
                          std::uint64_t budget = kDefaultBudget);

/// Chu-Vandermonde: sum_k C(a,k) C(b,m-k)  =  C(a+b, m).
IdentityReport check_eq13(std::int64_t a, std::int64_t b, std::int64_t m);

/// sum_k C(n1,k) C(n2,m-k) (k z + (m-k))  =  C(n1+n2,m) * m * (n1 z + n2)/(n1+n2).
/// The printed right-hand side uses factor 2m; the checker corrects it to m.
IdentityReport check_eq14_corrected(std::int64_t n1, std::int64_t n2,
                                    const GaussianRational& z, std::int64_t m);

/// Two coupled checks over caps (n1,n2,n3):
///   first pair:  sum weight (k1 z + k2 w + (m-k1-k2)) = C(N,m) m (n1 z + n2 w + n3)/N
///   second pair: sum weight (2m-k1-k2) = C(N,m) m (n1+n2+2 n3)/N
/// Printed right-hand sides use 2m in place of m; both are corrected.
IdentityReport check_eq15_16_corrected(std::int64_t n1, std::int64_t n2,
                                       std::int64_t n3, const GaussianRational& z,
                                       const GaussianRational& w, std::int64_t m,
                                       std::uint64_t budget = kDefaultBudget);

/// Over caps (l,...,l) s times: sum weight (k1 + 2 k2 + ... + s ks)
///   =  m (s+1)/2 * C(sl, m).  The right-hand side must be an integer;
/// the checker verifies that as part of the verdict.
IdentityReport check_eq17(std::int64_t s, std::int64_t l, std::int64_t m,
                          std::uint64_t budget = kDefaultBudget);

/// Over caps (n-1,...,n-1) s times: sum weight (k1 + k2 n + ... + ks n^{s-1})
///   =  (n^s - 1) C(s(n-1)-1, m-1).
/// For n = 2 the checker cross-validates against the sum of all integers
/// below 2^s whose binary representation has exactly m one-bits.
IdentityReport check_eq21(std::int64_t n, std::int64_t s, std::int64_t m,
                          std::uint64_t budget = kDefaultBudget);

/// sum weight |sum k_i z_i|^2
///   =  C(N-2,m-1) sum n_i |z_i|^2 + C(N-2,m-2) |sum n_i z_i|^2,  2 <= m <= N.
IdentityReport check_eq22(const Caps& caps, const std::vector<GaussianRational>& z,
                          std::int64_t m, std::uint64_t budget = kDefaultBudget);

/// Over caps (l,...,l) s times: sum weight (k1 + 2 k2 + ... + s ks)^2
///   =  m(s+1)(3s²lm + 3slm + s²l - 4sm - sl - 2m) / (12(sl-1)) * C(sl, m),
/// with 2 <= m <= sl and sl >= 2. Integrality of the right side is checked.
IdentityReport check_eq26(std::int64_t s, std::int64_t l, std::int64_t m,
                          std::uint64_t budget = kDefaultBudget);

/// sum weight (sum k_i z_i)^3, with P_e = sum n_i z_i^e, equals
///   C(N,m) * [ m(N+2-3m)/(N(N-1)) P3 + 3m(m-1)/(N(N-1)) P2 P1
///              + m(m-1)(m-2)/(N(N-1)(N-2)) (P1^3 - 3 P1 P2 + 2 P3) ],
/// N >= 2. The printed right-hand side omits both the C(N,m) factor and the
/// distinct-triples line (zero for m <= 2); the checker restores them and
/// reports the printed bracket as printed_rhs.
IdentityReport check_eq27_corrected(const Caps& caps,
                                    const std::vector<GaussianRational>& z,
                                    std::int64_t m,
                                    std::uint64_t budget = kDefaultBudget);

/// sum_{v=0..n} C(k1+v-1, v) C(k2+n-v-1, n-v)  =  C(k1+k2+n-1, n),
/// with k1, k2 >= 1 and n >= 0.
IdentityReport check_remark22(std::int64_t k1, std::int64_t k2, std::int64_t n);

}  // namespace cvlab

#endif
