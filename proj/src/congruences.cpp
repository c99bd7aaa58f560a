#include "cvlab/congruences.hpp"

#include <cassert>

namespace cvlab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

namespace {

// Residues fit in uint64 whenever p^k < 2^63, which covers every scan-range
// modulus up to p^4 for p < 55109; products go through unsigned __int128.
class Uint64Modulus {
public:
    explicit Uint64Modulus(std::uint64_t mod) : mod_(mod) {}
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % mod_);
    }
    std::uint64_t reduce(std::uint64_t a) const { return a % mod_; }

    // Inverse of a unit via extended gcd.
    std::uint64_t inv(std::uint64_t a) const {
        std::int64_t r0 = static_cast<std::int64_t>(mod_);
        std::int64_t r1 = static_cast<std::int64_t>(a % mod_);
        std::int64_t t0 = 0, t1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            t0 -= q * t1;
            std::swap(t0, t1);
        }
        if (r0 != 1) throw std::domain_error("inv: not a unit");
        if (t0 < 0) t0 += static_cast<std::int64_t>(mod_);
        return static_cast<std::uint64_t>(t0);
    }

private:
    std::uint64_t mod_;
};

BigInt pow_bigint(std::uint64_t base, int exp) {
    BigInt out(1);
    for (int i = 0; i < exp; ++i) out *= static_cast<unsigned long>(base);
    return out;
}

BigInt mod_canonical(const BigInt& v, const BigInt& modulus) {
    BigInt r = v % modulus;
    if (sgn(r) < 0) r += modulus;
    return r;
}

ResidueClass make_residue(const BigInt& value, std::uint64_t p, int k) {
    ResidueClass r;
    r.p = p;
    r.k = k;
    r.modulus = pow_bigint(p, k);
    r.value = mod_canonical(value, r.modulus);
    return r;
}

// prod_{i=1..p-1} (base + i) * inv(i) mod p^k, computed with two running
// products and a single inversion. Requires p^k < 2^63.
std::uint64_t unit_quotient_product_u64(std::uint64_t base, std::uint64_t p,
                                        std::uint64_t mod) {
    const Uint64Modulus M(mod);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 1; i < p; ++i) {
        num = M.mul(num, (base + i) % mod);
        den = M.mul(den, i);
    }
    return M.mul(num, M.inv(den));
}

BigInt unit_quotient_product_mpz(const BigInt& base, std::uint64_t p,
                                 const BigInt& mod) {
    BigInt num(1), den(1);
    for (std::uint64_t i = 1; i < p; ++i) {
        num = num * ((base + static_cast<unsigned long>(i)) % mod) % mod;
        den = den * static_cast<unsigned long>(i) % mod;
    }
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("unit product: denominator not invertible");
    return num * inv % mod;
}

// C(sp, p) mod p^k = s * prod_{i=1..p-1} ((s-1)p + i) / i.
BigInt binom_sp_p_mod(std::uint64_t p, std::uint64_t s, int k) {
    const BigInt modulus = pow_bigint(p, k);
    const BigInt base =
        BigInt(static_cast<unsigned long>(s - 1)) * static_cast<unsigned long>(p) %
        modulus;
    BigInt prod;
    if (modulus.fits_slong_p()) {
        const auto mod_u = static_cast<std::uint64_t>(modulus.get_ui());
        prod = static_cast<unsigned long>(unit_quotient_product_u64(
            static_cast<std::uint64_t>(base.get_ui()), p, mod_u));
    } else {
        prod = unit_quotient_product_mpz(base, p, modulus);
    }
    return BigInt(static_cast<unsigned long>(s)) * prod % modulus;
}

// C(2p-1, p-1) mod p^k = prod_{i=1..p-1} (p + i) / i.
BigInt binom_central_mod(std::uint64_t p, int k) {
    const BigInt modulus = pow_bigint(p, k);
    if (modulus.fits_slong_p()) {
        const auto mod_u = static_cast<std::uint64_t>(modulus.get_ui());
        return BigInt(static_cast<unsigned long>(
            unit_quotient_product_u64(p % mod_u, p, mod_u)));
    }
    return unit_quotient_product_mpz(BigInt(static_cast<unsigned long>(p)), p,
                                     modulus);
}

void require_prime(std::uint64_t p, std::uint64_t minimum) {
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    if (p < minimum)
        throw std::domain_error("p must be >= " + std::to_string(minimum));
}

}  // namespace

ResidueClass binom_mod_pk(std::int64_t a, std::int64_t b, std::uint64_t p, int k) {
    require_prime(p, 2);
    if (k < 1 || k > 5) throw std::domain_error("binom_mod_pk: k must be in 1..5");
    if (b < 0 || b > a) throw std::domain_error("binom_mod_pk: need 0 <= b <= a");

    const auto pi = static_cast<std::int64_t>(p);
    if (a == 2 * pi - 1 && b == pi - 1)
        return make_residue(binom_central_mod(p, k), p, k);
    if (b == pi && a % pi == 0 && a >= pi)
        return make_residue(binom_sp_p_mod(p, static_cast<std::uint64_t>(a / pi), k),
                            p, k);
    return make_residue(binomial(a, b), p, k);
}

GlaisherReport check_glaisher(std::uint64_t p, std::int64_t s, int k) {
    require_prime(p, 5);
    if (s < 1) throw std::domain_error("check_glaisher: s must be >= 1");
    if (k < 1 || k > 5) throw std::domain_error("check_glaisher: k must be in 1..5");

    GlaisherReport r;
    r.p = p;
    r.s = s;
    r.residue = binom_mod_pk(s * static_cast<std::int64_t>(p),
                             static_cast<std::int64_t>(p), p, k);
    r.expected = mod_canonical(BigInt(s), r.residue.modulus);
    r.holds = r.residue.value == r.expected;
    return r;
}

Congruence18Report check_congruence18(std::uint64_t p, std::int64_t s, bool direct,
                                      std::uint64_t budget) {
    require_prime(p, 5);
    if (s < 1) throw std::domain_error("check_congruence18: s must be >= 1");

    Congruence18Report r;
    r.p = p;
    r.s = s;
    const BigInt mod4 = pow_bigint(p, 4);

    // Collapsed path: the composition sum equals (s+1)p/2 * C(sp,p).
    // (s+1) * C(sp,p) is even, so halving via the inverse of 2 mod p^4 gives
    // the true integer's residue; the outer factor p then lifts it mod p^4.
    const BigInt c_sp_p = binom_mod_pk(s * static_cast<std::int64_t>(p),
                                       static_cast<std::int64_t>(p), p, 4)
                              .value;
    BigInt inv2;
    mpz_invert(inv2.get_mpz_t(), BigInt(2).get_mpz_t(), mod4.get_mpz_t());
    const BigInt half = BigInt(s + 1) * c_sp_p % mod4 * inv2 % mod4;
    r.lhs = make_residue(half * static_cast<unsigned long>(p), p, 4);

    // Right side: s(s+1) is even, so the division is exact on integers.
    r.rhs = make_residue(BigInt(s) * (s + 1) / 2 * static_cast<unsigned long>(p),
                         p, 4);

    if (direct) {
        const Caps caps(std::vector<std::int64_t>(static_cast<std::size_t>(s),
                                                  static_cast<std::int64_t>(p)));
        BigInt sum(0);
        CompositionEnumerator en(caps, static_cast<std::int64_t>(p), budget);
        while (en.advance()) {
            const auto& comp = en.current();
            std::int64_t linear = 0;
            for (std::size_t i = 0; i < comp.size(); ++i)
                linear += static_cast<std::int64_t>(i + 1) * comp[i];
            sum += composition_weight(comp, caps) * linear;
        }
        r.direct_lhs = make_residue(sum, p, 4);
        r.paths_agree = *r.direct_lhs == r.lhs;
    }

    r.mod_p_holds = r.lhs.value % static_cast<unsigned long>(p) ==
                    r.rhs.value % static_cast<unsigned long>(p);
    r.holds = r.lhs.value == r.rhs.value && r.paths_agree && r.mod_p_holds;
    return r;
}

Congruence20Report check_congruence20(std::uint64_t p, std::int64_t s) {
    require_prime(p, 5);
    if (s < 1) throw std::domain_error("check_congruence20: s must be >= 1");

    const BigInt wolstenholme_residue = binom_central_mod(p, 4);
    if (wolstenholme_residue != 1)
        throw NotWolstenholme(std::to_string(p) +
                              " is not a Wolstenholme prime: C(2p-1,p-1) mod p^4 = " +
                              to_string(wolstenholme_residue));

    Congruence20Report r;
    r.p = p;
    r.s = s;

    r.glaisher_mod_p4 = binom_mod_pk(s * static_cast<std::int64_t>(p),
                                     static_cast<std::int64_t>(p), p, 4);
    r.glaisher_mod_p4_holds =
        r.glaisher_mod_p4.value ==
        mod_canonical(BigInt(s), r.glaisher_mod_p4.modulus);

    // (s+1)p/2 * C(sp,p) mod p^5: the factor p means the residue of
    // (s+1)C(sp,p)/2 mod p^4 determines the product mod p^5.
    const BigInt mod4 = pow_bigint(p, 4);
    BigInt inv2;
    mpz_invert(inv2.get_mpz_t(), BigInt(2).get_mpz_t(), mod4.get_mpz_t());
    const BigInt half = BigInt(s + 1) * r.glaisher_mod_p4.value % mod4 * inv2 % mod4;
    r.lhs = make_residue(half * static_cast<unsigned long>(p), p, 5);
    r.rhs = make_residue(BigInt(s) * (s + 1) / 2 * static_cast<unsigned long>(p),
                         p, 5);
    r.holds = r.lhs.value == r.rhs.value && r.glaisher_mod_p4_holds;
    return r;
}

void wolstenholme_scan(std::uint64_t max_p,
                       const std::function<void(const ScanRecord&)>& sink,
                       std::uint64_t start_p) {
    // Bounds below the first eligible prime yield an empty scan.
    if (max_p < 5) return;
    const std::uint64_t lo = std::max<std::uint64_t>(start_p, 5);
    if (lo > max_p) return;

    // Odd-only sieve over [0, max_p].
    std::vector<bool> composite(max_p + 1, false);
    for (std::uint64_t d = 3; d * d <= max_p; d += 2)
        if (!composite[d])
            for (std::uint64_t q = d * d; q <= max_p; q += 2 * d) composite[q] = true;

    for (std::uint64_t p = lo | 1; p <= max_p; p += 2) {
        if (composite[p] || p < 5) continue;
        ScanRecord rec;
        rec.p = p;
        rec.residue = make_residue(binom_central_mod(p, 4), p, 4);
        rec.is_wolstenholme = rec.residue.value == 1;
        sink(rec);
    }
}

std::vector<ScanRecord> wolstenholme_scan(std::uint64_t max_p) {
    std::vector<ScanRecord> out;
    wolstenholme_scan(max_p, [&](const ScanRecord& rec) { out.push_back(rec); });
    return out;
}

}  // namespace cvlab
