// Acceptance gate: eight pinned criteria, one pass/fail line each.
//
//   cvlab_acceptance       runs every criterion
//   cvlab_acceptance <n>   runs criterion n alone
//
// Exit code 0 when every executed criterion passes, 1 otherwise.

#include "cvlab/congruences.hpp"
#include "cvlab/distribution.hpp"
#include "cvlab/identities.hpp"
#include "cvlab/matrices.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cvlab::BigInt;
using cvlab::Caps;
using cvlab::ExactMatrix;
using cvlab::GaussianRational;
using cvlab::IdentityReport;
using cvlab::MultisetSpec;
using cvlab::Rational;
using cvlab::binomial;
using cvlab::make_rational;

struct Outcome {
    bool pass = false;
    std::string detail;
};

Rational random_rational(std::mt19937_64& gen, int lo, int hi, int max_den) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(BigInt(num(gen)), BigInt(den(gen)));
}

GaussianRational random_value(std::mt19937_64& gen, int bound, int max_den) {
    return {random_rational(gen, -bound, bound, max_den),
            random_rational(gen, -bound, bound, max_den)};
}

MultisetSpec random_spec(std::mt19937_64& gen, std::int64_t min_total,
                         std::int64_t max_total) {
    for (;;) {
        const int s = 1 + static_cast<int>(gen() % 4);
        std::vector<GaussianRational> values;
        std::vector<std::int64_t> mults;
        std::int64_t total = 0;
        for (int i = 0; i < s; ++i) {
            values.push_back(random_value(gen, 5, 4));
            mults.push_back(1 + static_cast<std::int64_t>(gen() % 4));
            total += mults.back();
        }
        if (total < min_total || total > max_total) continue;
        try {
            return {std::move(values), Caps(std::move(mults))};
        } catch (const std::domain_error&) {
            continue;  // duplicate values; redraw
        }
    }
}

// Criterion 1: the closed-form mean, absolute second moment, and third
// moment agree exactly with the brute-force oracle on 500 random multisets.
Outcome criterion1() {
    std::mt19937_64 gen(101);
    for (int trial = 0; trial < 500; ++trial) {
        const MultisetSpec spec = random_spec(gen, 2, 12);
        const std::int64_t N = spec.total();
        const std::int64_t m = 1 + static_cast<std::int64_t>(gen() % N);
        if (cvlab::mean_closed(spec, m).value !=
            cvlab::moment_oracle(spec, m, 1, false).value)
            return {false, "mean mismatch at trial " + std::to_string(trial)};
        if (cvlab::second_abs_moment_closed(spec, m).value !=
            cvlab::moment_oracle(spec, m, 2, true).value)
            return {false,
                    "second-moment mismatch at trial " + std::to_string(trial)};
        if (cvlab::third_moment_closed(spec, m).value !=
            cvlab::moment_oracle(spec, m, 3, false).value)
            return {false,
                    "third-moment mismatch at trial " + std::to_string(trial)};
    }
    return {true, "closed forms match the oracle on 500 random multisets"};
}

// Criterion 2: every scalar identity checker returns holds on 200 random
// admissible parameter draws.
Outcome criterion2() {
    std::mt19937_64 gen(202);
    const auto caps_and_values = [&](std::int64_t min_total) {
        const int s = 1 + static_cast<int>(gen() % 5);
        std::vector<std::int64_t> parts;
        std::vector<GaussianRational> z;
        std::int64_t total = 0;
        for (int i = 0; i < s; ++i) {
            parts.push_back(1 + static_cast<std::int64_t>(gen() % 6));
            z.push_back(random_value(gen, 5, 5));
            total += parts.back();
        }
        if (total < min_total) {
            parts.push_back(min_total - total + 1);
            z.push_back(random_value(gen, 5, 5));
        }
        return std::pair<Caps, std::vector<GaussianRational>>(Caps(parts), z);
    };
    const auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(gen() % (hi - lo + 1));
    };

    long failures = 0;
    std::string first_failure;
    const auto note = [&](const IdentityReport& r) {
        if (!r.holds) {
            ++failures;
            if (first_failure.empty()) first_failure = r.identity_id;
        }
    };

    for (int trial = 0; trial < 200; ++trial) {
        {
            const auto [caps, z] = caps_and_values(1);
            note(cvlab::check_eq8(caps, z, draw(1, caps.total())));
            note(cvlab::check_eq12(caps, draw(1, caps.total())));
        }
        note(cvlab::check_eq13(draw(0, 8), draw(0, 8), draw(0, 10)));
        {
            const std::int64_t n1 = draw(1, 6), n2 = draw(1, 6);
            note(cvlab::check_eq14_corrected(n1, n2, random_value(gen, 5, 5),
                                             draw(1, n1 + n2)));
        }
        {
            const std::int64_t n1 = draw(1, 5), n2 = draw(1, 5), n3 = draw(1, 5);
            note(cvlab::check_eq15_16_corrected(n1, n2, n3,
                                                random_value(gen, 5, 5),
                                                random_value(gen, 5, 5),
                                                draw(1, n1 + n2 + n3)));
        }
        {
            const std::int64_t s = draw(1, 5), l = draw(1, 4);
            note(cvlab::check_eq17(s, l, draw(1, s * l)));
            if (s * l >= 2) note(cvlab::check_eq26(s, l, draw(2, s * l)));
        }
        {
            const std::int64_t n = draw(2, 5), s = draw(1, 4);
            note(cvlab::check_eq21(n, s, draw(1, s * (n - 1))));
        }
        {
            const auto [caps, z] = caps_and_values(2);
            note(cvlab::check_eq22(caps, z, draw(2, caps.total())));
            note(cvlab::check_eq27_corrected(caps, z, draw(1, caps.total())));
        }
        note(cvlab::check_remark22(draw(1, 6), draw(1, 6), draw(0, 8)));
    }
    if (failures != 0)
        return {false, std::to_string(failures) +
                           " checker failures; first id: " + first_failure};
    return {true, "11 scalar checkers hold on 200 random draws each"};
}

// Criterion 3: the recorded errata are real: on pinned instances the printed
// right-hand sides disagree with the enumerated sum while the corrected
// right-hand sides match.
Outcome criterion3() {
    std::ostringstream detail;

    const IdentityReport r14 = cvlab::check_eq14_corrected(
        1, 1, GaussianRational(1L), 1);
    if (!r14.holds || !r14.printed_rhs || *r14.printed_rhs == r14.lhs)
        return {false, "eq14 erratum regression failed"};
    detail << "eq14 printed=" << cvlab::to_string(*r14.printed_rhs)
           << " actual=" << cvlab::to_string(r14.lhs);

    const IdentityReport r1516 = cvlab::check_eq15_16_corrected(
        1, 1, 1, GaussianRational(2L), GaussianRational(3L), 1);
    if (!r1516.holds || !r1516.printed_rhs2 || *r1516.printed_rhs2 == *r1516.lhs2 ||
        *r1516.printed_rhs == r1516.lhs)
        return {false, "eq15/eq16 erratum regression failed"};

    const IdentityReport r27 = cvlab::check_eq27_corrected(
        Caps({1, 1}), {GaussianRational(1L), GaussianRational(1L)}, 1);
    if (!r27.holds || !r27.printed_rhs || *r27.printed_rhs == r27.lhs)
        return {false, "eq27 erratum regression failed"};
    detail << "; eq27 printed=" << cvlab::to_string(*r27.printed_rhs)
           << " actual=" << cvlab::to_string(r27.lhs);

    // Second layer of the cubic erratum, visible only from m = 3 up: the
    // printed bracket also lacks the distinct-triples term.
    const IdentityReport r27_triples = cvlab::check_eq27_corrected(
        Caps({1, 1, 1}),
        {GaussianRational(1L), GaussianRational(2L), GaussianRational(3L)}, 3);
    if (!r27_triples.holds || !r27_triples.printed_rhs ||
        r27_triples.lhs != GaussianRational(216L) ||
        *r27_triples.printed_rhs == r27_triples.lhs)
        return {false, "eq27 distinct-triples regression failed"};
    const auto third = cvlab::third_moment_closed(
        cvlab::MultisetSpec({GaussianRational(1L), GaussianRational(2L),
                             GaussianRational(3L)},
                            Caps({1, 1, 1})),
        3);
    if (third.value != GaussianRational(216L))
        return {false, "third moment at m = 3 lost the triples term"};
    detail << "; eq27(m=3) printed=" << cvlab::to_string(*r27_triples.printed_rhs)
           << " actual=216";

    // The corrected forms must also survive a randomized sweep.
    std::mt19937_64 gen(303);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n1 = 1 + static_cast<std::int64_t>(gen() % 4);
        const std::int64_t n2 = 1 + static_cast<std::int64_t>(gen() % 4);
        const std::int64_t m = 1 + static_cast<std::int64_t>(gen() % (n1 + n2));
        const IdentityReport r = cvlab::check_eq14_corrected(
            n1, n2, random_value(gen, 4, 3), m);
        if (!r.holds) return {false, "corrected eq14 failed in sweep"};
        if (!r.lhs.is_zero() && *r.printed_rhs == r.lhs)
            return {false, "printed eq14 unexpectedly matched in sweep"};
    }
    return {true, detail.str()};
}

// Criterion 4: the binary specialization: for every s <= 12 and 1 <= m <= s,
// the sum of all integers below 2^s with exactly m one-bits equals
// (2^s - 1) C(s-1, m-1).
Outcome criterion4() {
    for (int s = 1; s <= 12; ++s) {
        const std::uint64_t limit = std::uint64_t{1} << s;
        std::vector<BigInt> by_popcount(static_cast<std::size_t>(s) + 1);
        for (std::uint64_t v = 0; v < limit; ++v)
            by_popcount[static_cast<std::size_t>(__builtin_popcountll(v))] +=
                static_cast<unsigned long>(v);
        for (int m = 1; m <= s; ++m) {
            const BigInt closed = (BigInt(static_cast<unsigned long>(limit)) - 1) *
                                  binomial(s - 1, m - 1);
            if (by_popcount[static_cast<std::size_t>(m)] != closed)
                return {false, "popcount mismatch at s=" + std::to_string(s) +
                                   " m=" + std::to_string(m)};
            if (s >= 2) {
                const IdentityReport r = cvlab::check_eq21(2, s, m);
                if (!r.holds ||
                    r.lhs != GaussianRational(Rational(
                                 by_popcount[static_cast<std::size_t>(m)])))
                    return {false, "eq21 disagrees with the popcount sum"};
            }
        }
    }
    return {true, "binary digit sums match (2^s - 1) C(s-1, m-1) for s <= 12"};
}

// Criterion 5: the composition-sum congruence holds mod p^4, and the
// collapsed product path reproduces the direct enumeration bit for bit.
Outcome criterion5() {
    for (const std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL})
        for (std::int64_t s = 1; s <= 5; ++s) {
            const auto r = cvlab::check_congruence18(p, s, /*direct=*/false);
            if (!r.holds)
                return {false, "collapsed congruence failed at p=" +
                                   std::to_string(p) + " s=" + std::to_string(s)};
        }
    for (const std::uint64_t p : {5ULL, 7ULL})
        for (std::int64_t s = 1; s <= 3; ++s) {
            const auto r = cvlab::check_congruence18(p, s, /*direct=*/true);
            if (!r.holds || !r.paths_agree || !r.direct_lhs ||
                !(*r.direct_lhs == r.lhs))
                return {false, "direct/collapsed mismatch at p=" +
                                   std::to_string(p) + " s=" + std::to_string(s)};
        }
    return {true, "congruence holds mod p^4; both evaluation paths agree"};
}

// Criterion 6: (a) C(2p-1, p-1) == 1 mod p^3 for every prime 3 <= p <= 1000;
// (b) the scan up to 20000 finds exactly the Wolstenholme prime 16843;
// (c) the mod-p^5 strengthening holds at 16843 for s in {1, 2, 3}.
Outcome criterion6() {
    std::vector<std::string> failures;

    std::string first_counterexample;
    for (std::uint64_t p = 3; p <= 1000; ++p) {
        if (!cvlab::is_prime(p)) continue;
        const auto pi = static_cast<std::int64_t>(p);
        const auto residue = cvlab::binom_mod_pk(2 * pi - 1, pi - 1, p, 3);
        if (residue.value != 1 && first_counterexample.empty())
            first_counterexample = "C(2p-1,p-1) mod p^3 = " +
                                   cvlab::to_string(residue.value) +
                                   " at p = " + std::to_string(p);
    }
    if (!first_counterexample.empty())
        failures.push_back(first_counterexample +
                           " (the congruence first holds at p = 5)");

    std::vector<std::uint64_t> hits;
    cvlab::wolstenholme_scan(20000, [&](const cvlab::ScanRecord& rec) {
        if (rec.is_wolstenholme) hits.push_back(rec.p);
    });
    if (hits.size() != 1 || hits[0] != 16843)
        failures.push_back("scan up to 20000 did not find exactly {16843}");

    for (std::int64_t s = 1; s <= 3; ++s) {
        try {
            if (!cvlab::check_congruence20(16843, s).holds)
                failures.push_back("mod p^5 congruence failed at s=" +
                                   std::to_string(s));
        } catch (const std::exception& e) {
            failures.push_back(std::string("mod p^5 check threw: ") + e.what());
        }
    }

    if (!failures.empty()) {
        std::string joined = failures.front();
        for (std::size_t i = 1; i < failures.size(); ++i)
            joined += "; " + failures[i];
        return {false, joined};
    }
    return {true, "mod p^3 for all primes in [3, 1000]; scan hit = {16843}"};
}

// Criterion 7: the matrix identities hold on 100 random families, including
// the non-commuting swap pair.
Outcome criterion7() {
    const ExactMatrix e12{2, 2,
                          {GaussianRational(), GaussianRational(1L),
                           GaussianRational(), GaussianRational()}};
    const ExactMatrix e21{2, 2,
                          {GaussianRational(), GaussianRational(),
                           GaussianRational(1L), GaussianRational()}};
    if (!cvlab::check_eq28(Caps({1, 1}), {e12, e21}, 1).holds ||
        !cvlab::check_eq29(Caps({1, 1}), {e12, e21}, 2).holds ||
        !cvlab::check_eq30(Caps({1, 1}), {e12, e21}, 2).holds)
        return {false, "swap-pair family failed"};

    std::mt19937_64 gen(707);
    const auto random_matrix = [&](std::size_t rows, std::size_t cols) {
        std::vector<GaussianRational> entries;
        for (std::size_t i = 0; i < rows * cols; ++i)
            entries.push_back(random_value(gen, 3, 3));
        return ExactMatrix(rows, cols, std::move(entries));
    };

    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t s = 1 + gen() % 3;
        const std::size_t dim = 1 + gen() % 4;
        std::vector<std::int64_t> parts;
        std::vector<ExactMatrix> square, rect;
        std::int64_t N = 0;
        for (std::size_t i = 0; i < s; ++i) {
            parts.push_back(1 + static_cast<std::int64_t>(gen() % 3));
            N += parts.back();
            square.push_back(random_matrix(dim, dim));
            rect.push_back(random_matrix(dim, dim == 4 ? 1 : dim + 1));
        }
        const Caps caps(parts);
        const std::int64_t m = 1 + static_cast<std::int64_t>(gen() % N);
        if (!cvlab::check_eq28(caps, square, m).holds)
            return {false, "eq28 failed at trial " + std::to_string(trial)};
        if (N >= 2) {
            if (!cvlab::check_eq29(caps, square, m).holds)
                return {false, "eq29 failed at trial " + std::to_string(trial)};
            if (!cvlab::check_eq30(caps, rect, m).holds)
                return {false, "eq30 failed at trial " + std::to_string(trial)};
        }
    }
    return {true, "matrix identities hold on the swap pair and 100 random families"};
}

// Criterion 8: Monte-Carlo estimates with 10^5 trials land within five exact
// standard errors of the closed-form values, and a rerun with the same seed
// is bit-identical.
Outcome criterion8() {
    const MultisetSpec spec(
        {GaussianRational(1L), GaussianRational(2L), GaussianRational(3L)},
        Caps({1, 1, 1}));
    const auto run1 = cvlab::sample_moments(spec, 2, 100000, 42);
    const auto run2 = cvlab::sample_moments(spec, 2, 100000, 42);
    for (std::size_t i = 0; i < run1.size(); ++i) {
        if (run1[i].value != run2[i].value || !run1[i].se_sq || !run2[i].se_sq ||
            *run1[i].se_sq != *run2[i].se_sq)
            return {false, "rerun with the same seed was not bit-identical"};
    }

    const GaussianRational mean_target = cvlab::mean_closed(spec, 2).value;
    const GaussianRational second_target =
        cvlab::second_abs_moment_closed(spec, 2).value;
    const Rational bound(25);

    const Rational mean_err = (run1[0].value - mean_target).abs_sq();
    if (mean_err > bound * *run1[0].se_sq)
        return {false, "mean estimate beyond five standard errors"};
    const Rational second_err = (run1[1].value - second_target).abs_sq();
    if (second_err > bound * *run1[1].se_sq)
        return {false, "second-moment estimate beyond five standard errors"};

    return {true,
            "10^5-trial estimates within five exact standard errors; rerun "
            "bit-identical"};
}

}  // namespace

int main(int argc, char** argv) {
    using Criterion = Outcome (*)();
    const std::vector<Criterion> criteria = {
        criterion1, criterion2, criterion3, criterion4,
        criterion5, criterion6, criterion7, criterion8};

    int which = 0;
    if (argc > 1) {
        which = std::atoi(argv[1]);
        if (which < 1 || which > static_cast<int>(criteria.size())) {
            std::cerr << "usage: cvlab_acceptance [1-" << criteria.size() << "]\n";
            return 2;
        }
    }

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (which != 0 && which != static_cast<int>(i) + 1) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i]();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << "criterion " << (i + 1) << ": "
                  << (outcome.pass ? "PASS" : "FAIL") << " — " << outcome.detail
                  << " (" << ms << " ms)\n";
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
