#pragma once

/**
 * @file divisibility.hpp
 * @brief Machine checks of the divisibility statements about E_{n|k}(q).
 *
 * Every polynomial claim is decided by exact division; every integer claim
 * by exact integer division. A report records the claim, its parameters,
 * the verdict and a witness: the quotient when the claim holds, the
 * remainder when it fails.
 *
 * Verifiers return Verdict::inapplicable when the claim's hypotheses are not
 * met (k not prime, index out of range). Passing `force = true` runs the
 * check anyway for non-prime k; the range checks still apply.
 */

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qeuler/euler.hpp"
#include "qeuler/polynomial.hpp"

namespace qeuler {

enum class Claim {
    LemmaQbinomFactor,
    LemmaBracketRatio,
    ThmBracketPower,
    ThmBracketProduct,
    CorKpowerAt1,
    TangentClassical,
    GesselViennot,
    QuotientCoprimeExplore,
};

inline constexpr Claim kAllClaims[] = {
    Claim::LemmaQbinomFactor, Claim::LemmaBracketRatio, Claim::ThmBracketPower,
    Claim::ThmBracketProduct, Claim::CorKpowerAt1,      Claim::TangentClassical,
    Claim::GesselViennot,     Claim::QuotientCoprimeExplore,
};

/// Identifier used on the command line and in reports, e.g. "THM_BRACKET_POWER".
std::string_view claim_id(Claim c);
std::optional<Claim> parse_claim(std::string_view id);

/// Explorer claims probe open questions; their failures are findings.
constexpr bool is_explorer(Claim c) { return c == Claim::QuotientCoprimeExplore; }

enum class Verdict { holds, fails, inapplicable };

std::string_view verdict_name(Verdict v);

/// Polynomial or integer witness; monostate when there is none.
using Witness = std::variant<std::monostate, QPolynomial, BigInteger>;

std::string witness_to_string(const Witness& w);

struct VerificationReport {
    Claim claim{};
    std::vector<std::pair<std::string, long>> params;
    Verdict verdict = Verdict::inapplicable;
    Witness witness;
    /// What was divided and by what; set whenever the check actually ran.
    Witness dividend;
    Witness divisor;
    /// Human-readable reason for inapplicable verdicts or secondary conditions.
    std::string note;
    bool forced = false;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Trial division.
bool is_prime(long k);

struct PrimalityCheck {
    long k = 0;
    bool is_prime = false;
};

PrimalityCheck check_primality(long k);

/// [k] | gaussian(nk+i, mk-1), for k prime, 0 <= i <= k-2, m >= 1.
VerificationReport verify_lemma_qbinom_factor(int n, int m, int k, int i, bool force = false);

/**
 * gaussian(nk+i, mk-1) * [k]_{q^{m-1}}...[k]_q is divisible by
 * [k]_{q^n}...[k]_{q^{n-m+1}}, for k prime, 0 <= i <= k-2, 1 <= m <= n.
 */
VerificationReport verify_lemma_bracket_ratio(int n, int m, int k, int i, bool force = false);

/// [k]^n | E_{nk+i|k}(q), for k prime, 1 <= i <= k-1.
VerificationReport verify_thm_bracket_power(int n, int k, int i, EulerMemo& memo, bool force = false);

/// [k][k]_{q^2}...[k]_{q^n} | E_{nk+i|k}(q), for k prime, 1 <= i <= k-1.
VerificationReport verify_thm_bracket_product(int n, int k, int i, EulerMemo& memo, bool force = false);

/// k^n | E_{nk+i|k}, for k prime, 1 <= i <= k-1.
VerificationReport verify_cor_kpower_at_1(int n, int k, int i, EulerMemo& memo, bool force = false);

/// 2^{2n} | (n+1) E_{2n+1} with an odd quotient (the Genocchi number), n >= 1.
VerificationReport verify_tangent_classical(int n, EulerMemo& memo);

/// ceil((nk - j)/(k - 1)) for nk - j >= 0, in integer arithmetic.
long gessel_viennot_exponent(int n, int k, int j);

/// k^e | C(nk, j) E_{nk-j|k} with e = gessel_viennot_exponent(n, k, j); k prime, n >= 1, 0 <= j <= nk.
VerificationReport verify_gessel_viennot(int n, int k, int j, EulerMemo& memo, bool force = false);

/// Whether the quotient of verify_gessel_viennot is coprime to k. Inapplicable if that check does not hold.
VerificationReport explore_quotient_coprime(int n, int k, int j, EulerMemo& memo, bool force = false);

/// True when a holds report's witness times divisor equals the dividend; vacuously true otherwise.
bool witness_reconstructs(const VerificationReport& r);

/// Parameter tuples the sweep visits for `claim` at period k with nk+i (or nk, or 2n+1) <= max_n.
std::vector<std::vector<std::pair<std::string, long>>> sweep_grid(Claim claim, int k, int max_n);

/// Runs one claim at one parameter tuple produced by sweep_grid().
VerificationReport run_claim(Claim claim, std::span<const std::pair<std::string, long>> params, EulerMemo& memo,
                             bool force = false);

}  // namespace qeuler
