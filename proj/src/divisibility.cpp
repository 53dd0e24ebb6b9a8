#include "qeuler/divisibility.hpp"

#include <array>
#include <stdexcept>

#include "qeuler/qcombinat.hpp"

namespace qeuler {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 8> kClaimIds{{
    {Claim::LemmaQbinomFactor, "LEMMA_QBINOM_FACTOR"},
    {Claim::LemmaBracketRatio, "LEMMA_BRACKET_RATIO"},
    {Claim::ThmBracketPower, "THM_BRACKET_POWER"},
    {Claim::ThmBracketProduct, "THM_BRACKET_PRODUCT"},
    {Claim::CorKpowerAt1, "COR_KPOWER_AT_1"},
    {Claim::TangentClassical, "TANGENT_CLASSICAL"},
    {Claim::GesselViennot, "GESSEL_VIENNOT"},
    {Claim::QuotientCoprimeExplore, "QUOTIENT_COPRIME_EXPLORE"},
}};

using Clock = std::chrono::steady_clock;

class Check {
public:
    Check(Claim claim, std::vector<std::pair<std::string, long>> params) : start_(Clock::now()) {
        report_.claim = claim;
        report_.params = std::move(params);
    }

    VerificationReport inapplicable(std::string why) {
        report_.verdict = Verdict::inapplicable;
        report_.note = std::move(why);
        return finish();
    }

    /// Decides dividend / divisor over polynomials.
    VerificationReport divide(const QPolynomial& dividend, const QPolynomial& divisor) {
        report_.dividend = dividend;
        report_.divisor = divisor;
        auto r = divmod(dividend, divisor);
        if (!r) {
            report_.verdict = Verdict::fails;
            report_.note = "non-integral quotient coefficient";
        } else if (r->remainder.is_zero()) {
            report_.verdict = Verdict::holds;
            report_.witness = std::move(r->quotient);
        } else {
            report_.verdict = Verdict::fails;
            report_.witness = std::move(r->remainder);
        }
        return finish();
    }

    /// Decides dividend / divisor over the integers.
    VerificationReport divide(const BigInteger& dividend, const BigInteger& divisor) {
        report_.dividend = dividend;
        report_.divisor = divisor;
        if (auto q = scalar::try_divexact(dividend, divisor)) {
            report_.verdict = Verdict::holds;
            report_.witness = std::move(*q);
        } else {
            report_.verdict = Verdict::fails;
            BigInteger rem;
            mpz_mod(rem.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
            report_.witness = std::move(rem);
        }
        return finish();
    }

    VerificationReport& report() { return report_; }

    VerificationReport finish() {
        report_.elapsed = Clock::now() - start_;
        return std::move(report_);
    }

private:
    VerificationReport report_;
    Clock::time_point start_;
};

/// Empty when k passes the primality gate, otherwise the reason it does not.
std::optional<std::string> prime_gate(int k, bool force, VerificationReport& r) {
    if (k < 2) return "k must be >= 2";
    if (is_prime(k)) return std::nullopt;
    if (force) {
        r.forced = true;
        return std::nullopt;
    }
    return "k = " + std::to_string(k) + " is not prime";
}

BigInteger ipow(long base, long e) {
    BigInteger out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return out;
}

long param(std::span<const std::pair<std::string, long>> params, std::string_view name) {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    throw std::invalid_argument("missing parameter " + std::string(name));
}

}  // namespace

std::string_view claim_id(Claim c) {
    for (const auto& [claim, id] : kClaimIds)
        if (claim == c) return id;
    return "UNKNOWN";
}

std::optional<Claim> parse_claim(std::string_view id) {
    for (const auto& [claim, name] : kClaimIds)
        if (name == id) return claim;
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "unknown";
}

std::string witness_to_string(const Witness& w) {
    if (const auto* p = std::get_if<QPolynomial>(&w)) return to_string(*p);
    if (const auto* z = std::get_if<BigInteger>(&w)) return z->get_str();
    return "";
}

bool is_prime(long k) {
    if (k < 2) return false;
    for (long d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

PrimalityCheck check_primality(long k) { return {k, is_prime(k)}; }

VerificationReport verify_lemma_qbinom_factor(int n, int m, int k, int i, bool force) {
    Check c(Claim::LemmaQbinomFactor, {{"n", n}, {"m", m}, {"k", k}, {"i", i}});
    if (auto why = prime_gate(k, force, c.report())) return c.inapplicable(*why);
    if (n < 0 || m < 1 || i < 0 || i > k - 2) return c.inapplicable("requires n >= 0, m >= 1, 0 <= i <= k-2");
    return c.divide(gaussian(n * k + i, m * k - 1), q_bracket(static_cast<unsigned>(k), 1));
}

VerificationReport verify_lemma_bracket_ratio(int n, int m, int k, int i, bool force) {
    Check c(Claim::LemmaBracketRatio, {{"n", n}, {"m", m}, {"k", k}, {"i", i}});
    if (auto why = prime_gate(k, force, c.report())) return c.inapplicable(*why);
    if (m < 1 || m > n || i < 0 || i > k - 2) return c.inapplicable("requires 1 <= m <= n, 0 <= i <= k-2");
    const auto uk = static_cast<unsigned>(k);
    QPolynomial numerator = mul(gaussian(n * k + i, m * k - 1), bracket_product(uk, static_cast<unsigned>(m - 1)));
    QPolynomial denominator = QPolynomial::one();
    for (int j = n - m + 1; j <= n; ++j) denominator = mul(denominator, q_bracket(uk, static_cast<unsigned>(j)));
    return c.divide(numerator, denominator);
}

VerificationReport verify_thm_bracket_power(int n, int k, int i, EulerMemo& memo, bool force) {
    Check c(Claim::ThmBracketPower, {{"n", n}, {"k", k}, {"i", i}});
    if (auto why = prime_gate(k, force, c.report())) return c.inapplicable(*why);
    if (n < 0 || i < 1 || i > k - 1) return c.inapplicable("requires n >= 0, 1 <= i <= k-1");
    return c.divide(euler_q(n * k + i, k, memo), pow(q_bracket(static_cast<unsigned>(k), 1), static_cast<unsigned>(n)));
}

VerificationReport verify_thm_bracket_product(int n, int k, int i, EulerMemo& memo, bool force) {
    Check c(Claim::ThmBracketProduct, {{"n", n}, {"k", k}, {"i", i}});
    if (auto why = prime_gate(k, force, c.report())) return c.inapplicable(*why);
    if (n < 0 || i < 1 || i > k - 1) return c.inapplicable("requires n >= 0, 1 <= i <= k-1");
    return c.divide(euler_q(n * k + i, k, memo), bracket_product(static_cast<unsigned>(k), static_cast<unsigned>(n)));
}

VerificationReport verify_cor_kpower_at_1(int n, int k, int i, EulerMemo& memo, bool force) {
    Check c(Claim::CorKpowerAt1, {{"n", n}, {"k", k}, {"i", i}});
    if (auto why = prime_gate(k, force, c.report())) return c.inapplicable(*why);
    if (n < 0 || i < 1 || i > k - 1) return c.inapplicable("requires n >= 0, 1 <= i <= k-1");
    return c.divide(euler_count(n * k + i, k, memo), ipow(k, n));
}

VerificationReport verify_tangent_classical(int n, EulerMemo& memo) {
    Check c(Claim::TangentClassical, {{"n", n}});
    if (n < 1) return c.inapplicable("requires n >= 1");
    const BigInteger dividend = BigInteger(n + 1) * euler_count(2 * n + 1, 2, memo);
    VerificationReport r = c.divide(dividend, ipow(2, 2L * n));
    if (r.verdict == Verdict::holds && mpz_even_p(std::get<BigInteger>(r.witness).get_mpz_t())) {
        r.verdict = Verdict::fails;
        r.note = "quotient is even";
    }
    return r;
}

long gessel_viennot_exponent(int n, int k, int j) {
    const long top = static_cast<long>(n) * k - j;
    if (top < 0 || k < 2) throw std::invalid_argument("exponent requires nk - j >= 0 and k >= 2");
    return (top + (k - 2)) / (k - 1);
}

VerificationReport verify_gessel_viennot(int n, int k, int j, EulerMemo& memo, bool force) {
    Check c(Claim::GesselViennot, {{"n", n}, {"k", k}, {"j", j}});
    if (auto why = prime_gate(k, force, c.report())) return c.inapplicable(*why);
    if (n < 1 || j < 0 || j > n * k) return c.inapplicable("requires n >= 1, 0 <= j <= nk");
    const BigInteger dividend =
        binomial_int(static_cast<unsigned long>(n * k), static_cast<unsigned long>(j)) * euler_count(n * k - j, k, memo);
    return c.divide(dividend, ipow(k, gessel_viennot_exponent(n, k, j)));
}

VerificationReport explore_quotient_coprime(int n, int k, int j, EulerMemo& memo, bool force) {
    VerificationReport base = verify_gessel_viennot(n, k, j, memo, force);
    Check c(Claim::QuotientCoprimeExplore, {{"n", n}, {"k", k}, {"j", j}});
    c.report().forced = base.forced;
    if (base.verdict != Verdict::holds)
        return c.inapplicable("underlying divisibility is " + std::string(verdict_name(base.verdict)));
    auto& r = c.report();
    const auto& quotient = std::get<BigInteger>(base.witness);
    BigInteger g;
    mpz_gcd_ui(g.get_mpz_t(), quotient.get_mpz_t(), static_cast<unsigned long>(k));
    r.verdict = (g == 1) ? Verdict::holds : Verdict::fails;
    r.witness = quotient;
    r.dividend = base.dividend;
    r.divisor = base.divisor;
    if (g != 1) r.note = "gcd(quotient, k) = " + g.get_str();
    return c.finish();
}

bool witness_reconstructs(const VerificationReport& r) {
    if (r.verdict != Verdict::holds) return true;
    if (const auto* q = std::get_if<QPolynomial>(&r.witness)) {
        const auto* d = std::get_if<QPolynomial>(&r.divisor);
        const auto* a = std::get_if<QPolynomial>(&r.dividend);
        return d && a && mul(*d, *q) == *a;
    }
    if (const auto* q = std::get_if<BigInteger>(&r.witness)) {
        const auto* d = std::get_if<BigInteger>(&r.divisor);
        const auto* a = std::get_if<BigInteger>(&r.dividend);
        return d && a && (*d) * (*q) == *a;
    }
    return false;
}

std::vector<std::vector<std::pair<std::string, long>>> sweep_grid(Claim claim, int k, int max_n) {
    std::vector<std::vector<std::pair<std::string, long>>> grid;
    switch (claim) {
        case Claim::LemmaQbinomFactor:
        case Claim::LemmaBracketRatio: {
            const bool ratio = claim == Claim::LemmaBracketRatio;
            for (int n = ratio ? 1 : 0; n * k <= max_n; ++n)
                for (int i = 0; i <= k - 2 && n * k + i <= max_n; ++i)
                    for (int m = 1; m <= (ratio ? n : n + 1); ++m)
                        grid.push_back({{"n", n}, {"m", m}, {"k", k}, {"i", i}});
            break;
        }
        case Claim::ThmBracketPower:
        case Claim::ThmBracketProduct:
        case Claim::CorKpowerAt1:
            for (int n = 0; n * k + 1 <= max_n; ++n)
                for (int i = 1; i <= k - 1 && n * k + i <= max_n; ++i) grid.push_back({{"n", n}, {"k", k}, {"i", i}});
            break;
        case Claim::TangentClassical:
            if (k == 2)
                for (int n = 1; 2 * n + 1 <= max_n; ++n) grid.push_back({{"n", n}});
            break;
        case Claim::GesselViennot:
        case Claim::QuotientCoprimeExplore:
            for (int n = 1; n * k <= max_n; ++n)
                for (int j = 0; j <= n * k; ++j) grid.push_back({{"n", n}, {"k", k}, {"j", j}});
            break;
    }
    return grid;
}

VerificationReport run_claim(Claim claim, std::span<const std::pair<std::string, long>> params, EulerMemo& memo,
                             bool force) {
    auto p = [&](std::string_view name) { return static_cast<int>(param(params, name)); };
    switch (claim) {
        case Claim::LemmaQbinomFactor: return verify_lemma_qbinom_factor(p("n"), p("m"), p("k"), p("i"), force);
        case Claim::LemmaBracketRatio: return verify_lemma_bracket_ratio(p("n"), p("m"), p("k"), p("i"), force);
        case Claim::ThmBracketPower: return verify_thm_bracket_power(p("n"), p("k"), p("i"), memo, force);
        case Claim::ThmBracketProduct: return verify_thm_bracket_product(p("n"), p("k"), p("i"), memo, force);
        case Claim::CorKpowerAt1: return verify_cor_kpower_at_1(p("n"), p("k"), p("i"), memo, force);
        case Claim::TangentClassical: return verify_tangent_classical(p("n"), memo);
        case Claim::GesselViennot: return verify_gessel_viennot(p("n"), p("k"), p("j"), memo, force);
        case Claim::QuotientCoprimeExplore: return explore_quotient_coprime(p("n"), p("k"), p("j"), memo, force);
    }
    throw std::invalid_argument("unknown claim");
}

}  // namespace qeuler
