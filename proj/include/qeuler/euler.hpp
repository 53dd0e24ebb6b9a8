#pragma once

/**
 * @file euler.hpp
 * @brief Generalized q-Euler numbers E_{n|k}(q).
 *
 * E_{n|k}(q) sums q^inv(p) over permutations p of 1..n whose descent set is
 * exactly {k, 2k, 3k, ...} ∩ {1, ..., n-1}. Two routes are provided:
 *
 *  - euler_oracle(): brute force over S_n (n <= 10).
 *  - euler_q(): the insertion recursion obtained by placing n+1,
 *
 *      E_{n+1} = sum_{m=1}^{floor(n/k)} [n, mk-1] q^{n-mk+1} E_{mk-1} E_{n-mk+1}
 *                + [k does not divide n] E_n,
 *
 *    with E_0 = E_1 = 1, evaluated bottom-up and memoized per k.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "qeuler/polynomial.hpp"

namespace qeuler {

class CacheStore;

struct EulerKey {
    int n = 0;
    int k = 2;

    friend auto operator<=>(const EulerKey&, const EulerKey&) = default;
};

/// One-line form a_1 a_2 ... a_n of a permutation of 1..n.
using Permutation = std::vector<int>;

/// Largest n accepted by euler_oracle().
inline constexpr int kOracleMaxLength = 10;

/// Positions i in 1..n-1 with p[i] > p[i+1] (1-based, ascending).
std::vector<int> descent_set(std::span<const int> p);

std::uint64_t inversion_count(std::span<const int> p);

/// {k, 2k, 3k, ...} ∩ {1, ..., n-1}. Requires k >= 2.
std::vector<int> required_descents(int n, int k);

/// Brute-force E_{n|k}(q). Throws BudgetExceeded for n > kOracleMaxLength.
QPolynomial euler_oracle(int n, int k);

/**
 * Per-process table of E_{j|k}(q), one prefix j = 0..N per k.
 *
 * Each prefix is published as an immutable shared vector; readers never see
 * a partially built table. Two threads extending the same k may both do
 * the work, and whichever result is longer wins.
 */
class EulerMemo {
public:
    using Table = std::vector<QPolynomial>;

    /// E_{n|k}(q), extending the table for k as needed.
    QPolynomial get(int n, int k);

    /// Snapshot of the table for k (possibly empty).
    std::shared_ptr<const Table> table(int k) const;

    /// Seeds tables from the contiguous prefix n = 0, 1, ... found in `store`.
    void warm_from(const CacheStore& store);

    /// Writes every memoized entry into `store`.
    void flush_to(CacheStore& store) const;

    std::size_t entry_count() const;

    void clear();

    static EulerMemo& process_default();

private:
    std::shared_ptr<const Table> extend(int k, int n);

    mutable std::mutex mutex_;
    std::map<int, std::shared_ptr<const Table>> tables_;
};

/// E_{n|k}(q) via the memoized recursion. Throws std::invalid_argument for k < 2 or n < 0.
QPolynomial euler_q(int n, int k, EulerMemo& memo);
QPolynomial euler_q(int n, int k);

/// E_{n|k} = E_{n|k}(1).
BigInteger euler_count(int n, int k, EulerMemo& memo);
BigInteger euler_count(int n, int k);

}  // namespace qeuler
