#pragma once

/**
 * @file qcombinat.hpp
 * @brief q-integers, q-factorials and Gaussian binomial coefficients.
 *
 * Gaussian polynomials are built with the q-Pascal rule
 *   [n, k] = [n-1, k-1] + q^k [n-1, k],
 * so everything stays in integer polynomials and no division is needed.
 * gaussian_oracle() is the independent route: it sums q^inv over all
 * binary words with k zeros and n-k ones.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "qeuler/polynomial.hpp"

namespace qeuler {

/// Maximum number of words gaussian_oracle() will enumerate.
inline constexpr std::uint64_t kWordBudget = 10'000'000;

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
QPolynomial q_int(unsigned n);

/// [n]! = [n][n-1]...[1]; [0]! = 1.
QPolynomial q_factorial(unsigned n);

/// Gaussian binomial [n choose k]; zero when k < 0 or k > n.
QPolynomial gaussian(int n, int k);

/// Row n of the q-Pascal triangle: element k is gaussian(n, k) for k = 0..n.
std::vector<QPolynomial> gaussian_row(unsigned n);

/// Next q-Pascal row from the previous one.
std::vector<QPolynomial> next_gaussian_row(std::span<const QPolynomial> row);

/// Number of pairs i < j with word[i] = 1 and word[j] = 0.
std::uint64_t word_inversions(std::span<const std::uint8_t> word);

/**
 * Enumerates every 0/1 word with k zeros and n - k ones and returns the sum
 * of q^inv. Throws BudgetExceeded when C(n, k) > kWordBudget and
 * std::invalid_argument unless 0 <= k <= n.
 */
QPolynomial gaussian_oracle(int n, int k);

/// Ordinary binomial coefficient C(n, j); 0 when j > n.
BigInteger binomial_int(unsigned long n, unsigned long j);

}  // namespace qeuler
