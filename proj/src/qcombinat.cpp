#include "qeuler/qcombinat.hpp"

#include <algorithm>
#include <stdexcept>

#include "qeuler/errors.hpp"

namespace qeuler {

QPolynomial q_int(unsigned n) {
    if (n == 0) return QPolynomial::zero();
    return q_bracket(n, 1);
}

QPolynomial q_factorial(unsigned n) {
    QPolynomial p = QPolynomial::one();
    for (unsigned j = 2; j <= n; ++j) p = mul(p, q_int(j));
    return p;
}

std::vector<QPolynomial> next_gaussian_row(std::span<const QPolynomial> row) {
    const std::size_t n = row.size();  // row holds gaussian(n-1, 0..n-1)
    std::vector<QPolynomial> next(n + 1);
    next[0] = QPolynomial::one();
    next[n] = QPolynomial::one();
    for (std::size_t k = 1; k < n; ++k) next[k] = add(row[k - 1], shift(row[k], k));
    return next;
}

std::vector<QPolynomial> gaussian_row(unsigned n) {
    std::vector<QPolynomial> row{QPolynomial::one()};
    for (unsigned i = 1; i <= n; ++i) row = next_gaussian_row(row);
    return row;
}

QPolynomial gaussian(int n, int k) {
    if (n < 0 || k < 0 || k > n) return QPolynomial::zero();
    // Only entries 0..k of each row are needed.
    const auto width = static_cast<std::size_t>(k) + 1;
    std::vector<QPolynomial> col(width);
    col[0] = QPolynomial::one();
    for (int row = 1; row <= n; ++row) {
        const std::size_t top = std::min<std::size_t>(width - 1, static_cast<std::size_t>(row));
        for (std::size_t j = top; j >= 1; --j) col[j] = add(col[j - 1], shift(col[j], j));
    }
    return col[static_cast<std::size_t>(k)];
}

std::uint64_t word_inversions(std::span<const std::uint8_t> word) {
    std::uint64_t ones = 0;
    std::uint64_t inv = 0;
    for (auto b : word) {
        if (b) ++ones;
        else inv += ones;
    }
    return inv;
}

QPolynomial gaussian_oracle(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("gaussian_oracle requires 0 <= k <= n");
    const BigInteger count = binomial_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (count > BigInteger(static_cast<unsigned long>(kWordBudget)))
        throw BudgetExceeded("gaussian_oracle word count", count.fits_ulong_p() ? count.get_ui() : UINT64_MAX,
                             kWordBudget);

    std::vector<std::uint8_t> word(static_cast<std::size_t>(n), 1);
    std::fill(word.begin(), word.begin() + k, 0);
    const std::size_t max_inv = static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k);
    std::vector<BigInteger> coeffs(max_inv + 1, 0);
    do {
        coeffs[word_inversions(word)] += 1;
    } while (std::next_permutation(word.begin(), word.end()));
    return QPolynomial(std::move(coeffs));
}

BigInteger binomial_int(unsigned long n, unsigned long j) {
    if (j > n) return 0;
    BigInteger out;
    mpz_bin_uiui(out.get_mpz_t(), n, j);
    return out;
}

}  // namespace qeuler
