#include "qeuler/euler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qeuler/cache_store.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qcombinat.hpp"

namespace qeuler {

namespace {

void require_period(int k) {
    if (k < 2) throw std::invalid_argument("descent period k must be >= 2, got " + std::to_string(k));
}

void require_length(int n) {
    if (n < 0) throw std::invalid_argument("permutation length n must be >= 0, got " + std::to_string(n));
}

}  // namespace

std::vector<int> descent_set(std::span<const int> p) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::uint64_t inversion_count(std::span<const int> p) {
    std::uint64_t inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

std::vector<int> required_descents(int n, int k) {
    require_period(k);
    std::vector<int> out;
    for (int pos = k; pos < n; pos += k) out.push_back(pos);
    return out;
}

QPolynomial euler_oracle(int n, int k) {
    require_period(k);
    require_length(n);
    if (n > kOracleMaxLength) {
        std::uint64_t fact = 1;
        for (int i = 2; i <= n && i <= 20; ++i) fact *= static_cast<std::uint64_t>(i);
        std::uint64_t budget = 1;
        for (int i = 2; i <= kOracleMaxLength; ++i) budget *= static_cast<std::uint64_t>(i);
        throw BudgetExceeded("euler_oracle permutation count " + std::to_string(n) + "!", fact, budget);
    }

    // Descents are required exactly at multiples of k, ascents everywhere else.
    std::vector<bool> must_descend(static_cast<std::size_t>(std::max(n, 1)), false);
    for (int pos : required_descents(n, k)) must_descend[static_cast<std::size_t>(pos) - 1] = true;

    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<BigInteger> coeffs(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2 + 1, 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = (p[i] > p[i + 1]) == must_descend[i];
        if (ok) coeffs[inversion_count(p)] += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return QPolynomial(std::move(coeffs));
}

std::shared_ptr<const EulerMemo::Table> EulerMemo::table(int k) const {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(k);
    if (it == tables_.end()) return std::make_shared<const Table>();
    return it->second;
}

std::shared_ptr<const EulerMemo::Table> EulerMemo::extend(int k, int n) {
    auto current = table(k);
    const auto want = static_cast<std::size_t>(n) + 1;
    if (current->size() >= want) return current;

    Table t(*current);
    if (t.empty()) t.push_back(QPolynomial::one());
    if (t.size() == 1) t.push_back(QPolynomial::one());

    // Row j of the q-Pascal triangle feeds E_{j+1}.
    std::size_t j = t.size() - 1;
    std::vector<QPolynomial> row = gaussian_row(static_cast<unsigned>(j));
    for (; t.size() < want; ++j) {
        if (row.size() != j + 1) row = next_gaussian_row(row);
        QPolynomial next = (j % static_cast<std::size_t>(k) != 0) ? t[j] : QPolynomial::zero();
        const std::size_t period = static_cast<std::size_t>(k);
        for (std::size_t m = 1; m * period <= j; ++m) {
            const std::size_t left = m * period - 1;
            const std::size_t right = j - m * period + 1;
            next = add(next, shift(mul(row[left], mul(t[left], t[right])), right));
        }
        t.push_back(std::move(next));
    }

    auto published = std::make_shared<const Table>(std::move(t));
    std::lock_guard lock(mutex_);
    auto& slot = tables_[k];
    if (!slot || slot->size() < published->size()) slot = published;
    return slot;
}

QPolynomial EulerMemo::get(int n, int k) {
    require_period(k);
    require_length(n);
    return (*extend(k, n))[static_cast<std::size_t>(n)];
}

void EulerMemo::warm_from(const CacheStore& store) {
    std::map<int, Table> prefixes;
    for (const auto& [key, poly] : store.entries()) {
        auto& t = prefixes[key.k];
        if (key.k >= 2 && static_cast<std::size_t>(key.n) == t.size()) t.push_back(poly);
    }
    std::lock_guard lock(mutex_);
    for (auto& [k, t] : prefixes) {
        if (t.empty()) continue;
        auto& slot = tables_[k];
        if (!slot || slot->size() < t.size()) slot = std::make_shared<const Table>(std::move(t));
    }
}

void EulerMemo::flush_to(CacheStore& store) const {
    std::lock_guard lock(mutex_);
    for (const auto& [k, t] : tables_)
        for (std::size_t n = 0; n < t->size(); ++n) store.put({static_cast<int>(n), k}, (*t)[n]);
}

std::size_t EulerMemo::entry_count() const {
    std::lock_guard lock(mutex_);
    std::size_t total = 0;
    for (const auto& [k, t] : tables_) total += t->size();
    return total;
}

void EulerMemo::clear() {
    std::lock_guard lock(mutex_);
    tables_.clear();
}

EulerMemo& EulerMemo::process_default() {
    static EulerMemo memo;
    return memo;
}

QPolynomial euler_q(int n, int k, EulerMemo& memo) { return memo.get(n, k); }

QPolynomial euler_q(int n, int k) { return euler_q(n, k, EulerMemo::process_default()); }

BigInteger euler_count(int n, int k, EulerMemo& memo) { return eval_int(euler_q(n, k, memo), 1); }

BigInteger euler_count(int n, int k) { return euler_count(n, k, EulerMemo::process_default()); }

}  // namespace qeuler
