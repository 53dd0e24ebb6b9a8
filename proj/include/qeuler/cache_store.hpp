#pragma once

/**
 * @file cache_store.hpp
 * @brief Persistent map EulerKey -> E_{n|k}(q) as a versioned JSON document.
 *
 * Layout (version 1):
 *
 *   {
 *     "format": "qeuler-cache",
 *     "version": 1,
 *     "entries": [ {"n": 5, "k": 3, "coeffs": ["0", "1", "2", ...]}, ... ]
 *   }
 *
 * Coefficients are decimal strings, lowest degree first, with no trailing
 * zero. Entries are written sorted by (k, n) so that save() output is a
 * pure function of the store contents.
 */

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "qeuler/euler.hpp"
#include "qeuler/polynomial.hpp"

namespace qeuler {

class CacheStore {
public:
    static constexpr int kVersion = 1;

    void put(EulerKey key, QPolynomial value) { entries_[key] = std::move(value); }

    std::optional<QPolynomial> find(EulerKey key) const;

    const std::map<EulerKey, QPolynomial>& entries() const noexcept { return entries_; }

    std::size_t size() const noexcept { return entries_.size(); }

    /// Entries whose key has period k.
    std::size_t count_for(int k) const;

    /// Largest degree over all nonzero stored polynomials, if any.
    std::optional<std::size_t> max_degree() const;

    /// Adds every entry of `other`, overwriting equal keys.
    void merge(const CacheStore& other);

    std::string serialize() const;

    /// Throws CacheFormatError on malformed input or a version other than kVersion.
    static CacheStore parse(const std::string& text);

    /// Writes to a sibling temp file, then renames over `path`. Throws std::runtime_error on I/O failure.
    void save(const std::filesystem::path& path) const;

    /// Throws std::runtime_error if unreadable, CacheFormatError if malformed.
    static CacheStore load(const std::filesystem::path& path);

    friend bool operator==(const CacheStore&, const CacheStore&) = default;

private:
    std::map<EulerKey, QPolynomial> entries_;
};

}  // namespace qeuler
