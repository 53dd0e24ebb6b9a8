#include "qeuler/cache_store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

using json = nlohmann::json;

constexpr const char* kFormatTag = "qeuler-cache";

bool is_decimal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::optional<QPolynomial> CacheStore::find(EulerKey key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::size_t CacheStore::count_for(int k) const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [k](const auto& e) { return e.first.k == k; }));
}

std::optional<std::size_t> CacheStore::max_degree() const {
    std::optional<std::size_t> best;
    for (const auto& [key, p] : entries_) {
        if (p.is_zero()) continue;
        if (!best || p.degree() > *best) best = p.degree();
    }
    return best;
}

void CacheStore::merge(const CacheStore& other) {
    for (const auto& [key, p] : other.entries_) entries_[key] = p;
}

std::string CacheStore::serialize() const {
    std::vector<const std::pair<const EulerKey, QPolynomial>*> order;
    order.reserve(entries_.size());
    for (const auto& e : entries_) order.push_back(&e);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return std::pair(a->first.k, a->first.n) < std::pair(b->first.k, b->first.n);
    });

    json doc;
    doc["format"] = kFormatTag;
    doc["version"] = kVersion;
    json list = json::array();
    for (const auto* e : order) {
        json coeffs = json::array();
        for (const auto& c : e->second.coeffs()) coeffs.push_back(c.get_str());
        list.push_back({{"n", e->first.n}, {"k", e->first.k}, {"coeffs", std::move(coeffs)}});
    }
    doc["entries"] = std::move(list);
    return doc.dump(1) + "\n";
}

CacheStore CacheStore::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CacheFormatError(std::string("cache is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer())
        throw CacheFormatError("cache document has no integer version");
    const auto version = doc["version"].get<long long>();
    if (version != kVersion)
        throw CacheFormatError("incompatible cache version " + std::to_string(version) + " (expected " +
                               std::to_string(kVersion) + ")");
    if (!doc.contains("format") || doc["format"] != kFormatTag)
        throw CacheFormatError("cache document has the wrong format tag");
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw CacheFormatError("cache document has no entries array");

    CacheStore store;
    for (const auto& e : doc["entries"]) {
        if (!e.is_object() || !e.contains("n") || !e.contains("k") || !e.contains("coeffs") ||
            !e["n"].is_number_integer() || !e["k"].is_number_integer() || !e["coeffs"].is_array())
            throw CacheFormatError("malformed cache entry: " + e.dump());
        const EulerKey key{e["n"].get<int>(), e["k"].get<int>()};
        if (key.n < 0 || key.k < 2) throw CacheFormatError("cache entry key out of range: " + e.dump());
        std::vector<BigInteger> coeffs;
        for (const auto& c : e["coeffs"]) {
            if (!c.is_string() || !is_decimal(c.get<std::string>()))
                throw CacheFormatError("cache coefficient is not a decimal string: " + c.dump());
            coeffs.emplace_back(c.get<std::string>(), 10);
        }
        if (!coeffs.empty() && sgn(coeffs.back()) == 0)
            throw CacheFormatError("cache entry is not normalized: " + e.dump());
        if (store.entries_.count(key)) throw CacheFormatError("duplicate cache entry: " + e.dump());
        store.entries_.emplace(key, QPolynomial(std::move(coeffs)));
    }
    return store;
}

void CacheStore::save(const std::filesystem::path& path) const {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << serialize();
        out.flush();
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot replace " + path.string());
    }
}

CacheStore CacheStore::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace qeuler
