#include "grapheq/poly_cache.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <ostream>

#include <json.hpp>

#include "grapheq/indpoly.hpp"

namespace grapheq {

std::optional<IntPoly> PolyCache::find(const CanonicalKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

bool PolyCache::insert(const CanonicalKey& key, IntPoly poly) {
  std::unique_lock lock(mutex_);
  return map_.try_emplace(key, std::move(poly)).second;
}

PolyCache::Stats PolyCache::stats() const {
  std::shared_lock lock(mutex_);
  return {hits_.load(), misses_.load(), map_.size()};
}

std::size_t PolyCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void PolyCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
  hits_ = 0;
  misses_ = 0;
}

std::vector<std::pair<CanonicalKey, IntPoly>> PolyCache::entries() const {
  std::vector<std::pair<CanonicalKey, IntPoly>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

// Empty string on success, otherwise the reason the entry is rejected.
std::string validate(const CanonicalKey& key, const IntPoly& p) {
  Graph g;
  try {
    g = graph_from_key(key);
    if (canonical_key(g) != key) return "key is not in canonical form";
  } catch (const std::exception& e) {
    return e.what();
  }
  const std::size_t n = g.vertex_count();
  if (p.coeff(0) != 1) return "constant term is not 1";
  if (p.coeff(1) != static_cast<unsigned long>(n)) return "x coefficient does not match |V|";
  if (p.coeff(2) !=
      binomial(static_cast<long>(n), 2) - static_cast<unsigned long>(g.edge_count())) {
    return "x^2 coefficient does not match C(|V|,2) - |E|";
  }
  if (*p.degree() > n) return "degree exceeds |V|";
  for (const auto& c : p.coeffs()) {
    if (c <= 0) return "non-positive coefficient";
  }
  if (n <= PolyCache::kBruteForceValidation && indpoly_bruteforce(g) != p) {
    return "polynomial disagrees with brute force";
  }
  return {};
}

}  // namespace

PolyCache::LoadReport PolyCache::load_jsonl(std::istream& in) {
  LoadReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto skip = [&](const std::string& why) {
      ++report.skipped;
      report.warnings.push_back("cache line " + std::to_string(line_no) + " skipped: " + why);
    };
    CanonicalKey key;
    std::vector<BigInt> coeffs;
    try {
      const auto j = nlohmann::json::parse(line);
      key = CanonicalKey::from_base64(j.at("key").get<std::string>());
      for (const auto& c : j.at("coeffs")) {
        const auto s = c.get<std::string>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
          throw std::invalid_argument("coefficient '" + s + "' is not a decimal integer");
        }
        coeffs.emplace_back(s);
      }
    } catch (const std::exception& e) {
      skip(e.what());
      continue;
    }
    IntPoly p(std::move(coeffs));
    if (auto why = validate(key, p); !why.empty()) {
      skip(why);
      continue;
    }
    insert(key, std::move(p));
    ++report.loaded;
  }
  return report;
}

void PolyCache::save_jsonl(std::ostream& out) const {
  for (const auto& [key, poly] : entries()) {
    nlohmann::json j;
    j["key"] = key.to_base64();
    auto coeffs = nlohmann::json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = std::move(coeffs);
    out << j.dump() << '\n';
  }
}

}  // namespace grapheq
