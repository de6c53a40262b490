#include "grapheq/ledger.hpp"

#include <algorithm>
#include <set>

#include "grapheq/canonical.hpp"
#include "grapheq/class_search.hpp"
#include "grapheq/graph_spec.hpp"
#include "grapheq/indpoly.hpp"
#include "grapheq/spectral.hpp"

namespace grapheq {

namespace {

std::string coeff_list(const IntPoly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    s += (i ? "," : "") + p.coeffs()[i].get_str();
  }
  return s + "]";
}

std::string describe_set(const std::vector<std::string>& specs) {
  std::string s = "{";
  for (std::size_t i = 0; i < specs.size(); ++i) s += (i ? "; " : "") + specs[i];
  return s + "}";
}

std::set<CanonicalKey> keys_of(const std::vector<std::string>& specs) {
  std::set<CanonicalKey> out;
  for (const auto& s : specs) out.insert(canonical_key(build_graph(parse_graph_spec(s))));
  return out;
}

std::vector<std::string> descriptions(const ClassReport& r) {
  std::vector<std::string> out;
  for (const auto& m : r.members) out.push_back(m.description);
  return out;
}

}  // namespace

bool ledger_passed(const std::vector<LedgerEntry>& entries) {
  return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.pass; });
}

std::vector<LedgerEntry> run_ledger(const LedgerOptions& options) {
  PolyCache local;
  PolyCache& cache = options.cache ? *options.cache : local;
  std::vector<LedgerEntry> out;

  auto poly_entry = [&](std::string id, std::string source, const IntPoly& expected,
                        const IntPoly& computed) {
    out.push_back({std::move(id), std::move(source), coeff_list(expected), coeff_list(computed),
                   expected == computed});
  };

  const IntPoly f3{1, 3};
  const IntPoly f5{1, 5, 5};
  const IntPoly f9{1, 6, 9, 3};
  const IntPoly f15{1, 7, 14, 8, 1};
  poly_entry("example-f3", "worked example: f_3", f3, f_poly_by_division(3));
  poly_entry("example-f5", "worked example: f_5", f5, f_poly_by_division(5));
  poly_entry("example-f9", "worked example: f_9", f9, f_poly_by_division(9));
  poly_entry("example-f15", "worked example: f_15", f15, f_poly_by_division(15));
  poly_entry("example-c9", "worked example: I(C_9,x)", IntPoly{1, 9, 27, 30, 9},
             indpoly(cycle_graph(9), cache));
  poly_entry("example-c15", "worked example: I(C_15,x)", IntPoly{1, 15, 90, 275, 450, 378, 140, 15},
             indpoly(cycle_graph(15), cache));
  poly_entry("example-c9-product", "worked example: I(C_9,x) = f_3 f_9", f3 * f9,
             factorize_cycle_poly(9).product());
  poly_entry("example-c15-product", "worked example: I(C_15,x) = f_3 f_5 f_15", f3 * f5 * f15,
             factorize_cycle_poly(15).product());
  for (const char* id : {"Ga", "Gb", "Gc", "Gd"}) {
    poly_entry(std::string("named-") + id + "-f9",
               std::string("worked example: I(") + id + ",x) = f_9", f9,
               indpoly(named_graph(id), cache));
  }
  for (const char* id : {"Ga'", "Gb'", "Gc'"}) {
    std::string tag = id;
    tag.back() = 'p';
    poly_entry("named-" + tag + "-f15", std::string("class of C_15: I(") + id + ",x) = f_15", f15,
               indpoly(named_graph(id), cache));
  }

  SearchOptions search;
  search.threads = options.threads;
  search.cache = &cache;
  auto class_entry = [&](unsigned n, std::vector<std::string> expected, std::string source) {
    const ClassReport r = structured_class_search(n, search);
    const bool checks_ok = std::all_of(r.members.begin(), r.members.end(),
                                       [](const ClassMember& m) { return m.checks.all_pass(); });
    out.push_back({"class-members-" + std::to_string(n), std::move(source), describe_set(expected),
                   describe_set(descriptions(r)), r.keys() == keys_of(expected) && checks_ok});
    out.push_back({"class-count-" + std::to_string(n),
                   "classification: size of the class of C_" + std::to_string(n),
                   std::to_string(expected.size()), std::to_string(r.members.size()),
                   r.members.size() == expected.size()});
  };
  class_entry(3, {"C3"}, "classification: class of C_3");
  class_entry(9, {"C9", "D9", "C3 + Ga", "C3 + Gb", "C3 + Gc", "C3 + Gd"},
              "classification: class of C_9");
  class_entry(15,
              {"C15", "D15", "C3 + C5 + Ga'", "C3 + D5 + Ga'", "C3 + C5 + Gb'", "C3 + D5 + Gb'",
               "C3 + C5 + Gc'", "C3 + D5 + Gc'"},
              "classification: class of C_15");
  for (unsigned n = 5; n <= options.max_n; n += 2) {
    if (n == 9 || n == 15) continue;
    const std::string c = "C" + std::to_string(n);
    const std::string d = "D" + std::to_string(n);
    class_entry(n, {c, d}, "classification: class of C_" + std::to_string(n));
  }

  {
    const ClassReport r = exhaustive_class_search(6, SearchMode::AllGraphs, search);
    const std::vector<std::string> expected{"C6", "D6", "K4_minus_e + P2"};
    out.push_back({"class-members-6", "classification: class of C_6", describe_set(expected),
                   describe_set(descriptions(r)), r.keys() == keys_of(expected)});
  }

  {
    unsigned bad = 0;
    for (int n = 4; n <= 60; ++n) {
      if (indpoly(cycle_graph(n), cache) != indpoly(d_graph(n), cache)) ++bad;
    }
    out.push_back({"cn-dn-equivalent", "C_n and D_n are independence equivalent, 4 <= n <= 60",
                   "0 mismatches", std::to_string(bad) + " mismatches", bad == 0});
  }
  {
    unsigned bad = 0;
    for (unsigned long n = 3; n <= 99; n += 2) {
      if (f_poly_by_transform(n) != f_poly_by_division(n)) ++bad;
    }
    out.push_back({"f-routes-agree",
                   "f_n by shifted minimal polynomial and by division, odd n <= 99", "0 mismatches",
                   std::to_string(bad) + " mismatches", bad == 0});
  }
  return out;
}

}  // namespace grapheq
