#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "grapheq/class_search.hpp"
#include "grapheq/graph_spec.hpp"
#include "grapheq/indpoly.hpp"
#include "grapheq/json_io.hpp"
#include "grapheq/ledger.hpp"
#include "grapheq/spectral.hpp"
#include "grapheq/unicyclic.hpp"

namespace grapheq {

namespace {

struct Globals {
  std::string format = "text";
  std::string cache_path;
  unsigned threads = 1;
  unsigned long seed = 0;
  bool json() const { return format == "json"; }
};

class CacheSession {
 public:
  CacheSession(std::string path, std::ostream& err) : path_(std::move(path)), err_(err) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    const auto report = cache_.load_jsonl(in);
    for (const auto& w : report.warnings) err_ << "warning: " << w << '\n';
  }

  PolyCache& cache() { return cache_; }

  void save() {
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::trunc);
    if (!out) {
      err_ << "warning: cannot write cache file " << path_ << '\n';
      return;
    }
    cache_.save_jsonl(out);
  }

 private:
  std::string path_;
  std::ostream& err_;
  PolyCache cache_;
};

std::string factor_text(const FactorSet& fs, const RootCheck& rc) {
  std::ostringstream os;
  os << "I(C_" << fs.n << ",x) = " << fs.product().to_string() << '\n';
  for (const auto& [m, f] : fs.factors) os << "  f_" << m << " = " << f.to_string() << '\n';
  os << "route: " << to_string(fs.route) << '\n';
  os << "root check: max residual " << rc.max_residual << ", tolerance " << rc.tolerance << ", "
     << (rc.pass ? "pass" : "FAIL") << '\n';
  return os.str();
}

std::string ledger_text(const std::vector<LedgerEntry>& entries) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& e : entries) {
    os << (e.pass ? "pass  " : "FAIL  ") << e.id << "  (" << e.source << ")\n";
    if (!e.pass) {
      ++failed;
      os << "      expected " << e.expected << "\n      computed " << e.computed << '\n';
    }
  }
  os << entries.size() - failed << '/' << entries.size() << " entries pass\n";
  return os.str();
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence polynomials and the independence equivalence class of C_n", "grapheq"};
  app.require_subcommand(1);
  Globals g;
  if (const char* env = std::getenv("GRAPHEQ_CACHE")) g.cache_path = env;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--cache", g.cache_path, "JSON-lines polynomial cache (default $GRAPHEQ_CACHE)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for sampling order; results do not depend on it");

  auto* poly = app.add_subcommand("poly", "Print I(G,x) for a graph spec");
  std::string spec_text;
  poly->add_option("graphspec", spec_text, "e.g. C9, A(2,1), C3 + Gd, g6:...")->required();

  auto* factor = app.add_subcommand("factor", "Factor I(C_n,x) into f_m and check the roots");
  unsigned long factor_n = 0;
  std::string route = "division";
  factor->add_option("n", factor_n, "Odd n >= 3")->required();
  factor->add_option("--route", route, "division or transform")
      ->check(CLI::IsMember({"division", "transform"}))
      ->capture_default_str();

  auto* cls = app.add_subcommand("class", "Independence equivalence class of C_n");
  unsigned class_n = 0;
  std::string mode = "structured";
  bool no_pruning = false;
  bool timing = false;
  cls->add_option("n", class_n, "Odd n >= 3 (all-graphs also accepts even n)")->required();
  cls->add_option("--mode", mode, "structured, all-graphs or unicyclic")
      ->check(CLI::IsMember({"structured", "all-graphs", "unicyclic"}))
      ->capture_default_str();
  cls->add_flag("--no-divisor-pruning", no_pruning, "Search without divisibility pruning");
  cls->add_flag("--timing", timing, "Include wall time in the output");

  auto* verify = app.add_subcommand("verify-paper", "Recompute the ledger of reference values");
  unsigned max_n = 21;
  verify->add_option("--max-n", max_n, "Largest odd n whose class is recomputed")
      ->check(CLI::Range(3u, 63u))
      ->capture_default_str();

  auto* uni = app.add_subcommand("unicyclic", "List connected unicyclic graphs on v vertices");
  unsigned uni_v = 0;
  uni->add_option("v", uni_v, "3 <= v <= 21")->required();

  for (auto* sub : {poly, factor, cls, verify, uni}) sub->fallthrough();

  std::vector<const char*> argv{"grapheq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (poly->parsed()) {
      GraphSpec spec;
      try {
        spec = parse_graph_spec(spec_text);
      } catch (const SpecParseError& e) {
        err << "error: " << e.what() << "\n\n" << poly->help();
        return kExitUsage;
      }
      CacheSession session(g.cache_path, err);
      const IntPoly p = indpoly(build_graph(spec), session.cache());
      session.save();
      out << (g.json() ? poly_to_json(p) : p.to_string() + "\n");
      return kExitOk;
    }
    if (factor->parsed()) {
      const FactorSet fs = factorize_cycle_poly(
          factor_n, route == "transform" ? FactorRoute::Transform : FactorRoute::Division);
      const RootCheck rc = check_roots(fs.product(), root_values(factor_n), RootSelection::All);
      out << (g.json() ? factor_to_json(fs, rc) : factor_text(fs, rc));
      return kExitOk;
    }
    if (cls->parsed()) {
      CacheSession session(g.cache_path, err);
      SearchOptions opts;
      opts.divisor_pruning = !no_pruning;
      opts.threads = g.threads;
      opts.cache = &session.cache();
      const SearchMode m = parse_search_mode(mode);
      const ClassReport report = m == SearchMode::Structured
                                     ? structured_class_search(class_n, opts)
                                     : exhaustive_class_search(class_n, m, opts);
      session.save();
      if (g.json()) {
        out << class_to_json(report, timing);
      } else {
        out << render_class_text(report);
        if (timing) out << "wall time " << report.stats.wall_seconds << " s\n";
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      CacheSession session(g.cache_path, err);
      LedgerOptions opts;
      opts.max_n = max_n;
      opts.threads = g.threads;
      opts.cache = &session.cache();
      const auto entries = run_ledger(opts);
      session.save();
      out << (g.json() ? ledger_to_json(entries) : ledger_text(entries));
      return ledger_passed(entries) ? kExitOk : kExitLedgerFailure;
    }
    if (uni->parsed()) {
      const auto graphs = enumerate_unicyclic(uni_v);
      if (g.json()) {
        out << unicyclic_to_json(uni_v, graphs);
      } else {
        out << graphs.size() << " connected unicyclic graphs on " << uni_v << " vertices\n";
        for (const auto& gr : graphs) out << "  " << describe_graph(gr) << '\n';
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace grapheq
