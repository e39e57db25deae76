#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <sstream>

#include "skewberger/registry/check.hpp"
#include "skewberger/weights/weights.hpp"

namespace {

using namespace skb;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kMismatch = 1, kError = 2 };

struct Globals {
  std::string arithmetic = "auto";
  std::string primes;
  std::size_t max_rows = 0;
  std::string format = "json";
  bool no_timings = false;
  std::string cache_dir;
  double spot_check = 0.1;
};

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoull(tok));
  }
  return out;
}

registry::CheckOptions make_options(const Globals& g, std::unique_ptr<registry::ResultCache>& cache) {
  registry::CheckOptions o;
  o.solve.arithmetic = linalg::parse_arithmetic(g.arithmetic == "automatic" ? "auto" : g.arithmetic);
  if (!g.primes.empty()) o.solve.primes = parse_primes(g.primes);
  if (!g.cache_dir.empty()) {
    cache = std::make_unique<registry::ResultCache>(g.cache_dir, g.spot_check);
    o.cache = cache.get();
  }
  return o;
}

int exit_for(const std::vector<registry::CheckReport>& rs) {
  int code = kOk;
  for (const auto& r : rs) {
    if (r.error || r.abortedStage) return kError;
    if (!r.ok()) code = kMismatch;
  }
  return code;
}

void emit(const Globals& g, const std::vector<registry::CheckReport>& rs, bool single) {
  if (g.format == "csv") {
    std::cout << registry::emit_csv(rs, !g.no_timings);
  } else if (single) {
    std::cout << registry::emit_json(rs.front(), !g.no_timings);
  } else {
    std::cout << registry::emit_json(rs, !g.no_timings);
  }
}

weights::WeightVec parse_vector(const std::string& s) {
  weights::WeightVec v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) v.push_back(linalg::parse_rational(tok));
  return v;
}

ordered_json weight_json(const weights::WeightVec& w) {
  ordered_json a = ordered_json::array();
  for (const auto& q : w) a.push_back(linalg::to_string(q));
  return a;
}

int run_triples(const Globals& g, const std::string& spec_text, const std::string& root, bool extremal,
                std::size_t budget) {
  registry::RepSpec spec = registry::parse_spec(spec_text);
  lie::LieRep a = spec.build();
  auto classical = spec.single_classical();
  if (classical && classical->first == lie::Family::gl) classical->first = lie::Family::sl;
  std::function<weights::WeightVec(const weights::WeightVec&)> key;
  if (classical) {
    key = [c = *classical](const weights::WeightVec& w) { return weights::epsilon_coordinates(c.first, c.second, w); };
  }
  weights::RootDatum rd = weights::root_datum(a, key);
  // ε-coordinates for a single classical factor, Cartan eigenvalues otherwise
  const bool raw = root.rfind("cartan:", 0) == 0;
  weights::WeightVec alpha = parse_vector(raw ? root.substr(7) : root);
  if (classical && !raw) alpha = weights::from_epsilon(classical->first, classical->second, alpha);
  auto show = [&](const weights::WeightVec& w) {
    return weight_json(classical ? weights::epsilon_coordinates(classical->first, classical->second, w) : w);
  };
  auto st = weights::spanning_triples(a, rd, alpha, extremal, budget);
  ordered_json j;
  j["spec"] = spec.canonical();
  j["coordinates"] = classical ? "epsilon" : "cartan";
  j["alpha"] = show(alpha);
  j["extremalOnly"] = extremal;
  j["rawCount"] = st.raw.size();
  j["budgetExceeded"] = st.budget_exceeded;
  j["nodesVisited"] = st.nodes_visited;
  ordered_json cls = ordered_json::array();
  for (const auto& c : st.classes) {
    ordered_json e;
    e["lambda0"] = show(c.lambda0);
    e["lambda1"] = show(c.lambda1);
    e["alpha"] = show(c.alpha);
    e["extremal"] = c.extremal;
    e["orbitCount"] = c.orbit_count;
    cls.push_back(e);
  }
  j["classes"] = cls;
  if (g.format == "csv") {
    std::cout << "lambda0,lambda1,alpha,extremal,orbitCount\n";
    auto cell = [](const ordered_json& w) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ";" : "") + w[i].get<std::string>();
      return s;
    };
    for (const auto& e : cls) {
      std::cout << cell(e["lambda0"]) << "," << cell(e["lambda1"]) << "," << cell(e["alpha"]) << ","
                << (e["extremal"].get<bool>() ? "true" : "false") << "," << e["orbitCount"].dump() << "\n";
    }
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return st.budget_exceeded ? kError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew-curvature, prolongation and weight computations for linear Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--arithmetic", g.arithmetic, "rational, modular or auto")
      ->check(CLI::IsMember({"rational", "modular", "auto", "automatic"}))
      ->envname("SKEWBERGER_ARITHMETIC");
  app.add_option("--primes", g.primes, "comma separated primes for modular solves")->envname("SKEWBERGER_PRIMES");
  app.add_option("--max-rows", g.max_rows, "cap on the number of reports in a table run (0 = none)")
      ->envname("SKEWBERGER_MAX_ROWS");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->envname("SKEWBERGER_FORMAT");
  app.add_flag("--no-timings", g.no_timings, "omit stage timings")->envname("SKEWBERGER_NO_TIMINGS");
  app.add_option("--cache-dir", g.cache_dir, "result cache directory")->envname("SKEWBERGER_CACHE_DIR");
  app.add_option("--spot-check", g.spot_check, "fraction of cache hits recomputed")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("SKEWBERGER_SPOT_CHECK");

  auto* check = app.add_subcommand("check", "check one representation");
  std::string spec_text;
  check->add_option("spec", spec_text, "e.g. so(10)+z:spin+")->required();

  auto* table = app.add_subcommand("table", "check every registry row of a table");
  int table_no = 1;
  long max_dim = 16;
  table->add_option("table", table_no, "1 or 3")->required()->check(CLI::IsMember({1, 3}));
  table->add_option("--max-dim", max_dim, "largest dim V instantiated")->envname("SKEWBERGER_MAX_DIM");

  auto* triples = app.add_subcommand("triples", "spanning triples for a root");
  std::string root;
  bool extremal = false;
  std::size_t budget = weights::kDefaultOrbitBudget;
  triples->add_option("spec", spec_text)->required();
  triples->add_option("--root", root, "ε-coordinates (classical) or cartan:c1,c2,...")->required();
  triples->add_flag("--extremal", extremal, "only extremal weights");
  triples->add_option("--budget", budget, "Weyl orbit node budget")->envname("SKEWBERGER_ORBIT_BUDGET");

  auto* cache = app.add_subcommand("cache", "result cache maintenance");
  cache->require_subcommand(1);
  auto* verify = cache->add_subcommand("verify", "recompute every cache entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    std::unique_ptr<registry::ResultCache> store;
    registry::CheckOptions opts = make_options(g, store);
    if (*check) {
      registry::RepSpec spec = registry::parse_spec(spec_text);
      if (auto p = registry::preferred_presentation(spec)) {
        std::cerr << "note: " << spec.canonical() << " is isomorphic to the registry presentation " << *p << "\n";
      }
      std::vector<registry::CheckReport> rs{registry::run_check(spec, opts)};
      emit(g, rs, true);
      if (rs.front().error) std::cerr << "error: " << *rs.front().error << "\n";
      return exit_for(rs);
    }
    if (*table) {
      if (max_dim < 0) max_dim = 0;
      auto rs = registry::run_table(table_no, static_cast<linalg::Index>(max_dim), opts, g.max_rows);
      emit(g, rs, false);
      for (const auto& r : rs) {
        if (r.error) std::cerr << "error: " << r.spec << ": " << *r.error << "\n";
      }
      return exit_for(rs);
    }
    if (*triples) return run_triples(g, spec_text, root, extremal, budget);
    if (*verify) {
      if (!store) {
        std::cerr << "error: cache verify needs --cache-dir\n";
        return kError;
      }
      auto s = store->verify_all(opts);
      ordered_json j;
      j["entries"] = s.entries;
      j["verified"] = s.verified;
      j["mismatched"] = s.mismatched;
      j["corrupt"] = s.corrupt;
      j["messages"] = s.messages;
      std::cout << j.dump(2) << "\n";
      if (s.mismatched) return kMismatch;
      return s.corrupt ? kError : kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
