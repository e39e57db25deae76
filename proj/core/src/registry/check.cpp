#include "skewberger/registry/check.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>

#include "skewberger/curvature/curvature.hpp"
#include "skewberger/prolong/prolong.hpp"

namespace skb::registry {

namespace {

using Clock = std::chrono::steady_clock;
using linalg::Subspace;

std::optional<ExpectedValue> actual_of(const CheckResults& r, const std::string& field) {
  auto num = [](const std::optional<std::int64_t>& v) -> std::optional<ExpectedValue> {
    if (!v) return std::nullopt;
    return ExpectedValue{*v};
  };
  auto flag = [](const std::optional<bool>& v) -> std::optional<ExpectedValue> {
    if (!v) return std::nullopt;
    return ExpectedValue{*v};
  };
  if (field == "dimRbar") return num(r.dimRbar);
  if (field == "dimL") return num(r.dimL);
  if (field == "isSkewBerger") return flag(r.isSkewBerger);
  if (field == "dimRnabla") return num(r.dimRnabla);
  if (field == "isSymmetric") return flag(r.isSymmetric);
  if (field == "dimProlong1") return num(r.dimProlong1);
  if (field == "dimProlong2") return num(r.dimProlong2);
  if (field == "dimH22") return num(r.dimH22);
  if (field == "weakDim") return num(r.weakDim);
  if (field == "formKind") return ExpectedValue{r.formKind};
  throw std::logic_error("unknown report field " + field);
}

void attach_deltas(CheckReport& rep, const std::vector<Expectation>& expected) {
  for (const auto& e : expected) {
    Delta d;
    d.field = e.field;
    d.expected = e.value;
    d.actual = actual_of(rep.results, e.field);
    d.ok = d.actual && *d.actual == e.value;
    d.source = e.source;
    rep.expectedDeltas.push_back(std::move(d));
  }
}

const std::vector<std::string> kStages = {"build", "probe", "rbar", "skewBerger", "nabla", "prolong", "spencer", "weak"};

class Stages {
 public:
  explicit Stages(CheckReport& rep) : rep_(rep) {}

  template <class F>
  void run(const std::string& name, F&& f) {
    current_ = name;
    const auto t0 = Clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
    rep_.elapsedMsByStage.emplace_back(name, dt.count());
  }
  const std::string& current() const { return current_; }

 private:
  CheckReport& rep_;
  std::string current_;
};

void compute(const RepSpec& spec, const CheckOptions& o, CheckReport& rep) {
  CheckResults& r = rep.results;
  Stages st(rep);
  try {
    lie::LieRep a;
    st.run("build", [&] {
      a = spec.build();
      r.dimV = a.dimV();
      r.dimG = a.dim();
      r.formKind = lie::to_string(a.form_kind());
    });
    st.run("probe", [&] {
      auto p = lie::irreducibility_probe(a, o.probe_trials);
      r.probablyIrreducible = std::holds_alternative<lie::ProbablyIrreducible>(p);
    });
    curvature::CurvatureSpace cs;
    st.run("rbar", [&] {
      cs = curvature::skew_curvature_space(a, o.solve);
      r.dimRbar = static_cast<std::int64_t>(cs.dim());
      r.digests["rbar"] = basis_digest(cs.basis);
    });
    st.run("skewBerger", [&] {
      auto sb = curvature::is_skew_berger(a, cs);
      r.dimL = static_cast<std::int64_t>(sb.dim_L);
      r.isSkewBerger = sb.skew_berger;
    });
    st.run("nabla", [&] {
      Subspace n = curvature::nabla_space(a, cs, o.solve);
      r.dimRnabla = static_cast<std::int64_t>(n.dim());
      r.isSymmetric = n.dim() == 0;
      r.digests["rnabla"] = basis_digest(n);
    });
    prolong::ProlongChain chain;
    st.run("prolong", [&] {
      chain = prolong::skew_prolongation(a, 2, o.solve);
      r.dimProlong1 = static_cast<std::int64_t>(chain.g1.dim());
      r.dimProlong2 = static_cast<std::int64_t>(chain.g2.dim());
      r.digests["g1"] = basis_digest(chain.g1);
      r.digests["g2"] = basis_digest(chain.g2);
    });
    st.run("spencer", [&] {
      auto s = prolong::spencer_h22(a, chain, cs);
      r.dimH22 = static_cast<std::int64_t>(s.dim_h22);
      r.spencerExact = s.exact;
    });
    if (a.form_kind() != lie::FormKind::none) {
      st.run("weak", [&] {
        auto w = curvature::weak_space(a, o.solve);
        r.weakDim = static_cast<std::int64_t>(w.space.dim());
        r.digests["weak"] = basis_digest(w.space);
      });
    }
  } catch (const linalg::ResourceLimitExceeded& e) {
    rep.abortedStage = st.current();
    rep.error = e.what();
    rep.expectedDeltas.push_back({"abortedAt", std::string("none"), ExpectedValue{st.current()}, false, e.what()});
  }
}

}  // namespace

bool CheckReport::ok() const {
  if (abortedStage || error) return false;
  return std::all_of(expectedDeltas.begin(), expectedDeltas.end(), [](const Delta& d) { return d.ok; });
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string basis_digest(const linalg::Subspace& s) {
  std::string text = "dim=" + std::to_string(s.dim()) + "\n";
  for (const auto& v : s.basis()) {
    bool first = true;
    for (const auto& [i, q] : v) {
      if (!first) text += ' ';
      first = false;
      text += std::to_string(i) + ":" + q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    text += '\n';
  }
  return sha256_hex(text);
}

CheckReport run_check(const RepSpec& spec, const CheckOptions& options) {
  return run_check(spec, options,
                   options.use_registry ? expectations_for(spec.canonical()) : std::vector<Expectation>{});
}

CheckReport run_check(const RepSpec& spec, const CheckOptions& options, const std::vector<Expectation>& expected) {
  CheckReport rep;
  rep.spec = spec.canonical();
  rep.arithmetic = linalg::to_string(options.solve.arithmetic);
  if (options.solve.arithmetic != linalg::Arithmetic::rational) rep.primes = options.solve.primes;

  std::optional<CheckResults> cached;
  std::string key;
  if (options.cache) {
    key = ResultCache::key_text(rep.spec, options.solve.arithmetic);
    cached = options.cache->load(key);
  }
  if (cached && !options.cache->spot_check()) {
    rep.results = *cached;
    rep.cacheHits = kStages;
    attach_deltas(rep, expected);
    return rep;
  }

  compute(spec, options, rep);
  if (cached) {
    const bool same = *cached == rep.results;
    rep.expectedDeltas.push_back({"cacheSpotCheck", true, same, same, "cache replay equals recomputation"});
    if (!same) std::cerr << "warning: cache entry for " << rep.spec << " disagrees with recomputation\n";
  } else if (options.cache && !rep.abortedStage) {
    options.cache->store(key, rep.spec, options.solve.arithmetic, rep.results);
  }
  attach_deltas(rep, expected);
  return rep;
}

std::vector<CheckReport> run_table(int table, Index max_dimV, const CheckOptions& options, std::size_t max_rows) {
  // one report per spec; rows naming the same spec pool their expectations
  std::map<std::string, std::vector<Expectation>> merged;
  for (const auto& i : instantiate(table, max_dimV)) {
    auto& e = merged[i.spec];
    e.insert(e.end(), i.expected.begin(), i.expected.end());
  }
  std::vector<CheckReport> out;
  for (const auto& [spec, expected] : merged) {
    if (max_rows && out.size() >= max_rows) break;
    try {
      out.push_back(run_check(parse_spec(spec), options, expected));
    } catch (const std::exception& e) {
      CheckReport rep;
      rep.spec = spec;
      rep.arithmetic = linalg::to_string(options.solve.arithmetic);
      rep.error = e.what();
      rep.expectedDeltas.push_back({"error", std::string("none"), ExpectedValue{std::string(e.what())}, false, "run"});
      attach_deltas(rep, expected);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace skb::registry
