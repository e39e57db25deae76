#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skewberger/linalg/linalg.hpp"
#include "skewberger/registry/registry.hpp"

namespace skb::registry {

/// Bumped whenever a normalization or basis ordering changes; part of every cache key.
inline constexpr const char* kConventionVersion = "skb-conventions-1";

/// Computed quantities. Unset optionals are stages that did not run.
struct CheckResults {
  Index dimV = 0;
  Index dimG = 0;
  std::optional<std::int64_t> dimRbar;
  std::optional<std::int64_t> dimL;
  std::optional<bool> isSkewBerger;
  std::optional<std::int64_t> dimRnabla;
  std::optional<bool> isSymmetric;
  std::optional<std::int64_t> dimProlong1;
  std::optional<std::int64_t> dimProlong2;
  std::optional<std::int64_t> dimH22;
  std::optional<std::int64_t> weakDim;
  std::string formKind = "none";
  std::optional<bool> probablyIrreducible;
  std::optional<bool> spencerExact;
  /// SHA-256 of each computed basis (rbar, rnabla, g1, g2, weak) in the
  /// serialization of basis_digest.
  std::map<std::string, std::string> digests;

  friend bool operator==(const CheckResults&, const CheckResults&) = default;
};

struct Delta {
  std::string field;
  ExpectedValue expected;
  std::optional<ExpectedValue> actual;  // unset when the stage did not run
  bool ok = false;
  std::string source;
};

struct CheckReport {
  std::string spec;
  CheckResults results;
  std::string arithmetic;
  std::vector<std::uint64_t> primes;
  std::vector<std::pair<std::string, double>> elapsedMsByStage;
  std::vector<std::string> cacheHits;
  std::vector<Delta> expectedDeltas;
  std::optional<std::string> abortedStage;
  std::optional<std::string> error;

  /// No failing delta, no abort, no error.
  bool ok() const;
};

class ResultCache;

struct CheckOptions {
  linalg::SolveOptions solve;
  ResultCache* cache = nullptr;
  unsigned probe_trials = 4;
  /// Attach registry expectations for the canonical spec.
  bool use_registry = true;
};

/// SHA-256 hex of the canonical text "dim=<d>\n" followed by one line per
/// basis vector "i:num/den i:num/den ...", entries in increasing index order.
std::string basis_digest(const linalg::Subspace& s);
std::string sha256_hex(const std::string& bytes);

/// Runs every stage; construction errors propagate, resource aborts give a partial report.
CheckReport run_check(const RepSpec& spec, const CheckOptions& options);
/// Same, against an explicit expectation list instead of the registry lookup.
CheckReport run_check(const RepSpec& spec, const CheckOptions& options, const std::vector<Expectation>& expected);
/// Per-row errors are recorded in the report. max_rows = 0 means no cap.
std::vector<CheckReport> run_table(int table, Index max_dimV, const CheckOptions& options,
                                   std::size_t max_rows = 0);

/// Fixed field order; timings become null when include_timings is false.
std::string emit_json(const CheckReport& r, bool include_timings = true);
std::string emit_json(const std::vector<CheckReport>& rs, bool include_timings = true);
std::string emit_csv(const std::vector<CheckReport>& rs, bool include_timings = true);

/// One JSON file per key in a directory. Hits are replayed; a random fraction
/// of hits is recomputed and compared.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, double spot_check_fraction = 0.1, std::uint64_t seed = 1);

  static std::string key_text(const std::string& canonical_spec, linalg::Arithmetic arithmetic);
  std::filesystem::path file_for(const std::string& key_text) const;

  std::optional<CheckResults> load(const std::string& key_text) const;
  void store(const std::string& key_text, const std::string& spec, linalg::Arithmetic arithmetic,
             const CheckResults& r);
  bool spot_check();

  struct VerifySummary {
    std::size_t entries = 0;
    std::size_t verified = 0;
    std::size_t mismatched = 0;
    std::size_t corrupt = 0;
    std::vector<std::string> messages;
  };
  /// Recomputes every entry with the options it was keyed under.
  VerifySummary verify_all(const CheckOptions& base) const;

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  double fraction_;
  std::mt19937_64 rng_;
  mutable std::mutex mutex_;
};

}  // namespace skb::registry
