#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "skewberger/registry/check.hpp"

namespace skb::registry {

namespace {

using nlohmann::ordered_json;

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> get_opt(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

ordered_json to_json(const CheckResults& r) {
  ordered_json j;
  j["dimV"] = r.dimV;
  j["dimG"] = r.dimG;
  j["dimRbar"] = opt(r.dimRbar);
  j["dimL"] = opt(r.dimL);
  j["isSkewBerger"] = opt(r.isSkewBerger);
  j["dimRnabla"] = opt(r.dimRnabla);
  j["isSymmetric"] = opt(r.isSymmetric);
  j["dimProlong1"] = opt(r.dimProlong1);
  j["dimProlong2"] = opt(r.dimProlong2);
  j["dimH22"] = opt(r.dimH22);
  j["weakDim"] = opt(r.weakDim);
  j["formKind"] = r.formKind;
  j["probablyIrreducible"] = opt(r.probablyIrreducible);
  j["spencerExact"] = opt(r.spencerExact);
  return j;
}

CheckResults from_json(const ordered_json& j, const ordered_json& digests) {
  CheckResults r;
  r.dimV = j.at("dimV").get<Index>();
  r.dimG = j.at("dimG").get<Index>();
  r.dimRbar = get_opt<std::int64_t>(j, "dimRbar");
  r.dimL = get_opt<std::int64_t>(j, "dimL");
  r.isSkewBerger = get_opt<bool>(j, "isSkewBerger");
  r.dimRnabla = get_opt<std::int64_t>(j, "dimRnabla");
  r.isSymmetric = get_opt<bool>(j, "isSymmetric");
  r.dimProlong1 = get_opt<std::int64_t>(j, "dimProlong1");
  r.dimProlong2 = get_opt<std::int64_t>(j, "dimProlong2");
  r.dimH22 = get_opt<std::int64_t>(j, "dimH22");
  r.weakDim = get_opt<std::int64_t>(j, "weakDim");
  r.formKind = j.at("formKind").get<std::string>();
  r.probablyIrreducible = get_opt<bool>(j, "probablyIrreducible");
  r.spencerExact = get_opt<bool>(j, "spencerExact");
  for (const auto& [k, v] : digests.items()) r.digests[k] = v.get<std::string>();
  return r;
}

struct Entry {
  std::string key;
  std::string spec;
  linalg::Arithmetic arithmetic;
  CheckResults results;
};

std::optional<Entry> read_entry(const std::filesystem::path& file, std::string* why) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    ordered_json j = ordered_json::parse(in);
    Entry e{j.at("key").get<std::string>(), j.at("spec").get<std::string>(),
            linalg::parse_arithmetic(j.at("arithmetic").get<std::string>()),
            from_json(j.at("dimensions"), j.at("digests"))};
    if (j.at("convention").get<std::string>() != kConventionVersion) {
      if (why) *why = "convention " + j.at("convention").get<std::string>();
      return std::nullopt;
    }
    if (file.stem().string() != sha256_hex(e.key)) {
      if (why) *why = "file name does not match the key digest";
      return std::nullopt;
    }
    return e;
  } catch (const std::exception& ex) {
    if (why) *why = ex.what();
    return std::nullopt;
  }
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir, double spot_check_fraction, std::uint64_t seed)
    : dir_(std::move(dir)), fraction_(spot_check_fraction), rng_(seed) {
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::key_text(const std::string& canonical_spec, linalg::Arithmetic arithmetic) {
  return canonical_spec + "|" + kConventionVersion + "|" + linalg::to_string(arithmetic);
}

std::filesystem::path ResultCache::file_for(const std::string& key_text) const {
  return dir_ / (sha256_hex(key_text) + ".json");
}

std::optional<CheckResults> ResultCache::load(const std::string& key_text) const {
  const auto file = file_for(key_text);
  std::lock_guard lock(mutex_);
  if (!std::filesystem::exists(file)) return std::nullopt;
  std::string why;
  auto e = read_entry(file, &why);
  if (!e || e->key != key_text) {
    std::cerr << "warning: ignoring cache file " << file.string() << (why.empty() ? "" : ": " + why) << "\n";
    return std::nullopt;
  }
  return e->results;
}

void ResultCache::store(const std::string& key_text, const std::string& spec, linalg::Arithmetic arithmetic,
                        const CheckResults& r) {
  ordered_json j;
  j["key"] = key_text;
  j["convention"] = kConventionVersion;
  j["spec"] = spec;
  j["arithmetic"] = linalg::to_string(arithmetic);
  j["dimensions"] = to_json(r);
  ordered_json d = ordered_json::object();
  for (const auto& [k, v] : r.digests) d[k] = v;
  j["digests"] = d;
  const auto file = file_for(key_text);
  auto tmp = file;
  tmp += ".tmp";
  std::lock_guard lock(mutex_);
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, file);
}

bool ResultCache::spot_check() {
  std::lock_guard lock(mutex_);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < fraction_;
}

ResultCache::VerifySummary ResultCache::verify_all(const CheckOptions& base) const {
  VerifySummary s;
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir_)) {
    if (f.path().extension() == ".json") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    ++s.entries;
    std::string why;
    auto e = read_entry(f, &why);
    if (!e) {
      ++s.corrupt;
      s.messages.push_back("corrupt " + f.filename().string() + ": " + why);
      continue;
    }
    CheckOptions o = base;
    o.cache = nullptr;
    o.use_registry = false;
    o.solve.arithmetic = e->arithmetic;
    CheckReport rep = run_check(parse_spec(e->spec), o, {});
    if (rep.results == e->results) {
      ++s.verified;
    } else {
      ++s.mismatched;
      s.messages.push_back("mismatch " + e->spec + " (" + linalg::to_string(e->arithmetic) + ")");
    }
  }
  return s;
}

}  // namespace skb::registry
