#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "skewberger/registry/check.hpp"

namespace skb::registry {

namespace {

using nlohmann::ordered_json;

ordered_json value_json(const ExpectedValue& v) {
  return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// Milliseconds rounded to microseconds so the decimal rendering is short.
double ms(double v) { return std::round(v * 1000.0) / 1000.0; }

ordered_json report_json(const CheckReport& r, bool timings) {
  const CheckResults& x = r.results;
  const bool built = r.elapsedMsByStage.size() > 0 || !r.cacheHits.empty();
  ordered_json j;
  j["spec"] = r.spec;
  j["dimV"] = built ? ordered_json(x.dimV) : ordered_json(nullptr);
  j["dimG"] = built ? ordered_json(x.dimG) : ordered_json(nullptr);
  j["dimRbar"] = opt(x.dimRbar);
  j["dimL"] = opt(x.dimL);
  j["isSkewBerger"] = opt(x.isSkewBerger);
  j["dimRnabla"] = opt(x.dimRnabla);
  j["isSymmetric"] = opt(x.isSymmetric);
  j["dimProlong1"] = opt(x.dimProlong1);
  j["dimProlong2"] = opt(x.dimProlong2);
  j["dimH22"] = opt(x.dimH22);
  j["weakDim"] = opt(x.weakDim);
  j["formKind"] = built ? ordered_json(x.formKind) : ordered_json(nullptr);
  j["arithmetic"] = r.arithmetic;
  j["primes"] = r.primes;
  if (timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [stage, v] : r.elapsedMsByStage) t[stage] = ms(v);
    j["elapsedMsByStage"] = t;
  } else {
    j["elapsedMsByStage"] = nullptr;
  }
  j["cacheHits"] = r.cacheHits;
  ordered_json deltas = ordered_json::array();
  for (const auto& d : r.expectedDeltas) {
    ordered_json e;
    e["field"] = d.field;
    e["expected"] = value_json(d.expected);
    e["actual"] = d.actual ? value_json(*d.actual) : ordered_json(nullptr);
    e["ok"] = d.ok;
    e["source"] = d.source;
    deltas.push_back(e);
  }
  j["expectedDeltas"] = deltas;
  return j;
}

std::string csv_cell(const ordered_json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const ordered_json& e) { return !e.is_structured(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ';';
      s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
  } else if (v.is_object()) {
    bool first = true;
    for (const auto& [k, e] : v.items()) {
      if (!first) s += ';';
      first = false;
      s += k + "=" + e.dump();
    }
  } else if (v.is_array()) {
    // deltas: field=expected/actual/ok
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& d = v[i];
      if (i) s += ';';
      s += d["field"].get<std::string>() + "=" + d["expected"].dump() + "/" + d["actual"].dump() + "/" +
           (d["ok"].get<bool>() ? "ok" : "FAIL");
    }
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<const CheckReport*> sorted(const std::vector<CheckReport>& rs) {
  std::vector<const CheckReport*> p;
  for (const auto& r : rs) p.push_back(&r);
  std::stable_sort(p.begin(), p.end(), [](const CheckReport* a, const CheckReport* b) { return a->spec < b->spec; });
  return p;
}

}  // namespace

std::string emit_json(const CheckReport& r, bool include_timings) {
  return report_json(r, include_timings).dump(2) + "\n";
}

std::string emit_json(const std::vector<CheckReport>& rs, bool include_timings) {
  ordered_json a = ordered_json::array();
  for (const auto* r : sorted(rs)) a.push_back(report_json(*r, include_timings));
  return a.dump(2) + "\n";
}

std::string emit_csv(const std::vector<CheckReport>& rs, bool include_timings) {
  std::ostringstream out;
  const CheckReport empty;
  bool header = true;
  const ordered_json shape = report_json(empty, include_timings);
  for (const auto& [k, v] : shape.items()) {
    out << (header ? "" : ",") << k;
    header = false;
  }
  out << "\n";
  for (const auto* r : sorted(rs)) {
    bool first = true;
    const ordered_json row = report_json(*r, include_timings);
    for (const auto& [k, v] : row.items()) {
      out << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace skb::registry
