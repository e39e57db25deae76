#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>
#include <json.hpp>

#include "skewberger/registry/check.hpp"

using namespace skb::registry;
using nlohmann::ordered_json;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("skb_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("spec parsing and normal form") {
  RepSpec w = parse_spec("sl(5):wedge(2)");
  CHECK(w.canonical() == "sl(5):wedge(2)");
  CHECK(w.dimV() == 10);
  CHECK(w.rep == RepKind::wedge);

  RepSpec s = parse_spec("so(10)+z:spin+");
  CHECK(s.center);
  CHECK(s.dimV() == 16);
  CHECK(s.canonical() == "so(10)+z:spin+");

  CHECK(parse_spec("sl(3)+z:std").canonical() == "gl(3):std");
  CHECK(parse_spec("sl(3)+z:adjoint").canonical() == "sl(3)+z:adjoint");
  CHECK(parse_spec("sp(4)*so(3):tensor").canonical() == "so(3)*sp(4):tensor");
  CHECK(parse_spec("gl(3)*sl(2):tensor").canonical() == "sl(2)*sl(3)+z:tensor");
  CHECK(parse_spec("spin(7):std").canonical() == "so(7):spin");
  CHECK(parse_spec("spin(10):std").canonical() == "so(10):spin+");
  CHECK(parse_spec("g2*sl(2):tensor").canonical() == "sl(2)*g2:tensor");
  CHECK(parse_spec("sp(6):wedge3_0").dimV() == 14);
  CHECK(parse_spec("so(5):sym2_0").dimV() == 14);
  CHECK(parse_spec("spin(7)*sl(2):tensor").dimV() == 16);

  CHECK_THROWS_AS(parse_spec("sp(3):std"), SpecSemanticError);
  CHECK_THROWS_AS(parse_spec("sl(3):tensor"), SpecSemanticError);
  CHECK_THROWS_AS(parse_spec("sl(2)*sl(3):std"), SpecSemanticError);
  CHECK_THROWS_AS(parse_spec("gl(3)+z:std"), SpecSemanticError);
  CHECK_THROWS_AS(parse_spec("so(9):spin+"), SpecSemanticError);
  CHECK_THROWS_AS(parse_spec("sl(3):wedge(4)"), SpecSemanticError);
  try {
    parse_spec("sl(5):wedg(2)");
    FAIL("expected a syntax error");
  } catch (const SpecSyntaxError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_spec("sl(5)wedge(2)"), SpecSyntaxError);
  CHECK_THROWS_AS(parse_spec("sl(5):std "), SpecSyntaxError);
  CHECK_THROWS_AS(parse_spec("h4:std"), SpecSyntaxError);

  CHECK(preferred_presentation(parse_spec("sl(4):wedge(2)")) == std::optional<std::string>("so(6):std"));
  CHECK(preferred_presentation(parse_spec("gl(2):sym(2)")) == std::optional<std::string>("so(3)+z:std"));
  CHECK(preferred_presentation(parse_spec("sl(3):wedge(2)")) == std::optional<std::string>("sl(3):std"));
  CHECK_FALSE(preferred_presentation(parse_spec("sl(5):wedge(2)")));
}

TEST_CASE("built representations match the spec dimensions") {
  for (const char* t : {"sl(2)*sl(3)+z:tensor", "sp(6):wedge3_0", "so(5):sym2_0", "sl(2)*so(3):tensor",
                        "so(7):spin", "g2:adjoint", "sp(4)+z:std"}) {
    CAPTURE(t);
    RepSpec s = parse_spec(t);
    auto a = s.build();
    CHECK(a.dimV() == s.dimV());
    CHECK(a.name() == s.canonical());
  }
  CHECK(parse_spec("sl(2)*so(3):tensor").build().form_kind() == skb::lie::FormKind::skew);
  CHECK(parse_spec("sl(2)*sp(4):tensor").build().form_kind() == skb::lie::FormKind::symmetric);
}

TEST_CASE("registry instantiation") {
  CHECK(instantiate(1, 1).empty());
  CHECK(instantiate(3, 1).empty());
  CHECK_THROWS_AS(table_entries(2), std::invalid_argument);
  CHECK(table_entries(1).size() == 24);
  CHECK(table_entries(3).size() == 14);

  auto t1 = instantiate(1, 16);
  for (std::size_t i = 1; i < t1.size(); ++i) CHECK(t1[i - 1].spec <= t1[i].spec);
  for (const auto& i : t1) {
    CHECK(i.dimV <= 16);
    CHECK(parse_spec(i.spec).canonical() == i.spec);
    CHECK_FALSE(preferred_presentation(parse_spec(i.spec)));
    for (const auto& e : i.expected) CHECK_FALSE(e.source.empty());
  }
  auto e = expectations_for("so(10)+z:spin+");
  bool found = false;
  for (const auto& x : e) {
    if (x.field == "dimRbar") {
      CHECK(std::get<std::int64_t>(x.value) == 176);
      found = true;
    }
  }
  CHECK(found);
  auto h = expectations_for("gl(5):wedge(2)");
  bool h5 = false;
  for (const auto& x : h) h5 |= x.field == "dimH22" && std::get<std::int64_t>(x.value) == 5;
  CHECK(h5);
  for (const auto& entry : table_entries(1)) {
    if (entry.row == 10) CHECK(entry.instances(100).empty());
  }
}

TEST_CASE("check report and serialization") {
  CheckOptions o;
  CheckReport r = run_check(parse_spec("so(3):std"), o);
  CHECK(r.results.dimRbar == 3);
  CHECK(r.results.dimL == 3);
  CHECK(r.results.isSkewBerger == true);
  CHECK(r.results.dimProlong1 == 1);
  CHECK(r.results.dimH22 == 0);
  CHECK(r.results.formKind == "symmetric");
  CHECK(r.results.weakDim.has_value());
  CHECK(r.ok());

  ordered_json j = ordered_json::parse(emit_json(r, false));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> want = {"spec",        "dimV",        "dimG",         "dimRbar",   "dimL",
                                         "isSkewBerger", "dimRnabla",  "isSymmetric",  "dimProlong1",
                                         "dimProlong2", "dimH22",      "weakDim",      "formKind",  "arithmetic",
                                         "primes",      "elapsedMsByStage", "cacheHits", "expectedDeltas"};
  CHECK(keys == want);
  CHECK(j["elapsedMsByStage"].is_null());
  CHECK(emit_json(r, false) == emit_json(run_check(parse_spec("so(3):std"), o), false));
  CHECK(ordered_json::parse(emit_json(r, true))["elapsedMsByStage"].is_object());

  CheckReport b = run_check(parse_spec("sl(2):std"), o);
  std::string csv = emit_csv({r, b}, false);
  std::istringstream in(csv);
  std::string header, l1, l2, extra;
  std::getline(in, header);
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK_FALSE(std::getline(in, extra));
  CHECK(header.rfind("spec,dimV,dimG,dimRbar", 0) == 0);
  CHECK(l1.rfind("sl(2):std,", 0) == 0);  // sorted by spec
  CHECK(l2.rfind("so(3):std,", 0) == 0);

  ordered_json arr = ordered_json::parse(emit_json(std::vector<CheckReport>{r, b}, false));
  CHECK(arr[0]["spec"] == "sl(2):std");

  CheckReport mismatch = run_check(parse_spec("so(3):std"), o, {{"dimRbar", std::int64_t{2}, "test"}});
  CHECK_FALSE(mismatch.ok());
  REQUIRE(mismatch.expectedDeltas.size() == 1);
  CHECK_FALSE(mismatch.expectedDeltas[0].ok);
}

TEST_CASE("resource aborts give partial reports") {
  CheckOptions o;
  o.solve.limits.max_entries = 1;
  o.solve.arithmetic = skb::linalg::Arithmetic::rational;
  CheckReport r = run_check(parse_spec("sl(4):std"), o, {});
  CHECK(r.abortedStage.has_value());
  CHECK_FALSE(r.ok());
  ordered_json j = ordered_json::parse(emit_json(r, false));
  CHECK(j["dimV"] == 4);
}

TEST_CASE("run_table collects rows") {
  CheckOptions o;
  auto rs = run_table(3, 4, o);
  std::vector<std::string> specs;
  for (const auto& r : rs) specs.push_back(r.spec);
  CHECK(specs == std::vector<std::string>{"gl(2):std", "gl(3):std", "gl(4):std", "sl(2)+z:adjoint", "sl(2):adjoint",
                                          "sl(3):std", "sl(4):std", "so(4)+z:std", "so(4):std", "sp(4)+z:std"});
  for (const auto& r : rs) {
    CAPTURE(r.spec);
    CHECK(r.ok());
  }
  CHECK(run_table(3, 4, o, 2).size() == 2);
  CHECK(run_table(1, 1, o).empty());
}

TEST_CASE("result cache") {
  const auto dir = fresh_dir("cache");
  ResultCache cache(dir, 0.0);
  CheckOptions o;
  o.cache = &cache;
  CheckReport first = run_check(parse_spec("sl(3):std"), o);
  CHECK(first.cacheHits.empty());
  CheckReport second = run_check(parse_spec("sl(3):std"), o);
  CHECK_FALSE(second.cacheHits.empty());
  CHECK(second.results == first.results);

  // always spot-check: recomputation must agree
  ResultCache checking(dir, 1.0);
  o.cache = &checking;
  CheckReport third = run_check(parse_spec("sl(3):std"), o);
  bool spot = false;
  for (const auto& d : third.expectedDeltas) {
    if (d.field == "cacheSpotCheck") {
      spot = true;
      CHECK(d.ok);
    }
  }
  CHECK(spot);

  auto v = cache.verify_all(CheckOptions{});
  CHECK(v.entries == 1);
  CHECK(v.verified == 1);

  // corrupt entries are skipped with a warning and recomputed
  const auto file = cache.file_for(ResultCache::key_text("sl(3):std", skb::linalg::Arithmetic::automatic));
  REQUIRE(std::filesystem::exists(file));
  {
    std::ofstream out(file);
    out << "{ not json";
  }
  CHECK_FALSE(cache.load(ResultCache::key_text("sl(3):std", skb::linalg::Arithmetic::automatic)));
  auto v2 = cache.verify_all(CheckOptions{});
  CHECK(v2.corrupt == 1);
  o.cache = &cache;
  CheckReport again = run_check(parse_spec("sl(3):std"), o);
  CHECK(again.cacheHits.empty());
  CHECK(again.results == first.results);

  // a tampered dimension is caught by verify
  auto file2 = cache.file_for(ResultCache::key_text("sl(3):std", skb::linalg::Arithmetic::automatic));
  ordered_json j;
  {
    std::ifstream in(file2);
    j = ordered_json::parse(in);
  }
  j["dimensions"]["dimRbar"] = 99;
  {
    std::ofstream out(file2);
    out << j.dump(2);
  }
  CHECK(cache.verify_all(CheckOptions{}).mismatched == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("digests") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  skb::linalg::Subspace a = skb::linalg::Subspace::span(3, {{{0, 2}, {2, 4}}});
  skb::linalg::Subspace b = skb::linalg::Subspace::span(3, {{{0, 1}, {2, 2}}});
  CHECK(basis_digest(a) == basis_digest(b));
  CHECK(basis_digest(a) == sha256_hex("dim=1\n0:1/1 2:2/1\n"));
}
