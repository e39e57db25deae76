#include "skewberger/registry/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace skb::registry {

namespace {

std::int64_t C(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string str(std::int64_t v) { return std::to_string(v); }

class Rows {
 public:
  Rows(int table, int row, Index max) : table_(table), row_(row), max_(max) {}

  /// False when the spec exceeds the dimension cap; nothing is added then.
  bool add(const std::string& text, std::vector<Expectation> expected = {}) {
    RepSpec s = parse_spec(text);
    if (s.dimV() > max_) return false;
    out_.push_back({s.canonical(), s.dimV(), table_, row_, std::move(expected)});
    return true;
  }
  bool fits(const std::string& text) const { return parse_spec(text).dimV() <= max_; }

  std::vector<Instance> take() { return std::move(out_); }

 private:
  int table_, row_;
  Index max_;
  std::vector<Instance> out_;
};

Expectation skew_berger(int row) { return {"isSkewBerger", true, "stated: table 1 row " + str(row)}; }
Expectation symplectic(const std::string& rows) { return {"formKind", std::string("skew"), "stated: symplectic rows " + rows}; }
Expectation orthogonal(const std::string& rows) { return {"formKind", std::string("symmetric"), "stated: orthogonal rows " + rows}; }
Expectation symmetric_alg() { return {"isSymmetric", true, "stated: rows 19-23 are symmetric"}; }

using Gen = std::function<void(Rows&)>;

RegistryEntry entry(int table, int row, std::string algebra, std::string module, std::string constraints,
                    Gen gen, std::string note = {}) {
  RegistryEntry e;
  e.table = table;
  e.row = row;
  e.algebra = std::move(algebra);
  e.module = std::move(module);
  e.constraints = std::move(constraints);
  e.note = std::move(note);
  e.instances = [table, row, gen = std::move(gen)](Index max) {
    Rows r(table, row, max);
    gen(r);
    return r.take();
  };
  return e;
}

// Simple algebras on themselves: sl(n), sp(2n), so(n) n >= 7, g2, f4, e7.
void adjoint_family(Rows& r, bool center, const std::function<std::vector<Expectation>()>& ex) {
  const std::string z = center ? "+z" : "";
  for (Index n = 2; r.add("sl(" + str(n) + ")" + z + ":adjoint", ex()); ++n) {
  }
  for (Index n = 4; r.add("sp(" + str(n) + ")" + z + ":adjoint", ex()); n += 2) {
  }
  for (Index n = 7; r.add("so(" + str(n) + ")" + z + ":adjoint", ex()); ++n) {
  }
  for (const char* g : {"g2", "f4", "e7"}) r.add(std::string(g) + z + ":adjoint", ex());
}

std::vector<RegistryEntry> make_table1() {
  std::vector<RegistryEntry> t;
  t.push_back(entry(1, 1, "z+sl(n)", "C^n", "n>=3", [](Rows& r) {
    for (Index n = 3; r.fits("sl(" + str(n) + "):std"); ++n) {
      r.add("sl(" + str(n) + "):std", {skew_berger(1)});
      r.add("gl(" + str(n) + "):std", {skew_berger(1)});
    }
  }));
  t.push_back(entry(1, 2, "z+sl(n)+sl(m)", "C^n⊗C^m", "n,m>=2, n!=m", [](Rows& r) {
    for (Index n = 2; r.fits("sl(" + str(n) + ")*sl(" + str(n + 1) + "):tensor"); ++n) {
      for (Index m = n + 1;; ++m) {
        const std::string a = "sl(" + str(n) + ")*sl(" + str(m) + ")";
        const std::int64_t d = n * m;
        if (!r.add(a + ":tensor", {skew_berger(2), {"dimRbar", C(d, 2), "derived: C(nm,2) from R ≅ Λ²V*"}})) break;
        r.add(a + "+z:tensor", {skew_berger(2), {"dimRbar", d * d, "derived: (nm)^2 from R ≅ V*⊗V*"}});
      }
    }
  }));
  t.push_back(entry(1, 3, "sl(n)+sl(n)", "C^n⊗C^n", "n>=3", [](Rows& r) {
    for (Index n = 3; r.add("sl(" + str(n) + ")*sl(" + str(n) + "):tensor", {skew_berger(3)}); ++n) {
    }
  }));
  t.push_back(entry(1, 4, "sl(n)", "Λ²C^n", "n>=6", [](Rows& r) {
    for (Index n = 6; r.add("sl(" + str(n) + "):wedge(2)", {skew_berger(4)}); ++n) {
    }
  }, "n=3 is (C^3)*, n=4 is so(6) on C^6; the n=5 case is row 5"));
  t.push_back(entry(1, 5, "z+sl(5)", "Λ²C^5", "", [](Rows& r) {
    r.add("sl(5):wedge(2)", {skew_berger(5)});
    r.add("gl(5):wedge(2)", {skew_berger(5)});
  }));
  t.push_back(entry(1, 6, "sl(n)", "⊙²C^n", "n>=3", [](Rows& r) {
    for (Index n = 3; r.add("sl(" + str(n) + "):sym(2)", {skew_berger(6)}); ++n) {
    }
  }, "n=2 is so(3) on C^3, row 15"));
  t.push_back(entry(1, 7, "z+sp(2n)", "C^2n", "n>=2", [](Rows& r) {
    for (Index n = 4; r.add("sp(" + str(n) + "):std", {skew_berger(7), symplectic("7 (z=0), 11-14, 19-22")}); n += 2) {
      r.add("sp(" + str(n) + ")+z:std", {skew_berger(7)});
    }
  }));
  t.push_back(entry(1, 8, "g simple", "g", "", [](Rows& r) {
    adjoint_family(r, false, [] { return std::vector<Expectation>{skew_berger(8), orthogonal("8, 15-18")}; });
  }, "instantiated for sl(n), sp(2n), so(n) n>=7, g2, f4, e7"));
  t.push_back(entry(1, 9, "z+spin(10)", "Δ+_10 = C^16", "", [](Rows& r) {
    r.add("so(10):spin+", {skew_berger(9), {"dimRbar", std::int64_t{120}, "stated: dim R(spin(10)) = 120"}});
    r.add("so(10)+z:spin+", {skew_berger(9), {"dimRbar", std::int64_t{176}, "stated: dim R(spin(10)+C) = 176"}});
  }));
  t.push_back(entry(1, 10, "f6", "C^27", "", [](Rows&) {},
                    "listed as f6 on C^27, presumably e6; no construction available, never instantiated"));
  t.push_back(entry(1, 11, "sl(2)+so(n)", "C^2⊗C^n", "n>=3", [](Rows& r) {
    for (Index n = 3; r.add("sl(2)*so(" + str(n) + "):tensor", {skew_berger(11), symplectic("7 (z=0), 11-14, 19-22")}); ++n) {
    }
  }));
  t.push_back(entry(1, 12, "spin(12)", "Δ+_12 = C^32", "", [](Rows& r) {
    r.add("so(12):spin+", {skew_berger(12), symplectic("7 (z=0), 11-14, 19-22")});
  }));
  t.push_back(entry(1, 13, "sl(6)", "Λ³C^6 = C^20", "", [](Rows& r) {
    r.add("sl(6):wedge(3)", {skew_berger(13), symplectic("7 (z=0), 11-14, 19-22"),
                             {"dimRbar", std::int64_t{35}, "stated: dim R(sl(6) on Λ³C^6) = 35"}});
  }));
  t.push_back(entry(1, 14, "sp(6)", "V_π3 = C^14", "", [](Rows& r) {
    r.add("sp(6):wedge3_0", {skew_berger(14), symplectic("7 (z=0), 11-14, 19-22")});
  }));
  t.push_back(entry(1, 15, "so(n)", "C^n", "n>=3", [](Rows& r) {
    for (Index n = 3; r.add("so(" + str(n) + "):std", {skew_berger(15), orthogonal("8, 15-18")}); ++n) {
    }
  }));
  t.push_back(entry(1, 16, "g2", "C^7", "", [](Rows& r) {
    r.add("g2:std", {skew_berger(16), orthogonal("8, 15-18")});
  }));
  t.push_back(entry(1, 17, "spin(7)", "C^8", "", [](Rows& r) {
    r.add("so(7):spin", {skew_berger(17), orthogonal("8, 15-18"),
                         {"dimRbar", std::int64_t{126}, "stated: dim R(spin(7)) = 126"}});
  }));
  t.push_back(entry(1, 18, "sl(2)+sp(2n)", "C^2⊗C^2n", "n>=2", [](Rows& r) {
    for (Index n = 4; r.add("sl(2)*sp(" + str(n) + "):tensor", {skew_berger(18), orthogonal("8, 15-18")}); n += 2) {
    }
  }));
  t.push_back(entry(1, 19, "sl(2)", "C^2", "", [](Rows& r) {
    r.add("sl(2):std", {skew_berger(19), symplectic("7 (z=0), 11-14, 19-22"), symmetric_alg()});
  }));
  t.push_back(entry(1, 20, "so(n)+sp(2m)", "C^n⊗C^2m", "n>=3, m>=2", [](Rows& r) {
    for (Index n = 3; r.fits("so(" + str(n) + ")*sp(4):tensor"); ++n) {
      for (Index m = 4; r.add("so(" + str(n) + ")*sp(" + str(m) + "):tensor",
                              {skew_berger(20), symplectic("7 (z=0), 11-14, 19-22"), symmetric_alg(),
                               {"dimRbar", std::int64_t{1}, "stated: R(so(n)+sp(2m)) is one-dimensional"}});
           m += 2) {
      }
    }
  }));
  t.push_back(entry(1, 21, "g2+sl(2)", "C^7⊗C^2", "", [](Rows& r) {
    r.add("g2*sl(2):tensor", {skew_berger(21), symplectic("7 (z=0), 11-14, 19-22"), symmetric_alg()});
  }));
  t.push_back(entry(1, 22, "spin(7)+sl(2)", "C^8⊗C^2", "", [](Rows& r) {
    r.add("spin(7)*sl(2):tensor", {skew_berger(22), symplectic("7 (z=0), 11-14, 19-22"), symmetric_alg()});
  }));
  t.push_back(entry(1, 23, "so(n)+sl(m)", "C^n⊗C^m", "n,m>=3", [](Rows& r) {
    for (Index n = 3; r.fits("so(" + str(n) + ")*sl(3):tensor"); ++n) {
      for (Index m = 3;; ++m) {
        const std::string a = "so(" + str(n) + ")*sl(" + str(m) + ")";
        const Expectation dim{"dimRbar", C(m, 2), "derived: C(m,2) from R ≅ Λ²(C^m)*"};
        if (!r.add(a + ":tensor", {skew_berger(23), symmetric_alg(), dim})) break;
        r.add(a + "+z:tensor", {{"dimRbar", C(m, 2), "derived: C(m,2), R(g+C) = R(g) ≅ Λ²(C^m)*"}});
      }
    }
  }, "the +z variant carries only the stated dimension"));
  t.push_back(entry(1, 24, "sp(2n)+sl(m)", "C^2n⊗C^m", "n>=2, m>=3", [](Rows& r) {
    for (Index n = 4; r.fits("sp(" + str(n) + ")*sl(3):tensor"); n += 2) {
      for (Index m = 3;; ++m) {
        const std::string a = "sp(" + str(n) + ")*sl(" + str(m) + ")";
        const std::int64_t d = C(n + 1, 2);
        if (!r.add(a + ":tensor", {skew_berger(24), {"dimRbar", d, "derived: C(2n+1,2) from R ≅ ⊙²(C^2n)* as stated"}})) break;
        r.add(a + "+z:tensor", {{"dimRbar", d, "derived: C(2n+1,2), R(g+C) = R(g) ≅ ⊙²(C^2n)* as stated"}});
      }
    }
  }, "the stated isomorphism names the symplectic factor; computed dimensions follow ⊙²(C^m)*"));
  return t;
}

std::vector<Expectation> prolong(int row, std::int64_t g1, const std::string& g1src, std::int64_t g2,
                                 const std::string& g2src) {
  const std::string r = "stated: table 3 row " + str(row) + ", ";
  return {{"dimProlong1", g1, r + g1src}, {"dimProlong2", g2, r + g2src}};
}

std::vector<Expectation> with_h(std::vector<Expectation> e, int row, std::int64_t h, const std::string& src) {
  e.push_back({"dimH22", h, "stated: table 3 row " + str(row) + ", " + src});
  return e;
}

std::vector<RegistryEntry> make_table3() {
  std::vector<RegistryEntry> t;
  t.push_back(entry(3, 1, "sl(n)", "C^n", "n>=3", [](Rows& r) {
    for (Index n = 3;; ++n) {
      auto e = prolong(1, n * C(n, 2) - n, "(C^n⊗Λ²(C^n)*)_0, derived n*C(n,2)-n", n * C(n, 3) - C(n, 2),
                       "(C^n⊗Λ³(C^n)*)_0, derived n*C(n,3)-C(n,2)");
      if (!r.add("sl(" + str(n) + "):std", with_h(e, 1, 0, "H = 0"))) break;
    }
  }));
  t.push_back(entry(3, 2, "gl(n)", "C^n", "n>=2", [](Rows& r) {
    for (Index n = 2;; ++n) {
      auto e = prolong(2, n * C(n, 2), "C^n⊗Λ²(C^n)*, derived n*C(n,2)", n * C(n, 3), "C^n⊗Λ³(C^n)*, derived n*C(n,3)");
      if (!r.add("gl(" + str(n) + "):std", with_h(e, 2, 0, "H = 0"))) break;
    }
  }));
  for (int row : {3, 4}) {
    const std::string alg = row == 3 ? "sl" : "gl";
    t.push_back(entry(3, row, alg + "(n)", "⊙²C^n", "n>=3", [row, alg](Rows& r) {
      for (Index n = 3;; ++n) {
        auto e = prolong(row, C(n, 2), "Λ²(C^n)*, derived C(n,2)", 0, "0");
        if (!r.add(alg + "(" + str(n) + "):sym(2)", with_h(e, row, 0, "H = 0"))) break;
      }
    }));
  }
  for (int row : {5, 6}) {
    const std::string alg = row == 5 ? "sl" : "gl";
    t.push_back(entry(3, row, alg + "(n)", "Λ²C^n", "n>=5", [row, alg](Rows& r) {
      for (Index n = 5;; ++n) {
        auto e = prolong(row, C(n + 1, 2), "⊙²(C^n)*, derived C(n+1,2)", 0, "0");
        const bool five = row == 6 && n == 5;
        e = with_h(e, row, five ? 5 : 0, five ? "H = C^5 at n=5" : "H = 0");
        if (!r.add(alg + "(" + str(n) + "):wedge(2)", e)) break;
      }
    }, "n=3 is (C^3)*, n=4 is so(6) on C^6"));
  }
  t.push_back(entry(3, 7, "sl(n)+sl(m)+C", "C^n⊗C^m", "n,m>=2, n!=m", [](Rows& r) {
    for (Index n = 2; r.fits("sl(" + str(n) + ")*sl(" + str(n + 1) + ")+z:tensor"); ++n) {
      for (Index m = n + 1;; ++m) {
        auto e = prolong(7, n * m, "V*, derived nm", 0, "0");
        if (!r.add("sl(" + str(n) + ")*sl(" + str(m) + ")+z:tensor", with_h(e, 7, 0, "H = 0"))) break;
      }
    }
  }));
  for (int row : {8, 9}) {
    t.push_back(entry(3, row, row == 8 ? "sl(n)+sl(n)" : "sl(n)+sl(n)+C", "C^n⊗C^n", "n>=3", [row](Rows& r) {
      for (Index n = 3;; ++n) {
        auto e = prolong(row, n * n, "V*, derived n^2", 0, "0");
        const std::string s = "sl(" + str(n) + ")*sl(" + str(n) + ")" + (row == 9 ? "+z" : "") + ":tensor";
        if (!r.add(s, with_h(e, row, 0, "H = 0"))) break;
      }
    }));
  }
  for (int row : {10, 11}) {
    t.push_back(entry(3, row, row == 10 ? "so(n)" : "so(n)+C", "C^n", "n>=4", [row](Rows& r) {
      for (Index n = 4;; ++n) {
        auto e = prolong(row, C(n, 3), "Λ³V*, derived C(n,3)", C(n, 4), "Λ⁴V*, derived C(n,4)");
        if (!r.add("so(" + str(n) + ")" + (row == 11 ? "+z" : "") + ":std", with_h(e, row, 0, "H = 0"))) break;
      }
    }));
  }
  t.push_back(entry(3, 12, "sp(2n)+C", "C^2n", "n>=2", [](Rows& r) {
    for (Index n = 4; r.add("sp(" + str(n) + ")+z:std", prolong(12, n, "V*, derived 2n", 0, "0")); n += 2) {
    }
  }, "H^{2,2} left blank in the table; no expectation"));
  t.push_back(entry(3, 13, "g simple", "g", "", [](Rows& r) {
    adjoint_family(r, false, [] { return prolong(13, 1, "C id", 0, "0"); });
  }, "H^{2,2} marked unknown; no expectation"));
  t.push_back(entry(3, 14, "g+C, g simple", "g", "", [](Rows& r) {
    adjoint_family(r, true, [] { return prolong(14, 1, "C id", 0, "0"); });
  }, "H^{2,2} named but not given; no expectation"));
  return t;
}

}  // namespace

const std::vector<RegistryEntry>& table_entries(int table) {
  static const std::vector<RegistryEntry> t1 = make_table1();
  static const std::vector<RegistryEntry> t3 = make_table3();
  if (table == 1) return t1;
  if (table == 3) return t3;
  throw std::invalid_argument("no registry table " + std::to_string(table) + " (use 1 or 3)");
}

std::vector<Instance> instantiate(int table, Index max_dimV) {
  std::vector<Instance> out;
  for (const auto& e : table_entries(table)) {
    for (auto& i : e.instances(max_dimV)) out.push_back(std::move(i));
  }
  std::stable_sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) { return a.spec < b.spec; });
  return out;
}

std::vector<Expectation> expectations_for(const std::string& canonical_spec) {
  const Index d = parse_spec(canonical_spec).dimV();
  std::vector<Expectation> out;
  for (int table : {1, 3}) {
    for (const auto& i : instantiate(table, d)) {
      if (i.spec != canonical_spec) continue;
      out.insert(out.end(), i.expected.begin(), i.expected.end());
    }
  }
  return out;
}

std::string to_string(const ExpectedValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

}  // namespace skb::registry
