#include "skewberger/registry/spec.hpp"

#include <algorithm>
#include <cctype>

namespace skb::registry {

namespace {

const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::sl: return "sl";
    case FactorKind::gl: return "gl";
    case FactorKind::so: return "so";
    case FactorKind::sp: return "sp";
    case FactorKind::spin: return "spin";
    case FactorKind::g2: return "g2";
    case FactorKind::f4: return "f4";
    case FactorKind::e7: return "e7";
  }
  return "?";
}

bool parametrized(FactorKind k) { return k != FactorKind::g2 && k != FactorKind::f4 && k != FactorKind::e7; }

std::string factor_string(const Factor& f) {
  std::string s = kind_name(f.kind);
  if (parametrized(f.kind)) s += "(" + std::to_string(f.n) + ")";
  return s;
}

Index binom(Index n, Index k) {
  if (k > n) return 0;
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Index spinor_dim(Index n) { return Index{1} << (n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1); }

Index std_dim(const Factor& f) {
  switch (f.kind) {
    case FactorKind::spin: return spinor_dim(f.n);
    case FactorKind::g2: return 7;
    case FactorKind::f4: return 26;
    case FactorKind::e7: return 56;
    default: return f.n;
  }
}

Index algebra_dim(const Factor& f) {
  switch (f.kind) {
    case FactorKind::sl: return f.n * f.n - 1;
    case FactorKind::gl: return f.n * f.n;
    case FactorKind::so:
    case FactorKind::spin: return f.n * (f.n - 1) / 2;
    case FactorKind::sp: return f.n * (f.n + 1) / 2;
    case FactorKind::g2: return 14;
    case FactorKind::f4: return 52;
    case FactorKind::e7: return 133;
  }
  return 0;
}

lie::LieRep build_std(const Factor& f) {
  switch (f.kind) {
    case FactorKind::sl: return lie::build_classical(lie::Family::sl, f.n);
    case FactorKind::gl: return lie::build_classical(lie::Family::gl, f.n);
    case FactorKind::so: return lie::build_classical(lie::Family::so, f.n);
    case FactorKind::sp: return lie::build_classical(lie::Family::sp, f.n);
    case FactorKind::spin:
      return lie::build_spin(f.n, f.n % 2 == 1 ? lie::Chirality::full : lie::Chirality::plus);
    case FactorKind::g2: return lie::build_g2();
    case FactorKind::f4: return lie::build_f4_model();
    case FactorKind::e7: return lie::build_e7_model();
  }
  throw std::logic_error("unknown factor");
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RepSpec run() {
    RepSpec spec;
    spec.factors.push_back(factor());
    while (peek('*')) {
      ++pos_;
      spec.factors.push_back(factor());
    }
    if (peek('+')) {
      ++pos_;
      expect("z");
      spec.center = true;
    }
    expect(":");
    const std::size_t rep_pos = pos_;
    std::string word = ident();
    if (word == "std") {
      spec.rep = RepKind::std_rep;
    } else if (word == "adjoint") {
      spec.rep = RepKind::adjoint;
    } else if (word == "sym" || word == "wedge") {
      spec.rep = word == "sym" ? RepKind::sym : RepKind::wedge;
      spec.k = paren_number();
    } else if (word == "spin") {
      spec.rep = RepKind::spin;
      if (peek('+')) {
        ++pos_;
        spec.rep = RepKind::spin_plus;
      } else if (peek('-')) {
        ++pos_;
        spec.rep = RepKind::spin_minus;
      }
    } else if (word == "tensor") {
      spec.rep = RepKind::tensor;
    } else if (word == "sym2_0") {
      spec.rep = RepKind::sym2_0;
    } else if (word == "wedge3_0") {
      spec.rep = RepKind::wedge3_0;
    } else {
      throw SpecSyntaxError("unknown representation '" + word + "'", rep_pos);
    }
    if (pos_ != s_.size()) throw SpecSyntaxError("trailing characters", pos_);
    return spec;
  }

 private:
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(const std::string& t) {
    if (s_.compare(pos_, t.size(), t) != 0) throw SpecSyntaxError("expected '" + t + "'", pos_);
    pos_ += t.size();
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) throw SpecSyntaxError("expected a name", start);
    return s_.substr(start, pos_ - start);
  }

  Index paren_number() {
    expect("(");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) throw SpecSyntaxError("expected a number", start);
    Index v = static_cast<Index>(std::stoul(s_.substr(start, pos_ - start)));
    expect(")");
    return v;
  }

  Factor factor() {
    const std::size_t start = pos_;
    std::string word = ident();
    static const std::pair<const char*, FactorKind> table[] = {
        {"sl", FactorKind::sl}, {"gl", FactorKind::gl},     {"so", FactorKind::so}, {"sp", FactorKind::sp},
        {"spin", FactorKind::spin}, {"g2", FactorKind::g2}, {"f4", FactorKind::f4}, {"e7", FactorKind::e7}};
    for (const auto& [name, kind] : table) {
      if (word != name) continue;
      Factor f{kind, 0};
      if (parametrized(kind)) f.n = paren_number();
      return f;
    }
    throw SpecSyntaxError("unknown algebra '" + word + "'", start);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void check_factor(const Factor& f) {
  const std::string name = factor_string(f);
  switch (f.kind) {
    case FactorKind::sl:
    case FactorKind::gl:
      if (f.n < 2) throw SpecSemanticError(name + ": n must be at least 2");
      break;
    case FactorKind::so:
      if (f.n < 3) throw SpecSemanticError(name + ": n must be at least 3");
      break;
    case FactorKind::spin:
      if (f.n < 3 || f.n > 16) throw SpecSemanticError(name + ": n must lie in [3, 16]");
      if (f.n % 2 == 0 && f.n < 6) throw SpecSemanticError(name + ": even n must be at least 6");
      break;
    case FactorKind::sp:
      if (f.n < 2 || f.n % 2 != 0) throw SpecSemanticError(name + ": odd symplectic dimension");
      break;
    default:
      break;
  }
}

bool is_classical(FactorKind k) {
  return k == FactorKind::sl || k == FactorKind::gl || k == FactorKind::so || k == FactorKind::sp;
}

void validate(RepSpec& s) {
  for (const auto& f : s.factors) check_factor(f);
  const bool single = s.factors.size() == 1;
  const Factor& f0 = s.factors.front();
  if (s.rep == RepKind::tensor) {
    if (single) throw SpecSemanticError("tensor needs at least two factors");
  } else if (!single) {
    throw SpecSemanticError("products of algebras only act through 'tensor'");
  }
  if (single && s.center && f0.kind == FactorKind::gl) throw SpecSemanticError("gl(n) already contains the center");
  switch (s.rep) {
    case RepKind::adjoint:
      if (f0.kind == FactorKind::gl) throw SpecSemanticError("adjoint needs a semisimple algebra; use sl(n)+z");
      if (f0.kind == FactorKind::spin) throw SpecSemanticError("use so(n) for the adjoint representation");
      break;
    case RepKind::sym:
    case RepKind::wedge:
      if (!is_classical(f0.kind)) throw SpecSemanticError("powers need a classical factor");
      if (s.k < 1) throw SpecSemanticError("power must be at least 1");
      if (s.rep == RepKind::wedge && s.k > f0.n) throw SpecSemanticError("wedge power exceeds the dimension");
      break;
    case RepKind::spin:
      if (f0.kind != FactorKind::so || f0.n % 2 == 0) throw SpecSemanticError("spin needs so(n) with n odd");
      break;
    case RepKind::spin_plus:
    case RepKind::spin_minus:
      if (f0.kind != FactorKind::so || f0.n % 2 == 1) throw SpecSemanticError("half-spin needs so(n) with n even");
      if (f0.n < 6) throw SpecSemanticError("half-spin needs n >= 6");
      break;
    case RepKind::sym2_0:
      if (f0.kind != FactorKind::so) throw SpecSemanticError("sym2_0 needs so(n)");
      break;
    case RepKind::wedge3_0:
      if (f0.kind != FactorKind::sp || f0.n < 6) throw SpecSemanticError("wedge3_0 needs sp(n) with n >= 6");
      break;
    default:
      break;
  }
  // normal form
  if (single && f0.kind == FactorKind::spin) {
    if (s.rep != RepKind::std_rep) throw SpecSemanticError("spin(n) only acts through std or tensor");
    s.rep = f0.n % 2 == 1 ? RepKind::spin : RepKind::spin_plus;
    s.factors.front().kind = FactorKind::so;
  }
  if (single && s.center && f0.kind == FactorKind::sl && s.rep != RepKind::adjoint) {
    s.factors.front().kind = FactorKind::gl;
    s.center = false;
  }
  if (!single) {
    for (auto& f : s.factors) {
      if (f.kind == FactorKind::gl) {
        f.kind = FactorKind::sl;
        s.center = true;
      }
    }
    std::sort(s.factors.begin(), s.factors.end(), [](const Factor& a, const Factor& b) {
      return a.kind != b.kind ? a.kind < b.kind : a.n < b.n;
    });
  }
}

}  // namespace

std::string RepSpec::canonical() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += factor_string(factors[i]);
  }
  if (center) s += "+z";
  s += ":";
  switch (rep) {
    case RepKind::std_rep: s += "std"; break;
    case RepKind::adjoint: s += "adjoint"; break;
    case RepKind::sym: s += "sym(" + std::to_string(k) + ")"; break;
    case RepKind::wedge: s += "wedge(" + std::to_string(k) + ")"; break;
    case RepKind::spin: s += "spin"; break;
    case RepKind::spin_plus: s += "spin+"; break;
    case RepKind::spin_minus: s += "spin-"; break;
    case RepKind::tensor: s += "tensor"; break;
    case RepKind::sym2_0: s += "sym2_0"; break;
    case RepKind::wedge3_0: s += "wedge3_0"; break;
  }
  return s;
}

Index RepSpec::dimV() const {
  const Factor& f = factors.front();
  switch (rep) {
    case RepKind::std_rep: return std_dim(f);
    case RepKind::adjoint: return algebra_dim(f);
    case RepKind::sym: return binom(f.n + k - 1, k);
    case RepKind::wedge: return binom(f.n, k);
    case RepKind::spin:
    case RepKind::spin_plus:
    case RepKind::spin_minus: return spinor_dim(f.n);
    case RepKind::tensor: {
      Index d = 1;
      for (const auto& g : factors) d *= std_dim(g);
      return d;
    }
    case RepKind::sym2_0: return f.n * (f.n + 1) / 2 - 1;
    case RepKind::wedge3_0: return binom(f.n, 3) - f.n;
  }
  return 0;
}

lie::LieRep RepSpec::build() const {
  const Factor& f = factors.front();
  lie::LieRep a;
  switch (rep) {
    case RepKind::std_rep: a = build_std(f); break;
    case RepKind::adjoint: a = lie::adjoint_rep(build_std(f)); break;
    case RepKind::sym: a = lie::power_rep(build_std(f), lie::PowerKind::sym, k); break;
    case RepKind::wedge: a = lie::power_rep(build_std(f), lie::PowerKind::wedge, k); break;
    case RepKind::spin: a = lie::build_spin(f.n, lie::Chirality::full); break;
    case RepKind::spin_plus: a = lie::build_spin(f.n, lie::Chirality::plus); break;
    case RepKind::spin_minus: a = lie::build_spin(f.n, lie::Chirality::minus); break;
    case RepKind::tensor: {
      a = build_std(factors.front());
      for (std::size_t i = 1; i < factors.size(); ++i) a = lie::tensor_rep(a, build_std(factors[i]));
      break;
    }
    case RepKind::sym2_0: a = lie::traceless_sym2(build_std(f)); break;
    case RepKind::wedge3_0: a = lie::primitive_wedge3(build_std(f)); break;
  }
  if (center && !a.has_center()) a = lie::add_center(a);
  return a.renamed(canonical());
}

std::optional<std::pair<lie::Family, Index>> RepSpec::single_classical() const {
  if (factors.size() != 1) return std::nullopt;
  const Factor& f = factors.front();
  switch (f.kind) {
    case FactorKind::sl: return std::make_pair(lie::Family::sl, f.n);
    case FactorKind::gl: return std::make_pair(lie::Family::gl, f.n);
    case FactorKind::so: return std::make_pair(lie::Family::so, f.n);
    case FactorKind::sp: return std::make_pair(lie::Family::sp, f.n);
    default: return std::nullopt;
  }
}

RepSpec parse_spec(const std::string& text) {
  RepSpec s = Parser(text).run();
  validate(s);
  return s;
}

std::optional<std::string> preferred_presentation(const RepSpec& spec) {
  if (spec.factors.size() != 1) return std::nullopt;
  const Factor& f = spec.factors.front();
  const bool slgl = f.kind == FactorKind::sl || f.kind == FactorKind::gl;
  const std::string z = f.kind == FactorKind::gl ? "+z" : "";
  if (slgl && spec.rep == RepKind::wedge && f.n == 4 && spec.k == 2) return "so(6)" + z + ":std";
  if (slgl && spec.rep == RepKind::wedge && spec.k == f.n - 1) return factor_string(f) + ":std";
  if (slgl && spec.rep == RepKind::sym && f.n == 2 && spec.k == 2) return "so(3)" + z + ":std";
  return std::nullopt;
}

}  // namespace skb::registry
