#include "skewberger/weights/weights.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace skb::weights {

namespace {

using IntVec = std::vector<std::int64_t>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

bool is_zero(const WeightVec& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

WeightVec add(const WeightVec& x, const WeightVec& y) {
  WeightVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

WeightVec sub(const WeightVec& x, const WeightVec& y) {
  WeightVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("trace form is degenerate on the Cartan subalgebra");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

linalg::Integer lcm_den(const std::vector<const WeightVec*>& vs) {
  linalg::Integer l = 1;
  for (const auto* v : vs) {
    for (const auto& x : *v) {
      linalg::Integer d = x.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
  }
  return l;
}

// Weyl group action through simple reflections on integer-scaled coordinates.
struct IntWeyl {
  std::int64_t scale = 1;
  std::vector<IntVec> alpha;  // scale * α_i
  std::vector<IntVec> coroot;  // u_i with <λ, α_i^∨> = u_i·(scale λ) / den_i
  std::vector<std::int64_t> den;

  IntWeyl(const RootDatum& rd, const std::vector<const WeightVec*>& extra) {
    std::vector<const WeightVec*> all = extra;
    for (const auto& s : rd.simple) all.push_back(&s);
    scale = lcm_den(all).get_si();
    const std::size_t r = rd.form.size();
    for (const auto& s : rd.simple) {
      IntVec a(r);
      for (std::size_t k = 0; k < r; ++k) a[k] = Rational(s[k] * scale).get_num().get_si();
      alpha.push_back(std::move(a));
      // c = 2 F α / (α, α) as a functional on coordinates
      WeightVec c(r, 0);
      Rational nn = rd.inner(s, s);
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = 0; l < r; ++l) c[k] += rd.form[k][l] * s[l];
        c[k] = 2 * c[k] / nn;
      }
      std::int64_t d = lcm_den({&c}).get_si();
      IntVec u(r);
      for (std::size_t k = 0; k < r; ++k) u[k] = Rational(c[k] * d).get_num().get_si();
      coroot.push_back(std::move(u));
      den.push_back(d * scale);
    }
  }

  IntVec to_int(const WeightVec& w) const {
    IntVec out(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) out[k] = Rational(w[k] * scale).get_num().get_si();
    return out;
  }

  WeightVec to_rational(const IntVec& w, std::size_t off, std::size_t r) const {
    WeightVec out(r);
    for (std::size_t k = 0; k < r; ++k) {
      out[k] = Rational(w[off + k], scale);
      out[k].canonicalize();
    }
    return out;
  }

  // reflect each r-block of a concatenated vector in simple root i
  IntVec reflect(const IntVec& v, std::size_t i, std::size_t r) const {
    IntVec out = v;
    for (std::size_t off = 0; off < v.size(); off += r) {
      std::int64_t dot = 0;
      for (std::size_t k = 0; k < r; ++k) dot += coroot[i][k] * v[off + k];
      if (dot % den[i] != 0) throw std::logic_error("non-integral coroot pairing");
      std::int64_t m = dot / den[i];
      for (std::size_t k = 0; k < r; ++k) out[off + k] -= m * alpha[i][k];
    }
    return out;
  }
};

IntVec concat(const IntWeyl& w, const WeightVec& a, const WeightVec& b, const WeightVec& c) {
  IntVec out = w.to_int(a);
  for (const auto& v : {b, c}) {
    IntVec x = w.to_int(v);
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

// BFS over the orbit of the starts; returns the visited set or nullopt past the budget.
std::optional<std::unordered_set<IntVec, IntVecHash>> orbit(const IntWeyl& w, std::vector<IntVec> starts,
                                                            std::size_t r, std::size_t budget,
                                                            std::size_t& visited) {
  std::unordered_set<IntVec, IntVecHash> seen;
  std::vector<IntVec> queue;
  for (auto& s : starts) {
    if (seen.insert(s).second) queue.push_back(std::move(s));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < w.alpha.size(); ++i) {
      IntVec nx = w.reflect(queue[head], i, r);
      if (seen.insert(nx).second) {
        if (++visited > budget) return std::nullopt;
        queue.push_back(std::move(nx));
      }
    }
  }
  return seen;
}

IntVec swapped(const IntVec& v, std::size_t r) {
  IntVec out = v;
  std::swap_ranges(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r), out.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

}  // namespace

std::vector<Weight> weights_of(const LieRep& a) {
  for (Index h : a.cartan()) {
    if (!a.generator(h).is_diagonal()) throw lie::ConstructionError(a.name() + ": Cartan generator is not diagonal");
  }
  std::vector<Weight> out;
  std::map<WeightVec, std::size_t> pos;
  for (Index v = 0; v < a.dimV(); ++v) {
    WeightVec w = a.weight_of_basis(v);
    auto [it, fresh] = pos.try_emplace(w, out.size());
    if (fresh) out.push_back({std::move(w), 0});
    ++out[it->second].multiplicity;
  }
  return out;
}

Rational RootDatum::inner(const WeightVec& x, const WeightVec& y) const {
  Rational s = 0;
  for (std::size_t k = 0; k < form.size(); ++k) {
    for (std::size_t l = 0; l < form.size(); ++l) s += x[k] * form[k][l] * y[l];
  }
  return s;
}

Rational RootDatum::pairing(const WeightVec& lambda, const WeightVec& alpha) const {
  return 2 * inner(lambda, alpha) / inner(alpha, alpha);
}

WeightVec RootDatum::reflect(const WeightVec& lambda, const WeightVec& alpha) const {
  Rational m = pairing(lambda, alpha);
  WeightVec out = lambda;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= m * alpha[k];
  return out;
}

bool RootDatum::is_root(const WeightVec& w) const { return std::binary_search(roots.begin(), roots.end(), w); }

RootDatum root_datum(const LieRep& a, const std::function<WeightVec(const WeightVec&)>& order_key) {
  auto gw = a.generator_weights();
  if (!gw) throw std::invalid_argument(a.name() + ": generators are not ad-weight vectors");
  RootDatum rd;
  const std::size_t r = a.cartan().size();
  std::map<WeightVec, Index> gen_of;
  for (Index g = 0; g < a.dim(); ++g) {
    if (a.center_index() == g || is_zero((*gw)[g])) continue;
    gen_of.try_emplace((*gw)[g], g);
  }
  for (const auto& [w, g] : gen_of) {
    rd.roots.push_back(w);
    rd.root_generator.push_back(g);
  }
  auto key = [&](const WeightVec& w) { return order_key ? order_key(w) : w; };
  for (const auto& w : rd.roots) {
    WeightVec k = key(w);
    auto nz = std::find_if(k.begin(), k.end(), [](const Rational& x) { return x != 0; });
    if (nz != k.end() && *nz > 0) rd.positive.push_back(w);
  }
  std::set<WeightVec> sums;
  for (const auto& x : rd.positive) {
    for (const auto& y : rd.positive) sums.insert(add(x, y));
  }
  for (const auto& x : rd.positive) {
    if (!sums.count(x)) rd.simple.push_back(x);
  }
  auto argmax = [](const WeightVec& w) {
    return static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
  };
  std::sort(rd.simple.begin(), rd.simple.end(), [&](const WeightVec& x, const WeightVec& y) {
    WeightVec kx = key(x), ky = key(y);
    auto ax = argmax(kx), ay = argmax(ky);
    return ax != ay ? ax < ay : kx < ky;
  });
  std::vector<std::vector<Rational>> k(r, std::vector<Rational>(r, 0));
  for (Index v = 0; v < a.dimV(); ++v) {
    WeightVec w = a.weight_of_basis(v);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) k[i][j] += w[i] * w[j];
    }
  }
  rd.form = r == 0 ? k : invert(std::move(k));
  return rd;
}

PhiAlpha phi_alpha(const LieRep& a, const RootDatum& rd, const WeightVec& alpha) {
  auto it = std::lower_bound(rd.roots.begin(), rd.roots.end(), alpha);
  if (it == rd.roots.end() || *it != alpha) throw std::invalid_argument("phi_alpha: not a root");
  const Index gen = rd.root_generator[static_cast<std::size_t>(it - rd.roots.begin())];
  std::set<WeightVec> phi;
  for (const auto& w : weights_of(a)) phi.insert(w.coords);
  PhiAlpha res;
  for (const auto& w : phi) {
    if (phi.count(add(w, alpha))) res.intersection.push_back(add(w, alpha));
  }
  std::sort(res.intersection.begin(), res.intersection.end());
  std::set<WeightVec> img;
  auto cols = a.generator(gen).columns();
  for (Index v = 0; v < a.dimV(); ++v) {
    if (!cols[v].empty()) img.insert(add(a.weight_of_basis(v), alpha));
  }
  res.image.assign(img.begin(), img.end());
  res.agree = res.image == res.intersection;
  return res;
}

bool is_extremal(const LieRep& a, const RootDatum& rd, const WeightVec& lambda) {
  bool found = false;
  Rational best = 0;
  for (const auto& w : weights_of(a)) {
    if (w.coords == lambda) found = true;
    Rational n = rd.inner(w.coords, w.coords);
    if (n > best) best = n;
  }
  if (!found) throw std::invalid_argument("is_extremal: not a weight of the representation");
  return rd.inner(lambda, lambda) == best;
}

std::optional<SpanningTriple> canonical_triple(const RootDatum& rd, const SpanningTriple& t, std::size_t budget) {
  IntWeyl w(rd, {&t.lambda0, &t.lambda1, &t.alpha});
  const std::size_t r = rd.form.size();
  IntVec start = concat(w, t.lambda0, t.lambda1, t.alpha);
  std::size_t visited = 0;
  auto orb = orbit(w, {start, swapped(start, r)}, r, budget, visited);
  if (!orb) return std::nullopt;
  const IntVec& best = *std::min_element(orb->begin(), orb->end());
  SpanningTriple out = t;
  out.lambda0 = w.to_rational(best, 0, r);
  out.lambda1 = w.to_rational(best, r, r);
  out.alpha = w.to_rational(best, 2 * r, r);
  return out;
}

SpanningTriples spanning_triples(const LieRep& a, const RootDatum& rd, const WeightVec& alpha, bool extremal_only,
                                 std::size_t budget) {
  PhiAlpha pa = phi_alpha(a, rd, alpha);
  std::vector<WeightVec> phi;
  for (const auto& w : weights_of(a)) phi.push_back(w.coords);
  std::set<WeightVec> delta0(rd.roots.begin(), rd.roots.end());
  delta0.insert(WeightVec(rd.form.size(), 0));
  std::vector<bool> extremal(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) extremal[i] = is_extremal(a, rd, phi[i]);

  SpanningTriples res;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (std::size_t j = 0; j < phi.size(); ++j) {
      const bool ext = extremal[i] && extremal[j];
      if (extremal_only && !ext) continue;
      bool ok = std::all_of(pa.intersection.begin(), pa.intersection.end(), [&](const WeightVec& mu) {
        return delta0.count(sub(mu, phi[i])) || delta0.count(sub(mu, phi[j]));
      });
      if (ok) res.raw.push_back({phi[i], phi[j], alpha, ext, 1});
    }
  }

  std::vector<const WeightVec*> all{&alpha};
  for (const auto& w : phi) all.push_back(&w);
  IntWeyl w(rd, all);
  const std::size_t r = rd.form.size();
  std::vector<bool> assigned(res.raw.size(), false);
  std::unordered_map<IntVec, std::size_t, IntVecHash> raw_index;
  for (std::size_t k = 0; k < res.raw.size(); ++k) {
    raw_index.emplace(concat(w, res.raw[k].lambda0, res.raw[k].lambda1, alpha), k);
  }
  for (std::size_t k = 0; k < res.raw.size(); ++k) {
    if (assigned[k]) continue;
    IntVec start = concat(w, res.raw[k].lambda0, res.raw[k].lambda1, alpha);
    auto orb = orbit(w, {start, swapped(start, r)}, r, budget - std::min(budget, res.nodes_visited),
                     res.nodes_visited);
    if (!orb) {
      res.budget_exceeded = true;
      res.classes.clear();
      return res;
    }
    SpanningTriple cls = res.raw[k];
    cls.orbit_count = 0;
    for (const auto& v : *orb) {
      auto hit = raw_index.find(v);
      if (hit != raw_index.end() && !assigned[hit->second]) {
        assigned[hit->second] = true;
        ++cls.orbit_count;
      }
    }
    const IntVec& best = *std::min_element(orb->begin(), orb->end());
    cls.lambda0 = w.to_rational(best, 0, r);
    cls.lambda1 = w.to_rational(best, r, r);
    cls.alpha = w.to_rational(best, 2 * r, r);
    res.classes.push_back(std::move(cls));
  }
  return res;
}

WeightVec epsilon_coordinates(lie::Family family, Index n, const WeightVec& w) {
  if (family != lie::Family::sl && family != lie::Family::gl) return w;
  // λ_k - λ_{k+1} = w_k with zero sum
  WeightVec lam(n, 0);
  for (Index k = 1; k < n; ++k) lam[k] = lam[k - 1] - w[k - 1];
  Rational mean = 0;
  for (const auto& x : lam) mean += x;
  mean /= static_cast<long>(n);
  for (auto& x : lam) x -= mean;
  return lam;
}

WeightVec from_epsilon(lie::Family family, Index n, const WeightVec& eps) {
  if (family != lie::Family::sl && family != lie::Family::gl) return eps;
  WeightVec w(n - 1);
  for (Index k = 0; k + 1 < n; ++k) w[k] = eps[k] - eps[k + 1];
  return w;
}

WeightVec fundamental_coordinates(const RootDatum& rd, const WeightVec& w) {
  WeightVec out;
  for (const auto& s : rd.simple) out.push_back(rd.pairing(w, s));
  return out;
}

}  // namespace skb::weights
