#include <algorithm>
#include <map>

#include "skewberger/lie/builders.hpp"

namespace skb::lie {

using linalg::MatBuilder;

namespace {

// Place m at (row_off, col_off) inside an n x n matrix.
void embed(MatBuilder& b, const SparseMat& m, Index row_off, Index col_off) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) b.add(row_off + r, col_off + c, v);
  }
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
  MatBuilder mb(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (const auto& [j, x] : a.row(i)) {
      for (Index k = 0; k < b.rows(); ++k) {
        for (const auto& [l, y] : b.row(k)) mb.add(i * b.rows() + k, j * b.cols() + l, x * y);
      }
    }
  }
  return std::move(mb).build();
}

std::vector<SparseMat> tensor_actions(const std::vector<SparseMat>& a, const std::vector<SparseMat>& b) {
  std::vector<SparseMat> out;
  SparseMat ia = SparseMat::identity(a.front().rows()), ib = SparseMat::identity(b.front().rows());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(kron(a[i], ib) + kron(ia, b[i]));
  return out;
}

// Basis of the space of T: M1 -> M2 (n2 x n1 matrices) with B_X T = T A_X for every X.
std::vector<SparseMat> equivariant_maps(const std::vector<SparseMat>& act1, const std::vector<SparseMat>& act2) {
  const Index n1 = act1.front().rows(), n2 = act2.front().rows();
  std::vector<linalg::Triplet> trip;
  Index row_base = 0;
  for (std::size_t x = 0; x < act1.size(); ++x) {
    const SparseMat& a = act1[x];
    const SparseMat& b = act2[x];
    for (Index r = 0; r < n2; ++r) {
      for (const auto& [k, v] : b.row(r)) {
        for (Index c = 0; c < n1; ++c) trip.push_back({row_base + r * n1 + c, k * n1 + c, v});
      }
    }
    for (Index k = 0; k < n1; ++k) {
      for (const auto& [c, v] : a.row(k)) {
        for (Index r = 0; r < n2; ++r) trip.push_back({row_base + r * n1 + c, r * n1 + k, -v});
      }
    }
    row_base += n1 * n2;
  }
  Subspace ker = linalg::nullspace(SparseMat::from_triplets(row_base, n1 * n2, std::move(trip)));
  std::vector<SparseMat> maps;
  for (const auto& v : ker.basis()) {
    MatBuilder b(n2, n1);
    for (const auto& [i, c] : v) b.add(i / n1, i % n1, c);
    maps.push_back(std::move(b).build());
  }
  return maps;
}

// The scalar d with m0 + d*m1 in span(basis); when d is unconstrained, d = 1.
Rational solve_scale(const SparseMat& m0, const SparseMat& m1, const std::vector<SparseMat>& basis,
                     const std::string& name) {
  std::vector<SparseVec> cols{flatten(m0), flatten(m1)};
  for (const auto& x : basis) cols.push_back(linalg::scaled(flatten(x), -1));
  MatBuilder sys(m0.rows() * m0.cols(), static_cast<Index>(cols.size()));
  for (Index c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : cols[c]) sys.add(r, c, v);
  }
  Subspace ker = linalg::nullspace(std::move(sys).build());
  const SparseVec* lead = nullptr;
  const SparseVec* free_d = nullptr;
  for (const auto& v : ker.basis()) {
    if (v.front().first == 0) lead = &v;
    if (v.front().first == 1) free_d = &v;
  }
  if (!lead) throw ConstructionError(name + ": no scaling closes the bracket");
  if (free_d) return 1;
  Rational d = linalg::entry(*lead, 1);
  if (d == 0) throw ConstructionError(name + ": bracket closes only with a zero scaling");
  return d;
}

SparseVec generic_vector(Index n, int salt) {
  SparseVec v;
  for (Index k = 0; k < n; ++k) v.emplace_back(k, Rational(static_cast<long>((k + 1) * (k + salt) % 13 + 1)));
  return v;
}

// Reorders a subalgebra basis (given in coordinates of `ambient`) into Cartan
// generators first, then weight vectors grouped by weight.
std::pair<std::vector<SparseMat>, std::vector<Index>> weight_basis(const LieRep& ambient, const Subspace& sub,
                                                                   const std::string& name) {
  const Index d = ambient.dim();
  // Cartan: elements of sub supported on the ambient Cartan generators
  std::vector<SparseVec> cart_coords;
  for (Index h : ambient.cartan()) cart_coords.push_back({{h, Rational(1)}});
  Subspace h = linalg::intersect(sub, Subspace::span(d, cart_coords));
  std::vector<SparseMat> hmats;
  for (const auto& v : h.basis()) hmats.push_back(ambient.element(v));
  // ambient generators are weight vectors of the ambient Cartan, hence of h
  std::map<std::vector<Rational>, std::vector<Index>> groups;
  std::vector<std::vector<Rational>> order;
  auto ambient_weights = ambient.generator_weights();
  if (!ambient_weights) throw ConstructionError(name + ": ambient generators are not weight vectors");
  for (Index i = 0; i < d; ++i) {
    std::vector<Rational> w;
    for (const auto& hv : h.basis()) {
      Rational s = 0;
      for (const auto& [k, c] : hv) {
        auto pos = std::find(ambient.cartan().begin(), ambient.cartan().end(), k) - ambient.cartan().begin();
        s += c * (*ambient_weights)[i][static_cast<std::size_t>(pos)];
      }
      w.push_back(s);
    }
    auto [it, fresh] = groups.try_emplace(w);
    if (fresh) order.push_back(w);
    it->second.push_back(i);
  }
  std::vector<SparseMat> gens = hmats;
  std::vector<Index> cartan;
  for (Index k = 0; k < hmats.size(); ++k) cartan.push_back(k);
  for (const auto& w : order) {
    bool zero = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
    std::vector<SparseVec> coords;
    for (Index i : groups[w]) coords.push_back({{i, Rational(1)}});
    Subspace part = linalg::intersect(sub, Subspace::span(d, coords));
    for (const auto& v : part.basis()) {
      if (zero && h.contains(v)) continue;
      gens.push_back(ambient.element(v));
    }
  }
  if (gens.size() != sub.dim()) throw ConstructionError(name + ": subalgebra is not spanned by weight vectors");
  return {std::move(gens), std::move(cartan)};
}

// sign of the permutation sorting `seq` (entries distinct)
int perm_sign(std::vector<Index> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

LieRep build_g2() {
  const std::string name = "g2:std";
  LieRep so7 = build_classical(Family::so, 7);
  LieRep w3 = power_rep(so7, PowerKind::wedge, 3);
  auto tuples = index_tuples(7, 3, true);
  std::map<std::vector<Index>, Index> idx;
  for (Index i = 0; i < tuples.size(); ++i) idx[tuples[i]] = i;
  // e_0, e_1, e_2 carry weights eps_1..eps_3, e_3 weight 0, e_{6-p} the negatives
  SparseVec phi = linalg::canonical({{idx.at({0, 1, 2}), Rational(1)},
                                     {idx.at({4, 5, 6}), Rational(2)},
                                     {idx.at({0, 3, 6}), Rational(1)},
                                     {idx.at({1, 3, 5}), Rational(1)},
                                     {idx.at({2, 3, 4}), Rational(1)}});
  MatBuilder act(w3.dimV(), so7.dim());
  for (Index i = 0; i < so7.dim(); ++i) {
    for (const auto& [r, v] : w3.generator(i).apply(phi)) act.add(r, i, v);
  }
  Subspace stab = linalg::nullspace(std::move(act).build());
  if (stab.dim() != 14) {
    throw ConstructionError(name + ": stabilizer of the 3-form has dimension " + std::to_string(stab.dim()));
  }
  auto [gens, cartan] = weight_basis(so7, stab, name);
  LieRepData d;
  d.name = name;
  d.dimV = 7;
  d.generators = std::move(gens);
  d.cartan = std::move(cartan);
  d.form = *so7.form();
  d.form_kind = FormKind::symmetric;
  return LieRep(std::move(d));
}

LieRep build_f4_model() {
  const std::string name = "f4:std";
  LieRep vec = build_classical(Family::so, 9);
  LieRep spin = build_spin(9, Chirality::full);
  const Index nd = spin.dimV();  // 16
  const Index n = 1 + 9 + nd;
  const Index off_v = 1, off_d = 10;
  if (!spin.form()) throw ConstructionError(name + ": spinor module has no invariant form");

  std::vector<SparseMat> clifford = equivariant_maps(tensor_actions(vec.generators(), spin.generators()),
                                                     spin.generators());
  std::vector<SparseMat> pairing = equivariant_maps(tensor_actions(spin.generators(), spin.generators()),
                                                    vec.generators());
  if (clifford.size() != 1 || pairing.size() != 1) {
    throw ConstructionError(name + ": equivariant maps are not unique up to scale");
  }
  const SparseMat& gamma = clifford.front();  // 16 x (9*16), column v*16+s
  const SparseMat& vmap = pairing.front();    // 9 x (16*16), column s*16+t
  const SparseMat& cform = *spin.form();

  // odd generator for spinor s: P = a,b,c parts; Q = the Delta -> C^9 part
  auto odd_parts = [&](const SparseVec& s) {
    MatBuilder p(n, n), q(n, n);
    for (const auto& [k, v] : s) p.add(off_d + k, 0, v);
    auto gcols = gamma.columns();
    for (Index w = 0; w < 9; ++w) {
      for (const auto& [k, v] : s) {
        for (const auto& [r, g] : gcols[w * nd + k]) p.add(off_d + r, off_v + w, v * g);
      }
    }
    for (const auto& [k, v] : s) {
      for (const auto& [t, c] : cform.row(k)) p.add(0, off_d + t, v * c);
    }
    for (Index w = 0; w < 9; ++w) {
      for (const auto& [col, c] : vmap.row(w)) {
        Rational sv = linalg::entry(s, col / nd);
        if (sv != 0) q.add(off_v + w, off_d + col % nd, sv * c);
      }
    }
    return std::make_pair(std::move(p).build(), std::move(q).build());
  };

  std::vector<SparseMat> even;
  for (Index i = 0; i < vec.dim(); ++i) {
    MatBuilder b(n, n);
    embed(b, vec.generator(i), off_v, off_v);
    embed(b, spin.generator(i), off_d, off_d);
    even.push_back(std::move(b).build());
  }
  auto [ps, qs] = odd_parts(generic_vector(nd, 3));
  auto [pt, qt] = odd_parts(generic_vector(nd, 7));
  SparseMat m0 = commutator(ps, pt);
  SparseMat m1 = commutator(ps, qt) + commutator(qs, pt);
  Rational dscale = solve_scale(m0, m1, even, name);

  LieRepData d;
  d.name = name;
  d.dimV = n;
  d.generators = even;
  for (Index k = 0; k < nd; ++k) {
    auto [p, q] = odd_parts({{k, Rational(1)}});
    d.generators.push_back(p + q.scaled(dscale));
  }
  d.cartan = vec.cartan();
  auto f = find_invariant_form(d.generators, d.cartan, n);
  if (!f || f->second != FormKind::symmetric) throw ConstructionError(name + ": no invariant symmetric form");
  d.form = f->first;
  d.form_kind = f->second;
  return LieRep(std::move(d));
}

LieRep build_e7_model() {
  const std::string name = "e7:std";
  LieRep sl8 = build_classical(Family::sl, 8);
  LieRep l2 = power_rep(sl8, PowerKind::wedge, 2);
  const Index m = l2.dimV();  // 28
  const Index n = 2 * m;
  auto pairs = index_tuples(8, 2, true);
  auto quads = index_tuples(8, 4, true);
  std::map<std::vector<Index>, Index> pair_idx;
  for (Index i = 0; i < pairs.size(); ++i) pair_idx[pairs[i]] = i;

  std::vector<SparseMat> even;
  for (Index i = 0; i < sl8.dim(); ++i) {
    MatBuilder b(n, n);
    embed(b, l2.generator(i), 0, 0);
    embed(b, l2.generator(i).transpose().scaled(-1), m, m);
    even.push_back(std::move(b).build());
  }
  // omega = e_I acts by A: Lambda^2* -> Lambda^2 with <eta, A xi> = <eta ^ xi, omega>
  // and by B: Lambda^2 -> Lambda^2* with <B x, y> = (omega ^ x ^ y) / vol.
  auto parts = [&](const std::vector<Index>& quad) {
    MatBuilder a(n, n), b(n, n);
    for (Index j = 0; j < m; ++j) {
      const auto& xi = pairs[j];
      if (std::count(quad.begin(), quad.end(), xi[0]) && std::count(quad.begin(), quad.end(), xi[1])) {
        std::vector<Index> rest;
        for (Index q : quad) {
          if (q != xi[0] && q != xi[1]) rest.push_back(q);
        }
        a.add(pair_idx.at(rest), m + j, perm_sign({rest[0], rest[1], xi[0], xi[1]}));
      }
      if (!std::count(quad.begin(), quad.end(), xi[0]) && !std::count(quad.begin(), quad.end(), xi[1])) {
        std::vector<Index> rest;
        for (Index k = 0; k < 8; ++k) {
          if (!std::count(quad.begin(), quad.end(), k) && k != xi[0] && k != xi[1]) rest.push_back(k);
        }
        std::vector<Index> seq = quad;
        seq.insert(seq.end(), {xi[0], xi[1], rest[0], rest[1]});
        b.add(m + pair_idx.at(rest), j, perm_sign(seq));
      }
    }
    return std::make_pair(std::move(a).build(), std::move(b).build());
  };
  // generic pair of 4-vectors for the scale solve
  auto generic_parts = [&](int salt) {
    SparseMat a(n, n), b(n, n);
    for (Index i = 0; i < quads.size(); ++i) {
      Rational c = static_cast<long>((i + 1) * (i + salt) % 11 + 1);
      auto [pa, pb] = parts(quads[i]);
      a = a + pa.scaled(c);
      b = b + pb.scaled(c);
    }
    return std::make_pair(a, b);
  };
  auto [as, bs] = generic_parts(2);
  auto [at, bt] = generic_parts(5);
  // with A fixed, [A_s + q B_s, A_t + q B_t] = q ([A_s, B_t] + [B_s, A_t])
  SparseMat m1 = commutator(as, bt) + commutator(bs, at);
  Rational q = solve_scale(SparseMat(n, n), m1, even, name);

  LieRepData d;
  d.name = name;
  d.dimV = n;
  d.generators = even;
  for (const auto& quad : quads) {
    auto [a, b] = parts(quad);
    d.generators.push_back(a + b.scaled(q));
  }
  d.cartan = sl8.cartan();
  auto f = find_invariant_form(d.generators, d.cartan, n);
  if (!f || f->second != FormKind::skew) throw ConstructionError(name + ": no invariant symplectic form");
  d.form = f->first;
  d.form_kind = f->second;
  return LieRep(std::move(d));
}

}  // namespace skb::lie
