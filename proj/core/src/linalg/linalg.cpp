#include "skewberger/linalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "elimination.hpp"

namespace skb::linalg {

using detail::Eliminator;
using detail::IntPolicy;
using detail::ModPolicy;
using detail::PivotRule;
using IntRow = detail::Row<Integer>;
using ModRow = detail::Row<std::uint64_t>;

const char* to_string(Arithmetic a) {
  switch (a) {
    case Arithmetic::rational: return "rational";
    case Arithmetic::modular: return "modular";
    case Arithmetic::automatic: return "auto";
  }
  return "auto";
}

Arithmetic parse_arithmetic(const std::string& s) {
  if (s == "rational") return Arithmetic::rational;
  if (s == "modular") return Arithmetic::modular;
  if (s == "auto") return Arithmetic::automatic;
  throw std::invalid_argument("unknown arithmetic mode '" + s + "' (rational|modular|auto)");
}

const char* to_string(RankFlag f) {
  switch (f) {
    case RankFlag::modular_agreed: return "modular-agreed";
    case RankFlag::modular_disagreement: return "modular-disagreement";
    case RankFlag::certified: return "certified";
  }
  return "modular-agreed";
}

namespace {

void note_prime(SolveStats& stats, std::uint64_t p) {
  if (std::find(stats.primes_used.begin(), stats.primes_used.end(), p) == stats.primes_used.end()) {
    stats.primes_used.push_back(p);
  }
}


IntRow to_int_row(const SparseVec& v) {
  IntRow r;
  Integer l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
  r.idx.reserve(v.size());
  r.val.reserve(v.size());
  for (const auto& [c, q] : v) {
    r.idx.push_back(c);
    Integer x;
    mpz_divexact(x.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    r.val.push_back(x * q.get_num());
  }
  return r;
}

std::vector<IntRow> to_int_rows(const std::vector<SparseVec>& rows) {
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto& v : rows) out.push_back(to_int_row(v));
  return out;
}

std::vector<ModRow> to_mod_rows(const std::vector<SparseVec>& rows, const PrimeField& f) {
  std::vector<ModRow> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& r = out[i];
    for (const auto& [c, q] : rows[i]) {
      std::uint64_t v = f.reduce(q);
      if (v == 0) continue;
      r.idx.push_back(c);
      r.val.push_back(v);
    }
  }
  return out;
}

// Kernel vectors read off a fully reduced system: x_f = 1 for a free column f
// and x_c = -row[f]/pivot for each pivot row containing f.
std::vector<SparseVec> kernel_from_reduced(Eliminator<IntPolicy>& e, Index ncols) {
  std::vector<char> is_pivot(ncols, 0);
  for (const auto& [c, r] : e.pivots()) is_pivot[c] = 1;
  std::vector<SparseVec> ker(ncols);
  for (const auto& [c, r] : e.pivots()) {
    const IntRow& row = e.rows()[r];
    const Integer& piv = row.val[static_cast<std::size_t>(row.find(c))];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row.idx[k] == c) continue;
      Rational q(-row.val[k], piv);
      q.canonicalize();
      ker[row.idx[k]].emplace_back(c, std::move(q));
    }
  }
  std::vector<SparseVec> out;
  for (Index f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = std::move(ker[f]);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ModRow> kernel_from_reduced(Eliminator<ModPolicy>& e, Index ncols, const PrimeField& f) {
  std::vector<char> is_pivot(ncols, 0);
  for (const auto& [c, r] : e.pivots()) is_pivot[c] = 1;
  std::vector<std::vector<std::pair<Index, std::uint64_t>>> ker(ncols);
  for (const auto& [c, r] : e.pivots()) {
    const ModRow& row = e.rows()[r];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row.idx[k] == c) continue;
      ker[row.idx[k]].emplace_back(c, f.neg(row.val[k]));
    }
  }
  std::vector<ModRow> out;
  for (Index col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    auto v = std::move(ker[col]);
    v.emplace_back(col, 1);
    std::sort(v.begin(), v.end());
    ModRow r;
    for (auto& [i, x] : v) {
      r.idx.push_back(i);
      r.val.push_back(x);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Reduced echelon rows (pivot 1) over Z/pZ, ordered by pivot column.
std::vector<ModRow> rref_mod(std::vector<ModRow> rows, Index ncols, std::uint64_t p,
                             const ResourceLimits& limits) {
  Eliminator<ModPolicy> e(ModPolicy(p), ncols, std::move(rows), limits, "normal form mod p");
  e.run(PivotRule::leftmost, true);
  auto piv = e.pivots();
  std::sort(piv.begin(), piv.end());
  std::vector<ModRow> out;
  out.reserve(piv.size());
  for (const auto& [c, r] : piv) out.push_back(std::move(e.rows()[r]));
  return out;
}

Subspace exact_nullspace(const SparseMat& m, const ResourceLimits& limits) {
  Eliminator<IntPolicy> e(IntPolicy{}, m.cols(), to_int_rows(m.row_data()), limits,
                          "exact nullspace");
  e.run(PivotRule::markowitz, true);
  return Subspace::from_normal_form(m.cols(), rref(m.cols(), kernel_from_reduced(e, m.cols()), limits));
}

struct CrtRow {
  std::vector<Index> idx;
  std::vector<Integer> val;
};

bool same_pattern(const std::vector<ModRow>& a, const std::vector<CrtRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].idx.front() != b[i].idx.front()) return false;
  }
  return true;
}

void crt_merge(CrtRow& acc, const ModRow& r, const Integer& modulus, std::uint64_t p) {
  PrimeField f(p);
  std::uint64_t minv = f.inv(f.reduce(modulus));
  CrtRow out;
  std::size_t i = 0, j = 0;
  auto lift = [&](const Integer& a, std::uint64_t b) {
    std::uint64_t am = f.reduce(a);
    std::uint64_t t = f.mul(f.sub(b, am), minv);
    Integer tz;
    mpz_set_ui(tz.get_mpz_t(), t);
    return Integer(a + modulus * tz);
  };
  while (i < acc.idx.size() || j < r.idx.size()) {
    if (j == r.idx.size() || (i < acc.idx.size() && acc.idx[i] < r.idx[j])) {
      out.idx.push_back(acc.idx[i]);
      out.val.push_back(lift(acc.val[i], 0));
      ++i;
    } else if (i == acc.idx.size() || r.idx[j] < acc.idx[i]) {
      out.idx.push_back(r.idx[j]);
      out.val.push_back(lift(Integer(0), r.val[j]));
      ++j;
    } else {
      out.idx.push_back(acc.idx[i]);
      out.val.push_back(lift(acc.val[i], r.val[j]));
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

bool reconstruct(const std::vector<CrtRow>& rows, const Integer& modulus, std::vector<SparseVec>& out) {
  out.clear();
  for (const auto& r : rows) {
    SparseVec v;
    for (std::size_t k = 0; k < r.idx.size(); ++k) {
      auto q = rational_reconstruct(r.val[k], modulus);
      if (!q) return false;
      if (*q != 0) v.emplace_back(r.idx[k], std::move(*q));
    }
    out.push_back(std::move(v));
  }
  return true;
}

bool annihilates(const SparseMat& m, const std::vector<SparseVec>& vs) {
  if (vs.empty()) return true;
  // m applied to all candidate vectors at once through a dense column view
  std::vector<std::vector<std::pair<std::uint32_t, const Rational*>>> by_col(m.cols());
  for (std::uint32_t k = 0; k < vs.size(); ++k) {
    for (const auto& [c, q] : vs[k]) by_col[c].emplace_back(k, &q);
  }
  std::vector<Rational> acc(vs.size());
  std::vector<char> hit(vs.size(), 0);
  for (Index r = 0; r < m.rows(); ++r) {
    std::vector<std::uint32_t> touched;
    for (const auto& [c, a] : m.row(r)) {
      for (const auto& [k, q] : by_col[c]) {
        if (!hit[k]) {
          hit[k] = 1;
          acc[k] = 0;
          touched.push_back(k);
        }
        acc[k] += a * *q;
      }
    }
    for (auto k : touched) {
      hit[k] = 0;
      if (acc[k] != 0) return false;
    }
  }
  return true;
}

// Kernel modulo a prime in reduced echelon form; nullopt if the prime
// divides a denominator.
std::optional<std::vector<ModRow>> kernel_mod(const SparseMat& m, std::uint64_t p,
                                              const ResourceLimits& limits) {
  PrimeField f(p);
  std::vector<ModRow> rows;
  try {
    rows = to_mod_rows(m.row_data(), f);
  } catch (const PrimeDividesDenominator&) {
    return std::nullopt;
  }
  Eliminator<ModPolicy> e(ModPolicy(p), m.cols(), std::move(rows), limits, "modular nullspace");
  e.run(PivotRule::markowitz, true);
  return rref_mod(kernel_from_reduced(e, m.cols(), f), m.cols(), p, limits);
}

std::optional<Subspace> modular_nullspace(const SparseMat& m, const SolveOptions& opts,
                                          SolveStats* stats) {
  std::vector<CrtRow> acc;
  Integer modulus = 0;
  std::vector<SparseVec> candidate;
  for (std::uint64_t p : opts.primes) {
    auto ker = kernel_mod(m, p, opts.limits);
    if (!ker) continue;
    if (stats) note_prime(*stats, p);
    if (ker->empty()) return Subspace(m.cols());
    if (modulus == 0 || ker->size() < acc.size()) {
      acc.clear();
      for (auto& r : *ker) acc.push_back({r.idx, {}});
      for (std::size_t i = 0; i < ker->size(); ++i) {
        for (auto v : (*ker)[i].val) {
          Integer z;
          mpz_set_ui(z.get_mpz_t(), v);
          acc[i].val.push_back(z);
        }
      }
      mpz_set_ui(modulus.get_mpz_t(), p);
    } else if (!same_pattern(*ker, acc)) {
      continue;  // unlucky prime: larger kernel or shifted pivots
    } else {
      for (std::size_t i = 0; i < acc.size(); ++i) crt_merge(acc[i], (*ker)[i], modulus, p);
      modulus *= p;
    }
    if (reconstruct(acc, modulus, candidate) && annihilates(m, candidate)) {
      // dim over Q <= dim mod p, and these are dim-mod-p independent
      // rational kernel vectors, so they span the kernel.
      return Subspace::from_normal_form(m.cols(), std::move(candidate));
    }
  }
  return std::nullopt;
}

bool use_modular(const SparseMat& m, const SolveOptions& opts) {
  switch (opts.arithmetic) {
    case Arithmetic::rational: return false;
    case Arithmetic::modular: return true;
    case Arithmetic::automatic: return m.nnz() >= opts.modular_threshold;
  }
  return false;
}

}  // namespace

Subspace Subspace::full(Index ambient) {
  Subspace s(ambient);
  s.basis_.reserve(ambient);
  for (Index i = 0; i < ambient; ++i) s.basis_.push_back({{i, Rational(1)}});
  return s;
}

Subspace Subspace::span(Index ambient, std::vector<SparseVec> vectors) {
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().first >= ambient) {
      throw std::out_of_range("vector outside the ambient space");
    }
  }
  return from_normal_form(ambient, rref(ambient, std::move(vectors)));
}

Subspace Subspace::from_normal_form(Index ambient, std::vector<SparseVec> basis) {
  Subspace s(ambient);
  s.basis_ = std::move(basis);
  return s;
}

std::vector<Index> Subspace::pivots() const {
  std::vector<Index> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.front().first);
  return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  // each pivot occurs only in its own basis vector, so the multipliers are
  // the entries of v at pivot positions
  SparseVec r = v;
  for (const auto& [i, c] : v) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), i,
                               [](const SparseVec& b, Index k) { return b.front().first < k; });
    if (it != basis_.end() && it->front().first == i) r = add_scaled(r, -c, *it);
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const SparseVec& v) { return contains(v); });
}

std::vector<Rational> Subspace::coordinates(const SparseVec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector not in subspace");
  std::vector<Rational> c;
  c.reserve(basis_.size());
  for (const auto& b : basis_) c.push_back(entry(v, b.front().first));
  return c;
}

std::vector<SparseVec> rref(Index ambient, std::vector<SparseVec> vectors,
                            const ResourceLimits& limits) {
  Eliminator<IntPolicy> e(IntPolicy{}, ambient, to_int_rows(vectors), limits, "normal form");
  vectors.clear();
  e.run(PivotRule::leftmost, true);
  auto piv = e.pivots();
  std::sort(piv.begin(), piv.end());
  std::vector<SparseVec> out;
  out.reserve(piv.size());
  for (const auto& [c, r] : piv) {
    const IntRow& row = e.rows()[r];
    const Integer& lead = row.val.front();
    SparseVec v;
    v.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      Rational q(row.val[k], lead);
      q.canonicalize();
      v.emplace_back(row.idx[k], std::move(q));
    }
    out.push_back(std::move(v));
  }
  return out;
}

Subspace nullspace(const SparseMat& m, const SolveOptions& opts, SolveStats* stats) {
  if (m.nnz() == 0) return Subspace::full(m.cols());
  if (use_modular(m, opts)) {
    if (stats) ++stats->modular_solves;
    if (auto s = modular_nullspace(m, opts, stats)) return std::move(*s);
    if (stats) ++stats->modular_fallbacks;
  } else if (stats) {
    ++stats->rational_solves;
  }
  return exact_nullspace(m, opts.limits);
}

std::size_t rank_mod(const SparseMat& m, std::uint64_t p, const ResourceLimits& limits) {
  PrimeField f(p);
  Eliminator<ModPolicy> e(ModPolicy(p), m.cols(), to_mod_rows(m.row_data(), f), limits,
                          "modular rank");
  e.run(PivotRule::markowitz, false);
  return e.rank();
}

std::size_t rank_exact(const SparseMat& m, const ResourceLimits& limits) {
  Eliminator<IntPolicy> e(IntPolicy{}, m.cols(), to_int_rows(m.row_data()), limits, "exact rank");
  e.run(PivotRule::markowitz, false);
  return e.rank();
}

std::size_t rank(const SparseMat& m, const SolveOptions& opts, SolveStats* stats) {
  if (use_modular(m, opts) && opts.primes.size() >= 2) {
    if (stats) ++stats->modular_solves;
    try {
      VerifiedRank v = verified_rank(m, opts.primes, false, opts.limits);
      if (v.flag != RankFlag::modular_disagreement) {
        if (stats) {
          for (auto p : opts.primes) note_prime(*stats, p);
        }
        return v.rank;
      }
    } catch (const PrimeDividesDenominator&) {
    }
    if (stats) ++stats->modular_fallbacks;
  } else if (stats) {
    ++stats->rational_solves;
  }
  return rank_exact(m, opts.limits);
}

VerifiedRank verified_rank(const SparseMat& m, const std::vector<std::uint64_t>& primes,
                           bool confirm_exact, const ResourceLimits& limits) {
  std::set<std::uint64_t> distinct(primes.begin(), primes.end());
  if (distinct.size() < 2) throw std::invalid_argument("verified_rank needs at least two distinct primes");
  VerifiedRank out;
  for (std::uint64_t p : primes) out.per_prime.push_back(rank_mod(m, p, limits));
  out.rank = *std::max_element(out.per_prime.begin(), out.per_prime.end());
  bool agree = std::all_of(out.per_prime.begin(), out.per_prime.end(),
                           [&](std::size_t r) { return r == out.rank; });
  out.flag = agree ? RankFlag::modular_agreed : RankFlag::modular_disagreement;
  if (confirm_exact) {
    out.rank = rank_exact(m, limits);
    out.flag = RankFlag::certified;
  }
  return out;
}

Subspace column_space(const SparseMat& m, const SolveOptions& opts) {
  return Subspace::from_normal_form(m.rows(), rref(m.rows(), m.columns(), opts.limits));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("intersect: ambient dimensions " + std::to_string(a.ambient_dim()) +
                                " and " + std::to_string(b.ambient_dim()) + " differ");
  }
  if (a.empty() || b.empty()) return Subspace(a.ambient_dim());
  const Index da = static_cast<Index>(a.dim());
  const Index db = static_cast<Index>(b.dim());
  MatBuilder mb(a.ambient_dim(), da + db);
  for (Index i = 0; i < da; ++i) {
    for (const auto& [k, v] : a.basis()[i]) mb.add(k, i, v);
  }
  for (Index j = 0; j < db; ++j) {
    for (const auto& [k, v] : b.basis()[j]) mb.add(k, da + j, -v);
  }
  Subspace ker = nullspace(std::move(mb).build(), SolveOptions{Arithmetic::rational});
  std::vector<SparseVec> vs;
  for (const auto& kv : ker.basis()) {
    SparseVec x;
    for (const auto& [i, c] : kv) {
      if (i >= da) break;
      x = add_scaled(x, c, a.basis()[i]);
    }
    vs.push_back(std::move(x));
  }
  return Subspace::span(a.ambient_dim(), std::move(vs));
}

}  // namespace skb::linalg
