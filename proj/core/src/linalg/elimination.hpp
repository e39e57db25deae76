#pragma once

// Sparse Gauss-Jordan elimination shared by the prime-field and the
// fraction-free integer paths. Not part of the installed interface.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "skewberger/linalg/linalg.hpp"

namespace skb::linalg::detail {

template <class T>
struct Row {
  std::vector<Index> idx;
  std::vector<T> val;

  std::size_t size() const noexcept { return idx.size(); }
  std::ptrdiff_t find(Index c) const {
    auto it = std::lower_bound(idx.begin(), idx.end(), c);
    if (it == idx.end() || *it != c) return -1;
    return it - idx.begin();
  }
};

/// Z/pZ rows; pivots are scaled to 1.
struct ModPolicy {
  using T = std::uint64_t;
  PrimeField field;

  explicit ModPolicy(std::uint64_t p) : field(p) {}

  void normalize(Row<T>& r, std::size_t pos) const {
    T s = field.inv(r.val[pos]);
    if (s == 1) return;
    for (auto& v : r.val) v = field.mul(v, s);
  }
  // target <- target - target[c] * pivot, pivot[c] == 1
  void factors(const T& tc, const T&, T& alpha, T& beta) const {
    alpha = 1;
    beta = tc;
  }
  T combine(const T& alpha, const T& x, const T& beta, const T& y) const {
    return field.sub(alpha == 1 ? x : field.mul(alpha, x), field.mul(beta, y));
  }
  T scale(const T& alpha, const T& x) const { return alpha == 1 ? x : field.mul(alpha, x); }
  T neg_scale(const T& beta, const T& y) const { return field.neg(field.mul(beta, y)); }
  static bool zero(const T& x) { return x == 0; }
  void tidy(Row<T>&) const {}
};

/// Integer rows kept primitive; elimination is fraction free.
struct IntPolicy {
  using T = Integer;

  void normalize(Row<T>& r, std::size_t pos) const {
    tidy(r);
    if (r.val[pos] < 0) {
      for (auto& v : r.val) v = -v;
    }
  }
  void factors(const T& tc, const T& pc, T& alpha, T& beta) const {
    T g;
    mpz_gcd(g.get_mpz_t(), tc.get_mpz_t(), pc.get_mpz_t());
    mpz_divexact(alpha.get_mpz_t(), pc.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(beta.get_mpz_t(), tc.get_mpz_t(), g.get_mpz_t());
  }
  T combine(const T& alpha, const T& x, const T& beta, const T& y) const {
    T out = alpha * x;
    mpz_submul(out.get_mpz_t(), beta.get_mpz_t(), y.get_mpz_t());
    return out;
  }
  T scale(const T& alpha, const T& x) const { return alpha * x; }
  T neg_scale(const T& beta, const T& y) const { return -(beta * y); }
  static bool zero(const T& x) { return sgn(x) == 0; }
  void tidy(Row<T>& r) const {
    if (r.val.empty()) return;
    T g = 0;
    for (const auto& v : r.val) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return;
    }
    for (auto& v : r.val) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
};

enum class PivotRule { markowitz, leftmost };

template <class Policy>
class Eliminator {
 public:
  using T = typename Policy::T;

  Eliminator(Policy policy, Index ncols, std::vector<Row<T>> rows, const ResourceLimits& limits,
             std::string stage)
      : pol_(std::move(policy)),
        ncols_(ncols),
        rows_(std::move(rows)),
        limits_(limits),
        stage_(std::move(stage)) {}

  /// Runs elimination. With full_reduce the pivot rows are also cleared in
  /// every other pivot column (Gauss-Jordan); otherwise only the remaining
  /// rows are updated, which suffices for the rank.
  void run(PivotRule rule, bool full_reduce) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t nrows = rows_.size();
    col_rows_.assign(ncols_, {});
    col_count_.assign(ncols_, 0);
    active_.assign(nrows, 1);
    pivot_col_done_.assign(ncols_, 0);
    std::size_t fill = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (rows_[r].size() == 0) active_[r] = 0;
      for (Index c : rows_[r].idx) {
        col_rows_[c].push_back(static_cast<std::uint32_t>(r));
        ++col_count_[c];
      }
      fill += rows_[r].size();
    }
    if (rule == PivotRule::markowitz) {
      buckets_.assign(nrows + 2, {});
      for (Index c = 0; c < ncols_; ++c) {
        if (col_count_[c] > 0) buckets_[col_count_[c]].push_back(c);
      }
      min_bucket_ = 1;
    }
    Index next_left = 0;
    std::size_t steps = 0;
    Row<T> scratch;
    for (;;) {
      Index c = 0;
      bool found = false;
      if (rule == PivotRule::leftmost) {
        while (next_left < ncols_ && col_count_[next_left] == 0) ++next_left;
        if (next_left < ncols_) {
          c = next_left++;
          found = true;
        }
      } else {
        found = pop_min_column(c);
      }
      if (!found) break;

      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      std::size_t best_len = std::numeric_limits<std::size_t>::max();
      for (std::uint32_t r : col_rows_[c]) {
        if (!active_[r] || rows_[r].size() >= best_len) continue;
        if (rows_[r].find(c) < 0) continue;
        best = r;
        best_len = rows_[r].size();
      }
      Row<T>& prow = rows_[best];
      pol_.normalize(prow, static_cast<std::size_t>(prow.find(c)));
      active_[best] = 0;
      for (Index k : prow.idx) dec_count(k);
      pivot_col_done_[c] = 1;
      pivots_.push_back({c, best});

      std::vector<std::uint32_t> touched;
      touched.swap(col_rows_[c]);
      const T pc = prow.val[static_cast<std::size_t>(prow.find(c))];
      for (std::uint32_t s : touched) {
        if (s == best) continue;
        if (!active_[s] && !full_reduce) continue;
        auto pos = rows_[s].find(c);
        if (pos < 0) continue;
        std::size_t before = rows_[s].size();
        eliminate(s, static_cast<std::size_t>(pos), prow, pc, scratch);
        fill = fill + rows_[s].size() - before;
      }
      col_rows_[c].push_back(best);

      if (++steps % 64 == 0 || (limits_.max_entries != 0 && fill > limits_.max_entries)) {
        check_limits(start, fill);
      }
    }
  }

  const std::vector<std::pair<Index, std::uint32_t>>& pivots() const { return pivots_; }
  std::vector<Row<T>>& rows() { return rows_; }
  std::size_t rank() const { return pivots_.size(); }

 private:
  bool pop_min_column(Index& c) {
    while (min_bucket_ < buckets_.size()) {
      auto& b = buckets_[min_bucket_];
      while (!b.empty()) {
        Index cand = b.back();
        b.pop_back();
        if (!pivot_col_done_[cand] && col_count_[cand] == min_bucket_) {
          c = cand;
          return true;
        }
      }
      ++min_bucket_;
    }
    return false;
  }

  void dec_count(Index k) {
    std::size_t n = --col_count_[k];
    if (!buckets_.empty() && n > 0 && !pivot_col_done_[k]) {
      buckets_[n].push_back(k);
      if (n < min_bucket_) min_bucket_ = n;
    }
  }
  void inc_count(Index k) {
    std::size_t n = ++col_count_[k];
    if (!buckets_.empty() && !pivot_col_done_[k]) {
      if (n >= buckets_.size()) buckets_.resize(n + 1);
      buckets_[n].push_back(k);
    }
  }

  void eliminate(std::uint32_t s, std::size_t tpos, const Row<T>& p, const T& pc, Row<T>& out) {
    Row<T>& t = rows_[s];
    const bool track = active_[s] != 0;
    T alpha, beta;
    pol_.factors(t.val[tpos], pc, alpha, beta);
    out.idx.clear();
    out.val.clear();
    out.idx.reserve(t.size() + p.size());
    out.val.reserve(t.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < t.size() || j < p.size()) {
      if (j == p.size() || (i < t.size() && t.idx[i] < p.idx[j])) {
        out.idx.push_back(t.idx[i]);
        out.val.push_back(pol_.scale(alpha, t.val[i]));
        ++i;
      } else if (i == t.size() || p.idx[j] < t.idx[i]) {
        Index k = p.idx[j];
        out.idx.push_back(k);
        out.val.push_back(pol_.neg_scale(beta, p.val[j]));
        col_rows_[k].push_back(s);
        if (track) inc_count(k);
        ++j;
      } else {
        T v = pol_.combine(alpha, t.val[i], beta, p.val[j]);
        if (Policy::zero(v)) {
          if (track) dec_count(t.idx[i]);
        } else {
          out.idx.push_back(t.idx[i]);
          out.val.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    pol_.tidy(out);
    std::swap(t, out);
    if (track && t.size() == 0) active_[s] = 0;
  }

  void check_limits(std::chrono::steady_clock::time_point start, std::size_t fill) const {
    if (limits_.max_entries != 0 && fill > limits_.max_entries) {
      throw ResourceLimitExceeded(stage_ + ": fill-in limit of " +
                                  std::to_string(limits_.max_entries) + " entries exceeded after " +
                                  std::to_string(pivots_.size()) + " pivots (" +
                                  std::to_string(rows_.size()) + " rows, " +
                                  std::to_string(ncols_) + " columns)");
    }
    if (limits_.time_budget.count() > 0) {
      auto elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed > limits_.time_budget) {
        throw ResourceLimitExceeded(stage_ + ": time budget exceeded after " +
                                    std::to_string(pivots_.size()) + " pivots of at most " +
                                    std::to_string(std::min<std::size_t>(rows_.size(), ncols_)));
      }
    }
  }

  Policy pol_;
  Index ncols_;
  std::vector<Row<T>> rows_;
  ResourceLimits limits_;
  std::string stage_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<char> active_;
  std::vector<char> pivot_col_done_;
  std::vector<std::vector<Index>> buckets_;
  std::size_t min_bucket_ = 1;
  std::vector<std::pair<Index, std::uint32_t>> pivots_;
};

}  // namespace skb::linalg::detail
