#include "skewberger/linalg/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skb::linalg {

SparseVec canonical(SparseVec v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    // mpq_class(num, den) does not reduce; every stored entry must be in lowest terms
    e.second.canonicalize();
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

Rational entry(const SparseVec& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& e, Index k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return 0;
}

SparseVec add_scaled(const SparseVec& a, const Rational& c, const SparseVec& b) {
  if (c == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + c * b[j].second;
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& a, const Rational& c) {
  if (c == 0) return {};
  SparseVec out = a;
  for (auto& e : out) e.second *= c;
  return out;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      s += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

SparseVec from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.emplace_back(i, v[i]);
  }
  return out;
}

std::vector<Rational> to_dense(const SparseVec& v, Index n) {
  std::vector<Rational> out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseMat::SparseMat(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMat SparseMat::from_triplets(Index rows, Index cols, std::vector<Triplet> entries) {
  SparseMat m(rows, cols);
  std::vector<std::size_t> counts(rows, 0);
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw std::out_of_range("matrix entry (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ") outside " + std::to_string(rows) +
                              "x" + std::to_string(cols));
    }
    ++counts[t.row];
  }
  for (Index r = 0; r < rows; ++r) m.data_[r].reserve(counts[r]);
  for (auto& t : entries) m.data_[t.row].emplace_back(t.col, std::move(t.value));
  for (auto& row : m.data_) row = canonical(std::move(row));
  return m;
}

SparseMat SparseMat::from_rows(Index cols, std::vector<SparseVec> rows) {
  SparseMat m(static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseVec v = canonical(std::move(rows[r]));
    if (!v.empty() && v.back().first >= cols) throw std::out_of_range("row entry outside matrix");
    m.data_[r] = std::move(v);
  }
  return m;
}

SparseMat SparseMat::from_dense(const std::vector<std::vector<Rational>>& rows) {
  Index cols = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
  SparseMat m(static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    m.data_[r] = linalg::from_dense(rows[r]);
  }
  return m;
}

SparseMat SparseMat::identity(Index n) {
  SparseMat m(n, n);
  for (Index i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

std::size_t SparseMat::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

std::vector<SparseVec> SparseMat::columns() const {
  std::vector<SparseVec> cols(cols_);
  for (Index r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) cols[c].emplace_back(r, v);
  }
  return cols;
}

std::vector<Triplet> SparseMat::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (Index r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.push_back({r, c, v});
  }
  return out;
}

Rational SparseMat::at(Index r, Index c) const { return entry(data_.at(r), c); }

SparseMat SparseMat::transpose() const {
  SparseMat t(cols_, rows_);
  t.data_ = columns();
  return t;
}

SparseVec SparseMat::apply(const SparseVec& x) const {
  SparseVec out;
  for (Index r = 0; r < rows_; ++r) {
    Rational s = dot(data_[r], x);
    if (s != 0) out.emplace_back(r, std::move(s));
  }
  return out;
}

SparseMat SparseMat::operator*(const SparseMat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SparseMat out(rows_, rhs.cols_);
  for (Index r = 0; r < rows_; ++r) {
    SparseVec acc;
    for (const auto& [k, v] : data_[r]) {
      for (const auto& [c, w] : rhs.data_[k]) acc.emplace_back(c, v * w);
    }
    out.data_[r] = canonical(std::move(acc));
  }
  return out;
}

SparseMat SparseMat::operator+(const SparseMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  SparseMat out(rows_, cols_);
  for (Index r = 0; r < rows_; ++r) out.data_[r] = add_scaled(data_[r], 1, rhs.data_[r]);
  return out;
}

SparseMat SparseMat::operator-(const SparseMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  SparseMat out(rows_, cols_);
  for (Index r = 0; r < rows_; ++r) out.data_[r] = add_scaled(data_[r], -1, rhs.data_[r]);
  return out;
}

SparseMat SparseMat::scaled(const Rational& c) const {
  SparseMat out(rows_, cols_);
  for (Index r = 0; r < rows_; ++r) out.data_[r] = linalg::scaled(data_[r], c);
  return out;
}

bool SparseMat::is_diagonal() const {
  for (Index r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) {
      if (e.first != r) return false;
    }
  }
  return true;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace skb::linalg
