#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "skewberger/linalg/scalar.hpp"

namespace skb::linalg {

using Index = std::uint32_t;

/// Sparse coordinate vector: (index, value) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<Index, Rational>>;

/// Sorts, merges duplicate indices and drops zeros.
SparseVec canonical(SparseVec v);
Rational entry(const SparseVec& v, Index i);
SparseVec add_scaled(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec scaled(const SparseVec& a, const Rational& c);
Rational dot(const SparseVec& a, const SparseVec& b);
SparseVec from_dense(const std::vector<Rational>& v);
std::vector<Rational> to_dense(const SparseVec& v, Index n);

struct Triplet {
  Index row;
  Index col;
  Rational value;
};

/// Row-oriented sparse matrix with exact entries.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(Index rows, Index cols);

  /// Duplicate positions are summed; zero results dropped; out-of-range
  /// indices throw std::out_of_range.
  static SparseMat from_triplets(Index rows, Index cols, std::vector<Triplet> entries);
  static SparseMat from_rows(Index cols, std::vector<SparseVec> rows);
  static SparseMat from_dense(const std::vector<std::vector<Rational>>& rows);
  static SparseMat identity(Index n);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;

  const SparseVec& row(Index r) const { return data_[r]; }
  const std::vector<SparseVec>& row_data() const noexcept { return data_; }
  std::vector<SparseVec> columns() const;
  std::vector<Triplet> triplets() const;

  Rational at(Index r, Index c) const;
  SparseMat transpose() const;
  SparseVec apply(const SparseVec& x) const;
  SparseMat operator*(const SparseMat& rhs) const;
  SparseMat operator+(const SparseMat& rhs) const;
  SparseMat operator-(const SparseMat& rhs) const;
  SparseMat scaled(const Rational& c) const;
  bool is_zero() const noexcept { return nnz() == 0; }
  bool is_diagonal() const;

  friend bool operator==(const SparseMat& a, const SparseMat& b);

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<SparseVec> data_;
};

/// Accumulates entries with repeated positions; build() merges them.
class MatBuilder {
 public:
  MatBuilder(Index rows, Index cols) : rows_(rows), cols_(cols) {}
  void add(Index r, Index c, const Rational& v) {
    if (v != 0) entries_.push_back({r, c, v});
  }
  std::size_t pending() const noexcept { return entries_.size(); }
  SparseMat build() && { return SparseMat::from_triplets(rows_, cols_, std::move(entries_)); }

 private:
  Index rows_;
  Index cols_;
  std::vector<Triplet> entries_;
};

}  // namespace skb::linalg
