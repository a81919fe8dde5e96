#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hopfoid/rational.hpp"

namespace hopfoid {

struct Entry {
  std::size_t index;
  Rational value;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sparse coefficient vector over a fixed basis. Entries are kept sorted by
/// index with no stored zeros, so equality is structural.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : dim_(dim) {}

  static Vec basis(std::size_t dim, std::size_t i, const Rational& coeff = 1);
  static Vec from_dense(std::span<const Rational> values);
  /// Accepts unsorted entries with repeats; merges them and drops zeros.
  static Vec from_entries(std::size_t dim, std::vector<Entry> entries);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Rational at(std::size_t i) const;
  std::vector<Rational> to_dense() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Rational& c);
  /// this += c * other
  void add_scaled(const Vec& other, const Rational& c);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& c, Vec a) { return a *= c; }
  friend Vec operator-(Vec a) { return a *= Rational(-1); }
  friend bool operator==(const Vec& a, const Vec& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Collects (index, value) contributions and merges them once at the end.
class VecBuilder {
 public:
  explicit VecBuilder(std::size_t dim) : dim_(dim) {}
  void add(std::size_t index, const Rational& value);
  void add(const Vec& v, const Rational& scale = 1);
  Vec build() &&;

 private:
  std::size_t dim_;
  std::vector<Entry> pending_;
};

/// Row-major flattening of tensor multi-indices; the leftmost factor varies slowest.
class TensorIndex {
 public:
  explicit TensorIndex(std::vector<std::size_t> dims);
  std::size_t size() const { return size_; }
  std::size_t flat(std::span<const std::size_t> multi) const;
  std::vector<std::size_t> split(std::size_t flat) const;
  const std::vector<std::size_t>& dims() const { return dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 1;
};

Vec tensor(const Vec& a, const Vec& b);
Vec tensor(const Vec& a, const Vec& b, const Vec& c);

/// Linear map stored as one sparse column per source basis vector.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t src_dim, std::size_t dst_dim);
  LinMap(std::size_t src_dim, std::size_t dst_dim, std::vector<Vec> columns);

  static LinMap identity(std::size_t n);
  static LinMap from_columns(std::size_t src_dim, std::size_t dst_dim,
                             const std::function<Vec(std::size_t)>& column_of);

  std::size_t src_dim() const { return src_dim_; }
  std::size_t dst_dim() const { return dst_dim_; }
  const Vec& column(std::size_t j) const { return columns_[j]; }
  const std::vector<Vec>& columns() const { return columns_; }
  void set_column(std::size_t j, Vec v);
  Rational at(std::size_t row, std::size_t col) const { return columns_[col].at(row); }

  Vec apply(const Vec& v) const;
  Vec operator()(const Vec& v) const { return apply(v); }
  /// Rows of the matrix, each a Vec of dimension src_dim.
  std::vector<Vec> rows() const;

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.src_dim_ == b.src_dim_ && a.dst_dim_ == b.dst_dim_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t src_dim_ = 0;
  std::size_t dst_dim_ = 0;
  std::vector<Vec> columns_;
};

/// outer ∘ inner
LinMap compose(const LinMap& outer, const LinMap& inner);
LinMap operator+(const LinMap& a, const LinMap& b);
LinMap operator-(const LinMap& a, const LinMap& b);
LinMap tensor(const LinMap& a, const LinMap& b);
/// (f ⊗ id)(v) for v in V ⊗ W with dim W = right_dim.
Vec apply_left(const LinMap& f, const Vec& v, std::size_t right_dim);
/// (id ⊗ f)(v) for v in U ⊗ V with dim U = left_dim.
Vec apply_right(const LinMap& f, const Vec& v, std::size_t left_dim);
/// a ⊗ b ↦ b ⊗ a on V_left ⊗ V_right.
LinMap swap_map(std::size_t left_dim, std::size_t right_dim);

}  // namespace hopfoid
