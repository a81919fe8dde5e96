#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hopfoid/linalg.hpp"

namespace hopfoid {

/// Incrementally built row-echelon basis of a subspace. Rows are stored with a
/// leading 1 but are not back-substituted; `reduce` still yields the canonical
/// remainder supported on non-pivot columns.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Returns true when v was independent of the rows already present.
  bool insert(const Vec& v);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Stored (not back-substituted) rows, in insertion order.
  std::vector<Vec> rows() const;
  /// Reduced row echelon basis, sorted by pivot.
  std::vector<Vec> reduced_rows() const;

 private:
  std::size_t dim_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::int32_t> pivot_row_;
};

struct RrefResult {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

RrefResult rref(std::span<const Vec> rows, std::size_t dim);
std::size_t rank(std::span<const Vec> vectors, std::size_t dim);
/// Basis of { v : f(v) = 0 }, echelon in the source coordinates.
std::vector<Vec> kernel(const LinMap& f);
std::optional<LinMap> inverse(const LinMap& f);
/// RREF basis of the column space of f.
std::vector<Vec> image_basis(const LinMap& f);
bool same_span(std::span<const Vec> a, std::span<const Vec> b, std::size_t dim);

/// Quotient of an ambient space by the span of relation vectors. Quotient
/// basis vectors correspond to the non-pivot columns in increasing order; the
/// section lifts each to that ambient basis vector.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient_dim, std::span<const Vec> relations);
  explicit QuotientSpace(Echelon relations);

  std::size_t ambient_dim() const { return echelon_.dim(); }
  std::size_t quotient_dim() const { return free_cols_.size(); }
  std::size_t relation_rank() const { return echelon_.rank(); }
  const Echelon& relations() const { return echelon_; }
  std::size_t free_column(std::size_t q) const { return free_cols_[q]; }

  Vec project(const Vec& ambient) const;
  Vec section(const Vec& q) const;
  LinMap project_map() const;
  LinMap section_map() const;

 private:
  void finalize();

  Echelon echelon_;
  std::vector<std::size_t> free_cols_;
  std::vector<std::int64_t> free_pos_;
};

}  // namespace hopfoid
