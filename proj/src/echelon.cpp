#include "hopfoid/echelon.hpp"

#include <algorithm>
#include <map>

#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

using Work = std::map<std::size_t, Rational>;

Work to_work(const Vec& v) {
  Work w;
  for (const auto& e : v.entries()) w.emplace_hint(w.end(), e.index, e.value);
  return w;
}

// w -= coef * row, where row[0] is the pivot entry (value 1) and has been
// erased from w by the caller.
void eliminate(Work& w, const std::vector<Entry>& row, const Rational& coef) {
  auto hint = w.begin();
  for (std::size_t i = 1; i < row.size(); ++i) {
    const auto& e = row[i];
    hint = w.lower_bound(e.index);
    if (hint != w.end() && hint->first == e.index) {
      hint->second -= coef * e.value;
      if (hint->second == 0) hint = w.erase(hint);
    } else {
      hint = w.emplace_hint(hint, e.index, -coef * e.value);
    }
  }
}

}  // namespace

Echelon::Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

bool Echelon::insert(const Vec& v) {
  if (v.dim() != dim_) throw DimensionMismatch("echelon insert: dimension mismatch");
  if (v.is_zero()) return false;
  Work w;
  // Fast path: leading column is free, so the vector is already independent.
  if (pivot_row_[v.entries().front().index] < 0) {
    const Rational lead = v.entries().front().value;
    std::vector<Entry> row;
    row.reserve(v.nnz());
    for (const auto& e : v.entries()) row.push_back({e.index, e.value / lead});
    pivot_row_[row.front().index] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }
  w = to_work(v);
  while (!w.empty()) {
    auto it = w.begin();
    const std::int32_t r = pivot_row_[it->first];
    if (r < 0) break;
    const Rational coef = it->second;
    w.erase(it);
    eliminate(w, rows_[r], coef);
  }
  if (w.empty()) return false;
  const Rational lead = w.begin()->second;
  std::vector<Entry> row;
  row.reserve(w.size());
  for (auto& [idx, val] : w) row.push_back({idx, val / lead});
  pivot_row_[row.front().index] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

Vec Echelon::reduce(const Vec& v) const {
  if (v.dim() != dim_) throw DimensionMismatch("echelon reduce: dimension mismatch");
  bool any_pivot = false;
  for (const auto& e : v.entries()) {
    if (pivot_row_[e.index] >= 0) {
      any_pivot = true;
      break;
    }
  }
  if (!any_pivot) return v;
  Work w = to_work(v);
  auto it = w.begin();
  while (it != w.end()) {
    const std::int32_t r = pivot_row_[it->first];
    if (r < 0) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational coef = it->second;
    w.erase(it);
    eliminate(w, rows_[r], coef);
    it = w.upper_bound(col);
  }
  std::vector<Entry> out;
  out.reserve(w.size());
  for (auto& [idx, val] : w) out.push_back({idx, val});
  return Vec::from_entries(dim_, std::move(out));
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.front().index);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vec> Echelon::rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(Vec::from_entries(dim_, r));
  return out;
}

std::vector<Vec> Echelon::reduced_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (std::size_t p : pivots()) {
    const auto& row = rows_[pivot_row_[p]];
    Vec tail = Vec::from_entries(dim_, std::vector<Entry>(row.begin() + 1, row.end()));
    Vec r = reduce(tail);
    r += Vec::basis(dim_, p);
    out.push_back(std::move(r));
  }
  return out;
}

RrefResult rref(std::span<const Vec> rows, std::size_t dim) {
  Echelon e(dim);
  for (const auto& r : rows) e.insert(r);
  return {e.reduced_rows(), e.pivots()};
}

std::size_t rank(std::span<const Vec> vectors, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<Vec> kernel(const LinMap& f) {
  // Augment each column with a unit vector tracking its combination; rows whose
  // pivot lands in the tracking block encode kernel elements.
  const std::size_t m = f.dst_dim();
  const std::size_t n = f.src_dim();
  Echelon e(m + n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Entry> entries = f.column(j).entries();
    entries.push_back({m + j, 1});
    e.insert(Vec::from_entries(m + n, std::move(entries)));
  }
  std::vector<Vec> out;
  for (const auto& row : e.reduced_rows()) {
    if (row.entries().front().index < m) continue;
    std::vector<Entry> k;
    for (const auto& x : row.entries()) k.push_back({x.index - m, x.value});
    out.push_back(Vec::from_entries(n, std::move(k)));
  }
  return out;
}

std::optional<LinMap> inverse(const LinMap& f) {
  const std::size_t n = f.src_dim();
  if (f.dst_dim() != n) return std::nullopt;
  // Gauss-Jordan on [A | I] by rows.
  Echelon e(2 * n);
  auto rows = f.rows();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Entry> entries = rows[i].entries();
    entries.push_back({n + i, 1});
    e.insert(Vec::from_entries(2 * n, std::move(entries)));
  }
  auto reduced = e.reduced_rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (reduced[i].entries().front().index != i) return std::nullopt;
  }
  std::vector<std::vector<Entry>> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : reduced[i].entries()) {
      if (x.index >= n) cols[x.index - n].push_back({i, x.value});
    }
  }
  std::vector<Vec> columns;
  columns.reserve(n);
  for (auto& c : cols) columns.push_back(Vec::from_entries(n, std::move(c)));
  return LinMap(n, n, std::move(columns));
}

std::vector<Vec> image_basis(const LinMap& f) { return rref(f.columns(), f.dst_dim()).rows; }

bool same_span(std::span<const Vec> a, std::span<const Vec> b, std::size_t dim) {
  return rref(a, dim).rows == rref(b, dim).rows;
}

QuotientSpace::QuotientSpace(std::size_t ambient_dim, std::span<const Vec> relations)
    : echelon_(ambient_dim) {
  for (const auto& r : relations) echelon_.insert(r);
  finalize();
}

QuotientSpace::QuotientSpace(Echelon relations) : echelon_(std::move(relations)) { finalize(); }

void QuotientSpace::finalize() {
  free_pos_.assign(echelon_.dim(), -1);
  free_cols_.clear();
  for (std::size_t c = 0; c < echelon_.dim(); ++c) {
    if (!echelon_.is_pivot(c)) {
      free_pos_[c] = static_cast<std::int64_t>(free_cols_.size());
      free_cols_.push_back(c);
    }
  }
}

Vec QuotientSpace::project(const Vec& ambient) const {
  Vec r = echelon_.reduce(ambient);
  std::vector<Entry> out;
  out.reserve(r.nnz());
  for (const auto& e : r.entries()) out.push_back({static_cast<std::size_t>(free_pos_[e.index]), e.value});
  return Vec::from_entries(quotient_dim(), std::move(out));
}

Vec QuotientSpace::section(const Vec& q) const {
  if (q.dim() != quotient_dim()) throw DimensionMismatch("section: vector is not in the quotient");
  std::vector<Entry> out;
  out.reserve(q.nnz());
  for (const auto& e : q.entries()) out.push_back({free_cols_[e.index], e.value});
  return Vec::from_entries(ambient_dim(), std::move(out));
}

LinMap QuotientSpace::project_map() const {
  return LinMap::from_columns(ambient_dim(), quotient_dim(),
                              [&](std::size_t j) { return project(Vec::basis(ambient_dim(), j)); });
}

LinMap QuotientSpace::section_map() const {
  return LinMap::from_columns(quotient_dim(), ambient_dim(),
                              [&](std::size_t j) { return Vec::basis(ambient_dim(), free_cols_[j]); });
}

}  // namespace hopfoid
