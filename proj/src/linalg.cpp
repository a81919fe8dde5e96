#include "hopfoid/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

// Merge two sorted entry lists as a + c*b.
std::vector<Entry> merge_scaled(const std::vector<Entry>& a, const std::vector<Entry>& b,
                                const Rational& c) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->index < ib->index)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->index < ia->index) {
      out.push_back({ib->index, c * ib->value});
      ++ib;
    } else {
      Rational v = ia->value + c * ib->value;
      if (v != 0) out.push_back({ia->index, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Vec Vec::basis(std::size_t dim, std::size_t i, const Rational& coeff) {
  if (i >= dim) throw DimensionMismatch("basis index out of range");
  Vec v(dim);
  if (coeff != 0) v.entries_.push_back({i, coeff});
  return v;
}

Vec Vec::from_dense(std::span<const Rational> values) {
  Vec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) v.entries_.push_back({i, values[i]});
  }
  return v;
}

Vec Vec::from_entries(std::size_t dim, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  Vec v(dim);
  for (auto& e : entries) {
    if (e.index >= dim) throw DimensionMismatch("vector entry index out of range");
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
    } else {
      v.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.value == 0; });
  return v;
}

Rational Vec::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t idx) { return e.index < idx; });
  if (it != entries_.end() && it->index == i) return it->value;
  return 0;
}

std::vector<Rational> Vec::to_dense() const {
  std::vector<Rational> out(dim_);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

void Vec::add_scaled(const Vec& other, const Rational& c) {
  if (other.dim_ != dim_) throw DimensionMismatch("vector dimensions differ");
  if (c == 0 || other.is_zero()) return;
  entries_ = merge_scaled(entries_, other.entries_, c);
}

Vec& Vec::operator+=(const Vec& other) {
  add_scaled(other, 1);
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  add_scaled(other, -1);
  return *this;
}

Vec& Vec::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.value *= c;
  }
  return *this;
}

void VecBuilder::add(std::size_t index, const Rational& value) {
  if (value != 0) pending_.push_back({index, value});
}

void VecBuilder::add(const Vec& v, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& e : v.entries()) pending_.push_back({e.index, scale * e.value});
}

Vec VecBuilder::build() && { return Vec::from_entries(dim_, std::move(pending_)); }

TensorIndex::TensorIndex(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("tensor index needs at least one factor");
  for (auto d : dims_) size_ *= d;
}

std::size_t TensorIndex::flat(std::span<const std::size_t> multi) const {
  if (multi.size() != dims_.size()) throw DimensionMismatch("multi-index arity mismatch");
  std::size_t f = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (multi[k] >= dims_[k]) throw DimensionMismatch("multi-index component out of range");
    f = f * dims_[k] + multi[k];
  }
  return f;
}

std::vector<std::size_t> TensorIndex::split(std::size_t flat) const {
  if (flat >= size_) throw DimensionMismatch("flat index out of range");
  std::vector<std::size_t> multi(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    multi[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return multi;
}

Vec tensor(const Vec& a, const Vec& b) {
  Vec out(a.dim() * b.dim());
  std::vector<Entry> entries;
  entries.reserve(a.nnz() * b.nnz());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      entries.push_back({x.index * b.dim() + y.index, x.value * y.value});
    }
  }
  // Row-major order of (i, j) with sorted inputs is already sorted.
  return Vec::from_entries(a.dim() * b.dim(), std::move(entries));
}

Vec tensor(const Vec& a, const Vec& b, const Vec& c) { return tensor(tensor(a, b), c); }

LinMap::LinMap(std::size_t src_dim, std::size_t dst_dim)
    : src_dim_(src_dim), dst_dim_(dst_dim), columns_(src_dim, Vec(dst_dim)) {}

LinMap::LinMap(std::size_t src_dim, std::size_t dst_dim, std::vector<Vec> columns)
    : src_dim_(src_dim), dst_dim_(dst_dim), columns_(std::move(columns)) {
  if (columns_.size() != src_dim_) throw DimensionMismatch("column count differs from source dimension");
  for (const auto& c : columns_) {
    if (c.dim() != dst_dim_) throw DimensionMismatch("column dimension differs from target dimension");
  }
}

LinMap LinMap::identity(std::size_t n) {
  LinMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = Vec::basis(n, i);
  return m;
}

LinMap LinMap::from_columns(std::size_t src_dim, std::size_t dst_dim,
                            const std::function<Vec(std::size_t)>& column_of) {
  std::vector<Vec> cols;
  cols.reserve(src_dim);
  for (std::size_t j = 0; j < src_dim; ++j) cols.push_back(column_of(j));
  return LinMap(src_dim, dst_dim, std::move(cols));
}

void LinMap::set_column(std::size_t j, Vec v) {
  if (j >= src_dim_ || v.dim() != dst_dim_) throw DimensionMismatch("set_column out of range");
  columns_[j] = std::move(v);
}

Vec LinMap::apply(const Vec& v) const {
  if (v.dim() != src_dim_) throw DimensionMismatch("apply: vector dimension differs from source dimension");
  if (v.nnz() == 1) {
    return v.entries().front().value * columns_[v.entries().front().index];
  }
  VecBuilder out(dst_dim_);
  for (const auto& e : v.entries()) out.add(columns_[e.index], e.value);
  return std::move(out).build();
}

std::vector<Vec> LinMap::rows() const {
  std::vector<std::vector<Entry>> acc(dst_dim_);
  for (std::size_t j = 0; j < src_dim_; ++j) {
    for (const auto& e : columns_[j].entries()) acc[e.index].push_back({j, e.value});
  }
  std::vector<Vec> out;
  out.reserve(dst_dim_);
  for (auto& r : acc) out.push_back(Vec::from_entries(src_dim_, std::move(r)));
  return out;
}

LinMap compose(const LinMap& outer, const LinMap& inner) {
  if (outer.src_dim() != inner.dst_dim()) throw DimensionMismatch("compose: inner dimensions differ");
  return LinMap::from_columns(inner.src_dim(), outer.dst_dim(),
                              [&](std::size_t j) { return outer.apply(inner.column(j)); });
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  if (a.src_dim() != b.src_dim() || a.dst_dim() != b.dst_dim()) throw DimensionMismatch("map sum shape");
  return LinMap::from_columns(a.src_dim(), a.dst_dim(),
                              [&](std::size_t j) { return a.column(j) + b.column(j); });
}

LinMap operator-(const LinMap& a, const LinMap& b) {
  if (a.src_dim() != b.src_dim() || a.dst_dim() != b.dst_dim()) throw DimensionMismatch("map difference shape");
  return LinMap::from_columns(a.src_dim(), a.dst_dim(),
                              [&](std::size_t j) { return a.column(j) - b.column(j); });
}

LinMap tensor(const LinMap& a, const LinMap& b) {
  return LinMap::from_columns(a.src_dim() * b.src_dim(), a.dst_dim() * b.dst_dim(), [&](std::size_t j) {
    return tensor(a.column(j / b.src_dim()), b.column(j % b.src_dim()));
  });
}

Vec apply_left(const LinMap& f, const Vec& v, std::size_t right_dim) {
  if (v.dim() != f.src_dim() * right_dim) throw DimensionMismatch("apply_left: dimension mismatch");
  VecBuilder out(f.dst_dim() * right_dim);
  for (const auto& e : v.entries()) {
    const std::size_t p = e.index / right_dim;
    const std::size_t q = e.index % right_dim;
    for (const auto& x : f.column(p).entries()) out.add(x.index * right_dim + q, e.value * x.value);
  }
  return std::move(out).build();
}

Vec apply_right(const LinMap& f, const Vec& v, std::size_t left_dim) {
  if (v.dim() != left_dim * f.src_dim()) throw DimensionMismatch("apply_right: dimension mismatch");
  VecBuilder out(left_dim * f.dst_dim());
  for (const auto& e : v.entries()) {
    const std::size_t p = e.index / f.src_dim();
    const std::size_t q = e.index % f.src_dim();
    for (const auto& x : f.column(q).entries()) out.add(p * f.dst_dim() + x.index, e.value * x.value);
  }
  return std::move(out).build();
}

LinMap swap_map(std::size_t left_dim, std::size_t right_dim) {
  return LinMap::from_columns(left_dim * right_dim, left_dim * right_dim, [&](std::size_t j) {
    const std::size_t i = j / right_dim;
    const std::size_t k = j % right_dim;
    return Vec::basis(left_dim * right_dim, k * left_dim + i);
  });
}

}  // namespace hopfoid
