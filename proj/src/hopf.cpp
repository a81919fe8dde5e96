#include "hopfoid/hopf.hpp"

#include "hopfoid/echelon.hpp"
#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

// Product in A ⊗ B without materializing the tensor algebra table.
Vec multiply_tensor(const FinAlgebra& a, const FinAlgebra& b, const Vec& x, const Vec& y) {
  const std::size_t db = b.dim();
  VecBuilder out(a.dim() * db);
  for (const auto& ex : x.entries()) {
    for (const auto& ey : y.entries()) {
      const Rational c = ex.value * ey.value;
      out.add(tensor(a.product(ex.index / db, ey.index / db), b.product(ex.index % db, ey.index % db)), c);
    }
  }
  return std::move(out).build();
}

Vec scalar(const Rational& c) { return Vec::basis(1, 0, c); }

}  // namespace

Vec FinAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw DimensionMismatch("multiply: operand dimension");
  if (a.nnz() == 1 && b.nnz() == 1) {
    return (a.entries()[0].value * b.entries()[0].value) * product(a.entries()[0].index, b.entries()[0].index);
  }
  VecBuilder out(dim());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) out.add(product(x.index, y.index), x.value * y.value);
  }
  return std::move(out).build();
}

void FinAlgebra::check_shapes() const {
  const std::size_t d = dim();
  if (mult.src_dim() != d * d || mult.dst_dim() != d) throw DimensionMismatch("multiplication table shape");
  if (unit.dim() != d) throw DimensionMismatch("unit vector dimension");
}

void FinCoalgebra::check_shapes() const {
  const std::size_t d = dim();
  if (comult.dst_dim() != d * d) throw DimensionMismatch("comultiplication shape");
  if (counit.src_dim() != d || counit.dst_dim() != 1) throw DimensionMismatch("counit shape");
}

FinHopf::FinHopf(FinAlgebra algebra, FinCoalgebra coalgebra, LinMap antipode)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)), antipode_(std::move(antipode)) {
  algebra_.check_shapes();
  coalgebra_.check_shapes();
  if (coalgebra_.dim() != algebra_.dim()) throw DimensionMismatch("algebra and coalgebra dimensions differ");
  if (antipode_.src_dim() != dim() || antipode_.dst_dim() != dim()) throw DimensionMismatch("antipode shape");
  antipode_sq_ = compose(antipode_, antipode_);
}

Rational FinHopf::counit(const Vec& v) const { return coalgebra_.counit.apply(v).at(0); }

CheckReport verify_algebra(const FinAlgebra& a, const VerifyOptions& options) {
  return guarded_check("algebra", options, [&](CheckBuilder& b) {
    a.check_shapes();
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vec& ij = a.product(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          b.expect_equal({i, j, k}, a.multiply(ij, a.basis(k)), a.multiply(a.basis(i), a.product(j, k)));
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      b.expect_equal({i}, a.multiply(a.unit, a.basis(i)), a.basis(i));
      b.expect_equal({i}, a.multiply(a.basis(i), a.unit), a.basis(i));
    }
  });
}

CheckReport verify_coalgebra(const FinCoalgebra& c, const VerifyOptions& options) {
  return guarded_check("coalgebra", options, [&](CheckBuilder& b) {
    c.check_shapes();
    const std::size_t d = c.dim();
    for (std::size_t i = 0; i < d; ++i) {
      const Vec& delta = c.comult.column(i);
      b.expect_equal({i}, apply_left(c.comult, delta, d), apply_right(c.comult, delta, d));
      const Vec e_i = Vec::basis(d, i);
      b.expect_equal({i}, apply_left(c.counit, delta, d), e_i);
      b.expect_equal({i}, apply_right(c.counit, delta, d), e_i);
    }
  });
}

CheckReport verify_bialgebra(const FinHopf& h, const VerifyOptions& options) {
  return guarded_check("bialgebra", options, [&](CheckBuilder& b) {
    const std::size_t d = h.dim();
    const auto& alg = h.algebra();
    const auto& comult = h.coalgebra().comult;
    const auto& counit = h.coalgebra().counit;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vec& ij = h.product(i, j);
        b.expect_equal({i, j}, comult.apply(ij), multiply_tensor(alg, alg, h.coproduct(i), h.coproduct(j)));
        b.expect_equal({i, j}, counit.apply(ij), scalar(h.counit(i) * h.counit(j)));
      }
    }
    b.expect_equal({}, comult.apply(h.one()), tensor(h.one(), h.one()));
    b.expect_equal({}, counit.apply(h.one()), scalar(1));
  });
}

CheckReport verify_antipode(const FinHopf& h, const VerifyOptions& options) {
  return guarded_check("antipode", options, [&](CheckBuilder& b) {
    const std::size_t d = h.dim();
    const auto& mult = h.algebra().mult;
    for (std::size_t i = 0; i < d; ++i) {
      const Vec& delta = h.coproduct(i);
      const Vec rhs = h.counit(i) * h.one();
      b.expect_equal({i}, mult.apply(apply_left(h.antipode(), delta, d)), rhs);
      b.expect_equal({i}, mult.apply(apply_right(h.antipode(), delta, d)), rhs);
    }
  });
}

CheckReport verify_antipode_antihom(const FinHopf& h, const VerifyOptions& options) {
  auto r = verify_antihomomorphism("antipode antihomomorphism", h.algebra(), h.algebra(), h.antipode(), options);
  return r;
}

CheckReport verify_antipode_invertible(const FinHopf& h, const VerifyOptions& options) {
  return guarded_check("antipode invertible", options, [&](CheckBuilder& b) {
    auto inv = inverse(h.antipode());
    if (!inv) {
      b.fail_with_note("antipode matrix is singular");
      return;
    }
    const auto id = LinMap::identity(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
      b.expect_equal({i}, h.antipode().apply(inv->column(i)), id.column(i));
    }
  });
}

CheckReport validate_hopf(const FinHopf& h, const VerifyOptions& options) {
  return aggregate("hopf", {verify_algebra(h.algebra(), options), verify_coalgebra(h.coalgebra(), options),
                            verify_bialgebra(h, options), verify_antipode(h, options),
                            verify_antipode_antihom(h, options), verify_antipode_invertible(h, options)});
}

LinMap antipode_inverse(const FinHopf& h) {
  auto inv = inverse(h.antipode());
  if (!inv) throw AntipodeNotInvertible("antipode matrix is singular");
  return *std::move(inv);
}

CheckReport verify_homomorphism(std::string name, const FinAlgebra& src, const FinAlgebra& dst, const LinMap& f,
                                const VerifyOptions& options) {
  return guarded_check(std::move(name), options, [&](CheckBuilder& b) {
    if (f.src_dim() != src.dim() || f.dst_dim() != dst.dim()) throw DimensionMismatch("homomorphism shape");
    for (std::size_t i = 0; i < src.dim(); ++i) {
      for (std::size_t j = 0; j < src.dim(); ++j) {
        b.expect_equal({i, j}, f.apply(src.product(i, j)), dst.multiply(f.column(i), f.column(j)));
      }
    }
    b.expect_equal({}, f.apply(src.unit), dst.unit);
  });
}

CheckReport verify_antihomomorphism(std::string name, const FinAlgebra& src, const FinAlgebra& dst,
                                    const LinMap& f, const VerifyOptions& options) {
  return guarded_check(std::move(name), options, [&](CheckBuilder& b) {
    if (f.src_dim() != src.dim() || f.dst_dim() != dst.dim()) throw DimensionMismatch("antihomomorphism shape");
    for (std::size_t i = 0; i < src.dim(); ++i) {
      for (std::size_t j = 0; j < src.dim(); ++j) {
        b.expect_equal({i, j}, f.apply(src.product(i, j)), dst.multiply(f.column(j), f.column(i)));
      }
    }
    b.expect_equal({}, f.apply(src.unit), dst.unit);
  });
}

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  FinAlgebra t;
  for (const auto& x : a.labels) {
    for (const auto& y : b.labels) t.labels.push_back(x + "⊗" + y);
  }
  const std::size_t d = t.dim();
  t.mult = LinMap::from_columns(d * d, d, [&](std::size_t j) {
    return multiply_tensor(a, b, Vec::basis(d, j / d), Vec::basis(d, j % d));
  });
  t.unit = tensor(a.unit, b.unit);
  return t;
}

FinAlgebra opposite(const FinAlgebra& a) {
  FinAlgebra o;
  o.labels = a.labels;
  const std::size_t d = a.dim();
  o.mult = LinMap::from_columns(d * d, d, [&](std::size_t j) { return a.product(j % d, j / d); });
  o.unit = a.unit;
  return o;
}

}  // namespace hopfoid
