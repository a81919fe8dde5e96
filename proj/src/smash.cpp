#include "hopfoid/smash.hpp"

#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

std::vector<std::string> product_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + "♯" + y);
  }
  return out;
}

}  // namespace

SmashAlgebra build_smash_lh(const LeftRightYD& yd) {
  yd.check_shapes();
  const auto& H = yd.hopf;
  const auto& L = yd.alg;
  const std::size_t dh = H.dim(), dl = L.dim(), d = dl * dh;
  SmashAlgebra s;
  s.kind = SmashKind::LH;
  s.dim_first = dl;
  s.dim_second = dh;
  s.total.labels = product_labels(L.labels, H.labels());
  // (a♯h)(a′♯h′) = a(h₁▷a′) ♯ h₂h′
  s.total.mult = LinMap::from_columns(d * d, d, [&](std::size_t j) {
    const std::size_t p = j / d, q = j % d;
    const std::size_t a = p / dh, h = p % dh, a2 = q / dh, h2 = q % dh;
    VecBuilder out(d);
    for (const auto& e : H.coproduct(h).entries()) {
      const Vec left = L.multiply(L.basis(a), yd.act(e.index / dh, a2));
      if (left.is_zero()) continue;
      out.add(tensor(left, H.product(e.index % dh, h2)), e.value);
    }
    return std::move(out).build();
  });
  s.total.unit = tensor(L.unit, H.one());
  s.embed_first = LinMap::from_columns(dl, d, [&](std::size_t a) { return tensor(L.basis(a), H.one()); });
  s.embed_second = LinMap::from_columns(dh, d, [&](std::size_t h) { return tensor(L.unit, H.basis(h)); });
  s.validated = verify_module_structure(yd).passed && verify_algebra(L).passed;
  s.lh_source = std::make_shared<const LeftRightYD>(yd);
  return s;
}

SmashAlgebra build_smash_hr(const RightLeftYD& yd) {
  yd.check_shapes();
  const auto& H = yd.hopf;
  const auto& R = yd.alg;
  const std::size_t dh = H.dim(), dr = R.dim(), d = dh * dr;
  SmashAlgebra s;
  s.kind = SmashKind::HR;
  s.dim_first = dh;
  s.dim_second = dr;
  s.total.labels = product_labels(H.labels(), R.labels);
  // (h♯a)(h′♯a′) = hh′₁ ♯ (a◁h′₂)a′
  s.total.mult = LinMap::from_columns(d * d, d, [&](std::size_t j) {
    const std::size_t p = j / d, q = j % d;
    const std::size_t h = p / dr, a = p % dr, h2 = q / dr, a2 = q % dr;
    VecBuilder out(d);
    for (const auto& e : H.coproduct(h2).entries()) {
      const Vec right = R.multiply(yd.act(a, e.index % dh), R.basis(a2));
      if (right.is_zero()) continue;
      out.add(tensor(H.product(h, e.index / dh), right), e.value);
    }
    return std::move(out).build();
  });
  s.total.unit = tensor(H.one(), R.unit);
  s.embed_first = LinMap::from_columns(dh, d, [&](std::size_t h) { return tensor(H.basis(h), R.unit); });
  s.embed_second = LinMap::from_columns(dr, d, [&](std::size_t a) { return tensor(H.one(), R.basis(a)); });
  s.validated = verify_module_structure(yd).passed && verify_algebra(R).passed;
  s.hr_source = std::make_shared<const RightLeftYD>(yd);
  return s;
}

CheckReport smash_yd_condition(const SmashAlgebra& s, const VerifyOptions& options) {
  return guarded_check("smash yd condition", options, [&](CheckBuilder& b) {
    if (s.kind == SmashKind::LH) {
      const auto& yd = *s.lh_source;
      const auto& H = yd.hopf;
      const std::size_t dh = H.dim(), dl = yd.dim();
      for (std::size_t h = 0; h < dh; ++h) {
        for (std::size_t a = 0; a < dl; ++a) {
          const Vec lhs = s.multiply(s.embed_second.column(h), yd.coact(a));
          VecBuilder rhs(s.dim());
          for (const auto& e : H.coproduct(h).entries()) {
            const Vec rho = yd.coaction.apply(yd.act(e.index % dh, a));
            rhs.add(s.multiply(rho, s.embed_second.column(e.index / dh)), e.value);
          }
          b.expect_equal({h, a}, lhs, std::move(rhs).build());
        }
      }
    } else {
      const auto& yd = *s.hr_source;
      const auto& H = yd.hopf;
      const std::size_t dh = H.dim(), dr = yd.dim();
      for (std::size_t h = 0; h < dh; ++h) {
        for (std::size_t a = 0; a < dr; ++a) {
          const Vec lhs = s.multiply(yd.coact(a), s.embed_first.column(h));
          VecBuilder rhs(s.dim());
          for (const auto& e : H.coproduct(h).entries()) {
            const Vec lam = yd.coaction.apply(yd.act(a, e.index / dh));
            rhs.add(s.multiply(s.embed_first.column(e.index % dh), lam), e.value);
          }
          b.expect_equal({h, a}, lhs, std::move(rhs).build());
        }
      }
    }
  });
}

CheckReport verify_smash_embeddings(const SmashAlgebra& s, const VerifyOptions& options) {
  CheckReport factorization = guarded_check("smash factorization", options, [&](CheckBuilder& b) {
    for (std::size_t i = 0; i < s.dim_first; ++i) {
      for (std::size_t j = 0; j < s.dim_second; ++j) {
        b.expect_equal({i, j}, s.multiply(s.embed_first.column(i), s.embed_second.column(j)), s.basis(i, j));
      }
    }
  });
  const FinAlgebra& first = s.kind == SmashKind::LH ? s.lh_source->alg : s.hr_source->hopf.algebra();
  const FinAlgebra& second = s.kind == SmashKind::LH ? s.lh_source->hopf.algebra() : s.hr_source->alg;
  return aggregate("smash embeddings",
                   {std::move(factorization), verify_homomorphism("first embedding", first, s.total, s.embed_first, options),
                    verify_homomorphism("second embedding", second, s.total, s.embed_second, options)});
}

}  // namespace hopfoid
