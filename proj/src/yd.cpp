#include "hopfoid/yd.hpp"

#include "hopfoid/errors.hpp"

namespace hopfoid {

Vec LeftRightYD::act(const Vec& h, const Vec& a) const {
  VecBuilder out(dim());
  for (const auto& x : h.entries()) {
    for (const auto& y : a.entries()) out.add(act(x.index, y.index), x.value * y.value);
  }
  return std::move(out).build();
}

void LeftRightYD::check_shapes() const {
  alg.check_shapes();
  if (action.src_dim() != hopf.dim() * dim() || action.dst_dim() != dim()) throw DimensionMismatch("left action shape");
  if (coaction.src_dim() != dim() || coaction.dst_dim() != dim() * hopf.dim()) {
    throw DimensionMismatch("right coaction shape");
  }
}

Vec RightLeftYD::act(const Vec& a, const Vec& h) const {
  VecBuilder out(dim());
  for (const auto& x : a.entries()) {
    for (const auto& y : h.entries()) out.add(act(x.index, y.index), x.value * y.value);
  }
  return std::move(out).build();
}

void RightLeftYD::check_shapes() const {
  alg.check_shapes();
  if (action.src_dim() != dim() * hopf.dim() || action.dst_dim() != dim()) throw DimensionMismatch("right action shape");
  if (coaction.src_dim() != dim() || coaction.dst_dim() != hopf.dim() * dim()) {
    throw DimensionMismatch("left coaction shape");
  }
}

// ---- left-right ----

CheckReport verify_module_structure(const LeftRightYD& yd, const VerifyOptions& options) {
  return guarded_check("module", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& H = yd.hopf;
    const auto& L = yd.alg;
    const std::size_t dh = H.dim(), dl = yd.dim();
    for (std::size_t g = 0; g < dh; ++g) {
      for (std::size_t h = 0; h < dh; ++h) {
        for (std::size_t a = 0; a < dl; ++a) {
          b.expect_equal({g, h, a}, yd.act(H.product(g, h), L.basis(a)), yd.act(H.basis(g), yd.act(h, a)));
        }
      }
    }
    for (std::size_t a = 0; a < dl; ++a) b.expect_equal({a}, yd.act(H.one(), L.basis(a)), L.basis(a));
    for (std::size_t h = 0; h < dh; ++h) {
      const Vec& delta = H.coproduct(h);
      for (std::size_t a = 0; a < dl; ++a) {
        for (std::size_t c = 0; c < dl; ++c) {
          VecBuilder rhs(dl);
          for (const auto& e : delta.entries()) {
            rhs.add(L.multiply(yd.act(e.index / dh, a), yd.act(e.index % dh, c)), e.value);
          }
          b.expect_equal({h, a, c}, yd.act(H.basis(h), L.product(a, c)), std::move(rhs).build());
        }
      }
      b.expect_equal({h}, yd.act(H.basis(h), L.unit), H.counit(h) * L.unit);
    }
  });
}

CheckReport verify_comodule_structure(const LeftRightYD& yd, const VerifyOptions& options) {
  return guarded_check("comodule", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& H = yd.hopf;
    const auto& L = yd.alg;
    const std::size_t dh = H.dim(), dl = yd.dim();
    for (std::size_t a = 0; a < dl; ++a) {
      const Vec& r = yd.coact(a);
      b.expect_equal({a}, apply_left(yd.coaction, r, dh), apply_right(H.coalgebra().comult, r, dl));
      b.expect_equal({a}, apply_right(H.coalgebra().counit, r, dl), L.basis(a));
    }
    // ρ(ab) = a₀b₀ ⊗ b₁a₁
    for (std::size_t a = 0; a < dl; ++a) {
      for (std::size_t c = 0; c < dl; ++c) {
        VecBuilder rhs(dl * dh);
        for (const auto& x : yd.coact(a).entries()) {
          for (const auto& y : yd.coact(c).entries()) {
            rhs.add(tensor(L.product(x.index / dh, y.index / dh), H.product(y.index % dh, x.index % dh)),
                    x.value * y.value);
          }
        }
        b.expect_equal({a, c}, yd.coaction.apply(L.product(a, c)), std::move(rhs).build());
      }
    }
    b.expect_equal({}, yd.coaction.apply(L.unit), tensor(L.unit, H.one()));
  });
}

CheckReport verify_yd_condition(const LeftRightYD& yd, const VerifyOptions& options) {
  return guarded_check("yd condition", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& H = yd.hopf;
    const std::size_t dh = H.dim(), dl = yd.dim();
    // (h₁▷a₀) ⊗ h₂a₁ = (h₂▷a)₀ ⊗ (h₂▷a)₁h₁
    for (std::size_t h = 0; h < dh; ++h) {
      const Vec& delta = H.coproduct(h);
      for (std::size_t a = 0; a < dl; ++a) {
        VecBuilder lhs(dl * dh), rhs(dl * dh);
        for (const auto& d : delta.entries()) {
          const std::size_t h1 = d.index / dh, h2 = d.index % dh;
          for (const auto& r : yd.coact(a).entries()) {
            lhs.add(tensor(yd.act(h1, r.index / dh), H.product(h2, r.index % dh)), d.value * r.value);
          }
          const Vec rho = yd.coaction.apply(yd.act(h2, a));
          for (const auto& r : rho.entries()) {
            rhs.add(tensor(Vec::basis(dl, r.index / dh), H.product(r.index % dh, h1)), d.value * r.value);
          }
        }
        b.expect_equal({h, a}, std::move(lhs).build(), std::move(rhs).build());
      }
    }
  });
}

CheckReport verify_braided_commutativity(const LeftRightYD& yd, const VerifyOptions& options) {
  return guarded_check("braided commutativity", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& L = yd.alg;
    const std::size_t dh = yd.hopf.dim(), dl = yd.dim();
    // x₀(x₁▷a) = ax
    for (std::size_t x = 0; x < dl; ++x) {
      for (std::size_t a = 0; a < dl; ++a) {
        VecBuilder lhs(dl);
        for (const auto& r : yd.coact(x).entries()) {
          lhs.add(L.multiply(L.basis(r.index / dh), yd.act(r.index % dh, a)), r.value);
        }
        b.expect_equal({x, a}, std::move(lhs).build(), L.product(a, x));
      }
    }
  });
}

// ---- right-left ----

CheckReport verify_module_structure(const RightLeftYD& yd, const VerifyOptions& options) {
  return guarded_check("module", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& H = yd.hopf;
    const auto& R = yd.alg;
    const std::size_t dh = H.dim(), dr = yd.dim();
    for (std::size_t a = 0; a < dr; ++a) {
      for (std::size_t g = 0; g < dh; ++g) {
        for (std::size_t h = 0; h < dh; ++h) {
          b.expect_equal({a, g, h}, yd.act(R.basis(a), H.product(g, h)), yd.act(yd.act(a, g), H.basis(h)));
        }
      }
      b.expect_equal({a}, yd.act(R.basis(a), H.one()), R.basis(a));
    }
    for (std::size_t h = 0; h < dh; ++h) {
      const Vec& delta = H.coproduct(h);
      for (std::size_t a = 0; a < dr; ++a) {
        for (std::size_t c = 0; c < dr; ++c) {
          VecBuilder rhs(dr);
          for (const auto& e : delta.entries()) {
            rhs.add(R.multiply(yd.act(a, e.index / dh), yd.act(c, e.index % dh)), e.value);
          }
          b.expect_equal({a, c, h}, yd.act(R.product(a, c), H.basis(h)), std::move(rhs).build());
        }
      }
      b.expect_equal({h}, yd.act(R.unit, H.basis(h)), H.counit(h) * R.unit);
    }
  });
}

CheckReport verify_comodule_structure(const RightLeftYD& yd, const VerifyOptions& options) {
  return guarded_check("comodule", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& H = yd.hopf;
    const auto& R = yd.alg;
    const std::size_t dh = H.dim(), dr = yd.dim();
    for (std::size_t a = 0; a < dr; ++a) {
      const Vec& l = yd.coact(a);
      b.expect_equal({a}, apply_right(yd.coaction, l, dh), apply_left(H.coalgebra().comult, l, dr));
      b.expect_equal({a}, apply_left(H.coalgebra().counit, l, dr), R.basis(a));
    }
    // λ(ab) = b₋₁a₋₁ ⊗ a₀b₀
    for (std::size_t a = 0; a < dr; ++a) {
      for (std::size_t c = 0; c < dr; ++c) {
        VecBuilder rhs(dh * dr);
        for (const auto& x : yd.coact(a).entries()) {
          for (const auto& y : yd.coact(c).entries()) {
            rhs.add(tensor(H.product(y.index / dr, x.index / dr), R.product(x.index % dr, y.index % dr)),
                    x.value * y.value);
          }
        }
        b.expect_equal({a, c}, yd.coaction.apply(R.product(a, c)), std::move(rhs).build());
      }
    }
    b.expect_equal({}, yd.coaction.apply(R.unit), tensor(H.one(), R.unit));
  });
}

CheckReport verify_yd_condition(const RightLeftYD& yd, const VerifyOptions& options) {
  return guarded_check("yd condition", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& H = yd.hopf;
    const std::size_t dh = H.dim(), dr = yd.dim();
    // a₋₁h₁ ⊗ (a₀◁h₂) = h₂(a◁h₁)₋₁ ⊗ (a◁h₁)₀
    for (std::size_t h = 0; h < dh; ++h) {
      const Vec& delta = H.coproduct(h);
      for (std::size_t a = 0; a < dr; ++a) {
        VecBuilder lhs(dh * dr), rhs(dh * dr);
        for (const auto& d : delta.entries()) {
          const std::size_t h1 = d.index / dh, h2 = d.index % dh;
          for (const auto& l : yd.coact(a).entries()) {
            lhs.add(tensor(H.product(l.index / dr, h1), yd.act(l.index % dr, h2)), d.value * l.value);
          }
          const Vec lam = yd.coaction.apply(yd.act(a, h1));
          for (const auto& l : lam.entries()) {
            rhs.add(tensor(H.product(h2, l.index / dr), Vec::basis(dr, l.index % dr)), d.value * l.value);
          }
        }
        b.expect_equal({h, a}, std::move(lhs).build(), std::move(rhs).build());
      }
    }
  });
}

CheckReport verify_braided_commutativity(const RightLeftYD& yd, const VerifyOptions& options) {
  return guarded_check("braided commutativity", options, [&](CheckBuilder& b) {
    yd.check_shapes();
    const auto& R = yd.alg;
    const std::size_t dr = yd.dim();
    // (a◁y₋₁)y₀ = ya
    for (std::size_t y = 0; y < dr; ++y) {
      for (std::size_t a = 0; a < dr; ++a) {
        VecBuilder lhs(dr);
        for (const auto& l : yd.coact(y).entries()) {
          lhs.add(R.multiply(yd.act(a, l.index / dr), R.basis(l.index % dr)), l.value);
        }
        b.expect_equal({y, a}, std::move(lhs).build(), R.product(y, a));
      }
    }
  });
}

CheckReport validate_yd(const LeftRightYD& yd, const VerifyOptions& options) {
  return aggregate("left yd", {verify_algebra(yd.alg, options), verify_module_structure(yd, options),
                               verify_comodule_structure(yd, options), verify_yd_condition(yd, options),
                               verify_braided_commutativity(yd, options)});
}

CheckReport validate_yd(const RightLeftYD& yd, const VerifyOptions& options) {
  return aggregate("right yd", {verify_algebra(yd.alg, options), verify_module_structure(yd, options),
                                verify_comodule_structure(yd, options), verify_yd_condition(yd, options),
                                verify_braided_commutativity(yd, options)});
}

}  // namespace hopfoid
