#include "hopfoid/scalarext.hpp"

#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

const LeftRightYD& lh_source(const SmashAlgebra& s) {
  if (s.kind != SmashKind::LH || !s.lh_source) throw DimensionMismatch("expected an L♯H smash product");
  return *s.lh_source;
}

const RightLeftYD& hr_source(const SmashAlgebra& s) {
  if (s.kind != SmashKind::HR || !s.hr_source) throw DimensionMismatch("expected an H♯R smash product");
  return *s.hr_source;
}

Bialgebroid assemble(Side side, const FinAlgebra& total, const FinAlgebra& base, LinMap alpha, LinMap beta,
                     const std::function<Vec(std::size_t)>& coproduct_rep, LinMap counit) {
  Bialgebroid b;
  b.side = side;
  b.total = total;
  b.base = base;
  b.source = std::move(alpha);
  b.target = std::move(beta);
  b.counit = std::move(counit);
  b.tensor_over_base =
      std::make_shared<const QuotientSpace>(tensor_over_base(total, base, b.source, b.target, side, false));
  const std::size_t d = total.dim();
  b.coproduct = LinMap::from_columns(d, b.quotient().quotient_dim(),
                                     [&](std::size_t k) { return b.quotient().project(coproduct_rep(k)); });
  return b;
}

// x♯f ↦ x♯f₁ ⊗ 1♯f₂
std::function<Vec(std::size_t)> lh_coproduct(const SmashAlgebra& s) {
  return [&s](std::size_t k) {
    const auto& H = lh_source(s).hopf;
    const std::size_t dh = s.dim_second, x = k / dh, f = k % dh;
    VecBuilder out(s.dim() * s.dim());
    for (const auto& e : H.coproduct(f).entries()) {
      out.add(tensor(s.basis(x, e.index / dh), s.embed_second.column(e.index % dh)), e.value);
    }
    return std::move(out).build();
  };
}

// f♯y ↦ f₁♯1 ⊗ f₂♯y
std::function<Vec(std::size_t)> hr_coproduct(const SmashAlgebra& s) {
  return [&s](std::size_t k) {
    const auto& H = hr_source(s).hopf;
    const std::size_t dh = s.dim_first, dr = s.dim_second, f = k / dr, y = k % dr;
    VecBuilder out(s.dim() * s.dim());
    for (const auto& e : H.coproduct(f).entries()) {
      out.add(tensor(s.embed_first.column(e.index / dh), s.basis(e.index % dh, y)), e.value);
    }
    return std::move(out).build();
  };
}

CheckReport renamed(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

CheckReport antiiso_report(std::string name, const FinAlgebra& src, const FinAlgebra& dst, const LinMap& f,
                           const LinMap& f_inv, const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  parts.push_back(verify_antihomomorphism("antihomomorphism", src, dst, f, options));
  parts.push_back(guarded_check("two-sided inverse", options, [&](CheckBuilder& c) {
    for (const auto& m : {compose(f, f_inv), compose(f_inv, f)}) {
      const auto id = LinMap::identity(m.src_dim());
      for (std::size_t j = 0; j < m.src_dim(); ++j) c.expect_equal({j}, m.column(j), id.column(j));
    }
  }));
  return aggregate(std::move(name), std::move(parts));
}

CheckReport phi_action_report(const PhiCompatPair& p, const VerifyOptions& options) {
  return guarded_check("phi action compatibility", options, [&](CheckBuilder& c) {
    const auto& H = p.left.hopf;
    for (std::size_t f = 0; f < H.dim(); ++f) {
      for (std::size_t x = 0; x < p.left.dim(); ++x) {
        c.expect_equal({f, x}, p.phi.apply(p.left.act(f, x)), p.right.act(p.phi.column(x), H.S(f)));
      }
    }
  });
}

CheckReport phi_coaction_report(const PhiCompatPair& p, const VerifyOptions& options) {
  return guarded_check("phi coaction compatibility", options, [&](CheckBuilder& c) {
    const auto& H = p.left.hopf;
    const std::size_t dh = H.dim();
    for (std::size_t x = 0; x < p.left.dim(); ++x) {
      VecBuilder rhs(dh * p.right.dim());
      for (const auto& e : p.left.coact(x).entries()) {
        rhs.add(tensor(H.S(e.index % dh), p.phi.column(e.index / dh)), e.value);
      }
      c.expect_equal({x}, p.right.coaction.apply(p.phi.column(x)), std::move(rhs).build());
    }
  });
}

CheckReport theta_action_report(const ThetaCompatPair& p, const VerifyOptions& options) {
  return guarded_check("theta action compatibility", options, [&](CheckBuilder& c) {
    const auto& H = p.left.hopf;
    for (std::size_t y = 0; y < p.right.dim(); ++y) {
      for (std::size_t f = 0; f < H.dim(); ++f) {
        c.expect_equal({y, f}, p.theta.apply(p.right.act(y, f)), p.left.act(H.S(f), p.theta.column(y)));
      }
    }
  });
}

CheckReport theta_coaction_report(const ThetaCompatPair& p, const VerifyOptions& options) {
  return guarded_check("theta coaction compatibility", options, [&](CheckBuilder& c) {
    const auto& H = p.left.hopf;
    const std::size_t dr = p.right.dim();
    for (std::size_t y = 0; y < dr; ++y) {
      VecBuilder rhs(p.left.dim() * H.dim());
      for (const auto& e : p.right.coact(y).entries()) {
        rhs.add(tensor(p.theta.column(e.index % dr), H.S(e.index / dr)), e.value);
      }
      c.expect_equal({y}, p.left.coaction.apply(p.theta.column(y)), std::move(rhs).build());
    }
  });
}

CheckReport same_image(std::string name, const LinMap& a, const LinMap& b, const VerifyOptions& options) {
  return guarded_check(std::move(name), options, [&](CheckBuilder& c) {
    if (a.dst_dim() != b.dst_dim()) throw DimensionMismatch("subspaces live in different spaces");
    const auto ia = image_basis(a), ib = image_basis(b);
    c.expect_equal({0}, Vec::basis(1, 0, Rational(static_cast<long>(ia.size()))),
                   Vec::basis(1, 0, Rational(static_cast<long>(ib.size()))));
    for (std::size_t i = 0; i < std::min(ia.size(), ib.size()); ++i) c.expect_equal({i + 1}, ia[i], ib[i]);
  });
}

// (F ⊗ F)(v) for v in V ⊗ V.
Vec apply_both(const LinMap& f, const Vec& v) {
  return apply_left(f, apply_right(f, v, f.src_dim()), f.dst_dim());
}

// iso: the first presentation's total algebra → the second's. Checks that it
// carries every structure map of `a` onto the matching one of `b`.
CheckReport cross_presentation(const SymmetricHopfAlgebroid& a, const SymmetricHopfAlgebroid& b, const LinMap& iso,
                               const std::string& iso_name, const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  parts.push_back(verify_homomorphism(iso_name + " homomorphism", a.left.total, b.left.total, iso, options));
  parts.push_back(verify_maps_equal(iso_name + " alpha_L = alpha'_L", compose(iso, a.left.source), b.left.source,
                                    options));
  parts.push_back(verify_maps_equal(iso_name + " beta_L = beta'_L", compose(iso, a.left.target), b.left.target,
                                    options));
  parts.push_back(verify_maps_equal(iso_name + " alpha_R = alpha'_R", compose(iso, a.right.source),
                                    b.right.source, options));
  parts.push_back(verify_maps_equal(iso_name + " beta_R = beta'_R", compose(iso, a.right.target),
                                    b.right.target, options));
  parts.push_back(verify_maps_equal("eps'_L " + iso_name + " = eps_L", compose(b.left.counit, iso), a.left.counit,
                                    options));
  parts.push_back(verify_maps_equal("eps'_R " + iso_name + " = eps_R", compose(b.right.counit, iso),
                                    a.right.counit, options));
  for (int side = 0; side < 2; ++side) {
    const Bialgebroid& ba = side == 0 ? a.left : a.right;
    const Bialgebroid& bb = side == 0 ? b.left : b.right;
    parts.push_back(guarded_check(std::string("coproduct ") + (side == 0 ? "L" : "R") + " intertwined", options,
                                  [&](CheckBuilder& c) {
                                    for (std::size_t k = 0; k < ba.dim(); ++k) {
                                      const Vec rep = ba.quotient().section(ba.coproduct.column(k));
                                      c.expect_equal({k}, bb.quotient().project(apply_both(iso, rep)),
                                                     bb.coproduct.apply(iso.column(k)));
                                    }
                                  }));
  }
  parts.push_back(verify_maps_equal(iso_name + " tau = tau' " + iso_name, compose(iso, a.tau), compose(b.tau, iso),
                                    options));
  return aggregate("cross presentation", std::move(parts));
}

}  // namespace

Bialgebroid left_scalar_ext(const SmashAlgebra& s) {
  const auto& yd = lh_source(s);
  const std::size_t dl = yd.dim(), dh = yd.hopf.dim();
  LinMap counit = LinMap::from_columns(s.dim(), dl, [&](std::size_t k) {
    return Vec::basis(dl, k / dh, yd.hopf.counit(k % dh));
  });
  return assemble(Side::Left, s.total, yd.alg, s.embed_first, yd.coaction, lh_coproduct(s), std::move(counit));
}

Bialgebroid left_scalar_ext(const LeftRightYD& yd) {
  const SmashAlgebra s = build_smash_lh(yd);
  return left_scalar_ext(s);
}

Bialgebroid right_scalar_ext(const SmashAlgebra& s) {
  const auto& yd = hr_source(s);
  const std::size_t dr = yd.dim();
  LinMap counit = LinMap::from_columns(s.dim(), dr, [&](std::size_t k) {
    return Vec::basis(dr, k % dr, yd.hopf.counit(k / dr));
  });
  return assemble(Side::Right, s.total, yd.alg, s.embed_second, yd.coaction, hr_coproduct(s), std::move(counit));
}

Bialgebroid right_scalar_ext(const RightLeftYD& yd) {
  const SmashAlgebra s = build_smash_hr(yd);
  return right_scalar_ext(s);
}

LinMap bm_tau(const SmashAlgebra& s) {
  const auto& yd = lh_source(s);
  const auto& H = yd.hopf;
  const std::size_t dh = H.dim();
  return LinMap::from_columns(s.dim(), s.dim(), [&](std::size_t k) {
    const std::size_t x = k / dh, f = k % dh;
    VecBuilder out(s.dim());
    for (const auto& e : yd.coact(x).entries()) {
      const Vec h = H.multiply(H.S(f), H.S2(e.index % dh));
      out.add(s.multiply(s.embed_second.apply(h), s.embed_first.column(e.index / dh)), e.value);
    }
    return std::move(out).build();
  });
}

LinMap bm_tau(const LeftRightYD& yd) { return bm_tau(build_smash_lh(yd)); }

LinMap tau_prime(const SmashAlgebra& s) {
  const auto& yd = hr_source(s);
  const auto& H = yd.hopf;
  const std::size_t dr = yd.dim();
  return LinMap::from_columns(s.dim(), s.dim(), [&](std::size_t k) {
    const std::size_t f = k / dr, y = k % dr;
    VecBuilder out(s.dim());
    for (const auto& e : yd.coact(y).entries()) {
      const Vec h = H.multiply(H.S2(e.index / dr), H.S(f));
      out.add(s.multiply(s.embed_second.column(e.index % dr), s.embed_first.apply(h)), e.value);
    }
    return std::move(out).build();
  });
}

LinMap tau_prime(const RightLeftYD& yd) { return tau_prime(build_smash_hr(yd)); }

LinMap tau_inverse(const SmashAlgebra& s) {
  const auto& yd = lh_source(s);
  const LinMap s_inv = antipode_inverse(yd.hopf);
  const std::size_t dh = yd.hopf.dim();
  return LinMap::from_columns(s.dim(), s.dim(), [&](std::size_t k) {
    return s.multiply(s.embed_second.apply(s_inv.column(k % dh)), yd.coact(k / dh));
  });
}

LinMap tau_prime_inverse(const SmashAlgebra& s) {
  const auto& yd = hr_source(s);
  const LinMap s_inv = antipode_inverse(yd.hopf);
  const std::size_t dr = yd.dim();
  return LinMap::from_columns(s.dim(), s.dim(), [&](std::size_t k) {
    return s.multiply(yd.coact(k % dr), s.embed_first.apply(s_inv.column(k / dr)));
  });
}

CheckReport verify_tau_antihom(const SmashAlgebra& s, const LinMap& tau, const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  parts.push_back(verify_antihom_sweep("antihomomorphism sweep", s.total, tau, options));
  parts.push_back(guarded_check("tau(L) commutes with L", options, [&](CheckBuilder& c) {
    for (std::size_t a = 0; a < s.dim_first; ++a) {
      const Vec ta = tau.apply(s.embed_first.column(a));
      for (std::size_t x = 0; x < s.dim_first; ++x) {
        c.expect_equal({a, x}, s.multiply(ta, s.embed_first.column(x)), s.multiply(s.embed_first.column(x), ta));
      }
    }
  }));
  return aggregate("tau antihomomorphism", std::move(parts));
}

CheckReport verify_tau_antihom(const LeftRightYD& yd, const VerifyOptions& options) {
  try {
    const SmashAlgebra s = build_smash_lh(yd);
    return verify_tau_antihom(s, bm_tau(s), options);
  } catch (const Error& e) {
    return guarded_check("tau antihomomorphism", options, [&](CheckBuilder& c) { c.fail_with_note(e.what()); });
  }
}

CheckReport verify_tau_prime_antihom(const SmashAlgebra& s, const LinMap& tp, const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  parts.push_back(verify_antihom_sweep("antihomomorphism sweep", s.total, tp, options));
  parts.push_back(guarded_check("tau'(R) commutes with R", options, [&](CheckBuilder& c) {
    for (std::size_t a = 0; a < s.dim_second; ++a) {
      const Vec ta = tp.apply(s.embed_second.column(a));
      for (std::size_t y = 0; y < s.dim_second; ++y) {
        c.expect_equal({a, y}, s.multiply(ta, s.embed_second.column(y)),
                       s.multiply(s.embed_second.column(y), ta));
      }
    }
  }));
  return aggregate("tau' antihomomorphism", std::move(parts));
}

CheckReport verify_phi_compat(const PhiCompatPair& p, const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  parts.push_back(antiiso_report("phi antiisomorphism", p.left.alg, p.right.alg, p.phi, p.phi_inv, options));
  parts.push_back(phi_action_report(p, options));
  parts.push_back(phi_coaction_report(p, options));
  return aggregate("phi compatibility", std::move(parts));
}

CheckReport verify_theta_compat(const ThetaCompatPair& p, const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  parts.push_back(antiiso_report("theta antiisomorphism", p.right.alg, p.left.alg, p.theta, p.theta_inv, options));
  parts.push_back(theta_action_report(p, options));
  parts.push_back(theta_coaction_report(p, options));
  return aggregate("theta compatibility", std::move(parts));
}

PhiMaps build_maps_phi(const PhiCompatPair& p) {
  const SmashAlgebra lh = build_smash_lh(p.left);
  const SmashAlgebra hr = build_smash_hr(p.right);
  const auto& H = p.left.hopf;
  const std::size_t dh = H.dim(), dr = p.right.dim(), d = lh.dim();
  if (hr.dim() != d) throw DimensionMismatch("L♯H and H♯R differ in dimension");
  PhiMaps m;
  m.Phi = LinMap::from_columns(d, d, [&](std::size_t k) { return tensor(H.S(k % dh), p.phi.column(k / dh)); });
  m.Psi = LinMap::from_columns(d, d, [&](std::size_t k) {
    return hr.multiply(p.right.coaction.apply(p.phi.column(k / dh)), hr.embed_first.column(k % dh));
  });
  m.Psi_inv = LinMap::from_columns(d, d, [&](std::size_t k) {
    const std::size_t f = k / dr, y = k % dr;
    VecBuilder out(d);
    for (const auto& e : p.right.coact(y).entries()) {
      const Vec h = H.multiply(H.basis(f), H.S(e.index / dr));
      out.add(lh.multiply(lh.embed_second.apply(h), lh.embed_first.apply(p.phi_inv.column(e.index % dr))),
              e.value);
    }
    return std::move(out).build();
  });
  const auto id = LinMap::identity(d);
  if (!(compose(m.Psi, m.Psi_inv) == id) || !(compose(m.Psi_inv, m.Psi) == id)) {
    throw NotMutuallyInverse("Psi and its displayed inverse are not mutually inverse");
  }
  return m;
}

CheckReport verify_maps_phi(const PhiCompatPair& p, const PhiMaps& m, const VerifyOptions& options) {
  const SmashAlgebra lh = build_smash_lh(p.left);
  const SmashAlgebra hr = build_smash_hr(p.right);
  const LinMap tau = bm_tau(lh), tp = tau_prime(hr);
  const auto id = LinMap::identity(lh.dim());
  std::vector<CheckReport> parts;
  parts.push_back(verify_maps_equal("psi psi_inv = id", compose(m.Psi, m.Psi_inv), id, options));
  parts.push_back(verify_maps_equal("psi_inv psi = id", compose(m.Psi_inv, m.Psi), id, options));
  parts.push_back(verify_homomorphism("psi homomorphism", lh.total, hr.total, m.Psi, options));
  parts.push_back(verify_antihomomorphism("Phi antihomomorphism", lh.total, hr.total, m.Phi, options));
  parts.push_back(verify_maps_equal("psi tau = Phi", compose(m.Psi, tau), m.Phi, options));
  parts.push_back(verify_maps_equal("tau' psi = Phi", compose(tp, m.Psi), m.Phi, options));
  parts.push_back(same_image("psi(L#1) = im lambda", compose(m.Psi, lh.embed_first), p.right.coaction, options));
  parts.push_back(same_image("psi_inv(1#R) = im rho", compose(m.Psi_inv, hr.embed_second), p.left.coaction, options));
  parts.push_back(verify_invertible("Phi bijective", m.Phi, options));
  parts.push_back(verify_invertible("tau bijective", tau, options));
  parts.push_back(verify_invertible("tau' bijective", tp, options));
  return aggregate("phi maps", std::move(parts));
}

ThetaMaps build_maps_theta(const ThetaCompatPair& p) {
  const SmashAlgebra lh = build_smash_lh(p.left);
  const SmashAlgebra hr = build_smash_hr(p.right);
  const auto& H = p.left.hopf;
  const std::size_t dh = H.dim(), dr = p.right.dim(), d = lh.dim();
  if (hr.dim() != d) throw DimensionMismatch("L♯H and H♯R differ in dimension");
  ThetaMaps m;
  m.Phi_bar = LinMap::from_columns(d, d, [&](std::size_t k) { return tensor(p.theta.column(k % dr), H.S(k / dr)); });
  m.Psi_bar = LinMap::from_columns(d, d, [&](std::size_t k) {
    return lh.multiply(lh.embed_second.column(k / dr), p.left.coaction.apply(p.theta.column(k % dr)));
  });
  m.Psi_bar_inv = LinMap::from_columns(d, d, [&](std::size_t k) {
    const std::size_t x = k / dh, f = k % dh;
    VecBuilder out(d);
    for (const auto& e : p.left.coact(x).entries()) {
      const Vec h = H.multiply(H.S(e.index % dh), H.basis(f));
      out.add(hr.multiply(hr.embed_second.apply(p.theta_inv.column(e.index / dh)), hr.embed_first.apply(h)),
              e.value);
    }
    return std::move(out).build();
  });
  const auto id = LinMap::identity(d);
  if (!(compose(m.Psi_bar, m.Psi_bar_inv) == id) || !(compose(m.Psi_bar_inv, m.Psi_bar) == id)) {
    throw NotMutuallyInverse("Psi-bar and its displayed inverse are not mutually inverse");
  }
  return m;
}

CheckReport verify_maps_theta(const ThetaCompatPair& p, const ThetaMaps& m, const VerifyOptions& options) {
  const SmashAlgebra lh = build_smash_lh(p.left);
  const SmashAlgebra hr = build_smash_hr(p.right);
  const LinMap tau = bm_tau(lh), tp = tau_prime(hr);
  const auto id = LinMap::identity(lh.dim());
  std::vector<CheckReport> parts;
  parts.push_back(verify_maps_equal("psi_bar psi_bar_inv = id", compose(m.Psi_bar, m.Psi_bar_inv), id, options));
  parts.push_back(verify_maps_equal("psi_bar_inv psi_bar = id", compose(m.Psi_bar_inv, m.Psi_bar), id, options));
  parts.push_back(verify_homomorphism("psi_bar homomorphism", hr.total, lh.total, m.Psi_bar, options));
  parts.push_back(verify_antihomomorphism("Phi_bar antihomomorphism", hr.total, lh.total, m.Phi_bar, options));
  parts.push_back(verify_maps_equal("tau psi_bar = Phi_bar", compose(tau, m.Psi_bar), m.Phi_bar, options));
  parts.push_back(verify_maps_equal("psi_bar tau' = Phi_bar", compose(m.Psi_bar, tp), m.Phi_bar, options));
  parts.push_back(same_image("psi_bar(1#R) = im rho", compose(m.Psi_bar, hr.embed_second), p.left.coaction, options));
  parts.push_back(
      same_image("psi_bar_inv(L#1) = im lambda", compose(m.Psi_bar_inv, lh.embed_first), p.right.coaction, options));
  parts.push_back(verify_invertible("Phi_bar bijective", m.Phi_bar, options));
  return aggregate("theta maps", std::move(parts));
}

SymmetricBundle symmetric_hopf_via_phi(const PhiCompatPair& p, const VerifyOptions& options) {
  SymmetricBundle b;
  b.lh = build_smash_lh(p.left);
  b.hr = build_smash_hr(p.right);
  const auto& H = p.left.hopf;
  const auto& L = p.left;
  const auto& R = p.right;
  const std::size_t dh = H.dim(), dl = L.dim(), dr = R.dim(), d = b.lh.dim();
  const SmashAlgebra& lh = b.lh;
  const SmashAlgebra& hr = b.hr;

  // Presentation on L♯H.
  auto& P = b.on_lh;
  P.left = left_scalar_ext(lh);
  LinMap alpha_r = LinMap::from_columns(dr, d, [&](std::size_t y) {
    VecBuilder out(d);
    for (const auto& e : R.coact(y).entries()) {
      out.add(lh.multiply(lh.embed_second.apply(H.S(e.index / dr)), lh.embed_first.apply(p.phi_inv.column(e.index % dr))),
              e.value);
    }
    return std::move(out).build();
  });
  LinMap beta_r = compose(lh.embed_first, p.phi_inv);
  LinMap eps_r = LinMap::from_columns(d, dr, [&](std::size_t k) {
    return R.act(p.phi.column(k / dh), H.basis(k % dh));
  });
  P.right = assemble(Side::Right, lh.total, R.alg, std::move(alpha_r), std::move(beta_r), lh_coproduct(lh),
                     std::move(eps_r));
  P.tau = bm_tau(lh);

  // Presentation on H♯R.
  auto& Q = b.on_hr;
  Q.right = right_scalar_ext(hr);
  LinMap alpha_l = compose(R.coaction, p.phi);
  LinMap beta_l = LinMap::from_columns(dl, d, [&](std::size_t x) {
    VecBuilder out(d);
    for (const auto& e : L.coact(x).entries()) {
      out.add(hr.embed_second.apply(R.act(p.phi.column(e.index / dh), H.basis(e.index % dh))), e.value);
    }
    return std::move(out).build();
  });
  LinMap eps_l = LinMap::from_columns(d, dl, [&](std::size_t k) {
    const std::size_t f = k / dr, y = k % dr;
    VecBuilder out(dl);
    for (const auto& e : R.coact(y).entries()) {
      out.add(L.act(H.multiply(H.basis(f), H.S(e.index / dr)), p.phi_inv.column(e.index % dr)), e.value);
    }
    return std::move(out).build();
  });
  Q.left = assemble(Side::Left, hr.total, L.alg, std::move(alpha_l), std::move(beta_l), hr_coproduct(hr),
                    std::move(eps_l));
  Q.tau = tau_prime(hr);

  std::vector<CheckReport> parts;
  parts.push_back(guarded_check("sections", options, [&](CheckBuilder&) {
    P.gamma_left = canonical_smash_section(P.left, lh);
    P.gamma_right = canonical_smash_section(P.right, lh);
    Q.gamma_left = canonical_smash_section(Q.left, hr);
    Q.gamma_right = canonical_smash_section(Q.right, hr);
  }));
  parts.push_back(guarded_check("maps", options, [&](CheckBuilder&) {
    const PhiMaps m = build_maps_phi(p);
    b.iso = m.Psi;
    b.iso_inv = m.Psi_inv;
  }));
  if (parts.back().passed) parts.push_back(cross_presentation(P, Q, b.iso, "psi", options));
  parts.push_back(verify_maps_equal("phi = eps_R alpha_L", compose(P.right.counit, P.left.source), p.phi, options));
  parts.push_back(
      verify_maps_equal("phi_inv = eps_L beta_R", compose(P.left.counit, P.right.target), p.phi_inv, options));
  b.build = aggregate("phi bundle build", std::move(parts));
  return b;
}

SymmetricBundle symmetric_hopf_via_theta(const ThetaCompatPair& p, const VerifyOptions& options) {
  SymmetricBundle b;
  b.lh = build_smash_lh(p.left);
  b.hr = build_smash_hr(p.right);
  const auto& H = p.left.hopf;
  const auto& L = p.left;
  const auto& R = p.right;
  const std::size_t dh = H.dim(), dl = L.dim(), dr = R.dim(), d = b.lh.dim();
  const SmashAlgebra& lh = b.lh;
  const SmashAlgebra& hr = b.hr;

  auto& P = b.on_lh;
  P.left = left_scalar_ext(lh);
  LinMap alpha_r = compose(L.coaction, p.theta);
  LinMap beta_r = LinMap::from_columns(dr, d, [&](std::size_t y) {
    VecBuilder out(d);
    for (const auto& e : R.coact(y).entries()) {
      out.add(lh.embed_first.apply(L.act(H.basis(e.index / dr), p.theta.column(e.index % dr))), e.value);
    }
    return std::move(out).build();
  });
  LinMap eps_r = LinMap::from_columns(d, dr, [&](std::size_t k) {
    const std::size_t x = k / dh, f = k % dh;
    VecBuilder out(dr);
    for (const auto& e : L.coact(x).entries()) {
      out.add(R.act(p.theta_inv.column(e.index / dh), H.multiply(H.S(e.index % dh), H.basis(f))), e.value);
    }
    return std::move(out).build();
  });
  P.right = assemble(Side::Right, lh.total, R.alg, std::move(alpha_r), std::move(beta_r), lh_coproduct(lh),
                     std::move(eps_r));
  P.tau = bm_tau(lh);

  auto& Q = b.on_hr;
  Q.right = right_scalar_ext(hr);
  LinMap alpha_l = LinMap::from_columns(dl, d, [&](std::size_t x) {
    VecBuilder out(d);
    for (const auto& e : L.coact(x).entries()) {
      out.add(hr.multiply(hr.embed_second.apply(p.theta_inv.column(e.index / dh)),
                          hr.embed_first.apply(H.S(e.index % dh))),
              e.value);
    }
    return std::move(out).build();
  });
  LinMap beta_l = compose(hr.embed_second, p.theta_inv);
  LinMap eps_l = LinMap::from_columns(d, dl, [&](std::size_t k) {
    return L.act(H.basis(k / dr), p.theta.column(k % dr));
  });
  Q.left = assemble(Side::Left, hr.total, L.alg, std::move(alpha_l), std::move(beta_l), hr_coproduct(hr),
                    std::move(eps_l));
  Q.tau = tau_prime(hr);

  std::vector<CheckReport> parts;
  parts.push_back(guarded_check("sections", options, [&](CheckBuilder&) {
    P.gamma_left = canonical_smash_section(P.left, lh);
    P.gamma_right = canonical_smash_section(P.right, lh);
    Q.gamma_left = canonical_smash_section(Q.left, hr);
    Q.gamma_right = canonical_smash_section(Q.right, hr);
  }));
  parts.push_back(guarded_check("maps", options, [&](CheckBuilder&) {
    const ThetaMaps m = build_maps_theta(p);
    b.iso = m.Psi_bar_inv;
    b.iso_inv = m.Psi_bar;
  }));
  if (parts.back().passed) parts.push_back(cross_presentation(P, Q, b.iso, "psi_bar_inv", options));
  parts.push_back(verify_maps_equal("theta = eps_L alpha_R", compose(P.left.counit, P.right.source), p.theta,
                                    options));
  parts.push_back(verify_maps_equal("theta = eps'_L alpha'_R", compose(Q.left.counit, Q.right.source), p.theta,
                                    options));
  parts.push_back(verify_maps_equal("theta_inv = eps_R beta_L", compose(P.right.counit, P.left.target),
                                    p.theta_inv, options));
  parts.push_back(verify_maps_equal("theta_inv = eps'_R beta'_L", compose(Q.right.counit, Q.left.target),
                                    p.theta_inv, options));
  b.build = aggregate("theta bundle build", std::move(parts));
  return b;
}

CheckReport verify_bundle(const SymmetricBundle& b, const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  parts.push_back(b.build);
  if (!b.build.passed) return aggregate("symmetric bundle", std::move(parts));
  parts.push_back(renamed(verify_symmetric_hopf(b.on_lh, options), "presentation L#H"));
  parts.push_back(renamed(verify_symmetric_hopf(b.on_hr, options), "presentation H#R"));
  return aggregate("symmetric bundle", std::move(parts));
}

CheckReport compare_bundles(std::string name, const SymmetricBundle& a, const SymmetricBundle& b,
                            const VerifyOptions& options) {
  std::vector<CheckReport> parts;
  auto compare_bialgebroid = [&](const std::string& tag, const Bialgebroid& x, const Bialgebroid& y) {
    parts.push_back(verify_maps_equal(tag + " source", x.source, y.source, options));
    parts.push_back(verify_maps_equal(tag + " target", x.target, y.target, options));
    parts.push_back(verify_maps_equal(tag + " counit", x.counit, y.counit, options));
    parts.push_back(guarded_check(tag + " coproduct", options, [&](CheckBuilder& c) {
      if (x.quotient().quotient_dim() != y.quotient().quotient_dim()) {
        throw DimensionMismatch("balanced tensors differ in dimension");
      }
      for (std::size_t k = 0; k < x.dim(); ++k) {
        c.expect_equal({k}, x.coproduct.column(k), x.quotient().project(y.quotient().section(y.coproduct.column(k))));
      }
    }));
  };
  compare_bialgebroid("L#H left", a.on_lh.left, b.on_lh.left);
  compare_bialgebroid("L#H right", a.on_lh.right, b.on_lh.right);
  compare_bialgebroid("H#R left", a.on_hr.left, b.on_hr.left);
  compare_bialgebroid("H#R right", a.on_hr.right, b.on_hr.right);
  parts.push_back(verify_maps_equal("L#H tau", a.on_lh.tau, b.on_lh.tau, options));
  parts.push_back(verify_maps_equal("H#R tau", a.on_hr.tau, b.on_hr.tau, options));
  return aggregate(std::move(name), std::move(parts));
}

ThetaCompatPair theta_from_phi(const PhiCompatPair& p) {
  const auto& H = p.left.hopf;
  const std::size_t dh = H.dim(), dl = p.left.dim(), dr = p.right.dim();
  ThetaCompatPair t{p.left, p.right, {}, {}};
  t.theta = LinMap::from_columns(dr, dl, [&](std::size_t y) {
    VecBuilder out(dl);
    for (const auto& e : p.right.coact(y).entries()) {
      out.add(p.left.act(H.S(e.index / dr), p.phi_inv.column(e.index % dr)), e.value);
    }
    return std::move(out).build();
  });
  t.theta_inv = LinMap::from_columns(dl, dr, [&](std::size_t x) {
    VecBuilder out(dr);
    for (const auto& e : p.left.coact(x).entries()) {
      out.add(p.right.act(p.phi.column(e.index / dh), H.basis(e.index % dh)), e.value);
    }
    return std::move(out).build();
  });
  return t;
}

PhiCompatPair phi_from_theta(const ThetaCompatPair& t) {
  const auto& H = t.left.hopf;
  const std::size_t dh = H.dim(), dl = t.left.dim(), dr = t.right.dim();
  PhiCompatPair p{t.left, t.right, {}, {}};
  p.phi = LinMap::from_columns(dl, dr, [&](std::size_t x) {
    VecBuilder out(dr);
    for (const auto& e : t.left.coact(x).entries()) {
      out.add(t.right.act(t.theta_inv.column(e.index / dh), H.S(e.index % dh)), e.value);
    }
    return std::move(out).build();
  });
  p.phi_inv = LinMap::from_columns(dr, dl, [&](std::size_t y) {
    VecBuilder out(dl);
    for (const auto& e : t.right.coact(y).entries()) {
      out.add(t.left.act(H.basis(e.index / dr), t.theta.column(e.index % dr)), e.value);
    }
    return std::move(out).build();
  });
  return p;
}

namespace {

// Algebra structure on the codomain of `to` making `to` an antiisomorphism
// with inverse `from`: u·v = to(from(v)·from(u)).
FinAlgebra transported_opposite(const FinAlgebra& a, const LinMap& to, const LinMap& from,
                                std::vector<std::string> labels) {
  const std::size_t n = to.dst_dim();
  if (to.src_dim() != a.dim() || from.src_dim() != n || from.dst_dim() != a.dim()) {
    throw DimensionMismatch("pairing isomorphism shape");
  }
  FinAlgebra out;
  out.labels = labels.empty() ? a.labels : std::move(labels);
  if (out.labels.size() != n) throw DimensionMismatch("pairing labels");
  out.mult = LinMap::from_columns(n * n, n, [&](std::size_t j) {
    return to.apply(a.multiply(from.column(j % n), from.column(j / n)));
  });
  out.unit = to.apply(a.unit);
  return out;
}

}  // namespace

RightLeftYD paired_yd_from_left(const LeftRightYD& yd, const PairingIso& iso) {
  const auto& H = yd.hopf;
  const LinMap s_inv = antipode_inverse(H);
  const std::size_t dh = H.dim();
  const bool phi = iso.kind == IsoKind::Phi;
  // to: L → R, from: R → L
  const LinMap& to = phi ? iso.forward : iso.backward;
  const LinMap& from = phi ? iso.backward : iso.forward;
  RightLeftYD r;
  r.hopf = H;
  r.alg = transported_opposite(yd.alg, to, from, iso.labels);
  const std::size_t dr = r.alg.dim();
  r.action = LinMap::from_columns(dr * dh, dr, [&](std::size_t j) {
    const std::size_t y = j / dh, f = j % dh;
    // φ: y◁f = φ(S⁻¹f ▷ φ⁻¹y);  θ: y◁f = θ⁻¹(Sf ▷ θy)
    return to.apply(yd.act(phi ? s_inv.column(f) : H.S(f), from.column(y)));
  });
  r.coaction = LinMap::from_columns(dr, dh * dr, [&](std::size_t y) {
    // φ: S(x₁) ⊗ φ(x₀) with x = φ⁻¹y;  θ: S⁻¹(x₁) ⊗ θ⁻¹(x₀) with x = θy
    VecBuilder out(dh * dr);
    const Vec co = yd.coaction.apply(from.column(y));
    for (const auto& e : co.entries()) {
      const Vec h = phi ? H.S(e.index % dh) : s_inv.column(e.index % dh);
      out.add(tensor(h, to.column(e.index / dh)), e.value);
    }
    return std::move(out).build();
  });
  return r;
}

LeftRightYD paired_yd_from_right(const RightLeftYD& yd, const PairingIso& iso) {
  const auto& H = yd.hopf;
  const LinMap s_inv = antipode_inverse(H);
  const std::size_t dh = H.dim(), dr = yd.dim();
  const bool phi = iso.kind == IsoKind::Phi;
  // to: R → L, from: L → R
  const LinMap& to = phi ? iso.backward : iso.forward;
  const LinMap& from = phi ? iso.forward : iso.backward;
  LeftRightYD l;
  l.hopf = H;
  l.alg = transported_opposite(yd.alg, to, from, iso.labels);
  const std::size_t dl = l.alg.dim();
  l.action = LinMap::from_columns(dh * dl, dl, [&](std::size_t j) {
    const std::size_t f = j / dl, x = j % dl;
    // φ: f▷x = φ⁻¹(φx ◁ Sf);  θ: f▷x = θ(θ⁻¹x ◁ S⁻¹f)
    return to.apply(yd.act(from.column(x), phi ? H.S(f) : s_inv.column(f)));
  });
  l.coaction = LinMap::from_columns(dl, dl * dh, [&](std::size_t x) {
    // φ: φ⁻¹(y₀) ⊗ S⁻¹(y₋₁) with y = φx;  θ: θ(y₀) ⊗ S(y₋₁) with y = θ⁻¹x
    VecBuilder out(dl * dh);
    const Vec co = yd.coaction.apply(from.column(x));
    for (const auto& e : co.entries()) {
      const Vec h = phi ? s_inv.column(e.index / dr) : H.S(e.index / dr);
      out.add(tensor(to.column(e.index % dr), h), e.value);
    }
    return std::move(out).build();
  });
  return l;
}

CheckReport converse_diagnostic(const LeftRightYD& left, const RightLeftYD& right, const LinMap& psi,
                                const VerifyOptions& options) {
  auto require = [](bool ok, const char* name) {
    if (!ok) throw InvalidHypothesis(name);
  };
  const SmashAlgebra lh = build_smash_lh(left);
  const SmashAlgebra hr = build_smash_hr(right);
  const auto& H = left.hopf;
  const std::size_t d = lh.dim(), dh = H.dim(), dl = left.dim(), dr = right.dim();
  require(hr.dim() == d && psi.src_dim() == d && psi.dst_dim() == d, "psi shape");
  require(verify_antihomomorphism("rho", left.alg, lh.total, left.coaction, {0}).passed,
          "rho antihomomorphism into L#H");
  require(verify_antihomomorphism("lambda", right.alg, hr.total, right.coaction, {0}).passed,
          "lambda antihomomorphism into H#R");
  require(verify_homomorphism("psi", lh.total, hr.total, psi, {0}).passed, "psi homomorphism");
  const auto psi_inv = inverse(psi);
  require(psi_inv.has_value(), "psi invertible");
  require(compose(psi, lh.embed_second) == hr.embed_first, "psi(1#f) = f#1");
  require(same_image("", compose(psi, lh.embed_first), right.coaction, {0}).passed, "psi(L#1) = im lambda");
  require(same_image("", compose(*psi_inv, hr.embed_second), left.coaction, {0}).passed, "psi_inv(1#R) = im rho");

  // φ = ε′_R Ψ α_L, θ = ε_L Ψ⁻¹ α′_R
  const LinMap eps_r_hr = LinMap::from_columns(d, dr, [&](std::size_t k) {
    return Vec::basis(dr, k % dr, H.counit(k / dr));
  });
  const LinMap eps_l_lh = LinMap::from_columns(d, dl, [&](std::size_t k) {
    return Vec::basis(dl, k / dh, H.counit(k % dh));
  });
  PhiCompatPair pp{left, right, compose(eps_r_hr, compose(psi, lh.embed_first)), {}};
  ThetaCompatPair tp{left, right, compose(eps_l_lh, compose(*psi_inv, hr.embed_second)), {}};

  std::vector<CheckReport> parts;
  parts.push_back(guarded_check("extracted isomorphisms invertible", options, [&](CheckBuilder& c) {
    auto pi = inverse(pp.phi);
    auto ti = inverse(tp.theta);
    if (!pi) c.fail_with_note("extracted phi is singular");
    if (!ti) c.fail_with_note("extracted theta is singular");
    if (pi) pp.phi_inv = *pi;
    if (ti) tp.theta_inv = *ti;
  }));
  if (!parts.back().passed) return aggregate("converse diagnostic", std::move(parts));
  parts.push_back(antiiso_report("phi antiisomorphism", left.alg, right.alg, pp.phi, pp.phi_inv, options));
  parts.push_back(antiiso_report("theta antiisomorphism", right.alg, left.alg, tp.theta, tp.theta_inv, options));
  parts.push_back(renamed(verify_yd_condition(left, options), "left yd condition"));
  parts.push_back(renamed(verify_yd_condition(right, options), "right yd condition"));
  parts.push_back(phi_action_report(pp, options));
  parts.push_back(theta_action_report(tp, options));

  const LinMap tau = bm_tau(lh), tpr = tau_prime(hr);
  if (compose(psi, tau) == compose(tpr, psi)) {
    std::vector<CheckReport> cond;
    cond.push_back(phi_coaction_report(pp, options));
    cond.push_back(theta_coaction_report(tp, options));
    cond.push_back(guarded_check("induced bundles agree", options, [&](CheckBuilder& c) {
      const SymmetricBundle a = symmetric_hopf_via_phi(pp, options);
      const SymmetricBundle b = symmetric_hopf_via_theta(tp, options);
      c.add_part(a.build);
      c.add_part(b.build);
      c.add_part(compare_bundles("bundle matrices", a, b, options));
    }));
    parts.push_back(aggregate("antipodes intertwined", std::move(cond)));
  } else {
    parts.push_back(guarded_check("antipodes intertwined", options, [](CheckBuilder& c) {
      c.set_note("psi tau != tau' psi; coaction conclusions not asserted");
    }));
  }
  return aggregate("converse diagnostic", std::move(parts));
}

}  // namespace hopfoid
