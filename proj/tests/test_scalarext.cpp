#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfoid/catalog.hpp"
#include "hopfoid/echelon.hpp"
#include "hopfoid/errors.hpp"
#include "hopfoid/scalarext.hpp"

using namespace hopfoid;

namespace {

// Conjugation by basis element h of a group algebra, as a map on the basis.
LinMap conjugation(const FinHopf& g, std::size_t h) {
  return LinMap::from_columns(g.dim(), g.dim(), [&](std::size_t a) {
    return g.multiply(g.product(h, a), g.S(h));
  });
}

// Left multiplication by a fixed element of an algebra.
LinMap left_mult(const FinAlgebra& k, const Vec& v) {
  return LinMap::from_columns(k.dim(), k.dim(), [&](std::size_t j) { return k.multiply(v, k.basis(j)); });
}

LinMap right_mult(const FinAlgebra& k, const Vec& v) {
  return LinMap::from_columns(k.dim(), k.dim(), [&](std::size_t j) { return k.multiply(k.basis(j), v); });
}

std::string violated(const PhiCompatPair& p, const LinMap& psi) {
  try {
    converse_diagnostic(p.left, p.right, psi);
  } catch (const InvalidHypothesis& e) {
    return e.hypothesis();
  }
  return "";
}

}  // namespace

TEST_CASE("phi compatibility on the catalog and a wrong twist") {
  for (const auto& name : instance_names()) {
    CHECK_MESSAGE(verify_phi_compat(make_instance(name).pair).passed, name);
  }
  PhiCompatPair p = make_instance("c2").pair;
  // λ(φ(u)) = e ⊗ φ(u) instead of u ⊗ φ(u)
  p.right.coaction.set_column(1, Vec::basis(4, 1));
  const CheckReport r = verify_phi_compat(p);
  CHECK_FALSE(r.passed);
  CHECK(r.find("phi coaction compatibility") != nullptr);
  CHECK_FALSE(r.find("phi coaction compatibility")->passed);
  CHECK(r.find("phi action compatibility")->passed);
}

TEST_CASE("theta compatibility and an equivariance-breaking twist") {
  for (const auto& name : instance_names()) {
    CHECK_MESSAGE(verify_theta_compat(theta_from_phi(make_instance(name).pair)).passed, name);
  }
  const auto d = make_instance("s3");
  ThetaCompatPair t = theta_from_phi(d.pair);
  // compose θ with conjugation by (12): still an antiisomorphism, no longer H-linear
  const LinMap c = conjugation(d.hopf(), 1);
  t.theta = compose(c, t.theta);
  t.theta_inv = compose(t.theta_inv, conjugation(d.hopf(), 1));
  const CheckReport r = verify_theta_compat(t);
  CHECK(r.find("theta antiisomorphism")->passed);
  CHECK_FALSE(r.find("theta action compatibility")->passed);
}

TEST_CASE("Psi and Phi values on C2") {
  const auto d = make_instance("c2");
  const PhiMaps m = build_maps_phi(d.pair);
  const SmashAlgebra hr = build_smash_hr(d.pair.right);
  const SmashAlgebra lh = build_smash_lh(d.pair.left);
  // Ψ(u#e) = λ(φ(u)) = u#φ(u)
  CHECK(m.Psi.column(lh.index(1, 0)) == hr.basis(1, 1));
  // Ψ(e#u) = u#1
  CHECK(m.Psi.column(lh.index(0, 1)) == hr.basis(1, 0));
  // Φ(u#e) = e#φ(u)
  CHECK(m.Phi.column(lh.index(1, 0)) == hr.basis(0, 1));
  // τ'(e#φ(u)) = u#φ(u)
  CHECK(tau_prime(hr).column(hr.index(0, 1)) == hr.basis(1, 1));
}

TEST_CASE("Psi and Phi identities on every instance") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    const PhiMaps m = build_maps_phi(d.pair);
    const std::size_t n = m.Psi.src_dim();
    CHECK(compose(m.Psi, m.Psi_inv) == LinMap::identity(n));
    CHECK(compose(m.Psi_inv, m.Psi) == LinMap::identity(n));
    const SmashAlgebra lh = build_smash_lh(d.pair.left);
    const SmashAlgebra hr = build_smash_hr(d.pair.right);
    CHECK(compose(m.Psi, bm_tau(lh)) == m.Phi);
    CHECK(compose(tau_prime(hr), m.Psi) == m.Phi);
    CHECK_MESSAGE(verify_maps_phi(d.pair, m).passed, name);
  }
}

TEST_CASE("Psi image identities against an independent span computation") {
  const auto d = make_instance("h4");
  const PhiMaps m = build_maps_phi(d.pair);
  const SmashAlgebra lh = build_smash_lh(d.pair.left);
  const SmashAlgebra hr = build_smash_hr(d.pair.right);
  std::vector<Vec> psi_l, im_lambda, psi_inv_r, im_rho;
  for (std::size_t a = 0; a < d.pair.left.dim(); ++a) {
    psi_l.push_back(m.Psi.apply(lh.embed_first.column(a)));
    im_rho.push_back(d.pair.left.coact(a));
  }
  for (std::size_t b = 0; b < d.pair.right.dim(); ++b) {
    im_lambda.push_back(d.pair.right.coact(b));
    psi_inv_r.push_back(m.Psi_inv.apply(hr.embed_second.column(b)));
  }
  // H⊗R and L⊗H share the flat layouts of H♯R and L♯H
  CHECK(same_span(psi_l, im_lambda, hr.dim()));
  CHECK(same_span(psi_inv_r, im_rho, lh.dim()));
}

TEST_CASE("theta maps and phi/theta conversions") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    const ThetaCompatPair t = theta_from_phi(d.pair);
    const PhiCompatPair back = phi_from_theta(t);
    CHECK(back.phi == d.pair.phi);
    CHECK(back.phi_inv == d.pair.phi_inv);
    CHECK(theta_from_phi(back).theta == t.theta);
    CHECK(compose(t.theta, t.theta_inv) == LinMap::identity(t.theta.src_dim()));
    const ThetaMaps m = build_maps_theta(t);
    CHECK_MESSAGE(verify_maps_theta(t, m).passed, name);
  }
}

TEST_CASE("theta on H4 sends phi(y) to a multiple of y") {
  const auto d = make_instance("h4");
  const ThetaCompatPair t = theta_from_phi(d.pair);
  // θ(y) = S(y₋₁)▷φ⁻¹(y₀) with λ(φ(y)) = S(g) ⊗ φ(y): θ(φ(y)) = g▷y = −y
  CHECK(t.theta.column(1) == -Vec::basis(2, 1));
  CHECK(t.theta.column(0) == Vec::basis(2, 0));
}

TEST_CASE("bundles from both routes agree and verify") {
  for (const auto& name : {"c2", "h4", "c2-trivial"}) {
    const auto d = make_instance(name);
    const SymmetricBundle a = symmetric_hopf_via_phi(d.pair);
    const SymmetricBundle b = symmetric_hopf_via_theta(theta_from_phi(d.pair));
    CHECK_MESSAGE(a.build.passed, name);
    CHECK_MESSAGE(b.build.passed, name);
    CHECK_MESSAGE(verify_bundle(a).passed, name);
    CHECK_MESSAGE(verify_bundle(b).passed, name);
    CHECK_MESSAGE(compare_bundles("phi vs theta", a, b).passed, name);
    CHECK(a.on_lh.left.source == b.on_lh.left.source);
    CHECK(a.on_lh.right.target == b.on_lh.right.target);
    CHECK(a.on_hr.right.counit == b.on_hr.right.counit);
  }
}

TEST_CASE("phi is recovered as eps_R alpha_L") {
  const auto d = make_instance("h4");
  const SymmetricBundle b = symmetric_hopf_via_phi(d.pair);
  const auto& sh = b.on_lh;
  CHECK(compose(sh.right.counit, sh.left.source) == d.pair.phi);
  CHECK(compose(sh.left.counit, sh.right.target) == d.pair.phi_inv);
}

TEST_CASE("tau inverse matches matrix inversion") {
  for (const auto& name : {"c2", "h4", "s3"}) {
    const auto d = make_instance(name);
    const SmashAlgebra lh = build_smash_lh(d.pair.left);
    const SmashAlgebra hr = build_smash_hr(d.pair.right);
    const auto ti = inverse(bm_tau(lh));
    const auto tpi = inverse(tau_prime(hr));
    REQUIRE(ti);
    REQUIRE(tpi);
    CHECK(tau_inverse(lh) == *ti);
    CHECK(tau_prime_inverse(hr) == *tpi);
  }
}

TEST_CASE("paired derivations recover the original structure") {
  for (const auto& name : {"c2", "h4", "s3", "s3-groupoid"}) {
    const auto d = make_instance(name);
    const auto& left = d.pair.left;
    const std::size_t n = left.dim();
    const auto id = LinMap::identity(n);
    const RightLeftYD r = paired_yd_from_left(left, {IsoKind::Phi, id, id, {}});
    const LeftRightYD l = paired_yd_from_right(r, {IsoKind::Phi, id, id, {}});
    CHECK(l.alg.mult == left.alg.mult);
    CHECK(l.action == left.action);
    CHECK(l.coaction == left.coaction);
    CHECK(validate_yd(r).passed);
    // the θ route through the θ of the derived pair
    const ThetaCompatPair t = theta_from_phi(d.pair);
    const LeftRightYD l2 = paired_yd_from_right(d.pair.right, {IsoKind::Theta, t.theta, t.theta_inv, {}});
    CHECK(l2.action == left.action);
    CHECK(l2.coaction == left.coaction);
    CHECK(l2.alg.mult == left.alg.mult);
  }
}

TEST_CASE("paired derivation needs an invertible antipode") {
  LeftRightYD yd = trivial_yd(sweedler_hopf());
  FinHopf h = yd.hopf;
  LinMap s = h.antipode();
  s.set_column(2, Vec(4));
  yd.hopf = FinHopf(h.algebra(), h.coalgebra(), s);
  const auto id = LinMap::identity(1);
  CHECK_THROWS_AS(paired_yd_from_left(yd, {IsoKind::Phi, id, id, {}}), AntipodeNotInvertible);
}

TEST_CASE("converse diagnostic confirms the built maps") {
  for (const auto& name : {"c2", "h4", "s3-groupoid"}) {
    const auto d = make_instance(name);
    const PhiMaps m = build_maps_phi(d.pair);
    const CheckReport r = converse_diagnostic(d.pair.left, d.pair.right, m.Psi);
    CHECK_MESSAGE(r.passed, name);
  }
}

TEST_CASE("converse diagnostic names the violated hypothesis") {
  const auto d = make_instance("h4");
  const PhiMaps m = build_maps_phi(d.pair);
  const SmashAlgebra lh = build_smash_lh(d.pair.left);

  CHECK(violated(d.pair, LinMap(3, 3)) == "psi shape");

  LinMap twice = m.Psi;
  for (std::size_t j = 0; j < twice.src_dim(); ++j) twice.set_column(j, Rational(2) * m.Psi.column(j));
  CHECK(violated(d.pair, twice) == "psi homomorphism");

  // inner twist by 1#g: a homomorphism and invertible, but moves 1#x
  const Vec g = lh.embed_second.column(1);
  const LinMap ad = compose(left_mult(lh.total, g), right_mult(lh.total, g));
  CHECK(violated(d.pair, compose(m.Psi, ad)) == "psi(1#f) = f#1");

  PhiCompatPair broken = d.pair;
  // ρ(y) = 1 ⊗ g squares to 1♯1 while y² = 0
  broken.left.coaction.set_column(1, tensor(Vec::basis(2, 0), d.hopf().basis(1)));
  CHECK(violated(broken, m.Psi) == "rho antihomomorphism into L#H");
}
