#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "hopfoid/algebroid.hpp"
#include "hopfoid/catalog.hpp"
#include "hopfoid/errors.hpp"
#include "hopfoid/scalarext.hpp"

using namespace hopfoid;

namespace {

using Perm = std::array<int, 3>;

Perm perm_of_label(const std::string& label) {
  Perm p{0, 1, 2};
  std::vector<int> cyc;
  for (char c : label) {
    if (c >= '1' && c <= '3') cyc.push_back(c - '1');
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

Perm mul(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

Perm inv(const Perm& a) {
  Perm r{};
  for (int k = 0; k < 3; ++k) r[a[k]] = k;
  return r;
}

std::size_t index_of(const FinHopf& h, const Perm& p) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (perm_of_label(h.labels()[i]) == p) return i;
  }
  FAIL("permutation not found");
  return 0;
}

FinAlgebra algebra_of(const FinHopf& h) { return h.algebra(); }

}  // namespace

TEST_CASE("balanced tensor dimension is dim A times (dim H)^2") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    const std::size_t h = d.hopf().dim();
    const Bialgebroid left = left_scalar_ext(d.pair.left);
    const Bialgebroid right = right_scalar_ext(d.pair.right);
    CHECK_MESSAGE(left.quotient().quotient_dim() == d.pair.left.dim() * h * h, name);
    CHECK_MESSAGE(right.quotient().quotient_dim() == d.pair.right.dim() * h * h, name);
  }
  CHECK(left_scalar_ext(make_instance("c2").pair.left).quotient().quotient_dim() == 8);
  CHECK(left_scalar_ext(make_instance("s3").pair.left).quotient().quotient_dim() == 216);
}

TEST_CASE("canonical section is a section with the expected support") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    const SmashAlgebra lh = build_smash_lh(d.pair.left);
    const SmashAlgebra hr = build_smash_hr(d.pair.right);
    const Bialgebroid left = left_scalar_ext(lh);
    const Bialgebroid right = right_scalar_ext(hr);
    const LinMap gl = canonical_smash_section(left, lh);
    const LinMap gr = canonical_smash_section(right, hr);
    CHECK_MESSAGE(compose(left.quotient().project_map(), gl) == LinMap::identity(gl.src_dim()), name);
    CHECK_MESSAGE(compose(right.quotient().project_map(), gr) == LinMap::identity(gr.src_dim()), name);
    // representatives lie in 𝒦 ⊗ (1♯H), resp. (H♯1) ⊗ 𝒦
    const std::size_t k = lh.dim();
    Echelon lspan(k * k), rspan(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t h = 0; h < d.hopf().dim(); ++h) {
        lspan.insert(tensor(lh.total.basis(i), lh.embed_second.column(h)));
        rspan.insert(tensor(hr.embed_first.column(h), hr.total.basis(i)));
      }
    }
    for (const auto& col : gl.columns()) CHECK(lspan.contains(col));
    for (const auto& col : gr.columns()) CHECK(rspan.contains(col));
  }
}

TEST_CASE("push-left oracle on C2") {
  // (u#e) ⊗ (u#e) ~ β(u)(u#e) ⊗ (1#e) = (u#u)(u#e) ⊗ 1#e = (e#u) ⊗ (e#e)
  const auto d = make_instance("c2");
  const SmashAlgebra lh = build_smash_lh(d.pair.left);
  const Bialgebroid left = left_scalar_ext(lh);
  const LinMap gamma = canonical_smash_section(left, lh);
  const Vec u_e = lh.basis(1, 0);
  const Vec rep = gamma.apply(left.quotient().project(tensor(u_e, u_e)));
  CHECK(rep == tensor(lh.basis(0, 1), lh.basis(0, 0)));
}

TEST_CASE("scalar extensions are bialgebroids on every instance") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    CHECK_MESSAGE(verify_left_bialgebroid(left_scalar_ext(d.pair.left)).passed, name);
    CHECK_MESSAGE(verify_right_bialgebroid(right_scalar_ext(d.pair.right)).passed, name);
  }
}

TEST_CASE("side mismatch is reported") {
  const auto d = make_instance("c2");
  CHECK_FALSE(verify_right_bialgebroid(left_scalar_ext(d.pair.left)).passed);
  CHECK_FALSE(verify_left_bialgebroid(right_scalar_ext(d.pair.right)).passed);
}

TEST_CASE("Takeuchi sub-check fails exactly when YD fails") {
  for (const auto& [inst, pert] : std::vector<std::pair<std::string, std::string>>{
           {"s3", "coaction-sign"}, {"s3-groupoid", "coaction-twist"}}) {
    const auto d = make_instance(inst);
    const auto bad = apply_perturbation(d.pair, d.perturbation(pert));
    const CheckReport r = verify_left_bialgebroid(left_scalar_ext(bad.left));
    CHECK_FALSE(r.passed);
    const CheckReport* tk = r.find("takeuchi");
    REQUIRE(tk != nullptr);
    CHECK_FALSE(tk->passed);
    CHECK_FALSE(tk->witnesses.empty());
  }
  // trivial coaction on C2 is YD; the left bialgebroid survives
  const auto d = make_instance("c2");
  const auto triv = apply_perturbation(d.pair, d.perturbation("coaction-trivial"));
  CHECK(verify_left_bialgebroid(left_scalar_ext(triv.left)).passed);
}

TEST_CASE("structure map values") {
  const auto d = make_instance("c2");
  const SmashAlgebra lh = build_smash_lh(d.pair.left);
  const Bialgebroid left = left_scalar_ext(lh);
  // β(u) = ρ(u) = u#u, α(u) = u#e, ε(u#u) = u
  CHECK(left.target.column(1) == lh.basis(1, 1));
  CHECK(left.source.column(1) == lh.basis(1, 0));
  CHECK(left.counit.column(lh.index(1, 1)) == Vec::basis(2, 1));
  // Δ(e#u) = e#u ⊗ e#u
  CHECK(left.coproduct.column(lh.index(0, 1)) ==
        left.quotient().project(tensor(lh.basis(0, 1), lh.basis(0, 1))));

  const auto h4 = make_instance("h4");
  const SmashAlgebra lh4 = build_smash_lh(h4.pair.left);
  const Bialgebroid left4 = left_scalar_ext(lh4);
  // ε(y#x) = ε(x) y = 0 and ε(y#g) = y
  CHECK(left4.counit.column(lh4.index(1, 2)).is_zero());
  CHECK(left4.counit.column(lh4.index(1, 1)) == Vec::basis(2, 1));
}

TEST_CASE("tensor_over_base prechecks") {
  const FinHopf h = sweedler_hopf();
  const FinAlgebra c2 = algebra_of(cyclic_group_algebra(2));
  const Vec one = h.basis(0), g = h.basis(1), x = h.basis(2);
  // g and g + x both square to 1 but do not commute
  const LinMap alpha(2, 4, {one, g});
  const LinMap beta(2, 4, {one, g + x});
  CHECK_THROWS_AS(tensor_over_base(h.algebra(), c2, alpha, beta, Side::Left), NonCommutingImages);
  const LinMap not_hom(2, 4, {one, x});
  CHECK_THROWS_AS(tensor_over_base(h.algebra(), c2, not_hom, alpha, Side::Left), ConstructionFailure);
  CHECK_THROWS_AS(tensor_over_base(h.algebra(), c2, LinMap(2, 3), alpha, Side::Left), DimensionMismatch);
  // without the precheck the quotient is still built
  CHECK_NOTHROW(tensor_over_base(h.algebra(), c2, alpha, beta, Side::Left, false));
}

TEST_CASE("double quotient dimension is dim A times (dim H)^3") {
  for (const auto& name : {"c2", "h4", "c2-trivial"}) {
    const auto d = make_instance(name);
    const std::size_t h = d.hopf().dim();
    const Bialgebroid left = left_scalar_ext(d.pair.left);
    const Bialgebroid right = right_scalar_ext(d.pair.right);
    const DoubleQuotient dl(left.quotient(), left.quotient(), left.dim());
    const DoubleQuotient dr(right.quotient(), right.quotient(), right.dim());
    CHECK_MESSAGE(dl.quotient_dim() == d.pair.left.dim() * h * h * h, name);
    CHECK_MESSAGE(dr.quotient_dim() == d.pair.right.dim() * h * h * h, name);
  }
}

TEST_CASE("normal_form_section rejects a non-complement") {
  const auto d = make_instance("c2");
  const Bialgebroid left = left_scalar_ext(d.pair.left);
  const std::size_t n = left.dim() * left.dim();
  CHECK_THROWS_AS(normal_form_section(left.quotient(), {Vec::basis(n, 0)}), NormalFormFailure);
  std::vector<Vec> dup(left.quotient().quotient_dim(), Vec::basis(n, 0));
  CHECK_THROWS_AS(normal_form_section(left.quotient(), dup), NormalFormFailure);
}

TEST_CASE("tau closed forms") {
  SUBCASE("S3: tau(a#f) = f^-1 a f # f^-1 a^-1") {
    const auto d = make_instance("s3");
    const FinHopf& h = d.hopf();
    const SmashAlgebra lh = build_smash_lh(d.pair.left);
    const LinMap tau = bm_tau(lh);
    auto p = [&](std::size_t i) { return perm_of_label(h.labels()[i]); };
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t f = 0; f < 6; ++f) {
        const Perm first = mul(mul(inv(p(f)), p(a)), p(f));
        const Perm second = mul(inv(p(f)), inv(p(a)));
        CHECK(tau.column(lh.index(a, f)) == lh.basis(index_of(h, first), index_of(h, second)));
      }
  }
  SUBCASE("C2: tau(u#e) = u#u") {
    const SmashAlgebra lh = build_smash_lh(make_instance("c2").pair.left);
    CHECK(bm_tau(lh).column(lh.index(1, 0)) == lh.basis(1, 1));
  }
  SUBCASE("H4: tau(y#1) = -y#g and tau(1#x) = -1#gx") {
    const SmashAlgebra lh = build_smash_lh(sweedler_yd());
    const LinMap tau = bm_tau(lh);
    CHECK(tau.column(lh.index(1, 0)) == -lh.basis(1, 1));
    CHECK(tau.column(lh.index(0, 2)) == -lh.basis(0, 3));
  }
}

TEST_CASE("tau beta = alpha by hand on C2") {
  const SmashAlgebra lh = build_smash_lh(make_instance("c2").pair.left);
  const Bialgebroid left = left_scalar_ext(lh);
  CHECK(bm_tau(lh).apply(left.target.column(1)) == left.source.column(1));
}

TEST_CASE("Lu Hopf algebroid axioms with the canonical section") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    const SmashAlgebra lh = build_smash_lh(d.pair.left);
    LuHopfAlgebroid lu{left_scalar_ext(lh), bm_tau(lh), {}};
    lu.gamma = canonical_smash_section(lu.left, lh);
    CHECK_MESSAGE(verify_lu_hopf(lu).passed, name);
  }
  const SmashAlgebra lh = build_smash_lh(sweedler_yd());
  LuHopfAlgebroid broken{left_scalar_ext(lh), LinMap::identity(lh.dim()), {}};
  broken.gamma = canonical_smash_section(broken.left, lh);
  const CheckReport r = verify_lu_hopf(broken);
  CHECK_FALSE(r.passed);
  const CheckReport* tb = r.find("tau beta = alpha");
  REQUIRE(tb != nullptr);
  CHECK_FALSE(tb->passed);
  // witness: τ(β(y)) = y#g against α(y) = y#1
  REQUIRE_FALSE(tb->witnesses.empty());
  CHECK(tb->witnesses.front().lhs == lh.basis(1, 1));
  CHECK(tb->witnesses.front().rhs == lh.basis(1, 0));
}

TEST_CASE("symmetric Hopf algebroid detects a wrong antipode") {
  const auto d = make_instance("h4");
  SymmetricBundle b = symmetric_hopf_via_phi(d.pair);
  REQUIRE(b.build.passed);
  CHECK(verify_symmetric_hopf(b.on_lh).passed);
  b.on_lh.tau = LinMap::identity(b.lh.dim());
  const CheckReport r = verify_symmetric_hopf(b.on_lh);
  CHECK_FALSE(r.passed);
  const CheckReport* tb = r.find("tau beta_L = alpha_L");
  REQUIRE(tb != nullptr);
  CHECK_FALSE(tb->passed);
  const CheckReport* mixed = r.find("mixed coassociativity (R over L)");
  REQUIRE(mixed != nullptr);
  CHECK(mixed->passed);
}

TEST_CASE("antihomomorphism sweep counts every pair") {
  const SmashAlgebra lh = build_smash_lh(make_instance("s3").pair.left);
  const CheckReport r = verify_antihom_sweep("tau", lh.total, bm_tau(lh));
  CHECK(r.passed);
  CHECK(r.checked >= 36 * 36);
}
