#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "hopfoid/catalog.hpp"
#include "hopfoid/smash.hpp"
#include "hopfoid/yd.hpp"

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

// Index of a permutation among the S3 labels.
std::size_t index_of(const FinHopf& h, const Perm& p) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (perm_of_label(h.labels()[i]) == p) return i;
  }
  FAIL("permutation not found");
  return 0;
}

LeftRightYD perturbed_left(const std::string& inst, const std::string& pert) {
  const auto d = make_instance(inst);
  return apply_perturbation(d.pair, d.perturbation(pert)).left;
}

}  // namespace

TEST_CASE("catalog YD algebras validate on both sides") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    CHECK_MESSAGE(validate_yd(d.pair.left).passed, name);
    CHECK_MESSAGE(validate_yd(d.pair.right).passed, name);
  }
  CHECK(validate_yd(dual_group_yd(cyclic_group_algebra(2))).passed);
}

TEST_CASE("adjoint action of S3 is conjugation") {
  const FinHopf h = s3_group_algebra();
  const LeftRightYD yd = adjoint_group_yd(h);
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t a = 0; a < 6; ++a) {
      const Perm pg = perm_of_label(h.labels()[g]), pa = perm_of_label(h.labels()[a]);
      CHECK(yd.act(g, a) == Vec::basis(6, index_of(h, mul(mul(pg, pa), inv(pg)))));
      // ρ(a) = a ⊗ a⁻¹
      CHECK(yd.coact(a) == Vec::basis(36, a * 6 + index_of(h, inv(pa))));
    }
  }
}

TEST_CASE("conjugation on k^S3 permutes the idempotents") {
  const FinHopf h = s3_group_algebra();
  const LeftRightYD yd = dual_group_yd(h);
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t x = 0; x < 6; ++x) {
      const Perm pg = perm_of_label(h.labels()[g]), px = perm_of_label(h.labels()[x]);
      CHECK(yd.act(g, x) == Vec::basis(6, index_of(h, mul(mul(pg, px), inv(pg)))));
    }
  }
  CHECK(verify_braided_commutativity(yd).passed);
}

TEST_CASE("Sweedler YD algebra acts by the sign rules") {
  const LeftRightYD yd = sweedler_yd();
  const Vec one = Vec::basis(2, 0), y = Vec::basis(2, 1);
  // h = 1, g, x, gx
  CHECK(yd.act(1, 1) == -y);
  CHECK(yd.act(1, 0) == one);
  CHECK(yd.act(2, 1).is_zero());
  CHECK(yd.act(2, 0).is_zero());
  CHECK(yd.act(3, 1).is_zero());
  CHECK(yd.coact(1) == tensor(y, yd.hopf.basis(1)));
  CHECK(verify_module_structure(yd).passed);
  CHECK(verify_comodule_structure(yd).passed);
  CHECK(verify_yd_condition(yd).passed);
  CHECK(verify_braided_commutativity(yd).passed);
}

TEST_CASE("coaction sign perturbation on S3 breaks YD and braided commutativity") {
  const LeftRightYD bad = perturbed_left("s3", "coaction-sign");
  CHECK(verify_module_structure(bad).passed);
  CHECK(verify_comodule_structure(bad).passed);
  const CheckReport yd = verify_yd_condition(bad);
  CHECK_FALSE(yd.passed);
  CHECK_FALSE(yd.witnesses.empty());
  CHECK_FALSE(verify_braided_commutativity(bad).passed);
}

TEST_CASE("grading twist on k^S3 breaks YD but keeps braided commutativity") {
  const LeftRightYD bad = perturbed_left("s3-groupoid", "coaction-twist");
  CHECK(verify_comodule_structure(bad).passed);
  CHECK_FALSE(verify_yd_condition(bad).passed);
  CHECK(verify_braided_commutativity(bad).passed);
}

TEST_CASE("trivial coaction on k[C2] is still YD") {
  const LeftRightYD triv = perturbed_left("c2", "coaction-trivial");
  CHECK(validate_yd(triv).passed);
}

TEST_CASE("smash product values") {
  SUBCASE("H4: (1#x)(y#1) = -y#x") {
    const SmashAlgebra s = build_smash_lh(sweedler_yd());
    CHECK(s.multiply(s.basis(0, 2), s.basis(1, 0)) == -s.basis(1, 2));
    // (1#g)(y#1) = -y#g
    CHECK(s.multiply(s.basis(0, 1), s.basis(1, 0)) == -s.basis(1, 1));
  }
  SUBCASE("C2: (1#u)(u#e) = u#u") {
    const SmashAlgebra s = build_smash_lh(adjoint_group_yd(cyclic_group_algebra(2)));
    CHECK(s.multiply(s.basis(0, 1), s.basis(1, 0)) == s.basis(1, 1));
  }
}

TEST_CASE("S3 smash tables agree with the group oracle") {
  const auto d = make_instance("s3");
  const FinHopf& h = d.hopf();
  const SmashAlgebra lh = build_smash_lh(d.pair.left);
  const SmashAlgebra hr = build_smash_hr(d.pair.right);
  REQUIRE(lh.validated);
  REQUIRE(hr.validated);
  auto p = [&](std::size_t i) { return perm_of_label(h.labels()[i]); };
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t g = 0; g < 6; ++g)
      for (std::size_t b = 0; b < 6; ++b)
        for (std::size_t k = 0; k < 6; ++k) {
          // (a#g)(b#k) = a·gbg⁻¹ # gk
          const Perm first = mul(p(a), mul(mul(p(g), p(b)), inv(p(g))));
          CHECK(lh.multiply(lh.basis(a, g), lh.basis(b, k)) ==
                lh.basis(index_of(h, first), index_of(h, mul(p(g), p(k)))));
          // R is k[S3]^op with y◁f = f⁻¹yf: (g#a)(k#b) = gk # b·(k⁻¹ak)
          const Perm second = mul(p(b), mul(mul(inv(p(k)), p(a)), p(k)));
          CHECK(hr.multiply(hr.basis(g, a), hr.basis(k, b)) ==
                hr.basis(index_of(h, mul(p(g), p(k))), index_of(h, second)));
        }
}

TEST_CASE("smash YD condition and embeddings") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    const SmashAlgebra lh = build_smash_lh(d.pair.left);
    const SmashAlgebra hr = build_smash_hr(d.pair.right);
    CHECK_MESSAGE(smash_yd_condition(lh).passed, name);
    CHECK_MESSAGE(smash_yd_condition(hr).passed, name);
    CHECK_MESSAGE(verify_smash_embeddings(lh).passed, name);
    CHECK_MESSAGE(verify_smash_embeddings(hr).passed, name);
  }
  const SmashAlgebra bad = build_smash_lh(perturbed_left("s3", "coaction-sign"));
  const CheckReport r = smash_yd_condition(bad);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.witnesses.empty());
}
