#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "hopfoid/catalog.hpp"
#include "hopfoid/echelon.hpp"
#include "hopfoid/errors.hpp"
#include "hopfoid/hopf.hpp"

using namespace hopfoid;

namespace {

using Perm = std::array<int, 3>;

// Reads a label like "(123)" or "e" as a permutation of {0,1,2}.
Perm perm_of_label(const std::string& label) {
  Perm p{0, 1, 2};
  if (label == "e") return p;
  std::vector<int> cyc;
  for (char c : label) {
    if (c >= '1' && c <= '3') cyc.push_back(c - '1');
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

// (a∘b)(k) = a(b(k))
Perm compose_perm(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

int perm_sign(const Perm& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
  return inversions % 2 ? -1 : 1;
}

Vec random_vec(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<Entry> es;
  for (std::size_t i = 0; i < dim; ++i) es.push_back({i, Rational(num(rng), den(rng))});
  for (auto& e : es) e.value.canonicalize();
  return Vec::from_entries(dim, es);
}

FinHopf h4_with_antipode_column(std::size_t col, Vec v) {
  FinHopf h = sweedler_hopf();
  LinMap s = h.antipode();
  s.set_column(col, std::move(v));
  return FinHopf(h.algebra(), h.coalgebra(), s);
}

}  // namespace

TEST_CASE("S3 products agree with permutation composition") {
  const FinHopf s3 = s3_group_algebra();
  REQUIRE(s3.dim() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const Perm want = compose_perm(perm_of_label(s3.labels()[i]), perm_of_label(s3.labels()[j]));
      const Vec& got = s3.product(i, j);
      REQUIRE(got.nnz() == 1);
      CHECK(got.entries()[0].value == 1);
      CHECK(perm_of_label(s3.labels()[got.entries()[0].index]) == want);
    }
  }
}

TEST_CASE("group algebra antipode is the group inverse") {
  const FinHopf s3 = s3_group_algebra();
  for (std::size_t i = 0; i < 6; ++i) {
    const Perm p = perm_of_label(s3.labels()[i]);
    const Vec& s = s3.S(i);
    REQUIRE(s.nnz() == 1);
    CHECK(compose_perm(p, perm_of_label(s3.labels()[s.entries()[0].index])) == Perm{0, 1, 2});
  }
}

TEST_CASE("catalog Hopf algebras pass every sweep") {
  for (const FinHopf& h : {cyclic_group_algebra(2), cyclic_group_algebra(5), s3_group_algebra(), sweedler_hopf()}) {
    const CheckReport r = validate_hopf(h);
    CHECK_MESSAGE(r.passed, h.labels().size());
  }
}

TEST_CASE("associativity sweep counts match brute force") {
  const FinHopf s3 = s3_group_algebra();
  CHECK(verify_algebra(s3.algebra()).passed);

  // C2 with e·u sent to 0: brute-force the failing associativity triples.
  FinAlgebra broken = cyclic_group_algebra(2).algebra();
  broken.mult.set_column(1, Vec(2));
  std::size_t bad = 0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        const Vec l = broken.multiply(broken.product(a, b), broken.basis(c));
        const Vec r = broken.multiply(broken.basis(a), broken.product(b, c));
        bad += l != r;
      }
  REQUIRE(bad > 0);
  for (std::size_t a = 0; a < 2; ++a) {
    bad += broken.multiply(broken.unit, broken.basis(a)) != broken.basis(a);
    bad += broken.multiply(broken.basis(a), broken.unit) != broken.basis(a);
  }
  const CheckReport r = verify_algebra(broken);
  CHECK_FALSE(r.passed);
  CHECK(r.failures == bad);
  REQUIRE_FALSE(r.witnesses.empty());
  const Witness& w = r.witnesses.front();
  CHECK(w.lhs != w.rhs);
}

TEST_CASE("coalgebra sweeps on H4") {
  const FinHopf h = sweedler_hopf();
  CHECK(verify_coalgebra(h.coalgebra()).passed);

  // Δ(x) = x ⊗ 1 alone breaks the left counit law on x: (ε⊗id)Δ(x) = 0.
  FinCoalgebra broken = h.coalgebra();
  broken.comult.set_column(2, tensor(h.basis(2), h.basis(0)));
  const CheckReport r = verify_coalgebra(broken);
  CHECK_FALSE(r.passed);
}

TEST_CASE("H4 multiplication follows the Sweedler rules") {
  const FinHopf h = sweedler_hopf();
  const Vec one = h.basis(0), g = h.basis(1), x = h.basis(2), gx = h.basis(3);
  CHECK(h.multiply(g, g) == one);
  CHECK(h.multiply(x, x).is_zero());
  CHECK(h.multiply(x, g) == -gx);
  CHECK(h.multiply(g, x) == gx);
  CHECK(h.multiply(gx, gx).is_zero());
  // S(x) = -gx and S⁴ = id
  CHECK(h.S(2) == -gx);
  CHECK(compose(h.antipode_squared(), h.antipode_squared()) == LinMap::identity(4));
}

TEST_CASE("bialgebra sweep counts") {
  CHECK(verify_bialgebra(s3_group_algebra()).passed);
  CHECK(verify_bialgebra(sweedler_hopf()).passed);
}

TEST_CASE("antipode sweeps detect a wrong sign") {
  CHECK(verify_antipode(sweedler_hopf()).passed);
  // S(x) = +gx: (S⊗id)Δ(x) = S(x) + S(g)x = gx + gx ≠ 0.
  const FinHopf bad = h4_with_antipode_column(2, Vec::basis(4, 3));
  const CheckReport r = verify_antipode(bad);
  CHECK_FALSE(r.passed);
  bool saw_x = false;
  for (const auto& part : r.parts.empty() ? std::vector<CheckReport>{r} : r.parts) {
    for (const auto& w : part.witnesses) saw_x = saw_x || (w.index.size() == 1 && w.index[0] == 2);
  }
  CHECK(saw_x);
  CHECK_FALSE(validate_hopf(bad).passed);
}

TEST_CASE("antipode inverse of H4 equals S cubed") {
  const FinHopf h = sweedler_hopf();
  const LinMap s3 = compose(h.antipode(), h.antipode_squared());
  CHECK(antipode_inverse(h) == s3);
  CHECK(compose(h.antipode(), antipode_inverse(h)) == LinMap::identity(4));
  CHECK(verify_antipode_invertible(h).passed);
}

TEST_CASE("singular antipode is reported") {
  const FinHopf bad = h4_with_antipode_column(2, Vec(4));
  CHECK_THROWS_AS(antipode_inverse(bad), AntipodeNotInvertible);
  CHECK_FALSE(verify_antipode_invertible(bad).passed);
}

TEST_CASE("property: S is an antihomomorphism on random elements") {
  std::mt19937 rng(7);
  for (const FinHopf& h : {s3_group_algebra(), sweedler_hopf()}) {
    for (int t = 0; t < 20; ++t) {
      const Vec a = random_vec(rng, h.dim()), b = random_vec(rng, h.dim());
      CHECK(h.antipode().apply(h.multiply(a, b)) ==
            h.multiply(h.antipode().apply(b), h.antipode().apply(a)));
    }
  }
}

TEST_CASE("property: Δ is multiplicative on random elements") {
  std::mt19937 rng(11);
  const FinHopf h = sweedler_hopf();
  const FinAlgebra hh = tensor_algebra(h.algebra(), h.algebra());
  for (int t = 0; t < 20; ++t) {
    const Vec a = random_vec(rng, 4), b = random_vec(rng, 4);
    const LinMap& d = h.coalgebra().comult;
    CHECK(d.apply(h.multiply(a, b)) == hh.multiply(d.apply(a), d.apply(b)));
  }
}

TEST_CASE("sign character of S3 is multiplicative") {
  const FinHopf s3 = s3_group_algebra();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const std::size_t k = s3.product(i, j).entries()[0].index;
      CHECK(perm_sign(perm_of_label(s3.labels()[k])) ==
            perm_sign(perm_of_label(s3.labels()[i])) * perm_sign(perm_of_label(s3.labels()[j])));
    }
}

TEST_CASE("group_algebra rejects tables that are not groups") {
  // not associative: a Latin square without associativity
  const std::vector<std::vector<std::size_t>> latin = {{0, 1, 2}, {1, 0, 0}, {2, 2, 1}};
  CHECK_THROWS_AS(group_algebra(latin, {"a", "b", "c"}), NotAGroup);
  const std::vector<std::vector<std::size_t>> no_identity = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(group_algebra(no_identity, {"a", "b"}), NotAGroup);
  const std::vector<std::vector<std::size_t>> no_inverse = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(group_algebra(no_inverse, {"a", "b"}), NotAGroup);
}

TEST_CASE("homomorphism sweeps") {
  const FinHopf h = sweedler_hopf();
  CHECK(verify_antihomomorphism("S", h.algebra(), h.algebra(), h.antipode()).passed);
  CHECK_FALSE(verify_homomorphism("S", h.algebra(), h.algebra(), h.antipode()).passed);
  CHECK(verify_homomorphism("S2", h.algebra(), h.algebra(), h.antipode_squared()).passed);
  CHECK(verify_algebra(opposite(h.algebra())).passed);
}
