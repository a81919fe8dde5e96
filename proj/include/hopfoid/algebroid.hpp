#pragma once

#include <memory>

#include "hopfoid/check.hpp"
#include "hopfoid/echelon.hpp"
#include "hopfoid/hopf.hpp"
#include "hopfoid/smash.hpp"

namespace hopfoid {

enum class Side { Left, Right };

/// Left or right bialgebroid over a base algebra A.
///
/// Left:  a.k.b = α(a)β(b)k, balanced tensor relations β(a)k ⊗ k′ − k ⊗ α(a)k′.
/// Right: b.k.a = kα(a)β(b), balanced tensor relations kα(a) ⊗ k′ − k ⊗ k′β(a).
struct Bialgebroid {
  Side side = Side::Left;
  FinAlgebra total;
  FinAlgebra base;
  LinMap source;  // α: A → 𝒦
  LinMap target;  // β: A → 𝒦
  std::shared_ptr<const QuotientSpace> tensor_over_base;
  LinMap coproduct;  // 𝒦 → 𝒦 ⊗_A 𝒦 (quotient coordinates)
  LinMap counit;     // 𝒦 → A

  std::size_t dim() const { return total.dim(); }
  const QuotientSpace& quotient() const { return *tensor_over_base; }
};

using LeftBialgebroid = Bialgebroid;
using RightBialgebroid = Bialgebroid;

/// Product in the algebra 𝒦 ⊗ 𝒦, computed without a materialized table.
Vec multiply_pair(const FinAlgebra& k, const Vec& x, const Vec& y);

/// Balancing relations for the given side over basis triples (k, a, k′).
/// With `require_commuting`, throws NonCommutingImages when α(A) and β(A)
/// fail to commute and ConstructionFailure when α/β are not (anti)homomorphisms.
QuotientSpace tensor_over_base(const FinAlgebra& total, const FinAlgebra& base, const LinMap& alpha,
                               const LinMap& beta, Side side, bool require_commuting = true);

/// Quotient of 𝒦⊗𝒦⊗𝒦 by (I ⊗ 𝒦) + (𝒦 ⊗ J), where I and J are balancing
/// subspaces of 𝒦⊗𝒦. Built in two stages: project the first pair, then
/// impose the image of 𝒦 ⊗ J.
class DoubleQuotient {
 public:
  DoubleQuotient(const QuotientSpace& first_pair, const QuotientSpace& second_pair, std::size_t factor_dim);
  std::size_t quotient_dim() const { return second_.quotient_dim(); }
  Vec project(const Vec& triple) const;

 private:
  std::size_t d_;
  LinMap first_project_;
  QuotientSpace second_;
};

/// Section of a quotient that maps each class to its unique representative in
/// span(normal_form). Throws NormalFormFailure if the normal form is not a
/// complement of the relation subspace.
LinMap normal_form_section(const QuotientSpace& q, const std::vector<Vec>& normal_form);

/// Canonical section of a scalar-extension balanced tensor: representatives in
/// 𝒦 ⊗ (1♯H) for L♯H, and in (H♯1) ⊗ 𝒦 for H♯R.
LinMap canonical_smash_section(const Bialgebroid& b, const SmashAlgebra& s);

CheckReport verify_bialgebroid(const Bialgebroid& b, const VerifyOptions& options = {});
CheckReport verify_left_bialgebroid(const Bialgebroid& b, const VerifyOptions& options = {});
CheckReport verify_right_bialgebroid(const Bialgebroid& b, const VerifyOptions& options = {});

struct LuHopfAlgebroid {
  Bialgebroid left;
  LinMap tau;
  LinMap gamma;  // 𝒦 ⊗_A 𝒦 → 𝒦 ⊗ 𝒦
};

CheckReport verify_lu_hopf(const LuHopfAlgebroid& lh, const VerifyOptions& options = {});

struct SymmetricHopfAlgebroid {
  Bialgebroid left;   // over L
  Bialgebroid right;  // over R
  LinMap tau;
  LinMap gamma_left;   // sections used to pick representatives
  LinMap gamma_right;
};

CheckReport verify_symmetric_hopf(const SymmetricHopfAlgebroid& sh, const VerifyOptions& options = {});

/// τ(pq) = τ(q)τ(p) on all basis pairs, τ(1) = 1.
CheckReport verify_antihom_sweep(std::string name, const FinAlgebra& k, const LinMap& tau,
                                 const VerifyOptions& options = {});

/// Column-by-column equality of two maps of the same shape.
CheckReport verify_maps_equal(std::string name, const LinMap& lhs, const LinMap& rhs,
                              const VerifyOptions& options = {});
/// Square matrix with an exact inverse (m · m⁻¹ = id swept by column).
CheckReport verify_invertible(std::string name, const LinMap& m, const VerifyOptions& options = {});

}  // namespace hopfoid
