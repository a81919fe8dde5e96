#pragma once

#include <memory>

#include "hopfoid/check.hpp"
#include "hopfoid/yd.hpp"

namespace hopfoid {

enum class SmashKind { LH, HR };

/// L♯H (basis a·dim H + h) or H♯R (basis h·dim R + a) with the full
/// multiplication table materialized.
struct SmashAlgebra {
  SmashKind kind = SmashKind::LH;
  FinAlgebra total;
  LinMap embed_first;   // L → L♯H or H → H♯R
  LinMap embed_second;  // H → L♯H or R → H♯R
  std::size_t dim_first = 0;
  std::size_t dim_second = 0;
  /// False when the source failed the module-algebra sweep at build time.
  bool validated = false;
  std::shared_ptr<const LeftRightYD> lh_source;
  std::shared_ptr<const RightLeftYD> hr_source;

  std::size_t dim() const { return total.dim(); }
  std::size_t index(std::size_t first, std::size_t second) const { return first * dim_second + second; }
  Vec basis(std::size_t first, std::size_t second) const { return total.basis(index(first, second)); }
  Vec multiply(const Vec& x, const Vec& y) const { return total.multiply(x, y); }
};

SmashAlgebra build_smash_lh(const LeftRightYD& yd);
SmashAlgebra build_smash_hr(const RightLeftYD& yd);

/// h·ρ(a) = ρ(h₂▷a)·h₁ in L♯H, or λ(a)·h = h₂·λ(a◁h₁) in H♯R.
CheckReport smash_yd_condition(const SmashAlgebra& s, const VerifyOptions& options = {});
/// (a♯1)(1♯h) = a♯h, resp. (h♯1)(1♯a) = h♯a, and both embeddings are homomorphisms.
CheckReport verify_smash_embeddings(const SmashAlgebra& s, const VerifyOptions& options = {});

}  // namespace hopfoid
