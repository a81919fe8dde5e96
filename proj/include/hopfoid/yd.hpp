#pragma once

#include "hopfoid/check.hpp"
#include "hopfoid/hopf.hpp"

namespace hopfoid {

/// Left H-action ▷ (flat index h·dim L + a) and right coaction ρ: L → L ⊗ H.
struct LeftRightYD {
  FinHopf hopf;
  FinAlgebra alg;
  LinMap action;
  LinMap coaction;

  std::size_t dim() const { return alg.dim(); }
  const Vec& act(std::size_t h, std::size_t a) const { return action.column(h * dim() + a); }
  Vec act(const Vec& h, const Vec& a) const;
  const Vec& coact(std::size_t a) const { return coaction.column(a); }
  void check_shapes() const;
};

/// Right H-action ◁ (flat index a·dim H + h) and left coaction λ: R → H ⊗ R.
struct RightLeftYD {
  FinHopf hopf;
  FinAlgebra alg;
  LinMap action;
  LinMap coaction;

  std::size_t dim() const { return alg.dim(); }
  const Vec& act(std::size_t a, std::size_t h) const { return action.column(a * hopf.dim() + h); }
  Vec act(const Vec& a, const Vec& h) const;
  const Vec& coact(std::size_t a) const { return coaction.column(a); }
  void check_shapes() const;
};

CheckReport verify_module_structure(const LeftRightYD& yd, const VerifyOptions& options = {});
CheckReport verify_comodule_structure(const LeftRightYD& yd, const VerifyOptions& options = {});
CheckReport verify_yd_condition(const LeftRightYD& yd, const VerifyOptions& options = {});
CheckReport verify_braided_commutativity(const LeftRightYD& yd, const VerifyOptions& options = {});

CheckReport verify_module_structure(const RightLeftYD& yd, const VerifyOptions& options = {});
CheckReport verify_comodule_structure(const RightLeftYD& yd, const VerifyOptions& options = {});
CheckReport verify_yd_condition(const RightLeftYD& yd, const VerifyOptions& options = {});
CheckReport verify_braided_commutativity(const RightLeftYD& yd, const VerifyOptions& options = {});

/// Algebra axioms of the underlying algebra plus the four sweeps above.
CheckReport validate_yd(const LeftRightYD& yd, const VerifyOptions& options = {});
CheckReport validate_yd(const RightLeftYD& yd, const VerifyOptions& options = {});

}  // namespace hopfoid
