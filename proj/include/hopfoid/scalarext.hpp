#pragma once

#include "hopfoid/algebroid.hpp"
#include "hopfoid/smash.hpp"
#include "hopfoid/yd.hpp"

namespace hopfoid {

/// Left-right YD algebra L and right-left YD algebra R over the same H with an
/// algebra antiisomorphism φ: L → R.
struct PhiCompatPair {
  LeftRightYD left;
  RightLeftYD right;
  LinMap phi;
  LinMap phi_inv;
};

/// Same data with the antiisomorphism θ: R → L.
struct ThetaCompatPair {
  LeftRightYD left;
  RightLeftYD right;
  LinMap theta;
  LinMap theta_inv;
};

/// L♯H over L: α(x) = x♯1, β = ρ, Δ(x♯f) = x♯f₁ ⊗ 1♯f₂, ε(x♯f) = ε(f)x.
/// The balanced tensor is built without the commuting precheck so that
/// broken inputs surface as failed sub-checks rather than exceptions.
Bialgebroid left_scalar_ext(const LeftRightYD& yd);
Bialgebroid left_scalar_ext(const SmashAlgebra& lh);
/// H♯R over R: α(y) = 1♯y, β = λ, Δ(f♯y) = f₁♯1 ⊗ f₂♯y, ε(f♯y) = ε(f)y.
Bialgebroid right_scalar_ext(const RightLeftYD& yd);
Bialgebroid right_scalar_ext(const SmashAlgebra& hr);

/// τ(x♯f) = (1♯S(f)S²(x₁))(x₀♯1) on L♯H.
LinMap bm_tau(const LeftRightYD& yd);
LinMap bm_tau(const SmashAlgebra& lh);
/// τ′(f♯y) = (1♯y₀)(S²(y₋₁)S(f)♯1) on H♯R.
LinMap tau_prime(const RightLeftYD& yd);
LinMap tau_prime(const SmashAlgebra& hr);
/// τ⁻¹(x♯f) = (1♯S⁻¹f)ρ(x). Needs S⁻¹.
LinMap tau_inverse(const SmashAlgebra& lh);
/// τ′⁻¹(f♯y) = λ(y)(S⁻¹f♯1). Needs S⁻¹.
LinMap tau_prime_inverse(const SmashAlgebra& hr);

/// Antihomomorphism sweep of τ over all basis pairs, plus the commutation
/// sweep τ(a♯1)(c♯1) = (c♯1)τ(a♯1).
CheckReport verify_tau_antihom(const LeftRightYD& yd, const VerifyOptions& options = {});
CheckReport verify_tau_antihom(const SmashAlgebra& lh, const LinMap& tau, const VerifyOptions& options = {});
CheckReport verify_tau_prime_antihom(const SmashAlgebra& hr, const LinMap& tau_prime,
                                     const VerifyOptions& options = {});

/// φ(f▷x) = φ(x)◁Sf, λ(φ(x)) = S(x₁) ⊗ φ(x₀), and φ an antiisomorphism.
CheckReport verify_phi_compat(const PhiCompatPair& p, const VerifyOptions& options = {});
/// θ(y◁f) = Sf▷θ(y), ρ(θ(y)) = θ(y₀) ⊗ S(y₋₁), and θ an antiisomorphism.
CheckReport verify_theta_compat(const ThetaCompatPair& p, const VerifyOptions& options = {});

/// Φ(x♯f) = Sf♯φ(x); Ψ(x♯f) = λ(φ(x))(f♯1); Ψ⁻¹(f♯y) = (1♯fS(y₋₁))(φ⁻¹(y₀)♯1).
struct PhiMaps {
  LinMap Phi;
  LinMap Psi;
  LinMap Psi_inv;
};

/// Throws NotMutuallyInverse when Ψ and the displayed Ψ⁻¹ disagree.
PhiMaps build_maps_phi(const PhiCompatPair& p);
/// Ψ∘Ψ⁻¹ = id, Ψ⁻¹∘Ψ = id, Ψτ = τ′Ψ = Φ, Ψ(L♯1) = Im λ, Ψ⁻¹(1♯R) = Im ρ, and
/// bijectivity of Φ, τ, τ′.
CheckReport verify_maps_phi(const PhiCompatPair& p, const PhiMaps& maps, const VerifyOptions& options = {});

/// Ψ̄(f♯y) = (1♯f)ρ(θ(y)); Ψ̄⁻¹(x♯f) = (1♯θ⁻¹(x₀))(S(x₁)f♯1); Φ̄(f♯y) = θ(y)♯Sf.
struct ThetaMaps {
  LinMap Phi_bar;
  LinMap Psi_bar;
  LinMap Psi_bar_inv;
};

ThetaMaps build_maps_theta(const ThetaCompatPair& p);
/// Ψ̄ invertible, τΨ̄ = Ψ̄τ′ = Φ̄, Ψ̄(1♯R) = Im ρ, Ψ̄⁻¹(L♯1) = Im λ.
CheckReport verify_maps_theta(const ThetaCompatPair& p, const ThetaMaps& maps, const VerifyOptions& options = {});

/// One symmetric Hopf algebroid in its two smash presentations: on L♯H
/// (`on_lh`) and on H♯R (`on_hr`). `iso` maps the first to the second (Ψ for
/// the φ route, Ψ̄⁻¹ for the θ route). `build` records the cross-presentation
/// identities checked while building.
struct SymmetricBundle {
  SmashAlgebra lh;
  SmashAlgebra hr;
  SymmetricHopfAlgebroid on_lh;
  SymmetricHopfAlgebroid on_hr;
  LinMap iso;
  LinMap iso_inv;
  CheckReport build;
};

SymmetricBundle symmetric_hopf_via_phi(const PhiCompatPair& p, const VerifyOptions& options = {});
SymmetricBundle symmetric_hopf_via_theta(const ThetaCompatPair& p, const VerifyOptions& options = {});

/// Both presentations and verify_symmetric_hopf on each.
CheckReport verify_bundle(const SymmetricBundle& b, const VerifyOptions& options = {});
/// Every structure map of both presentations agrees as a matrix.
CheckReport compare_bundles(std::string name, const SymmetricBundle& a, const SymmetricBundle& b,
                            const VerifyOptions& options = {});

/// θ(y) = S(y₋₁)▷φ⁻¹(y₀), θ⁻¹(x) = φ(x₀)◁x₁.
ThetaCompatPair theta_from_phi(const PhiCompatPair& p);
/// φ(x) = θ⁻¹(x₀)◁S(x₁), φ⁻¹(y) = y₋₁▷θ(y₀).
PhiCompatPair phi_from_theta(const ThetaCompatPair& p);

enum class IsoKind { Phi, Theta };

/// An algebra antiisomorphism used to transport a YD structure to the other
/// side. For Phi, `forward` maps L → R; for Theta it maps R → L.
struct PairingIso {
  IsoKind kind = IsoKind::Phi;
  LinMap forward;
  LinMap backward;
  /// Basis labels for the derived algebra; empty copies the given ones.
  std::vector<std::string> labels;
};

/// Right-left YD algebra R whose multiplication makes the iso an
/// antiisomorphism; action and coaction are transported through it. All
/// routes use S⁻¹ and raise AntipodeNotInvertible when S is singular.
RightLeftYD paired_yd_from_left(const LeftRightYD& yd, const PairingIso& iso);
LeftRightYD paired_yd_from_right(const RightLeftYD& yd, const PairingIso& iso);

/// Checks hypotheses (throws InvalidHypothesis naming the first that fails),
/// extracts φ = ε′_R Ψ α_L and θ = ε_L Ψ⁻¹ α′_R, and verifies the conclusions.
CheckReport converse_diagnostic(const LeftRightYD& left, const RightLeftYD& right, const LinMap& psi,
                                const VerifyOptions& options = {});

}  // namespace hopfoid
