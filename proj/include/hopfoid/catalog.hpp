#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfoid/scalarext.hpp"

namespace hopfoid {

/// A named mutation of an instance. Each replacement that is set overrides the
/// matching matrix of the unperturbed pair; `tau_identity` swaps the antipode
/// τ of the bundles for the identity map.
struct Perturbation {
  std::string name;
  std::string description;
  std::optional<LinMap> antipode;
  std::optional<LinMap> left_action;
  std::optional<LinMap> left_coaction;
  bool tau_identity = false;
  /// Check names (anywhere in the report tree) that must fail.
  std::vector<std::string> expected_failures;
};

struct InstanceDescriptor {
  std::string name;
  std::string description;
  PhiCompatPair pair;
  std::vector<Perturbation> perturbations;

  const FinHopf& hopf() const { return pair.left.hopf; }
  /// Throws std::out_of_range for an unknown name.
  const Perturbation& perturbation(const std::string& name) const;
};

PhiCompatPair apply_perturbation(const PhiCompatPair& base, const Perturbation& p);

/// Group algebra from a Cayley table: grouplike Δ, ε = 1, S(g) = g⁻¹.
/// Throws NotAGroup unless the table is associative with identity and inverses.
FinHopf group_algebra(const std::vector<std::vector<std::size_t>>& cayley, std::vector<std::string> labels);
FinHopf cyclic_group_algebra(std::size_t n);
/// S₃ in the order e, (12), (13), (23), (123), (132).
FinHopf s3_group_algebra();
/// Sweedler's H₄ on the basis 1, g, x, gx.
FinHopf sweedler_hopf();

/// L = k[G] with g▷a = gag⁻¹ and ρ(a) = a ⊗ a⁻¹. Expects a group algebra.
LeftRightYD adjoint_group_yd(const FinHopf& group);
/// L = k^G with g▷δ_x = δ_{gxg⁻¹} and ρ(δ_x) = δ_x ⊗ e.
LeftRightYD dual_group_yd(const FinHopf& group);
/// A = k[y]/(y²) over H₄: g▷y = −y, x▷y = 0, ρ(y) = y ⊗ g.
LeftRightYD sweedler_yd();
/// A = k with the counit action and the unit coaction.
LeftRightYD trivial_yd(const FinHopf& h);

/// R derived from L with φ = id on the basis.
PhiCompatPair pair_from_left(const LeftRightYD& left, std::vector<std::string> right_labels = {});

std::vector<std::string> instance_names();
/// Throws std::out_of_range for an unknown name.
InstanceDescriptor make_instance(const std::string& name);

}  // namespace hopfoid
