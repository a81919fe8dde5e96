#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfoid/catalog.hpp"

namespace hopfoid {

/// What a suite runs on: a compatible pair, optionally perturbed.
struct Subject {
  std::string instance;
  std::string perturbation;  // empty when unperturbed
  PhiCompatPair pair;
  bool tau_identity = false;
};

Subject subject_of(const InstanceDescriptor& d, const std::string& perturbation = "");

enum class Suite { Hopf, Yd, Bialgebroid, Lu, Symmetric, Theorems, All };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);
/// Top-level check names run by a suite, in report order.
std::vector<std::string> suite_checks(Suite s);

struct SuiteReport {
  std::string instance;
  std::string perturbation;
  std::string suite;
  std::vector<CheckReport> checks;
  std::vector<double> seconds;  // wall time per top-level check
  bool passed = true;
};

/// Never throws for verification problems: a failing precondition becomes a
/// failed check carrying the error message.
SuiteReport run_suite(const Subject& subject, Suite suite, const VerifyOptions& options = {});

/// True when some node named `name` in the tree failed.
bool any_failed(const CheckReport& r, const std::string& name);
bool any_failed(const SuiteReport& r, const std::string& name);

}  // namespace hopfoid
