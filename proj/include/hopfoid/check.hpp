#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hopfoid/errors.hpp"
#include "hopfoid/linalg.hpp"

namespace hopfoid {

/// A failing basis tuple together with both evaluated sides.
struct Witness {
  std::vector<std::size_t> index;
  Vec lhs;
  Vec rhs;
};

/// Outcome of one identity sweep. A report either carries its own witnesses
/// (a leaf) or aggregates sub-reports in `parts`; it passes iff it has no
/// failures and every part passes. An exception raised while checking is
/// recorded as a single failure with the message in `note`.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<Witness> witnesses;
  std::string note;
  std::vector<CheckReport> parts;

  /// Depth-first search by name; nullptr if absent.
  const CheckReport* find(std::string_view part_name) const;
};

struct VerifyOptions {
  std::size_t witness_cap = 10;
};

class CheckBuilder {
 public:
  CheckBuilder(std::string name, const VerifyOptions& options);

  /// Records one comparison; returns whether the sides agreed.
  bool expect_equal(std::vector<std::size_t> index, const Vec& lhs, const Vec& rhs);
  void fail(std::vector<std::size_t> index, Vec lhs, Vec rhs);
  void fail_with_note(const std::string& note);
  void add_part(CheckReport part);
  void set_note(std::string note) { report_.note = std::move(note); }
  bool ok() const { return report_.failures == 0; }
  CheckReport finish() &&;

 private:
  CheckReport report_;
  std::size_t cap_;
};

CheckReport aggregate(std::string name, std::vector<CheckReport> parts);

/// Runs `body(builder)`; library errors become a failed report with a note.
template <class Body>
CheckReport guarded_check(std::string name, const VerifyOptions& options, Body&& body) {
  CheckBuilder b(name, options);
  try {
    body(b);
  } catch (const Error& e) {
    b.fail_with_note(e.what());
  }
  return std::move(b).finish();
}

}  // namespace hopfoid
