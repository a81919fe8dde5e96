#include "hopfoid/check.hpp"

namespace hopfoid {

const CheckReport* CheckReport::find(std::string_view part_name) const {
  if (name == part_name) return this;
  for (const auto& p : parts) {
    if (const auto* hit = p.find(part_name)) return hit;
  }
  return nullptr;
}

CheckBuilder::CheckBuilder(std::string name, const VerifyOptions& options) : cap_(options.witness_cap) {
  report_.name = std::move(name);
}

bool CheckBuilder::expect_equal(std::vector<std::size_t> index, const Vec& lhs, const Vec& rhs) {
  ++report_.checked;
  if (lhs == rhs) return true;
  ++report_.failures;
  if (report_.witnesses.size() < cap_) report_.witnesses.push_back({std::move(index), lhs, rhs});
  return false;
}

void CheckBuilder::fail(std::vector<std::size_t> index, Vec lhs, Vec rhs) {
  ++report_.checked;
  ++report_.failures;
  if (report_.witnesses.size() < cap_) {
    report_.witnesses.push_back({std::move(index), std::move(lhs), std::move(rhs)});
  }
}

void CheckBuilder::fail_with_note(const std::string& note) {
  ++report_.failures;
  report_.note = report_.note.empty() ? note : report_.note + "; " + note;
}

void CheckBuilder::add_part(CheckReport part) { report_.parts.push_back(std::move(part)); }

CheckReport CheckBuilder::finish() && {
  bool ok = report_.failures == 0;
  for (const auto& p : report_.parts) ok = ok && p.passed;
  report_.passed = ok;
  return std::move(report_);
}

CheckReport aggregate(std::string name, std::vector<CheckReport> parts) {
  CheckReport r;
  r.name = std::move(name);
  r.parts = std::move(parts);
  for (const auto& p : r.parts) r.passed = r.passed && p.passed;
  return r;
}

}  // namespace hopfoid
