#include "hopfoid/report.hpp"

#include <cstdio>
#include <sstream>

namespace hopfoid {

namespace {

std::string vec_text(const Vec& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : v.entries()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(e.index) + ": " + to_string(e.value);
  }
  return out + "}";
}

std::string index_text(const std::vector<std::size_t>& index) {
  std::string out = "(";
  for (std::size_t i = 0; i < index.size(); ++i) out += (i ? ", " : "") + std::to_string(index[i]);
  return out + ")";
}

std::string pad(std::string s, std::size_t width) {
  // Pad by code points so that labels with ♯ or primes still align.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

void render(std::ostringstream& out, const CheckReport& r, std::size_t depth, const std::string& timing) {
  out << pad(std::string(2 * depth, ' ') + r.name, 56) << ' ' << pad(r.passed ? "pass" : "FAIL", 6) << ' '
      << pad(std::to_string(r.checked), 9) << ' ' << pad(std::to_string(r.failures), 8);
  if (!timing.empty()) out << ' ' << timing;
  out << '\n';
  const std::string indent(2 * depth + 4, ' ');
  if (!r.note.empty()) out << indent << "note: " << r.note << '\n';
  for (const auto& w : r.witnesses) {
    out << indent << "witness " << index_text(w.index) << ": lhs " << vec_text(w.lhs) << " rhs " << vec_text(w.rhs)
        << '\n';
  }
  for (const auto& p : r.parts) render(out, p, depth + 1, "");
}

}  // namespace

nlohmann::ordered_json vec_json(const Vec& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : v.entries()) out.push_back({e.index, to_string(e.value)});
  return out;
}

nlohmann::ordered_json check_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  if (!r.note.empty()) j["note"] = r.note;
  auto ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json wj;
    wj["index"] = w.index;
    wj["lhs"] = vec_json(w.lhs);
    wj["rhs"] = vec_json(w.rhs);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  auto parts = nlohmann::ordered_json::array();
  for (const auto& p : r.parts) parts.push_back(check_json(p));
  j["parts"] = std::move(parts);
  return j;
}

nlohmann::ordered_json report_json(const SuiteReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["perturbation"] = r.perturbation;
  j["suite"] = r.suite;
  j["passed"] = r.passed;
  auto checks = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    auto c = check_json(r.checks[i]);
    if (with_timing) c["seconds"] = r.seconds[i];
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string render_table(const SuiteReport& r, bool with_timing) {
  std::ostringstream out;
  out << "instance      " << r.instance << '\n';
  if (!r.perturbation.empty()) out << "perturbation  " << r.perturbation << '\n';
  out << "suite         " << r.suite << "\n\n";
  out << pad("check", 56) << ' ' << pad("result", 6) << ' ' << pad("checked", 9) << ' ' << pad("failures", 8);
  if (with_timing) out << " seconds";
  out << '\n';
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    std::string timing;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.seconds[i]);
      timing = buf;
    }
    render(out, r.checks[i], 0, timing);
  }
  out << "\noverall       " << (r.passed ? "pass" : "FAIL") << '\n';
  return out.str();
}

}  // namespace hopfoid
