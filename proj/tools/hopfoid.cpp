// Command-line front end: list catalog instances, run verification suites,
// export instances. Exit status: 0 pass, 1 verification failure, 2 structural
// or usage error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfoid/errors.hpp"
#include "hopfoid/instance_io.hpp"
#include "hopfoid/report.hpp"
#include "hopfoid/suite.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kStructural = 2;

hopfoid::InstanceDescriptor resolve(const std::string& name_or_path) {
  for (const auto& n : hopfoid::instance_names()) {
    if (n == name_or_path) return hopfoid::make_instance(n);
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::runtime_error("no catalog instance or readable file named '" + name_or_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return hopfoid::parse_instance(buf.str());
}

int cmd_list() {
  for (const auto& n : hopfoid::instance_names()) {
    const auto d = hopfoid::make_instance(n);
    std::cout << n << "  (dim H = " << d.hopf().dim() << ", dim L = " << d.pair.left.dim()
              << ", dim K = " << d.hopf().dim() * d.pair.left.dim() << ")  " << d.description << '\n';
    for (const auto& p : d.perturbations) std::cout << "    perturbation " << p.name << ": " << p.description << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of scalar-extension bialgebroids and symmetric Hopf algebroids"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List catalog instances and their perturbations");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string instance, suite = "all", perturbation, report_path;
  std::size_t witness_cap = 10;
  bool timing = false;
  verify->add_option("--instance", instance, "Catalog name or instance file")->required();
  verify->add_option("--suite", suite, "hopf | yd | bialgebroid | lu | symmetric | theorems | all");
  verify->add_option("--perturbation", perturbation, "Apply a named perturbation of the instance");
  verify->add_option("--report", report_path, "Write the JSON report here");
  verify->add_option("--witness-cap", witness_cap, "Witnesses kept per check");
  verify->add_flag("--timing", timing, "Include wall-clock seconds per check");

  auto* exp = app.add_subcommand("export", "Write an instance file");
  std::string export_name, out_path;
  exp->add_option("--instance", export_name, "Catalog name or instance file")->required();
  exp->add_option("--out", out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kStructural;
  }

  try {
    if (*list) return cmd_list();

    if (*verify) {
      const auto s = hopfoid::parse_suite(suite);
      if (!s) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kStructural;
      }
      const auto d = resolve(instance);
      const auto subject = hopfoid::subject_of(d, perturbation);
      const auto report = hopfoid::run_suite(subject, *s, {witness_cap});
      std::cout << hopfoid::render_table(report, timing);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot write '" + report_path + "'");
        out << hopfoid::report_json(report, timing).dump(2) << '\n';
      }
      return report.passed ? kPass : kFail;
    }

    if (*exp) {
      const auto d = resolve(export_name);
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
      out << hopfoid::serialize_instance(d);
      return kPass;
    }
  } catch (const hopfoid::ParseError& e) {
    std::cerr << "parse error at " << e.what() << '\n';
    return kStructural;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kStructural;
  }
  return kStructural;
}
