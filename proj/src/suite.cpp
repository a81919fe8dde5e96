#include "hopfoid/suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>

#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

CheckReport renamed(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

CheckReport failed_with(const std::string& name, const std::string& note) {
  CheckReport r;
  r.name = name;
  r.passed = false;
  r.failures = 1;
  r.note = note;
  return r;
}

CheckReport yd_equal(const std::string& name, const LeftRightYD& a, const LeftRightYD& b,
                     const VerifyOptions& options) {
  return aggregate(name, {verify_maps_equal("multiplication", a.alg.mult, b.alg.mult, options),
                          verify_maps_equal("action", a.action, b.action, options),
                          verify_maps_equal("coaction", a.coaction, b.coaction, options)});
}

CheckReport yd_equal(const std::string& name, const RightLeftYD& a, const RightLeftYD& b,
                     const VerifyOptions& options) {
  return aggregate(name, {verify_maps_equal("multiplication", a.alg.mult, b.alg.mult, options),
                          verify_maps_equal("action", a.action, b.action, options),
                          verify_maps_equal("coaction", a.coaction, b.coaction, options)});
}

// Lazily built shared artifacts of one run.
class Context {
 public:
  Context(const Subject& s, const VerifyOptions& o) : subject_(s), options_(o) {}

  const PhiCompatPair& pair() const { return subject_.pair; }
  const VerifyOptions& options() const { return options_; }

  const SmashAlgebra& lh() { return lazy(lh_, [&] { return build_smash_lh(pair().left); }); }
  const SmashAlgebra& hr() { return lazy(hr_, [&] { return build_smash_hr(pair().right); }); }
  const LinMap& tau() {
    return lazy(tau_, [&] { return subject_.tau_identity ? LinMap::identity(lh().dim()) : bm_tau(lh()); });
  }
  const LinMap& tau_prime_map() {
    return lazy(tau_prime_, [&] {
      return subject_.tau_identity ? LinMap::identity(hr().dim()) : tau_prime(hr());
    });
  }
  const ThetaCompatPair& theta_pair() { return lazy(theta_, [&] { return theta_from_phi(pair()); }); }
  const SymmetricBundle& phi_bundle() {
    return lazy(phi_bundle_, [&] { return override_tau(symmetric_hopf_via_phi(pair(), options_)); });
  }
  const SymmetricBundle& theta_bundle() {
    return lazy(theta_bundle_, [&] { return override_tau(symmetric_hopf_via_theta(theta_pair(), options_)); });
  }

 private:
  template <class T, class F>
  const T& lazy(std::unique_ptr<T>& slot, F&& make) {
    if (!slot) slot = std::make_unique<T>(make());
    return *slot;
  }

  SymmetricBundle override_tau(SymmetricBundle b) {
    if (subject_.tau_identity) {
      b.on_lh.tau = LinMap::identity(b.lh.dim());
      b.on_hr.tau = LinMap::identity(b.hr.dim());
    }
    return b;
  }

  const Subject& subject_;
  VerifyOptions options_;
  std::unique_ptr<SmashAlgebra> lh_, hr_;
  std::unique_ptr<LinMap> tau_, tau_prime_;
  std::unique_ptr<ThetaCompatPair> theta_;
  std::unique_ptr<SymmetricBundle> phi_bundle_, theta_bundle_;
};

using CheckFn = std::function<CheckReport(Context&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"hopf", [](Context& c) { return validate_hopf(c.pair().left.hopf, c.options()); }},
      {"left yd", [](Context& c) { return validate_yd(c.pair().left, c.options()); }},
      {"right yd", [](Context& c) { return validate_yd(c.pair().right, c.options()); }},
      {"smash L#H",
       [](Context& c) {
         return aggregate("smash L#H", {smash_yd_condition(c.lh(), c.options()),
                                        verify_smash_embeddings(c.lh(), c.options())});
       }},
      {"smash H#R",
       [](Context& c) {
         return aggregate("smash H#R", {smash_yd_condition(c.hr(), c.options()),
                                        verify_smash_embeddings(c.hr(), c.options())});
       }},
      {"phi compatibility", [](Context& c) { return verify_phi_compat(c.pair(), c.options()); }},
      {"left bialgebroid", [](Context& c) { return verify_left_bialgebroid(left_scalar_ext(c.lh()), c.options()); }},
      {"right bialgebroid",
       [](Context& c) { return verify_right_bialgebroid(right_scalar_ext(c.hr()), c.options()); }},
      {"balanced tensor dimensions",
       [](Context& c) {
         return guarded_check("balanced tensor dimensions", c.options(), [&](CheckBuilder& b) {
           const std::size_t dh = c.pair().left.hopf.dim();
           auto count = [](std::size_t n) { return Vec::basis(1, 0, Rational(static_cast<long>(n))); };
           b.expect_equal({0}, count(left_scalar_ext(c.lh()).quotient().quotient_dim()),
                          count(c.pair().left.dim() * dh * dh));
           b.expect_equal({1}, count(right_scalar_ext(c.hr()).quotient().quotient_dim()),
                          count(c.pair().right.dim() * dh * dh));
         });
       }},
      {"lu hopf",
       [](Context& c) {
         LuHopfAlgebroid lh;
         lh.left = left_scalar_ext(c.lh());
         lh.tau = c.tau();
         lh.gamma = canonical_smash_section(lh.left, c.lh());
         return verify_lu_hopf(lh, c.options());
       }},
      {"symmetric hopf (phi)",
       [](Context& c) { return renamed(verify_bundle(c.phi_bundle(), c.options()), "symmetric hopf (phi)"); }},
      {"tau antihomomorphism", [](Context& c) { return verify_tau_antihom(c.lh(), c.tau(), c.options()); }},
      {"tau' antihomomorphism",
       [](Context& c) { return verify_tau_prime_antihom(c.hr(), c.tau_prime_map(), c.options()); }},
      {"phi maps",
       [](Context& c) { return verify_maps_phi(c.pair(), build_maps_phi(c.pair()), c.options()); }},
      {"theta compatibility", [](Context& c) { return verify_theta_compat(c.theta_pair(), c.options()); }},
      {"theta maps",
       [](Context& c) {
         return verify_maps_theta(c.theta_pair(), build_maps_theta(c.theta_pair()), c.options());
       }},
      {"symmetric hopf (theta)",
       [](Context& c) { return renamed(verify_bundle(c.theta_bundle(), c.options()), "symmetric hopf (theta)"); }},
      {"phi theta round trip",
       [](Context& c) {
         const PhiCompatPair back = phi_from_theta(c.theta_pair());
         const ThetaCompatPair again = theta_from_phi(back);
         return aggregate("phi theta round trip",
                          {verify_maps_equal("phi recovered", back.phi, c.pair().phi, c.options()),
                           verify_maps_equal("phi_inv recovered", back.phi_inv, c.pair().phi_inv, c.options()),
                           verify_maps_equal("theta recovered", again.theta, c.theta_pair().theta, c.options()),
                           verify_maps_equal("theta_inv recovered", again.theta_inv, c.theta_pair().theta_inv,
                                             c.options())});
       }},
      {"phi and theta bundles agree",
       [](Context& c) {
         return compare_bundles("phi and theta bundles agree", c.phi_bundle(), c.theta_bundle(), c.options());
       }},
      {"converse diagnostic",
       [](Context& c) {
         std::vector<CheckReport> parts;
         for (int route = 0; route < 2; ++route) {
           const char* name = route == 0 ? "from psi" : "from psi_bar_inv";
           try {
             const LinMap psi =
                 route == 0 ? build_maps_phi(c.pair()).Psi : build_maps_theta(c.theta_pair()).Psi_bar_inv;
             parts.push_back(renamed(converse_diagnostic(c.pair().left, c.pair().right, psi, c.options()), name));
           } catch (const Error& e) {
             parts.push_back(failed_with(name, e.what()));
           }
         }
         return aggregate("converse diagnostic", std::move(parts));
       }},
      {"paired round trips",
       [](Context& c) {
         const auto& p = c.pair();
         const auto& t = c.theta_pair();
         const PairingIso phi{IsoKind::Phi, p.phi, p.phi_inv, p.right.alg.labels};
         const PairingIso phi_back{IsoKind::Phi, p.phi, p.phi_inv, p.left.alg.labels};
         const PairingIso theta{IsoKind::Theta, t.theta, t.theta_inv, p.right.alg.labels};
         const PairingIso theta_back{IsoKind::Theta, t.theta, t.theta_inv, p.left.alg.labels};
         std::vector<CheckReport> parts;
         auto guarded = [&](const std::string& name, const std::function<CheckReport()>& body) {
           try {
             parts.push_back(body());
           } catch (const Error& e) {
             parts.push_back(failed_with(name, e.what()));
           }
         };
         guarded("phi: left to right to left", [&] {
           return yd_equal("phi: left to right to left",
                           paired_yd_from_right(paired_yd_from_left(p.left, phi), phi_back), p.left, c.options());
         });
         guarded("phi: right to left to right", [&] {
           return yd_equal("phi: right to left to right",
                           paired_yd_from_left(paired_yd_from_right(p.right, phi_back), phi), p.right, c.options());
         });
         guarded("theta: left to right to left", [&] {
           return yd_equal("theta: left to right to left",
                           paired_yd_from_right(paired_yd_from_left(p.left, theta), theta_back), p.left,
                           c.options());
         });
         guarded("theta: right to left to right", [&] {
           return yd_equal("theta: right to left to right",
                           paired_yd_from_left(paired_yd_from_right(p.right, theta_back), theta), p.right,
                           c.options());
         });
         guarded("phi: derived right matches", [&] {
           return yd_equal("phi: derived right matches", paired_yd_from_left(p.left, phi), p.right, c.options());
         });
         guarded("theta: derived right matches", [&] {
           return yd_equal("theta: derived right matches", paired_yd_from_left(p.left, theta), p.right,
                           c.options());
         });
         return aggregate("paired round trips", std::move(parts));
       }},
      {"tau inverse",
       [](Context& c) {
         const LinMap ti = tau_inverse(c.lh());
         const LinMap tpi = tau_prime_inverse(c.hr());
         const auto id = LinMap::identity(c.lh().dim());
         return aggregate("tau inverse",
                          {verify_maps_equal("tau tau_inv = id", compose(c.tau(), ti), id, c.options()),
                           verify_maps_equal("tau_inv tau = id", compose(ti, c.tau()), id, c.options()),
                           verify_maps_equal("tau' tau'_inv = id", compose(c.tau_prime_map(), tpi), id, c.options()),
                           verify_maps_equal("tau'_inv tau' = id", compose(tpi, c.tau_prime_map()), id,
                                             c.options())});
       }},
  };
  return checks;
}

}  // namespace

Subject subject_of(const InstanceDescriptor& d, const std::string& perturbation) {
  Subject s;
  s.instance = d.name;
  s.perturbation = perturbation;
  if (perturbation.empty()) {
    s.pair = d.pair;
  } else {
    const Perturbation& p = d.perturbation(perturbation);
    s.pair = apply_perturbation(d.pair, p);
    s.tau_identity = p.tau_identity;
  }
  return s;
}

std::optional<Suite> parse_suite(const std::string& name) {
  static const std::map<std::string, Suite> names = {
      {"hopf", Suite::Hopf}, {"yd", Suite::Yd}, {"bialgebroid", Suite::Bialgebroid}, {"lu", Suite::Lu},
      {"symmetric", Suite::Symmetric}, {"theorems", Suite::Theorems}, {"all", Suite::All}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Hopf: return "hopf";
    case Suite::Yd: return "yd";
    case Suite::Bialgebroid: return "bialgebroid";
    case Suite::Lu: return "lu";
    case Suite::Symmetric: return "symmetric";
    case Suite::Theorems: return "theorems";
    case Suite::All: return "all";
  }
  return "all";
}

std::vector<std::string> suite_checks(Suite s) {
  switch (s) {
    case Suite::Hopf: return {"hopf"};
    case Suite::Yd: return {"left yd", "right yd", "smash L#H", "smash H#R", "phi compatibility"};
    case Suite::Bialgebroid: return {"left bialgebroid", "right bialgebroid", "balanced tensor dimensions"};
    case Suite::Lu: return {"lu hopf"};
    case Suite::Symmetric: return {"symmetric hopf (phi)"};
    case Suite::Theorems:
      return {"tau antihomomorphism", "tau' antihomomorphism", "phi maps", "symmetric hopf (phi)",
              "theta compatibility", "theta maps", "symmetric hopf (theta)", "phi theta round trip",
              "phi and theta bundles agree", "converse diagnostic", "paired round trips", "tau inverse"};
    case Suite::All: {
      std::vector<std::string> out;
      for (const auto& [name, fn] : registry()) out.push_back(name);
      return out;
    }
  }
  return {};
}

SuiteReport run_suite(const Subject& subject, Suite suite, const VerifyOptions& options) {
  SuiteReport report;
  report.instance = subject.instance;
  report.perturbation = subject.perturbation;
  report.suite = suite_name(suite);
  Context ctx(subject, options);
  for (const auto& name : suite_checks(suite)) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    for (const auto& [id, fn] : registry()) {
      if (id != name) continue;
      try {
        r = renamed(fn(ctx), name);
      } catch (const std::exception& e) {
        r = failed_with(name, e.what());
      }
    }
    report.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    report.passed = report.passed && r.passed;
    report.checks.push_back(std::move(r));
  }
  return report;
}

bool any_failed(const CheckReport& r, const std::string& name) {
  if (r.name == name && !r.passed) return true;
  for (const auto& p : r.parts) {
    if (any_failed(p, name)) return true;
  }
  return false;
}

bool any_failed(const SuiteReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (any_failed(c, name)) return true;
  }
  return false;
}

}  // namespace hopfoid
