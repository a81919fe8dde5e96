#include "hopfoid/catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

using Table = std::vector<std::vector<std::size_t>>;

std::size_t single_index(const Vec& v) {
  if (v.nnz() != 1 || v.entries()[0].value != 1) throw DimensionMismatch("expected a basis vector");
  return v.entries()[0].index;
}

// Permutations of {0,1,2} in the order e, (12), (13), (23), (123), (132).
const std::array<std::array<std::size_t, 3>, 6> kS3 = {{
    {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
}};
const std::array<int, 6> kS3Sign = {1, -1, -1, -1, 1, 1};

Table s3_table() {
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> c{};
      for (std::size_t k = 0; k < 3; ++k) c[k] = kS3[i][kS3[j][k]];
      t[i][j] = static_cast<std::size_t>(std::find(kS3.begin(), kS3.end(), c) - kS3.begin());
    }
  }
  return t;
}

FinAlgebra one_dim_algebra() {
  FinAlgebra a;
  a.labels = {"1"};
  a.mult = LinMap(1, 1, {Vec::basis(1, 0)});
  a.unit = Vec::basis(1, 0);
  return a;
}

FinHopf with_antipode(const FinHopf& h, LinMap s) { return FinHopf(h.algebra(), h.coalgebra(), std::move(s)); }

Perturbation tau_identity_perturbation(std::vector<std::string> expected) {
  Perturbation p;
  p.name = "tau-identity";
  p.description = "antipode of the algebroid replaced by the identity map";
  p.tau_identity = true;
  p.expected_failures = std::move(expected);
  return p;
}

}  // namespace

const Perturbation& InstanceDescriptor::perturbation(const std::string& pname) const {
  for (const auto& p : perturbations) {
    if (p.name == pname) return p;
  }
  throw std::out_of_range("instance '" + name + "' has no perturbation '" + pname + "'");
}

PhiCompatPair apply_perturbation(const PhiCompatPair& base, const Perturbation& p) {
  PhiCompatPair out = base;
  if (p.antipode) {
    out.left.hopf = with_antipode(base.left.hopf, *p.antipode);
    out.right.hopf = out.left.hopf;
  }
  if (p.left_action) out.left.action = *p.left_action;
  if (p.left_coaction) out.left.coaction = *p.left_coaction;
  out.left.check_shapes();
  return out;
}

FinHopf group_algebra(const Table& cayley, std::vector<std::string> labels) {
  const std::size_t n = cayley.size();
  if (n == 0) throw NotAGroup("empty table");
  if (labels.size() != n) throw DimensionMismatch("label count differs from table size");
  for (const auto& row : cayley) {
    if (row.size() != n) throw NotAGroup("table is not square");
    for (auto v : row) {
      if (v >= n) throw NotAGroup("table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) {
          throw NotAGroup("not associative at (" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
        }
      }
    }
  }
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) ok = ok && cayley[i][j] == j && cayley[j][i] == j;
    if (ok) e = i;
  }
  if (e == n) throw NotAGroup("no identity element");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cayley[i][j] == e && cayley[j][i] == e) inv[i] = j;
    }
    if (inv[i] == n) throw NotAGroup("element " + labels[i] + " has no inverse");
  }
  FinAlgebra alg;
  alg.labels = std::move(labels);
  alg.mult = LinMap::from_columns(n * n, n, [&](std::size_t j) { return Vec::basis(n, cayley[j / n][j % n]); });
  alg.unit = Vec::basis(n, e);
  FinCoalgebra co;
  co.comult = LinMap::from_columns(n, n * n, [&](std::size_t i) { return Vec::basis(n * n, i * n + i); });
  co.counit = LinMap::from_columns(n, 1, [](std::size_t) { return Vec::basis(1, 0); });
  LinMap s = LinMap::from_columns(n, n, [&](std::size_t i) { return Vec::basis(n, inv[i]); });
  return FinHopf(std::move(alg), std::move(co), std::move(s));
}

FinHopf cyclic_group_algebra(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    labels.push_back(i == 0 ? "e" : n == 2 ? "u" : "u^" + std::to_string(i));
  }
  return group_algebra(t, std::move(labels));
}

FinHopf s3_group_algebra() { return group_algebra(s3_table(), {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}); }

FinHopf sweedler_hopf() {
  // basis 1, g, x, gx
  const std::size_t n = 4;
  auto b = [&](std::size_t i, int c = 1) { return Vec::basis(n, i, c); };
  const std::array<std::array<Vec, 4>, 4> prod = {{
      {b(0), b(1), b(2), b(3)},
      {b(1), b(0), b(3), b(2)},
      {b(2), b(3, -1), Vec(n), Vec(n)},
      {b(3), b(2, -1), Vec(n), Vec(n)},
  }};
  FinAlgebra alg;
  alg.labels = {"1", "g", "x", "gx"};
  alg.mult = LinMap::from_columns(n * n, n, [&](std::size_t j) { return prod[j / n][j % n]; });
  alg.unit = b(0);
  FinCoalgebra co;
  co.comult = LinMap(n, n * n,
                     {tensor(b(0), b(0)), tensor(b(1), b(1)), tensor(b(2), b(0)) + tensor(b(1), b(2)),
                      tensor(b(3), b(1)) + tensor(b(0), b(3))});
  co.counit = LinMap(n, 1, {Vec::basis(1, 0), Vec::basis(1, 0), Vec(1), Vec(1)});
  LinMap s(n, n, {b(0), b(1), b(3, -1), b(2)});
  return FinHopf(std::move(alg), std::move(co), std::move(s));
}

LeftRightYD adjoint_group_yd(const FinHopf& g) {
  const std::size_t n = g.dim();
  LeftRightYD yd;
  yd.hopf = g;
  yd.alg = g.algebra();
  yd.action = LinMap::from_columns(n * n, n, [&](std::size_t j) {
    return g.multiply(g.product(j / n, j % n), g.S(j / n));
  });
  yd.coaction = LinMap::from_columns(n, n * n, [&](std::size_t a) { return tensor(g.basis(a), g.S(a)); });
  return yd;
}

LeftRightYD dual_group_yd(const FinHopf& g) {
  const std::size_t n = g.dim();
  LeftRightYD yd;
  yd.hopf = g;
  for (const auto& l : g.labels()) yd.alg.labels.push_back("δ" + l);
  yd.alg.mult = LinMap::from_columns(n * n, n, [&](std::size_t j) {
    return j / n == j % n ? Vec::basis(n, j / n) : Vec(n);
  });
  VecBuilder unit(n);
  for (std::size_t i = 0; i < n; ++i) unit.add(i, 1);
  yd.alg.unit = std::move(unit).build();
  yd.action = LinMap::from_columns(n * n, n, [&](std::size_t j) {
    const std::size_t h = j / n, x = j % n;
    return Vec::basis(n, single_index(g.multiply(g.product(h, x), g.S(h))));
  });
  const std::size_t e = single_index(g.one());
  yd.coaction = LinMap::from_columns(n, n * n, [&](std::size_t x) { return Vec::basis(n * n, x * n + e); });
  return yd;
}

LeftRightYD sweedler_yd() {
  const FinHopf h = sweedler_hopf();
  LeftRightYD yd;
  yd.hopf = h;
  // k[y]/(y²) on 1, y
  yd.alg.labels = {"1", "y"};
  yd.alg.mult = LinMap(4, 2, {Vec::basis(2, 0), Vec::basis(2, 1), Vec::basis(2, 1), Vec(2)});
  yd.alg.unit = Vec::basis(2, 0);
  // columns h·2 + a for h in 1, g, x, gx
  yd.action = LinMap(8, 2, {Vec::basis(2, 0), Vec::basis(2, 1), Vec::basis(2, 0), Vec::basis(2, 1, -1), Vec(2),
                            Vec(2), Vec(2), Vec(2)});
  yd.coaction = LinMap(2, 8, {Vec::basis(8, 0 * 4 + 0), Vec::basis(8, 1 * 4 + 1)});
  return yd;
}

LeftRightYD trivial_yd(const FinHopf& h) {
  const std::size_t n = h.dim();
  LeftRightYD yd;
  yd.hopf = h;
  yd.alg = one_dim_algebra();
  yd.action = LinMap::from_columns(n, 1, [&](std::size_t i) { return Vec::basis(1, 0, h.counit(i)); });
  yd.coaction = LinMap(1, n, {h.one()});
  return yd;
}

PhiCompatPair pair_from_left(const LeftRightYD& left, std::vector<std::string> right_labels) {
  const auto id = LinMap::identity(left.dim());
  if (right_labels.empty()) {
    for (const auto& l : left.alg.labels) right_labels.push_back("φ(" + l + ")");
  }
  PairingIso iso{IsoKind::Phi, id, id, std::move(right_labels)};
  PhiCompatPair p;
  p.left = left;
  p.right = paired_yd_from_left(left, iso);
  p.phi = id;
  p.phi_inv = id;
  return p;
}

std::vector<std::string> instance_names() {
  return {"c2", "h4", "s3", "s3-groupoid", "c2-trivial", "h4-trivial", "s3-trivial"};
}

InstanceDescriptor make_instance(const std::string& name) {
  InstanceDescriptor d;
  d.name = name;
  if (name == "c2") {
    const FinHopf h = cyclic_group_algebra(2);
    d.description = "k[C2] with the adjoint action and rho(a) = a (x) a^-1";
    d.pair = pair_from_left(adjoint_group_yd(h));
    Perturbation sign;
    sign.name = "antipode-sign";
    sign.description = "S(u) = -u";
    sign.antipode = LinMap(2, 2, {Vec::basis(2, 0), Vec::basis(2, 1, -1)});
    sign.expected_failures = {"antipode"};
    Perturbation trivial;
    trivial.name = "coaction-trivial";
    trivial.description = "rho(a) = a (x) e";
    trivial.left_coaction = LinMap(2, 4, {Vec::basis(4, 0), Vec::basis(4, 2)});
    trivial.expected_failures = {"phi coaction compatibility"};
    d.perturbations = {sign, tau_identity_perturbation({"tau beta_L = alpha_L"}), trivial};
  } else if (name == "h4") {
    d.description = "Sweedler H4 acting on k[y]/(y^2), rho(y) = y (x) g";
    d.pair = pair_from_left(sweedler_yd());
    Perturbation sign;
    sign.name = "antipode-sign";
    sign.description = "S(x) = +gx";
    const FinHopf h = sweedler_hopf();
    LinMap s = h.antipode();
    s.set_column(2, Vec::basis(4, 3));
    sign.antipode = s;
    sign.expected_failures = {"antipode"};
    d.perturbations = {sign, tau_identity_perturbation({"tau beta_L = alpha_L", "antihomomorphism sweep"})};
  } else if (name == "s3") {
    const FinHopf h = s3_group_algebra();
    d.description = "k[S3] with the adjoint action and rho(a) = a (x) a^-1";
    d.pair = pair_from_left(adjoint_group_yd(h));
    Perturbation coaction;
    coaction.name = "coaction-sign";
    coaction.description = "rho(a) = a (x) (12)^parity(a)";
    coaction.left_coaction = LinMap::from_columns(6, 36, [&](std::size_t a) {
      return Vec::basis(36, a * 6 + (kS3Sign[a] == 1 ? 0 : 1));
    });
    coaction.expected_failures = {"yd condition", "braided commutativity", "takeuchi", "tau(L) commutes with L"};
    Perturbation sign;
    sign.name = "antipode-sign";
    sign.description = "S(g) = sign(g) g^-1";
    sign.antipode = LinMap::from_columns(6, 6, [&](std::size_t g) { return Rational(kS3Sign[g]) * h.S(g); });
    sign.expected_failures = {"antipode"};
    d.perturbations = {coaction, tau_identity_perturbation({"tau beta_L = alpha_L", "antihomomorphism sweep"}), sign};
  } else if (name == "s3-groupoid") {
    const FinHopf h = s3_group_algebra();
    d.description = "k^S3 with the conjugation action and the trivial coaction";
    d.pair = pair_from_left(dual_group_yd(h));
    Perturbation twist;
    twist.name = "coaction-twist";
    twist.description = "C2-grading of k^S3 by the swap of e and (12): rho(f) = f+ (x) e + f- (x) (12)";
    twist.left_coaction = LinMap::from_columns(6, 36, [&](std::size_t x) {
      // δ_x ± ι(δ_x) over 2, graded by e and (12)
      const std::size_t swapped = x == 0 ? 1 : x == 1 ? 0 : x;
      if (swapped == x) return Vec::basis(36, x * 6 + 0);
      const Rational half(1, 2);
      Vec plus = half * (Vec::basis(6, x) + Vec::basis(6, swapped));
      Vec minus = half * (Vec::basis(6, x) - Vec::basis(6, swapped));
      return tensor(plus, Vec::basis(6, 0)) + tensor(minus, Vec::basis(6, 1));
    });
    twist.expected_failures = {"yd condition", "takeuchi"};
    d.perturbations = {twist, tau_identity_perturbation({"antihomomorphism sweep"})};
  } else if (name == "c2-trivial" || name == "h4-trivial" || name == "s3-trivial") {
    const FinHopf h = name == "c2-trivial" ? cyclic_group_algebra(2) : name == "h4-trivial" ? sweedler_hopf()
                                                                                            : s3_group_algebra();
    d.description = "trivial base algebra k over " + name.substr(0, 2);
    d.pair = pair_from_left(trivial_yd(h));
  } else {
    throw std::out_of_range("unknown instance '" + name + "'");
  }
  return d;
}

}  // namespace hopfoid
