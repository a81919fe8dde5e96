#include "hopfoid/instance_io.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hopfoid/echelon.hpp"
#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

using json = nlohmann::ordered_json;

json matrix_json(const LinMap& m) {
  std::vector<std::tuple<std::size_t, std::size_t, const Rational*>> entries;
  for (std::size_t c = 0; c < m.src_dim(); ++c) {
    for (const auto& e : m.column(c).entries()) entries.emplace_back(e.index, c, &e.value);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  json out = json::array();
  for (const auto& [r, c, v] : entries) out.push_back({r, c, to_string(*v)});
  return out;
}

json vector_json(const Vec& v) {
  json out = json::array();
  for (const auto& e : v.entries()) out.push_back({e.index, to_string(e.value)});
  return out;
}

json algebra_json(const FinAlgebra& a) {
  json j;
  j["labels"] = a.labels;
  j["mult"] = matrix_json(a.mult);
  j["unit"] = vector_json(a.unit);
  return j;
}

template <class YD>
json yd_json(const YD& yd) {
  json j = algebra_json(yd.alg);
  j["action"] = matrix_json(yd.action);
  j["coaction"] = matrix_json(yd.coaction);
  return j;
}

// Field access with located errors.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& node() const { return j_; }
  const std::string& path() const { return path_; }
  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Reader at(const char* key) const {
    if (!j_.is_object()) throw ParseError(path_, "expected an object");
    if (!j_.contains(key)) throw ParseError(sub(key), "missing field");
    return Reader(j_.at(key), sub(key));
  }

  std::string str() const {
    if (!j_.is_string()) throw ParseError(path_, "expected a string");
    return j_.get<std::string>();
  }

  bool boolean() const {
    if (!j_.is_boolean()) throw ParseError(path_, "expected a boolean");
    return j_.get<bool>();
  }

  std::vector<std::string> strings() const {
    if (!j_.is_array()) throw ParseError(path_, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.push_back(Reader(j_[i], item(i)).str());
    return out;
  }

  LinMap matrix(std::size_t rows, std::size_t cols) const {
    if (!j_.is_array()) throw ParseError(path_, "expected a list of [row, col, \"p/q\"] triples");
    std::vector<std::vector<Entry>> columns(cols);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < j_.size(); ++i) {
      const json& t = j_[i];
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned()) {
        throw ParseError(item(i), "expected [row, col, \"p/q\"]");
      }
      const auto r = t[0].get<std::size_t>(), c = t[1].get<std::size_t>();
      if (r >= rows || c >= cols) {
        throw DimensionMismatch(item(i) + ": entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
      }
      if (!seen.insert({r, c}).second) throw ParseError(item(i), "duplicate entry");
      columns[c].push_back({r, rational(Reader(t[2], item(i) + "[2]"))});
    }
    std::vector<Vec> cols_out;
    cols_out.reserve(cols);
    for (auto& col : columns) cols_out.push_back(Vec::from_entries(rows, std::move(col)));
    return LinMap(cols, rows, std::move(cols_out));
  }

  Vec vector(std::size_t dim) const {
    if (!j_.is_array()) throw ParseError(path_, "expected a list of [index, \"p/q\"] pairs");
    std::vector<Entry> entries;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < j_.size(); ++i) {
      const json& t = j_[i];
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned()) {
        throw ParseError(item(i), "expected [index, \"p/q\"]");
      }
      const auto k = t[0].get<std::size_t>();
      if (k >= dim) throw DimensionMismatch(item(i) + ": index " + std::to_string(k) + " out of range");
      if (!seen.insert(k).second) throw ParseError(item(i), "duplicate entry");
      entries.push_back({k, rational(Reader(t[1], item(i) + "[1]"))});
    }
    return Vec::from_entries(dim, std::move(entries));
  }

 private:
  static Rational rational(const Reader& r) {
    const std::string s = r.str();
    try {
      return parse_rational(s);
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.path(), e.what());
    }
  }
  std::string sub(const char* key) const { return path_.empty() ? key : path_ + "." + key; }
  std::string item(std::size_t i) const { return path_ + "[" + std::to_string(i) + "]"; }

  const json& j_;
  std::string path_;
};

FinAlgebra read_algebra(const Reader& r) {
  FinAlgebra a;
  a.labels = r.at("labels").strings();
  const std::size_t n = a.labels.size();
  if (n == 0) throw ParseError(r.path() + ".labels", "empty basis");
  a.mult = r.at("mult").matrix(n, n * n);
  a.unit = r.at("unit").vector(n);
  return a;
}

FinHopf read_hopf(const Reader& r) {
  FinAlgebra a = read_algebra(r);
  const std::size_t n = a.dim();
  FinCoalgebra c;
  c.comult = r.at("comult").matrix(n * n, n);
  c.counit = r.at("counit").matrix(1, n);
  LinMap s = r.at("antipode").matrix(n, n);
  return FinHopf(std::move(a), std::move(c), std::move(s));
}

LeftRightYD read_left(const Reader& r, const FinHopf& h) {
  LeftRightYD yd;
  yd.hopf = h;
  yd.alg = read_algebra(r);
  const std::size_t n = yd.alg.dim(), dh = h.dim();
  yd.action = r.at("action").matrix(n, dh * n);
  yd.coaction = r.at("coaction").matrix(n * dh, n);
  return yd;
}

RightLeftYD read_right(const Reader& r, const FinHopf& h) {
  RightLeftYD yd;
  yd.hopf = h;
  yd.alg = read_algebra(r);
  const std::size_t n = yd.alg.dim(), dh = h.dim();
  yd.action = r.at("action").matrix(n, n * dh);
  yd.coaction = r.at("coaction").matrix(dh * n, n);
  return yd;
}

LinMap inverse_or_throw(const LinMap& m, const std::string& what) {
  auto inv = inverse(m);
  if (!inv) throw ParseError(what, "matrix is not invertible");
  return *inv;
}

}  // namespace

json instance_to_json(const InstanceDescriptor& d) {
  const FinHopf& h = d.hopf();
  json j;
  j["format"] = "hopfoid-instance";
  j["field"] = "Q";
  j["name"] = d.name;
  j["description"] = d.description;
  json hj = algebra_json(h.algebra());
  hj["comult"] = matrix_json(h.coalgebra().comult);
  hj["counit"] = matrix_json(h.coalgebra().counit);
  hj["antipode"] = matrix_json(h.antipode());
  j["hopf"] = std::move(hj);
  j["left_yd"] = yd_json(d.pair.left);
  j["right_yd"] = yd_json(d.pair.right);
  j["phi"] = matrix_json(d.pair.phi);
  j["phi_inv"] = matrix_json(d.pair.phi_inv);
  json ps = json::array();
  for (const auto& p : d.perturbations) {
    json pj;
    pj["name"] = p.name;
    pj["description"] = p.description;
    pj["expected_failures"] = p.expected_failures;
    if (p.antipode) pj["antipode"] = matrix_json(*p.antipode);
    if (p.left_action) pj["left_action"] = matrix_json(*p.left_action);
    if (p.left_coaction) pj["left_coaction"] = matrix_json(*p.left_coaction);
    if (p.tau_identity) pj["tau_identity"] = true;
    ps.push_back(std::move(pj));
  }
  j["perturbations"] = std::move(ps);
  return j;
}

std::string serialize_instance(const InstanceDescriptor& d) { return instance_to_json(d).dump(2) + "\n"; }

InstanceDescriptor instance_from_json(const json& j) {
  const Reader root(j, "");
  if (!j.is_object()) throw ParseError("(root)", "expected an object");
  if (root.at("format").str() != "hopfoid-instance") throw ParseError("format", "unknown format tag");
  if (root.at("field").str() != "Q") throw ParseError("field", "only the rationals \"Q\" are supported");
  InstanceDescriptor d;
  d.name = root.at("name").str();
  if (root.has("description")) d.description = root.at("description").str();
  const FinHopf h = read_hopf(root.at("hopf"));
  const std::size_t dh = h.dim();
  d.pair.left = read_left(root.at("left_yd"), h);
  const std::size_t dl = d.pair.left.dim();
  if (root.has("right_yd")) {
    d.pair.right = read_right(root.at("right_yd"), h);
    if (!root.has("phi")) throw ParseError("phi", "required when right_yd is given");
  }
  const std::size_t dr = root.has("right_yd") ? d.pair.right.dim() : dl;
  if (dr != dl) throw DimensionMismatch("left and right algebras differ in dimension");
  d.pair.phi = root.has("phi") ? root.at("phi").matrix(dr, dl) : LinMap::identity(dl);
  d.pair.phi_inv = root.has("phi_inv") ? root.at("phi_inv").matrix(dl, dr) : inverse_or_throw(d.pair.phi, "phi");
  if (!root.has("right_yd")) {
    PairingIso iso{IsoKind::Phi, d.pair.phi, d.pair.phi_inv, {}};
    for (const auto& l : d.pair.left.alg.labels) iso.labels.push_back("φ(" + l + ")");
    d.pair.right = paired_yd_from_left(d.pair.left, iso);
  }
  if (root.has("perturbations")) {
    const Reader ps = root.at("perturbations");
    if (!ps.node().is_array()) throw ParseError("perturbations", "expected an array");
    for (std::size_t i = 0; i < ps.node().size(); ++i) {
      const Reader pr(ps.node()[i], "perturbations[" + std::to_string(i) + "]");
      Perturbation p;
      p.name = pr.at("name").str();
      if (pr.has("description")) p.description = pr.at("description").str();
      if (pr.has("expected_failures")) p.expected_failures = pr.at("expected_failures").strings();
      if (pr.has("antipode")) p.antipode = pr.at("antipode").matrix(dh, dh);
      if (pr.has("left_action")) p.left_action = pr.at("left_action").matrix(dl, dh * dl);
      if (pr.has("left_coaction")) p.left_coaction = pr.at("left_coaction").matrix(dl * dh, dl);
      if (pr.has("tau_identity")) p.tau_identity = pr.at("tau_identity").boolean();
      d.perturbations.push_back(std::move(p));
    }
  }
  return d;
}

InstanceDescriptor parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
  return instance_from_json(j);
}

}  // namespace hopfoid
