#include "sepdisc_cli/state_file.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sepdisc/error.hpp"

namespace sepdisc::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

NamedState parse_named(const json& j, const StateSpace& space, const std::string& where,
                       std::vector<std::string>& warnings) {
  if (!j.is_object()) fail(where, "expected an object");
  NamedState s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(where + ".name", "expected a string");
    s.name = j["name"].get<std::string>();
  }
  if (!j.contains("amplitudes")) fail(where, "missing \"amplitudes\"");
  ComplexVector v = vector_from_json(j["amplitudes"], where + ".amplitudes");
  if (v.size() != space.total())
    fail(where + ".amplitudes", "length " + std::to_string(v.size()) + " != prod(dims) = " +
                                    std::to_string(space.total()));
  const double dev = std::abs(v.norm() - 1.0);
  if (dev > kNormReject) {
    std::ostringstream m;
    m << "norm deviates from 1 by " << dev << " (limit " << kNormReject << ")";
    fail(where + ".amplitudes", m.str());
  }
  if (dev > kNormWarn) {
    std::ostringstream m;
    m << where << ": renormalized (norm deviation " << dev << ")";
    warnings.push_back(m.str());
  }
  s.state = PureState::normalized(space, v);
  return s;
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(where, "expected a [re, im] pair");
  const double re = j[0].get<double>(), im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) fail(where, "non-finite entry");
  return {re, im};
}

json vector_to_json(const ComplexVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
  return a;
}

ComplexVector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [re, im] pairs");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r).transpose()));
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  if (j.empty()) return {};
  const auto cols = j[0].is_array() ? j[0].size() : 0;
  ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string w = where + "[" + std::to_string(r) + "]";
    ComplexVector row = vector_from_json(j[r], w);
    if (static_cast<std::size_t>(row.size()) != cols) fail(w, "ragged matrix");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

DiscriminationInstance StateFile::instance() const {
  std::vector<PureState> s;
  for (const auto& n : states) s.push_back(n.state);
  std::optional<PureState> p;
  if (phi) p = phi->state;
  return DiscriminationInstance::pure(std::move(s), std::move(p));
}

StateFile parse_state_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.what() carries "line L, column C"
    throw Error(ErrorCode::Parse, e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("version")) fail("$", "missing \"version\"");
  if (!j["version"].is_string() || j["version"].get<std::string>() != kFormatVersion)
    fail("$.version", std::string("expected \"") + kFormatVersion + "\"");

  if (!j.contains("dims") || !j["dims"].is_array()) fail("$.dims", "expected an array of party dimensions");
  const auto& jd = j["dims"];
  if (jd.size() < 2) fail("$.dims", "need at least two parties");
  std::vector<int> dims;
  long long total = 1;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const std::string w = "$.dims[" + std::to_string(i) + "]";
    if (!jd[i].is_number_integer()) fail(w, "expected an integer");
    const auto d = jd[i].get<long long>();
    if (d < 2) fail(w, "party dimension must be >= 2");
    total *= d;
    if (total > 4096) fail("$.dims", "total dimension too large");
    dims.push_back(static_cast<int>(d));
  }

  StateFile f;
  f.space = StateSpace(dims);
  if (!j.contains("states") || !j["states"].is_array()) fail("$.states", "expected an array");
  const auto& js = j["states"];
  if (js.empty()) fail("$.states", "no states");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string w = "$.states[" + std::to_string(i) + "]";
    f.states.push_back(parse_named(js[i], f.space, w, f.warnings));
    if (f.states.back().name.empty()) f.states.back().name = "psi" + std::to_string(i + 1);
  }
  if (j.contains("phi") && !j["phi"].is_null()) {
    f.phi = parse_named(j["phi"], f.space, "$.phi", f.warnings);
    if (f.phi->name.empty()) f.phi->name = "phi";
  }
  return f;
}

StateFile read_state_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_state_file(text);
}

StateFile make_state_file(const std::vector<PureState>& states, const std::optional<PureState>& phi,
                          const std::string& prefix) {
  if (states.empty()) throw Error(ErrorCode::InvalidInstance, "no states");
  StateFile f;
  f.space = states.front().space();
  for (std::size_t i = 0; i < states.size(); ++i) f.states.push_back({prefix + std::to_string(i + 1), states[i]});
  if (phi) f.phi = NamedState{"phi", *phi};
  return f;
}

json to_json(const StateFile& f) {
  json j;
  j["version"] = kFormatVersion;
  j["dims"] = f.space.dims();
  j["states"] = json::array();
  for (const auto& s : f.states)
    j["states"].push_back({{"name", s.name}, {"amplitudes", vector_to_json(s.state.amplitudes())}});
  if (f.phi) j["phi"] = {{"name", f.phi->name}, {"amplitudes", vector_to_json(f.phi->state.amplitudes())}};
  return j;
}

std::string dump_state_file(const StateFile& f) { return to_json(f).dump(2) + "\n"; }

}  // namespace sepdisc::cli
