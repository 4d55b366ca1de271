#include "sepdisc_cli/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "sepdisc/error.hpp"

#ifndef SEPDISC_VERSION
#define SEPDISC_VERSION "0.0.0"
#endif

namespace sepdisc::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

// JSON has no infinities; map them to null and back.
json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
double num_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json product_vector_to_json(const ProductVector& v) {
  json f = json::array();
  for (const auto& x : v.factors) f.push_back(vector_to_json(x));
  return {{"weight", complex_to_json(v.weight)}, {"factors", f}};
}

ProductVector product_vector_from_json(const json& j, const std::string& where) {
  ProductVector v;
  v.weight = complex_from_json(need(j, "weight", where), where + ".weight");
  const auto& f = need(j, "factors", where);
  for (std::size_t i = 0; i < f.size(); ++i)
    v.factors.push_back(vector_from_json(f[i], where + ".factors[" + std::to_string(i) + "]"));
  return v;
}

json evidence_to_json(const ElementEvidence& ev) {
  if (const auto* pd = std::get_if<ProductDecomposition>(&ev)) {
    json terms = json::array();
    for (const auto& t : pd->terms)
      terms.push_back({{"weight", t.weight}, {"vector", product_vector_to_json(t.vector)}});
    return {{"type", "product_decomposition"}, {"terms", terms}};
  }
  const auto& p = std::get<PptRecord>(ev);
  return {{"type", "ppt"},
          {"cuts", p.cuts},
          {"min_eigenvalue", num(p.min_eigenvalue)},
          {"min_pt_eigenvalue", num(p.min_pt_eigenvalue)},
          {"exact", p.exact}};
}

ElementEvidence evidence_from_json(const json& j, const std::string& where) {
  const auto type = need(j, "type", where).get<std::string>();
  if (type == "product_decomposition") {
    ProductDecomposition pd;
    const auto& terms = need(j, "terms", where);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string w = where + ".terms[" + std::to_string(i) + "]";
      pd.terms.push_back({need(terms[i], "weight", w).get<double>(),
                          product_vector_from_json(need(terms[i], "vector", w), w + ".vector")});
    }
    return pd;
  }
  if (type == "ppt") {
    PptRecord p;
    p.cuts = need(j, "cuts", where).get<std::vector<std::vector<int>>>();
    p.min_eigenvalue = num_from(need(j, "min_eigenvalue", where));
    p.min_pt_eigenvalue = num_from(need(j, "min_pt_eigenvalue", where));
    p.exact = need(j, "exact", where).get<bool>();
    return p;
  }
  fail(where + ".type", "unknown evidence type \"" + type + "\"");
}

json check_to_json(const PropertyCheck& c) {
  return {{"pass", c.pass}, {"samples", c.samples}, {"failures", c.failures}, {"detail", c.detail}};
}

PropertyCheck check_from_json(const json& j, const std::string& where) {
  PropertyCheck c;
  c.pass = need(j, "pass", where).get<bool>();
  c.samples = need(j, "samples", where).get<int>();
  c.failures = need(j, "failures", where).get<int>();
  c.detail = need(j, "detail", where).get<std::string>();
  return c;
}

template <class E>
E enum_from(std::string_view s, std::initializer_list<E> all, const char* what) {
  for (E e : all)
    if (to_string(e) == s) return e;
  fail(what, "unknown value \"" + std::string(s) + "\"");
}

}  // namespace

std::string tool_version() { return SEPDISC_VERSION; }

std::string input_digest(const StateFile& file) {
  const std::string canon = to_json(file).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(canon.data(), canon.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  out << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(md[i]);
  return out.str();
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

VerdictReport make_report(const StateFile& file, Verdict verdict) {
  return {tool_version(), input_digest(file), utc_timestamp(), std::move(verdict)};
}

int exit_code(Status s) {
  switch (s) {
    case Status::Distinguishable: return 0;
    case Status::Indistinguishable: return 1;
    case Status::Undecided: return 2;
  }
  return 2;
}

Status status_from_string(std::string_view s) {
  return enum_from(s, {Status::Distinguishable, Status::Indistinguishable, Status::Undecided}, "status");
}

TheoremTag tag_from_string(std::string_view s) {
  using T = TheoremTag;
  return enum_from(s, {T::T1, T::C1, T::T2, T::C2, T::T4, T::T5, T::T6, T::T8}, "tag");
}

LoccFlag locc_flag_from_string(std::string_view s) {
  return enum_from(s, {LoccFlag::LoccIndistinguishable, LoccFlag::Unknown}, "locc_flag");
}

json to_json(const VerdictReport& r) {
  const Verdict& v = r.verdict;
  json j;
  j["version"] = kFormatVersion;
  j["tool_version"] = r.tool_version;
  j["input_digest"] = r.input_digest;
  j["timestamp"] = r.timestamp;
  j["status"] = to_string(v.status);
  j["tag"] = to_string(v.tag);
  j["reason"] = v.reason;
  j["locc_flag"] = to_string(v.locc_flag);
  j["lambdas"] = nullptr;
  j["certificate"] = nullptr;
  if (v.certificate) {
    const auto& c = *v.certificate;
    if (c.lambdas) j["lambdas"] = *c.lambdas;
    json elems = json::array();
    for (std::size_t k = 0; k < c.elements.size(); ++k) {
      json e{{"matrix", matrix_to_json(c.elements[k])}};
      e["evidence"] = k < c.evidence.size() ? evidence_to_json(c.evidence[k]) : json(nullptr);
      elems.push_back(std::move(e));
    }
    j["certificate"] = {{"relaxed", c.relaxed}, {"elements", elems}};
  }
  j["residuals"] = nullptr;
  if (v.feasibility) {
    const auto& f = *v.feasibility;
    j["residuals"] = {{"iterations", f.iterations},         {"residual", f.residual},
                      {"affine", f.affine_residual},        {"psd_violation", f.psd_violation},
                      {"ppt_violation", f.ppt_violation},   {"stalled", f.stalled},
                      {"converged", f.converged},           {"scalar_reduction", f.scalar_reduction}};
  }
  j["subspace"] = nullptr;
  if (v.subspace) {
    const auto& s = *v.subspace;
    j["subspace"] = {{"p0", check_to_json(s.p0)},
                     {"p1", check_to_json(s.p1)},
                     {"p2", check_to_json(s.p2)},
                     {"product_vector", s.product_vector ? product_vector_to_json(*s.product_vector) : json(nullptr)}};
  }
  return j;
}

VerdictReport report_from_json(const json& j) {
  try {
    if (need(j, "version", "$").get<std::string>() != kFormatVersion) fail("$.version", "unsupported version");
    VerdictReport r;
    r.tool_version = need(j, "tool_version", "$").get<std::string>();
    r.input_digest = need(j, "input_digest", "$").get<std::string>();
    r.timestamp = need(j, "timestamp", "$").get<std::string>();
    Verdict& v = r.verdict;
    v.status = status_from_string(need(j, "status", "$").get<std::string>());
    v.tag = tag_from_string(need(j, "tag", "$").get<std::string>());
    v.reason = need(j, "reason", "$").get<std::string>();
    v.locc_flag = locc_flag_from_string(need(j, "locc_flag", "$").get<std::string>());
    const auto& jc = need(j, "certificate", "$");
    if (!jc.is_null()) {
      PovmCertificate c;
      c.relaxed = need(jc, "relaxed", "$.certificate").get<bool>();
      const auto& elems = need(jc, "elements", "$.certificate");
      for (std::size_t k = 0; k < elems.size(); ++k) {
        const std::string w = "$.certificate.elements[" + std::to_string(k) + "]";
        c.elements.push_back(matrix_from_json(need(elems[k], "matrix", w), w + ".matrix"));
        const auto& ev = need(elems[k], "evidence", w);
        if (!ev.is_null()) c.evidence.push_back(evidence_from_json(ev, w + ".evidence"));
      }
      const auto& jl = need(j, "lambdas", "$");
      if (!jl.is_null()) c.lambdas = jl.get<std::vector<double>>();
      v.certificate = std::move(c);
    }
    const auto& jr = need(j, "residuals", "$");
    if (!jr.is_null()) {
      FeasibilityDiagnostics f;
      f.iterations = need(jr, "iterations", "$.residuals").get<int>();
      f.residual = need(jr, "residual", "$.residuals").get<double>();
      f.affine_residual = need(jr, "affine", "$.residuals").get<double>();
      f.psd_violation = need(jr, "psd_violation", "$.residuals").get<double>();
      f.ppt_violation = need(jr, "ppt_violation", "$.residuals").get<double>();
      f.stalled = need(jr, "stalled", "$.residuals").get<bool>();
      f.converged = need(jr, "converged", "$.residuals").get<bool>();
      f.scalar_reduction = need(jr, "scalar_reduction", "$.residuals").get<bool>();
      v.feasibility = f;
    }
    const auto& js = need(j, "subspace", "$");
    if (!js.is_null()) {
      SubspaceReport s;
      s.p0 = check_from_json(need(js, "p0", "$.subspace"), "$.subspace.p0");
      s.p1 = check_from_json(need(js, "p1", "$.subspace"), "$.subspace.p1");
      s.p2 = check_from_json(need(js, "p2", "$.subspace"), "$.subspace.p2");
      const auto& pv = need(js, "product_vector", "$.subspace");
      if (!pv.is_null()) s.product_vector = product_vector_from_json(pv, "$.subspace.product_vector");
      v.subspace = std::move(s);
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace sepdisc::cli
