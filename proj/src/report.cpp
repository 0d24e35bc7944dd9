#include "maxent/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "maxent/errors.hpp"

namespace maxent::report {

namespace {

std::string fmt_double(double x) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", x);
  return buf.data();
}

json string_list(const std::vector<std::string>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

json entropy_json(const oracle::SchmidtSpectrum& spec) {
  const oracle::EntropyReport e = oracle::entropy_report(spec);
  return {{"von_neumann", e.von_neumann},
          {"normalized", e.normalized},
          {"linear_entropy", e.linear_entropy},
          {"lambdas", spec.lambdas},
          {"schmidt", spec.schmidt},
          {"trace_scale", spec.trace_scale}};
}

std::string entropy_text(const oracle::SchmidtSpectrum& spec) {
  const oracle::EntropyReport e = oracle::entropy_report(spec);
  std::ostringstream out;
  out << "oracle spectrum:";
  for (double l : spec.lambdas) out << ' ' << fmt_double(l);
  out << "\noracle von Neumann entropy: " << fmt_double(e.von_neumann)
      << " (normalized " << fmt_double(e.normalized) << ")\n"
      << "oracle linear entropy: " << fmt_double(e.linear_entropy) << '\n';
  return out.str();
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 0xf];
  }
  return out;
}

json coefficients(const ParamPoly& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.to_string());
  return out;
}

json coefficients(const RationalPoly& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.to_string());
  return out;
}

ParamPoly parse_coefficients(const json& j, const std::string& var) {
  std::vector<GaussianRational> c;
  for (const auto& s : j) c.push_back(GaussianRational::parse(s.get<std::string>()));
  return ParamPoly(std::move(c), var);
}

std::string describe(const ParamPoly& value) {
  if (value.is_constant()) return value.coeff(0).to_string();
  try {
    const PrimitiveForm form = primitive_form(value);
    std::string out = to_string(form.primitive.with_var(value.var()));
    if (form.content != BigRational(1)) out += " (content " + form.content.to_string() + " removed)";
    return out;
  } catch (const DomainError&) {
    return to_string(value);
  }
}

json detect_result(const Verdict& v, const std::optional<oracle::SchmidtSpectrum>& spectrum) {
  json seq = json::array();
  for (const auto& d : v.sequence) seq.push_back(d.to_string());
  json out = {{"maximal", v.maximal},
              {"d_used", v.d_used},
              {"kept", to_string(v.kept)},
              {"D_last_but_one", v.d_last_but_one.to_string()},
              {"degeneracy", v.degeneracy},
              {"sequence", seq},
              {"notes", string_list(v.notes)}};
  if (spectrum) out["oracle"] = entropy_json(*spectrum);
  return out;
}

std::string detect_text(const Verdict& v, const std::optional<oracle::SchmidtSpectrum>& spectrum) {
  std::ostringstream out;
  out << "kept subsystem: " << to_string(v.kept) << " (d = " << v.d_used << ")\n";
  out << "maximal: " << (v.maximal ? "true" : "false") << '\n';
  out << "D_" << (v.d_used >= 1 ? v.d_used - 1 : 0) << ": " << v.d_last_but_one.to_string() << '\n';
  out << "degeneracy: " << v.degeneracy << " distinct eigenvalue" << (v.degeneracy == 1 ? "" : "s") << '\n';
  if (!v.notes.empty()) {
    out << "notes:";
    for (const auto& n : v.notes) out << ' ' << n;
    out << '\n';
  }
  if (spectrum) out << entropy_text(*spectrum);
  return out.str();
}

json sequence_result(const BipartiteState& state, const SubdiscriminantSequence& seq) {
  json values = json::array();
  for (std::size_t q = 1; q <= seq.dim(); ++q) {
    const ParamPoly& v = seq.at(q);
    json entry = {{"q", q}, {"text", describe(v.with_var(state.param_name()))}};
    if (v.is_constant()) {
      entry["value"] = v.coeff(0).to_string();
    } else {
      const PrimitiveForm form = primitive_form(v);
      entry["coefficients"] = coefficients(v);
      entry["primitive"] = coefficients(form.primitive);
      entry["content"] = form.content.to_string();
    }
    values.push_back(std::move(entry));
  }
  json out = {{"d", seq.dim()},
              {"kept", to_string(kept_subsystem(state))},
              {"parametric", state.is_parametric()},
              {"D", values}};
  if (state.is_parametric()) {
    out["parameter"] = state.param_name();
    out["parameter_kind"] = to_string(state.kind());
  }
  return out;
}

std::string sequence_text(const BipartiteState& state, const SubdiscriminantSequence& seq) {
  std::ostringstream out;
  out << "kept subsystem: " << to_string(kept_subsystem(state)) << " (d = " << seq.dim() << ")\n";
  if (state.kind() == ParameterKind::kMagnitude) {
    out << "note: " << state.param_name() << "^2 stands for |" << state.param_name() << "|^2\n";
  }
  for (std::size_t q = 1; q <= seq.dim(); ++q) {
    out << "D_" << q << ": " << describe(seq.at(q).with_var(state.param_name())) << '\n';
  }
  return out.str();
}

json parametric_result(const ParametricVerdict& v) {
  json roots = json::array();
  for (const auto& r : v.roots) {
    roots.push_back({{"lo", r.where.lo.to_string()},
                     {"hi", r.where.hi.to_string()},
                     {"exact", r.where.exact ? json(r.where.exact->to_string()) : json(nullptr)},
                     {"verified", r.verified}});
  }
  return {{"mode", to_string(v.mode)},
          {"parameter", v.parameter},
          {"variable", v.variable},
          {"d_used", v.d_used},
          {"kept", to_string(v.kept)},
          {"raw", coefficients(v.raw)},
          {"content", v.content.to_string()},
          {"polynomial", coefficients(v.polynomial)},
          {"polynomial_text", to_string(v.polynomial)},
          {"even_check", v.even_check ? json(*v.even_check) : json(nullptr)},
          {"roots", roots},
          {"identically_maximal", v.identically_maximal},
          {"achievable", v.achievable},
          {"notes", string_list(v.notes)}};
}

std::string parametric_text(const ParametricVerdict& v) {
  std::ostringstream out;
  out << "mode: " << to_string(v.mode) << " (parameter " << v.parameter << ", kept subsystem "
      << to_string(v.kept) << ", d = " << v.d_used << ")\n";
  if (v.even_check) {
    out << "even check: " << (*v.even_check ? "passed" : "failed") << "; t = |" << v.parameter
        << "|^2\n";
  }
  if (v.identically_maximal) {
    out << "condition: D_" << (v.d_used - 1) << " vanishes identically\n";
    out << "verdict: maximal for all parameter values\n";
    return out.str();
  }
  out << "condition: " << to_string(v.polynomial) << " = 0";
  if (v.content != BigRational(1)) out << " (content " << v.content.to_string() << " removed)";
  out << '\n';
  if (v.roots.empty()) {
    out << "roots: none\n";
    out << "verdict: no real solutions; never maximally entangled\n";
  } else {
    out << "roots:\n";
    for (const auto& r : v.roots) {
      out << "  " << v.variable << " = " << to_string(r.where);
      if (r.where.exact) out << (r.verified ? " (exact, verified maximal)" : " (exact)");
      out << '\n';
    }
    out << "verdict: maximally entangled at the listed roots\n";
  }
  for (const auto& n : v.notes) out << "note: " << n << '\n';
  return out.str();
}

json oracle_result(const oracle::SchmidtSpectrum& spec, const std::optional<BigRational>& param_value) {
  json out = entropy_json(spec);
  out["param_value"] = param_value ? json(param_value->to_string()) : json(nullptr);
  return out;
}

std::string oracle_text(const oracle::SchmidtSpectrum& spec, const std::optional<BigRational>& param_value) {
  std::ostringstream out;
  if (param_value) out << "parameter value: " << param_value->to_string() << '\n';
  out << "trace: " << fmt_double(spec.trace_scale) << '\n';
  out << "schmidt coefficients:";
  for (double s : spec.schmidt) out << ' ' << fmt_double(s);
  out << '\n' << entropy_text(spec);
  return out.str();
}

}  // namespace maxent::report
