#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "maxent/detector.hpp"
#include "maxent/oracle.hpp"
#include "maxent/state.hpp"

// JSON and text renderings shared by the CLI and the Python module. Exact
// scalars are always emitted as strings in the scalar grammar.

namespace maxent::report {

using json = nlohmann::json;

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Ascending coefficient strings.
json coefficients(const ParamPoly& f);
json coefficients(const RationalPoly& f);

/// Inverse of coefficients(): parses the scalar strings back.
ParamPoly parse_coefficients(const json& j, const std::string& var);

/// "2p^4 - 14p^2 + 197 (content 2 removed)" for parametric values, the
/// exact scalar otherwise.
std::string describe(const ParamPoly& value);

json detect_result(const Verdict& v, const std::optional<oracle::SchmidtSpectrum>& spectrum);
std::string detect_text(const Verdict& v, const std::optional<oracle::SchmidtSpectrum>& spectrum);

json sequence_result(const BipartiteState& state, const SubdiscriminantSequence& seq);
std::string sequence_text(const BipartiteState& state, const SubdiscriminantSequence& seq);

json parametric_result(const ParametricVerdict& v);
std::string parametric_text(const ParametricVerdict& v);

json oracle_result(const oracle::SchmidtSpectrum& spec, const std::optional<BigRational>& param_value);
std::string oracle_text(const oracle::SchmidtSpectrum& spec, const std::optional<BigRational>& param_value);

}  // namespace maxent::report
