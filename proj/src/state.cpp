#include "maxent/state.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "maxent/errors.hpp"

namespace maxent {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || s == "i") return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

struct Coefficient {
  GaussianRational scale;
  std::string param;  // empty for a plain scalar
};

Coefficient parse_coefficient(std::string_view tok) {
  const auto star = tok.rfind('*');
  if (star != std::string_view::npos) {
    const std::string_view name = tok.substr(star + 1);
    if (!is_identifier(name)) throw ParseError("bad parameter name in '" + std::string(tok) + "'");
    return {GaussianRational::parse(tok.substr(0, star)), std::string(name)};
  }
  if (is_identifier(tok)) return {GaussianRational(1), std::string(tok)};
  if (tok.size() > 1 && tok[0] == '-' && is_identifier(tok.substr(1))) {
    return {GaussianRational(-1), std::string(tok.substr(1))};
  }
  return {GaussianRational::parse(tok), {}};
}

std::size_t parse_index(const std::string& tok, std::size_t bound, int line_no) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    if (tok.empty() || tok[0] == '-' || tok[0] == '+') throw std::invalid_argument(tok);
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad index '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError("line " + std::to_string(line_no) + ": bad index '" + tok + "'");
  if (v >= bound) {
    throw ParseError("line " + std::to_string(line_no) + ": index " + tok + " out of range");
  }
  return v;
}

}  // namespace

std::string to_string(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::kNone: return "none";
    case ParameterKind::kReal: return "real";
    case ParameterKind::kMagnitude: return "magnitude";
  }
  return "?";
}

std::string to_string(Subsystem side) { return side == Subsystem::kA ? "A" : "B"; }

BipartiteState::BipartiteState(Matrix<ParamPoly> coeffs, ParameterKind kind, std::string param_name,
                               bool kind_declared)
    : coeffs_(std::move(coeffs)),
      kind_(kind),
      param_name_(std::move(param_name)),
      kind_declared_(kind_declared) {
  if (coeffs_.rows() == 0 || coeffs_.cols() == 0) throw DomainError("state dimensions must be positive");
  bool any_nonzero = false;
  bool any_param = false;
  for (const auto& c : coeffs_.data()) {
    any_nonzero = any_nonzero || !c.is_zero();
    any_param = any_param || c.degree() > 0;
  }
  if (!any_nonzero) throw DomainError("empty state: every coefficient is zero");
  if (any_param != (kind_ != ParameterKind::kNone)) {
    throw DomainError(any_param ? "parametric coefficients in a state without parameter kind"
                                : "parameter kind declared but no coefficient carries the parameter");
  }
  if (kind_ == ParameterKind::kNone) param_name_.clear();
}

BipartiteState BipartiteState::from_scalars(const Matrix<GaussianRational>& coeffs) {
  return BipartiteState(coeffs.map([](const GaussianRational& z) { return ParamPoly(z); }),
                        ParameterKind::kNone);
}

BipartiteState BipartiteState::with_kind(ParameterKind kind) const {
  return BipartiteState(coeffs_, kind, param_name_, kind_declared_);
}

BipartiteState BipartiteState::scaled(const GaussianRational& c) const {
  return BipartiteState(coeffs_.map([&](const ParamPoly& f) { return f.scaled(c); }), kind_,
                        param_name_, kind_declared_);
}

Matrix<GaussianRational> BipartiteState::scalar_coeffs() const {
  if (is_parametric()) throw ModeError("state carries a free parameter");
  return coeffs_.map([](const ParamPoly& f) { return f.coeff(0); });
}

BipartiteState BipartiteState::specialize(const BigRational& value) const {
  const GaussianRational at(value);
  return BipartiteState(
      coeffs_.map([&](const ParamPoly& f) { return ParamPoly(f.evaluate(at)); }),
      ParameterKind::kNone);
}

ParamPoly BipartiteState::squared_norm() const {
  ParamPoly acc;
  for (const auto& c : coeffs_.data()) acc += conj(c) * c;
  return acc;
}

BipartiteState parse_state(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> dims;
  std::optional<ParameterKind> declared;
  std::map<std::pair<std::size_t, std::size_t>, Coefficient> terms;
  std::string param_name;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (tok[0] == "dims") {
      if (tok.size() != 3) throw ParseError(where + "expected 'dims <d_A> <d_B>'");
      if (dims) throw ParseError(where + "dims given twice");
      const std::size_t big = static_cast<std::size_t>(-1);
      const std::size_t a = parse_index(tok[1], big, line_no);
      const std::size_t b = parse_index(tok[2], big, line_no);
      if (a == 0 || b == 0) throw ParseError(where + "dimensions must be positive");
      dims = {a, b};
    } else if (tok[0] == "param") {
      if (tok.size() != 2) throw ParseError(where + "expected 'param real|magnitude'");
      if (declared) throw ParseError(where + "param given twice");
      if (tok[1] == "real") {
        declared = ParameterKind::kReal;
      } else if (tok[1] == "magnitude") {
        declared = ParameterKind::kMagnitude;
      } else {
        throw ParseError(where + "unknown parameter kind '" + tok[1] + "'");
      }
    } else if (tok[0] == "term") {
      if (tok.size() != 4) throw ParseError(where + "expected 'term <i> <j> <coeff>'");
      if (!dims) throw ParseError(where + "term before dims");
      const std::size_t i = parse_index(tok[1], dims->first, line_no);
      const std::size_t j = parse_index(tok[2], dims->second, line_no);
      Coefficient c;
      try {
        c = parse_coefficient(tok[3]);
      } catch (const ParseError& e) {
        throw ParseError(where + e.what());
      }
      if (!c.param.empty()) {
        if (!param_name.empty() && param_name != c.param) {
          throw ParseError(where + "two different parameter names '" + param_name + "' and '" +
                           c.param + "'");
        }
        param_name = c.param;
      }
      if (!terms.emplace(std::pair{i, j}, std::move(c)).second) {
        throw ParseError(where + "duplicate term " + tok[1] + " " + tok[2]);
      }
    } else {
      throw ParseError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  if (!dims) throw ParseError("missing dims line");

  Matrix<ParamPoly> coeffs(dims->first, dims->second);
  bool any_param = false;
  for (const auto& [ij, c] : terms) {
    if (c.param.empty()) {
      coeffs(ij.first, ij.second) = ParamPoly(c.scale);
    } else {
      coeffs(ij.first, ij.second) = ParamPoly::monomial(c.scale, 1, param_name);
      any_param = any_param || !c.scale.is_zero();
    }
  }
  ParameterKind kind = ParameterKind::kNone;
  if (any_param) kind = declared.value_or(ParameterKind::kReal);
  if (declared && !any_param) throw ParseError("param declared but no term carries a parameter");
  try {
    return BipartiteState(std::move(coeffs), kind, param_name, declared.has_value());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

MagnitudeCheck validate_magnitude_mode(const BipartiteState& state, Subsystem traced) {
  const auto& c = state.coeffs();
  std::optional<std::pair<std::size_t, std::size_t>> carrier;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const ParamPoly& f = c(i, j);
      if (f.degree() < 1) continue;
      if (carrier) return {false, "more than one entry carries the parameter"};
      if (f.degree() != 1 || !f.coeff(0).is_zero()) {
        return {false, "parameter entry must be a pure multiple of the parameter"};
      }
      carrier = {i, j};
    }
  }
  if (!carrier) return {false, "no entry carries the parameter"};
  const auto [a, b] = *carrier;
  const char* const mixing = "parameter mixes linearly with other amplitudes; |p|^2 substitution invalid";
  if (traced == Subsystem::kA) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (j != b && !c(a, j).is_zero()) return {false, mixing};
    }
  } else {
    for (std::size_t i = 0; i < c.rows(); ++i) {
      if (i != a && !c(i, b).is_zero()) return {false, mixing};
    }
  }
  return {true, {}};
}

ReducedDensity reduced_density(const BipartiteState& state, Subsystem keep) {
  if (state.kind() == ParameterKind::kMagnitude) {
    const Subsystem traced = keep == Subsystem::kB ? Subsystem::kA : Subsystem::kB;
    const MagnitudeCheck check = validate_magnitude_mode(state, traced);
    if (!check.ok) throw MagnitudeModeError(check.reason);
  }
  const Matrix<ParamPoly>& c = state.coeffs();
  const Matrix<ParamPoly> dagger = c.conjugate_transpose();
  return {keep, keep == Subsystem::kB ? dagger * c : c * dagger};
}

Subsystem kept_subsystem(const BipartiteState& state) {
  return state.dim_a() < state.dim_b() ? Subsystem::kA : Subsystem::kB;
}

PowerSums power_sums(const ReducedDensity& rho, std::size_t m) {
  if (m < 1) throw DomainError("power_sums needs m >= 1");
  return {matrix_power_sums(rho.entries, m)};
}

}  // namespace maxent
