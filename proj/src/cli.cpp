#include "maxent/cli.hpp"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "maxent/detector.hpp"
#include "maxent/errors.hpp"
#include "maxent/oracle.hpp"
#include "maxent/random.hpp"
#include "maxent/report.hpp"

namespace maxent::cli {

namespace {

using Clock = std::chrono::steady_clock;
using report::json;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::shared_ptr<spdlog::logger> logger() {
  static const std::shared_ptr<spdlog::logger> log = [] {
    auto l = spdlog::stderr_logger_mt("maxent");
    l->set_pattern("[maxent %l] %v");
    return l;
  }();
  const char* env = std::getenv("MAXENT_LOG");
  const std::string level = env ? env : "";
  if (level == "debug") {
    log->set_level(spdlog::level::debug);
  } else if (level == "info") {
    log->set_level(spdlog::level::info);
  } else {
    log->set_level(spdlog::level::warn);
  }
  return log;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

struct Loaded {
  std::string sha;
  BipartiteState state;
  double parse_ms;
};

Loaded load(const std::string& path) {
  const auto start = Clock::now();
  const std::string text = read_file(path);
  BipartiteState state = parse_state(text);
  const double elapsed = ms_since(start);
  logger()->info("parsed {} ({}x{}, parameter kind {})", path, state.dim_a(), state.dim_b(),
                 to_string(state.kind()));
  return {report::sha256_hex(text), std::move(state), elapsed};
}

void emit_json(std::ostream& out, const std::vector<std::string>& args, const std::string& sha,
               json result, json timings) {
  const json doc = {{"command", join(args)},
                    {"input_sha", sha},
                    {"result", std::move(result)},
                    {"timings_ms", std::move(timings)}};
  out << doc.dump(2) << '\n';
}

bool oracle_agrees(const Verdict& v, const oracle::SchmidtSpectrum& spec) {
  const double exact = v.d_last_but_one.to_double();
  const double numeric = oracle::numeric_subdiscriminant(spec, v.d_used - 1, spec.trace_scale);
  const double scale = std::max(std::abs(exact), std::numeric_limits<double>::min());
  if (std::abs(exact - numeric) > 1e-8 * scale) return false;
  const bool flat = std::abs(oracle::entropy_report(spec).normalized - 1.0) <= 1e-6;
  if (flat != v.maximal) return false;
  if (oracle::min_cluster_gap(spec.lambdas) > 1e-3 &&
      oracle::distinct_count(spec.lambdas) != v.degeneracy) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.dmax < 2 || opts.dmax > 12) throw DomainError("--dmax must be in [2, 12]");
  if (opts.trials < 1 || opts.trials > 100000) throw DomainError("--trials must be in [1, 100000]");
  if (opts.bits < 1 || opts.bits > 64) throw DomainError("--bits must be in [1, 64]");
  Lcg64 rng(opts.seed);
  std::vector<BenchRow> rows;
  for (int d = 2; d <= opts.dmax; ++d) {
    BenchRow row;
    row.d = d;
    row.trials = opts.trials;
    for (int t = 0; t < opts.trials; ++t) {
      const auto du = static_cast<std::size_t>(d);
      const BipartiteState state = random_state(rng, du, du, static_cast<unsigned>(opts.bits));
      auto start = Clock::now();
      const Verdict v = is_maximally_entangled(state);
      row.exact_ms += ms_since(start);
      start = Clock::now();
      const oracle::SchmidtSpectrum spec = oracle::schmidt_spectrum(state);
      const bool agree = oracle_agrees(v, spec);
      row.oracle_ms += ms_since(start);
      if (agree) ++row.agree;
    }
    row.exact_ms /= opts.trials;
    row.oracle_ms /= opts.trials;
    logger()->debug("bench d={} exact {:.3f} ms oracle {:.3f} ms agree {}/{}", d, row.exact_ms,
                    row.oracle_ms, row.agree, row.trials);
    rows.push_back(row);
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact test for maximally entangled pure bipartite states", "maxent"};
  app.require_subcommand(1);

  std::string file;
  bool want_json = false;
  bool want_oracle = false;
  std::string mode;
  std::string param_value_text;
  BenchOptions bench;
  bool want_csv = false;

  auto* detect = app.add_subcommand("detect", "Decide maximal entanglement of a constant state");
  detect->add_option("file", file, "State file")->required();
  detect->add_flag("--oracle", want_oracle, "Append the floating-point entropy report");
  detect->add_flag("--json", want_json, "Emit a JSON report");

  auto* sequence = app.add_subcommand("sequence", "Print the subdiscriminant sequence D_1..D_d");
  sequence->add_option("file", file, "State file")->required();
  sequence->add_flag("--json", want_json, "Emit a JSON report");

  auto* parametric = app.add_subcommand("parametric", "Solve D_{d-1} = 0 for the free parameter");
  parametric->add_option("file", file, "State file")->required();
  parametric->add_option("--mode", mode, "real | magnitude")
      ->required()
      ->check(CLI::IsMember({"real", "magnitude"}));
  parametric->add_flag("--json", want_json, "Emit a JSON report");

  auto* oracle_cmd = app.add_subcommand("oracle", "Floating-point spectrum and entropies");
  oracle_cmd->add_option("file", file, "State file")->required();
  oracle_cmd->add_option("--param-value", param_value_text, "Rational value for the parameter");
  oracle_cmd->add_flag("--json", want_json, "Emit a JSON report");

  auto* bench_cmd = app.add_subcommand("bench", "Time the exact pipeline against the oracle");
  bench_cmd->add_option("--dmax", bench.dmax, "Largest dimension (2..12)");
  bench_cmd->add_option("--trials", bench.trials, "States per dimension");
  bench_cmd->add_option("--seed", bench.seed, "PRNG seed");
  bench_cmd->add_option("--bits", bench.bits, "Bits per numerator/denominator (1..64)");
  bench_cmd->add_flag("--csv", want_csv, "CSV output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const auto start = Clock::now();
  try {
    if (*bench_cmd) {
      std::vector<BenchRow> rows;
      try {
        rows = run_bench(bench);
      } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBenchRange;
      }
      out << std::fixed;
      if (want_csv) {
        out << "d,exact_ms,oracle_ms,agree\n";
        for (const auto& r : rows) {
          out << r.d << ',' << std::setprecision(3) << r.exact_ms << ',' << r.oracle_ms << ','
              << std::setprecision(1) << 100.0 * r.agree / r.trials << '\n';
        }
      } else {
        out << " d   exact_ms  oracle_ms   agree\n";
        for (const auto& r : rows) {
          out << std::setw(2) << r.d << std::setw(11) << std::setprecision(3) << r.exact_ms
              << std::setw(11) << r.oracle_ms << std::setw(7) << std::setprecision(1)
              << 100.0 * r.agree / r.trials << "%\n";
        }
      }
      return kOk;
    }

    const Loaded in = load(file);

    if (*detect) {
      if (in.state.is_parametric()) {
        err << "error: state has free parameter '" << in.state.param_name()
            << "'; use 'parametric' or 'oracle --param-value'\n";
        return kParametricInput;
      }
      auto t0 = Clock::now();
      const Verdict v = is_maximally_entangled(in.state);
      const double pipeline_ms = ms_since(t0);
      std::optional<oracle::SchmidtSpectrum> spec;
      double oracle_ms = 0.0;
      if (want_oracle) {
        t0 = Clock::now();
        spec = oracle::schmidt_spectrum(in.state);
        oracle_ms = ms_since(t0);
      }
      if (want_json) {
        json timings = {{"parse", in.parse_ms}, {"pipeline", pipeline_ms}, {"total", ms_since(start)}};
        if (want_oracle) timings["oracle"] = oracle_ms;
        emit_json(out, args, in.sha, report::detect_result(v, spec), timings);
      } else {
        out << report::detect_text(v, spec);
      }
      return kOk;
    }

    if (*sequence) {
      const auto t0 = Clock::now();
      const SubdiscriminantSequence seq = state_subdiscriminants(in.state);
      const double pipeline_ms = ms_since(t0);
      if (want_json) {
        emit_json(out, args, in.sha, report::sequence_result(in.state, seq),
                  {{"parse", in.parse_ms}, {"pipeline", pipeline_ms}, {"total", ms_since(start)}});
      } else {
        out << report::sequence_text(in.state, seq);
      }
      return kOk;
    }

    if (*parametric) {
      if (!in.state.is_parametric()) {
        err << "error: state has no free parameter; use 'detect'\n";
        return kParametricInput;
      }
      const ParameterKind kind = mode == "real" ? ParameterKind::kReal : ParameterKind::kMagnitude;
      if (in.state.kind_declared() && in.state.kind() != kind) {
        err << "error: --mode " << mode << " conflicts with 'param " << to_string(in.state.kind())
            << "' in " << file << '\n';
        return kUsage;
      }
      const auto t0 = Clock::now();
      const ParametricVerdict v = parametric_analysis(in.state, kind);
      const double pipeline_ms = ms_since(t0);
      if (want_json) {
        emit_json(out, args, in.sha, report::parametric_result(v),
                  {{"parse", in.parse_ms}, {"pipeline", pipeline_ms}, {"total", ms_since(start)}});
      } else {
        out << report::parametric_text(v);
      }
      return kOk;
    }

    if (*oracle_cmd) {
      std::optional<BigRational> value;
      if (!param_value_text.empty()) {
        try {
          value = BigRational::parse(param_value_text);
        } catch (const ParseError& e) {
          err << "error: --param-value: " << e.what() << '\n';
          return kUsage;
        }
      }
      if (in.state.is_parametric() && !value) {
        err << "error: state has free parameter '" << in.state.param_name()
            << "'; pass --param-value\n";
        return kParametricInput;
      }
      if (!in.state.is_parametric() && value) {
        err << "error: --param-value given but the state has no parameter\n";
        return kUsage;
      }
      const BipartiteState concrete = value ? in.state.specialize(*value) : in.state;
      const auto t0 = Clock::now();
      const oracle::SchmidtSpectrum spec = oracle::schmidt_spectrum(concrete);
      const double oracle_ms = ms_since(t0);
      if (want_json) {
        emit_json(out, args, in.sha, report::oracle_result(spec, value),
                  {{"parse", in.parse_ms}, {"oracle", oracle_ms}, {"total", ms_since(start)}});
      } else {
        out << report::oracle_text(spec, value);
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const MagnitudeModeError& e) {
    err << "error: " << e.what() << '\n';
    return kMagnitudeViolation;
  } catch (const ModeError& e) {
    err << "error: " << e.what() << '\n';
    return kParametricInput;
  } catch (const DomainError& e) {
    // Remaining failures are states the oracle cannot handle (e.g. a zero
    // trace after specialization); reported as input errors.
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace maxent::cli
