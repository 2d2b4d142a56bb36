#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "matrix_io.hpp"
#include "zetareg/lfactor.hpp"
#include "zetareg/regdet.hpp"
#include "zetareg/specfun.hpp"
#include "zetareg/verify.hpp"
#include "zetareg/volumes.hpp"

namespace zetareg::cli {
namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& text, const char* what) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma - start)));
    if (parts.back().empty()) throw ParseError(std::string(what) + ": empty list entry");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string(what) + ": '" + text + "' is not a non-negative integer");
  }
  return value;
}

std::vector<std::size_t> parse_count_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& part : split_commas(text, what)) out.push_back(parse_count(part, what));
  return out;
}

Complex parse_complex_arg(const std::string& text, const char* what) {
  try {
    const Complex z = parse_complex(text);
    if (!is_finite(z)) throw ParseError("non-finite value");
    return z;
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string join_complex(const std::vector<Complex>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += format_complex(values[k]);
  }
  return out;
}

std::string join_real(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += format_double(values[k]);
  }
  return out;
}

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

double relative_error(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

}  // namespace

double parse_real(const std::string& raw, const char* what) {
  std::string text = trim(raw);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string(what) + ": '" + raw + "' is not a finite real number");
  }
  return value;
}

std::vector<Complex> parse_complex_list(const std::string& text, const char* what) {
  std::vector<Complex> out;
  for (const auto& part : split_commas(text, what)) out.push_back(parse_complex_arg(part, what));
  return out;
}

std::vector<double> parse_real_list(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& part : split_commas(text, what)) out.push_back(parse_real(part, what));
  return out;
}

CommandOutput cmd_lfactor(const LFactorArgs& args, const RunConfig&) {
  CommandOutput out;
  out.command = "lfactor";

  if (args.s.empty()) throw ParseError("lfactor: --s is required");
  const Complex s = parse_complex_arg(args.s, "--s");
  if (args.alphas.empty() == args.matrix_path.empty()) {
    throw ParseError("lfactor: give exactly one of --alphas and --matrix");
  }
  std::vector<Complex> eigenvalues;
  if (!args.alphas.empty()) {
    eigenvalues = parse_complex_list(args.alphas, "--alphas");
  } else {
    const ComplexMatrix a = read_matrix_file(args.matrix_path);
    require_normal(a);
    eigenvalues = sorted_eigenvalues(a);
  }

  LFactorSpec spec;
  out.params.set("place", args.place);
  if (args.place == "real") {
    int frob = 0;
    if (args.frobenius == "+1" || args.frobenius == "1") {
      frob = +1;
    } else if (args.frobenius == "-1") {
      frob = -1;
    } else {
      throw ParseError("lfactor: --frob must be +1 or -1");
    }
    spec = LFactorSpec::real(frob, s, eigenvalues);
    out.params.set("frob", static_cast<std::int64_t>(frob));
  } else if (args.place == "complex") {
    spec = LFactorSpec::complex_place(s, eigenvalues);
  } else if (args.place == "nonarch") {
    if (args.prime == 0) throw ParseError("lfactor: --p is required at a non-Archimedean place");
    spec = LFactorSpec::non_archimedean(args.prime, s, eigenvalues);
    out.params.set("p", static_cast<std::int64_t>(args.prime));
  } else {
    throw ParseError("lfactor: --place must be real, complex or nonarch");
  }
  const EpsilonNormalization norm{parse_complex_arg(args.norm_a, "--A"), args.norm_b};

  out.params.set("s", s);
  out.params.set("eigenvalues", join_complex(eigenvalues));
  if (!args.matrix_path.empty()) out.params.set("matrix", args.matrix_path);
  out.params.set("A", norm.a);
  out.params.set("B", norm.b);

  if (args.breakdown) {
    const auto factors = l_factor_breakdown(spec);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      Record row;
      row.set("quantity", std::string("factor"))
          .set("index", as_int(k))
          .set("eigenvalue", eigenvalues[k])
          .set("value", factors[k]);
      out.results.push_back(std::move(row));
    }
  }
  Record total;
  total.set("quantity", std::string("l_factor")).set("value", l_factor(spec, norm));
  out.results.push_back(std::move(total));
  return out;
}

CommandOutput cmd_regdet(const RegDetArgs& args, const RunConfig&) {
  CommandOutput out;
  out.command = "regdet";
  out.params.set("kind", args.kind);

  if (args.kind == "disk") {
    if (args.lambda.empty()) throw ParseError("regdet: --lambda is required");
    const double lambda = parse_real(args.lambda, "--lambda");
    out.params.set("mu", args.mu).set("hbar", args.hbar).set("lambda", lambda);
    const Complex assembled = disk_det_ratio(args.mu, args.hbar, lambda);
    const Complex closed = disk_det_ratio_closed_form(args.mu, args.hbar, lambda);
    Record row;
    row.set("det", assembled)
        .set("closed_form", closed)
        .set("abs_err", std::abs(assembled - closed));
    out.results.push_back(std::move(row));
    return out;
  }

  const Complex rho = parse_complex_arg(args.rho, "--rho");
  SpectrumDescriptor spec;
  if (args.kind == "constant") {
    spec = SpectrumDescriptor::constant(rho);
  } else {
    if (args.lambda.empty()) throw ParseError("regdet: --lambda is required");
    const Complex lambda = parse_complex_arg(args.lambda, "--lambda");
    if (args.kind == "halfline") {
      spec = SpectrumDescriptor::half_line(rho, lambda);
    } else if (args.kind == "fullline") {
      spec = SpectrumDescriptor::full_line(rho, lambda);
    } else {
      throw ParseError("regdet: --kind must be halfline, fullline, constant or disk");
    }
  }
  ReflectedBranch branch = ReflectedBranch::kCounterClockwise;
  if (args.branch == "principal") {
    branch = ReflectedBranch::kPrincipal;
  } else if (args.branch != "ccw") {
    throw ParseError("regdet: --branch must be ccw or principal");
  }
  out.params.set("rho", spec.rho);
  if (spec.kind != SpectrumKind::kConstant) out.params.set("lambda", spec.lambda);
  if (args.numeric && spec.kind == SpectrumKind::kFullLine) out.params.set("branch", args.branch);

  const RegDetResult result = regdet(spec);
  Record row;
  row.set("log_det", result.log_det).set("det", result.det).set("branch_note", result.branch_note);
  if (args.numeric && spec.kind != SpectrumKind::kConstant) {
    validate(spec);
    const Complex numeric = spec.kind == SpectrumKind::kHalfLine
                                ? std::exp(regdet_halfline_log_numeric(spec.rho, spec.lambda))
                                : regdet_fullline_numeric(spec.rho, spec.lambda, branch);
    row.set("det_numeric", numeric).set("abs_err", std::abs(numeric - result.det));
  }
  out.results.push_back(std::move(row));
  return out;
}

CommandOutput cmd_qgamma(const QGammaArgs& args, const RunConfig& config) {
  CommandOutput out;
  out.command = "qgamma";

  const bool thermal = args.beta || args.hbar || !args.lambdas.empty();
  const bool direct = !args.q.empty() || !args.t.empty();
  if (thermal == direct) {
    throw ParseError("qgamma: give either --q and --t, or --beta, --hbar and --lambdas");
  }
  QDeformParams params;
  if (direct) {
    if (args.q.empty() || args.t.empty()) throw ParseError("qgamma: --q and --t are both required");
    params.q = parse_complex_arg(args.q, "--q");
    params.t = parse_complex_list(args.t, "--t");
  } else {
    if (!args.beta || !args.hbar || args.lambdas.empty()) {
      throw ParseError("qgamma: --beta, --hbar and --lambdas are all required");
    }
    const auto lambdas = parse_real_list(args.lambdas, "--lambdas");
    params = QDeformParams::from_thermal(*args.beta, *args.hbar, lambdas);
    out.params.set("beta", *args.beta).set("hbar", *args.hbar).set("lambdas", join_real(lambdas));
  }
  out.params.set("q", params.q).set("t", join_complex(params.t));

  for (std::size_t k = 0; k < params.t.size(); ++k) {
    Record row;
    row.set("quantity", std::string("gamma_q"))
        .set("index", as_int(k))
        .set("t", params.t[k])
        .set("factors", as_int(q_pochhammer_cutoff(params.t[k], params.q, std::log1p(config.tol))))
        .set("value", q_gamma(params.t[k], params.q, config.tol));
    out.results.push_back(std::move(row));
  }
  if (params.t.size() > 1) {
    Record row;
    row.set("quantity", std::string("product")).set("value", q_l_factor(params, config.tol));
    out.results.push_back(std::move(row));
  }
  return out;
}

CommandOutput cmd_volume(const VolumeArgs& args, const RunConfig& config) {
  CommandOutput out;
  out.command = "volume";
  if (args.lambdas.empty() && args.matrix_path.empty()) {
    throw ParseError("volume: give --lambdas, --matrix, or both");
  }
  if (!args.lambdas.empty()) {
    const auto lambdas = parse_real_list(args.lambdas, "--lambdas");
    out.params.set("lambdas", join_real(lambdas)).set("mu", args.mu);
    Record closed;
    closed.set("quantity", std::string("equivariant_volume"))
        .set("value", equivariant_volume(lambdas));
    out.results.push_back(std::move(closed));
    Record super;
    super.set("quantity", std::string("superintegral"))
        .set("value", equivariant_volume_superintegral(lambdas, args.mu));
    out.results.push_back(std::move(super));

    if (args.beta) {
      const double beta = *args.beta;
      out.params.set("beta", beta).set("degree", as_int(args.degree));
      const std::pair<const char*, double> rows[] = {
          {"character_trace", character_trace(beta, lambdas, args.degree)},
          {"character_closed_form", character_closed_form(beta, lambdas)},
          {"character_tail_bound", character_tail_bound(beta, lambdas, args.degree)},
          {"classical_limit_ratio", classical_limit_ratio(lambdas, beta)},
      };
      for (const auto& [name, value] : rows) {
        Record row;
        row.set("quantity", std::string(name)).set("value", value);
        out.results.push_back(std::move(row));
      }
    }
  }
  if (!args.matrix_path.empty()) {
    const ComplexMatrix a = read_matrix_file(args.matrix_path);
    out.params.set("matrix", args.matrix_path).set("samples", as_int(args.samples));
    Record exact;
    exact.set("quantity", std::string("gaussian_integral")).set("value", gaussian_integral(a));
    out.results.push_back(std::move(exact));

    TruncationControl ctl;
    ctl.mc_samples = args.samples;
    ctl.seed = config.seed;
    const McEstimate mc = gaussian_integral_mc(a, ctl);
    Record sampled;
    sampled.set("quantity", std::string("gaussian_integral_mc"))
        .set("value", mc.estimate)
        .set("standard_error", mc.standard_error);
    out.results.push_back(std::move(sampled));
  }
  return out;
}

CommandOutput cmd_verify(const VerifyArgs& args, const RunConfig& config) {
  CommandOutput out;
  out.command = "verify";
  out.params.set("suite", args.suite).set("samples", as_int(args.samples));
  if (args.suite != "all" && !is_suite_name(args.suite)) {
    throw ParseError("verify: unknown suite '" + args.suite + "'");
  }

  const auto suites = run_suites(args.suite, args.samples, config.seed, config.tol);
  for (const auto& suite : suites) {
    for (const auto& report : suite.reports) {
      Record row;
      row.set("suite", suite.suite)
          .set("identity", report.identity)
          .set("params", report.params)
          .set("lhs", report.lhs)
          .set("rhs", report.rhs)
          .set("abs_err", report.abs_err)
          .set("rel_err", report.rel_err)
          .set("tol", report.tol)
          .set("pass", report.pass);
      out.results.push_back(std::move(row));
    }
    char line[160];
    std::snprintf(line, sizeof(line), "suite %s: %zu passed, %zu failed, %.3fs",
                  suite.suite.c_str(), suite.pass_count, suite.fail_count, suite.wall_seconds);
    out.notes.emplace_back(line);
    if (!suite.ok()) out.verification_failed = true;
  }
  return out;
}

CommandOutput cmd_convergence(const ConvergenceArgs& args, const RunConfig&) {
  CommandOutput out;
  out.command = "convergence";
  out.params.set("target", args.target);

  // Reference values are computed to a fixed tolerance well below any
  // truncation error shown in the table.
  constexpr double kReferenceTol = 1e-15;

  if (args.target == "qgamma" || args.target == "mode3d") {
    const auto grid = parse_count_list(args.grid.value_or("5,10,20"), "--grid");
    Complex q;
    Complex t;
    double lambda = 0.0;
    if (args.target == "qgamma") {
      q = parse_complex_arg(args.q, "--q");
      t = parse_complex_arg(args.t, "--t");
      out.params.set("q", q).set("t", t);
    } else {
      const auto lambdas = parse_real_list(args.lambdas.empty() ? "1" : args.lambdas, "--lambdas");
      if (lambdas.size() != 1) throw ParseError("convergence mode3d: give a single --lambdas value");
      const auto params = QDeformParams::from_thermal(args.beta, args.hbar, lambdas);
      q = params.q;
      t = params.t[0];
      lambda = lambdas[0];
      out.params.set("beta", args.beta).set("hbar", args.hbar).set("lambda", lambdas[0]);
    }
    const Complex reference = q_gamma(t, q, kReferenceTol);
    for (std::size_t n : grid) {
      // qgamma: n factors.  mode3d: modes 0..n, i.e. n + 1 factors.
      const std::size_t factors = args.target == "qgamma" ? n : n + 1;
      const Complex value =
          args.target == "qgamma"
              ? 1.0 / q_pochhammer(t, q, factors)
              : mode_partition_3d(args.beta, args.hbar, lambda, n);
      Record row;
      row.set(args.target == "qgamma" ? "factors" : "cutoff", as_int(n))
          .set("value", value)
          .set("reference", reference)
          .set("error", relative_error(value, reference))
          .set("bound", std::expm1(q_pochhammer_tail_bound(t, q, factors)));
      out.results.push_back(std::move(row));
    }
    return out;
  }

  if (args.target == "classical_limit") {
    const auto betas =
        parse_real_list(args.grid.value_or("1e-2,1e-3,1e-4"), "--grid");
    const auto lambdas = parse_real_list(args.lambdas.empty() ? "1" : args.lambdas, "--lambdas");
    out.params.set("lambdas", join_real(lambdas));
    double slope = 0.0;
    for (double lambda : lambdas) slope += lambda;
    for (double beta : betas) {
      const double ratio = classical_limit_ratio(lambdas, beta);
      Record row;
      row.set("beta", beta)
          .set("value", ratio)
          .set("reference", 1.0)
          .set("error", std::abs(ratio - 1.0))
          .set("bound", slope * beta);
      out.results.push_back(std::move(row));
    }
    return out;
  }

  if (args.target == "character") {
    const auto degrees = parse_count_list(args.grid.value_or("10,20,40"), "--grid");
    const auto lambdas =
        parse_real_list(args.lambdas.empty() ? "1,2" : args.lambdas, "--lambdas");
    out.params.set("beta", args.beta).set("lambdas", join_real(lambdas));
    const double reference = character_closed_form(args.beta, lambdas);
    for (std::size_t degree : degrees) {
      const double value = character_trace(args.beta, lambdas, degree);
      Record row;
      row.set("degree", as_int(degree))
          .set("value", value)
          .set("reference", reference)
          .set("error", std::abs(reference - value))
          .set("bound", character_tail_bound(args.beta, lambdas, degree))
          .set("geometric_bound", character_tail_bound_geometric(args.beta, lambdas, degree));
      out.results.push_back(std::move(row));
    }
    return out;
  }

  throw ParseError("convergence: --target must be qgamma, classical_limit, character or mode3d");
}

}  // namespace zetareg::cli
