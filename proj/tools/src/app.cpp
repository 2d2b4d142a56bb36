#include "app.hpp"

#include <cmath>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "zetareg/version.hpp"

namespace zetareg::cli {
namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  verify: at least one identity missed its tolerance\n"
    "  2  usage or parse error: unknown flag, malformed number, list or matrix file\n"
    "  3  domain or pole error: Gamma pole, vanishing Euler factor, zero mode,\n"
    "     |q| >= 1, non-normal or singular matrix, non-positive parameter\n"
    "\n"
    "Complex values are written re+imi, e.g. 0.5, 2i, 1-0.25i.  Lists are\n"
    "comma-separated.";

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "plain") return Format::kPlain;
  return Format::kJson;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::kParse ? kExitUsage : kExitDomain;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Zeta-regularized determinants, local L-factors, q-Gamma values and "
      "equivariant volumes.",
      "zetareg"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig config;
  std::string format = "json";
  std::function<CommandOutput()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->footer(kExitCodeHelp);
    sub->add_option("--seed", config.seed, "Seed for sampled quantities")->capture_default_str();
    sub->add_option("--tol", config.tol, "Target tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    sub->add_option("--out", config.out_path, "Write output to PATH instead of stdout");
  };

  LFactorArgs lf;
  auto* lfactor = app.add_subcommand("lfactor", "Local L-factor at a real, complex or p-adic place");
  lfactor->add_option("--place", lf.place, "real, complex or nonarch")->capture_default_str();
  lfactor->add_option("--frob", lf.frobenius, "Frobenius sign at a real place, +1 or -1")
      ->capture_default_str();
  lfactor->add_option("--p", lf.prime, "Prime at a non-Archimedean place");
  lfactor->add_option("--s", lf.s, "Complex argument s")->required();
  lfactor->add_option("--alphas", lf.alphas, "Eigenvalues, comma-separated");
  lfactor->add_option("--matrix", lf.matrix_path, "Matrix file; must be normal");
  lfactor->add_flag("--breakdown", lf.breakdown, "Also print the factor of each eigenvalue");
  lfactor->add_option("--A", lf.norm_a, "Normalization constant A (complex)")
      ->capture_default_str();
  lfactor->add_option("--B", lf.norm_b, "Normalization base B > 0; multiplies by A B^s")
      ->capture_default_str();
  add_common(lfactor);
  lfactor->callback([&] { action = [&] { return cmd_lfactor(lf, config); }; });

  RegDetArgs rd;
  auto* regdet_cmd = app.add_subcommand("regdet", "Zeta-regularized determinant of a spectrum");
  regdet_cmd->add_option("--kind", rd.kind, "halfline, fullline, constant or disk")
      ->capture_default_str();
  regdet_cmd->add_option("--rho", rd.rho, "Spectral step (complex)")->capture_default_str();
  regdet_cmd->add_option("--lambda", rd.lambda, "Spectral offset (complex; real for disk)");
  regdet_cmd->add_option("--mu", rd.mu, "disk: coupling mu > 0")->capture_default_str();
  regdet_cmd->add_option("--hbar", rd.hbar, "disk: hbar > 0")->capture_default_str();
  regdet_cmd->add_flag("--numeric", rd.numeric, "Also evaluate through the Hurwitz zeta assembly");
  regdet_cmd->add_option("--branch", rd.branch, "fullline --numeric: ccw or principal")
      ->capture_default_str();
  add_common(regdet_cmd);
  regdet_cmd->callback([&] { action = [&] { return cmd_regdet(rd, config); }; });

  QGammaArgs qg;
  auto* qgamma = app.add_subcommand("qgamma", "q-Gamma values 1/(t;q)_inf and their product");
  qgamma->add_option("--q", qg.q, "Nome q, |q| < 1 (complex)");
  qgamma->add_option("--t", qg.t, "Arguments t, comma-separated (complex)");
  qgamma->add_option("--beta", qg.beta, "Thermal form: beta > 0");
  qgamma->add_option("--hbar", qg.hbar, "Thermal form: hbar > 0, q = exp(-beta hbar)");
  qgamma->add_option("--lambdas", qg.lambdas, "Thermal form: t_j = exp(-beta lambda_j)");
  add_common(qgamma);
  qgamma->callback([&] { action = [&] { return cmd_qgamma(qg, config); }; });

  VolumeArgs vol;
  auto* volume = app.add_subcommand("volume", "Equivariant volume, character and Gaussian integrals");
  volume->add_option("--lambdas", vol.lambdas, "Positive weights, comma-separated");
  volume->add_option("--mu", vol.mu, "Super-integral coupling mu > 0")->capture_default_str();
  volume->add_option("--beta", vol.beta, "Also evaluate the character at this beta");
  volume->add_option("--degree", vol.degree, "Character truncation degree")->capture_default_str();
  volume->add_option("--matrix", vol.matrix_path, "Gaussian form A from a matrix file");
  volume->add_option("--samples", vol.samples, "Monte Carlo samples for --matrix")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(volume);
  volume->callback([&] { action = [&] { return cmd_volume(vol, config); }; });

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run seeded identity suites");
  verify->add_option("--suite", vf.suite, "specfun, regdet, theorem21, qgamma, volumes or all")
      ->capture_default_str();
  verify->add_option("--samples", vf.samples, "Samples per suite")->capture_default_str();
  add_common(verify);
  verify->callback([&] { action = [&] { return cmd_verify(vf, config); }; });

  ConvergenceArgs cv;
  auto* convergence = app.add_subcommand("convergence", "Truncation error tables");
  convergence->add_option("--target", cv.target, "qgamma, classical_limit, character or mode3d")
      ->required();
  convergence->add_option("--grid", cv.grid,
                          "Grid: factors (qgamma), cutoffs (mode3d), betas (classical_limit) "
                          "or degrees (character)");
  convergence->add_option("--q", cv.q, "qgamma: nome")->capture_default_str();
  convergence->add_option("--t", cv.t, "qgamma: argument")->capture_default_str();
  convergence->add_option("--beta", cv.beta, "character, mode3d: beta")->capture_default_str();
  convergence->add_option("--hbar", cv.hbar, "mode3d: hbar")->capture_default_str();
  convergence->add_option("--lambdas", cv.lambdas, "Weights (default depends on target)");
  add_common(convergence);
  convergence->callback([&] { action = [&] { return cmd_convergence(cv, config); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    CommandOutput result = action();
    const Format fmt = parse_format(format);
    const std::string text = render(result, Meta{config.seed, config.tol, kVersion}, fmt);
    if (config.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
      if (!file || !(file << text) || !file.flush()) {
        err << "zetareg " << command << ": cannot write '" << config.out_path << "'\n";
        return kExitUsage;
      }
    }
    // Wall times are not part of JSON or CSV output, which must be
    // byte-identical across runs.
    if (fmt != Format::kPlain) {
      for (const auto& note : result.notes) err << note << '\n';
    }
    return result.verification_failed ? kExitVerifyFailed : kExitOk;
  } catch (const Error& e) {
    err << "zetareg " << command << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace zetareg::cli
