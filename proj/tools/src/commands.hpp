#ifndef ZETAREG_TOOLS_COMMANDS_HPP_
#define ZETAREG_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "output.hpp"

namespace zetareg::cli {

struct RunConfig {
  std::uint64_t seed = 0;
  double tol = 1e-10;
  Format format = Format::kJson;
  std::string out_path;
};

struct LFactorArgs {
  std::string place = "real";
  std::string frobenius = "+1";
  std::uint64_t prime = 0;
  std::string s;
  std::string alphas;
  std::string matrix_path;
  bool breakdown = false;
  std::string norm_a = "1";
  double norm_b = 1.0;
};

struct RegDetArgs {
  std::string kind = "halfline";
  std::string rho = "1";
  std::string lambda;
  double mu = 1.0;
  double hbar = 1.0;
  bool numeric = false;
  std::string branch = "ccw";
};

struct QGammaArgs {
  std::string q;
  std::string t;
  std::optional<double> beta;
  std::optional<double> hbar;
  std::string lambdas;
};

struct VolumeArgs {
  std::string lambdas;
  double mu = 1.0;
  std::optional<double> beta;
  std::size_t degree = 40;
  std::string matrix_path;
  std::size_t samples = 1'000'000;
};

struct VerifyArgs {
  std::string suite = "all";
  std::size_t samples = 100;
};

struct ConvergenceArgs {
  std::string target;
  std::optional<std::string> grid;  // absent: per-target default grid
  std::string q = "0.5";
  std::string t = "0.5";
  double beta = 1.0;
  double hbar = 1.0;
  std::string lambdas;
};

// Comma-separated lists.  Throw ParseError on malformed or empty input.
std::vector<Complex> parse_complex_list(const std::string& text, const char* what);
std::vector<double> parse_real_list(const std::string& text, const char* what);
double parse_real(const std::string& text, const char* what);

CommandOutput cmd_lfactor(const LFactorArgs& args, const RunConfig& config);
CommandOutput cmd_regdet(const RegDetArgs& args, const RunConfig& config);
CommandOutput cmd_qgamma(const QGammaArgs& args, const RunConfig& config);
CommandOutput cmd_volume(const VolumeArgs& args, const RunConfig& config);
CommandOutput cmd_verify(const VerifyArgs& args, const RunConfig& config);
CommandOutput cmd_convergence(const ConvergenceArgs& args, const RunConfig& config);

}  // namespace zetareg::cli

#endif  // ZETAREG_TOOLS_COMMANDS_HPP_
