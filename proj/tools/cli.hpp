#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatstat::cli {

enum ExitCode : int {
  kOk = 0,
  kSelfCheckFailed = 1,
  kConfigError = 2,
  kUnphysical = 3,
};

struct RunConfig {
  std::string subcommand;
  std::string model = "spin";  // toy | spin | qubit | file (negtemp also: gas)
  std::string params_path;

  double omega = 2.0;
  double v = 0.5;
  double x = 1.0;
  double phi = 0.0;
  double alpha = 1.0;
  double gamma = 1.0;

  double beta_min = 0.1;
  double beta_max = 5.0;
  int beta_steps = 50;
  bool log_grid = false;

  int n_particles = 1;
  double k = 1.0;
  std::string output = "csv";  // csv | json
  std::string out_path;        // stdout when empty
  double tolerance = 1e-9;
  int jobs = 1;

  std::string path = "closed";      // thermo: closed | spectral
  std::string branch = "printed";   // printed | rederived
  double volume = 0.0;              // > 0 adds the P column
  std::string discrepancies_path = "discrepancies.json";

  double e_plus = 1.0;   // negtemp --model gas
  double e_minus = -1.0;
  int points = 101;
};

/// Parses "min:max:steps"; throws ParseError.
void parse_beta_spec(const std::string& spec, RunConfig& cfg);
std::vector<double> beta_grid(const RunConfig& cfg);

/// %.17g; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

int run_thermo(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_negtemp(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name). Library errors are
/// mapped to exit codes and reported on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatstat::cli
