#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace resistnet {

/// One CLI invocation. String fields carry the raw flag text; `run` parses
/// and validates them so that every failure maps onto an exit code.
struct RunRequest {
  std::string command;         // graph | lattice | identity | infinite | reproduce
  std::string mode = "float";  // float | exact | both
  std::string format = "json"; // json | csv | text

  // graph
  std::string input;           // network file, "-" for stdin
  std::string inline_network;  // `i j r` triples separated by ';' or newlines
  // graph and lattice
  std::string from;
  std::string to;
  // lattice and infinite
  std::string bc;
  std::string dims;            // "5x4" or "5,4"
  std::string r = "1";
  std::string s = "1";
  std::string t = "1";
  std::string delta;           // infinite: "1,1" or "1,1,0"
  // identity
  std::string which;           // i1 | i2 | difference1 | difference2 | product-free | product-periodic | limit
  std::size_t N = 1;
  long long ell = 0;
  double lambda = 1.0;

  std::optional<double> tolerance;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// RESISTNET_TOL if set, else 1e-9. Throws ParseError on a malformed value.
double tolerance_from_env();

/// Executes the request. Never throws: failures become an error report
/// {"error": {"kind", "message"}} and the matching exit code.
RunResult run(const RunRequest& request);

/// Report covering every worked example; exit code 5 if any row fails.
RunResult reproduce_examples(const std::string& format = "json", std::optional<double> tolerance = std::nullopt);

}  // namespace resistnet
