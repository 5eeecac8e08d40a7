#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "resistnet/cli.hpp"

namespace {

void add_common(CLI::App* sub, resistnet::RunRequest& req) {
  sub->add_option("--format", req.format, "json, csv or text")->capture_default_str();
  sub->add_option("--tol", req.tolerance, "float/exact tolerance (overrides RESISTNET_TOL)");
}

void add_pair(CLI::App* sub, resistnet::RunRequest& req) {
  sub->add_option("--from", req.from, "source node or comma-separated coordinates")->required();
  sub->add_option("--to", req.to, "sink node or comma-separated coordinates")->required();
  sub->add_option("--mode", req.mode, "float, exact or both")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  resistnet::RunRequest req;
  CLI::App app{"Two-point resistances of resistor networks and lattices"};
  app.require_subcommand(1);

  auto* graph = app.add_subcommand("graph", "arbitrary network from a file or inline edge list");
  graph->add_option("--input", req.input, "network file (JSON or `i j r` lines), - for stdin");
  graph->add_option("--edges", req.inline_network, "inline `i j r` triples separated by ';'");
  add_pair(graph, req);
  add_common(graph, req);

  auto* lattice = app.add_subcommand(
      "lattice", "regular lattice; node index is x + M*y + M*N*z, coordinates 0-based");
  lattice->add_option("--bc", req.bc, "free, periodic, cylinder, moebius or klein")->required();
  lattice->add_option("--dims", req.dims, "axis sizes, e.g. 5x4 or 5x5x4")->required();
  lattice->add_option("--r", req.r, "x-bond resistance (integer, p/q or decimal)")->capture_default_str();
  lattice->add_option("--s", req.s, "y-bond resistance")->capture_default_str();
  lattice->add_option("--t", req.t, "z-bond resistance")->capture_default_str();
  add_pair(lattice, req);
  add_common(lattice, req);

  auto* identity = app.add_subcommand("identity", "lattice-sum and product identities");
  identity->add_option("--which", req.which,
                       "i1, i2, difference1, difference2, product-free, product-periodic or limit")
      ->required();
  identity->add_option("--N", req.N, "number of terms")->capture_default_str();
  identity->add_option("--ell", req.ell, "offset")->capture_default_str();
  identity->add_option("--lambda", req.lambda, "damping")->capture_default_str();
  add_common(identity, req);

  auto* infinite = app.add_subcommand("infinite", "infinite square or cubic lattice");
  infinite->add_option("--delta", req.delta, "offset, e.g. 1,1 or 1,1,0")->required();
  infinite->add_option("--r", req.r)->capture_default_str();
  infinite->add_option("--s", req.s)->capture_default_str();
  infinite->add_option("--t", req.t)->capture_default_str();
  add_common(infinite, req);

  auto* reproduce = app.add_subcommand("reproduce", "recompute every worked example");
  add_common(reproduce, req);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const nlohmann::json err{{"error", {{"kind", "ParseError"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  req.command = app.get_subcommands().front()->get_name();
  const auto result = resistnet::run(req);
  std::cout << result.output;
  return result.exit_code;
}
