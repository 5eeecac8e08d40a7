#include <cstdlib>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "resistnet/cli.hpp"
#include "resistnet/io.hpp"

using namespace resistnet;
using json = nlohmann::json;

namespace {

RunRequest lattice_request() {
  RunRequest req;
  req.command = "lattice";
  req.bc = "free";
  req.dims = "5x4";
  req.from = "0,0";
  req.to = "3,3";
  return req;
}

std::string data_file(const char* name) {
  const char* dir = std::getenv("RESISTNET_DATA");
  return std::string(dir ? dir : "data") + "/" + name;
}

}  // namespace

TEST_CASE("lattice command in both modes") {
  RunRequest req = lattice_request();
  req.mode = "both";
  const auto res = run(req);
  REQUIRE(res.exit_code == 0);
  const auto report = json::parse(res.output);
  const Rational expected = Rational::parse("3/4") + Rational::parse("3/5") + Rational::parse("9877231/27600540");
  CHECK(report["value_exact"] == expected.str());
  CHECK(report["value_float"].get<double>() == doctest::Approx(1.707863).epsilon(1e-6));
  CHECK(report["discrepancy"].get<double>() <= 1e-9);
  CHECK(report["method"] == "closed-form+oracle");
  CHECK(report["spec"]["bc"] == "free2d");
  CHECK(report["pair"]["to"] == json::array({3, 3}));
}

TEST_CASE("graph command on a network file") {
  RunRequest req;
  req.command = "graph";
  req.input = data_file("example1.json");
  req.from = "1";
  req.to = "3";
  const auto res = run(req);
  REQUIRE(res.exit_code == 0);
  CHECK(json::parse(res.output)["value_float"].get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  req.mode = "exact";
  CHECK(json::parse(run(req).output)["value_exact"] == "1");
}

TEST_CASE("inline edge lists") {
  RunRequest req;
  req.command = "graph";
  req.inline_network = "0 1 1; 1 2 1/2 ; 2 0 3";
  req.from = "0";
  req.to = "1";
  req.mode = "exact";
  const auto res = run(req);
  REQUIRE(res.exit_code == 0);
  CHECK(json::parse(res.output)["value_exact"] == "7/9");
}

TEST_CASE("identity command") {
  RunRequest req;
  req.command = "identity";
  req.which = "product-periodic";
  req.N = 1;
  req.lambda = 1.0;
  const auto report = json::parse(run(req).output);
  CHECK(report["lhs"].get<double>() == doctest::Approx(std::cosh(1.0) - 1.0).epsilon(1e-15));
  CHECK(report["rhs"].get<double>() == doctest::Approx(std::cosh(1.0) - 1.0).epsilon(1e-15));
  req.which = "i1";
  req.N = 6;
  req.ell = 2;
  req.lambda = 0.0;
  CHECK(json::parse(run(req).output)["closed"] == "inf");
  req.which = "bogus";
  CHECK(run(req).exit_code == 2);
}

TEST_CASE("infinite command") {
  RunRequest req;
  req.command = "infinite";
  req.delta = "1,0";
  auto report = json::parse(run(req).output);
  CHECK(report["value_float"].get<double>() == doctest::Approx(0.5).epsilon(1e-8));
  req.delta = "1,0,0";
  report = json::parse(run(req).output);
  CHECK(report["value_float"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  req.delta = "1";
  CHECK(run(req).exit_code == 2);
}

TEST_CASE("exit codes and error objects") {
  RunRequest req;
  req.command = "graph";
  req.inline_network = "0 1 1\n2 3 1";
  req.from = "0";
  req.to = "3";
  auto res = run(req);
  CHECK(res.exit_code == 3);
  CHECK(json::parse(res.output)["error"]["kind"] == "Disconnected");

  req.inline_network = "0 1 -1";
  req.to = "1";
  CHECK(run(req).exit_code == 2);
  req.inline_network = "0 1 one";
  CHECK(run(req).exit_code == 2);

  req = lattice_request();
  req.to = "7,7";
  res = run(req);
  CHECK(res.exit_code == 4);
  CHECK(json::parse(res.output)["error"]["kind"] == "OutOfRange");
  req.to = "3";
  CHECK(run(req).exit_code == 2);
  req = lattice_request();
  req.bc = "klein";
  req.dims = "3x3x3";
  CHECK(run(req).exit_code == 2);
  req = lattice_request();
  req.format = "yaml";
  CHECK(run(req).exit_code == 2);
  req = lattice_request();
  req.command = "nope";
  CHECK(run(req).exit_code == 2);
}

TEST_CASE("tolerance comes from the environment") {
  ::unsetenv("RESISTNET_TOL");
  CHECK(tolerance_from_env() == 1e-9);
  ::setenv("RESISTNET_TOL", "1e-6", 1);
  CHECK(tolerance_from_env() == 1e-6);
  RunRequest req = lattice_request();
  req.mode = "both";
  CHECK(json::parse(run(req).output)["tolerance"].get<double>() == 1e-6);
  ::setenv("RESISTNET_TOL", "tiny", 1);
  CHECK(run(req).exit_code == 2);
  ::unsetenv("RESISTNET_TOL");
  req.tolerance = 0.0;
  req.dims = "7x5";
  req.to = "3,2";
  const auto res = run(req);
  const auto report = json::parse(res.output);
  CHECK(res.exit_code == (report["discrepancy"].get<double>() > 0.0 ? 5 : 0));
}

TEST_CASE("csv and text output") {
  RunRequest req = lattice_request();
  req.format = "csv";
  const auto csv = run(req).output;
  CHECK(csv.rfind("command,method,pair,spec,value_float\n", 0) == 0);
  req.format = "text";
  CHECK(run(req).output.find("value_float: 1.70786") != std::string::npos);
}

TEST_CASE("reproduction report") {
  const auto first = reproduce_examples();
  const auto second = reproduce_examples();
  CHECK(first.output == second.output);
  const auto report = json::parse(first.output);
  REQUIRE(report["rows"].size() == 14);
  std::vector<std::string> failing;
  for (const auto& row : report["rows"]) {
    if (!row["pass"].get<bool>()) failing.push_back(row["name"]);
  }
  // both carry quoted values that their networks do not produce
  CHECK(failing == std::vector<std::string>{"Example 1 R12", "Example 7"});
  CHECK(first.exit_code == 5);
  CHECK(reproduce_examples("csv").output.find("Example 11") != std::string::npos);
}

TEST_CASE("network files round-trip") {
  for (const auto& net : oracle::random_networks(41, 20, 2, 10, {1, 2, Rational::parse("1/3"), Rational::from_double(0.1)})) {
    const Network back = parse_network(to_json(net));
    CHECK(back.n_nodes() == net.n_nodes());
    CHECK((assemble_laplacian(back) - assemble_laplacian(net)).norm() == 0.0);
    CHECK(back.couplings().size() == net.couplings().size());
    for (std::size_t k = 0; k < net.couplings().size(); ++k) {
      CHECK(back.couplings()[k].conductance == net.couplings()[k].conductance);
    }
  }
  const Network text = parse_network("# square\n0 1 1\n1 2 2/3\n\n2 0 0.5  # last\n");
  CHECK(text.n_nodes() == 3);
  CHECK(text.edges()[1].resistance == Rational::parse("2/3"));
  CHECK_THROWS_AS(parse_network("{\"nodes\": 2, \"edges\": [[0, 1]]}"), Error);
  CHECK_THROWS_AS(parse_network("{\"nodes\": 2"), Error);
  CHECK_THROWS_AS(parse_network("0 1"), Error);
}
