#include "resistnet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "resistnet/error.hpp"
#include "resistnet/exact.hpp"
#include "resistnet/golden.hpp"
#include "resistnet/identities.hpp"
#include "resistnet/io.hpp"
#include "resistnet/lattice.hpp"
#include "resistnet/spectral.hpp"

namespace resistnet {

using json = nlohmann::json;

namespace {

constexpr double kDefaultTolerance = 1e-9;

std::string number_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double relative_gap(double value, double reference) {
  const double gap = std::fabs(value - reference);
  return reference == 0.0 ? gap : gap / std::fabs(reference);
}

std::vector<std::string> split(std::string_view text, std::string_view seps) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string_view::npos) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::ParseError, std::string("bad ") + what + " '" + text + "'");
}

std::size_t parse_index(const std::string& text, const char* what) {
  const long long v = parse_int(text, what);
  if (v < 0) throw Error(Errc::IndexOutOfRange, std::string(what) + " must be >= 0");
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  if (text.empty()) throw Error(Errc::ParseError, "--dims is required");
  std::vector<std::size_t> dims;
  for (const auto& part : split(text, "x,")) dims.push_back(parse_index(part, "dimension"));
  return dims;
}

std::vector<long long> parse_offsets(const std::string& text, const char* what) {
  if (text.empty()) throw Error(Errc::ParseError, std::string("--") + what + " is required");
  std::vector<long long> out;
  for (const auto& part : split(text, ",")) out.push_back(parse_int(part, what));
  return out;
}

Site parse_site(const std::string& text, std::size_t dim, const char* what) {
  auto coords = parse_offsets(text, what);
  if (coords.size() != dim) {
    throw Error(Errc::ParseError, std::string("--") + what + " needs " + std::to_string(dim) + " coordinate(s)");
  }
  std::size_t c[3] = {0, 0, 0};
  for (std::size_t k = 0; k < dim; ++k) {
    if (coords[k] < 0) throw Error(Errc::OutOfRange, "negative coordinate");
    c[k] = static_cast<std::size_t>(coords[k]);
  }
  return {c[0], c[1], c[2]};
}

json site_json(Site p, std::size_t dim) {
  json out = json::array();
  const std::size_t c[3] = {p.x, p.y, p.z};
  for (std::size_t k = 0; k < dim; ++k) out.push_back(c[k]);
  return out;
}

void require_mode(const std::string& mode) {
  if (mode != "float" && mode != "exact" && mode != "both") {
    throw Error(Errc::ParseError, "--mode must be float, exact or both");
  }
}

/// Fills value/discrepancy fields shared by graph and lattice reports.
/// Returns false if the float and exact values disagree beyond tolerance.
bool fill_values(json& report, const std::string& mode, const std::string& float_method,
                 const std::function<double()>& float_value, const std::function<Rational()>& exact_value,
                 double tolerance) {
  if (mode == "float") {
    report["method"] = float_method;
    report["value_float"] = float_value();
    return true;
  }
  const Rational exact = exact_value();
  report["value_exact"] = exact.str();
  if (mode == "exact") {
    report["method"] = "oracle";
    report["value_float"] = exact.to_double();
    return true;
  }
  const double approx = float_value();
  const double gap = relative_gap(approx, exact.to_double());
  report["method"] = float_method + "+oracle";
  report["value_float"] = approx;
  report["discrepancy"] = gap;
  report["tolerance"] = tolerance;
  return gap <= tolerance;
}

Network request_network(const RunRequest& req) {
  if (!req.inline_network.empty()) {
    std::string text = req.inline_network;
    for (char& c : text) {
      if (c == ';') c = '\n';
    }
    return parse_network(text);
  }
  if (req.input.empty()) throw Error(Errc::ParseError, "graph needs --input or --edges");
  if (req.input == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return parse_network(text);
  }
  return load_network(req.input);
}

std::pair<json, int> run_graph(const RunRequest& req, double tol) {
  require_mode(req.mode);
  const Network net = request_network(req);
  const NodeIndex a = parse_index(req.from, "--from"), b = parse_index(req.to, "--to");
  if (a >= net.n_nodes() || b >= net.n_nodes()) throw Error(Errc::IndexOutOfRange, "node index out of range");
  json report;
  report["command"] = "graph";
  report["pair"] = json{{"from", a}, {"to", b}};
  report["spec"] = json{{"nodes", net.n_nodes()}, {"edges", net.edges().size()}};
  const bool ok = fill_values(
      report, req.mode, "spectral", [&] { return two_point_resistance(decompose(net), a, b); },
      [&] { return solve_exact(net, a, b); }, tol);
  return {report, ok ? 0 : 5};
}

LatticeSpec request_lattice(const RunRequest& req) {
  if (req.bc.empty()) throw Error(Errc::ParseError, "--bc is required");
  auto dims = parse_dims(req.dims);
  auto bc = parse_boundary(req.bc, dims.size());
  if (!bc) {
    throw Error(Errc::ParseError, "boundary '" + req.bc + "' does not apply to " + std::to_string(dims.size()) +
                                      " dimension(s)");
  }
  LatticeSpec spec{*bc, std::move(dims), Rational::parse(req.r), Rational::parse(req.s), Rational::parse(req.t)};
  spec.validate();
  return spec;
}

std::pair<json, int> run_lattice(const RunRequest& req, double tol) {
  require_mode(req.mode);
  const LatticeSpec spec = request_lattice(req);
  const std::size_t dim = spec.dims.size();
  const Site a = parse_site(req.from, dim, "from"), b = parse_site(req.to, dim, "to");
  if (!spec.contains(a) || !spec.contains(b)) throw Error(Errc::OutOfRange, "site outside lattice");
  json report;
  report["command"] = "lattice";
  report["pair"] = json{{"from", site_json(a, dim)}, {"to", site_json(b, dim)}};
  json sj{{"bc", std::string(to_string(spec.bc))}, {"dims", spec.dims}, {"r", spec.r.str()}};
  if (dim > 1) sj["s"] = spec.s.str();
  if (dim > 2) sj["t"] = spec.t.str();
  report["spec"] = sj;
  const bool ok = fill_values(
      report, req.mode, "closed-form", [&] { return closed_form_resistance<double>(spec, a, b); },
      [&] { return solve_exact(make_lattice(spec), spec.index(a), spec.index(b)); }, tol);
  return {report, ok ? 0 : 5};
}

std::pair<json, int> run_identity(const RunRequest& req) {
  json report;
  report["command"] = "identity";
  report["which"] = req.which;
  report["N"] = req.N;
  report["lambda"] = req.lambda;
  report["method"] = "closed-form";
  const std::string& w = req.which;
  if (w == "product-free" || w == "product-periodic") {
    const ProductIdentity p =
        w == "product-free" ? product_identity_free(req.N, req.lambda) : product_identity_periodic(req.N, req.lambda);
    report["lhs"] = p.lhs;
    report["rhs"] = p.rhs;
    report["discrepancy"] = relative_gap(p.lhs, p.rhs);
    return {report, 0};
  }
  report["ell"] = req.ell;
  if (w == "limit") {
    report["value_float"] = identity_integral_limit(req.ell, req.lambda);
    return {report, 0};
  }
  IdentityQuery q{req.N, req.ell, req.lambda, 1};
  double closed = 0.0, direct = 0.0;
  if (w == "i1" || w == "i2") {
    q.variant = w == "i1" ? 1 : 2;
    closed = q.variant == 1 ? i1_closed(q) : i2_closed(q);
    direct = q.variant == 1 ? i1_direct(q) : i2_direct(q);
  } else if (w == "difference1" || w == "difference2") {
    q.variant = w == "difference1" ? 1 : 2;
    closed = identity_difference_closed(q);
    direct = identity_difference_direct(q);
  } else {
    throw Error(Errc::ParseError,
                "--which must be i1, i2, difference1, difference2, product-free, product-periodic or limit");
  }
  // JSON has no infinity; the lambda = 0 divergence is reported as a string.
  auto put = [&](const char* key, double v) {
    if (std::isinf(v)) {
      report[key] = v > 0 ? "inf" : "-inf";
    } else {
      report[key] = v;
    }
  };
  put("closed", closed);
  put("direct", direct);
  if (std::isfinite(closed) && std::isfinite(direct)) {
    report["discrepancy"] = std::fabs(closed - direct) / std::max(1.0, std::fabs(closed));
  }
  return {report, 0};
}

std::pair<json, int> run_infinite(const RunRequest& req) {
  const auto delta = parse_offsets(req.delta, "delta");
  if (delta.size() != 2 && delta.size() != 3) throw Error(Errc::ParseError, "--delta needs 2 or 3 offsets");
  const double r = Rational::parse(req.r).to_double(), s = Rational::parse(req.s).to_double(),
               t = Rational::parse(req.t).to_double();
  json report;
  report["command"] = "infinite";
  report["method"] = "quadrature";
  report["pair"] = json{{"delta", delta}};
  json sj{{"dims", delta.size()}, {"r", r}, {"s", s}};
  double value = 0.0;
  if (delta.size() == 2) {
    value = r_infinite_2d(delta[0], delta[1], r, s);
  } else {
    sj["t"] = t;
    value = r_infinite_3d(delta[0], delta[1], delta[2], r, s, t);
  }
  report["spec"] = sj;
  report["value_float"] = value;
  return {report, 0};
}

// Infinite-lattice rows: quadrature against Richardson-extrapolated periodic lattices.
json square_lattice_row(double tol) {
  const double target = 2.0 / std::numbers::pi;
  const double quad = r_infinite_2d(1, 1);
  auto periodic = [](std::size_t L) {
    LatticeSpec spec{Boundary::Periodic2D, {L, L}, 1, 1, 1};
    return closed_form_resistance<double>(spec, {0, 0}, {1, 1});
  };
  const double extrapolated = richardson(periodic(128), periodic(256), 2.0, 2.0);
  const double gap = std::max(std::fabs(quad - target), std::fabs(extrapolated - quad));
  return json{{"name", "Example 5"},
              {"description", "infinite square lattice, offset (1,1), unit resistors"},
              {"expected_float", target},
              {"quadrature", quad},
              {"extrapolated", extrapolated},
              {"discrepancy", gap},
              {"tolerance", std::max(tol, 1e-6)},
              {"pass", gap <= std::max(tol, 1e-6)}};
}

json cubic_lattice_row(double tol) {
  const double quad = r_infinite_3d(1, 1, 0);
  const double extrapolated = richardson(r_3d_periodic(32, 1, 1, 0), r_3d_periodic(64, 1, 1, 0), 2.0, 3.0);
  const double nearest = r_infinite_3d(1, 0, 0);
  const double gap = std::max(std::fabs(quad - extrapolated), std::fabs(nearest - 1.0 / 3.0));
  return json{{"name", "Example 12"},
              {"description", "infinite cubic lattice, offset (1,1,0), unit resistors"},
              {"expected_float", extrapolated},
              {"quadrature", quad},
              {"extrapolated", extrapolated},
              {"nearest_neighbour", nearest},
              {"discrepancy", gap},
              {"tolerance", std::max(tol, 1e-4)},
              {"pass", gap <= std::max(tol, 1e-4)}};
}

json golden_row(const GoldenResult& g, double tol) {
  const GoldenCase& c = g.golden;
  const double exact = g.computed.to_double();
  const double spectral = two_point_resistance(decompose(c.network), c.alpha, c.beta);
  double gap = relative_gap(spectral, exact);
  json row{{"name", c.name},
           {"description", c.description},
           {"expected_exact", c.expected.str()},
           {"expected_float", c.expected.to_double()},
           {"oracle_exact", g.computed.str()},
           {"oracle_float", exact},
           {"spectral", spectral}};
  if (c.lattice) {
    const double closed = closed_form_resistance<double>(c.lattice->spec, c.lattice->from, c.lattice->to);
    row["closed_form"] = closed;
    gap = std::max(gap, relative_gap(closed, exact));
  }
  row["discrepancy"] = gap;
  row["tolerance"] = tol;
  row["pass"] = g.pass && gap <= tol;
  return row;
}

std::string csv_field(const json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.is_number_float() ? number_text(v.get<double>())
                                                                                  : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  return quoted + "\"";
}

// Columns are the object's keys in sorted order; nested values are written as compact JSON.
std::string to_csv(const std::vector<json>& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& item : row.items()) {
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) columns.push_back(item.key());
    }
  }
  std::sort(columns.begin(), columns.end());
  std::string out;
  for (std::size_t k = 0; k < columns.size(); ++k) out += (k ? "," : "") + columns[k];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (k) out += ",";
      if (row.contains(columns[k])) out += csv_field(row.at(columns[k]));
    }
    out += "\n";
  }
  return out;
}

std::string text_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return number_text(v.get<double>());
  return v.dump();
}

std::string to_text(const json& report) {
  std::string out;
  for (const auto& item : report.items()) out += item.key() + ": " + text_value(item.value()) + "\n";
  return out;
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") {
    if (report.contains("rows")) return to_csv(report.at("rows").get<std::vector<json>>());
    return to_csv({report});
  }
  if (report.contains("rows")) {
    std::string out;
    for (const auto& row : report.at("rows")) {
      char line[160];
      std::snprintf(line, sizeof line, "%-20s %-4s %-22.15g %.3g\n", row.at("name").get<std::string>().c_str(),
                    row.at("pass").get<bool>() ? "pass" : "FAIL", row.at("expected_float").get<double>(),
                    row.at("discrepancy").get<double>());
      out += line;
      if (row.contains("oracle_exact") && row.at("oracle_exact") != row.at("expected_exact")) {
        out += "  expected " + row.at("expected_exact").get<std::string>() + ", oracle " +
               row.at("oracle_exact").get<std::string>() + "\n";
      }
    }
    out += "passed " + text_value(report.at("passed")) + " of " + text_value(report.at("total")) + "\n";
    return out;
  }
  return to_text(report);
}

void require_format(const std::string& format) {
  if (format != "json" && format != "csv" && format != "text") {
    throw Error(Errc::ParseError, "--format must be json, csv or text");
  }
}

std::pair<json, int> build_reproduction(double tol) {
  std::vector<json> rows;
  for (const auto& g : solve_exact_all_examples()) {
    rows.push_back(golden_row(g, tol));
    if (g.golden.name == "Example 4") rows.push_back(square_lattice_row(tol));
  }
  rows.push_back(cubic_lattice_row(tol));
  std::size_t passed = 0;
  for (const auto& row : rows) passed += row.at("pass").get<bool>() ? 1 : 0;
  json report{{"command", "reproduce"}, {"rows", rows}, {"passed", passed}, {"total", rows.size()},
              {"tolerance", tol}};
  return {report, passed == rows.size() ? 0 : 5};
}

RunResult error_result(Errc code, const std::string& message) {
  json err{{"error", {{"kind", std::string(to_string(code))}, {"message", message}}}};
  return {exit_code(code), err.dump(2) + "\n"};
}

}  // namespace

double tolerance_from_env() {
  const char* raw = std::getenv("RESISTNET_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v < 0.0) {
    throw Error(Errc::ParseError, std::string("RESISTNET_TOL is not a non-negative number: '") + raw + "'");
  }
  return v;
}

RunResult run(const RunRequest& req) {
  try {
    require_format(req.format);
    const double tol = req.tolerance ? *req.tolerance : tolerance_from_env();
    std::pair<json, int> out;
    if (req.command == "graph") {
      out = run_graph(req, tol);
    } else if (req.command == "lattice") {
      out = run_lattice(req, tol);
    } else if (req.command == "identity") {
      out = run_identity(req);
    } else if (req.command == "infinite") {
      out = run_infinite(req);
    } else if (req.command == "reproduce") {
      out = build_reproduction(tol);
    } else {
      throw Error(Errc::ParseError, "unknown command '" + req.command + "'");
    }
    return {out.second, render(out.first, req.format)};
  } catch (const Error& e) {
    return error_result(e.code(), e.what());
  } catch (const std::exception& e) {
    json err{{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    return {1, err.dump(2) + "\n"};
  }
}

RunResult reproduce_examples(const std::string& format, std::optional<double> tolerance) {
  RunRequest req;
  req.command = "reproduce";
  req.format = format;
  req.tolerance = tolerance;
  return run(req);
}

}  // namespace resistnet
