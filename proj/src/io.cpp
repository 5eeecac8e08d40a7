#include "resistnet/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "resistnet/error.hpp"

namespace resistnet {

namespace {

using nlohmann::json;

std::size_t as_index(const json& value, const char* what) {
  if (value.is_number_unsigned()) return value.get<std::size_t>();
  if (value.is_number_integer()) {
    const auto v = value.get<long long>();
    if (v < 0) throw Error(Errc::IndexOutOfRange, std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
  }
  throw Error(Errc::ParseError, std::string(what) + " must be an integer");
}

Rational as_resistance(const json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_unsigned()) return Rational(mpz_class(std::to_string(value.get<unsigned long long>())), 1);
  if (value.is_number_integer()) return Rational(mpz_class(std::to_string(value.get<long long>())), 1);
  if (value.is_number_float()) return Rational::from_double(value.get<double>());
  throw Error(Errc::ParseError, "resistance must be a number or a \"p/q\" string");
}

}  // namespace

Network parse_network_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(Errc::ParseError, "network JSON needs \"nodes\" and an \"edges\" array");
  }
  const std::size_t n = as_index(doc["nodes"], "nodes");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3) throw Error(Errc::ParseError, "each edge must be [i, j, r]");
    edges.push_back({as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"), as_resistance(e[2])});
  }
  return Network(n, std::move(edges));
}

Network parse_network_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, r, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b >> r) || (fields >> extra)) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected `i j r`");
    }
    const Rational ia = Rational::parse(a), ib = Rational::parse(b);
    if (ia.denominator() != 1 || ib.denominator() != 1) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": node indices must be integers");
    }
    if (ia.sign() < 0 || ib.sign() < 0) {
      throw Error(Errc::IndexOutOfRange, "line " + std::to_string(line_no) + ": negative node index");
    }
    const auto i = static_cast<std::size_t>(ia.numerator().get_ui());
    const auto j = static_cast<std::size_t>(ib.numerator().get_ui());
    edges.push_back({i, j, Rational::parse(r)});
    n = std::max({n, i + 1, j + 1});
  }
  if (n == 0) throw Error(Errc::ParseError, "network text has no edges");
  return Network(n, std::move(edges));
}

Network parse_network(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_network_json(text) : parse_network_text(text);
  }
  throw Error(Errc::ParseError, "empty network description");
}

Network load_network(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_network(buffer.str());
}

std::string to_json(const Network& net) {
  json doc;
  doc["nodes"] = net.n_nodes();
  doc["edges"] = json::array();
  for (const auto& e : net.edges()) doc["edges"].push_back(json::array({e.i, e.j, e.resistance.str()}));
  return doc.dump();
}

}  // namespace resistnet
