#pragma once

#include <string>
#include <string_view>

#include "resistnet/network.hpp"

namespace resistnet {

/// {"nodes": <int>, "edges": [[i, j, "p/q" | number], ...]}
/// Integer JSON numbers and "p/q" strings are exact; floating JSON numbers
/// are taken at their exact binary value.
Network parse_network_json(std::string_view text);

/// One `i j r` triple per line; `#` starts a comment. The node count is the
/// largest index plus one.
Network parse_network_text(std::string_view text);

/// Picks the JSON reader when the first non-blank character is '{'.
Network parse_network(std::string_view text);
Network load_network(const std::string& path);

/// JSON form with every resistance written as an exact "p/q" (or "p") string.
std::string to_json(const Network& net);

}  // namespace resistnet
