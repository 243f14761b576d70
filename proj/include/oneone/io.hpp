#pragma once

// Canonical JSON encoding of diagrams and Floer data.
//
//   {"beta": [["x", "y"], ...], "offset": [a, b], "w": ["x", "y"]}
//
// Every rational is a string "num/den" in lowest terms. Parsing canonicalizes ("6/4" -> "3/2")
// and runs full validation.

#include "oneone/diagram.hpp"
#include "oneone/floer.hpp"

#include <json.hpp>

#include <string>

namespace oneone {

using Json = nlohmann::ordered_json;

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses and validates a diagram document. Throws MalformedInput for structural problems and
/// DiagramError for invariant violations.
Diagram diagram_from_json(const Json& doc);
Diagram read_diagram_file(const std::string& path);

Json diagram_to_json(const Diagram& d);
/// Compact single-line JSON followed by a newline.
std::string diagram_to_string(const Diagram& d);

/// {"exponent": coefficient} with string keys, in increasing exponent order.
Json polynomial_to_json(const LaurentPolynomial& p);

Json summand_to_json(const ChainSummand& c);

}  // namespace oneone
