#include "oneone/io.hpp"

#include <fstream>
#include <sstream>

namespace oneone {

namespace {

Rational rational_field(const Json& j, const char* where) {
  if (!j.is_string()) throw MalformedInput(std::string(where) + ": expected a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string(where) + ": " + e.what());
  }
}

Point point_field(const Json& j, const char* where) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput(std::string(where) + ": expected [x, y]");
  return {rational_field(j[0], where), rational_field(j[1], where)};
}

long integer_field(const Json& j, const char* where) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(where) + ": expected an integer");
  return j.get<long>();
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

}  // namespace

Diagram diagram_from_json(const Json& doc) {
  if (!doc.is_object()) throw MalformedInput("diagram: expected a JSON object");
  for (const char* key : {"beta", "offset", "w"}) {
    if (!doc.contains(key)) throw MalformedInput(std::string("diagram: missing \"") + key + "\"");
  }
  for (const auto& item : doc.items()) {
    if (item.key() != "beta" && item.key() != "offset" && item.key() != "w") {
      throw MalformedInput("diagram: unknown key \"" + item.key() + "\"");
    }
  }
  DiagramData data;
  const auto& beta = doc["beta"];
  if (!beta.is_array() || beta.empty()) throw MalformedInput("beta: expected a non-empty array");
  for (const auto& v : beta) data.beta.push_back(point_field(v, "beta"));
  const auto& off = doc["offset"];
  if (!off.is_array() || off.size() != 2) throw MalformedInput("offset: expected [a, b]");
  data.offset = {integer_field(off[0], "offset"), integer_field(off[1], "offset")};
  data.w = point_field(doc["w"], "w");
  return Diagram::validate(std::move(data));
}

Diagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return diagram_from_json(doc);
}

Json diagram_to_json(const Diagram& d) {
  Json beta = Json::array();
  for (const auto& v : d.beta()) beta.push_back(point_json(v));
  Json out;
  out["beta"] = std::move(beta);
  out["offset"] = Json::array({d.offset().x, d.offset().y});
  out["w"] = point_json(d.w());
  return out;
}

std::string diagram_to_string(const Diagram& d) { return diagram_to_json(d).dump() + "\n"; }

Json polynomial_to_json(const LaurentPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c.fits_slong_p()) out[std::to_string(e)] = c.get_si();
    else out[std::to_string(e)] = c.get_str();
  }
  return out;
}

Json summand_to_json(const ChainSummand& c) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    const auto& g = c.generators[i];
    gens.push_back({{"alpha_position", to_string(g.alpha_position)},
                    {"beta_parameter", to_string(g.beta_parameter)},
                    {"sign", g.sign},
                    {"alexander", c.rel_alexander[i]}});
  }
  auto edges = [](const std::vector<std::pair<std::size_t, std::size_t>>& es) {
    Json arr = Json::array();
    for (const auto& [s, t] : es) arr.push_back(Json::array({s, t}));
    return arr;
  };
  Json out;
  out["class"] = c.class_id;
  out["size"] = c.generators.size();
  out["generators"] = std::move(gens);
  out["v_edges"] = edges(c.v_edges);
  out["h_edges"] = edges(c.h_edges);
  return out;
}

}  // namespace oneone
