// oneone: command-line front end.
//
// Exit status: 0 on success, 1 for invalid input or arguments, 2 when an internal invariant
// fails. With --format json every command writes exactly one JSON document to stdout.

#include "oneone/braid.hpp"
#include "oneone/diagram.hpp"
#include "oneone/floer.hpp"
#include "oneone/io.hpp"
#include "oneone/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace oneone;

namespace {

struct Options {
  std::string format = "text";
  std::string path;
  std::string out;
  bool alexander = false;
  long omega = 0, b = 0, m = 0;
  std::string filling;
  long max_winding = 0;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw MalformedInput("cannot open " + path + " for writing");
  f << contents;
  if (!f) throw MalformedInput("failed writing " + path);
}

Json slope_json(const ProjectiveSlope& s) { return to_string(s); }

Json interval_json(const CyclicInterval& i) {
  if (i.is_full_circle_minus()) return Json{{"all_but", to_string(i.start())}};
  return Json::array({to_string(i.start()), to_string(i.end())});
}

std::string interval_text(const CyclicInterval& i) {
  if (i.is_full_circle_minus()) return "P1 minus {" + to_string(i.start()) + "}";
  return "[" + to_string(i.start()) + ", " + to_string(i.end()) + "]";
}

int cmd_check(const Options& o) {
  Diagram d = read_diagram_file(o.path);
  const bool was_reduced = is_reduced(d);
  if (!was_reduced) {
    std::cerr << "diagram has empty bigons; reducing before the check\n";
    d = reduce(d);
  }
  const auto coh = coherence(d);
  const auto verdict = lspace_verdict(d);
  Json classes = Json::array();
  for (long c = 0; c < d.num_classes(); ++c) {
    classes.push_back({{"class", c},
                       {"size", class_intersections(d, c).size()},
                       {"graphic_sign", to_string(graphic_sign(d, c))}});
  }
  if (json_mode(o)) {
    emit({{"reduced", was_reduced},
          {"reduced_before_check", !was_reduced},
          {"coherence", to_string(coh)},
          {"lspace", to_string(verdict)},
          {"classes", classes}});
  } else {
    std::cout << "reduced: " << (was_reduced ? "yes" : "no (reduced before the check)") << "\n"
              << "coherence: " << to_string(coh) << "\n"
              << "lspace: " << to_string(verdict) << "\n";
    for (const auto& c : classes) {
      std::cout << "class " << c["class"].get<long>() << ": " << c["size"].get<std::size_t>()
                << " generators, graphic sign " << c["graphic_sign"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_hfk(const Options& o) {
  Diagram d = read_diagram_file(o.path);
  std::optional<LaurentPolynomial> delta;
  if (o.alexander) delta = alexander_polynomial(d);  // refuses non-S3 diagrams before any output
  Json summands = Json::array();
  for (long c = 0; c < d.num_classes(); ++c) summands.push_back(summand_to_json(chain_summand(d, c)));
  if (json_mode(o)) {
    Json doc{{"classes", summands}};
    if (delta) {
      doc["alexander"] = delta->to_string();
      doc["alexander_terms"] = polynomial_to_json(*delta);
    }
    emit(doc);
    return 0;
  }
  for (const auto& s : summands) {
    std::cout << "class " << s["class"].get<long>() << ": " << s["generators"].size() << " generators, "
              << s["v_edges"].size() << " v-edges, " << s["h_edges"].size() << " h-edges\n";
    std::cout << "  alexander gradings:";
    for (const auto& g : s["generators"]) std::cout << " " << g["alexander"].get<long>();
    std::cout << "\n";
    for (const char* kind : {"v_edges", "h_edges"}) {
      for (const auto& e : s[kind]) {
        std::cout << "  " << (kind[0] == 'v' ? "v" : "h") << ": " << e[0].get<long>() << " -> " << e[1].get<long>()
                  << "\n";
      }
    }
  }
  if (delta) std::cout << "alexander: " << delta->to_string() << "\n";
  return 0;
}

ProjectiveSlope required_filling(const Options& o) {
  if (o.filling.empty()) throw MalformedInput("--filling is required");
  try {
    return ProjectiveSlope::parse(o.filling);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string("bad --filling: ") + e.what());
  }
}

int cmd_braid_interval(const Options& o) {
  BridgeBraid k = braid_validate(o.omega, o.b, o.m);
  const auto interval = slope_interval(k);
  const auto cls = classify_type(k);
  if (json_mode(o)) {
    emit({{"braid", to_string(k)}, {"interval", interval_json(interval)}, {"class", to_string(cls)}});
  } else {
    std::cout << to_string(k) << "\n"
              << "interval: " << interval_text(interval) << "\n"
              << "class: " << to_string(cls) << "\n";
  }
  return 0;
}

int cmd_braid_classify(const Options& o) {
  BridgeBraid k = braid_validate(o.omega, o.b, o.m);
  const auto filling = required_filling(o);
  const auto v = classify_inclusion(k, filling);
  const Diagram d = inclusion_diagram(k, filling);
  const auto verdict = lspace_verdict(d);
  if (json_mode(o)) {
    emit({{"braid", to_string(k)},
          {"filling", to_string(filling)},
          {"positive", v.positive},
          {"negative", v.negative},
          {"simple", v.simple},
          {"diagram_coherence", to_string(coherence(d))},
          {"diagram_lspace", to_string(verdict)}});
  } else {
    std::cout << to_string(k) << " in filling " << to_string(filling) << "\n"
              << "positive: " << std::boolalpha << v.positive << "\n"
              << "negative: " << v.negative << "\n"
              << "simple: " << v.simple << "\n"
              << "diagram: " << to_string(coherence(d)) << ", " << to_string(verdict) << "\n";
  }
  return 0;
}

int cmd_braid_diagram(const Options& o) {
  BridgeBraid k = braid_validate(o.omega, o.b, o.m);
  const auto filling = required_filling(o);
  const Diagram d = inclusion_diagram(k, filling);
  const std::string text = diagram_to_string(d);
  if (!o.out.empty()) write_file(o.out, text);
  if (json_mode(o)) {
    Json doc{{"braid", to_string(k)}, {"filling", to_string(filling)}, {"intersections", intersections(d).size()}};
    if (o.out.empty()) doc["diagram"] = diagram_to_json(d);
    else doc["written"] = o.out;
    emit(doc);
  } else if (o.out.empty()) {
    std::cout << text;
  } else {
    std::cout << "wrote " << o.out << " (" << intersections(d).size() << " intersections)\n";
  }
  return 0;
}

Json entry_json(const SearchEntry& e) {
  Json fillings = Json::array();
  for (const auto& f : e.fillings) fillings.push_back(slope_json(f));
  return {{"omega", e.braid.omega},
          {"b", e.braid.b},
          {"m", e.braid.m},
          {"interval", interval_json(e.interval)},
          {"fillings", fillings}};
}

int cmd_search(const Options& o) {
  if (o.max_winding < 2) throw MalformedInput("--max-winding must be at least 2");
  const auto report = berge_search(o.max_winding);
  Json stats{{"triples_examined", report.triples_examined},
             {"rejected_not_knot", report.rejected_not_knot},
             {"rejected_degenerate", report.rejected_degenerate},
             {"non_strict", report.non_strict},
             {"duplicates", report.duplicates},
             {"three_or_more", report.three_or_more.size()},
             {"two_or_more", report.two_or_more.size()}};
  if (json_mode(o)) {
    Json three = Json::array(), two = Json::array();
    for (const auto& e : report.three_or_more) three.push_back(entry_json(e));
    for (const auto& e : report.two_or_more) two.push_back(entry_json(e));
    emit({{"three_or_more", three}, {"two_or_more", two}, {"stats", stats}});
  } else {
    // One JSON line per braid with three or more fillings; totals go to stderr.
    for (const auto& e : report.three_or_more) std::cout << entry_json(e).dump() << "\n";
    std::cerr << stats.dump() << "\n";
  }
  return 0;
}

int cmd_render(const Options& o) {
  const Diagram d = read_diagram_file(o.path);
  const std::string svg = render_svg(d);
  if (o.out.empty()) {
    std::cout << svg;
    return 0;
  }
  write_file(o.out, svg);
  if (json_mode(o)) emit({{"written", o.out}});
  else std::cout << "wrote " << o.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-1 doubly pointed Heegaard diagrams and 1-bridge braids"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Reducedness, coherence and L-space verdict of a diagram");
  check->add_option("path", o.path, "Diagram file")->required();

  auto* hfk = app.add_subcommand("hfk", "Knot Floer chain data of a diagram");
  hfk->add_option("path", o.path, "Diagram file")->required();
  hfk->add_flag("--alexander", o.alexander, "Also print the Alexander polynomial (S^3 only)");

  auto* braid = app.add_subcommand("braid", "1-bridge braids K(omega, b, m)");
  braid->require_subcommand(1);
  auto add_braid_args = [&](CLI::App* sub) {
    sub->add_option("omega", o.omega)->required();
    sub->add_option("b", o.b)->required();
    sub->add_option("m", o.m)->required();
  };
  auto* interval = braid->add_subcommand("interval", "Slope interval and type");
  add_braid_args(interval);
  auto* classify = braid->add_subcommand("classify", "Sign and simplicity of the braid in a filling");
  add_braid_args(classify);
  classify->add_option("--filling", o.filling, "Filling slope p/q or inf")->required();
  auto* diagram = braid->add_subcommand("diagram", "Reduced diagram of the braid in a filling");
  add_braid_args(diagram);
  diagram->add_option("--filling", o.filling, "Filling slope p/q or inf")->required();
  diagram->add_option("-o", o.out, "Output file");

  auto* search = app.add_subcommand("search", "Strict braids with several solid torus fillings");
  search->add_option("--max-winding", o.max_winding, "Largest winding number")->required();

  auto* render = app.add_subcommand("render", "SVG picture of a diagram");
  render->add_option("path", o.path, "Diagram file")->required();
  render->add_option("-o", o.out, "Output file");

  // Allow --format after the subcommand as well.
  for (auto* sub : {check, hfk, interval, classify, diagram, search, render}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (hfk->parsed()) return cmd_hfk(o);
    if (interval->parsed()) return cmd_braid_interval(o);
    if (classify->parsed()) return cmd_braid_classify(o);
    if (diagram->parsed()) return cmd_braid_diagram(o);
    if (search->parsed()) return cmd_search(o);
    if (render->parsed()) return cmd_render(o);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // MalformedInput, DiagramError, BraidError, NotAnS3Diagram
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
