// arcbrick command-line tool.
//
// Exit codes: 0 ok, 1 failed check or internal inconsistency, 2 usage or
// malformed input, 3 precondition violated, 4 cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "arcbrick/arc.hpp"
#include "arcbrick/errors.hpp"
#include "arcbrick/io.hpp"
#include "arcbrick/mutation.hpp"
#include "arcbrick/quotients.hpp"
#include "arcbrick/render.hpp"
#include "arcbrick/string_hom.hpp"
#include "arcbrick/verify.hpp"

using namespace arcbrick;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kPrecondition = 3, kCap = 4 };

struct Options {
  int n = 0;
  std::string perm;
  int i = 0;
  std::string dir;
  std::string family = "nad";
  std::string ideal;
  std::string format;
  std::map<std::string, std::string> formats;  // per subcommand
  std::string suite = "all";
  int max_n = 3;
  std::string out;
};

Permutation read_perm(const Options& o) {
  const Permutation w = Permutation::parse(o.perm);
  if (w.rank() != o.n) {
    throw ParseError("permutation " + o.perm + " has length " + std::to_string(w.size()) + ", expected " +
                     std::to_string(o.n + 1));
  }
  return w;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* f : allowed)
    if (format == f) return;
  throw ParseError(std::string("format '") + format + "' is not available for " + command);
}

std::string diagram_text(const ColoredDiagram& d) {
  std::ostringstream out;
  out << "perm " << underlying_permutation(d).to_string() << "\n";
  for (int p = 1; p <= d.rank(); ++p) {
    const auto& e = d.at(p);
    out << p << " " << e.arc.to_string() << " " << to_string(e.color) << "\n";
  }
  return out.str();
}

std::string cmd_map(const Options& o) {
  const Permutation w = read_perm(o);
  const ColoredDiagram d = double_diagram(w);
  if (o.format == "json") {
    Json j = to_json(d);
    Json modules = Json::array();
    const Json members = collection_json(d)["members"];
    for (const auto& member : members) {
      Json m;
      m["position"] = member["position"];
      m["shift"] = member["shift"];
      m["sequence"] = member["sequence"];
      m["dims"] = member["dims"];
      m["arrows"] = member["arrows"];
      modules.push_back(std::move(m));
    }
    j["modules"] = std::move(modules);
    return j.dump() + "\n";
  }
  if (o.format == "svg") return render_svg(d);
  if (o.format == "tikz") return render_tikz(d);
  require_format(o.format, {"text"}, "map");
  std::ostringstream out;
  out << "perm " << w.to_string() << "\n";
  for (int p = 1; p <= w.rank(); ++p) {
    const auto& e = d.at(p);
    const auto m = arc_module(e.arc, w.rank());
    out << p << " " << e.arc.to_string() << " " << to_string(e.color) << " shift "
        << (e.color == Color::Green ? 0 : 1) << " seq " << arrow_sequence(e.arc).to_string() << " dims [";
    for (std::size_t k = 0; k < m.dims().size(); ++k) out << (k ? "," : "") << m.dims().entries()[k];
    out << "]\n";
  }
  return out.str();
}

std::string cmd_mutate(const Options& o) {
  const Permutation w = read_perm(o);
  if (o.i < 1 || o.i > o.n) throw PreconditionError("--i must lie in 1.." + std::to_string(o.n));
  std::optional<MutationDirection> dir;
  if (o.dir == "left") dir = MutationDirection::Left;
  if (o.dir == "right") dir = MutationDirection::Right;
  const ColoredDiagram mutated = mutate_dad(double_diagram(w), o.i, dir);
  const Permutation target = left_multiply_simple(o.i, w);
  if (mutated != double_diagram(target)) {
    throw InconsistencyError("mutation at " + std::to_string(o.i) + " disagrees with D(s_i w) for " +
                             w.to_string());
  }
  if (o.format == "json") {
    Json j = to_json(mutated);
    j["from"] = w.to_string();
    j["position"] = o.i;
    return j.dump() + "\n";
  }
  if (o.format == "svg") return render_svg(mutated);
  if (o.format == "tikz") return render_tikz(mutated);
  require_format(o.format, {"text"}, "mutate");
  return diagram_text(mutated);
}

std::string cmd_hasse(const Options& o) {
  if (o.n < 1) throw ParseError("--n must be >= 1");
  if (o.n > kMaxHasseRank) throw CapExceeded("hasse capped at n=" + std::to_string(kMaxHasseRank));
  const MutationGraph g = hasse(o.n);
  if (o.format == "dot") return to_dot(g);
  if (o.format == "json") {
    Json j;
    j["n"] = g.n;
    j["vertices"] = Json::array();
    for (const auto& w : g.labels) j["vertices"].push_back(w.to_string());
    j["edges"] = Json::array();
    for (const auto& e : g.edges) {
      Json edge;
      edge["from"] = g.labels[e.from].to_string();
      edge["to"] = g.labels[e.to].to_string();
      edge["position"] = e.position;
      j["edges"].push_back(std::move(edge));
    }
    return j.dump() + "\n";
  }
  require_format(o.format, {"text"}, "hasse");
  std::ostringstream out;
  out << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
  for (const auto& e : g.edges) {
    out << g.labels[e.from].to_string() << " -mu" << e.position << "-> " << g.labels[e.to].to_string() << "\n";
  }
  return out.str();
}

MonomialIdealSpec read_ideal(const std::string& text) {
  if (!text.empty() && text.front() != '[') {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot read ideal file " + text);
    std::stringstream buf;
    buf << in.rdbuf();
    return MonomialIdealSpec::from_json(buf.str());
  }
  return MonomialIdealSpec::from_json(text);
}

std::string cmd_count(const Options& o) {
  if (o.n < 1) throw ParseError("--n must be >= 1");
  const Family family = parse_family(o.family);
  std::optional<MonomialIdealSpec> ideal;
  if (family == Family::Custom) {
    if (o.ideal.empty()) throw ParseError("--family custom needs --ideal");
    ideal = read_ideal(o.ideal);
  } else if (!o.ideal.empty()) {
    throw ParseError("--ideal is only used with --family custom");
  }
  const std::uint64_t count = family_count(o.n, family, ideal);
  if (o.format == "json") {
    Json j;
    j["family"] = to_string(family);
    j["n"] = o.n;
    j["count"] = count;
    return j.dump() + "\n";
  }
  require_format(o.format, {"text"}, "count");
  std::ostringstream out;
  out << "family n count\n" << to_string(family) << " " << o.n << " " << count << "\n";
  return out.str();
}

std::string cmd_check(const Options& o, bool& all_passed) {
  const auto results = run_checks(o.suite, o.max_n);
  all_passed = true;
  for (const auto& r : results) all_passed &= r.passed;
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& r : results) {
      Json item;
      item["suite"] = r.suite;
      item["name"] = r.name;
      item["passed"] = r.passed;
      item["max_n"] = r.max_n;
      item["cases"] = r.cases;
      item["sampled"] = r.sampled;
      if (!r.passed) item["counterexample"] = r.counterexample;
      j.push_back(std::move(item));
    }
    return j.dump(2) + "\n";
  }
  require_format(o.format, {"text"}, "check");
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " n<=" << r.max_n << " cases=" << r.cases
        << (r.sampled ? " (sampled)" : "") << "\n";
    if (!r.passed) out << "  counterexample: " << r.counterexample << "\n";
  }
  return out.str();
}

std::string cmd_render(const Options& o) {
  const ColoredDiagram d = double_diagram(read_perm(o));
  if (o.format == "tikz") return render_tikz(d);
  require_format(o.format, {"svg"}, "render");
  return render_svg(d);
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kUsage;
  }
  file << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak order, arc diagrams and arc modules"};
  app.require_subcommand(1);
  Options o;

  const auto formats = CLI::IsMember({"json", "dot", "svg", "tikz", "text"});
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "rank n (points 1..n+1)")->required(); };
  auto add_perm = [&](CLI::App* sub) {
    sub->add_option("--perm", o.perm, "permutation in one-line notation")->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "write output to a file"); };

  auto* map = app.add_subcommand("map", "double arc diagram, arc modules and shifts of a permutation");
  add_n(map);
  add_perm(map);
  map->add_option("--format", o.formats["map"], "json, text, svg or tikz")->check(formats)->default_val("json");
  add_out(map);

  auto* mutate = app.add_subcommand("mutate", "mutate D(w) at position i");
  add_n(mutate);
  add_perm(mutate);
  mutate->add_option("--i", o.i, "pivot position")->required();
  mutate->add_option("--dir", o.dir, "left (green pivot) or right (red pivot)")
      ->check(CLI::IsMember({"left", "right"}));
  mutate->add_option("--format", o.formats["mutate"], "json, text, svg or tikz")->check(formats)->default_val("json");
  add_out(mutate);

  auto* hasse_cmd = app.add_subcommand("hasse", "mutation graph of all double arc diagrams");
  add_n(hasse_cmd);
  hasse_cmd->add_option("--format", o.formats["hasse"], "dot, json or text")->check(formats)->default_val("dot");
  add_out(hasse_cmd);

  auto* count = app.add_subcommand("count", "count diagrams in a family");
  add_n(count);
  count->add_option("--family", o.family, "nad, rnad, anad or custom")
      ->check(CLI::IsMember({"nad", "rnad", "anad", "custom"}));
  count->add_option("--ideal", o.ideal, "JSON list of path generators, or a file holding one");
  count->add_option("--format", o.formats["count"], "text or json")->check(formats)->default_val("text");
  add_out(count);

  auto* check = app.add_subcommand("check", "run verification suites");
  check->add_option("--suite", o.suite, "bijection, homs, mutation, order, quotients or all");
  check->add_option("--max-n", o.max_n, "largest rank to check");
  check->add_option("--format", o.formats["check"], "text or json")->check(formats)->default_val("text");
  add_out(check);

  auto* render = app.add_subcommand("render", "draw D(w)");
  add_n(render);
  add_perm(render);
  render->add_option("--format", o.formats["render"], "svg or tikz")->check(formats)->default_val("svg");
  add_out(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    std::string text;
    bool passed = true;
    for (const auto* sub : app.get_subcommands()) o.format = o.formats[sub->get_name()];
    if (*map) text = cmd_map(o);
    if (*mutate) text = cmd_mutate(o);
    if (*hasse_cmd) text = cmd_hasse(o);
    if (*count) text = cmd_count(o);
    if (*check) text = cmd_check(o, passed);
    if (*render) text = cmd_render(o);
    const int code = emit(o, text);
    if (code != kOk) return code;
    return passed ? kOk : kFailed;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
}
