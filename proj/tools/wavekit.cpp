#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavekit/depth.hpp"
#include "wavekit/error.hpp"
#include "wavekit/recognition.hpp"
#include "wavekit/reduction.hpp"
#include "wavekit/waves.hpp"

using json = nlohmann::ordered_json;
using namespace wavekit;

namespace {

struct Options {
  bool json = false;
  bool raw = false;
  bool verbose = false;
  bool trace = false;
  bool vertical = false;
  bool dot = false;
  bool tsv = false;
  int jobs = 1;
  std::string word;
  std::string path;
  std::vector<std::string> words;
};

std::string show(const CyclicWord& w, const Options& o) {
  return to_string(o.raw ? w : canonical_form(w));
}

std::string trace_text(const Trace& t) {
  if (t.empty()) return "(none)";
  std::string s;
  for (const auto& m : t) s += (s.empty() ? "" : " ") + to_string(m);
  return s;
}

json trace_json(const Trace& t) {
  json a = json::array();
  for (const auto& m : t) a.push_back(to_string(m));
  return a;
}

CyclicWord input_word(const std::string& text) {
  CyclicWord w = reduce(parse_word(text));
  if (w.empty()) throw Error("InputInvalid", text + " reduces to the trivial word");
  return w;
}

bool in_family(Verdict v) {
  return v == Verdict::S3 || v == Verdict::S1xS2 || v == Verdict::S1xS2_connect_sum_Lp;
}

std::string primitivity_text(const PrimitivityClass& p) {
  switch (p.kind) {
    case PrimitivityKind::Primitive: return "primitive";
    case PrimitivityKind::ProperPower:
      return "proper power " + to_string(p.power->root) + "^" + std::to_string(p.power->exponent);
    case PrimitivityKind::Neither: break;
  }
  return "neither";
}

// Runs f, turning a domain error into "error Code: detail" text.
template <class F>
json guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return {{"error", e.code()}, {"detail", e.detail()}};
  }
}

int cmd_analyze(const Options& o) {
  const CyclicWord w = input_word(o.word);
  json j;
  j["command"] = "analyze";
  j["word"] = show(w, o);
  j["length"] = w.size();
  const AbelianImage ab = abelianize(w);
  j["abelian"] = {ab.a, ab.b};
  j["primitivity"] = primitivity_text(is_primitive_or_proper_power(w));
  j["realizable"] = is_realizable(w);

  const MinimizeResult mr = whitehead_minimize(w);
  j["minimal"] = show(mr.minimal, o);
  j["minimal_length"] = mr.minimal.size();
  j["minimal_trace"] = trace_json(mr.trace);
  const DiagramGraph g = graph_of_words({mr.minimal});
  j["form"] = form_name(g.form);
  j["graph"] = {{"a", g.a()}, {"b", g.b()}, {"c", g.c()}, {"d", g.d()}};
  j["eligible"] = is_eligible(g);
  j["positive"] = guarded([&] { return json(is_positive_curve(w)); });
  j["meridians"] = guarded([&] {
    MeridianPair mp = distinguished_meridian_pair(w);
    return json{{"m1", show(mp.m1, o)},
                {"m2", show(mp.m2, o)},
                {"h1_m1", homology_of_filling(w, mp.m1).str()},
                {"h1_m2", homology_of_filling(w, mp.m2).str()},
                {"wave", kind_name(mp.wave.kind)}};
  });
  j["family"] = guarded([&] { return json(embeds_in_family(w).describe()); });
  j["tunnel_11"] = guarded([&] { return json(is_11_tunnel(w)); });
  j["depth"] = guarded([&] { return json(depth(w).depth); });

  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "command") continue;
    std::string v;
    if (it->is_object() && it->contains("error")) {
      const std::string detail = (*it)["detail"].get<std::string>();
      v = "error " + (*it)["error"].get<std::string>() + (detail.empty() ? "" : ": " + detail);
    } else if (it.key() == "meridians") {
      const json& m = *it;
      v = m["m1"].get<std::string>() + " " + m["m2"].get<std::string>() + "; H1 " + m["h1_m1"].get<std::string>() +
          ", " + m["h1_m2"].get<std::string>() + "; wave " + m["wave"].get<std::string>();
    } else if (it->is_string()) v = it->get<std::string>();
    else if (it.key() == "abelian") v = "(" + std::to_string((*it)[0].get<long>()) + ", " + std::to_string((*it)[1].get<long>()) + ")";
    else if (it.key() == "graph") v = "a=" + std::to_string((*it)["a"].get<int>()) + " b=" + std::to_string((*it)["b"].get<int>()) + " c=" + std::to_string((*it)["c"].get<int>()) + " d=" + std::to_string((*it)["d"].get<int>());
    else if (it.key() == "minimal_trace") v = trace_text(mr.trace);
    else if (it->is_boolean()) v = it->get<bool>() ? "yes" : "no";
    else v = it->dump();
    std::printf("%-15s %s\n", it.key().c_str(), v.c_str());
  }
  return 0;
}

int cmd_meridians(const Options& o) {
  const CyclicWord w = input_word(o.word);
  const MeridianPair mp = o.vertical ? vertical_slope_pair(w) : distinguished_meridian_pair(w);
  CyclicWord m1 = mp.m1, m2 = mp.m2;
  if (o.raw) m1 = mp.pair_diagram.curves[0], m2 = mp.pair_diagram.curves[1];
  const FillingHomology h1 = homology_of_filling(w, mp.m1), h2 = homology_of_filling(w, mp.m2);
  if (o.json) {
    json j;
    j["command"] = "meridians";
    j["slope"] = o.vertical ? "vertical" : "distinguished";
    j["m1"] = show(m1, o);
    j["m2"] = show(m2, o);
    j["h1_m1"] = h1.str();
    j["h1_m2"] = h2.str();
    j["base"] = show(mp.base, o);
    j["working"] = to_string(mp.working);
    j["trace"] = trace_json(mp.trace);
    j["wave"] = kind_name(mp.wave.kind);
    j["wave_face"] = mp.wave.face;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << show(m1, o) << " " << show(m2, o) << "\n";
  std::cout << "H1(R, m1) = " << h1.str() << "\n";
  std::cout << "H1(R, m2) = " << h2.str() << "\n";
  std::cout << "base      " << show(mp.base, o) << "\n";
  std::cout << "working   " << to_string(mp.working) << "\n";
  std::cout << "trace     " << trace_text(mp.trace) << "\n";
  std::cout << "wave      " << kind_name(mp.wave.kind) << " (face " << mp.wave.face << ")\n";
  return 0;
}

int cmd_recognize(const Options& o) {
  RecognitionResult r;
  if (!o.words.empty()) {
    if (o.words.size() != 2) throw Error("InputInvalid", "--words takes exactly two words");
    r = recognize_words(input_word(o.words[0]), input_word(o.words[1]));
  } else {
    if (o.path.empty()) throw Error("InputInvalid", "give a diagram file or --words W1 W2");
    r = recognize_closed(load_diagram(o.path));
  }
  if (o.json) {
    json j;
    j["command"] = "recognize";
    j["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::S1xS2_connect_sum_Lp) j["p"] = r.p;
    j["reason"] = r.reason;
    if (o.trace) {
      json t = json::array();
      for (const auto& [x, y] : r.trace) t.push_back({show(x, o), show(y, o)});
      j["trace"] = t;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << r.describe() << "\n";
  if (o.trace)
    for (std::size_t i = 0; i < r.trace.size(); ++i)
      std::cout << "  " << i << ": " << show(r.trace[i].first, o) << " " << show(r.trace[i].second, o) << "\n";
  return 0;
}

int cmd_depth(const Options& o) {
  const DepthResult d = depth(input_word(o.word));
  if (o.json) {
    json j;
    j["command"] = "depth";
    j["depth"] = d.depth;
    json p = json::array();
    for (const auto& w : d.path) p.push_back(show(w, o));
    j["path"] = p;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "depth " << d.depth << "\npath ";
  for (std::size_t i = 0; i < d.path.size(); ++i) std::cout << (i ? " → " : "") << show(d.path[i], o);
  std::cout << "\n";
  return 0;
}

int cmd_graph(const Options& o) {
  const UnknottingGraph g = build_unknotting_graph(input_word(o.word));
  if (o.dot) {
    std::cout << to_dot(g);
    return 0;
  }
  const std::vector<int> L = min_path_lengths(g), Lx = min_path_lengths(g, true);
  const int depth_value = int(g.path.size()) - 1;
  if (o.json) {
    json j;
    j["command"] = "graph";
    json vs = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& x = g.vertices[v];
      vs.push_back({{"id", v}, {"word", show(x.word, o)}, {"terminal", x.terminal}, {"in_gstar", x.in_gstar},
                    {"on_path", x.on_path}, {"L", L[v]}});
    }
    json es = json::array();
    for (const auto& e : g.edges)
      es.push_back({{"from", e.from}, {"to", e.to},
                    {"kind", e.kind == EdgeKind::CrossLink ? "cross" : "child"}, {"in_gstar", e.in_gstar}});
    j["vertices"] = vs;
    j["edges"] = es;
    j["path"] = g.path;
    j["depth"] = depth_value;
    j["min_terminal_L"] = min_terminal_length(g, L);
    j["min_terminal_L_with_cross_links"] = min_terminal_length(g, Lx);
    j["sibling_lemma_failures"] = sibling_lemma_failures(g, L);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& x = g.vertices[v];
    std::cout << "v" << v << " " << show(x.word, o) << " L=" << L[v] << (x.terminal ? " terminal" : "")
              << (x.on_path ? " path" : x.in_gstar ? " gstar" : "") << "\n";
  }
  for (const auto& e : g.edges)
    std::cout << "v" << e.from << " -> v" << e.to << (e.kind == EdgeKind::CrossLink ? " cross" : "") << "\n";
  std::cout << "depth " << depth_value << "\n";
  std::cout << "min terminal L " << min_terminal_length(g, L) << " (with cross-links "
            << min_terminal_length(g, Lx) << ")\n";
  return 0;
}

// Survey ------------------------------------------------------------------

struct SurveyRow {
  std::string input;
  std::string min_length, positive, m1, m2, h1_m1, h1_m2, m1_primitive, m2_primitive;
  std::string verdict, depth = "n/a", error;
};

const char* kColumns[] = {"word", "min_length", "positive", "m1", "m2", "h1_m1", "h1_m2",
                          "m1_primitive", "m2_primitive", "verdict", "depth", "error"};

SurveyRow survey_row(const std::string& text, const Options& o) {
  SurveyRow r;
  r.input = text;
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  try {
    const CyclicWord w = input_word(text);
    r.min_length = std::to_string(whitehead_minimize(w).minimal.size());
    r.positive = yes(is_positive_curve(w));
    const FamilyResult f = embeds_in_family(w);
    const MeridianPair& mp = f.pair;
    r.m1 = show(mp.m1, o);
    r.m2 = show(mp.m2, o);
    r.h1_m1 = homology_of_filling(w, mp.m1).str();
    r.h1_m2 = homology_of_filling(w, mp.m2).str();
    r.m1_primitive = yes(cmz_is_primitive(mp.m1));
    r.m2_primitive = yes(cmz_is_primitive(mp.m2));
    if (in_family(f.verdict)) r.depth = std::to_string(depth(w).depth);
    r.verdict = f.describe();
  } catch (const Error& e) {
    r.verdict.clear();
    r.depth = "n/a";
    r.error = e.what();
  } catch (const InternalError& e) {
    r.verdict.clear();
    r.depth = "n/a";
    r.error = std::string("InternalError: ") + e.what();
  }
  return r;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error("FormatError", "cannot open " + path);
    in = &file;
  }
  std::vector<std::string> out;
  std::string line;
  while (std::getline(*in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t s = 0;
    while (s < line.size() && std::isspace(static_cast<unsigned char>(line[s]))) ++s;
    line.erase(0, s);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

int cmd_survey(const Options& o) {
  const std::vector<std::string> lines = read_lines(o.path);
  std::vector<SurveyRow> rows(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) {
      const auto t0 = std::chrono::steady_clock::now();
      rows[i] = survey_row(lines[i], o);
      if (o.verbose) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream msg;
        msg << "row " << i << " " << lines[i] << " " << ms << " ms\n";
        std::cerr << msg.str();
      }
    }
  };
  const int n = std::max(1, std::min<int>(o.jobs, int(lines.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto fields = [](const SurveyRow& r) {
    return std::array<std::string, 12>{r.input, r.min_length, r.positive, r.m1, r.m2, r.h1_m1, r.h1_m2,
                                       r.m1_primitive, r.m2_primitive, r.verdict, r.depth, r.error};
  };
  if (o.json) {
    json j;
    j["command"] = "survey";
    json a = json::array();
    for (const auto& r : rows) {
      json x;
      const auto f = fields(r);
      for (std::size_t k = 0; k < f.size(); ++k) x[kColumns[k]] = f[k];
      a.push_back(x);
    }
    j["rows"] = a;
    std::cout << j.dump(2) << "\n";
  } else if (o.tsv) {
    for (std::size_t k = 0; k < 12; ++k) std::cout << (k ? "\t" : "") << kColumns[k];
    std::cout << "\n";
    for (const auto& r : rows) {
      const auto f = fields(r);
      for (std::size_t k = 0; k < f.size(); ++k) std::cout << (k ? "\t" : "") << f[k];
      std::cout << "\n";
    }
  } else {
    for (const auto& r : rows) {
      if (!r.error.empty()) {
        std::cout << r.input << ": error " << r.error << "\n";
        continue;
      }
      std::cout << r.input << ": " << r.verdict << "; meridians " << r.m1 << " " << r.m2 << " (H1 " << r.h1_m1
                << ", " << r.h1_m2 << "); depth " << r.depth << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waves, meridian pairs and tunnel depth for genus-two handlebody curves", "wavekit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;
  app.add_flag("--json", o.json, "Structured JSON output");
  app.add_flag("--raw", o.raw, "Print words as computed instead of in canonical form");
  app.add_flag("--verbose", o.verbose, "Diagnostics on stderr");
  app.fallthrough();

  auto* analyze = app.add_subcommand("analyze", "Everything known about one curve");
  analyze->add_option("word", o.word, "Word over A a B b")->required();

  auto* meridians = app.add_subcommand("meridians", "Distinguished meridian pair with provenance");
  meridians->add_option("word", o.word, "Word over A a B b")->required();
  meridians->add_flag("--vertical", o.vertical, "Surgery along the vertical wave instead");

  auto* recognize = app.add_subcommand("recognize", "Recognize a two-curve genus-two diagram");
  recognize->add_option("file", o.path, "Diagram file (g2diagram format)");
  recognize->add_option("--words", o.words, "Two curve words, embedded by search")->expected(2);
  recognize->add_flag("--trace", o.trace, "Print the pairs visited");

  auto* depth_cmd = app.add_subcommand("depth", "Tunnel depth and unknotting path");
  depth_cmd->add_option("word", o.word, "Word over A a B b")->required();

  auto* graph = app.add_subcommand("graph", "Unknotting graph G with G* marked");
  graph->add_option("word", o.word, "Word over A a B b")->required();
  graph->add_flag("--dot", o.dot, "Emit a DOT digraph");

  auto* survey = app.add_subcommand("survey", "One row per word of a newline-delimited file");
  survey->add_option("file", o.path, "Word list, '-' for stdin")->required();
  survey->add_flag("--tsv", o.tsv, "Tab-separated output with a header row");
  survey->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (*analyze) status = cmd_analyze(o);
    else if (*meridians) status = cmd_meridians(o);
    else if (*recognize) status = cmd_recognize(o);
    else if (*depth_cmd) status = cmd_depth(o);
    else if (*graph) status = cmd_graph(o);
    else if (*survey) status = cmd_survey(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = 1;
  } catch (const InternalError& e) {
    std::cerr << "error: InternalError: " << e.what() << "\n";
    status = 1;
  }
  if (o.verbose) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "elapsed " << ms << " ms\n";
  }
  return status;
}
