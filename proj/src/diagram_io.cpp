#include <fstream>
#include <map>
#include <sstream>

#include "wavekit/error.hpp"
#include "wavekit/fatgraph.hpp"

namespace wavekit {

namespace {

[[noreturn]] void format_error(int line, const std::string& what) {
  throw Error("FormatError", "line " + std::to_string(line) + ": " + what);
}

int circle_from_name(const std::string& s) {
  for (int v = 0; v < 4; ++v)
    if (s == circle_name(v)) return v;
  return -1;
}

std::string curve_id(const EmbeddedDiagram& d, int c) {
  const std::string& l = d.curves[c].label();
  if (!l.empty() && l.find_first_of(" \t.#") == std::string::npos) return l;
  return std::to_string(c);
}

}  // namespace

EmbeddedDiagram parse_diagram(std::istream& in) {
  EmbeddedDiagram d;
  std::map<std::string, int> ids;
  std::array<bool, 4> have{};
  bool header = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    if (!header) {
      std::string version;
      if (key != "g2diagram" || !(ls >> version) || version != "1") format_error(lineno, "expected 'g2diagram 1'");
      header = true;
      continue;
    }
    if (key == "curve") {
      std::string id, text, extra;
      if (!(ls >> id >> text) || (ls >> extra)) format_error(lineno, "expected 'curve <id> <word>'");
      if (id.find('.') != std::string::npos) format_error(lineno, "curve id may not contain '.'");
      if (ids.count(id)) format_error(lineno, "duplicate curve id " + id);
      CyclicWord w;
      try {
        w = parse_word(text);
      } catch (const Error& e) {
        format_error(lineno, e.what());
      }
      w.set_label(id);
      ids[id] = int(d.curves.size());
      d.curves.push_back(std::move(w));
    } else if (key == "slots") {
      std::string name, colon;
      if (!(ls >> name >> colon) || colon != ":") format_error(lineno, "expected 'slots <circle> : ...'");
      const int v = circle_from_name(name);
      if (v < 0) format_error(lineno, "unknown circle " + name);
      if (have[v]) format_error(lineno, "duplicate slots line for " + name);
      have[v] = true;
      std::string tok;
      while (ls >> tok) {
        auto dot = tok.rfind('.');
        if (dot == std::string::npos) format_error(lineno, "bad slot " + tok);
        auto it = ids.find(tok.substr(0, dot));
        if (it == ids.end()) format_error(lineno, "unknown curve in slot " + tok);
        int index = 0;
        try {
          std::size_t used = 0;
          index = std::stoi(tok.substr(dot + 1), &used);
          if (used != tok.size() - dot - 1) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          format_error(lineno, "bad slot index " + tok);
        }
        d.slots[v].push_back({it->second, index});
      }
    } else {
      format_error(lineno, "unknown keyword " + key);
    }
  }
  if (!header) format_error(lineno, "missing header");
  if (d.curves.empty()) format_error(lineno, "no curves");
  for (int v = 0; v < 4; ++v)
    if (!have[v]) format_error(lineno, std::string("missing slots line for ") + circle_name(v));
  return d;
}

EmbeddedDiagram embed_pair(std::istream& in) {
  EmbeddedDiagram d = parse_diagram(in);
  validate(d);
  return d;
}

EmbeddedDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FormatError", "cannot open " + path);
  return embed_pair(in);
}

std::string format_diagram(const EmbeddedDiagram& d) {
  std::ostringstream os;
  os << "g2diagram 1\n";
  for (std::size_t c = 0; c < d.curves.size(); ++c)
    os << "curve " << curve_id(d, int(c)) << ' ' << to_string(d.curves[c]) << '\n';
  for (int v = 0; v < 4; ++v) {
    os << "slots " << circle_name(v) << " :";
    for (const Slot& s : d.slots[v]) os << ' ' << curve_id(d, s.curve) << '.' << s.index;
    os << '\n';
  }
  return os.str();
}

}  // namespace wavekit
