#include "wavekit/fatgraph.hpp"

#include <algorithm>
#include <numeric>

#include "wavekit/error.hpp"

namespace wavekit {

const char* circle_name(int c) {
  static constexpr const char* kNames[] = {"A+", "A-", "B+", "B-"};
  return kNames[c];
}

const char* form_name(GraphForm f) {
  switch (f) {
    case GraphForm::FormI: return "FormI";
    case GraphForm::FormII: return "FormII";
    case GraphForm::FormIII: return "FormIII";
  }
  return "?";
}

int EmbeddedDiagram::arc_count() const {
  int n = 0;
  for (const auto& w : curves) n += int(w.size());
  return n;
}

int DiagramGraph::edge_count() const {
  int n = 0;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) n += mult[u][v];
  return n;
}

namespace {

int find_root(std::array<int, 4>& par, int x) {
  while (par[x] != x) x = par[x] = par[par[x]];
  return x;
}

int component_count(const DiagramGraph& g, int skip) {
  std::array<int, 4> par{0, 1, 2, 3};
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (u != skip && v != skip && g.mult[u][v] > 0) par[find_root(par, u)] = find_root(par, v);
  int n = 0;
  for (int v = 0; v < 4; ++v)
    if (v != skip && find_root(par, v) == v) ++n;
  return n;
}

void classify(DiagramGraph& g) {
  const int a = g.a(), b = g.b(), c = g.c(), d = g.d();
  if (c > 0 && d > 0) {
    g.form = GraphForm::FormI;
  } else if (a > 0 && b > 0 && (c > 0) != (d > 0)) {
    g.form = GraphForm::FormII;
    g.positive_params = std::array<int, 3>{a, c > 0 ? c : d, b};
  } else {
    g.form = GraphForm::FormIII;
  }
}

}  // namespace

DiagramGraph graph_of_words(const std::vector<CyclicWord>& words) {
  DiagramGraph g;
  for (const auto& w : words) {
    const long n = long(w.size());
    for (long k = 0; k < n; ++k) {
      int u = exit_circle(w[std::size_t(k)]), v = entry_circle(w.cyclic(k + 1));
      if (u == v) throw InternalError("graph_of_words: word not cyclically reduced");
      ++g.mult[u][v];
      ++g.mult[v][u];
    }
  }
  classify(g);
  return g;
}

DiagramGraph derive_graph(const EmbeddedDiagram& d) {
  DiagramIndex ix(d);
  DiagramGraph g;
  for (int id = 0; id < ix.dart_count(); id += 2) {
    Dart x = ix.dart(id);
    int u = ix.dart_circle(x), v = ix.dart_circle(ix.opposite(x));
    ++g.mult[u][v];
    ++g.mult[v][u];
  }
  classify(g);
  return g;
}

bool is_connected(const DiagramGraph& g) { return component_count(g, -1) == 1; }

bool has_cut_vertex(const DiagramGraph& g) {
  const int base = component_count(g, -1);
  for (int v = 0; v < 4; ++v) {
    bool isolated = true;
    for (int u = 0; u < 4; ++u) isolated = isolated && (u == v || g.mult[u][v] == 0);
    // Removing an isolated vertex also removes a component.
    if (component_count(g, v) > base - (isolated ? 1 : 0)) return true;
  }
  return false;
}

bool is_eligible(const DiagramGraph& g) { return is_connected(g) && !has_cut_vertex(g); }

DiagramIndex::DiagramIndex(const EmbeddedDiagram& d) : d_(&d) {
  const std::size_t nc = d.curves.size();
  exit_pos_.resize(nc);
  entry_pos_.resize(nc);
  offset_.resize(nc + 1, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    exit_pos_[c].assign(d.curves[c].size(), -1);
    entry_pos_[c].assign(d.curves[c].size(), -1);
    offset_[c + 1] = offset_[c] + 2 * int(d.curves[c].size());
  }
  for (int v = 0; v < 4; ++v) {
    for (int p = 0; p < int(d.slots[v].size()); ++p) {
      const Slot& s = d.slots[v][p];
      Letter x = d.curves[s.curve][s.index];
      if (exit_circle(x) == v) exit_pos_[s.curve][s.index] = p;
      else entry_pos_[s.curve][s.index] = p;
    }
  }
  darts_.reserve(offset_[nc]);
  for (std::size_t c = 0; c < nc; ++c)
    for (int k = 0; k < int(d.curves[c].size()); ++k)
      for (int e = 0; e < 2; ++e) darts_.push_back({int(c), k, e});
}

int DiagramIndex::dart_circle(const Dart& x) const {
  const CyclicWord& w = d_->curves[x.curve];
  return x.end == 0 ? exit_circle(w[x.gap]) : entry_circle(w.cyclic(x.gap + 1));
}

int DiagramIndex::dart_pos(const Dart& x) const {
  if (x.end == 0) return exit_pos_[x.curve][x.gap];
  const int n = int(d_->curves[x.curve].size());
  return entry_pos_[x.curve][(x.gap + 1) % n];
}

Dart DiagramIndex::dart_at(int circle, int pos) const {
  const Slot& s = d_->slots[circle][pos];
  const CyclicWord& w = d_->curves[s.curve];
  if (exit_circle(w[s.index]) == circle) return {s.curve, s.index, 0};
  const int n = int(w.size());
  return {s.curve, (s.index + n - 1) % n, 1};
}

Dart DiagramIndex::next_around(const Dart& x) const {
  const int v = dart_circle(x);
  const int n = int(d_->slots[v].size());
  return dart_at(v, (dart_pos(x) + 1) % n);
}

std::vector<std::vector<Dart>> dart_cycles(const DiagramIndex& ix) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(ix.dart_count(), 0);
  for (int id = 0; id < ix.dart_count(); ++id) {
    if (seen[id]) continue;
    std::vector<Dart> cyc;
    Dart x = ix.dart(id);
    while (!seen[ix.dart_id(x)]) {
      seen[ix.dart_id(x)] = 1;
      cyc.push_back(x);
      x = ix.face_next(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

namespace {

// Union-find over circles joined by arcs.
std::array<int, 4> circle_components(const DiagramIndex& ix) {
  std::array<int, 4> par{0, 1, 2, 3};
  for (int id = 0; id < ix.dart_count(); id += 2) {
    Dart x = ix.dart(id);
    par[find_root(par, ix.dart_circle(x))] = find_root(par, ix.dart_circle(ix.opposite(x)));
  }
  for (int v = 0; v < 4; ++v) par[v] = find_root(par, v);
  return par;
}

}  // namespace

// Pieces of the 4-holed sphere cut along all arcs. Slot data does not record
// how separate components nest, so every secondary component is placed in
// the first face of the component with the most arcs.
std::vector<Face> faces(const EmbeddedDiagram& d) {
  DiagramIndex ix(d);
  auto comp = circle_components(ix);
  auto cycles = dart_cycles(ix);

  std::array<int, 4> arcs_in{};
  for (int id = 0; id < ix.dart_count(); id += 2) ++arcs_in[comp[ix.dart_circle(ix.dart(id))]];
  int primary = 0;
  for (int v = 0; v < 4; ++v)
    if (comp[v] == v && arcs_in[v] > arcs_in[primary]) primary = v;
  primary = comp[primary];

  Face merged;
  std::vector<Face> rest;
  std::array<bool, 4> comp_used{};
  for (auto& cyc : cycles) {
    int c = comp[ix.dart_circle(cyc.front())];
    if (!comp_used[c]) {
      comp_used[c] = true;
      merged.cycles.push_back(std::move(cyc));
    } else {
      Face f;
      f.cycles.push_back(std::move(cyc));
      rest.push_back(std::move(f));
    }
  }
  for (int v = 0; v < 4; ++v)
    if (d.slots[v].empty()) merged.bare_circles.push_back(v);
  // The primary component's first cycle leads the merged piece.
  std::stable_partition(merged.cycles.begin(), merged.cycles.end(), [&](const std::vector<Dart>& cyc) {
    return comp[ix.dart_circle(cyc.front())] == primary;
  });

  std::vector<Face> out;
  out.push_back(std::move(merged));
  for (auto& f : rest) out.push_back(std::move(f));
  for (auto& f : out) f.euler_characteristic = 2 - int(f.cycles.size() + f.bare_circles.size());
  return out;
}

bool is_separating(const EmbeddedDiagram& d, int curve) {
  const EmbeddedDiagram sub = restrict_curves(d, {curve});
  AbelianImage h = abelianize(sub.curves[0]);
  if (h.a != 0 || h.b != 0) return false;
  DiagramIndex ix(sub);
  const auto pieces = faces(sub);
  std::vector<int> piece_of(ix.dart_count(), 0);
  for (int f = 0; f < int(pieces.size()); ++f)
    for (const auto& cyc : pieces[f].cycles)
      for (const Dart& x : cyc) piece_of[ix.dart_id(x)] = f;
  // Segment after position p on circle v belongs to the piece whose walk
  // turns there.
  std::array<std::vector<int>, 4> seg;
  for (int v = 0; v < 4; ++v) seg[v].assign(sub.slots[v].size(), 0);
  for (int id = 0; id < ix.dart_count(); ++id) {
    const Dart y = ix.opposite(ix.dart(id));
    seg[ix.dart_circle(y)][ix.dart_pos(y)] = piece_of[id];
  }
  std::vector<int> par(pieces.size());
  std::iota(par.begin(), par.end(), 0);
  auto root = [&](int x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  };
  for (int v = 0; v < 4; v += 2) {
    const auto& plus = sub.slots[v];
    const auto& minus = sub.slots[v + 1];
    const int n = int(plus.size());
    for (int p = 0; p < n; ++p) {
      const Slot& next = plus[(p + 1) % n];
      const int q = int(std::find(minus.begin(), minus.end(), next) - minus.begin());
      par[root(seg[v][p])] = root(seg[v + 1][q]);
    }
  }
  int roots = 0;
  for (int f = 0; f < int(pieces.size()); ++f) roots += root(f) == f;
  return roots > 1;
}

namespace {

[[noreturn]] void violation(const std::string& name) { throw Error("InvariantViolation", name); }

// Rotation t with minus[(t - p) mod n] == plus[p], or -1.
int gluing_twist(const std::vector<Slot>& plus, const std::vector<Slot>& minus) {
  const int n = int(plus.size());
  if (n == 0) return 0;
  auto it = std::find(minus.begin(), minus.end(), plus[0]);
  if (it == minus.end()) return -1;
  const int t = int(it - minus.begin());
  for (int p = 0; p < n; ++p)
    if (!(minus[((t - p) % n + n) % n] == plus[p])) return -1;
  return t;
}

}  // namespace

std::vector<CyclicWord> read_back(const EmbeddedDiagram& d) {
  DiagramIndex ix(d);
  std::array<int, 2> twist{gluing_twist(d.slots[kAPlus], d.slots[kAMinus]),
                           gluing_twist(d.slots[kBPlus], d.slots[kBMinus])};
  std::vector<CyclicWord> out;
  std::vector<char> seen(ix.dart_count(), 0);
  for (int id = 0; id < ix.dart_count(); id += 2) {
    if (seen[id]) continue;
    std::vector<Letter> word;
    Dart x = ix.dart(id);
    while (!seen[ix.dart_id(x)]) {
      seen[ix.dart_id(x)] = 1;
      Dart head = ix.opposite(x);
      const int v = ix.dart_circle(head), g = v >> 1;
      const int n = int(d.slots[v].size());
      const int p2 = ((twist[g] - ix.dart_pos(head)) % n + n) % n;
      word.push_back(Letter(v ^ 1));
      x = ix.dart_at(v ^ 1, p2);
      if (x.end != 0) return {};
    }
    if (ix.dart_id(x) != id) return {};
    out.emplace_back(std::move(word));
  }
  return out;
}

void validate(const EmbeddedDiagram& d) {
  if (d.curves.empty()) violation("curve words");
  for (const auto& w : d.curves)
    if (w.empty() || !is_reduced(w)) violation("curve words");

  for (int g = 0; g < 2; ++g) {
    int total = 0;
    for (const auto& w : d.curves) total += count_generator(w, g);
    for (int v = 2 * g; v < 2 * g + 2; ++v) {
      if (int(d.slots[v].size()) != total) violation("slot count");
      std::vector<std::vector<char>> hit(d.curves.size());
      for (std::size_t c = 0; c < d.curves.size(); ++c) hit[c].assign(d.curves[c].size(), 0);
      for (const Slot& s : d.slots[v]) {
        if (s.curve < 0 || s.curve >= int(d.curves.size())) violation("slot count");
        if (s.index < 0 || s.index >= int(d.curves[s.curve].size())) violation("slot count");
        if (generator(d.curves[s.curve][s.index]) != g) violation("slot count");
        if (hit[s.curve][s.index]++) violation("slot count");
      }
    }
  }

  for (int g = 0; g < 2; ++g)
    if (gluing_twist(d.slots[2 * g], d.slots[2 * g + 1]) < 0) violation("gluing reversal");

  DiagramIndex ix(d);
  auto comp = circle_components(ix);
  std::array<int, 4> verts{}, edges{}, face_count{};
  for (int v = 0; v < 4; ++v) {
    ++verts[comp[v]];
    if (d.slots[v].empty()) ++face_count[comp[v]];
  }
  for (int id = 0; id < ix.dart_count(); id += 2) ++edges[comp[ix.dart_circle(ix.dart(id))]];
  for (const auto& cyc : dart_cycles(ix)) ++face_count[comp[ix.dart_circle(cyc.front())]];
  for (int v = 0; v < 4; ++v)
    if (comp[v] == v && verts[v] - edges[v] + face_count[v] != 2) violation("surface consistency");

  auto words = read_back(d);
  if (words.size() != d.curves.size()) violation("read-back");
  std::vector<char> used(words.size(), 0);
  for (const auto& w : d.curves) {
    bool found = false;
    for (std::size_t i = 0; i < words.size() && !found; ++i) {
      if (used[i] || words[i].size() != w.size()) continue;
      for (long r = 0; r < long(w.size()) && !found; ++r) {
        if (rotate(words[i], r) == w) found = true;
      }
      if (found) used[i] = 1;
    }
    if (!found) violation("read-back");
  }
}

EmbeddedDiagram restrict_curves(const EmbeddedDiagram& d, const std::vector<int>& keep) {
  EmbeddedDiagram out;
  std::vector<int> remap(d.curves.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = int(i);
    out.curves.push_back(d.curves[keep[i]]);
  }
  for (int v = 0; v < 4; ++v)
    for (const Slot& s : d.slots[v])
      if (remap[s.curve] >= 0) out.slots[v].push_back({remap[s.curve], s.index});
  return out;
}

}  // namespace wavekit
