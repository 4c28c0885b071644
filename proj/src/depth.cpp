#include "wavekit/depth.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "wavekit/error.hpp"
#include "wavekit/recognition.hpp"
#include "wavekit/reduction.hpp"

namespace wavekit {

namespace {

constexpr std::size_t kMaxVertices = 10000;

void require_family(const CyclicWord& w) {
  FamilyResult f = embeds_in_family(w);
  if (f.verdict == Verdict::DoesNotEmbed) throw Error("NotInFamily", to_string(w) + ": " + f.describe());
}

}  // namespace

int shortest_meridian(const MeridianPair& pair) {
  const bool t1 = is_primitive_or_power(pair.m1), t2 = is_primitive_or_power(pair.m2);
  if (t1 && t2) throw Error("BothPrimitiveOrPower", to_string(pair.m1) + " " + to_string(pair.m2));
  const std::vector<CyclicWord>& words = pair.pair_diagram.curves;
  JointMinimizeResult jm = joint_minimize(words);
  if (!is_eligible(graph_of_words(jm.minimal))) {
    // No eligible diagram of the pair; its terminal member ends the path.
    if (t1 || t2) return t1 ? 0 : 1;
    throw Error("NoEligibleDiagram", to_string(pair.m1) + " " + to_string(pair.m2));
  }
  EmbeddedDiagram d = jm.minimal == words ? pair.pair_diagram : embed_curves(jm.minimal);
  const int k = shortest_member(d);
  if (k < 0) throw Error("NoWaveFound", to_string(pair.m1) + " " + to_string(pair.m2));
  return k;
}

DepthResult depth(const CyclicWord& input) {
  CyclicWord r = canonical_form(reduce(input));
  if (r.empty()) throw Error("InputInvalid", "trivial word");
  DepthResult out;
  out.path.push_back(r);
  if (is_primitive_or_power(r)) return out;
  require_family(r);
  while (!is_primitive_or_power(r)) {
    MeridianPair mp = distinguished_meridian_pair(r);
    int k = 0;  // both terminal: follow the shorter
    try {
      k = shortest_meridian(mp);
    } catch (const Error& e) {
      if (e.code() != "BothPrimitiveOrPower") throw;
    }
    CyclicWord next = k == 0 ? mp.m1 : mp.m2;
    if (next.size() >= r.size()) throw InternalError("depth path did not shorten at " + to_string(r));
    out.steps.push_back(std::move(mp));
    out.path.push_back(next);
    r = next;
    ++out.depth;
  }
  return out;
}

int UnknottingGraph::find(const CyclicWord& w) const {
  const CyclicWord c = canonical_form(reduce(w));
  for (int i = 0; i < int(vertices.size()); ++i)
    if (vertices[i].word == c) return i;
  return -1;
}

UnknottingGraph build_unknotting_graph(const CyclicWord& input) {
  const CyclicWord start = canonical_form(reduce(input));
  if (start.empty()) throw Error("InputInvalid", "trivial word");
  UnknottingGraph g;
  std::unordered_map<CyclicWord, int, WordHash> id;
  auto vertex = [&](const CyclicWord& w) {
    auto [it, fresh] = id.emplace(w, int(g.vertices.size()));
    if (fresh) {
      if (g.vertices.size() >= kMaxVertices)
        throw Error("GraphTooLarge", "more than " + std::to_string(kMaxVertices) + " vertices");
      g.vertices.push_back({w, is_primitive_or_power(w), false, false});
    }
    return it->second;
  };
  vertex(start);
  if (!g.vertices[0].terminal) require_family(start);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].terminal) continue;
    MeridianPair mp = distinguished_meridian_pair(g.vertices[v].word);
    const int a = vertex(mp.m1);
    const int b = vertex(mp.m2);
    g.edges.push_back({int(v), a, EdgeKind::DistinguishedChild, false});
    g.edges.push_back({int(v), b, EdgeKind::DistinguishedChild, false});
  }

  // G*: the path, both children of each path vertex, and a cross-link from
  // each nonterminal sibling to the path vertex it stands beside.
  DepthResult d = depth(start);
  for (const auto& w : d.path) g.path.push_back(id.at(w));
  g.vertices[0].in_gstar = true;
  for (std::size_t i = 0; i + 1 < g.path.size(); ++i) {
    const int p = g.path[i], next = g.path[i + 1];
    const auto& mp = d.steps[i];
    const int sib = id.at(mp.m1) == next ? id.at(mp.m2) : id.at(mp.m1);
    g.siblings.push_back(sib);
    for (auto& e : g.edges)
      if (e.from == p && e.kind == EdgeKind::DistinguishedChild) e.in_gstar = true;
    g.vertices[next].in_gstar = g.vertices[sib].in_gstar = true;
    if (sib != next && !g.vertices[sib].terminal &&
        std::find(g.path.begin(), g.path.end(), sib) == g.path.end())
      g.edges.push_back({sib, next, EdgeKind::CrossLink, true});
  }
  for (int p : g.path) g.vertices[p].on_path = true;
  return g;
}

std::vector<int> min_path_lengths(const UnknottingGraph& g, bool with_cross_links) {
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges)
    if (with_cross_links || e.kind == EdgeKind::DistinguishedChild) adj[e.from].push_back(e.to);
  std::vector<int> L(g.vertices.size(), -1);
  if (g.vertices.empty()) return L;
  std::deque<int> q{0};
  L[0] = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int u : adj[v])
      if (L[u] < 0) {
        L[u] = L[v] + 1;
        q.push_back(u);
      }
  }
  return L;
}

int min_terminal_length(const UnknottingGraph& g, const std::vector<int>& L) {
  int best = -1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].terminal && L[v] >= 0 && (best < 0 || L[v] < best)) best = L[v];
  return best;
}

std::vector<int> sibling_lemma_failures(const UnknottingGraph& g, const std::vector<int>& L) {
  std::vector<int> bad;
  for (std::size_t i = 0; i + 2 < g.path.size(); ++i) {
    const int b = g.path[i + 1], b2 = g.siblings[i];
    const int c = g.path[i + 2], c2 = g.siblings[i + 1];
    if (L[b] == L[b2] && L[c] != L[c2]) bad.push_back(int(i));
  }
  return bad;
}

std::string to_dot(const UnknottingGraph& g) {
  const std::vector<int> L = min_path_lengths(g);
  std::ostringstream os;
  os << "digraph unknotting {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& x = g.vertices[v];
    os << "  v" << v << " [label=\"" << to_string(x.word) << "\\nL=" << L[v] << "\"";
    os << ", shape=" << (x.terminal ? "box" : "ellipse");
    if (x.on_path) os << ", penwidth=2";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.from << " -> v" << e.to;
    if (e.kind == EdgeKind::CrossLink) os << " [style=dashed]";
    else if (!e.in_gstar) os << " [color=gray]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wavekit
