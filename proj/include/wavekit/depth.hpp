#pragma once

#include <string>
#include <vector>

#include "wavekit/waves.hpp"
#include "wavekit/word.hpp"

namespace wavekit {

struct DepthResult {
  int depth = 0;
  std::vector<CyclicWord> path;     // R_0 .. R_n, canonical
  std::vector<MeridianPair> steps;  // meridian pair of R_i, i < n
};

// Index (0 for m1, 1 for m2) of the member the pair diagram's distinguished
// wave is not based at. Throws BothPrimitiveOrPower.
int shortest_meridian(const MeridianPair& pair);

DepthResult depth(const CyclicWord& w);

enum class EdgeKind { DistinguishedChild, CrossLink };

struct GraphVertex {
  CyclicWord word;  // canonical under rotation and inversion
  bool terminal = false;  // primitive or a proper power
  bool in_gstar = false;
  bool on_path = false;
};

struct GraphEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::DistinguishedChild;
  bool in_gstar = false;
};

struct UnknottingGraph {
  std::vector<GraphVertex> vertices;  // vertex 0 is the initial curve
  std::vector<GraphEdge> edges;
  std::vector<int> path;      // vertex ids of the procedure's path
  std::vector<int> siblings;  // siblings[i]: the other child of path[i]
  int find(const CyclicWord& w) const;
};

// Throws GraphTooLarge past 10^4 vertices.
UnknottingGraph build_unknotting_graph(const CyclicWord& w);

// Shortest directed distance from the initial vertex; -1 when unreachable.
std::vector<int> min_path_lengths(const UnknottingGraph& g, bool with_cross_links = false);
int min_terminal_length(const UnknottingGraph& g, const std::vector<int>& L);

// Sibling lemma along the path: L(B) = L(B') implies L(C) = L(C').
// Returns the path positions where it fails.
std::vector<int> sibling_lemma_failures(const UnknottingGraph& g, const std::vector<int>& L);

std::string to_dot(const UnknottingGraph& g);

}  // namespace wavekit
