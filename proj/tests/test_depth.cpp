#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "wavekit/depth.hpp"
#include "wavekit/error.hpp"
#include "wavekit/reduction.hpp"

using namespace wavekit;

namespace {

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::string path_text(const DepthResult& d) {
  std::string s;
  for (const auto& w : d.path) s += (s.empty() ? "" : " ") + S(w);
  return s;
}

const char* kFixtures[] = {"AB", "AABBB", "AAAAAAABBAAAABB", "AAAAAAABAAABAAAAAAABB", "BBAABBAAAAABBAAB",
                           "BAAAABAAAABABBA"};

}  // namespace

TEST_CASE("depth examples") {
  CHECK(depth(W("AB")).depth == 0);
  CHECK(path_text(depth(W("AB"))) == "AB");
  CHECK(path_text(depth(W("AABBB"))) == "AABBB AB");
  const DepthResult k = depth(W("AAAAAAABBAAAABB"));
  CHECK(k.depth == 1);
  CHECK(S(k.path.back()) == "AAAB");
  const DepthResult two = depth(W("BBAABBAAAAABBAAB"));
  CHECK(two.depth == 2);
  CHECK(path_text(two) == "AAAAABBAABBBAABB AABAABB AB");
  CHECK(code_of([] { depth(W("AAABAbbbAB")); }) == "NotInFamily");
  CHECK(code_of([] { depth(W("Aa")); }) == "InputInvalid");
}

TEST_CASE("depth results are unknotting paths") {
  for (const char* w : kFixtures) {
    const DepthResult d = depth(W(w));
    CHECK(int(d.path.size()) == d.depth + 1);
    CHECK(int(d.steps.size()) == d.depth);
    CHECK(is_primitive_or_power(d.path.back()));
    for (int i = 0; i < d.depth; ++i) {
      // Each next curve is a member of the previous curve's meridian pair,
      // so the pair diagram witnesses that they are disjoint.
      const auto& mp = d.steps[i];
      CHECK((d.path[i + 1] == mp.m1 || d.path[i + 1] == mp.m2));
      CHECK(d.path[i + 1].size() < d.path[i].size());
    }
  }
}

TEST_CASE("shortest_meridian") {
  const MeridianPair m011 = distinguished_meridian_pair(W("AAABAbbbAB"));
  CHECK(code_of([&] { shortest_meridian(m011); }) == "BothPrimitiveOrPower");
  const MeridianPair trefoil = distinguished_meridian_pair(W("AABBB"));
  CHECK(code_of([&] { shortest_meridian(trefoil); }) == "BothPrimitiveOrPower");
  const MeridianPair mp = distinguished_meridian_pair(W("BBAABBAAAAABBAAB"));
  const int k = shortest_meridian(mp);
  CHECK(S(k == 0 ? mp.m1 : mp.m2) == "AABAABB");
}

TEST_CASE("unknotting graph of small cases") {
  const UnknottingGraph g = build_unknotting_graph(W("AB"));
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.vertices[0].terminal);

  const UnknottingGraph t = build_unknotting_graph(W("AABBB"));
  REQUIRE(t.vertices.size() == 3);
  CHECK_FALSE(t.vertices[0].terminal);
  CHECK(t.edges.size() == 2);
  const auto L = min_path_lengths(t);
  CHECK(L[0] == 0);
  CHECK(L[t.find(W("AB"))] == 1);
  CHECK(L[t.find(W("ABB"))] == 1);
  CHECK(t.vertices[t.find(W("AB"))].terminal);
  CHECK(t.vertices[t.find(W("ABB"))].terminal);
  CHECK(code_of([] { build_unknotting_graph(W("AAABAbbbAB")); }) == "NotInFamily");
}

TEST_CASE("unknotting graph invariants over fixtures") {
  for (const char* w : kFixtures) {
    const UnknottingGraph g = build_unknotting_graph(W(w));
    const DepthResult d = depth(W(w));
    std::vector<int> children(g.vertices.size(), 0);
    for (const auto& e : g.edges) {
      if (e.kind != EdgeKind::DistinguishedChild) continue;
      ++children[e.from];
      CHECK(g.vertices[e.to].word.size() < g.vertices[e.from].word.size());
    }
    std::set<CyclicWord> words;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& x = g.vertices[v];
      CHECK(words.insert(x.word).second);
      CHECK(x.word == canonical_form(x.word));
      CHECK(x.terminal == is_primitive_or_power(x.word));
      CHECK(children[v] == (x.terminal ? 0 : 2));
    }
    const auto L = min_path_lengths(g);
    const auto Lx = min_path_lengths(g, true);
    CHECK(min_terminal_length(g, L) == d.depth);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      CHECK(L[v] >= 0);
      if (g.vertices[v].terminal) CHECK(Lx[v] == L[v]);
    }
    CHECK(min_terminal_length(g, Lx) == d.depth);
    CHECK(sibling_lemma_failures(g, L).empty());
    CHECK(int(g.path.size()) == d.depth + 1);
    for (std::size_t i = 0; i < g.path.size(); ++i) {
      CHECK(g.vertices[g.path[i]].word == d.path[i]);
      CHECK(g.vertices[g.path[i]].on_path);
      CHECK(g.vertices[g.path[i]].in_gstar);
    }
  }
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(build_unknotting_graph(W("AABBB")));
  CHECK(dot.rfind("digraph unknotting {", 0) == 0);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("penwidth=2") != std::string::npos);
  CHECK(dot.find("v0 -> v1") != std::string::npos);
  CHECK(dot == to_dot(build_unknotting_graph(W("AABBB"))));
}
