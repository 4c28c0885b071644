// One line per acceptance criterion; exit status is the number of failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "properties.hpp"
#include "wavekit/depth.hpp"
#include "wavekit/error.hpp"
#include "wavekit/fatgraph.hpp"
#include "wavekit/recognition.hpp"
#include "wavekit/waves.hpp"

using namespace wavekit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// A check appends to `why` on failure and returns whether it held.
struct Report {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& msg) {
    if (cond) return;
    if (!ok) why << "; ";
    why << msg;
    ok = false;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Report&)>& body) {
  Report r;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.expect(false, std::string("threw ") + e.what());
  }
  const double dt = seconds_since(t0);
  std::printf("criterion %d %s: %s (%.3f s)%s%s\n", n, r.ok ? "PASS" : "FAIL", title.c_str(), dt,
              r.ok ? "" : " ", r.ok ? "" : r.why.str().c_str());
  if (!r.ok) ++failures;
}

std::string power(char x, int k) { return std::string(k, x); }

bool in_family(Verdict v) {
  return v == Verdict::S3 || v == Verdict::S1xS2 || v == Verdict::S1xS2_connect_sum_Lp;
}

}  // namespace

int main() {
  criterion(1, "m011 meridian pairs", [](Report& r) {
    const std::array<const char*, 3> cases[] = {{"AAABAbbbAB", "Abb", "AAAAB"}, {"AABBAABaBaB", "ABaB", "AABBB"}};
    for (const auto& [w, m1, m2] : cases) {
      const auto t0 = Clock::now();
      const std::string got = pair_key(distinguished_meridian_pair(W(w)));
      const double dt = seconds_since(t0);
      const std::string expect = pair_key(W(m1), W(m2));
      r.expect(got == expect, std::string(w) + " gave " + got);
      r.expect(dt < 1.0, std::string(w) + " took " + std::to_string(dt) + " s");
    }
  });

  criterion(2, "m011 filling homology", [](Report& r) {
    const MeridianPair p1 = distinguished_meridian_pair(W("AAABAbbbAB"));
    const MeridianPair p2 = distinguished_meridian_pair(W("AABBAABaBaB"));
    const std::string h1 = homology_of_filling(p1.m1, p1.m2).str();
    const std::string h2 = homology_of_filling(p2.m1, p2.m2).str();
    r.expect(h1 == "Z/9", "first pair gave " + h1);
    r.expect(h2 == "Z/4", "second pair gave " + h2);
    r.expect(homology_of_filling(W("AAABAbbbAB"), W("Abb")).str() == "Z/9", "R1 with Abb");
    r.expect(homology_of_filling(W("AABBAABaBaB"), W("ABaB")).str() == "Z/4", "R2 with ABaB");
  });

  criterion(3, "v2293 meridian pair", [](Report& r) {
    const std::string got = pair_key(distinguished_meridian_pair(W("AABABAABaBAABaBBaBAABaB")));
    r.expect(got == pair_key(W("BBaBAABaB"), W("ABABAABaBAAB")), "gave " + got);
  });

  criterion(4, "s768 meridian pairs", [](Report& r) {
    const char* rel[] = {"AAAAABBAABBAAbbbAABBAABB", "AAABBAAbAABBAAABBAAbAAbAABB",
                         "AAAAABBBAABAABBBAAAAABBBAABBB", "AABAABaBAABaBBaBAABaBBaBAABaB"};
    const std::pair<const char*, const char*> want[] = {{"aabbaaB", "aabbaabbaaaaa"},
                                                        {"aabbaaa", "baaBaabbaaabbaaBaa"},
                                                        {"bbaaa", "aabbbaabaabbbaaaaabbbaab"},
                                                        {"baabAbaaba", "bAbaabAbbAbaabAbb"}};
    const auto t0 = Clock::now();
    std::string h[4];
    for (int i = 0; i < 4; ++i) {
      const MeridianPair p = distinguished_meridian_pair(W(rel[i]));
      const std::string got = pair_key(p);
      r.expect(got == pair_key(W(want[i].first), W(want[i].second)), "R" + std::to_string(i + 1) + " gave " + got);
      h[i] = homology_of_filling(p.m1, p.m2).str();
    }
    const double dt = seconds_since(t0);
    r.expect(h[0] == h[1] && h[1] == h[2], "pairs 1-3 homology " + h[0] + ", " + h[1] + ", " + h[2]);
    r.expect(dt < 5.0, "took " + std::to_string(dt) + " s");
    std::printf("  s768 filling homology: %s, %s, %s; pair 4: %s\n", h[0].c_str(), h[1].c_str(), h[2].c_str(),
                h[3].c_str());
  });

  criterion(5, "horizontal and vertical slope fillings", [](Report& r) {
    const CyclicWord r1 = W(power('A', 7) + "BB" + power('A', 4) + "BB");
    const MeridianPair h = distinguished_meridian_pair(r1);
    r.expect(h.m1 == W("AAAB") || h.m2 == W("AAAB"), "pair " + pair_key(h) + " lacks AAAB");
    r.expect(homology_of_filling(r1, h.m1).trivial(), "horizontal filling " + homology_of_filling(r1, h.m1).str());
    const long v1 = homology_of_filling(r1, vertical_slope_pair(r1).m1).order();
    r.expect(v1 == 22, "vertical filling order " + std::to_string(v1));
    const CyclicWord r2 = W(power('A', 7) + "B" + power('A', 3) + "B" + power('A', 7) + "BB");
    const long v2 = homology_of_filling(r2, vertical_slope_pair(r2).m1).order();
    r.expect(v2 == 23, "second vertical filling order " + std::to_string(v2));
  });

  criterion(6, "AB^S AB^(S+3) filling orders", [](Report& r) {
    for (int s : {4, 5, 7}) {
      const CyclicWord w = W("A" + power('B', s) + "A" + power('B', s + 3));
      const std::string tag = "S=" + std::to_string(s) + " ";
      const std::pair<const char*, long> slopes[] = {{"A", 2 * s + 3}, {"BBB", 6}, {"BBBA", 2 * s - 3}};
      std::set<CyclicWord> pushoffs;
      for (const auto& d : all_embeddings({w}))
        for (const Wave& wave : find_waves(d, 0)) {
          const SurgeryResult cut = cut_along(d, wave);
          pushoffs.insert(canonical_form(cut.m1));
          pushoffs.insert(canonical_form(cut.m2));
        }
      for (const auto& [m, order] : slopes) {
        const long got = homology_of_filling(w, W(m)).order();
        r.expect(got == order, tag + m + " order " + std::to_string(got));
        // The slope words are also wave pushoffs in some diagram of w.
        r.expect(pushoffs.count(canonical_form(W(m))) > 0, tag + m + " is not a wave pushoff");
      }
    }
  });

  criterion(7, "property suite", [](Report& r) {
    const auto t0 = Clock::now();
    auto [conservation, drop] = props::surgery_properties();
    const props::Stats all[] = {conservation,
                                drop,
                                props::nonpositive_uniqueness(),
                                props::well_definedness(),
                                props::cmz_vs_bruteforce(),
                                props::smith_vs_determinant()};
    const double dt = seconds_since(t0);
    for (const auto& s : all) {
      std::printf("  %s: %d cases, %zu failures\n", s.name.c_str(), s.cases, s.failures.size());
      r.expect(s.ok(200), s.name + (s.failures.empty() ? " too few cases" : " failed on " + s.failures.front()));
    }
    r.expect(dt < 60.0, "took " + std::to_string(dt) + " s");
  });

  criterion(8, "recognition verdicts", [](Report& r) {
    const auto check = [&](const std::vector<const char*>& ws, Verdict want) {
      std::vector<CyclicWord> cs;
      for (const char* w : ws) cs.push_back(W(w));
      const Verdict got = recognize_closed(embed_curves(cs)).verdict;
      r.expect(got == want, std::string(ws[0]) + "," + ws[1] + " gave " + verdict_name(got));
    };
    check({"A", "B"}, Verdict::S3);
    check({"AABBB", "AB"}, Verdict::S3);
    check({"A", "BB"}, Verdict::NotInFamily);
    const Verdict m011 = embeds_in_family(W("AAABAbbbAB")).verdict;
    r.expect(m011 == Verdict::DoesNotEmbed, std::string("AAABAbbbAB gave ") + verdict_name(m011));
  });

  criterion(9, "depth and unknotting graph", [](Report& r) {
    const std::string k1 = power('A', 7) + "BB" + power('A', 4) + "BB";
    const std::pair<std::string, int> known[] = {{"AB", 0}, {"AABBB", 1}, {k1, 1}};
    for (const auto& [w, d] : known) {
      const int got = depth(W(w)).depth;
      r.expect(got == d, "depth(" + w + ") = " + std::to_string(got));
    }
    const std::string fixtures[] = {"AB", "AABBB", k1, power('A', 7) + "B" + power('A', 3) + "B" + power('A', 7) + "BB",
                                    "BBAABBAAAAABBAAB", "BAAAABAAAABABBA"};
    for (const auto& w : fixtures) {
      const int d = depth(W(w)).depth;
      const UnknottingGraph g = build_unknotting_graph(W(w));
      const auto L = min_path_lengths(g), Lx = min_path_lengths(g, true);
      r.expect(min_terminal_length(g, L) == d, w + " graph min L differs from depth");
      for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v].terminal) r.expect(Lx[v] == L[v], w + " cross-link shortens a terminal");
      r.expect(sibling_lemma_failures(g, L).empty(), w + " sibling lemma fails");
    }
    // Generated in-family words.
    int generated = 0;
    for (const auto& w : props::surgery_corpus()) {
      try {
        if (!in_family(embeds_in_family(w).verdict)) continue;
      } catch (const Error&) {
        continue;
      }
      const UnknottingGraph g = build_unknotting_graph(w);
      const auto L = min_path_lengths(g), Lx = min_path_lengths(g, true);
      const int d = depth(w).depth;
      r.expect(min_terminal_length(g, L) == d && min_terminal_length(g, Lx) == d, to_string(w) + " depth mismatch");
      ++generated;
    }
    std::printf("  graph checks on %d generated in-family words\n", generated);
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
