// Planar embedding search for one or two disjoint curves.
//
// Parallel arcs between the same pair of circles are grouped into bands. On
// a 4-holed sphere at most two non-parallel bands join a pair of circles,
// and the band graph is a planar multigraph with at most six bands. We try
// every band multigraph compatible with the letter-pair counts, every
// rotation system, every split of a doubled pair's weight, and every twist
// of the two disk identifications, then trace and compare with the targets.

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <numeric>
#include <optional>

#include "wavekit/error.hpp"
#include "wavekit/fatgraph.hpp"

namespace wavekit {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  for (int i = 0; i < 6; ++i)
    if (kPairs[i][0] == u && kPairs[i][1] == v) return i;
  return -1;
}

struct Band {
  int pair;
  int u, v;  // end 0 at u, end 1 at v
};

struct BandEnd {
  int band;
  int end;
};

struct Candidate {
  std::vector<Band> bands;
  std::array<std::vector<BandEnd>, 4> rot;
};

class Searcher {
 public:
  using Sink = std::function<bool(EmbeddedDiagram&&)>;  // true stops the search

  Searcher(const std::vector<CyclicWord>& words, Sink sink) : words_(words), sink_(std::move(sink)) {
    for (const auto& w : words_) {
      const long n = long(w.size());
      for (long k = 0; k < n; ++k)
        ++count_[pair_index(exit_circle(w[std::size_t(k)]), entry_circle(w.cyclic(k + 1)))];
      canon_.push_back(canonical_form(w));
    }
  }

  void run() {
    std::vector<int> present;
    for (int i = 0; i < 6; ++i)
      if (count_[i] > 0) present.push_back(i);
    std::vector<int> mult(present.size(), 1);
    while (true) {
      if (std::accumulate(mult.begin(), mult.end(), 0) <= 6) {
        if (try_bands(present, mult)) return;
      }
      std::size_t i = 0;
      while (i < mult.size()) {
        if (mult[i] == 1 && count_[present[i]] >= 2) {
          mult[i] = 2;
          break;
        }
        mult[i] = 1;
        ++i;
      }
      if (i == mult.size()) break;
    }
  }

 private:
  bool try_bands(const std::vector<int>& present, const std::vector<int>& mult) {
    Candidate cand;
    for (std::size_t i = 0; i < present.size(); ++i)
      for (int j = 0; j < mult[i]; ++j)
        cand.bands.push_back({present[i], kPairs[present[i]][0], kPairs[present[i]][1]});

    std::array<std::vector<BandEnd>, 4> inc;
    for (int bi = 0; bi < int(cand.bands.size()); ++bi) {
      inc[cand.bands[bi].u].push_back({bi, 0});
      inc[cand.bands[bi].v].push_back({bi, 1});
    }
    // Rotation at each circle: first band end fixed, the rest permuted.
    std::array<std::vector<int>, 4> perm;
    for (int v = 0; v < 4; ++v) {
      perm[v].resize(inc[v].empty() ? 0 : inc[v].size() - 1);
      std::iota(perm[v].begin(), perm[v].end(), 1);
    }
    while (true) {
      for (int v = 0; v < 4; ++v) {
        cand.rot[v].clear();
        if (inc[v].empty()) continue;
        cand.rot[v].push_back(inc[v][0]);
        for (int p : perm[v]) cand.rot[v].push_back(inc[v][p]);
      }
      if (planar(cand)) {
        if (try_weights(cand)) return true;
      }
      int v = 0;
      while (v < 4 && !std::next_permutation(perm[v].begin(), perm[v].end())) ++v;
      if (v == 4) break;
    }
    return false;
  }

  // Euler characteristic check per component at band level. Also rejects two
  // distinct bands of the same pair bounding a bigon, since they would be
  // parallel and hence one band.
  bool planar(const Candidate& cand) const {
    const int nb = int(cand.bands.size());
    std::vector<std::array<int, 2>> where(2 * nb);
    for (int v = 0; v < 4; ++v)
      for (int i = 0; i < int(cand.rot[v].size()); ++i) {
        const BandEnd& e = cand.rot[v][i];
        where[2 * e.band + e.end] = {v, i};
      }
    auto next_around = [&](int dart) {
      auto [v, i] = where[dart];
      const BandEnd& e = cand.rot[v][(i + 1) % cand.rot[v].size()];
      return 2 * e.band + e.end;
    };

    std::array<int, 4> par{0, 1, 2, 3};
    auto root = [&](int x) {
      while (par[x] != x) x = par[x] = par[par[x]];
      return x;
    };
    for (const Band& b : cand.bands) par[root(b.u)] = root(b.v);
    std::array<int, 4> verts{}, edges{}, facec{};
    for (int v = 0; v < 4; ++v) {
      ++verts[root(v)];
      if (cand.rot[v].empty()) ++facec[root(v)];
    }
    for (const Band& b : cand.bands) ++edges[root(b.u)];

    std::vector<char> seen(2 * nb, 0);
    for (int d0 = 0; d0 < 2 * nb; ++d0) {
      if (seen[d0]) continue;
      int len = 0, x = d0;
      std::array<int, 2> first{-1, -1};
      while (!seen[x]) {
        seen[x] = 1;
        if (len < 2) first[len] = x;
        ++len;
        x = next_around(x ^ 1);
      }
      ++facec[root(where[d0][0])];
      if (len == 2) {
        int b0 = first[0] >> 1, b1 = first[1] >> 1;
        if (b0 != b1 && cand.bands[b0].pair == cand.bands[b1].pair) return false;
      }
    }
    for (int v = 0; v < 4; ++v)
      if (root(v) == v && verts[v] - edges[v] + facec[v] != 2) return false;
    return true;
  }

  bool try_weights(const Candidate& cand) {
    const int nb = int(cand.bands.size());
    // Doubled pairs: first band takes k strands, the second the rest.
    std::vector<int> first_of(6, -1), second_of(6, -1);
    for (int bi = 0; bi < nb; ++bi) {
      int p = cand.bands[bi].pair;
      (first_of[p] < 0 ? first_of[p] : second_of[p]) = bi;
    }
    std::vector<int> doubled;
    for (int p = 0; p < 6; ++p)
      if (second_of[p] >= 0) doubled.push_back(p);
    std::vector<int> split(doubled.size(), 1);
    std::vector<int> weight(nb, 0);
    while (true) {
      for (int p = 0; p < 6; ++p)
        if (first_of[p] >= 0 && second_of[p] < 0) weight[first_of[p]] = count_[p];
      for (std::size_t i = 0; i < doubled.size(); ++i) {
        weight[first_of[doubled[i]]] = split[i];
        weight[second_of[doubled[i]]] = count_[doubled[i]] - split[i];
      }
      if (try_twists(cand, weight)) return true;
      std::size_t i = 0;
      while (i < split.size() && ++split[i] >= count_[doubled[i]]) split[i++] = 1;
      if (i == split.size()) break;
    }
    return false;
  }

  struct Crossing {
    int circle, pos, circle2, pos2;
    Letter letter;
  };

  bool try_twists(const Candidate& cand, const std::vector<int>& weight) {
    // Expand bands into strands; strand s of a band of weight w sits at
    // offset s at end u and offset w-1-s at end v.
    std::vector<int> base(cand.bands.size() + 1, 0);
    for (std::size_t bi = 0; bi < cand.bands.size(); ++bi) base[bi + 1] = base[bi] + weight[bi];
    const int arcs = base.back();
    std::array<std::vector<int>, 4> circ;  // strand end ids 2*arc+end
    std::vector<std::array<int, 2>> where(2 * arcs);
    for (int v = 0; v < 4; ++v) {
      for (const BandEnd& e : cand.rot[v]) {
        const int w = weight[e.band];
        for (int s = 0; s < w; ++s) {
          int arc = base[e.band] + (e.end == 0 ? s : w - 1 - s);
          where[2 * arc + e.end] = {v, int(circ[v].size())};
          circ[v].push_back(2 * arc + e.end);
        }
      }
    }
    std::array<int, 2> n{int(circ[0].size()), int(circ[2].size())};
    if (n[0] != int(circ[1].size()) || n[1] != int(circ[3].size())) return false;

    std::vector<std::vector<Crossing>> comps;
    std::vector<char> used(arcs, 0);
    for (int ta = 0; ta < std::max(n[0], 1); ++ta) {
      for (int tb = 0; tb < std::max(n[1], 1); ++tb) {
        std::array<int, 2> t{ta, tb};
        comps.clear();
        std::fill(used.begin(), used.end(), 0);
        bool ok = true;
        for (int a0 = 0; a0 < arcs && ok; ++a0) {
          if (used[a0]) continue;
          if (comps.size() == words_.size()) {
            ok = false;
            break;
          }
          std::vector<Crossing> path;
          int a = a0, e = 0;
          while (true) {
            if (used[a]) {
              ok = false;
              break;
            }
            used[a] = 1;
            auto [v, p] = where[2 * a + (1 - e)];
            const int g = v >> 1;
            const int p2 = ((t[g] - p) % n[g] + n[g]) % n[g];
            path.push_back({v, p, v ^ 1, p2, Letter(v ^ 1)});
            const int next = circ[v ^ 1][p2];
            a = next >> 1;
            e = next & 1;
            if (a == a0) {
              ok = e == 0;
              break;
            }
          }
          if (ok) comps.push_back(std::move(path));
        }
        if (!ok || comps.size() != words_.size()) continue;
        if (match(comps)) return true;
      }
    }
    return false;
  }

  bool match(const std::vector<std::vector<Crossing>>& comps) {
    std::vector<int> assign(comps.size(), -1);
    std::vector<char> taken(words_.size(), 0);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::vector<Letter> letters;
      for (const auto& c : comps[i]) letters.push_back(c.letter);
      CyclicWord traced(std::move(letters));
      CyclicWord ct = canonical_form(traced);
      for (std::size_t j = 0; j < words_.size(); ++j) {
        if (!taken[j] && canon_[j] == ct) {
          taken[j] = 1;
          assign[i] = int(j);
          break;
        }
      }
      if (assign[i] < 0) return false;
    }

    EmbeddedDiagram d;
    d.curves = words_;
    for (int v = 0; v < 4; ++v) d.slots[v].assign(slot_total(v), Slot{});
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const int cid = assign[i];
      const CyclicWord& target = words_[cid];
      const int n = int(target.size());
      std::vector<Letter> letters;
      for (const auto& c : comps[i]) letters.push_back(c.letter);
      CyclicWord traced(std::move(letters));
      // Crossing i of the traced loop becomes occurrence index_of(i).
      std::vector<int> index_of(n, -1);
      bool aligned = false;
      for (int r = 0; r < n && !aligned; ++r) {
        if (rotate(traced, r) == target) {
          for (int j = 0; j < n; ++j) index_of[(j + r) % n] = j;
          aligned = true;
        }
      }
      CyclicWord inv = invert(traced);
      for (int r = 0; r < n && !aligned; ++r) {
        if (rotate(inv, r) == target) {
          for (int j = 0; j < n; ++j) index_of[n - 1 - (j + r) % n] = j;
          aligned = true;
        }
      }
      if (!aligned) throw InternalError("embed: matched component failed to align");
      for (int k = 0; k < n; ++k) {
        const Crossing& c = comps[i][k];
        d.slots[c.circle][c.pos] = {cid, index_of[k]};
        d.slots[c.circle2][c.pos2] = {cid, index_of[k]};
      }
    }
    validate(d);
    return sink_(std::move(d));
  }

  std::size_t slot_total(int v) const {
    std::size_t n = 0;
    for (const auto& w : words_) n += std::size_t(count_generator(w, v >> 1));
    return n;
  }

  const std::vector<CyclicWord>& words_;
  std::array<int, 6> count_{};
  std::vector<CyclicWord> canon_;
  Sink sink_;
};

void check_words(const std::vector<CyclicWord>& words) {
  if (words.empty() || words.size() > 2) throw Error("InputInvalid", "expected one or two curves");
  for (const auto& w : words)
    if (w.empty() || !is_reduced(w)) throw Error("InputInvalid", "curve words must be nonempty and reduced");
}

using SlotKey = std::array<std::vector<std::pair<int, int>>, 4>;

// Slot lists with each circle rotated to its least label. Shifting the
// labels of a periodic curve by its period redraws the same picture, so the
// least key over all such shifts is used.
SlotKey slot_key(const EmbeddedDiagram& d) {
  const int nc = int(d.curves.size());
  std::vector<int> period(nc), count(nc);
  int combos = 1;
  for (int c = 0; c < nc; ++c) {
    const int n = int(d.curves[c].size());
    const auto root = proper_power_root(d.curves[c]);
    period[c] = root ? int(root->root.size()) : n;
    count[c] = n / period[c];
    combos *= count[c];
  }
  std::optional<SlotKey> best;
  for (int combo = 0; combo < combos; ++combo) {
    std::vector<int> shift(nc);
    for (int c = 0, r = combo; c < nc; r /= count[c], ++c) shift[c] = (r % count[c]) * period[c];
    SlotKey key;
    for (int v = 0; v < 4; ++v) {
      for (const Slot& s : d.slots[v]) {
        const int n = int(d.curves[s.curve].size());
        key[v].push_back({s.curve, (s.index + shift[s.curve]) % n});
      }
      if (!key[v].empty()) std::rotate(key[v].begin(), std::min_element(key[v].begin(), key[v].end()), key[v].end());
    }
    if (!best || key < *best) best = std::move(key);
  }
  return *best;
}

}  // namespace

EmbeddedDiagram embed_curves(const std::vector<CyclicWord>& words) {
  check_words(words);
  std::optional<EmbeddedDiagram> found;
  Searcher s(words, [&](EmbeddedDiagram&& d) {
    found = std::move(d);
    return true;
  });
  s.run();
  if (found) return std::move(*found);
  std::string names;
  for (const auto& w : words) names += (names.empty() ? "" : " ") + to_string(w);
  throw Error("NotRealizable", names);
}

std::vector<EmbeddedDiagram> all_embeddings(const std::vector<CyclicWord>& words, std::size_t limit) {
  check_words(words);
  std::vector<EmbeddedDiagram> out;
  std::set<SlotKey> seen;
  Searcher s(words, [&](EmbeddedDiagram&& d) {
    if (seen.insert(slot_key(d)).second) out.push_back(std::move(d));
    return out.size() >= limit;
  });
  s.run();
  return out;
}

EmbeddedDiagram embed_single_word(const CyclicWord& w) { return embed_curves({w}); }

bool is_realizable(const CyclicWord& w) {
  try {
    embed_single_word(w);
    return true;
  } catch (const Error& e) {
    if (e.code() == "NotRealizable") return false;
    throw;
  }
}

}  // namespace wavekit
