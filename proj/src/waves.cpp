#include "wavekit/waves.hpp"

#include <algorithm>
#include <set>

#include "wavekit/error.hpp"

namespace wavekit {

const char* kind_name(WaveKind k) {
  switch (k) {
    case WaveKind::UniqueNonpositive: return "unique_nonpositive";
    case WaveKind::Horizontal: return "horizontal";
    case WaveKind::Vertical: return "vertical";
    case WaveKind::Other: return "other";
  }
  return "?";
}

std::pair<CyclicWord, CyclicWord> canonical_pair(const CyclicWord& x, const CyclicWord& y) {
  CyclicWord cx = canonical_form(x), cy = canonical_form(y);
  if (cy.size() < cx.size() || (cy.size() == cx.size() && cy < cx)) std::swap(cx, cy);
  return {cx, cy};
}

namespace {

// Occurrence indices of the two pieces: (i, j] and (j, i] cyclically.
std::array<std::vector<int>, 2> pieces(int n, int i, int j) {
  std::array<std::vector<int>, 2> out;
  for (int t = (i + 1) % n;; t = (t + 1) % n) {
    out[0].push_back(t);
    if (t == j) break;
  }
  for (int t = (j + 1) % n;; t = (t + 1) % n) {
    out[1].push_back(t);
    if (t == i) break;
  }
  return out;
}

CyclicWord piece_word(const CyclicWord& w, const std::vector<int>& occ) {
  std::vector<Letter> out;
  for (int t : occ) out.push_back(w[t]);
  return CyclicWord(std::move(out));
}

bool is_aa_arc(int u, int v) { return (u >> 1) == (v >> 1); }

WaveKind classify_wave(const DiagramIndex& ix, const Dart& x, const Dart& y, bool positive) {
  if (!positive) return WaveKind::UniqueNonpositive;
  auto arc_type = [&](const Dart& z) {
    int u = ix.dart_circle(z), v = ix.dart_circle(ix.opposite(z));
    return is_aa_arc(u, v) ? (u >> 1) : 2;  // 0: A+A-, 1: B+B-, 2: mixed
  };
  int tx = arc_type(x), ty = arc_type(y);
  if (tx != 2 && ty != 2 && tx != ty) return WaveKind::Horizontal;
  if (tx == 2 && ty == 2) return WaveKind::Vertical;
  return WaveKind::Other;
}

}  // namespace

std::vector<Wave> find_waves(const EmbeddedDiagram& d, int base) {
  DiagramIndex ix(d);
  const auto cycles = dart_cycles(ix);
  const CyclicWord& w = d.curves[base];
  const int n = int(w.size());
  const bool positive = is_sign_uniform(w);
  std::vector<Wave> out;
  std::set<std::tuple<int, CyclicWord, CyclicWord>> seen;
  for (int f = 0; f < int(cycles.size()); ++f) {
    const auto& cyc = cycles[f];
    for (std::size_t a = 0; a < cyc.size(); ++a) {
      for (std::size_t b = a + 1; b < cyc.size(); ++b) {
        const Dart& x = cyc[a];
        const Dart& y = cyc[b];
        if (x.curve != base || y.curve != base || x.end != y.end || x.gap == y.gap) continue;
        auto occ = pieces(n, x.gap, y.gap);
        CyclicWord m1 = reduce(piece_word(w, occ[0])), m2 = reduce(piece_word(w, occ[1]));
        // An empty piece means the arc cuts a disk off and is not essential.
        if (m1.empty() || m2.empty()) continue;
        WaveKind kind = classify_wave(ix, x, y, positive);
        auto key = canonical_pair(m1, m2);
        if (!seen.emplace(int(kind), key.first, key.second).second) continue;
        out.push_back({f, base, x, y, kind});
      }
    }
  }
  return out;
}

Wave distinguished_wave(const EmbeddedDiagram& d) {
  if (d.curves.size() != 1) throw Error("DiagramNotEligible", "expected a single-curve diagram");
  if (!is_eligible(derive_graph(d))) throw Error("DiagramNotEligible", "graph is disconnected or has a cut vertex");
  auto waves = find_waves(d, 0);
  if (is_sign_uniform(d.curves[0])) {
    std::vector<Wave> h;
    for (const auto& w : waves)
      if (w.kind == WaveKind::Horizontal) h.push_back(w);
    if (h.size() != 1)
      throw InternalError("positive diagram of " + to_string(d.curves[0]) + " has " + std::to_string(h.size()) +
                          " horizontal wave classes");
    return h.front();
  }
  if (waves.size() != 1)
    throw InternalError("nonpositive diagram of " + to_string(d.curves[0]) + " has " + std::to_string(waves.size()) +
                        " wave classes");
  return waves.front();
}

namespace {

struct Token {
  int curve;  // original curve id, or -1 for a surgery piece
  int piece;
  int index;  // occurrence in the original curve word
  friend bool operator==(const Token&, const Token&) = default;
};

}  // namespace

static SurgeryResult cut_along_impl(const EmbeddedDiagram& d, const Wave& wave, bool keep_base) {
  const int c = wave.base_curve;
  const CyclicWord& w = d.curves[c];
  const int n = int(w.size());
  auto occ = pieces(n, wave.end1.gap, wave.end2.gap);
  std::vector<int> piece_of(n);
  for (int p = 0; p < 2; ++p)
    for (int t : occ[p]) piece_of[t] = p;
  // Pushoffs sit on the wave's side: ahead of the slot where a dart on that
  // side is attached, behind the slot at the far end of its arc.
  const int side = wave.end1.end;

  std::array<std::vector<Token>, 4> tok;
  for (int v = 0; v < 4; ++v) {
    for (const Slot& s : d.slots[v]) {
      if (s.curve != c) {
        tok[v].push_back({s.curve, 0, s.index});
        continue;
      }
      Token piece{-1, piece_of[s.index], s.index};
      if (!keep_base) {
        tok[v].push_back(piece);
        continue;
      }
      const bool on_exit = exit_circle(w[s.index]) == v;
      const bool before = on_exit ? side == 0 : side == 1;
      if (before) tok[v].push_back(piece);
      tok[v].push_back({s.curve, 0, s.index});
      if (!before) tok[v].push_back(piece);
    }
  }

  // Cancel letters across each seam; the cancelling slots bound a bigon and
  // must be adjacent on both circles of their generator.
  for (int p = 0; p < 2; ++p) {
    auto& o = occ[p];
    while (o.size() > 1 && w[o.front()] == inverse(w[o.back()])) {
      const int g = generator(w[o.front()]);
      Token ta{-1, p, o.front()}, tb{-1, p, o.back()};
      for (int v = 2 * g; v < 2 * g + 2; ++v) {
        auto& L = tok[v];
        const long ia = std::find(L.begin(), L.end(), ta) - L.begin();
        const long ib = std::find(L.begin(), L.end(), tb) - L.begin();
        const long m = long(L.size());
        const long gap = ((ia - ib) % m + m) % m;
        if (gap != 1 && gap != m - 1) throw InternalError("surgery: seam bigon slots are not adjacent");
        L.erase(std::remove_if(L.begin(), L.end(), [&](const Token& t) { return t == ta || t == tb; }), L.end());
      }
      o.erase(o.begin());
      o.pop_back();
    }
    if (o.empty()) throw InternalError("surgery: inessential wave");
  }

  SurgeryResult r;
  r.m1 = piece_word(w, occ[0]);
  r.m2 = piece_word(w, occ[1]);
  std::vector<int> new_id(d.curves.size(), -1);
  for (int k = 0; k < int(d.curves.size()); ++k) {
    if (k == c && !keep_base) continue;
    new_id[k] = int(r.diagram.curves.size());
    r.diagram.curves.push_back(d.curves[k]);
  }
  const int first_piece = int(r.diagram.curves.size());
  r.diagram.curves.push_back(r.m1);
  r.diagram.curves.push_back(r.m2);
  std::array<std::vector<int>, 2> index_in_piece{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  for (int p = 0; p < 2; ++p)
    for (int k = 0; k < int(occ[p].size()); ++k) index_in_piece[p][occ[p][k]] = k;
  for (int v = 0; v < 4; ++v)
    for (const Token& t : tok[v]) {
      if (t.curve >= 0) r.diagram.slots[v].push_back({new_id[t.curve], t.index});
      else r.diagram.slots[v].push_back({first_piece + t.piece, index_in_piece[t.piece][t.index]});
    }
  validate(r.diagram);
  return r;
}

SurgeryResult cut_along(const EmbeddedDiagram& d, const Wave& w) { return cut_along_impl(d, w, false); }

SurgeryResult cut_along_keeping_base(const EmbeddedDiagram& d, const Wave& w) { return cut_along_impl(d, w, true); }

namespace {

MeridianPair finish_pair(const EmbeddedDiagram& d, const Wave& wave, const CyclicWord& base, const Trace& trace) {
  SurgeryResult s = cut_along(d, wave);
  const int k = int(s.diagram.curves.size());
  MeridianPair mp;
  mp.base = base;
  mp.working = d.curves[wave.base_curve];
  mp.trace = trace;
  mp.wave = wave;
  mp.diagram = d;
  const Trace back = inverse_trace(trace);
  CyclicWord x = canonical_form(apply_trace(s.m1, back)), y = canonical_form(apply_trace(s.m2, back));
  bool swap = y.size() < x.size() || (y.size() == x.size() && y < x);
  mp.m1 = swap ? y : x;
  mp.m2 = swap ? x : y;
  mp.pair_diagram = swap ? restrict_curves(s.diagram, {k - 1, k - 2}) : restrict_curves(s.diagram, {k - 2, k - 1});
  return mp;
}

}  // namespace

MeridianPair surgery(const EmbeddedDiagram& d, const Wave& w) {
  return finish_pair(d, w, d.curves[w.base_curve], {});
}

namespace {

struct Representative {
  CyclicWord word;
  Trace trace;
};

void require_nonseparating(const EmbeddedDiagram& d) {
  if (is_separating(d, 0)) throw Error("InputInvalid", to_string(d.curves[0]) + " is a separating curve");
}

MeridianPair pair_from(const CyclicWord& input, const Representative& rep) {
  EmbeddedDiagram d = embed_single_word(rep.word);
  require_nonseparating(d);
  return finish_pair(d, distinguished_wave(d), input, rep.trace);
}

}  // namespace

OrbitEntry distinguished_representative(const CyclicWord& input) {
  const CyclicWord w = reduce(input);
  if (w.empty()) throw Error("InputInvalid", "trivial word");
  if (is_primitive_or_power(w)) throw Error("BoundaryCompressible", to_string(w) + " is primitive or a proper power");
  MinimizeResult min = whitehead_minimize(w);
  const bool min_eligible = is_eligible(graph_of_words({min.minimal}));
  if (min_eligible && is_sign_uniform(min.minimal)) return {min.minimal, min.trace};
  if (auto pos = positive_representative(w)) return *pos;
  if (min_eligible) return {min.minimal, min.trace};
  for (auto& e : enumerate_minimal_orbit(w))
    if (is_eligible(graph_of_words({e.word}))) return e;
  throw Error("BoundaryCompressible", "no minimal diagram of " + to_string(w) + " is connected without cut vertex");
}

MeridianPair distinguished_meridian_pair(const CyclicWord& input) {
  const CyclicWord w = reduce(input);
  OrbitEntry rep = distinguished_representative(w);
  MeridianPair mp = pair_from(w, {rep.word, rep.trace});
  // A positive representative was preferred; if the greedy minimum is an
  // eligible nonpositive diagram of the same curve, both must agree.
  if (is_sign_uniform(rep.word)) {
    MinimizeResult min = whitehead_minimize(w);
    if (!is_sign_uniform(min.minimal) && is_eligible(graph_of_words({min.minimal}))) {
      MeridianPair other = pair_from(w, {min.minimal, min.trace});
      if (canonical_pair(mp.m1, mp.m2) != canonical_pair(other.m1, other.m2)) {
        if (embedding_ambiguous(rep.word) || embedding_ambiguous(min.minimal))
          throw Error("AmbiguousEmbedding", to_string(w) + " does not determine a unique curve");
        throw InternalError("positive and nonpositive minimal diagrams of " + to_string(w) +
                            " give different distinguished pairs");
      }
    }
  }
  return mp;
}

MeridianPair vertical_slope_pair(const CyclicWord& input) {
  const CyclicWord w = reduce(input);
  if (w.empty() || is_primitive_or_power(w)) throw Error("NotPositive", to_string(w) + " has no positive minimal diagram");
  // A positive eligible input keeps its own diagram, minimal or not.
  if (is_sign_uniform(w) && is_eligible(graph_of_words({w}))) {
    EmbeddedDiagram d = embed_single_word(w);
    require_nonseparating(d);
    for (const auto& wave : find_waves(d, 0))
      if (wave.kind == WaveKind::Vertical) return finish_pair(d, wave, w, {});
  }
  auto pos = positive_representative(w);
  if (!pos) throw Error("NotPositive", to_string(w));
  EmbeddedDiagram d = embed_single_word(pos->word);
  require_nonseparating(d);
  for (const auto& wave : find_waves(d, 0))
    if (wave.kind == WaveKind::Vertical) return finish_pair(d, wave, w, pos->trace);
  throw InternalError("positive diagram of " + to_string(pos->word) + " has no vertical wave");
}

std::vector<std::pair<CyclicWord, CyclicWord>> wave_signature(const EmbeddedDiagram& d) {
  std::vector<std::pair<CyclicWord, CyclicWord>> sig;
  for (const auto& wave : find_waves(d, 0)) {
    SurgeryResult s = cut_along(d, wave);
    sig.push_back(canonical_pair(s.m1, s.m2));
  }
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  return sig;
}

bool embedding_ambiguous(const CyclicWord& w) {
  const auto all = all_embeddings({reduce(w)});
  for (std::size_t i = 1; i < all.size(); ++i)
    if (wave_signature(all[i]) != wave_signature(all[0])) return true;
  return false;
}

int shortest_member(const EmbeddedDiagram& d) {
  int shortest = -1;
  for (int base = 0; base < 2; ++base) {
    if (find_waves(d, base).empty()) continue;
    const int other = 1 - base;
    if (shortest >= 0) {
      const CyclicWord& x = d.curves[shortest];
      const CyclicWord& y = d.curves[other];
      if (y.size() > x.size() || (y.size() == x.size() && !(canonical_form(y) < canonical_form(x)))) continue;
    }
    shortest = other;
  }
  return shortest;
}

int signed_intersection(const EmbeddedDiagram& d, int curve, const Wave& wave) {
  const int base = wave.base_curve;
  if (curve == base) throw Error("InputInvalid", "curve must differ from the wave's base curve");
  EmbeddedDiagram sub = restrict_curves(d, {base});
  DiagramIndex sx(sub), dx(d);
  // Position of each base slot of `sub` inside the full circle lists.
  std::array<std::vector<int>, 4> full_pos;
  for (int v = 0; v < 4; ++v)
    for (int p = 0; p < int(d.slots[v].size()); ++p)
      if (d.slots[v][p].curve == base) full_pos[v].push_back(p);

  Dart e1{0, wave.end1.gap, wave.end1.end}, e2{0, wave.end2.gap, wave.end2.end};
  std::vector<Dart> cyc;
  for (const auto& c : dart_cycles(sx))
    if (std::find(c.begin(), c.end(), e1) != c.end()) cyc = c;
  if (std::find(cyc.begin(), cyc.end(), e2) == cyc.end()) throw Error("InputInvalid", "wave endpoints lie in different faces");

  // Walk the face boundary, numbering wave endpoints and the attachments of
  // the other curve's arcs in boundary order.
  int t1 = -1, t2 = -1, pos = 0;
  std::vector<int> where(dx.dart_count(), -1);
  for (const Dart& x : cyc) {
    if (x == e1) t1 = pos;
    if (x == e2) t2 = pos;
    ++pos;
    Dart head = sx.opposite(x);
    const int v = sx.dart_circle(head);
    const int p = sx.dart_pos(head);
    const int m = int(full_pos[v].size());
    const int from = full_pos[v][p];
    const int to = full_pos[v][(p + 1) % m];
    const int size = int(d.slots[v].size());
    for (int q = (from + 1) % size; q != to; q = (q + 1) % size) {
      if (d.slots[v][q].curve == curve) where[dx.dart_id(dx.dart_at(v, q))] = pos;
      ++pos;
    }
  }
  auto inside = [&](int q) { return t1 < t2 ? (q > t1 && q < t2) : (q > t1 || q < t2); };
  int total = 0;
  const int n = int(d.curves[curve].size());
  for (int g = 0; g < n; ++g) {
    int p0 = where[dx.dart_id({curve, g, 0})], p1 = where[dx.dart_id({curve, g, 1})];
    if (p0 < 0 || p1 < 0) continue;
    if (inside(p0) != inside(p1)) total += inside(p0) ? 1 : -1;
  }
  return total;
}

}  // namespace wavekit
