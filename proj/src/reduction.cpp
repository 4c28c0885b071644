#include "wavekit/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>

#include "wavekit/error.hpp"

namespace wavekit {

namespace {

using L = Letter;

std::array<std::vector<Letter>, 4> images(const BasisMove& m) {
  std::array<std::vector<Letter>, 2> gen{{{L::A}, {L::B}}};
  switch (m.kind) {
    case MoveKind::ReplaceA: {
      static const std::vector<Letter> kA[4] = {{L::A, L::B}, {L::A, L::b}, {L::B, L::A}, {L::b, L::A}};
      gen[0] = kA[m.variant];
      break;
    }
    case MoveKind::ReplaceB: {
      static const std::vector<Letter> kB[4] = {{L::B, L::A}, {L::B, L::a}, {L::A, L::B}, {L::a, L::B}};
      gen[1] = kB[m.variant];
      break;
    }
    case MoveKind::SwapGenerators:
      gen = {{{L::B}, {L::A}}};
      break;
    case MoveKind::InvertGenerator:
      gen[m.variant] = {m.variant == 0 ? L::a : L::b};
      break;
  }
  std::array<std::vector<Letter>, 4> out;
  for (int g = 0; g < 2; ++g) {
    out[2 * g] = gen[g];
    std::vector<Letter> inv(gen[g].rbegin(), gen[g].rend());
    for (Letter& x : inv) x = inverse(x);
    out[2 * g + 1] = inv;
  }
  return out;
}

std::size_t read_orbit_cap() {
  if (const char* s = std::getenv("WAVEKIT_MAX_ORBIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return std::size_t(v);
  }
  return 1000000;
}

}  // namespace

std::string to_string(const BasisMove& m) {
  static const char* kA[4] = {"A->AB", "A->Ab", "A->BA", "A->bA"};
  static const char* kB[4] = {"B->BA", "B->Ba", "B->AB", "B->aB"};
  switch (m.kind) {
    case MoveKind::ReplaceA: return kA[m.variant];
    case MoveKind::ReplaceB: return kB[m.variant];
    case MoveKind::SwapGenerators: return "swap";
    case MoveKind::InvertGenerator: return m.variant == 0 ? "A->a" : "B->b";
  }
  return "?";
}

BasisMove parse_move(const std::string& s) {
  if (s == "swap") return {MoveKind::SwapGenerators, 0};
  if (s == "A->a") return {MoveKind::InvertGenerator, 0};
  if (s == "B->b") return {MoveKind::InvertGenerator, 1};
  for (int v = 0; v < 4; ++v) {
    if (to_string(BasisMove{MoveKind::ReplaceA, v}) == s) return {MoveKind::ReplaceA, v};
    if (to_string(BasisMove{MoveKind::ReplaceB, v}) == s) return {MoveKind::ReplaceB, v};
  }
  throw Error("FormatError", "unknown move " + s);
}

const std::array<BasisMove, 8>& transvections() {
  static const std::array<BasisMove, 8> kMoves{{{MoveKind::ReplaceA, 0},
                                                {MoveKind::ReplaceA, 1},
                                                {MoveKind::ReplaceA, 2},
                                                {MoveKind::ReplaceA, 3},
                                                {MoveKind::ReplaceB, 0},
                                                {MoveKind::ReplaceB, 1},
                                                {MoveKind::ReplaceB, 2},
                                                {MoveKind::ReplaceB, 3}}};
  return kMoves;
}

BasisMove inverse_move(const BasisMove& m) {
  if (m.kind == MoveKind::ReplaceA || m.kind == MoveKind::ReplaceB) return {m.kind, m.variant ^ 1};
  return m;
}

Trace inverse_trace(const Trace& t) {
  Trace out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back(inverse_move(*it));
  return out;
}

CyclicWord apply_move(const CyclicWord& w, const BasisMove& m) {
  auto img = images(m);
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter x : w.letters()) {
    const auto& s = img[std::uint8_t(x)];
    out.insert(out.end(), s.begin(), s.end());
  }
  return reduce(CyclicWord(std::move(out), w.label()));
}

CyclicWord apply_trace(const CyclicWord& w, const Trace& t) {
  CyclicWord out = w;
  for (const auto& m : t) out = apply_move(out, m);
  return out;
}

std::array<std::array<long, 2>, 2> move_matrix(const BasisMove& m) {
  auto img = images(m);
  AbelianImage ia = abelianize(CyclicWord(img[0])), ib = abelianize(CyclicWord(img[2]));
  return {{{ia.a, ib.a}, {ia.b, ib.b}}};
}

const char* case_name(BandsumCase c) {
  switch (c) {
    case BandsumCase::CrossesEdges: return "crosses_edges";
    case BandsumCase::FaceNonparallel: return "face_nonparallel";
    case BandsumCase::EdgeParallel: return "edge_parallel";
  }
  return "?";
}

// The bandsum C of the two disk boundaries along a band meets R in
// |R.D_A| + |R.D_B| points plus two per arc crossed by the band, minus two
// per arc parallel to the band (those bound bigons with C). Keeping D_A the
// complexity becomes |R.D_A| + |R.C|, so the change is |R.D_A| - 2c + 2k.
// With a = |R.D_A| - c and b = |R.D_B| - c the edge case reads a - c, b - c.
// On words, keeping D_A is the substitution on A whose inserted B cancels
// against the c parallel arcs; keeping D_B is the matching substitution on B.
BandsumClass classify_bandsum(const EmbeddedDiagram& d, const BandRef& band) {
  int u = band.u, v = band.v;
  if (u < 0 || u > 3 || v < 0 || v > 3 || (u >> 1) == (v >> 1)) throw Error("UnknownBand", "band must join an A-circle to a B-circle");
  if (u > v) std::swap(u, v);
  int na = 0, nb = 0;
  for (const auto& w : d.curves) {
    na += count_generator(w, 0);
    nb += count_generator(w, 1);
  }
  BandsumClass out;
  out.kind = band.kind;
  switch (band.kind) {
    case BandsumCase::EdgeParallel: {
      const int c = derive_graph(d).mult[u][v];
      if (c == 0) throw Error("UnknownBand", std::string("no arcs join ") + circle_name(u) + " and " + circle_name(v));
      out.params = {na - c, nb - c, c};
      out.deltas = {na - 2 * c, nb - 2 * c};
      // (u, v) in {A+,A-} x {B+,B-}
      static const int kVariantA[2][2] = {{0, 1}, {3, 2}};
      static const int kVariantB[2][2] = {{0, 3}, {1, 2}};
      out.moves = std::array<BasisMove, 2>{BasisMove{MoveKind::ReplaceA, kVariantA[u][v - 2]},
                                           BasisMove{MoveKind::ReplaceB, kVariantB[u][v - 2]}};
      break;
    }
    case BandsumCase::FaceNonparallel:
      out.params = {na, nb, 0};
      out.deltas = {na, nb};
      break;
    case BandsumCase::CrossesEdges:
      if (band.crossings < 1) throw Error("UnknownBand", "crossing band must cross at least one arc");
      out.params = {na, nb, 0};
      out.deltas = {na + 2 * band.crossings, nb + 2 * band.crossings};
      break;
  }
  return out;
}

MinimizeResult whitehead_minimize(const CyclicWord& w) {
  MinimizeResult r{reduce(w), {}};
  while (true) {
    std::optional<CyclicWord> best, best_key;
    BasisMove best_move;
    for (const auto& m : transvections()) {
      CyclicWord x = apply_move(r.minimal, m);
      if (x.size() >= r.minimal.size()) continue;
      CyclicWord key = canonical_form(x);
      if (!best || x.size() < best->size() || (x.size() == best->size() && key < *best_key)) {
        best = x;
        best_key = key;
        best_move = m;
      }
    }
    if (!best) return r;
    r.minimal = std::move(*best);
    r.trace.push_back(best_move);
  }
}

JointMinimizeResult joint_minimize(const std::vector<CyclicWord>& ws) {
  JointMinimizeResult r;
  for (const auto& w : ws) r.minimal.push_back(reduce(w));
  auto total = [](const std::vector<CyclicWord>& v) {
    std::size_t n = 0;
    for (const auto& w : v) n += w.size();
    return n;
  };
  while (true) {
    std::optional<std::vector<CyclicWord>> best, best_key;
    BasisMove best_move;
    for (const auto& m : transvections()) {
      std::vector<CyclicWord> x, key;
      for (const auto& w : r.minimal) {
        x.push_back(apply_move(w, m));
        key.push_back(canonical_form(x.back()));
      }
      if (total(x) >= total(r.minimal)) continue;
      if (!best || total(x) < total(*best) || (total(x) == total(*best) && key < *best_key)) {
        best = x;
        best_key = key;
        best_move = m;
      }
    }
    if (!best) return r;
    r.minimal = std::move(*best);
    r.trace.push_back(best_move);
  }
}

std::size_t max_orbit_size() {
  static const std::size_t cap = read_orbit_cap();
  return cap;
}

std::vector<OrbitEntry> enumerate_minimal_orbit(const CyclicWord& w) {
  MinimizeResult start = whitehead_minimize(w);
  const std::size_t cap = max_orbit_size();
  std::vector<OrbitEntry> out{{start.minimal, start.trace}};
  std::unordered_map<CyclicWord, std::size_t, WordHash> seen;
  seen.emplace(canonical_form(start.minimal, kAllSymmetries), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& m : transvections()) {
      CyclicWord x = apply_move(out[head].word, m);
      if (x.size() != start.minimal.size()) continue;
      if (!seen.emplace(canonical_form(x, kAllSymmetries), out.size()).second) continue;
      if (out.size() >= cap) throw Error("OrbitTooLarge", "more than " + std::to_string(cap) + " words");
      Trace t = out[head].trace;
      t.push_back(m);
      out.push_back({std::move(x), std::move(t)});
    }
  }
  return out;
}

std::vector<CyclicWord> minimal_orbit(const CyclicWord& w) {
  std::vector<CyclicWord> out;
  for (const auto& e : enumerate_minimal_orbit(w)) out.push_back(canonical_form(e.word, kAllSymmetries));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Exponents of maximal syllables of generator g, read cyclically. Requires
// both generators present.
std::vector<int> syllables(const CyclicWord& w, int g) {
  const std::size_t n = w.size();
  std::size_t start = 0;
  while (generator(w[start]) == generator(w.cyclic(long(start) - 1))) ++start;
  std::vector<int> out;
  int run = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Letter x = w[(start + i) % n];
    if (generator(x) == g) {
      ++run;
    } else if (run > 0) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run > 0) out.push_back(run);
  return out;
}

}  // namespace

// Cyclically reduced w is primitive iff, up to inverting generators and
// swapping them, every A-syllable is A and the B-syllable exponents take
// values in {e, e+1}. Then A -> A B^-e shortens w and we repeat.
bool cmz_is_primitive(const CyclicWord& input) {
  CyclicWord w = reduce(input);
  while (true) {
    if (w.size() <= 1) return w.size() == 1;
    if (!is_sign_uniform(w)) return false;
    for (int g = 0; g < 2; ++g) {
      auto it = std::find_if(w.letters().begin(), w.letters().end(), [g](Letter x) { return generator(x) == g; });
      if (it != w.letters().end() && sign(*it) < 0) w = apply_move(w, {MoveKind::InvertGenerator, g});
    }
    if (count_generator(w, 0) == 0 || count_generator(w, 1) == 0) return false;
    auto sa = syllables(w, 0);
    if (std::any_of(sa.begin(), sa.end(), [](int k) { return k != 1; })) {
      w = apply_move(w, {MoveKind::SwapGenerators, 0});
      sa = syllables(w, 0);
      if (std::any_of(sa.begin(), sa.end(), [](int k) { return k != 1; })) return false;
    }
    auto sb = syllables(w, 1);
    const int e = *std::min_element(sb.begin(), sb.end());
    if (std::any_of(sb.begin(), sb.end(), [e](int k) { return k > e + 1; })) return false;
    std::vector<Letter> out;
    for (Letter x : w.letters()) {
      out.push_back(x);
      if (x == Letter::A) out.insert(out.end(), std::size_t(e), Letter::b);
    }
    w = reduce(CyclicWord(std::move(out)));
  }
}

PrimitivityClass is_primitive_or_proper_power(const CyclicWord& w) {
  PrimitivityClass out;
  if (cmz_is_primitive(w)) {
    out.kind = PrimitivityKind::Primitive;
  } else if (auto root = proper_power_root(reduce(w))) {
    out.kind = PrimitivityKind::ProperPower;
    out.root_primitive = cmz_is_primitive(root->root);
    out.power = std::move(root);
  }
  return out;
}

bool is_primitive_or_power(const CyclicWord& w) {
  return is_primitive_or_proper_power(w).kind != PrimitivityKind::Neither;
}

bool nonpositivity_screen(const CyclicWord& w) {
  DiagramGraph g = graph_of_words({w});
  if (g.form != GraphForm::FormI || !is_eligible(g)) return false;
  bool seen[4] = {false, false, false, false};
  const long n = long(w.size());
  for (long k = 0; k < n; ++k) {
    Letter x = w[std::size_t(k)], y = w.cyclic(k + 1);
    if (x == y) seen[std::uint8_t(x)] = true;
  }
  return seen[0] && seen[1] && seen[2] && seen[3];
}

std::optional<OrbitEntry> positive_representative(const CyclicWord& w) {
  for (auto& e : enumerate_minimal_orbit(w)) {
    if (!is_sign_uniform(e.word) || !is_eligible(graph_of_words({e.word}))) continue;
    for (int g = 0; g < 2; ++g) {
      auto it = std::find_if(e.word.letters().begin(), e.word.letters().end(),
                             [g](Letter x) { return generator(x) == g; });
      if (it != e.word.letters().end() && sign(*it) < 0) {
        BasisMove m{MoveKind::InvertGenerator, g};
        e.word = apply_move(e.word, m);
        e.trace.push_back(m);
      }
    }
    return e;
  }
  return std::nullopt;
}

bool is_positive_curve(const CyclicWord& w) {
  const CyclicWord m = whitehead_minimize(w).minimal;
  if (m.empty() || nonpositivity_screen(m)) return false;
  return positive_representative(m).has_value();
}

}  // namespace wavekit
