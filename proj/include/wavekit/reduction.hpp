#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wavekit/fatgraph.hpp"
#include "wavekit/word.hpp"

namespace wavekit {

enum class MoveKind { ReplaceA, ReplaceB, SwapGenerators, InvertGenerator };

// ReplaceA substitutes A by a product with B; variant picks the pattern
// 0: AB, 1: Ab, 2: BA, 3: bA. ReplaceB likewise with 0: BA, 1: Ba, 2: AB,
// 3: aB. InvertGenerator: variant 0 inverts A, 1 inverts B.
struct BasisMove {
  MoveKind kind = MoveKind::SwapGenerators;
  int variant = 0;
  friend bool operator==(const BasisMove&, const BasisMove&) = default;
};

using Trace = std::vector<BasisMove>;

std::string to_string(const BasisMove& m);
BasisMove parse_move(const std::string& s);
const std::array<BasisMove, 8>& transvections();

BasisMove inverse_move(const BasisMove& m);
Trace inverse_trace(const Trace& t);
CyclicWord apply_move(const CyclicWord& w, const BasisMove& m);
CyclicWord apply_trace(const CyclicWord& w, const Trace& t);
// Integer matrix sending abelianize(w) to abelianize(apply_move(w, m)).
std::array<std::array<long, 2>, 2> move_matrix(const BasisMove& m);

enum class BandsumCase { CrossesEdges, FaceNonparallel, EdgeParallel };
const char* case_name(BandsumCase c);

// A band joining an A-circle to a B-circle. Edge bands run parallel to the
// arcs joining (u, v); face bands sit in a face without being parallel to an
// edge; crossing bands meet `crossings` arcs of the diagram.
struct BandRef {
  BandsumCase kind = BandsumCase::EdgeParallel;
  int u = kAPlus;
  int v = kBPlus;
  int crossings = 0;
};

struct BandsumClass {
  BandsumCase kind = BandsumCase::EdgeParallel;
  // Parameters (a, b, c): c is the number of arcs parallel to the band,
  // a = |R . D_A| - c and b = |R . D_B| - c. Non-edge bands have c = 0.
  std::array<int, 3> params{};
  // Complexity change when keeping D_A (replacing D_B by the bandsum disk),
  // then when keeping D_B. Edge bands give (a - c, b - c).
  std::array<int, 2> deltas{};
  // For edge bands, the substitutions realizing the two replacements.
  std::optional<std::array<BasisMove, 2>> moves;
};

BandsumClass classify_bandsum(const EmbeddedDiagram& d, const BandRef& band);

struct MinimizeResult {
  CyclicWord minimal;
  Trace trace;
};

MinimizeResult whitehead_minimize(const CyclicWord& w);

// Jointly minimizes total length of several curves under the same moves.
struct JointMinimizeResult {
  std::vector<CyclicWord> minimal;
  Trace trace;
};
JointMinimizeResult joint_minimize(const std::vector<CyclicWord>& ws);

struct OrbitEntry {
  CyclicWord word;  // actual word reached, not canonicalized
  Trace trace;      // from the input word
};

// Breadth-first closure under length-preserving moves starting from
// whitehead_minimize(w). One entry per class of the full symmetry group.
// Throws OrbitTooLarge past the cap (env WAVEKIT_MAX_ORBIT, default 1e6).
std::vector<OrbitEntry> enumerate_minimal_orbit(const CyclicWord& w);
std::vector<CyclicWord> minimal_orbit(const CyclicWord& w);
std::size_t max_orbit_size();

bool cmz_is_primitive(const CyclicWord& w);

enum class PrimitivityKind { Primitive, ProperPower, Neither };
struct PrimitivityClass {
  PrimitivityKind kind = PrimitivityKind::Neither;
  std::optional<PowerRoot> power;  // set for ProperPower
  bool root_primitive = false;
};
PrimitivityClass is_primitive_or_proper_power(const CyclicWord& w);
bool is_primitive_or_power(const CyclicWord& w);

// Screen: an eligible FormI word with both AA and aa, and both BB and bb,
// pairs is nonpositive.
bool nonpositivity_screen(const CyclicWord& w);
bool is_positive_curve(const CyclicWord& w);

// First member of the minimal orbit that is sign-uniform with an eligible
// graph, rewritten in positive letters; the trace leads there from w.
std::optional<OrbitEntry> positive_representative(const CyclicWord& w);

}  // namespace wavekit
