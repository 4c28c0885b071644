#pragma once

#include <string>
#include <vector>

#include "wavekit/fatgraph.hpp"
#include "wavekit/reduction.hpp"
#include "wavekit/word.hpp"

namespace wavekit {

enum class WaveKind { UniqueNonpositive, Horizontal, Vertical, Other };
const char* kind_name(WaveKind k);

// An arc inside one face of a diagram joining two arc sides of the base
// curve that lie on the same side of it. end1 and end2 are the darts whose
// walks see those arc sides; equal `end` fields mean the same side.
struct Wave {
  int face = -1;  // index into dart_cycles of the host diagram
  int base_curve = 0;
  Dart end1, end2;
  WaveKind kind = WaveKind::Other;
};

struct MeridianPair {
  CyclicWord m1, m2;           // in the input basis, canonical, shorter first
  EmbeddedDiagram pair_diagram;  // {m1, m2} in the working basis
  CyclicWord base;             // input word
  CyclicWord working;          // representative the wave lives on
  Trace trace;                 // input basis -> working basis
  Wave wave;
  EmbeddedDiagram diagram;     // diagram of `working`
};

// Result of cutting one curve of a diagram along a wave.
struct SurgeryResult {
  CyclicWord m1, m2;          // working-basis words in diagram curve order
  EmbeddedDiagram diagram;    // base curve replaced by m1, m2 (appended last)
};

// One wave per class of surgery outcome, in dart order.
std::vector<Wave> find_waves(const EmbeddedDiagram& d, int base);
Wave distinguished_wave(const EmbeddedDiagram& d);
SurgeryResult cut_along(const EmbeddedDiagram& d, const Wave& w);
// Same, but the base curve stays in place next to its two pushoffs.
SurgeryResult cut_along_keeping_base(const EmbeddedDiagram& d, const Wave& w);
MeridianPair surgery(const EmbeddedDiagram& d, const Wave& w);

// Minimal representative used for distinguished waves: a positive minimal
// word when the curve has one, otherwise an eligible minimal word. Throws
// BoundaryCompressible when w is primitive, a proper power, or has no
// eligible minimal diagram.
OrbitEntry distinguished_representative(const CyclicWord& w);
MeridianPair distinguished_meridian_pair(const CyclicWord& w);
// Surgery along the vertical wave. A sign-uniform input with an eligible
// graph is used as given; otherwise a positive minimal representative.
MeridianPair vertical_slope_pair(const CyclicWord& w);

// Signed count of crossings between the arcs of `curve` and the wave chord,
// computed in the face of the base curve's own subdiagram that contains the
// wave. The wave must belong to restrict_curves(d, {base}).
int signed_intersection(const EmbeddedDiagram& d, int curve, const Wave& w);

// Distinct surgery pairs over all waves of a single-curve diagram.
std::vector<std::pair<CyclicWord, CyclicWord>> wave_signature(const EmbeddedDiagram& d);
// True when embeddings of w differ in their wave signatures, so the word
// alone does not pin down the curve.
bool embedding_ambiguous(const CyclicWord& w);

// For a two-curve diagram: the curve that a wave based at the other curve
// avoids. With waves at both, the shorter word wins, ties by canonical
// order. -1 when neither curve has a wave.
int shortest_member(const EmbeddedDiagram& d);

// Unordered pair of curves as canonical words, shorter first.
std::pair<CyclicWord, CyclicWord> canonical_pair(const CyclicWord& x, const CyclicWord& y);

}  // namespace wavekit
