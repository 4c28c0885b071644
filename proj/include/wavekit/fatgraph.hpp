#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wavekit/word.hpp"

namespace wavekit {

// Vertex circles: boundary copies of the cut disks D_A and D_B.
enum Circle : int { kAPlus = 0, kAMinus = 1, kBPlus = 2, kBMinus = 3 };

const char* circle_name(int c);
// A departs from A+ and arrives through A-; a reverses the roles.
constexpr int exit_circle(Letter x) { return 2 * generator(x) + (std::uint8_t(x) & 1); }
constexpr int entry_circle(Letter x) { return exit_circle(x) ^ 1; }

struct Slot {
  int curve = 0;
  int index = 0;  // occurrence = letter position in the curve word
  friend bool operator==(const Slot&, const Slot&) = default;
};

// Arc k of a curve runs from the exit slot of letter k to the entry slot of
// letter k+1. A dart is one end of an arc: end 0 sits on the exit circle of
// letter k, end 1 on the entry circle of letter k+1. Walking a face from a
// dart traverses its arc away from that end.
struct Dart {
  int curve = 0;
  int gap = 0;
  int end = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct EmbeddedDiagram {
  std::vector<CyclicWord> curves;
  std::array<std::vector<Slot>, 4> slots;  // counterclockwise slot order per circle

  int arc_count() const;
};

enum class GraphForm { FormI, FormII, FormIII };
const char* form_name(GraphForm f);

// Multiplicities use the parameters
//   a = |A+A-|, b = |B+B-|, c = |A+B+| = |A-B-|, d = |A+B-| = |A-B+|.
// FormI: c, d > 0 (mixed edges close a 4-cycle A+ B+ A- B-).
// FormII: exactly one of c, d positive and a, b > 0 (4-cycle A+ A- B B).
// FormIII: everything else, i.e. disconnected or with a cut vertex.
struct DiagramGraph {
  std::array<std::array<int, 4>, 4> mult{};
  GraphForm form = GraphForm::FormIII;
  // (a, mixed, b) for FormII; the mixed entry is whichever of c, d is nonzero.
  std::optional<std::array<int, 3>> positive_params;

  int a() const { return mult[kAPlus][kAMinus]; }
  int b() const { return mult[kBPlus][kBMinus]; }
  int c() const { return mult[kAPlus][kBPlus]; }
  int d() const { return mult[kAPlus][kBMinus]; }
  int edge_count() const;
};

struct Face {
  // Boundary cycles of the piece. Each cycle lists the darts whose arcs are
  // walked; between consecutive darts the walk follows a circle segment.
  std::vector<std::vector<Dart>> cycles;
  std::vector<int> bare_circles;  // circles without slots that bound this piece
  int euler_characteristic = 1;
};

// Letter-pair multiplicities straight from words; no embedding needed.
DiagramGraph graph_of_words(const std::vector<CyclicWord>& words);
DiagramGraph derive_graph(const EmbeddedDiagram& d);
bool is_connected(const DiagramGraph& g);
bool has_cut_vertex(const DiagramGraph& g);
bool is_eligible(const DiagramGraph& g);  // connected and no cut vertex

// Searches band decompositions and slot orders for a planar embedding of the
// given disjoint curves (one or two). Throws NotRealizable.
EmbeddedDiagram embed_curves(const std::vector<CyclicWord>& words);
EmbeddedDiagram embed_single_word(const CyclicWord& w);
// Every distinct planar embedding found by the same search, up to `limit`.
// A word may realize several curves that no disk-preserving symmetry
// relates; embed_curves returns the first in search order.
std::vector<EmbeddedDiagram> all_embeddings(const std::vector<CyclicWord>& words, std::size_t limit = 64);
bool is_realizable(const CyclicWord& w);

// Throws InvariantViolation naming the failed check.
void validate(const EmbeddedDiagram& d);

// Diagram text format:
//   g2diagram 1
//   curve <id> <word>
//   slots A+ : <id>.<index> ...      (likewise A-, B+, B-)
// Lines starting with '#' are comments. parse_diagram only checks syntax;
// embed_pair also validates. Both throw FormatError.
EmbeddedDiagram parse_diagram(std::istream& in);
EmbeddedDiagram embed_pair(std::istream& in);
EmbeddedDiagram load_diagram(const std::string& path);
std::string format_diagram(const EmbeddedDiagram& d);

// Subdiagram keeping only the listed curves, renumbered in the given order.
EmbeddedDiagram restrict_curves(const EmbeddedDiagram& d, const std::vector<int>& keep);

std::vector<Face> faces(const EmbeddedDiagram& d);

// True when the curve cuts the closed surface in two: the pieces of its own
// subdiagram, glued across matching circle segments, fall into two classes.
bool is_separating(const EmbeddedDiagram& d, int curve);

// Traces the curves through the slot geometry alone (positions and the disk
// identifications) and returns the words read off, one per closed component.
std::vector<CyclicWord> read_back(const EmbeddedDiagram& d);

// Position lookup for slots and darts.
class DiagramIndex {
 public:
  explicit DiagramIndex(const EmbeddedDiagram& d);

  int exit_pos(int curve, int k) const { return exit_pos_[curve][k]; }
  int entry_pos(int curve, int k) const { return entry_pos_[curve][k]; }
  int dart_id(const Dart& x) const { return offset_[x.curve] + 2 * x.gap + x.end; }
  Dart dart(int id) const { return darts_[id]; }
  int dart_count() const { return int(darts_.size()); }
  // Circle and position where the dart's arc end is attached.
  int dart_circle(const Dart& x) const;
  int dart_pos(const Dart& x) const;
  Dart dart_at(int circle, int pos) const;
  Dart opposite(const Dart& x) const { return {x.curve, x.gap, 1 - x.end}; }
  // Next dart counterclockwise around the same circle.
  Dart next_around(const Dart& x) const;
  // Face successor: cross the arc, then turn to the next dart.
  Dart face_next(const Dart& x) const { return next_around(opposite(x)); }

  const EmbeddedDiagram& diagram() const { return *d_; }

 private:
  const EmbeddedDiagram* d_;
  std::vector<std::vector<int>> exit_pos_, entry_pos_;
  std::vector<int> offset_;
  std::vector<Dart> darts_;
};

// Face cycles of a connected or disconnected diagram, one list per orbit of
// face_next, in first-visit order of dart ids.
std::vector<std::vector<Dart>> dart_cycles(const DiagramIndex& ix);

}  // namespace wavekit
