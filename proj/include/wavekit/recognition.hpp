#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wavekit/fatgraph.hpp"
#include "wavekit/waves.hpp"
#include "wavekit/word.hpp"

namespace wavekit {

// Invariant factors of Z^2 modulo the rows, d1 | d2, with 1s dropped and 0
// standing for a free factor.
struct FillingHomology {
  std::vector<long> factors;

  bool trivial() const { return factors.empty(); }
  int rank() const;
  // Product of the finite factors, or 0 when the group is infinite.
  long order() const;
  long torsion_order() const;
  std::string str() const;  // "0", "Z", "Z/9", "Z + Z/2", ...
  friend bool operator==(const FillingHomology&, const FillingHomology&) = default;
};

// Smith normal form diagonal of an integer matrix given by rows.
std::vector<long> smith_diagonal(std::vector<std::vector<long>> rows, std::size_t cols);
FillingHomology homology_of_relators(const std::vector<CyclicWord>& relators);
FillingHomology homology_of_filling(const CyclicWord& w1, const CyclicWord& w2);

enum class Verdict { S3, S1xS2, S1xS2_connect_sum_Lp, NotInFamily, NoWaveFound, DoesNotEmbed };
const char* verdict_name(Verdict v);

struct RecognitionResult {
  Verdict verdict = Verdict::NotInFamily;
  long p = 0;          // torsion order for the connected-sum verdict
  std::string reason;  // which test failed for NotInFamily
  // Pairs visited, as canonical words in the basis of the input diagram.
  std::vector<std::pair<CyclicWord, CyclicWord>> trace;
  std::string describe() const;
};

RecognitionResult recognize_closed(const EmbeddedDiagram& d);
// Convenience for pairs without explicit embedding data: the pair is
// embedded by search. Only meaningful when the search result is the
// intended embedding, e.g. handle cores or surgery output.
RecognitionResult recognize_words(const CyclicWord& w1, const CyclicWord& w2);

struct FamilyResult {
  Verdict verdict = Verdict::DoesNotEmbed;
  long p = 0;
  MeridianPair pair;
  RecognitionResult recognition;
  std::string describe() const;
};

FamilyResult embeds_in_family(const CyclicWord& w);
bool is_11_tunnel(const CyclicWord& w);

struct Constituent {
  CyclicWord word;
  bool primitive = false;
  FillingHomology homology;
};

struct ConstituentReport {
  std::array<Constituent, 2> constituents;
  bool is_11 = false;
  FamilyResult family;
};

ConstituentReport canonical_constituents(const CyclicWord& w);

}  // namespace wavekit
