#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "wavekit/error.hpp"
#include "wavekit/recognition.hpp"
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

bool in_family(Verdict v) {
  return v == Verdict::S3 || v == Verdict::S1xS2 || v == Verdict::S1xS2_connect_sum_Lp;
}

const char* kFamilyFixtures[] = {"AABBB", "AAAAAAABBAAAABB", "AAAAAAABAAABAAAAAAABB", "BBAABBAAAAABBAAB"};

}  // namespace

TEST_CASE("homology_of_filling") {
  CHECK(homology_of_filling(W("AAABAbbbAB"), W("Abb")).str() == "Z/9");
  CHECK(homology_of_filling(W("AABBAABaBaB"), W("ABaB")).str() == "Z/4");
  CHECK(homology_of_filling(W("A"), W("B")).trivial());
  CHECK(homology_of_filling(W("AB"), W("ab")).str() == "Z");
  CHECK(homology_of_filling(W("AA"), W("AAAA")).str() == "Z + Z/2");
  CHECK(homology_of_relators({}).str() == "Z^2");
  const FillingHomology h = homology_of_filling(W("AAB"), W("ABBB"));
  CHECK(h.order() == 5);
  CHECK(h.rank() == 0);
}

TEST_CASE("smith form against minors and determinants") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-12, 12);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::array<long, 2>> rows(1 + i % 3);
    std::vector<std::vector<long>> m;
    for (auto& r : rows) {
      r = {entry(rng), entry(rng)};
      m.push_back({r[0], r[1]});
    }
    std::vector<long> diag = smith_diagonal(m, 2);
    diag.resize(2, 0);
    CHECK(diag == oracle::invariant_factors(rows));
    if (rows.size() == 2) {
      const long det = std::labs(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]);
      FillingHomology h;
      for (long d : diag)
        if (d != 1) h.factors.push_back(d);
      if (det != 0) CHECK(h.order() == det);
      else CHECK(h.rank() >= 1);
    }
  }
}

TEST_CASE("recognize_closed examples") {
  CHECK(recognize_closed(embed_curves({W("A"), W("B")})).verdict == Verdict::S3);
  CHECK(recognize_closed(embed_curves({W("AABBB"), W("AB")})).verdict == Verdict::S3);
  const RecognitionResult r = recognize_closed(embed_curves({W("A"), W("BB")}));
  CHECK(r.verdict == Verdict::NotInFamily);
  CHECK(r.reason == "homology Z/2");
  CHECK(recognize_words(W("A"), W("AB")).verdict == Verdict::S3);
  const RecognitionResult x = recognize_words(W("AA"), W("B"));
  CHECK(x.verdict == Verdict::NotInFamily);
}

TEST_CASE("recognize_closed input checks") {
  CHECK(code_of([] { recognize_closed(embed_single_word(W("AABBB"))); }) == "InputInvalid");
  CHECK(code_of([] { recognize_words(W("AB"), W("AB")); }) == "InputInvalid");
  CHECK(code_of([] { recognize_words(W("Aa"), W("B")); }) == "InputInvalid");
}

TEST_CASE("recognition traces keep homology and shrink") {
  for (const char* w : kFamilyFixtures) {
    const MeridianPair mp = distinguished_meridian_pair(W(w));
    const RecognitionResult r = recognize_closed(mp.pair_diagram);
    CHECK(in_family(r.verdict));
    REQUIRE_FALSE(r.trace.empty());
    const FillingHomology h0 = homology_of_filling(mp.m1, mp.m2);
    std::size_t last = 0;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      const auto& [x, y] = r.trace[i];
      CHECK(homology_of_filling(x, y) == h0);
      const std::size_t len = whitehead_minimize(x).minimal.size() + whitehead_minimize(y).minimal.size();
      if (i > 0) CHECK(len <= last);
      last = len;
    }
    // Recognition stops at the first primitive or proper power.
    const auto& [x, y] = r.trace.back();
    CHECK((is_primitive_or_power(x) || is_primitive_or_power(y)));
  }
}

TEST_CASE("embeds_in_family") {
  CHECK(embeds_in_family(W("AABBB")).verdict == Verdict::S3);
  const FamilyResult m011 = embeds_in_family(W("AAABAbbbAB"));
  CHECK(m011.verdict == Verdict::DoesNotEmbed);
  CHECK(m011.describe().find("Z/9") != std::string::npos);
  CHECK(embeds_in_family(W("AAAAAAABBAAAABB")).verdict == Verdict::S3);
  CHECK(code_of([] { embeds_in_family(W("AB")); }) == "BoundaryCompressible");
  // S1xS2 knot exteriors turn up too.
  CHECK(embeds_in_family(W("BAAAABAAAABABBA")).verdict == Verdict::S1xS2);
}

TEST_CASE("is_11_tunnel and constituents") {
  CHECK(is_11_tunnel(W("AABBB")));
  CHECK(is_11_tunnel(W("AAAAAAABBAAAABB")));
  CHECK(code_of([] { is_11_tunnel(W("AAABAbbbAB")); }) == "NotAKnotExteriorInS3orS1xS2");
  // Neither meridian of this depth-two tunnel is primitive.
  CHECK_FALSE(is_11_tunnel(W("BBAABBAAAAABBAAB")));

  const ConstituentReport t = canonical_constituents(W("AABBB"));
  CHECK(S(t.constituents[0].word) == "AB");
  CHECK(S(t.constituents[1].word) == "ABB");
  CHECK(t.constituents[0].primitive);
  CHECK(t.constituents[1].primitive);
  CHECK(t.is_11);

  const ConstituentReport k = canonical_constituents(W("AAAAAAABBAAAABB"));
  const Constituent& c = S(k.constituents[0].word) == "AAAB" ? k.constituents[0] : k.constituents[1];
  CHECK(S(c.word) == "AAAB");
  CHECK(c.primitive);
  CHECK(c.homology.trivial());
  CHECK(k.is_11);
  CHECK(code_of([] { canonical_constituents(W("AB")); }) == "BoundaryCompressible");
  CHECK(code_of([] { canonical_constituents(W("AAABAbbbAB")); }) == "NotInFamily");
}

TEST_CASE("primitive meridian representatives are distinguished") {
  // Surgery along every wave of every eligible minimal diagram. Whenever the
  // resulting pair presents a member of the family, its primitive or
  // proper-power members must be among the distinguished pair.
  for (const char* w : kFamilyFixtures) {
    const CyclicWord r = W(w);
    const MeridianPair mp = distinguished_meridian_pair(r);
    int checked = 0;
    for (const auto& e : enumerate_minimal_orbit(r)) {
      const EmbeddedDiagram d = embed_single_word(e.word);
      if (!is_eligible(derive_graph(d))) continue;
      const Trace back = inverse_trace(e.trace);
      for (const Wave& wave : find_waves(d, 0)) {
        const SurgeryResult s = cut_along(d, wave);
        if (!in_family(recognize_closed(s.diagram).verdict)) continue;
        for (const CyclicWord& m : {s.m1, s.m2}) {
          if (!is_primitive_or_power(m)) continue;
          const CyclicWord x = canonical_form(apply_trace(m, back));
          CHECK_MESSAGE((x == mp.m1 || x == mp.m2), w, " ", S(x));
          ++checked;
        }
      }
    }
    if (is_primitive_or_power(mp.m1) || is_primitive_or_power(mp.m2)) CHECK(checked > 0);
  }
}
