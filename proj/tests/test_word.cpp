#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "wavekit/error.hpp"

using namespace wavekit;

TEST_CASE("parse_word transcribes letters without reducing") {
  CHECK(W("AABaB").size() == 5);
  const CyclicWord w = W("Abb");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter::A);
  CHECK(w[1] == Letter::b);
  CHECK(w[2] == Letter::b);
  CHECK(W("AaB").size() == 3);
}

TEST_CASE("parse_word rejects bad input") {
  try {
    parse_word("AxB");
    FAIL("expected IllegalCharacter");
  } catch (const Error& e) {
    CHECK(e.code() == "IllegalCharacter");
    CHECK(e.detail() == "position 1");
  }
  try {
    parse_word("");
    FAIL("expected EmptyWord");
  } catch (const Error& e) {
    CHECK(e.code() == "EmptyWord");
  }
}

TEST_CASE("reduce cancels freely and across the seam") {
  CHECK(S(reduce(W("AaB"))) == "B");
  CHECK(S(reduce(W("BAb"))) == "A");
  CHECK(S(reduce(W("AABB"))) == "AABB");
  CHECK(reduce(W("ABab")).size() == 4);
  CHECK(reduce(W("ABba")).empty());
}

TEST_CASE("canonical_form") {
  CHECK(S(canonical_form(W("BAAB"))) == "AABB");
  CHECK(S(canonical_form(W("BBAA"))) == "AABB");
  // abb inverts to BBA, whose least rotation is ABB.
  CHECK(S(canonical_form(W("abb"))) == "ABB");
  CHECK(S(canonical_form(W("abb"), kRotation)) == "abb");
  CHECK(S(canonical_form(W("BBA"), kAllSymmetries)) == "AAB");
  const CyclicWord w = W("AAABAbbbAB");
  for (long k = 0; k < 10; ++k) CHECK(canonical_form(rotate(w, k)) == canonical_form(w));
}

TEST_CASE("abelianize against letter counting") {
  CHECK(abelianize(W("AAABAbbbAB")) == AbelianImage{5, -1});
  CHECK(abelianize(W("AABBAABaBaB")) == AbelianImage{2, 5});
  CHECK(abelianize(CyclicWord{}) == AbelianImage{0, 0});
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::string s = oracle::random_word(rng, 1 + i % 17);
    const auto v = oracle::letter_count(s);
    const AbelianImage a = abelianize(W(s));
    CHECK(a.a == v[0]);
    CHECK(a.b == v[1]);
  }
}

TEST_CASE("proper_power_root") {
  auto r = proper_power_root(W("ABAB"));
  REQUIRE(r);
  CHECK(S(r->root) == "AB");
  CHECK(r->exponent == 2);
  r = proper_power_root(W("AAAAAA"));
  REQUIRE(r);
  CHECK(S(r->root) == "A");
  CHECK(r->exponent == 6);
  CHECK_FALSE(proper_power_root(W("AAB")));
  // Rotated powers are still powers.
  r = proper_power_root(W("BABA"));
  REQUIRE(r);
  CHECK(r->exponent == 2);
}

TEST_CASE("word invariants over random words") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> len(1, 20), k(2, 4);
  const std::string letters = "AaBb";
  for (int i = 0; i < 400; ++i) {
    // Arbitrary, not necessarily reduced, word.
    std::string s;
    for (int j = len(rng); j > 0; --j) s.push_back(letters[rng() % 4]);
    const CyclicWord w = W(s);
    const CyclicWord r = reduce(w);
    CHECK(reduce(r) == r);
    CHECK(r.size() <= w.size());
    CHECK(abelianize(r) == abelianize(w));
    CHECK(S(r).size() == oracle::cyclic_reduce(s).size());
    if (r.empty()) continue;
    CHECK(abelianize(invert(r)) == -abelianize(r));
    CHECK(abelianize(rotate(r, long(i))) == abelianize(r));
    CHECK(S(canonical_form(r)) == oracle::canon(S(r)));

    const int e = k(rng);
    const CyclicWord p = power(r, e);
    const auto root = proper_power_root(p);
    REQUIRE(root);
    CHECK(root->exponent % e == 0);
  }
}
