#pragma once

#include <string>

#include "wavekit/waves.hpp"
#include "wavekit/word.hpp"

inline wavekit::CyclicWord W(const std::string& s) { return wavekit::parse_word(s); }
inline std::string S(const wavekit::CyclicWord& w) { return wavekit::to_string(w); }
inline std::string C(const std::string& s) { return S(wavekit::canonical_form(wavekit::reduce(W(s)))); }

// "m1 m2" as canonical words, shorter first.
inline std::string pair_key(const wavekit::CyclicWord& x, const wavekit::CyclicWord& y) {
  auto [a, b] = wavekit::canonical_pair(x, y);
  return S(a) + " " + S(b);
}
inline std::string pair_key(const wavekit::MeridianPair& p) { return pair_key(p.m1, p.m2); }
