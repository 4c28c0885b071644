#include "wavekit/word.hpp"

#include <algorithm>
#include <array>

#include "wavekit/error.hpp"

namespace wavekit {

char to_char(Letter x) {
  static constexpr char kChars[] = {'A', 'a', 'B', 'b'};
  return kChars[std::uint8_t(x)];
}

Letter CyclicWord::cyclic(long i) const {
  const long n = long(letters_.size());
  return letters_[std::size_t(((i % n) + n) % n)];
}

CyclicWord parse_word(std::string_view text) {
  if (text.empty()) throw Error("EmptyWord", "");
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'A': out.push_back(Letter::A); break;
      case 'a': out.push_back(Letter::a); break;
      case 'B': out.push_back(Letter::B); break;
      case 'b': out.push_back(Letter::b); break;
      default: throw Error("IllegalCharacter", "position " + std::to_string(i));
    }
  }
  return CyclicWord(std::move(out));
}

std::string to_string(const CyclicWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w.letters()) s.push_back(to_char(x));
  return s;
}

CyclicWord reduce(const CyclicWord& w) {
  std::vector<Letter> st;
  st.reserve(w.size());
  for (Letter x : w.letters()) {
    if (!st.empty() && st.back() == inverse(x)) st.pop_back();
    else st.push_back(x);
  }
  std::size_t i = 0, j = st.size();
  while (j - i >= 2 && st[i] == inverse(st[j - 1])) ++i, --j;
  return CyclicWord(std::vector<Letter>(st.begin() + long(i), st.begin() + long(j)), w.label());
}

bool is_reduced(const CyclicWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return true;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] == inverse(w[(i + 1) % n])) return false;
  return true;
}

CyclicWord invert(const CyclicWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& x : out) x = inverse(x);
  return CyclicWord(std::move(out), w.label());
}

CyclicWord rotate(const CyclicWord& w, long k) {
  if (w.empty()) return w;
  const long n = long(w.size());
  k = ((k % n) + n) % n;
  std::vector<Letter> out(w.letters());
  std::rotate(out.begin(), out.begin() + k, out.end());
  return CyclicWord(std::move(out), w.label());
}

CyclicWord power(const CyclicWord& w, int k) {
  std::vector<Letter> out;
  out.reserve(w.size() * std::size_t(std::max(k, 0)));
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return CyclicWord(std::move(out));
}

CyclicWord concat(const CyclicWord& x, const CyclicWord& y) {
  std::vector<Letter> out(x.letters());
  out.insert(out.end(), y.letters().begin(), y.letters().end());
  return CyclicWord(std::move(out));
}

// Two-pointer minimal rotation (Duval style), O(n).
std::size_t least_rotation(const std::vector<Letter>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter x = s[(i + k) % n], y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) i += k + 1;
    else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

namespace {

std::vector<Letter> least_rotated(const std::vector<Letter>& s) {
  std::vector<Letter> out(s);
  if (!out.empty()) std::rotate(out.begin(), out.begin() + long(least_rotation(s)), out.end());
  return out;
}

std::vector<Letter> relabel(const std::vector<Letter>& s, const std::array<Letter, 4>& map) {
  std::vector<Letter> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = map[std::uint8_t(s[i])];
  return out;
}

}  // namespace

CyclicWord canonical_form(const CyclicWord& w, unsigned symmetries) {
  std::vector<std::array<Letter, 4>> maps{{Letter::A, Letter::a, Letter::B, Letter::b}};
  if (symmetries & kGeneratorInversion) {
    const std::size_t n = maps.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto m = maps[i];
      std::array<Letter, 4> fa{inverse(m[0]), inverse(m[1]), m[2], m[3]};
      std::array<Letter, 4> fb{m[0], m[1], inverse(m[2]), inverse(m[3])};
      std::array<Letter, 4> fab{inverse(m[0]), inverse(m[1]), inverse(m[2]), inverse(m[3])};
      maps.push_back(fa);
      maps.push_back(fb);
      maps.push_back(fab);
    }
  }
  if (symmetries & kGeneratorSwap) {
    const std::size_t n = maps.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto m = maps[i];
      maps.push_back({m[2], m[3], m[0], m[1]});
    }
  }
  std::vector<Letter> best;
  bool have = false;
  auto consider = [&](std::vector<Letter> v) {
    if (symmetries & kRotation) v = least_rotated(v);
    if (!have || v < best) {
      best = std::move(v);
      have = true;
    }
  };
  for (const auto& m : maps) {
    auto v = relabel(w.letters(), m);
    consider(v);
    if (symmetries & kInversion) {
      std::reverse(v.begin(), v.end());
      for (Letter& x : v) x = inverse(x);
      consider(std::move(v));
    }
  }
  return CyclicWord(std::move(best), w.label());
}

bool same_curve(const CyclicWord& x, const CyclicWord& y) {
  return x.size() == y.size() && canonical_form(x) == canonical_form(y);
}

AbelianImage abelianize(const CyclicWord& w) {
  AbelianImage r;
  for (Letter x : w.letters()) (generator(x) == 0 ? r.a : r.b) += sign(x);
  return r;
}

std::optional<PowerRoot> proper_power_root(const CyclicWord& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) {
      std::vector<Letter> root(w.letters().begin(), w.letters().begin() + long(p));
      return PowerRoot{CyclicWord(std::move(root)), int(n / p)};
    }
  }
  return std::nullopt;
}

bool is_sign_uniform(const CyclicWord& w) {
  int seen[2] = {0, 0};
  for (Letter x : w.letters()) {
    int& s = seen[generator(x)];
    if (s == 0) s = sign(x);
    else if (s != sign(x)) return false;
  }
  return true;
}

bool is_positive_word(const CyclicWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](Letter x) { return sign(x) > 0; });
}

int count_generator(const CyclicWord& w, int gen) {
  return int(std::count_if(w.letters().begin(), w.letters().end(),
                           [gen](Letter x) { return generator(x) == gen; }));
}

std::size_t WordHash::operator()(const CyclicWord& w) const noexcept {
  std::size_t h = w.size();
  for (Letter x : w.letters()) h = h * 0x9E3779B97F4A7C15ull + std::uint8_t(x) + 1;
  return h;
}

}  // namespace wavekit
