#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavekit {

// Letter order A < a < B < b is the numeric order of the enumerators.
enum class Letter : std::uint8_t { A = 0, a = 1, B = 2, b = 3 };

constexpr Letter inverse(Letter x) { return Letter(std::uint8_t(x) ^ 1u); }
constexpr int generator(Letter x) { return std::uint8_t(x) >> 1; }  // 0 = A, 1 = B
constexpr int sign(Letter x) { return (std::uint8_t(x) & 1u) ? -1 : 1; }
constexpr Letter make_letter(int gen, int sgn) {
  return Letter(std::uint8_t(2 * gen + (sgn < 0 ? 1 : 0)));
}
char to_char(Letter x);

class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::vector<Letter> letters, std::string label = {})
      : letters_(std::move(letters)), label_(std::move(label)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  // Index taken modulo the length, negative allowed.
  Letter cyclic(long i) const;

  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  // Comparison ignores the label.
  friend bool operator==(const CyclicWord& x, const CyclicWord& y) { return x.letters_ == y.letters_; }
  friend std::strong_ordering operator<=>(const CyclicWord& x, const CyclicWord& y) {
    return x.letters_ <=> y.letters_;
  }

 private:
  std::vector<Letter> letters_;
  std::string label_;
};

struct AbelianImage {
  long a = 0;
  long b = 0;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
  AbelianImage operator-() const { return {-a, -b}; }
  AbelianImage operator+(const AbelianImage& o) const { return {a + o.a, b + o.b}; }
};

struct PowerRoot {
  CyclicWord root;
  int exponent = 1;
};

enum Symmetry : unsigned {
  kRotation = 1u,
  kInversion = 2u,
  kGeneratorSwap = 4u,
  kGeneratorInversion = 8u,
  kCurveSymmetries = kRotation | kInversion,
  kAllSymmetries = 15u,
};

CyclicWord parse_word(std::string_view text);
std::string to_string(const CyclicWord& w);

CyclicWord reduce(const CyclicWord& w);
bool is_reduced(const CyclicWord& w);
CyclicWord invert(const CyclicWord& w);
CyclicWord rotate(const CyclicWord& w, long k);
CyclicWord power(const CyclicWord& w, int k);
CyclicWord concat(const CyclicWord& x, const CyclicWord& y);

// Start index of the lexicographically least rotation.
std::size_t least_rotation(const std::vector<Letter>& s);
CyclicWord canonical_form(const CyclicWord& w, unsigned symmetries = kCurveSymmetries);
bool same_curve(const CyclicWord& x, const CyclicWord& y);

AbelianImage abelianize(const CyclicWord& w);
std::optional<PowerRoot> proper_power_root(const CyclicWord& w);

// Every letter of each generator carries the same sign.
bool is_sign_uniform(const CyclicWord& w);
// Word uses only the letters A and B.
bool is_positive_word(const CyclicWord& w);
int count_generator(const CyclicWord& w, int gen);

struct WordHash {
  std::size_t operator()(const CyclicWord& w) const noexcept;
};

}  // namespace wavekit
