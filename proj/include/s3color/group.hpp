#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace s3color {

// The six elements of S3, kept as reduced words in the two generating
// transpositions s and t (relations s^2 = t^2 = e, sts = tst).  The numeric
// order doubles as the element order used everywhere deterministic output is
// required: e < s < t < sts < st < ts.
enum class S3 : std::uint8_t { e = 0, s, t, sts, st, ts };

enum class S3Class : std::uint8_t { Identity, Transposition, ThreeCycle };

namespace detail {

struct Word {
  std::array<char, 16> a{};
  int n = 0;
};

constexpr std::string_view kNames[6] = {"e", "s", "t", "sts", "st", "ts"};

constexpr Word word_of(S3 g) {
  Word w{};
  if (g == S3::e) return w;
  for (char c : kNames[static_cast<int>(g)]) w.a[w.n++] = c;
  return w;
}

constexpr Word concat(const Word& x, const Word& y) {
  Word w{};
  for (int i = 0; i < x.n; ++i) w.a[w.n++] = x.a[i];
  for (int i = 0; i < y.n; ++i) w.a[w.n++] = y.a[i];
  return w;
}

// Rewrite ss -> e, tt -> e, tst -> sts until stable.  Every word over {s,t}
// lands on one of the six normal forms.
constexpr Word reduce(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < w.n; ++i) {
      if (w.a[i] == w.a[i + 1]) {
        for (int j = i + 2; j < w.n; ++j) w.a[j - 2] = w.a[j];
        w.n -= 2;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (int i = 0; i + 2 < w.n; ++i) {
      if (w.a[i] == 't' && w.a[i + 1] == 's' && w.a[i + 2] == 't') {
        w.a[i] = 's';
        w.a[i + 1] = 't';
        w.a[i + 2] = 's';
        changed = true;
        break;
      }
    }
  }
  return w;
}

constexpr S3 from_reduced(const Word& w) {
  for (int g = 0; g < 6; ++g) {
    std::string_view name = g == 0 ? std::string_view{} : kNames[g];
    if (static_cast<int>(name.size()) != w.n) continue;
    bool same = true;
    for (int i = 0; i < w.n; ++i) same = same && name[i] == w.a[i];
    if (same) return static_cast<S3>(g);
  }
  throw "word did not reduce to a normal form";
}

constexpr std::array<std::array<S3, 6>, 6> make_mul_table() {
  std::array<std::array<S3, 6>, 6> m{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      m[i][j] = from_reduced(
          reduce(concat(word_of(static_cast<S3>(i)), word_of(static_cast<S3>(j)))));
  return m;
}

inline constexpr auto kMul = make_mul_table();

constexpr std::array<S3, 6> make_inverse_table() {
  std::array<S3, 6> inv{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (kMul[i][j] == S3::e) inv[i] = static_cast<S3>(j);
  return inv;
}

inline constexpr auto kInv = make_inverse_table();

}  // namespace detail

constexpr S3 mul(S3 a, S3 b) {
  return detail::kMul[static_cast<int>(a)][static_cast<int>(b)];
}

constexpr S3 inverse(S3 a) { return detail::kInv[static_cast<int>(a)]; }

// x y x^-1
constexpr S3 conjugate(S3 x, S3 y) { return mul(mul(x, y), inverse(x)); }

constexpr S3Class class_of(S3 g) {
  switch (g) {
    case S3::e:
      return S3Class::Identity;
    case S3::s:
    case S3::t:
    case S3::sts:
      return S3Class::Transposition;
    default:
      return S3Class::ThreeCycle;
  }
}

// The five admissible arc colors in enumeration order.
inline constexpr std::array<S3, 5> kColors = {S3::s, S3::t, S3::sts, S3::st,
                                              S3::ts};

std::string_view to_string(S3 g);
std::string_view to_string(S3Class c);
S3 parse_element(std::string_view token);  // throws std::invalid_argument

}  // namespace s3color
