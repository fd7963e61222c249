#pragma once

// Seeded random samplers shared by the test suites and the `check` command.

#include <algorithm>
#include <random>
#include <string>

#include "crossrank/crossed_product.hpp"
#include "crossrank/representation.hpp"

namespace crossrank::sample {

inline std::string random_word(std::mt19937_64& rng, int alphabet, int length) {
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  std::string w;
  for (int i = 0; i < length; ++i) w.push_back(letter_char(letter(rng)));
  return w;
}

/// Union of a few cylinders whose windows lie inside [-radius, radius].
inline ClopenSet random_clopen(std::mt19937_64& rng, int alphabet, int radius) {
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> lo(-radius, radius);
  ClopenSet u(alphabet);
  for (int i = count(rng); i > 0; --i) {
    int a = lo(rng);
    std::uniform_int_distribution<int> hi(a, radius);
    int b = hi(rng);
    u = clopen_union(u, ClopenSet::cylinder(alphabet, a, random_word(rng, alphabet, b - a + 1)));
  }
  return u;
}

inline Scalar random_scalar(std::mt19937_64& rng, Field f) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar(f, Rational(num(rng), f.is_rational() ? den(rng) : 1));
}

/// Locally constant function of radius <= radius.
inline LocallyConstantFn random_fn(std::mt19937_64& rng, int alphabet, Field f, int radius) {
  LocallyConstantFn g(alphabet, f);
  std::uniform_int_distribution<int> count(1, 3);
  for (int i = count(rng); i > 0; --i)
    g = g + LocallyConstantFn::indicator(random_clopen(rng, alphabet, radius), f).scaled(random_scalar(rng, f));
  return g;
}

/// Sum of a few monomials f t^d with |d| <= max_degree and radius(f) <= radius.
inline CrossedElement random_element(std::mt19937_64& rng, int alphabet, Field f, int radius,
                                     int max_degree) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> degree(-max_degree, max_degree);
  CrossedElement a(alphabet, f);
  for (int i = count(rng); i > 0; --i)
    a = a + CrossedElement::monomial(random_fn(rng, alphabet, f, radius), degree(rng));
  return a;
}

/// A segment of `n`-cells with split s fitting degree d. Half of the time it is
/// cut out of a word of `family` so that it has at least one occurrence.
inline Segment random_segment(std::mt19937_64& rng, const TowerFamily& family, int d) {
  const int n = family.level;
  const int alphabet = family.system.alphabet;
  const char marker = family.system.marker_char();
  int s = std::max(d, 0) + static_cast<int>(rng() % 2);
  int r = std::max(-d, 0) + static_cast<int>(rng() % 2);
  if (s + r == 0) s = 1;
  const ReturnWord& source = family.words[rng() % family.words.size()];
  std::string letters;
  if (source.length - 1 >= s + r && rng() % 2) {
    const int l = static_cast<int>(rng() % (source.length - s - r));
    letters = source.content.substr(l + 1, s + r + 2 * n);
  } else {
    do {
      letters = random_word(rng, alphabet, s + r + 2 * n);
    } while (letters.find(std::string(2 * n + 1, marker)) != std::string::npos);
  }
  return Segment::from_letters(n, s, letters);
}

}  // namespace crossrank::sample
