#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "crossrank/rational.hpp"
#include "crossrank/scalar.hpp"

namespace crossrank {

// Letters are stored as the characters '0'..'9', so words are plain strings and
// the alphabet size is at most 10.
inline constexpr int kMaxAlphabet = 10;
inline char letter_char(int a) { return static_cast<char>('0' + a); }
inline int letter_value(char c) { return c - '0'; }

/// Full shift on {0..m-1}^Z with a Bernoulli measure and a marker letter.
struct SystemConfig {
  int alphabet = 2;
  std::vector<Rational> probabilities{Rational(1, 2), Rational(1, 2)};
  int marker = 1;

  /// "bernoulli:M:p0,p1,..." with probabilities summing to exactly 1.
  static SystemConfig parse(std::string_view spec, int marker);
  static SystemConfig binary() { return SystemConfig{}; }

  char marker_char() const { return letter_char(marker); }
  const Rational& probability(char letter) const { return probabilities[letter_value(letter)]; }
  /// Product of letter probabilities.
  Rational word_measure(std::string_view word) const;
  /// Throws BadLetter unless every character is a letter of the alphabet.
  void check_word(std::string_view word) const;
  std::string str() const;
};

/// Window [lo, hi]; lo > hi is the empty window (no coordinates).
struct Window {
  int lo = 0;
  int hi = -1;

  bool empty() const { return lo > hi; }
  int width() const { return empty() ? 0 : hi - lo + 1; }
  int radius() const;
  friend bool operator==(Window a, Window b) = default;
};

/// Smallest window containing both (an empty window is ignored).
Window hull(Window a, Window b);

/// A point of X that agrees with `letters` on [offset, offset + size) and is
/// `fill` everywhere else.
struct Point {
  int offset = 0;
  std::string letters;
  char fill = '0';

  char at(int coordinate) const {
    int i = coordinate - offset;
    return (i >= 0 && i < static_cast<int>(letters.size())) ? letters[i] : fill;
  }
};

/// Clopen subset of X as a union of cylinders on a window. Always canonical:
/// the window is the minimal one and the word list is sorted.
class ClopenSet {
 public:
  /// The empty set over an m-letter alphabet.
  explicit ClopenSet(int alphabet = 2) : alphabet_(alphabet) {}

  static ClopenSet whole(int alphabet);
  static ClopenSet cylinder(int alphabet, int offset, std::string_view word);
  static ClopenSet from_words(int alphabet, Window w, std::vector<std::string> words);

  int alphabet() const { return alphabet_; }
  Window window() const { return window_; }
  const std::vector<std::string>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }
  bool is_whole() const { return window_.empty() && !words_.empty(); }

  /// Word list re-expressed on a window containing this one.
  std::vector<std::string> words_on(Window w) const;
  bool contains(const Point& x) const;
  bool subset_of(const ClopenSet& other) const;

  friend bool operator==(const ClopenSet& a, const ClopenSet& b) {
    return a.alphabet_ == b.alphabet_ && a.window_ == b.window_ && a.words_ == b.words_;
  }

 private:
  void canonicalize();

  int alphabet_;
  Window window_;
  std::vector<std::string> words_;
};

ClopenSet clopen_union(const ClopenSet& u, const ClopenSet& v);
ClopenSet clopen_intersect(const ClopenSet& u, const ClopenSet& v);
ClopenSet clopen_complement(const ClopenSet& u);
/// T^i(U); the constraint on coordinate c moves to c - i.
ClopenSet shift_clopen(const ClopenSet& u, int i);
Rational measure(const ClopenSet& u, const SystemConfig& sys);

/// Locally constant K-valued function on X, stored as nonzero values on the
/// minimal window. Words missing from the table take the value 0.
class LocallyConstantFn {
 public:
  LocallyConstantFn(int alphabet, Field f) : alphabet_(alphabet), field_(f) {}

  static LocallyConstantFn constant(int alphabet, const Scalar& c);
  static LocallyConstantFn indicator(const ClopenSet& u, Field f);
  static LocallyConstantFn from_values(int alphabet, Field f, Window w,
                                       std::map<std::string, Scalar, std::less<>> values);

  int alphabet() const { return alphabet_; }
  Field field() const { return field_; }
  Window window() const { return window_; }
  int radius() const { return window_.radius(); }
  const std::map<std::string, Scalar, std::less<>>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  Scalar eval(const Point& x) const;
  /// Value at the point whose letters on [offset, offset + content.size())
  /// are `content`, with `fill` elsewhere.
  Scalar eval_on(std::string_view content, int offset, char fill) const;
  ClopenSet support() const;

  LocallyConstantFn scaled(const Scalar& c) const;
  friend LocallyConstantFn operator+(const LocallyConstantFn& a, const LocallyConstantFn& b);
  friend LocallyConstantFn operator*(const LocallyConstantFn& a, const LocallyConstantFn& b);
  LocallyConstantFn operator-() const;

  friend bool operator==(const LocallyConstantFn& a, const LocallyConstantFn& b) {
    return a.alphabet_ == b.alphabet_ && a.field_ == b.field_ && a.window_ == b.window_ &&
           a.values_ == b.values_;
  }

 private:
  friend LocallyConstantFn fn_alpha(const LocallyConstantFn& f, int n);
  std::map<std::string, Scalar, std::less<>> values_on(Window w) const;
  void canonicalize();

  int alphabet_;
  Field field_;
  Window window_;
  std::map<std::string, Scalar, std::less<>> values_;
};

/// alpha_n(f)(x) = f(T^{-n} x).
LocallyConstantFn fn_alpha(const LocallyConstantFn& f, int n);
Scalar fn_eval(const LocallyConstantFn& f, const Point& x);
/// Measure of the support.
Rational rank_locally_constant(const LocallyConstantFn& f, const SystemConfig& sys);

/// All words of the given length over the alphabet, in lexicographic order.
std::vector<std::string> all_words(int alphabet, int length);

}  // namespace crossrank
