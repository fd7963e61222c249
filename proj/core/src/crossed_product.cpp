#include "crossrank/crossed_product.hpp"

#include <cctype>
#include <sstream>

#include "crossrank/errors.hpp"

namespace crossrank {

// ---------------------------------------------------------------------------
// CrossedElement

CrossedElement CrossedElement::scalar(int alphabet, const Scalar& c) {
  CrossedElement a(alphabet, c.field());
  a.add_term(0, LocallyConstantFn::constant(alphabet, c));
  return a;
}

CrossedElement CrossedElement::monomial(const LocallyConstantFn& f, int degree) {
  CrossedElement a(f.alphabet(), f.field());
  a.add_term(degree, f);
  return a;
}

CrossedElement CrossedElement::t_power(int alphabet, Field f, int degree) {
  return monomial(LocallyConstantFn::constant(alphabet, Scalar::one(f)), degree);
}

CrossedElement CrossedElement::indicator(const ClopenSet& u, Field f) {
  return monomial(LocallyConstantFn::indicator(u, f), 0);
}

void CrossedElement::add_term(int degree, const LocallyConstantFn& f) {
  if (f.field() != field_) throw FieldMismatch();
  if (f.is_zero()) return;
  auto it = terms_.find(degree);
  if (it == terms_.end()) {
    terms_.emplace(degree, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) terms_.erase(it);
}

LocallyConstantFn CrossedElement::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? LocallyConstantFn(alphabet_, field_) : it->second;
}

int CrossedElement::radius() const {
  int r = 0;
  for (const auto& kv : terms_) r = std::max(r, kv.second.radius());
  return r;
}

int CrossedElement::degree_weight() const {
  int w = 0;
  for (const auto& kv : terms_) w += std::abs(kv.first);
  return w;
}

bool CrossedElement::unit_monomial_inverse(CrossedElement& out) const {
  if (terms_.size() != 1) return false;
  const auto& [degree, f] = *terms_.begin();
  if (!f.window().empty()) return false;
  const Scalar c = f.values().begin()->second;
  out = monomial(LocallyConstantFn::constant(alphabet_, c.inverse()), -degree);
  return true;
}

std::string CrossedElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [degree, f] : terms_) {
    for (const auto& [word, value] : f.values()) {
      std::string lit = value.literal();
      const bool negative = lit[0] == '-';
      if (negative) lit.erase(0, 1);
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      first = false;

      std::vector<std::string> factors;
      if (lit != "1") factors.push_back(lit);
      if (!word.empty()) factors.push_back("chi(" + std::to_string(f.window().lo) + ";" + word + ")");
      if (degree == 1) factors.push_back("t");
      else if (degree != 0) factors.push_back("t^" + std::to_string(degree));
      if (factors.empty()) factors.push_back("1");
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
  }
  return os.str();
}

CrossedElement CrossedElement::scaled(const Scalar& c) const {
  CrossedElement out(alphabet_, field_);
  for (const auto& [d, f] : terms_) out.add_term(d, f.scaled(c));
  return out;
}

CrossedElement CrossedElement::operator-() const { return scaled(-Scalar::one(field_)); }

CrossedElement operator+(const CrossedElement& a, const CrossedElement& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  CrossedElement out = a;
  for (const auto& [d, f] : b.terms_) out.add_term(d, f);
  return out;
}

CrossedElement operator-(const CrossedElement& a, const CrossedElement& b) { return a + (-b); }

CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  CrossedElement out(a.alphabet_, a.field_);
  for (const auto& [i, f] : a.terms_)
    for (const auto& [j, g] : b.terms_) out.add_term(i + j, f * fn_alpha(g, i));
  return out;
}

CrossedElement adjoint(const CrossedElement& a) {
  CrossedElement out(a.alphabet(), a.field());
  for (const auto& [d, f] : a.terms()) out = out + CrossedElement::monomial(fn_alpha(f, -d), -d);
  return out;
}

CrossedElement power(const CrossedElement& a, int k) {
  CrossedElement out = CrossedElement::one(a.alphabet(), a.field());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr int kMaxPower = 256;

class Parser {
 public:
  Parser(std::string_view text, const SystemConfig& sys, Field f) : text_(text), sys_(sys), field_(f) {}

  CrossedElement parse() {
    CrossedElement e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!at_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    bool negative = accept('-');
    std::string d = digits();
    if (d.size() > 9) fail("integer too large");
    int v = std::stoi(d);
    return negative ? -v : v;
  }

  CrossedElement expr() {
    CrossedElement e = term();
    while (true) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  CrossedElement term() {
    CrossedElement e = factor();
    while (accept('*')) e = e * factor();
    return e;
  }

  CrossedElement factor() {
    if (accept('-')) return -factor();
    CrossedElement e = primary();
    while (true) {
      if (accept('\'')) {
        e = adjoint(e);
      } else if (accept('^')) {
        const std::size_t at = pos_;
        int k = integer();
        if (k > kMaxPower || k < -kMaxPower) throw SyntaxError("exponent out of range", at);
        if (k < 0) {
          CrossedElement inv(sys_.alphabet, field_);
          if (!e.unit_monomial_inverse(inv))
            throw SyntaxError("negative powers are only defined for c*t^k", at);
          e = power(inv, -k);
        } else {
          e = power(e, k);
        }
      } else {
        return e;
      }
    }
  }

  CrossedElement primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      CrossedElement e = expr();
      expect(')');
      return e;
    }
    if (text_.substr(pos_, 3) == "chi") {
      pos_ += 3;
      expect('(');
      int offset = integer();
      expect(';');
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word.empty()) fail("expected a word of letters");
      sys_.check_word(word);
      expect(')');
      return CrossedElement::indicator(ClopenSet::cylinder(sys_.alphabet, offset, word), field_);
    }
    if (text_[pos_] == 't') {
      ++pos_;
      return CrossedElement::t_power(sys_.alphabet, field_, 1);
    }
    if (at_digit()) {
      std::string num = digits();
      if (accept('/')) num += "/" + digits();
      return CrossedElement::scalar(sys_.alphabet, Scalar(field_, Rational::parse(num)));
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  const SystemConfig& sys_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

CrossedElement parse_expr(std::string_view text, const SystemConfig& sys, Field f) {
  return Parser(text, sys, f).parse();
}

// ---------------------------------------------------------------------------
// Truncation

ClopenSet marker_block(const SystemConfig& sys, int n) {
  return ClopenSet::cylinder(sys.alphabet, -n, std::string(2 * n + 1, sys.marker_char()));
}

ClopenSet avoid_marker_translates(const SystemConfig& sys, int n, int from, int to) {
  const ClopenSet e = marker_block(sys, n);
  ClopenSet bad(sys.alphabet);
  for (int j = from; j <= to; ++j) bad = clopen_union(bad, shift_clopen(e, j));
  return clopen_complement(bad);
}

TruncatedElement truncate(const CrossedElement& a, int n, const SystemConfig& sys) {
  if (n < a.radius()) throw LevelTooSmall(n, a.radius());
  CrossedElement out(a.alphabet(), a.field());
  Rational eps(0);
  const Rational marker_mass = measure(marker_block(sys, n), sys);
  for (const auto& [d, f] : a.terms()) {
    if (d == 0) {
      out = out + CrossedElement::monomial(f, 0);
      continue;
    }
    ClopenSet mask = d > 0 ? avoid_marker_translates(sys, n, 0, d - 1) : avoid_marker_translates(sys, n, d, -1);
    LocallyConstantFn kept = f * LocallyConstantFn::indicator(mask, a.field());
    // A monomial already supported on the mask lies in A_n and is kept exactly.
    if (!(kept == f)) eps += marker_mass * Rational(std::abs(d));
    out = out + CrossedElement::monomial(kept, d);
  }
  return TruncatedElement(std::move(out), n, std::move(eps));
}

TruncatedElement TruncatedElement::shift_generator(const SystemConfig& sys, Field f, int n) {
  ClopenSet mask = clopen_complement(marker_block(sys, n));
  return TruncatedElement(CrossedElement::monomial(LocallyConstantFn::indicator(mask, f), 1), n, Rational(0));
}

TruncatedElement TruncatedElement::scaled(const Scalar& c) const {
  return TruncatedElement(element_.scaled(c), level_, c.is_zero() ? Rational(0) : epsilon_);
}

namespace {
void require_same_level(const TruncatedElement& a, const TruncatedElement& b) {
  if (a.level() != b.level())
    throw LevelMismatch("operands truncated at levels " + std::to_string(a.level()) + " and " +
                        std::to_string(b.level()));
}
}  // namespace

TruncatedElement operator+(const TruncatedElement& a, const TruncatedElement& b) {
  require_same_level(a, b);
  return TruncatedElement(a.element_ + b.element_, a.level_, a.epsilon_ + b.epsilon_);
}

TruncatedElement operator-(const TruncatedElement& a, const TruncatedElement& b) {
  require_same_level(a, b);
  return TruncatedElement(a.element_ - b.element_, a.level_, a.epsilon_ + b.epsilon_);
}

// ab - a'b' = (a - a')b + a'(b - b'), so the bounds add.
TruncatedElement operator*(const TruncatedElement& a, const TruncatedElement& b) {
  require_same_level(a, b);
  return TruncatedElement(a.element_ * b.element_, a.level_, a.epsilon_ + b.epsilon_);
}

TruncatedElement adjoint(const TruncatedElement& a) {
  return TruncatedElement(adjoint(a.element_), a.level_, a.epsilon_);
}

TruncatedElement power(const TruncatedElement& a, int k) {
  const auto& e = a.element();
  TruncatedElement out(CrossedElement::one(e.alphabet(), e.field()), a.level(), Rational(0));
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace crossrank
