#include "crossrank/shift_space.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "crossrank/errors.hpp"

namespace crossrank {
namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// Every word extended by `left` letters in front and `right` letters behind.
std::vector<std::string> extend_words(const std::vector<std::string>& words, int alphabet, int left,
                                      int right) {
  if (left == 0 && right == 0) return words;
  const auto prefixes = all_words(alphabet, left);
  const auto suffixes = all_words(alphabet, right);
  std::vector<std::string> out;
  out.reserve(words.size() * prefixes.size() * suffixes.size());
  for (const auto& p : prefixes)
    for (const auto& w : words)
      for (const auto& s : suffixes) out.push_back(p + w + s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SystemConfig

SystemConfig SystemConfig::parse(std::string_view spec, int marker) {
  auto parts = split(spec, ':');
  if (parts.size() != 3 || parts[0] != "bernoulli")
    throw ConfigError("system must look like bernoulli:M:p0,p1,... (got '" + std::string(spec) + "')");
  int m = 0;
  auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), m);
  if (ec != std::errc() || ptr != parts[1].data() + parts[1].size() || m < 2 || m > kMaxAlphabet)
    throw ConfigError("alphabet size must be an integer in 2.." + std::to_string(kMaxAlphabet));
  SystemConfig sys;
  sys.alphabet = m;
  sys.probabilities.clear();
  Rational total(0);
  for (const auto& p : split(parts[2], ',')) {
    Rational r;
    try {
      r = Rational::parse(p);
    } catch (const Error&) {
      throw ConfigError("malformed probability '" + p + "'");
    }
    if (r.sign() <= 0) throw ConfigError("probabilities must be positive (got " + p + ")");
    total += r;
    sys.probabilities.push_back(r);
  }
  if (static_cast<int>(sys.probabilities.size()) != m)
    throw ConfigError("expected " + std::to_string(m) + " probabilities, got " +
                      std::to_string(sys.probabilities.size()));
  if (total != Rational(1)) throw ConfigError("probabilities sum to " + total.str() + ", not 1");
  if (marker < 0 || marker >= m) throw ConfigError("marker letter must lie in 0.." + std::to_string(m - 1));
  sys.marker = marker;
  return sys;
}

Rational SystemConfig::word_measure(std::string_view word) const {
  Rational r(1);
  for (char c : word) r *= probability(c);
  return r;
}

void SystemConfig::check_word(std::string_view word) const {
  for (char c : word) {
    int v = letter_value(c);
    if (v < 0 || v >= alphabet) throw BadLetter(v, alphabet);
  }
}

std::string SystemConfig::str() const {
  std::ostringstream os;
  os << "bernoulli:" << alphabet << ":";
  for (std::size_t i = 0; i < probabilities.size(); ++i) os << (i ? "," : "") << probabilities[i].str();
  return os.str();
}

// ---------------------------------------------------------------------------
// Windows

int Window::radius() const { return empty() ? 0 : std::max(std::abs(lo), std::abs(hi)); }

Window hull(Window a, Window b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return Window{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::vector<std::string> all_words(int alphabet, int length) {
  std::vector<std::string> out{""};
  for (int i = 0; i < length; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * alphabet);
    for (const auto& w : out)
      for (int a = 0; a < alphabet; ++a) next.push_back(w + letter_char(a));
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ClopenSet

ClopenSet ClopenSet::whole(int alphabet) {
  ClopenSet u(alphabet);
  u.words_ = {""};
  return u;
}

ClopenSet ClopenSet::cylinder(int alphabet, int offset, std::string_view word) {
  for (char c : word) {
    int v = letter_value(c);
    if (v < 0 || v >= alphabet) throw BadLetter(v, alphabet);
  }
  return from_words(alphabet, Window{offset, offset + static_cast<int>(word.size()) - 1},
                    {std::string(word)});
}

ClopenSet ClopenSet::from_words(int alphabet, Window w, std::vector<std::string> words) {
  ClopenSet u(alphabet);
  u.window_ = w;
  u.words_ = std::move(words);
  u.canonicalize();
  return u;
}

void ClopenSet::canonicalize() {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.empty()) {
    window_ = Window{};
    return;
  }
  // Drop the first coordinate while the set ignores it.
  while (!window_.empty()) {
    std::map<std::string_view, int> count;
    for (const auto& w : words_) ++count[std::string_view(w).substr(1)];
    bool free = std::all_of(count.begin(), count.end(), [&](const auto& kv) { return kv.second == alphabet_; });
    if (!free) break;
    std::vector<std::string> next;
    next.reserve(count.size());
    for (const auto& kv : count) next.emplace_back(kv.first);
    words_ = std::move(next);
    ++window_.lo;
  }
  while (!window_.empty()) {
    std::map<std::string_view, int> count;
    for (const auto& w : words_) ++count[std::string_view(w).substr(0, w.size() - 1)];
    bool free = std::all_of(count.begin(), count.end(), [&](const auto& kv) { return kv.second == alphabet_; });
    if (!free) break;
    std::vector<std::string> next;
    next.reserve(count.size());
    for (const auto& kv : count) next.emplace_back(kv.first);
    words_ = std::move(next);
    --window_.hi;
  }
  if (window_.empty()) window_ = Window{};
}

std::vector<std::string> ClopenSet::words_on(Window w) const {
  if (words_.empty()) return {};
  if (window_.empty()) return all_words(alphabet_, w.width());
  return extend_words(words_, alphabet_, window_.lo - w.lo, w.hi - window_.hi);
}

bool ClopenSet::contains(const Point& x) const {
  if (words_.empty()) return false;
  if (window_.empty()) return true;
  std::string key;
  for (int c = window_.lo; c <= window_.hi; ++c) key.push_back(x.at(c));
  return std::binary_search(words_.begin(), words_.end(), key);
}

bool ClopenSet::subset_of(const ClopenSet& other) const { return clopen_intersect(*this, other) == *this; }

ClopenSet clopen_union(const ClopenSet& u, const ClopenSet& v) {
  Window w = hull(u.window(), v.window());
  auto a = u.words_on(w);
  auto b = v.words_on(w);
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ClopenSet::from_words(u.alphabet(), w, std::move(out));
}

ClopenSet clopen_intersect(const ClopenSet& u, const ClopenSet& v) {
  Window w = hull(u.window(), v.window());
  auto a = u.words_on(w);
  auto b = v.words_on(w);
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ClopenSet::from_words(u.alphabet(), w, std::move(out));
}

ClopenSet clopen_complement(const ClopenSet& u) {
  if (u.is_empty()) return ClopenSet::whole(u.alphabet());
  auto all = all_words(u.alphabet(), u.window().width());
  std::vector<std::string> out;
  std::set_difference(all.begin(), all.end(), u.words().begin(), u.words().end(), std::back_inserter(out));
  return ClopenSet::from_words(u.alphabet(), u.window(), std::move(out));
}

ClopenSet shift_clopen(const ClopenSet& u, int i) {
  if (u.window().empty()) return u;
  Window w{u.window().lo - i, u.window().hi - i};
  return ClopenSet::from_words(u.alphabet(), w, u.words());
}

Rational measure(const ClopenSet& u, const SystemConfig& sys) {
  Rational total(0);
  for (const auto& w : u.words()) total += sys.word_measure(w);
  return total;
}

// ---------------------------------------------------------------------------
// LocallyConstantFn

LocallyConstantFn LocallyConstantFn::constant(int alphabet, const Scalar& c) {
  LocallyConstantFn f(alphabet, c.field());
  if (!c.is_zero()) f.values_.emplace("", c);
  return f;
}

LocallyConstantFn LocallyConstantFn::indicator(const ClopenSet& u, Field field) {
  LocallyConstantFn f(u.alphabet(), field);
  f.window_ = u.window();
  for (const auto& w : u.words()) f.values_.emplace(w, Scalar::one(field));
  return f;
}

LocallyConstantFn LocallyConstantFn::from_values(int alphabet, Field field, Window w,
                                                 std::map<std::string, Scalar, std::less<>> values) {
  LocallyConstantFn f(alphabet, field);
  f.window_ = w;
  f.values_ = std::move(values);
  f.canonicalize();
  return f;
}

void LocallyConstantFn::canonicalize() {
  for (auto it = values_.begin(); it != values_.end();) {
    if (it->second.field() != field_) throw FieldMismatch();
    it = it->second.is_zero() ? values_.erase(it) : std::next(it);
  }
  if (values_.empty()) {
    window_ = Window{};
    return;
  }
  // A coordinate can be dropped when every group of words differing only
  // there is complete and constant.
  auto try_drop = [&](bool front) {
    std::map<std::string, std::pair<int, Scalar>, std::less<>> groups;
    for (const auto& [w, v] : values_) {
      std::string key = front ? w.substr(1) : w.substr(0, w.size() - 1);
      auto [it, inserted] = groups.try_emplace(key, 0, v);
      if (!inserted && it->second.second != v) return false;
      ++it->second.first;
    }
    for (const auto& kv : groups)
      if (kv.second.first != alphabet_) return false;
    std::map<std::string, Scalar, std::less<>> next;
    for (auto& kv : groups) next.emplace(kv.first, kv.second.second);
    values_ = std::move(next);
    return true;
  };
  while (!window_.empty() && try_drop(true)) ++window_.lo;
  while (!window_.empty() && try_drop(false)) --window_.hi;
  if (window_.empty()) window_ = Window{};
}

std::map<std::string, Scalar, std::less<>> LocallyConstantFn::values_on(Window w) const {
  if (values_.empty()) return {};
  const int left = window_.empty() ? w.width() : window_.lo - w.lo;
  const int right = window_.empty() ? 0 : w.hi - window_.hi;
  if (left == 0 && right == 0) return values_;
  const auto prefixes = all_words(alphabet_, left);
  const auto suffixes = all_words(alphabet_, right);
  std::map<std::string, Scalar, std::less<>> out;
  for (const auto& [word, v] : values_)
    for (const auto& p : prefixes)
      for (const auto& s : suffixes) out.emplace(p + word + s, v);
  return out;
}

Scalar LocallyConstantFn::eval(const Point& x) const {
  if (values_.empty()) return Scalar::zero(field_);
  std::string key;
  for (int c = window_.lo; c <= window_.hi; ++c) key.push_back(x.at(c));
  auto it = values_.find(key);
  return it == values_.end() ? Scalar::zero(field_) : it->second;
}

Scalar LocallyConstantFn::eval_on(std::string_view content, int offset, char fill) const {
  if (values_.empty()) return Scalar::zero(field_);
  const int width = window_.width();
  char buf[64];
  std::string heap;
  char* key = buf;
  if (width > static_cast<int>(sizeof buf)) {
    heap.resize(width);
    key = heap.data();
  }
  const int size = static_cast<int>(content.size());
  for (int i = 0; i < width; ++i) {
    int idx = window_.lo + i - offset;
    key[i] = (idx >= 0 && idx < size) ? content[idx] : fill;
  }
  auto it = values_.find(std::string_view(key, width));
  return it == values_.end() ? Scalar::zero(field_) : it->second;
}

ClopenSet LocallyConstantFn::support() const {
  std::vector<std::string> words;
  for (const auto& kv : values_) words.push_back(kv.first);
  return ClopenSet::from_words(alphabet_, window_, std::move(words));
}

LocallyConstantFn LocallyConstantFn::scaled(const Scalar& c) const {
  LocallyConstantFn f(alphabet_, field_);
  if (c.is_zero()) return f;
  if (c.field() != field_) throw FieldMismatch();
  f.window_ = window_;
  for (const auto& [w, v] : values_) f.values_.emplace(w, v * c);
  return f;
}

LocallyConstantFn LocallyConstantFn::operator-() const { return scaled(-Scalar::one(field_)); }

LocallyConstantFn operator+(const LocallyConstantFn& a, const LocallyConstantFn& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  Window w = hull(a.window_, b.window_);
  auto values = a.values_on(w);
  for (const auto& [word, v] : b.values_on(w)) {
    auto [it, inserted] = values.try_emplace(word, v);
    if (!inserted) it->second += v;
  }
  return LocallyConstantFn::from_values(a.alphabet_, a.field_, w, std::move(values));
}

LocallyConstantFn operator*(const LocallyConstantFn& a, const LocallyConstantFn& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  if (a.is_zero() || b.is_zero()) return LocallyConstantFn(a.alphabet_, a.field_);
  Window w = hull(a.window_, b.window_);
  auto av = a.values_on(w);
  auto bv = b.values_on(w);
  std::map<std::string, Scalar, std::less<>> values;
  for (const auto& [word, v] : av) {
    auto it = bv.find(word);
    if (it != bv.end()) values.emplace(word, v * it->second);
  }
  return LocallyConstantFn::from_values(a.alphabet_, a.field_, w, std::move(values));
}

LocallyConstantFn fn_alpha(const LocallyConstantFn& f, int n) {
  LocallyConstantFn g = f;
  if (!g.window_.empty()) {
    g.window_.lo -= n;
    g.window_.hi -= n;
  }
  return g;
}

Scalar fn_eval(const LocallyConstantFn& f, const Point& x) { return f.eval(x); }

Rational rank_locally_constant(const LocallyConstantFn& f, const SystemConfig& sys) {
  return measure(f.support(), sys);
}

}  // namespace crossrank
