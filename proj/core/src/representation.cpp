#include "crossrank/representation.hpp"

#include <algorithm>
#include <cstdlib>

#include <gmpxx.h>

#include "json.hpp"

#include "crossrank/errors.hpp"

namespace crossrank {

std::string WordMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["word"] = word.content;
  j["level"] = word.level;
  j["k"] = word.length;
  j["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < entries.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < entries.cols(); ++c) row.push_back(entries(r, c).literal());
    j["rows"].push_back(row);
  }
  return j.dump();
}

void project_into(ScalarMatrix& out, std::size_t row, std::size_t col, const CrossedElement& e,
                  const ReturnWord& w, char marker) {
  const int k = w.length;
  const int n = w.level;
  for (const auto& [d, f] : e.terms()) {
    const int first = std::max(0, d);
    const int last = k - 1 + std::min(0, d);
    for (int i = first; i <= last; ++i) {
      Scalar v = f.eval_on(w.content, -n - i, marker);
      if (!v.is_zero()) out(row + i, col + i - d) += v;
    }
  }
}

WordMatrix project_element(const TruncatedElement& a, const ReturnWord& w, const SystemConfig& sys) {
  if (a.level() != w.level)
    throw LevelMismatch("element truncated at level " + std::to_string(a.level()) + ", word of level " +
                        std::to_string(w.level));
  WordMatrix m{w, zero_matrix(a.element().field(), w.length, w.length)};
  project_into(m.entries, 0, 0, a.element(), w, sys.marker_char());
  return m;
}

ScalarMatrix project_matrix(const ElementMatrix& m, const ReturnWord& w, const SystemConfig& sys) {
  const std::size_t d = m.size();
  if (d == 0) return ScalarMatrix();
  const Field f = m[0][0].element().field();
  const std::size_t k = static_cast<std::size_t>(w.length);
  ScalarMatrix out = zero_matrix(f, d * k, d * k);
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].size() != d) throw Error("element matrix must be square");
    for (std::size_t j = 0; j < d; ++j) {
      if (m[i][j].level() != w.level)
        throw LevelMismatch("matrix entry truncated at level " + std::to_string(m[i][j].level()));
      project_into(out, i * k, j * k, m[i][j].element(), w, sys.marker_char());
    }
  }
  return out;
}

namespace {

constexpr std::int64_t kNativeLimit = std::int64_t{1} << 40;
constexpr std::size_t kMaxTable = std::size_t{1} << 16;

}  // namespace

ProjectionKernel::ProjectionKernel(const ElementMatrix& m, const SystemConfig& sys)
    : entries_(&m), sys_(sys), field_(Field::rationals()) {
  const std::size_t d = m.size();
  if (d == 0) throw Error("rank of an empty matrix");
  field_ = m[0][0].element().field();
  level_ = m[0][0].level();

  // Common denominator of every coefficient value, so Q entries become integers.
  if (field_.is_rational()) {
    mpz_class lcm = 1;
    for (const auto& row : m)
      for (const auto& e : row)
        for (const auto& [deg, f] : e.element().terms())
          for (const auto& kv : f.values()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), kv.second.rational().to_mpq().get_den_mpz_t());
    native_ok_ = lcm.fits_slong_p() && lcm.get_si() <= kNativeLimit;
    if (native_ok_) scale_ = lcm.get_si();
  }

  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].size() != d) throw Error("element matrix must be square");
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [deg, f] : m[i][j].element().terms()) {
        Term t;
        t.row = i;
        t.col = j;
        t.degree = deg;
        t.lo = f.window().lo;
        t.width = f.window().width();
        t.fn = &f;
        std::size_t size = 1;
        bool dense = true;
        for (int q = 0; q < t.width && dense; ++q) {
          size *= static_cast<std::size_t>(sys.alphabet);
          dense = size <= kMaxTable;
        }
        if (native_ok_) {
          for (const auto& kv : f.values()) {
            if (field_.is_rational()) {
              const mpq_class v = kv.second.rational().to_mpq() * scale_;
              native_ok_ = native_ok_ && v.get_num().fits_slong_p() && std::abs(v.get_num().get_si()) <= kNativeLimit;
            }
          }
        }
        if (dense && native_ok_) {
          t.table.assign(size, 0);
          for (const auto& [key, value] : f.values()) {
            std::size_t code = 0;
            for (char c : key) code = code * sys.alphabet + letter_value(c);
            t.table[code] = native(value);
          }
        }
        terms_.push_back(std::move(t));
      }
    }
  }
}

std::int64_t ProjectionKernel::native(const Scalar& v) const {
  if (!field_.is_rational()) return v.residue();
  const mpq_class q = v.rational().to_mpq() * scale_;
  return q.get_num().get_si();
}

std::int64_t ProjectionKernel::term_value(const Term& t, const ReturnWord& w, int i) const {
  const int n = w.level;
  const int size = static_cast<int>(w.content.size());
  if (t.table.empty()) return native(t.fn->eval_on(w.content, -n - i, sys_.marker_char()));
  const int base = t.lo + n + i;
  std::size_t code = 0;
  for (int q = 0; q < t.width; ++q) {
    const int idx = base + q;
    const char c = (idx >= 0 && idx < size) ? w.content[idx] : sys_.marker_char();
    code = code * sys_.alphabet + letter_value(c);
  }
  return t.table[code];
}

std::size_t ProjectionKernel::rank(const ReturnWord& w) const {
  if (w.level != level_) throw LevelMismatch("matrix entry truncated at level " + std::to_string(level_));
  if (!native_ok_) {
    ++fallbacks_;
    return matrix_rank(project_matrix(*entries_, w, sys_));
  }
  const std::size_t k = static_cast<std::size_t>(w.length);
  const std::size_t dim = entries_->size() * k;
  const int len = w.length;
  if (field_.is_rational()) {
    std::vector<std::int64_t> a(dim * dim, 0);
    for (const auto& t : terms_) {
      const int first = std::max(0, t.degree);
      const int last = len - 1 + std::min(0, t.degree);
      for (int i = first; i <= last; ++i) {
        const std::int64_t v = term_value(t, w, i);
        if (v != 0) a[(t.row * k + i) * dim + t.col * k + (i - t.degree)] += v;
      }
    }
    if (auto r = integer_rank(a, dim, dim)) return *r;
    ++fallbacks_;
    return matrix_rank(project_matrix(*entries_, w, sys_));
  }
  const std::uint32_t p = field_.modulus();
  std::vector<std::uint32_t> a(dim * dim, 0);
  for (const auto& t : terms_) {
    const int first = std::max(0, t.degree);
    const int last = len - 1 + std::min(0, t.degree);
    for (int i = first; i <= last; ++i) {
      const std::int64_t v = term_value(t, w, i);
      if (v == 0) continue;
      auto& cell = a[(t.row * k + i) * dim + t.col * k + (i - t.degree)];
      cell = static_cast<std::uint32_t>((std::uint64_t{cell} + static_cast<std::uint64_t>(v)) % p);
    }
  }
  return modular_rank(a, dim, dim, p);
}

namespace {

TruncatedElement exact_indicator(const ClopenSet& u, int n, const SystemConfig& sys, Field f) {
  return truncate(CrossedElement::indicator(u, f), n, sys);
}

ClopenSet cell_set(const SystemConfig& sys, int n, std::string_view cell) {
  return ClopenSet::cylinder(sys.alphabet, -n, cell);
}

// chi_{T^{-c} Z} restricted to points whose cells at coordinates between 0 and
// c are non-marker, built as s^{*c} chi_Z s^c or s^{|c|} chi_Z s^{*|c|}.
TruncatedElement conjugated_cell(const SystemConfig& sys, Field f, int n, std::string_view cell, int c) {
  const TruncatedElement s = TruncatedElement::shift_generator(sys, f, n);
  const TruncatedElement z = exact_indicator(cell_set(sys, n, cell), n, sys, f);
  if (c > 0) return power(adjoint(s), c) * z * power(s, c);
  if (c < 0) return power(s, -c) * z * power(adjoint(s), -c);
  return z;
}

}  // namespace

TruncatedElement word_indicator(const ReturnWord& w, const SystemConfig& sys, Field f) {
  const int n = w.level;
  const int k = w.length;
  const TruncatedElement s = TruncatedElement::shift_generator(sys, f, n);
  const TruncatedElement one = exact_indicator(ClopenSet::whole(sys.alphabet), n, sys, f);
  TruncatedElement chi = exact_indicator(marker_block(sys, n), n, sys, f);
  for (int j = 1; j < k; ++j) chi = chi * conjugated_cell(sys, f, n, w.cell(j), j);
  // 1 - s^* s is the indicator of T^{-1}(E_n); conjugating it by s^{k-1}
  // forces the return at time k.
  chi = chi * power(adjoint(s), k - 1) * (one - adjoint(s) * s) * power(s, k - 1);
  return chi;
}

TruncatedElement matrix_unit_element(const ReturnWord& w, int i, int j, const SystemConfig& sys, Field f) {
  if (i < 0 || j < 0 || i >= w.length || j >= w.length)
    throw IndexOutOfRange("matrix unit (" + std::to_string(i) + "," + std::to_string(j) + ") outside a word of length " +
                          std::to_string(w.length));
  const TruncatedElement s = TruncatedElement::shift_generator(sys, f, w.level);
  return power(s, i) * word_indicator(w, sys, f) * power(adjoint(s), j);
}

ClopenSet Segment::as_clopen(int alphabet) const {
  if (cells.empty()) return ClopenSet::whole(alphabet);
  std::string letters = cells[0];
  for (std::size_t p = 1; p < cells.size(); ++p) letters.push_back(cells[p].back());
  return ClopenSet::cylinder(alphabet, -level - (s - 1), letters);
}

Segment Segment::from_letters(int level, int s, std::string_view letters) {
  Segment seg;
  seg.level = level;
  seg.s = s;
  const int width = 2 * level + 1;
  for (int p = 0; p + width <= static_cast<int>(letters.size()); ++p)
    seg.cells.emplace_back(letters.substr(p, width));
  return seg;
}

std::vector<int> occurrences(const Segment& seg, const ReturnWord& w) {
  std::vector<int> out;
  const int len = static_cast<int>(seg.cells.size());
  if (len == 0) return out;
  for (int l = 0; l + len <= w.length - 1; ++l) {
    bool match = true;
    for (int p = 0; p < len && match; ++p) match = w.cell(l + 1 + p) == seg.cells[p];
    if (match) out.push_back(l);
  }
  return out;
}

namespace {

void validate_segment(const Segment& seg, int d, const SystemConfig& sys) {
  const int n = seg.level;
  const std::string marker_cell(2 * n + 1, sys.marker_char());
  if (seg.cells.empty()) throw MalformedSegment("segment has no cells");
  if (seg.s < 0 || seg.r() < 0) throw MalformedSegment("segment split s is out of range");
  if (d > 0 && seg.s < d) throw MalformedSegment("need s >= d for positive degree");
  if (d < 0 && seg.r() < -d) throw MalformedSegment("need r >= -d for negative degree");
  for (std::size_t p = 0; p < seg.cells.size(); ++p) {
    const auto& c = seg.cells[p];
    if (static_cast<int>(c.size()) != 2 * n + 1) throw MalformedSegment("cell '" + c + "' has the wrong width");
    sys.check_word(c);
    if (c == marker_cell) throw MalformedSegment("segment cells must avoid the marker block");
    if (p > 0 && seg.cells[p - 1].substr(1) != c.substr(0, 2 * n))
      throw MalformedSegment("consecutive cells do not overlap consistently");
  }
}

}  // namespace

ScalarMatrix occurrence_project(const Segment& seg, int d, const ReturnWord& w, const SystemConfig& sys, Field f) {
  validate_segment(seg, d, sys);
  if (seg.level != w.level) throw LevelMismatch("segment and word levels differ");
  ScalarMatrix out = zero_matrix(f, w.length, w.length);
  for (int l : occurrences(seg, w)) out(l + seg.s, l + seg.s - d) += Scalar::one(f);
  return out;
}

TruncatedElement segment_monomial(const Segment& seg, int d, const SystemConfig& sys, Field f) {
  validate_segment(seg, d, sys);
  const int n = seg.level;
  TruncatedElement out = exact_indicator(ClopenSet::whole(sys.alphabet), n, sys, f);
  for (std::size_t p = 0; p < seg.cells.size(); ++p) {
    const int c = static_cast<int>(p) - (seg.s - 1);
    out = out * conjugated_cell(sys, f, n, seg.cells[p], c);
  }
  const TruncatedElement s = TruncatedElement::shift_generator(sys, f, n);
  return d >= 0 ? out * power(s, d) : out * power(adjoint(s), -d);
}

}  // namespace crossrank
