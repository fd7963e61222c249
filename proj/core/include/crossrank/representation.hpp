#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossrank/crossed_product.hpp"
#include "crossrank/matrix.hpp"
#include "crossrank/towers.hpp"

namespace crossrank {

/// h_W a written in the matrix units e_ij(W).
struct WordMatrix {
  ReturnWord word;
  ScalarMatrix entries;

  /// {"word": ..., "level": n, "k": k, "rows": [[...]]}
  std::string to_json() const;
};

/// Entry (i, i-d) of f t^d is f evaluated on T^i(W), whose representative is
/// the content of W placed at offset -n-i with markers elsewhere.
WordMatrix project_element(const TruncatedElement& a, const ReturnWord& w, const SystemConfig& sys);

/// Adds the image of `e` into the |W| x |W| block of `out` at (row, col). The
/// caller guarantees that `e` lies in the level-W.level approximating algebra.
void project_into(ScalarMatrix& out, std::size_t row, std::size_t col, const CrossedElement& e,
                  const ReturnWord& w, char marker);

/// Block matrix of per-entry projections, size d|W| x d|W|.
using ElementMatrix = std::vector<std::vector<TruncatedElement>>;
ScalarMatrix project_matrix(const ElementMatrix& m, const ReturnWord& w, const SystemConfig& sys);

/// Precomputed coefficient tables for ranking pi_W of one element matrix over
/// many words. Entries are filled as scaled int64 (over Q) or residues (over
/// F_p) and eliminated natively; on integer overflow the rank is recomputed
/// through project_matrix and matrix_rank.
class ProjectionKernel {
 public:
  ProjectionKernel(const ElementMatrix& m, const SystemConfig& sys);

  std::size_t rank(const ReturnWord& w) const;
  /// Number of words that needed the Scalar fallback so far.
  std::size_t fallbacks() const { return fallbacks_; }

 private:
  struct Term {
    std::size_t row = 0;
    std::size_t col = 0;
    int degree = 0;
    int lo = 0;
    int width = 0;
    // Indexed by the base-alphabet code of the window; empty when too large.
    std::vector<std::int64_t> table;
    const LocallyConstantFn* fn = nullptr;
  };

  std::int64_t native(const Scalar& v) const;
  std::int64_t term_value(const Term& t, const ReturnWord& w, int i) const;

  const ElementMatrix* entries_;
  SystemConfig sys_;
  Field field_;
  int level_ = 0;
  bool native_ok_ = true;
  std::int64_t scale_ = 1;
  std::vector<Term> terms_;
  mutable std::size_t fallbacks_ = 0;
};

/// chi_W as a product of exact generators of A_n.
TruncatedElement word_indicator(const ReturnWord& w, const SystemConfig& sys, Field f);
/// e_ij(W) = s^i chi_W s^{*j} with s = chi_{X\E_n} t.
TruncatedElement matrix_unit_element(const ReturnWord& w, int i, int j, const SystemConfig& sys, Field f);

/// A run of consecutive level-n cells. cells[p] must match Z_{l+1+p}; the
/// first s cells sit at coordinates -(s-1)..0 and the remaining r at 1..r.
struct Segment {
  int level = 0;
  int s = 0;
  std::vector<std::string> cells;

  int r() const { return static_cast<int>(cells.size()) - s; }
  /// The set S = {x : the cell of x at coordinate -(s-1)+p is cells[p]}.
  ClopenSet as_clopen(int alphabet) const;
  /// Builds the segment whose cells are the consecutive windows of `letters`
  /// (length s + r + 2n).
  static Segment from_letters(int level, int s, std::string_view letters);
};

/// Offsets l >= 0 with Z_{l+1+p} = cells[p] for every p; empty when the
/// segment is empty or longer than |W| - 1.
std::vector<int> occurrences(const Segment& seg, const ReturnWord& w);
/// sum over occurrences l of E_{l+s, l+s-d}. Throws MalformedSegment unless
/// s >= d for d > 0 and r >= -d for d < 0, with consistent non-marker cells.
ScalarMatrix occurrence_project(const Segment& seg, int d, const ReturnWord& w, const SystemConfig& sys, Field f);
/// chi_S t^d built from exact generators (same preconditions).
TruncatedElement segment_monomial(const Segment& seg, int d, const SystemConfig& sys, Field f);

}  // namespace crossrank
