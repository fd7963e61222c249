#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crossrank/crossed_product.hpp"
#include "crossrank/towers.hpp"

namespace crossrank {

using CrossedMatrix = std::vector<std::vector<CrossedElement>>;

/// Exact enclosure [lower, upper] of the rank of a d x d matrix over A.
struct RankInterval {
  Rational lower;
  Rational upper;
  Rational partial;
  Rational epsilon;
  Rational tail;
  int level = 0;
  int kmax = 0;
  int dim = 1;
  std::size_t words_used = 0;
  Field field = Field::rationals();

  Rational width() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

struct WordContribution {
  std::string content;
  int k = 0;
  Rational measure;
  std::size_t rank = 0;
  /// mu(W) * rank.
  Rational contribution;
};

struct RankReport {
  RankInterval interval;
  std::vector<WordContribution> per_word;

  std::string to_json(bool include_words = true) const;
  static RankReport from_json(const std::string& text);
};

/// partial = sum_W mu(W) Rk(pi_W(M_n)); the interval is
/// [max(0, partial - eps), min(d, partial + d*tail + eps)].
/// Throws LevelTooSmall when an entry has radius above the family level.
RankInterval rank_interval(const CrossedMatrix& m, const TowerFamily& family);
RankInterval rank_interval(const CrossedMatrix& m, const SystemConfig& sys, int n, int kmax);
RankInterval rank_interval(const CrossedElement& a, const SystemConfig& sys, int n, int kmax);

/// One interval per (level, kmax) entry.
std::vector<RankInterval> refine(const CrossedMatrix& m, const SystemConfig& sys,
                                 const std::vector<std::pair<int, int>>& schedule);

/// Doubles kmax from `start_kmax` until the width drops below 10^-6 or the
/// next family would exceed `word_budget` words.
std::vector<RankInterval> refine_default(const CrossedMatrix& m, const SystemConfig& sys, int n,
                                         int start_kmax = 4, std::size_t word_budget = 100000);

/// As rank_interval, with per-word ranks sorted by decreasing contribution.
RankReport rank_report(const CrossedMatrix& m, const TowerFamily& family);

/// Largest entry radius.
int matrix_radius(const CrossedMatrix& m);

}  // namespace crossrank
