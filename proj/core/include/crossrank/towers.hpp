#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "crossrank/shift_space.hpp"

namespace crossrank {

/// A return word W of level n: the cylinder on [-n, k+n] whose letters are
/// `content`, starting and ending with the marker block and containing no other
/// window [j-n, j+n] made only of markers. Content index = coordinate + n.
struct ReturnWord {
  int level = 0;
  int length = 0;
  std::string content;
  Rational measure;

  ClopenSet as_clopen(int alphabet) const { return ClopenSet::cylinder(alphabet, -level, content); }
  /// Z_j, the level-n cell visited at time j (0 <= j <= length).
  std::string_view cell(int j) const { return std::string_view(content).substr(j, 2 * level + 1); }

  friend bool operator==(const ReturnWord& a, const ReturnWord& b) {
    return a.level == b.level && a.content == b.content;
  }
};

/// Return words of one level with |W| <= kmax, in lexicographic order of
/// content, plus the exact mass not covered by their towers.
struct TowerFamily {
  SystemConfig system;
  int level = 0;
  int kmax = 0;
  std::vector<ReturnWord> words;
  Rational tail{1};

  /// The subfamily with |W| <= k (k <= kmax).
  TowerFamily restricted(int k) const;
};

/// Streams the return words in lexicographic order. Stops early when the
/// callback returns false.
void for_each_return_word(const SystemConfig& sys, int n, int kmax,
                          const std::function<bool(const ReturnWord&)>& visit);
TowerFamily enumerate_return_words(const SystemConfig& sys, int n, int kmax);
/// 1 - sum |W| mu(W).
Rational tail_mass(const TowerFamily& family);

/// Offsets j' in [0, |W'| - |W|] with W' contained in T^{-j'}(W).
std::vector<int> bratteli_offsets(const ReturnWord& coarse, const ReturnWord& fine);

struct BratteliEdge {
  std::size_t fine_index;
  std::vector<int> offsets;
};
/// Nonempty offset sets J(W, W') for every W' of the fine family.
std::vector<BratteliEdge> bratteli_edges(const TowerFamily& fine, const ReturnWord& coarse);

struct MassIdentity {
  Rational lhs;
  Rational partial_rhs;
  Rational deficit;
};
/// mu(W) against sum_{W'} |J(W,W')| mu(W') over the enumerated fine words.
MassIdentity verify_mass_identity(const ReturnWord& coarse, const TowerFamily& fine);

enum class GraphFormat { Dot, Json };
/// Diagram between level `from_level` and `from_level + 1`, both cut at kmax.
std::string bratteli_export(const SystemConfig& sys, int from_level, int kmax, GraphFormat format);

/// JSON record {"level","k","content","measure"}.
std::string word_record_json(const ReturnWord& w);

}  // namespace crossrank
