#include <algorithm>
#include <map>

#include "doctest.h"

#include "crossrank/crossed_product.hpp"
#include "crossrank/errors.hpp"
#include "crossrank/towers.hpp"

using namespace crossrank;

namespace {

const SystemConfig kBinary = SystemConfig::binary();

bool all_marker(std::string_view s, char marker) {
  return std::all_of(s.begin(), s.end(), [&](char c) { return c == marker; });
}

// Brute force: every string on [-n, k+n] checked against the definition.
std::vector<std::string> brute_force_words(const SystemConfig& sys, int n, int k) {
  std::vector<std::string> out;
  const int block = 2 * n + 1;
  for (const auto& s : all_words(sys.alphabet, k + block)) {
    if (!all_marker(std::string_view(s).substr(0, block), sys.marker_char())) continue;
    if (!all_marker(std::string_view(s).substr(k, block), sys.marker_char())) continue;
    bool ok = true;
    for (int j = 1; j < k && ok; ++j) ok = !all_marker(std::string_view(s).substr(j, block), sys.marker_char());
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("n = 0 binary words and tails") {
  TowerFamily f = enumerate_return_words(kBinary, 0, 3);
  REQUIRE(f.words.size() == 3);
  CHECK(f.words[0].content == "1001");
  CHECK(f.words[0].measure == Rational(1, 16));
  CHECK(f.words[1].content == "101");
  CHECK(f.words[2].content == "11");
  CHECK(f.words[2].measure == Rational(1, 4));
  CHECK(f.tail == Rational(5, 16));
  CHECK(tail_mass(enumerate_return_words(kBinary, 0, 1)) == Rational(3, 4));
  CHECK(tail_mass(enumerate_return_words(kBinary, 0, 2)) == Rational(1, 2));
  TowerFamily f20 = enumerate_return_words(kBinary, 0, 20);
  CHECK(f20.tail == Rational(22) * pow(Rational(1, 2), 21));
  for (int k = 1; k <= 20; ++k)
    CHECK(f20.restricted(k).tail == Rational(k + 2) * pow(Rational(1, 2), k + 1));
}

TEST_CASE("lamplighter words at n = 1") {
  TowerFamily f = enumerate_return_words(kBinary, 1, 8);
  std::map<int, std::vector<std::string>> by_length;
  for (const auto& w : f.words) by_length[w.length].push_back(w.content);
  CHECK(by_length[1] == std::vector<std::string>{"1111"});
  CHECK(by_length[4] == std::vector<std::string>{"1110111"});
  CHECK(by_length.count(2) == 0);
  CHECK(by_length.count(3) == 0);
  for (int k = 5; k <= 8; ++k) {
    for (const auto& c : by_length[k]) {
      CHECK(c.substr(0, 4) == "1110");
      CHECK(c.substr(c.size() - 4) == "0111");
      CHECK(c.substr(3, c.size() - 6).find("111") == std::string::npos);
    }
  }
}

TEST_CASE("enumeration matches brute force") {
  const SystemConfig tri = SystemConfig::parse("bernoulli:3:1/2,1/4,1/4", 0);
  for (const SystemConfig* sys : {&kBinary, &tri}) {
    for (int n = 0; n <= 1; ++n) {
      const int kmax = sys->alphabet == 2 ? 8 : 5;
      TowerFamily f = enumerate_return_words(*sys, n, kmax);
      std::vector<std::string> expected;
      for (int k = 1; k <= kmax; ++k)
        for (auto& s : brute_force_words(*sys, n, k)) expected.push_back(s);
      std::sort(expected.begin(), expected.end());
      std::vector<std::string> got;
      for (const auto& w : f.words) {
        got.push_back(w.content);
        CHECK(w.measure == sys->word_measure(w.content));
        CHECK(static_cast<int>(w.content.size()) == w.length + 2 * n + 1);
      }
      CHECK(got == expected);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("tower translates are disjoint and refine the level partition") {
  for (int n = 0; n <= 1; ++n) {
    TowerFamily f = enumerate_return_words(kBinary, n, 6);
    std::vector<ClopenSet> translates;
    for (const auto& w : f.words)
      for (int l = 0; l < w.length; ++l) translates.push_back(shift_clopen(w.as_clopen(2), l));
    for (std::size_t i = 0; i < translates.size(); ++i)
      for (std::size_t j = i + 1; j < translates.size(); ++j)
        CHECK(clopen_intersect(translates[i], translates[j]).is_empty());

    Rational total(0);
    for (const auto& u : translates) total += measure(u, kBinary);
    CHECK(total + f.tail == Rational(1));

    // Each level-(n+1) translate lies in E_n or in a single level-n cell.
    TowerFamily fine = enumerate_return_words(kBinary, n + 1, 6);
    ClopenSet e = marker_block(kBinary, n);
    for (const auto& w : fine.words) {
      for (int l = 0; l < w.length; ++l) {
        ClopenSet u = shift_clopen(w.as_clopen(2), l);
        bool inside = u.subset_of(e);
        for (const auto& cell : all_words(2, 2 * n + 1))
          if (!inside && cell != std::string(2 * n + 1, '1'))
            inside = u.subset_of(ClopenSet::cylinder(2, -n, cell));
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("tail is non-increasing in kmax") {
  TowerFamily f = enumerate_return_words(kBinary, 1, 14);
  Rational prev(1);
  for (int k = 1; k <= 14; ++k) {
    Rational t = f.restricted(k).tail;
    CHECK(t <= prev);
    CHECK(t >= Rational(0));
    prev = t;
  }
}

TEST_CASE("bratteli edges") {
  TowerFamily coarse = enumerate_return_words(kBinary, 0, 6);
  TowerFamily fine = enumerate_return_words(kBinary, 1, 6);
  std::vector<int> in_degree(fine.words.size(), 0);
  for (const auto& w : coarse.words)
    for (const auto& e : bratteli_edges(fine, w)) in_degree[e.fine_index] += static_cast<int>(e.offsets.size());
  for (int d : in_degree) CHECK(d >= 1);

  // Every fine word splits into coarse words whose lengths add up to |W'|.
  for (std::size_t i = 0; i < fine.words.size(); ++i) {
    int covered = 0;
    for (const auto& w : coarse.words)
      covered += w.length * static_cast<int>(bratteli_offsets(w, fine.words[i]).size());
    CHECK(covered == fine.words[i].length);
  }

  ReturnWord w11 = coarse.words.back();
  REQUIRE(w11.content == "11");
  CHECK(bratteli_offsets(w11, fine.words.back()) == std::vector<int>{0});
  CHECK(fine.words.back().content == "1111");
  ReturnWord long_word = coarse.words.front();
  CHECK(bratteli_offsets(long_word, fine.words.back()).empty());
  CHECK_THROWS_AS(bratteli_offsets(w11, w11), LevelMismatch);
}

TEST_CASE("mass identity deficits") {
  TowerFamily coarse = enumerate_return_words(kBinary, 0, 4);
  TowerFamily fine = enumerate_return_words(kBinary, 1, 16);
  for (const auto& w : coarse.words) {
    Rational prev = w.measure;
    for (int k = 1; k <= 16; ++k) {
      TowerFamily sub = fine.restricted(k);
      MassIdentity m = verify_mass_identity(w, sub);
      CHECK(m.lhs == w.measure);
      CHECK(m.deficit >= Rational(0));
      CHECK(m.deficit <= prev);
      CHECK(m.deficit <= Rational(w.length) * sub.tail);
      prev = m.deficit;
    }
  }
  TowerFamily empty = fine.restricted(0);
  MassIdentity m = verify_mass_identity(coarse.words[0], empty);
  CHECK(m.partial_rhs == Rational(0));
  CHECK(m.deficit == coarse.words[0].measure);
}

TEST_CASE("bratteli export") {
  std::string dot = bratteli_export(kBinary, 0, 4, GraphFormat::Dot);
  CHECK(dot.find("digraph") == 0);
  std::string json = bratteli_export(kBinary, 0, 4, GraphFormat::Json);
  std::size_t vertices = enumerate_return_words(kBinary, 0, 4).words.size() +
                         enumerate_return_words(kBinary, 1, 4).words.size();
  std::size_t count = 0;
  for (std::size_t p = json.find("\"id\""); p != std::string::npos; p = json.find("\"id\"", p + 1)) ++count;
  CHECK(count == vertices);
  CHECK(word_record_json(enumerate_return_words(kBinary, 0, 1).words[0]) ==
        R"({"level":0,"k":1,"content":"11","measure":"1/4"})");
}
