// Acceptance checks, one line per criterion:
//   acceptance            run everything
//   acceptance N [M ...]  run the listed criteria
// Exit status is 0 iff every requested criterion passes.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "crossrank/periodic.hpp"
#include "crossrank/rank_engine.hpp"
#include "crossrank/representation.hpp"
#include "crossrank/sampling.hpp"
#include "crossrank/towers.hpp"

using namespace crossrank;

namespace {

// Pinned thresholds.
const Rational kMeasureTailBound(1, 10000);   // criterion 3
const Rational kShiftWidthBound(1, 1000000);  // criterion 4
const Rational kDeficitBound(1, 1024);        // criterion 7

const SystemConfig kBinary = SystemConfig::binary();
const Field kQ = Field::rationals();
const Field kF7 = Field::prime(7);

struct Outcome {
  bool pass = true;
  std::string detail;
};

Rational pow2(int e) { return Rational(1, std::int64_t{1} << e); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

// 1. Tower mass.
Outcome tower_mass() {
  Outcome o;
  const TowerFamily f20 = enumerate_return_words(kBinary, 0, 20);
  Rational covered(0);
  for (const auto& w : f20.words) covered += Rational(w.length) * w.measure;
  const Rational expected = Rational(1) - Rational(22) * pow2(21);
  o.pass = covered == expected;
  int bad = 0;
  for (int k = 1; k <= 20; ++k)
    if (enumerate_return_words(kBinary, 0, k).tail != Rational(k + 2) * pow2(k + 1)) ++bad;
  o.pass = o.pass && bad == 0;
  o.detail = "sum |W|mu(W) = " + covered.str() + ", closed-form tail mismatches for K=1..20: " + std::to_string(bad);
  return o;
}

// 2. Lamplighter word census at n = 1.
Outcome lamplighter_census() {
  const int n = 1;
  const TowerFamily family = enumerate_return_words(kBinary, n, 12);
  std::map<int, std::set<std::string>> by_length;
  for (const auto& w : family.words) by_length[w.length].insert(w.content);
  bool ok = by_length[1] == std::set<std::string>{"1111"} && by_length[4] == std::set<std::string>{"1110111"} &&
            by_length[2].empty() && by_length[3].empty();

  // Lengths 2n+3+l: 111 0 eps 0 111 with runs of ones in eps at most 2n.
  for (int k = 2 * n + 3; k <= 12; ++k) {
    const int l = k - (2 * n + 3);
    std::set<std::string> expected;
    for (std::uint32_t bits = 0; bits < (1U << l); ++bits) {
      std::string eps;
      for (int i = l - 1; i >= 0; --i) eps.push_back((bits >> i) & 1 ? '1' : '0');
      if (eps.find(std::string(2 * n + 1, '1')) != std::string::npos) continue;
      expected.insert("1110" + eps + "0111");
    }
    ok = ok && by_length[k] == expected;
  }

  // Brute force over every binary string of the merged window for k <= 8.
  int brute_mismatch = 0;
  for (int k = 1; k <= 8; ++k) {
    const int len = 2 * n + 1 + k;
    std::set<std::string> brute;
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      std::string s;
      for (int i = len - 1; i >= 0; --i) s.push_back((bits >> i) & 1 ? '1' : '0');
      const std::string block(2 * n + 1, '1');
      bool first_return = s.compare(0, block.size(), block) == 0;
      for (int j = 1; j <= k && first_return; ++j) {
        const bool hit = s.compare(j, block.size(), block) == 0;
        first_return = (j == k) ? hit : !hit;
      }
      if (first_return) brute.insert(s);
    }
    if (brute != by_length[k]) ++brute_mismatch;
  }
  ok = ok && brute_mismatch == 0;
  return {ok, std::to_string(family.words.size()) + " words up to k=12; brute-force mismatches for k<=8: " +
                  std::to_string(brute_mismatch)};
}

// 3. Measure compatibility for the eight cylinders of window at most 1.
Outcome measure_compatibility(Field f) {
  const int n = 1, kmax = 24;
  const TowerFamily family = enumerate_return_words(kBinary, n, kmax);
  std::vector<ClopenSet> cylinders;
  for (const char* w : {"0", "1"}) cylinders.push_back(ClopenSet::cylinder(2, 0, w));
  for (const char* w : {"00", "01", "10", "11"}) cylinders.push_back(ClopenSet::cylinder(2, 0, w));
  for (const char* w : {"0", "1"}) cylinders.push_back(ClopenSet::cylinder(2, -1, w));
  Outcome o;
  int contained = 0;
  for (const auto& u : cylinders) {
    const RankInterval iv = rank_interval(CrossedMatrix{{CrossedElement::indicator(u, f)}}, family);
    const bool ok = iv.contains(measure(u, kBinary)) && iv.width() <= iv.tail && iv.tail < kMeasureTailBound;
    contained += iv.contains(measure(u, kBinary)) ? 1 : 0;
    o.pass = o.pass && ok;
  }
  o.detail = "over " + f.name() + ": " + std::to_string(contained) + "/8 intervals contain mu(U); tail at n=1, kmax=24 is " +
             family.tail.decimal(6) + " (required < " + kMeasureTailBound.decimal(6) + ")";
  return o;
}

// 4. Shift element series.
Outcome shift_series(Field f) {
  Outcome o;
  const CrossedElement s = CrossedElement::indicator(clopen_complement(marker_block(kBinary, 0)), f) *
                           CrossedElement::t_power(2, f, 1);
  Rational series(0);
  RankInterval last;
  for (int k = 1; k <= 30; ++k) {
    series += Rational(k - 1) * pow2(k + 1);
    last = rank_interval(s, kBinary, 0, k);
    o.pass = o.pass && last.partial == series && last.contains(Rational(1, 2));
  }
  o.pass = o.pass && last.width() < kShiftWidthBound;
  o.detail = "over " + f.name() + ": width at K=30 is " + last.width().str() + " (" + last.width().decimal(12) + ")";
  return o;
}

// 5. Homomorphism and matrix-unit relations.
Outcome homomorphism(Field f) {
  std::mt19937_64 rng(5);
  const int n = 1;
  const TowerFamily family = enumerate_return_words(kBinary, n, 8);
  int bad_products = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const TruncatedElement a = truncate(sample::random_element(rng, 2, f, 1, 2), n, kBinary);
    const TruncatedElement b = truncate(sample::random_element(rng, 2, f, 1, 2), n, kBinary);
    const TruncatedElement ab = a * b;
    for (const auto& w : family.words)
      if (project_element(ab, w, kBinary).entries !=
          project_element(a, w, kBinary).entries * project_element(b, w, kBinary).entries)
        ++bad_products;
  }
  int bad_units = 0, unit_checks = 0;
  for (int level = 0; level <= 1; ++level) {
    for (const auto& w : enumerate_return_words(kBinary, level, 6).words) {
      std::vector<std::vector<TruncatedElement>> e(w.length);
      for (int i = 0; i < w.length; ++i)
        for (int j = 0; j < w.length; ++j) e[i].push_back(matrix_unit_element(w, i, j, kBinary, f));
      const CrossedElement zero(2, f);
      for (int i = 0; i < w.length; ++i)
        for (int j = 0; j < w.length; ++j)
          for (int k = 0; k < w.length; ++k)
            for (int l = 0; l < w.length; ++l) {
              ++unit_checks;
              const CrossedElement prod = (e[i][j] * e[k][l]).element();
              if (prod != (j == k ? e[i][l].element() : zero)) ++bad_units;
            }
    }
  }
  return {bad_products == 0 && bad_units == 0,
          "over " + f.name() + ": 500 pairs x " + std::to_string(family.words.size()) + " words, " +
              std::to_string(bad_products) + " product mismatches; " + std::to_string(unit_checks) +
              " matrix-unit relations, " + std::to_string(bad_units) + " failures"};
}

// 6. Occurrence oracle.
Outcome occurrence_oracle(Field f) {
  std::mt19937_64 rng(6);
  int bad = 0, compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 2;
    static const TowerFamily families[2] = {enumerate_return_words(kBinary, 0, 10),
                                            enumerate_return_words(kBinary, 1, 10)};
    const TowerFamily& family = families[n];
    const int d = static_cast<int>(rng() % 5) - 2;
    const Segment seg = sample::random_segment(rng, family, d);
    const TruncatedElement mono = segment_monomial(seg, d, kBinary, f);
    for (const auto& w : family.words) {
      ++compared;
      if (occurrence_project(seg, d, w, kBinary, f) != project_element(mono, w, kBinary).entries) ++bad;
    }
  }
  return {bad == 0, "over " + f.name() + ": " + std::to_string(compared) + " projections, " + std::to_string(bad) +
                        " mismatches"};
}

// 7. Bratteli mass identity.
Outcome bratteli_mass() {
  const TowerFamily coarse = enumerate_return_words(kBinary, 0, 4);
  const TowerFamily fine = enumerate_return_words(kBinary, 1, 25);
  Outcome o;
  Rational worst(0);
  for (const auto& w : coarse.words) {
    Rational previous = w.measure;
    for (int kmax = 5; kmax <= 25; kmax += 5) {
      const MassIdentity m = verify_mass_identity(w, kmax == 25 ? fine : fine.restricted(kmax));
      o.pass = o.pass && m.deficit >= Rational(0) && m.deficit <= previous;
      previous = m.deficit;
    }
    o.pass = o.pass && previous < kDeficitBound;
    worst = max(worst, previous);
  }
  o.detail = "largest deficit at kmax=25: " + worst.str() + " (" + worst.decimal(8) + "), bound " + kDeficitBound.str();
  return o;
}

// 8. Cross-level consistency.
Outcome cross_level() {
  std::mt19937_64 rng(8);
  std::vector<TowerFamily> families;
  for (int n : {1, 2})
    for (int kmax : {12, 24}) families.push_back(enumerate_return_words(kBinary, n, kmax));
  int disjoint = 0;
  for (int e = 0; e < 20; ++e) {
    // Round-trip through the printer so the check runs on parsed expressions.
    const std::string text = sample::random_element(rng, 2, kQ, 1, 1).str();
    const CrossedElement a = parse_expr(text, kBinary, kQ);
    Rational lo(0), hi(1);
    for (const auto& fam : families) {
      const RankInterval iv = rank_interval(CrossedMatrix{{a}}, fam);
      lo = max(lo, iv.lower);
      hi = min(hi, iv.upper);
    }
    if (hi < lo) ++disjoint;
  }
  return {disjoint == 0, "20 expressions at (n,kmax) in {1,2}x{12,24}: " + std::to_string(disjoint) +
                             " with non-intersecting intervals"};
}

// 9. Periodic ranks at the fixed point 0.
Outcome periodic_ranks() {
  const PeriodicPoint x = PeriodicPoint::make("0", kBinary);
  const CrossedElement a = parse_expr("t - 1", kBinary, kQ);
  const Rational kt = periodic_rank_kt(a, x);
  const std::size_t rho = matrix_rank(rho_finite(a, x));
  const Rational ev = evaluation_rank(a, x, Scalar(kQ, 2));
  std::ostringstream os;
  os << "kt-rank " << kt.str() << ", rho rank " << rho << ", evaluation rank at 2 " << ev.str();
  return {kt == Rational(1) && rho == 0 && ev == Rational(1), os.str()};
}

// 10. Sylvester axioms on certified intervals.
Outcome sylvester_axioms() {
  std::mt19937_64 rng(10);
  const int n = 2, kmax = 14;
  const TowerFamily family = enumerate_return_words(kBinary, n, kmax);
  int sub = 0, add = 0, star = 0;
  const CrossedElement zero(2, kQ);
  for (int trial = 0; trial < 100; ++trial) {
    const CrossedElement a = sample::random_element(rng, 2, kQ, 1, 1);
    const CrossedElement b = sample::random_element(rng, 2, kQ, 1, 1);
    const RankInterval ra = rank_interval(CrossedMatrix{{a}}, family);
    const RankInterval rb = rank_interval(CrossedMatrix{{b}}, family);
    const RankInterval rab = rank_interval(CrossedMatrix{{a * b}}, family);
    const RankInterval rdiag = rank_interval(CrossedMatrix{{a, zero}, {zero, b}}, family);
    const RankInterval rstar = rank_interval(CrossedMatrix{{adjoint(a)}}, family);
    if (!(rab.upper <= min(ra.upper, rb.upper) + ra.width() + rb.width())) ++sub;
    if (rdiag.partial != ra.partial + rb.partial) ++add;
    if (rstar.partial != ra.partial) ++star;
  }
  return {sub + add + star == 0, "100 pairs at n=2, kmax=14: violations submultiplicativity " + std::to_string(sub) +
                                     ", block additivity " + std::to_string(add) + ", adjoint " + std::to_string(star)};
}

// 11. Criteria 3-6 over Q and F_7.
Outcome field_generality() {
  Outcome o;
  std::vector<std::string> parts;
  const std::vector<std::pair<int, std::function<Outcome(Field)>>> suites{
      {3, measure_compatibility}, {4, shift_series}, {5, homomorphism}, {6, occurrence_oracle}};
  for (const auto& [id, suite] : suites) {
    const Outcome q = suite(kQ);
    const Outcome p = suite(kF7);
    o.pass = o.pass && q.pass && p.pass;
    parts.push_back(std::to_string(id) + ": Q " + (q.pass ? "pass" : "fail") + ", F7 " + (p.pass ? "pass" : "fail"));
  }
  o.detail = join(parts);
  return o;
}

const std::map<int, std::function<Outcome()>>& criteria() {
  static const std::map<int, std::function<Outcome()>> table{
      {1, tower_mass},
      {2, lamplighter_census},
      {3, [] { return measure_compatibility(kQ); }},
      {4, [] { return shift_series(kQ); }},
      {5, [] { return homomorphism(kQ); }},
      {6, [] { return occurrence_oracle(kQ); }},
      {7, bratteli_mass},
      {8, cross_level},
      {9, periodic_ranks},
      {10, sylvester_axioms},
      {11, field_generality},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty())
    for (const auto& kv : criteria()) wanted.push_back(kv.first);
  bool all = true;
  for (int id : wanted) {
    auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cout << "criterion " << id << ": FAIL (unknown criterion)\n";
      all = false;
      continue;
    }
    const Outcome o = it->second();
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")\n" << std::flush;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
