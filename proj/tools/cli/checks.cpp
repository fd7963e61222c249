#include "checks.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "crossrank/errors.hpp"
#include "crossrank/rank_engine.hpp"
#include "crossrank/representation.hpp"
#include "crossrank/sampling.hpp"
#include "crossrank/towers.hpp"

namespace crossrank::cli {
namespace {

class Recorder {
 public:
  explicit Recorder(CheckResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }

 private:
  CheckResult& r_;
};

std::string describe(const ReturnWord& w) { return "W=" + w.content + " (n=" + std::to_string(w.level) + ")"; }

bool is_default_binary(const SystemConfig& sys) {
  return sys.alphabet == 2 && sys.marker == 1 && sys.probabilities[0] == Rational(1, 2);
}

void mass_suite(Recorder& rec, std::mt19937_64& rng, const SystemConfig& sys, Field) {
  if (is_default_binary(sys)) {
    for (int k = 1; k <= 16; ++k) {
      const Rational expected(k + 2, std::int64_t{1} << (k + 1));
      rec.expect(enumerate_return_words(sys, 0, k).tail == expected, "closed-form tail at n=0, kmax=" + std::to_string(k));
    }
  }
  for (int n = 0; n <= 1; ++n) {
    const int kmax = 4 + static_cast<int>(rng() % 7);
    const TowerFamily family = enumerate_return_words(sys, n, kmax);
    const std::string block(2 * n + 1, sys.marker_char());
    Rational covered(0);
    for (const auto& w : family.words) {
      covered += Rational(w.length) * w.measure;
      rec.expect(w.measure == sys.word_measure(w.content), "word measure " + describe(w));
      rec.expect(measure(w.as_clopen(sys.alphabet), sys) == w.measure, "clopen measure " + describe(w));
      const std::string_view inner = std::string_view(w.content).substr(1, w.content.size() - 2);
      rec.expect(w.content.starts_with(block) && w.content.ends_with(block) && inner.find(block) == std::string::npos,
                 "first-return shape " + describe(w));
    }
    rec.expect(family.tail == Rational(1) - covered, "tail identity at n=" + std::to_string(n));
    rec.expect(Rational(0) <= family.tail && family.tail <= Rational(1), "tail in [0,1] at n=" + std::to_string(n));
    const TowerFamily longer = enumerate_return_words(sys, n, kmax + 2);
    rec.expect(longer.tail <= family.tail, "tail non-increasing at n=" + std::to_string(n));
  }
}

void hom_suite(Recorder& rec, std::mt19937_64& rng, const SystemConfig& sys, Field f) {
  const int n = 1;
  const TowerFamily family = enumerate_return_words(sys, n, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const TruncatedElement a = truncate(sample::random_element(rng, sys.alphabet, f, 1, 2), n, sys);
    const TruncatedElement b = truncate(sample::random_element(rng, sys.alphabet, f, 1, 2), n, sys);
    const ReturnWord& w = family.words[rng() % family.words.size()];
    const ScalarMatrix pa = project_element(a, w, sys).entries;
    const ScalarMatrix pb = project_element(b, w, sys).entries;
    const std::string tag = " trial " + std::to_string(trial) + " " + describe(w);
    rec.expect(project_element(a * b, w, sys).entries == pa * pb, "product" + tag);
    rec.expect(project_element(a + b, w, sys).entries == pa + pb, "sum" + tag);
    rec.expect(project_element(adjoint(a), w, sys).entries == transpose(pa), "adjoint" + tag);
  }
  const TowerFamily small = enumerate_return_words(sys, 0, 4);
  for (const auto& w : small.words) {
    ScalarMatrix e00 = zero_matrix(f, w.length, w.length);
    e00(0, 0) = Scalar::one(f);
    const ScalarMatrix chi = project_element(word_indicator(w, sys, f), w, sys).entries;
    rec.expect(chi == e00, "chi_W projects to e_00 " + describe(w));
  }
}

void oracle_suite(Recorder& rec, std::mt19937_64& rng, const SystemConfig& sys, Field f) {
  for (int n = 0; n <= 1; ++n) {
    const TowerFamily family = enumerate_return_words(sys, n, 8);
    for (int trial = 0; trial < 40; ++trial) {
      const int d = static_cast<int>(rng() % 5) - 2;
      const Segment seg = sample::random_segment(rng, family, d);
      const TruncatedElement mono = segment_monomial(seg, d, sys, f);
      for (const auto& w : family.words)
        rec.expect(occurrence_project(seg, d, w, sys, f) == project_element(mono, w, sys).entries,
                   "occurrence oracle d=" + std::to_string(d) + " " + describe(w));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t dim = 1 + trial % 2;
      ElementMatrix m(dim);
      for (auto& row : m)
        for (std::size_t j = 0; j < dim; ++j)
          row.push_back(truncate(sample::random_element(rng, sys.alphabet, f, 1, 1), std::max(n, 1), sys));
      const TowerFamily fam1 = enumerate_return_words(sys, std::max(n, 1), 8);
      const ProjectionKernel kernel(m, sys);
      for (const auto& w : fam1.words)
        rec.expect(kernel.rank(w) == matrix_rank(project_matrix(m, w, sys)), "native rank route " + describe(w));
    }
  }
}

void bratteli_suite(Recorder& rec, std::mt19937_64&, const SystemConfig& sys, Field) {
  const TowerFamily coarse = enumerate_return_words(sys, 0, 4);
  const TowerFamily fine = enumerate_return_words(sys, 1, 10);
  for (const auto& w : coarse.words) {
    const ClopenSet cw = w.as_clopen(sys.alphabet);
    for (const auto& e : bratteli_edges(fine, w)) {
      const ReturnWord& wf = fine.words[e.fine_index];
      for (int j : e.offsets)
        rec.expect(wf.as_clopen(sys.alphabet).subset_of(shift_clopen(cw, -j)),
                   "containment " + describe(wf) + " in T^-" + std::to_string(j) + " " + describe(w));
    }
  }
  // Each fine word begins with a coarse return, so every fine vertex has an incoming edge.
  const TowerFamily coarse_all = enumerate_return_words(sys, 0, 10);
  std::vector<int> reached(fine.words.size(), 0);
  for (const auto& w : coarse_all.words)
    for (const auto& e : bratteli_edges(fine, w)) reached[e.fine_index] += 1;
  for (std::size_t i = 0; i < fine.words.size(); ++i)
    rec.expect(reached[i] >= 1, "fine vertex has an incoming edge " + describe(fine.words[i]));
  for (const auto& w : coarse.words) {
    Rational previous = w.measure;
    for (int kmax : {6, 9, 12}) {
      const MassIdentity m = verify_mass_identity(w, enumerate_return_words(sys, 1, kmax));
      rec.expect(m.deficit >= Rational(0), "deficit non-negative " + describe(w) + " kmax " + std::to_string(kmax));
      rec.expect(m.deficit <= previous, "deficit non-increasing " + describe(w) + " kmax " + std::to_string(kmax));
      previous = m.deficit;
    }
  }
}

void sylvester_suite(Recorder& rec, std::mt19937_64& rng, const SystemConfig& sys, Field f) {
  const int n = 1, kmax = 10;
  const TowerFamily family = enumerate_return_words(sys, n, kmax);
  for (int trial = 0; trial < 20; ++trial) {
    const CrossedElement a = sample::random_element(rng, sys.alphabet, f, 0, 1);
    const CrossedElement b = sample::random_element(rng, sys.alphabet, f, 0, 1);
    const RankInterval ra = rank_interval(CrossedMatrix{{a}}, family);
    const RankInterval rb = rank_interval(CrossedMatrix{{b}}, family);
    const RankInterval rab = rank_interval(CrossedMatrix{{a * b}}, family);
    const RankInterval rdiag = rank_interval(CrossedMatrix{{a, CrossedElement(sys.alphabet, f)},
                                                           {CrossedElement(sys.alphabet, f), b}},
                                             family);
    const RankInterval rstar = rank_interval(CrossedMatrix{{adjoint(a)}}, family);
    const std::string tag = " trial " + std::to_string(trial);
    rec.expect(rab.upper <= min(ra.upper, rb.upper) + ra.width() + rb.width(), "submultiplicativity" + tag);
    rec.expect(rdiag.partial == ra.partial + rb.partial, "block additivity" + tag);
    rec.expect(rstar.partial == ra.partial, "adjoint invariance" + tag);
    rec.expect(ra.lower <= ra.upper && ra.upper <= Rational(1), "interval order" + tag);
  }
}

using Suite = std::function<void(Recorder&, std::mt19937_64&, const SystemConfig&, Field)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{{"mass", mass_suite},
                                                  {"hom", hom_suite},
                                                  {"oracle", oracle_suite},
                                                  {"bratteli", bratteli_suite},
                                                  {"sylvester", sylvester_suite}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"mass", "hom", "oracle", "bratteli", "sylvester"};
  return names;
}

CheckResult run_suite(const std::string& name, std::uint64_t seed, const SystemConfig& sys, Field field) {
  auto it = suites().find(name);
  if (it == suites().end()) throw ConfigError("unknown suite '" + name + "'");
  CheckResult result;
  result.suite = name;
  result.seed = seed;
  Recorder rec(result);
  std::mt19937_64 rng(seed);
  it->second(rec, rng, sys, field);
  return result;
}

}  // namespace crossrank::cli
