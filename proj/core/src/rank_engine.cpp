#include "crossrank/rank_engine.hpp"

#include <algorithm>

#include "json.hpp"

#include "crossrank/errors.hpp"
#include "crossrank/matrix.hpp"
#include "crossrank/representation.hpp"

namespace crossrank {
namespace {

struct Prepared {
  ElementMatrix entries;
  Rational epsilon{0};
  Field field = Field::rationals();
};

Prepared prepare(const CrossedMatrix& m, const SystemConfig& sys, int n) {
  if (m.empty()) throw Error("rank of an empty matrix");
  Prepared p;
  p.field = m[0][0].field();
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error("matrix must be square");
    std::vector<TruncatedElement> out;
    for (const auto& e : row) {
      if (e.field() != p.field) throw FieldMismatch();
      out.push_back(truncate(e, n, sys));
      p.epsilon += out.back().epsilon();
    }
    p.entries.push_back(std::move(out));
  }
  return p;
}

void finish(RankInterval& iv, const TowerFamily& family) {
  const Rational d(iv.dim);
  iv.tail = family.tail;
  iv.level = family.level;
  iv.kmax = family.kmax;
  iv.words_used = family.words.size();
  iv.lower = max(Rational(0), iv.partial - iv.epsilon);
  iv.upper = min(d, iv.partial + d * iv.tail + iv.epsilon);
}

nlohmann::ordered_json interval_json(const RankInterval& iv) {
  nlohmann::ordered_json j;
  j["lower"] = iv.lower.str();
  j["upper"] = iv.upper.str();
  j["partial"] = iv.partial.str();
  j["epsilon"] = iv.epsilon.str();
  j["tail"] = iv.tail.str();
  j["level"] = iv.level;
  j["kmax"] = iv.kmax;
  j["dim"] = iv.dim;
  j["words_used"] = iv.words_used;
  j["field"] = iv.field.name();
  j["lower_dec"] = iv.lower.decimal();
  j["upper_dec"] = iv.upper.decimal();
  j["width_dec"] = iv.width().decimal();
  return j;
}

}  // namespace

int matrix_radius(const CrossedMatrix& m) {
  int r = 0;
  for (const auto& row : m)
    for (const auto& e : row) r = std::max(r, e.radius());
  return r;
}

RankInterval rank_interval(const CrossedMatrix& m, const TowerFamily& family) {
  const SystemConfig& sys = family.system;
  Prepared p = prepare(m, sys, family.level);
  RankInterval iv;
  iv.dim = static_cast<int>(m.size());
  iv.field = p.field;
  iv.epsilon = p.epsilon;
  iv.partial = Rational(0);
  const ProjectionKernel kernel(p.entries, sys);
  for (const auto& w : family.words) {
    std::size_t rk = kernel.rank(w);
    if (rk != 0) iv.partial += w.measure * Rational(static_cast<std::int64_t>(rk));
  }
  finish(iv, family);
  return iv;
}

RankInterval rank_interval(const CrossedMatrix& m, const SystemConfig& sys, int n, int kmax) {
  if (kmax < 1) throw ConfigError("kmax must be at least 1");
  // Fail on the level before paying for the enumeration.
  if (matrix_radius(m) > n) throw LevelTooSmall(n, matrix_radius(m));
  return rank_interval(m, enumerate_return_words(sys, n, kmax));
}

RankInterval rank_interval(const CrossedElement& a, const SystemConfig& sys, int n, int kmax) {
  return rank_interval(CrossedMatrix{{a}}, sys, n, kmax);
}

std::vector<RankInterval> refine(const CrossedMatrix& m, const SystemConfig& sys,
                                 const std::vector<std::pair<int, int>>& schedule) {
  if (schedule.empty()) throw ConfigError("refinement schedule is empty");
  std::vector<RankInterval> out;
  for (const auto& [n, kmax] : schedule) out.push_back(rank_interval(m, sys, n, kmax));
  return out;
}

std::vector<RankInterval> refine_default(const CrossedMatrix& m, const SystemConfig& sys, int n, int start_kmax,
                                         std::size_t word_budget) {
  std::vector<RankInterval> out;
  const Rational target(1, 1000000);
  for (int kmax = std::max(1, start_kmax);; kmax *= 2) {
    TowerFamily family = enumerate_return_words(sys, n, kmax);
    if (!out.empty() && family.words.size() > word_budget) break;
    out.push_back(rank_interval(m, family));
    if (out.back().width() < target || family.words.size() > word_budget) break;
  }
  return out;
}

RankReport rank_report(const CrossedMatrix& m, const TowerFamily& family) {
  const SystemConfig& sys = family.system;
  Prepared p = prepare(m, sys, family.level);
  RankReport report;
  RankInterval& iv = report.interval;
  iv.dim = static_cast<int>(m.size());
  iv.field = p.field;
  iv.epsilon = p.epsilon;
  iv.partial = Rational(0);
  const ProjectionKernel kernel(p.entries, sys);
  for (const auto& w : family.words) {
    std::size_t rk = kernel.rank(w);
    Rational c = w.measure * Rational(static_cast<std::int64_t>(rk));
    iv.partial += c;
    report.per_word.push_back({w.content, w.length, w.measure, rk, c});
  }
  finish(iv, family);
  std::stable_sort(report.per_word.begin(), report.per_word.end(),
                   [](const WordContribution& a, const WordContribution& b) { return b.contribution < a.contribution; });
  return report;
}

std::string RankReport::to_json(bool include_words) const {
  nlohmann::ordered_json j = interval_json(interval);
  if (include_words) {
    j["per_word"] = nlohmann::ordered_json::array();
    for (const auto& w : per_word)
      j["per_word"].push_back(nlohmann::ordered_json{{"content", w.content},
                                                     {"k", w.k},
                                                     {"measure", w.measure.str()},
                                                     {"rank", w.rank},
                                                     {"contribution", w.contribution.str()}});
  }
  return j.dump(2);
}

RankReport RankReport::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RankReport r;
  RankInterval& iv = r.interval;
  iv.lower = Rational::parse(j.at("lower").get<std::string>());
  iv.upper = Rational::parse(j.at("upper").get<std::string>());
  iv.partial = Rational::parse(j.at("partial").get<std::string>());
  iv.epsilon = Rational::parse(j.at("epsilon").get<std::string>());
  iv.tail = Rational::parse(j.at("tail").get<std::string>());
  iv.level = j.at("level").get<int>();
  iv.kmax = j.at("kmax").get<int>();
  iv.dim = j.at("dim").get<int>();
  iv.words_used = j.at("words_used").get<std::size_t>();
  const std::string field = j.at("field").get<std::string>();
  iv.field = field == "Q" ? Field::rationals() : Field::parse("f:" + field.substr(1));
  if (j.contains("per_word"))
    for (const auto& w : j["per_word"])
      r.per_word.push_back({w.at("content").get<std::string>(), w.at("k").get<int>(),
                            Rational::parse(w.at("measure").get<std::string>()), w.at("rank").get<std::size_t>(),
                            Rational::parse(w.at("contribution").get<std::string>())});
  return r;
}

}  // namespace crossrank
