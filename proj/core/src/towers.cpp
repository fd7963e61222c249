#include "crossrank/towers.hpp"

#include <sstream>

#include "json.hpp"

#include "crossrank/errors.hpp"

namespace crossrank {

TowerFamily TowerFamily::restricted(int k) const {
  TowerFamily out;
  out.system = system;
  out.level = level;
  out.kmax = std::min(k, kmax);
  for (const auto& w : words)
    if (w.length <= out.kmax) out.words.push_back(w);
  out.tail = tail_mass(out);
  return out;
}

void for_each_return_word(const SystemConfig& sys, int n, int kmax,
                          const std::function<bool(const ReturnWord&)>& visit) {
  if (kmax < 1) return;
  const int block = 2 * n + 1;
  const char marker = sys.marker_char();

  // Depth-first over appended letters; `run` is the trailing marker run.
  struct Frame {
    int next_letter;
    int run;
    Rational measure;
  };
  ReturnWord w;
  w.level = n;
  w.content.assign(block, marker);
  std::vector<Frame> stack;
  stack.push_back({0, block, sys.word_measure(w.content)});
  bool stop = false;
  while (!stack.empty() && !stop) {
    Frame& top = stack.back();
    if (top.next_letter == sys.alphabet) {
      stack.pop_back();
      if (!stack.empty()) w.content.pop_back();
      continue;
    }
    const int a = top.next_letter++;
    const char c = letter_char(a);
    const int run = c == marker ? top.run + 1 : 0;
    Rational mu = top.measure * sys.probabilities[a];
    const int k = static_cast<int>(w.content.size()) - block + 1;
    w.content.push_back(c);
    if (run >= block) {
      w.length = k;
      w.measure = mu;
      stop = !visit(w);
      w.content.pop_back();
    } else if (k < kmax) {
      stack.push_back({0, run, std::move(mu)});
    } else {
      w.content.pop_back();
    }
  }
}

TowerFamily enumerate_return_words(const SystemConfig& sys, int n, int kmax) {
  TowerFamily family;
  family.system = sys;
  family.level = n;
  family.kmax = kmax;
  for_each_return_word(sys, n, kmax, [&](const ReturnWord& w) {
    family.words.push_back(w);
    return true;
  });
  family.tail = tail_mass(family);
  return family;
}

Rational tail_mass(const TowerFamily& family) {
  Rational covered(0);
  for (const auto& w : family.words) covered += Rational(w.length) * w.measure;
  return Rational(1) - covered;
}

std::vector<int> bratteli_offsets(const ReturnWord& coarse, const ReturnWord& fine) {
  if (fine.level != coarse.level + 1)
    throw LevelMismatch("fine word has level " + std::to_string(fine.level) + ", coarse word level " +
                        std::to_string(coarse.level));
  std::vector<int> offsets;
  // Coarse coordinate c sits at fine coordinate c + j', i.e. fine index c + j' + n + 1.
  const std::string_view cw = coarse.content;
  const std::string_view fw = fine.content;
  for (int j = 0; j <= fine.length - coarse.length; ++j)
    if (fw.substr(j + 1, cw.size()) == cw) offsets.push_back(j);
  return offsets;
}

std::vector<BratteliEdge> bratteli_edges(const TowerFamily& fine, const ReturnWord& coarse) {
  if (fine.level != coarse.level + 1)
    throw LevelMismatch("fine family has level " + std::to_string(fine.level) + ", coarse word level " +
                        std::to_string(coarse.level));
  std::vector<BratteliEdge> edges;
  for (std::size_t i = 0; i < fine.words.size(); ++i) {
    auto offsets = bratteli_offsets(coarse, fine.words[i]);
    if (!offsets.empty()) edges.push_back({i, std::move(offsets)});
  }
  return edges;
}

MassIdentity verify_mass_identity(const ReturnWord& coarse, const TowerFamily& fine) {
  MassIdentity m{coarse.measure, Rational(0), Rational(0)};
  for (const auto& e : bratteli_edges(fine, coarse))
    m.partial_rhs += Rational(static_cast<std::int64_t>(e.offsets.size())) * fine.words[e.fine_index].measure;
  m.deficit = m.lhs - m.partial_rhs;
  return m;
}

std::string word_record_json(const ReturnWord& w) {
  nlohmann::ordered_json j;
  j["level"] = w.level;
  j["k"] = w.length;
  j["content"] = w.content;
  j["measure"] = w.measure.str();
  return j.dump();
}

std::string bratteli_export(const SystemConfig& sys, int from_level, int kmax, GraphFormat format) {
  const TowerFamily coarse = enumerate_return_words(sys, from_level, kmax);
  const TowerFamily fine = enumerate_return_words(sys, from_level + 1, kmax);
  auto id = [](const ReturnWord& w) { return "L" + std::to_string(w.level) + "_" + w.content; };

  if (format == GraphFormat::Json) {
    nlohmann::ordered_json doc;
    doc["from_level"] = from_level;
    doc["kmax"] = kmax;
    doc["vertices"] = nlohmann::ordered_json::array();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto* fam : {&coarse, &fine})
      for (const auto& w : fam->words)
        doc["vertices"].push_back(nlohmann::ordered_json{
            {"id", id(w)}, {"level", w.level}, {"k", w.length}, {"content", w.content}, {"measure", w.measure.str()}});
    for (const auto& w : coarse.words)
      for (const auto& e : bratteli_edges(fine, w))
        doc["edges"].push_back(nlohmann::ordered_json{{"from", id(w)},
                                                      {"to", id(fine.words[e.fine_index])},
                                                      {"multiplicity", e.offsets.size()},
                                                      {"offsets", e.offsets}});
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n";
  for (const auto* fam : {&coarse, &fine}) {
    os << "  subgraph level" << fam->level << " {\n    rank=same;\n";
    for (const auto& w : fam->words)
      os << "    \"" << id(w) << "\" [label=\"" << w.content << "\\nk=" << w.length << "\\nmu=" << w.measure.str()
         << "\"];\n";
    os << "  }\n";
  }
  for (const auto& w : coarse.words)
    for (const auto& e : bratteli_edges(fine, w))
      os << "  \"" << id(w) << "\" -> \"" << id(fine.words[e.fine_index]) << "\" [label=\"" << e.offsets.size()
         << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace crossrank
