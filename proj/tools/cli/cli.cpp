#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "checks.hpp"
#include "crossrank/errors.hpp"
#include "crossrank/periodic.hpp"
#include "crossrank/rank_engine.hpp"
#include "crossrank/towers.hpp"

namespace crossrank::cli {
namespace {

using nlohmann::ordered_json;

/// Input that could not be read as an expression or matrix file.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string system = "bernoulli:2:1/2,1/2";
  int marker = 1;
  std::string field = "q";
  int level = 1;
  int kmax = 24;
  bool json = false;
  std::string preset;
  std::uint64_t seed = 1;

  CLI::Option* level_opt = nullptr;
};

struct Resolved {
  SystemConfig sys;
  Field field = Field::rationals();
  int level = 1;
  int kmax = 24;
  int lamplighter = -1;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--system", o.system, "bernoulli:M:p0,p1,...");
  cmd->add_option("--marker", o.marker, "marker letter");
  cmd->add_option("--field", o.field, "q or f:<prime>");
  o.level_opt = cmd->add_option("--level", o.level, "approximation level n");
  cmd->add_option("--kmax", o.kmax, "longest return word");
  cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_option("--preset", o.preset, "lamplighter:N (binary system, level N, generators s_i = e_i t)");
  cmd->add_option("--seed", o.seed, "seed for check suites");
}

Resolved resolve(const Options& o) {
  Resolved r;
  r.level = o.level;
  r.kmax = o.kmax;
  std::string system = o.system;
  int marker = o.marker;
  if (!o.preset.empty()) {
    const std::string prefix = "lamplighter:";
    if (o.preset.rfind(prefix, 0) != 0) throw ConfigError("unknown preset '" + o.preset + "'");
    try {
      r.lamplighter = std::stoi(o.preset.substr(prefix.size()));
    } catch (const std::exception&) {
      throw ConfigError("bad lamplighter level in '" + o.preset + "'");
    }
    if (r.lamplighter < 0) throw ConfigError("lamplighter level must be non-negative");
    system = "bernoulli:2:1/2,1/2";
    marker = 1;
    if (o.level_opt == nullptr || o.level_opt->count() == 0) r.level = r.lamplighter;
  }
  if (r.level < 0) throw ConfigError("level must be non-negative");
  if (r.kmax < 1) throw ConfigError("kmax must be at least 1");
  r.sys = SystemConfig::parse(system, marker);
  r.field = Field::parse(o.field);
  return r;
}

std::string fraction_line(const std::string& key, const Rational& v) {
  std::ostringstream os;
  os << std::left << std::setw(10) << key << v.str() << "  (" << v.decimal() << ")\n";
  return os.str();
}

ordered_json word_json(const ReturnWord& w) {
  return ordered_json{{"level", w.level}, {"k", w.length}, {"content", w.content}, {"measure", w.measure.str()}};
}

int cmd_towers(const Options& o, std::ostream& out) {
  const Resolved r = resolve(o);
  const TowerFamily family = enumerate_return_words(r.sys, r.level, r.kmax);
  if (o.json) {
    ordered_json j;
    j["system"] = r.sys.str();
    j["level"] = r.level;
    j["kmax"] = r.kmax;
    j["words"] = ordered_json::array();
    for (const auto& w : family.words) j["words"].push_back(word_json(w));
    j["tail"] = family.tail.str();
    j["tail_dec"] = family.tail.decimal();
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "# " << r.sys.str() << ", level " << r.level << ", kmax " << r.kmax << ", " << family.words.size()
      << " words\n";
  if (r.lamplighter >= 0) out << "# lamplighter level " << r.lamplighter << ": generators s_i = e_i t\n";
  out << "k\tcontent\tmeasure\n";
  for (const auto& w : family.words) out << w.length << "\t" << w.content << "\t" << w.measure.str() << "\n";
  out << fraction_line("tail", family.tail);
  return kOk;
}

CrossedMatrix read_matrix_file(const std::string& path, const Resolved& r) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw InputError("matrix file must be a non-empty array of rows");
  CrossedMatrix m;
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != doc.size()) throw InputError("matrix file must describe a square matrix");
    std::vector<CrossedElement> entries;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw InputError("matrix entries must be expression strings");
      entries.push_back(parse_expr(cell.get<std::string>(), r.sys, r.field));
    }
    m.push_back(std::move(entries));
  }
  return m;
}

int cmd_rank(const Options& o, const std::string& expr, const std::string& matrix_file, bool per_word,
             std::ostream& out, std::ostream& err) {
  Resolved r = resolve(o);
  if (expr.empty() == matrix_file.empty()) throw ConfigError("give exactly one of --expr or --matrix");
  const CrossedMatrix m = expr.empty() ? read_matrix_file(matrix_file, r)
                                       : CrossedMatrix{{parse_expr(expr, r.sys, r.field)}};
  const int radius = matrix_radius(m);
  if (radius > r.level) {
    err << "notice: raising level from " << r.level << " to " << radius << " (input radius)\n";
    r.level = radius;
  }
  const RankReport report = rank_report(m, enumerate_return_words(r.sys, r.level, r.kmax));
  if (o.json) {
    out << report.to_json(per_word) << "\n";
    return kOk;
  }
  const RankInterval& iv = report.interval;
  out << "rank interval over " << iv.field.name() << ", level " << iv.level << ", kmax " << iv.kmax << ", "
      << iv.words_used << " words\n";
  out << fraction_line("lower", iv.lower) << fraction_line("upper", iv.upper) << fraction_line("partial", iv.partial)
      << fraction_line("epsilon", iv.epsilon) << fraction_line("tail", iv.tail) << fraction_line("width", iv.width());
  if (per_word) {
    out << "k\tcontent\trank\tcontribution\n";
    for (const auto& w : report.per_word)
      out << w.k << "\t" << w.content << "\t" << w.rank << "\t" << w.contribution.str() << "\n";
  }
  return kOk;
}

int cmd_bratteli(const Options& o, int from, std::string format, std::ostream& out) {
  const Resolved r = resolve(o);
  if (from < 0) throw ConfigError("--from must be non-negative");
  if (o.json) format = "json";
  GraphFormat f;
  if (format == "dot")
    f = GraphFormat::Dot;
  else if (format == "json")
    f = GraphFormat::Json;
  else
    throw ConfigError("unknown graph format '" + format + "'");
  out << bratteli_export(r.sys, from, r.kmax, f);
  return kOk;
}

int cmd_measure(const Options& o, const std::string& clopen, std::ostream& out) {
  const Resolved r = resolve(o);
  const CrossedElement e = parse_expr(clopen, r.sys, r.field);
  const LocallyConstantFn f = e.coefficient(0);
  bool indicator = e.terms().size() <= 1 && e.degree_weight() == 0;
  for (const auto& kv : f.values()) indicator = indicator && kv.second.is_one();
  if (!indicator) throw InputError("'" + clopen + "' is not the indicator of a clopen set");
  const Rational mu = measure(f.support(), r.sys);
  if (o.json) {
    out << ordered_json{{"clopen", clopen}, {"measure", mu.str()}, {"measure_dec", mu.decimal()}}.dump(2) << "\n";
  } else {
    out << mu.str() << "\n";
  }
  return kOk;
}

int cmd_periodic(const Options& o, const std::string& word, const std::string& expr, const std::string& eval,
                 std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(o);
  const PeriodicPoint x = PeriodicPoint::make(word, r.sys);
  if (!x.is_primitive())
    err << "warning: period " << x.period() << " is not primitive (primitive period " << x.primitive_period()
        << "); ranks refer to the length-" << x.period() << " orbit with multiplicity\n";
  const CrossedElement a = parse_expr(expr, r.sys, r.field);
  const LaurentMatrix psi = psi_laurent(a, x);
  const Rational kt = periodic_rank_kt(a, x);
  const Rational rho = periodic_rank_rho(a, x);
  std::optional<Rational> ev;
  std::optional<Scalar> alpha;
  if (!eval.empty()) {
    alpha = Scalar(r.field, Rational::parse(eval));
    ev = evaluation_rank(a, x, *alpha);
  }
  if (o.json) {
    ordered_json j;
    j["word"] = x.word;
    j["period"] = x.period();
    j["primitive_period"] = x.primitive_period();
    j["psi"] = ordered_json::array();
    for (std::size_t i = 0; i < psi.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < psi.cols(); ++c) row.push_back(psi(i, c).str());
      j["psi"].push_back(row);
    }
    j["kt_rank"] = kt.str();
    j["rho_rank"] = rho.str();
    if (ev) {
      j["eval_point"] = alpha->literal();
      j["eval_rank"] = ev->str();
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "word " << x.word << " (period " << x.period() << ")\n";
  for (std::size_t i = 0; i < psi.rows(); ++i) {
    out << (i == 0 ? "psi  [" : "     [");
    for (std::size_t c = 0; c < psi.cols(); ++c) out << (c ? ", " : "") << psi(i, c).str();
    out << "]\n";
  }
  out << "kt-rank " << kt.str() << "\n";
  out << "rho-rank " << rho.str() << "\n";
  if (ev) out << "eval-rank(" << alpha->literal() << ") " << ev->str() << "\n";
  return kOk;
}

int cmd_check(const Options& o, const std::string& suite, std::ostream& out) {
  const Resolved r = resolve(o);
  const CheckResult res = run_suite(suite, o.seed, r.sys, r.field);
  if (o.json) {
    ordered_json j{{"suite", res.suite}, {"seed", res.seed}, {"checks", res.checks}, {"passed", res.passed()}};
    j["failures"] = res.failures;
    out << j.dump(2) << "\n";
  } else {
    out << "suite " << res.suite << " (seed " << res.seed << "): " << res.checks << " checks, "
        << res.failures.size() << " failures: " << (res.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : res.failures) out << "  failed: " << f << "\n";
  }
  return res.passed() ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified Sylvester rank intervals for crossed products of Bernoulli shifts", "crossrank"};
  app.require_subcommand(1);
  Options o;

  auto* towers = app.add_subcommand("towers", "list return words and the tail mass");
  add_common(towers, o);

  std::string expr, matrix_file;
  bool per_word = false;
  auto* rank = app.add_subcommand("rank", "certified rank interval of an element or matrix");
  add_common(rank, o);
  rank->add_option("--expr", expr, "element expression");
  rank->add_option("--matrix", matrix_file, "JSON file: array of rows of expression strings");
  rank->add_flag("--words", per_word, "include per-word ranks");

  int from = 0;
  std::string format = "dot";
  auto* bratteli = app.add_subcommand("bratteli", "Bratteli edges between levels N and N+1");
  add_common(bratteli, o);
  bratteli->add_option("--from", from, "coarse level");
  bratteli->add_option("--format", format, "dot or json");

  std::string clopen;
  auto* meas = app.add_subcommand("measure", "Bernoulli measure of a clopen set");
  add_common(meas, o);
  meas->add_option("--clopen", clopen, "indicator expression, e.g. chi(-1;111)")->required();

  std::string word, eval;
  auto* periodic = app.add_subcommand("periodic", "ranks at a periodic point");
  add_common(periodic, o);
  periodic->add_option("--word", word, "repeating word of the orbit")->required();
  periodic->add_option("--expr", expr, "element expression")->required();
  periodic->add_option("--eval", eval, "evaluation point p/q for t");

  std::string suite;
  auto* check = app.add_subcommand("check", "run a property suite");
  add_common(check, o);
  check->add_option("--suite", suite, "mass|hom|oracle|bratteli|sylvester")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*towers) return cmd_towers(o, out);
    if (*rank) return cmd_rank(o, expr, matrix_file, per_word, out, err);
    if (*bratteli) return cmd_bratteli(o, from, format, out);
    if (*meas) return cmd_measure(o, clopen, out);
    if (*periodic) return cmd_periodic(o, word, expr, eval, out, err);
    if (*check) return cmd_check(o, suite, out);
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InputError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const BadLetter& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace crossrank::cli
