#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pkostka/cache.hpp"
#include "pkostka/character.hpp"
#include "pkostka/engine.hpp"
#include "pkostka/indecomposability.hpp"
#include "pkostka/oracle.hpp"
#include "pkostka/serialize.hpp"
#include "pkostka/verify.hpp"

namespace pkostka::cli {
namespace {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Settings {
  std::string format = "json";
  bool compose = false;
  bool steps = false;
  std::optional<std::string> cache_dir;
  std::uint64_t seed = OracleOptions{}.seed;
  std::string p_text;
  std::string lambda_text;
  std::string mu_text;
  std::string degree_text;
  std::string blocks_text;
  std::size_t budget = EngineOptions{}.budget;
  std::string suite;
};

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v < 0)
    throw InputError(std::string("malformed ") + what + " '" + text + "'");
  return v;
}

int parse_prime(const std::string& text) {
  const int p = parse_int(text, "prime");
  if (!is_prime(p)) throw InputError("p '" + text + "' is not prime");
  return p;
}

// Primes the oracle can work with.
int parse_oracle_prime(const std::string& text) {
  const int p = parse_prime(text);
  if (p > 255) throw InputError("p '" + text + "' is too large for the oracle (at most 251)");
  return p;
}

Partition parse_lambda(const std::string& text, bool compose) {
  try {
    return parse_partition(text, compose);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string paren(const Partition& l) { return "(" + l.to_string() + ")"; }

void emit(std::ostream& out, const Settings& s, const Json& j, const std::string& text) {
  if (s.format == "json")
    out << j.dump() << '\n';
  else
    out << text;
}

// Loads key from the cache or computes and stores it.
template <class F>
Json cached(ResultCache& cache, const Settings& s, const std::string& key, F compute) {
  if (auto hit = cache.load(key, s.seed)) return hit->value;
  Json value = compute();
  cache.store(key, s.seed, value);
  return value;
}

int cmd_pkostka(const Settings& s, ResultCache& cache, std::ostream& out) {
  const int p = parse_oracle_prime(s.p_text);
  const Partition lambda = parse_lambda(s.lambda_text, s.compose);
  const Partition mu = parse_lambda(s.mu_text, s.compose);
  if (lambda.degree() != mu.degree())
    throw InputError("degree mismatch: '" + s.lambda_text + "' has degree " + std::to_string(lambda.degree()) +
                     " but '" + s.mu_text + "' has degree " + std::to_string(mu.degree()));
  const std::string key = cache_key("pkostka", p, {lambda.to_string(), mu.to_string(), std::to_string(s.budget),
                                                   s.steps ? "steps" : "names"});
  const Json j = cached(cache, s, key, [&] {
    EngineOptions opt;
    opt.budget = s.budget;
    opt.seed = s.seed;
    Engine engine(p, opt);
    return to_json(engine.pkostka(lambda, mu), s.steps);
  });
  std::ostringstream text;
  text << "[M^" << paren(lambda) << " : Y^" << paren(mu) << "] at p=" << p << ": ";
  if (j["multiplicity"].is_null())
    text << "unresolved";
  else
    text << j["multiplicity"].get<std::int64_t>() << " (" << j["kind"].get<std::string>() << ")";
  text << "\ntrace:";
  for (const auto& step : j["trace"]) text << ' ' << (step.is_string() ? step.get<std::string>() : step["rule"].get<std::string>());
  text << '\n';
  emit(out, s, j, text.str());
  return j["kind"] == "unresolved" ? kExitUnresolved : kExitOk;
}

int cmd_indec(const Settings& s, std::ostream& out) {
  const int p = parse_prime(s.p_text);
  if (!s.lambda_text.empty() && !s.degree_text.empty()) throw InputError("give either --degree or --lambda, not both");
  if (!s.lambda_text.empty()) {
    const Partition lambda = parse_lambda(s.lambda_text, s.compose);
    const auto v = is_indecomposable(lambda, p);
    Json j{{"p", p}, {"lambda", to_json(lambda)}};
    const Json verdict = to_json(v);
    for (const auto& [k, val] : verdict.items()) j[k] = val;
    std::ostringstream text;
    text << "M^" << paren(lambda) << " at p=" << p << ": " << (v.indecomposable ? "indecomposable" : "decomposable")
         << " (" << v.rule;
    if (v.witness) text << ", contains Y^" << paren(*v.witness);
    text << ")\n";
    emit(out, s, j, text.str());
    return kExitOk;
  }
  if (s.degree_text.empty()) throw InputError("indec needs --degree or --lambda");
  const int r = parse_int(s.degree_text, "degree");
  const auto list = indecomposable_partitions(r, p);
  Json parts = Json::array();
  std::ostringstream text;
  for (const auto& l : list) {
    parts.push_back(to_json(l));
    text << paren(l) << '\n';
  }
  emit(out, s, Json{{"p", p}, {"r", r}, {"indecomposable", parts}}, text.str());
  return kExitOk;
}

std::string character_text(const CharacterVector& v) {
  std::string out;
  for (const auto& [mu, m] : v.sorted()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + " ";
    out += "chi^" + paren(mu);
  }
  return out.empty() ? "0" : out;
}

int cmd_character(const Settings& s, std::ostream& out) {
  const Partition lambda = parse_lambda(s.lambda_text, s.compose);
  const CharacterVector v = permutation_character(lambda);
  Json j{{"lambda", to_json(lambda)}, {"character", to_json(v)}};
  std::ostringstream text;
  text << "M^" << paren(lambda) << " = " << character_text(v) << '\n';
  if (!s.blocks_text.empty()) {
    const int p = parse_prime(s.blocks_text);
    Json blocks = Json::array();
    const auto split = block_split(v, p);
    // principal-looking blocks first: descending order of the core
    for (auto it = split.rbegin(); it != split.rend(); ++it) {
      blocks.push_back(Json{{"core", to_json(it->first.core)}, {"weight", it->first.weight}, {"character", to_json(it->second)}});
      text << "  core " << paren(it->first.core) << " weight " << it->first.weight << ": " << character_text(it->second)
           << '\n';
    }
    j["p"] = p;
    j["blocks"] = blocks;
  }
  emit(out, s, j, text.str());
  return kExitOk;
}

std::string record_text(const DecompositionRecord& rec) {
  std::ostringstream text;
  text << "M^" << paren(rec.lambda) << " =";
  bool first = true;
  for (const auto& e : rec.summands) {
    text << (first ? " " : " + ");
    first = false;
    if (e.multiplicity != 1) text << e.multiplicity << " ";
    text << "Y^" << paren(e.label) << " [dim " << e.dimension << "]";
  }
  return text.str() + '\n';
}

int cmd_decompose(const Settings& s, ResultCache& cache, std::ostream& out) {
  const int p = parse_oracle_prime(s.p_text);
  const Partition lambda = parse_lambda(s.lambda_text, s.compose);
  OracleOptions opt;
  opt.seed = s.seed;
  opt.tabloid_budget = s.budget;
  const Json j = cached(cache, s, cache_key("decompose", p, {lambda.to_string(), std::to_string(s.budget)}), [&] {
    YoungOracle oracle(p, opt);
    return to_json(oracle.decompose(lambda));
  });
  DecompositionRecord rec;
  rec.lambda = lambda;
  for (const auto& e : j["summands"])
    rec.summands.push_back({partition_from_json(e["mu"]), e["dim"].get<std::size_t>(), e["mult"].get<int>()});
  emit(out, s, j, record_text(rec));
  return kExitOk;
}

int cmd_table(const Settings& s, ResultCache& cache, std::ostream& out) {
  const int p = parse_oracle_prime(s.p_text);
  const int r = parse_int(s.degree_text, "degree");
  OracleOptions opt;
  opt.seed = s.seed;
  opt.tabloid_budget = s.budget;
  const Json j = cached(cache, s, cache_key("table", p, {std::to_string(r), std::to_string(s.budget)}), [&] {
    YoungOracle oracle(p, opt);
    return to_json(oracle.table(r));
  });
  std::string text;
  const LabelTable parsed = label_table_from_json(j);
  for (const auto& rec : parsed.rows) text += record_text(rec);
  emit(out, s, j, text);
  return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  std::vector<std::string> names;
  if (s.suite == "all")
    for (const auto& info : suites()) names.push_back(info.name);
  else
    names.push_back(s.suite);
  for (const auto& n : names) {
    bool known = false;
    for (const auto& info : suites()) known = known || info.name == n;
    if (!known) {
      std::string list;
      for (const auto& info : suites()) list += " " + info.name;
      throw InputError("unknown suite '" + n + "'; available:" + list + " all");
    }
  }
  VerifyContext context(s.seed);
  Json reports = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& n : names) {
    const SuiteReport rep = run_suite(n, context);
    ok = ok && rep.passed;
    reports.push_back(Json{{"suite", rep.name},
                           {"passed", rep.passed},
                           {"cases", rep.cases},
                           {"failures", rep.failures},
                           {"seconds", std::round(rep.seconds * 1000) / 1000}});
    text << std::left << std::setw(22) << rep.name << (rep.passed ? "PASS" : "FAIL") << "  " << std::right
         << std::setw(7) << rep.cases << " cases  " << std::fixed << std::setprecision(2) << rep.seconds << "s\n";
    for (const auto& f : rep.failures) text << "    " << f << '\n';
  }
  emit(out, s, Json{{"suites", reports}}, text.str());
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"p-Kostka numbers and Young module decompositions over F_p", "pkostka"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--compose", s.compose, "Sort partition arguments instead of rejecting them");
  app.add_option("--cache-dir", s.cache_dir, std::string("Result cache directory (overrides ") + kCacheEnvVar + ")");
  app.add_option("--seed", s.seed, "Seed for the randomized splitting");

  auto* pk = app.add_subcommand("pkostka", "Multiplicity [M^lambda : Y^mu]");
  pk->add_option("--p", s.p_text, "Prime")->required();
  pk->add_option("--lambda", s.lambda_text, "lambda, e.g. 4,2")->required();
  pk->add_option("--mu", s.mu_text, "mu, e.g. 6")->required();
  pk->add_option("--budget", s.budget, "Tabloid budget for the oracle base case");
  pk->add_flag("--steps", s.steps, "Full reduction records in the trace");

  auto* indec = app.add_subcommand("indec", "Indecomposable two-part permutation modules");
  indec->add_option("--p", s.p_text, "Prime")->required();
  indec->add_option("--degree", s.degree_text, "List all indecomposable M^(r-j,j)");
  indec->add_option("--lambda", s.lambda_text, "Decide a single partition");

  auto* ch = app.add_subcommand("character", "Ordinary character of M^lambda");
  ch->add_option("--lambda", s.lambda_text, "lambda")->required();
  ch->add_option("--blocks", s.blocks_text, "Split into p-blocks");

  auto* oracle = app.add_subcommand("oracle", "Explicit decompositions");
  oracle->require_subcommand(1);
  auto* dec = oracle->add_subcommand("decompose", "Labelled decomposition of M^lambda");
  dec->add_option("--p", s.p_text, "Prime")->required();
  dec->add_option("--lambda", s.lambda_text, "lambda")->required();
  dec->add_option("--budget", s.budget, "Tabloid budget");
  auto* table = oracle->add_subcommand("table", "All decompositions in one degree");
  table->add_option("--p", s.p_text, "Prime")->required();
  table->add_option("--degree", s.degree_text, "Degree r")->required();
  table->add_option("--budget", s.budget, "Tabloid budget");

  auto* verify = app.add_subcommand("verify", "Run a named self-check suite");
  verify->add_option("suite", s.suite, "Suite name, or all")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto first = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind("--", 0) != 0; });
    if (first != args.end() && !app.get_subcommand_no_throw(*first) && (first == args.begin() || first[-1] == "--compose"))
      err << "error: unknown command '" << *first << "'\n";
    else
      err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    ResultCache cache = ResultCache::from_settings(s.cache_dir, &err);
    if (pk->parsed()) return cmd_pkostka(s, cache, out);
    if (indec->parsed()) return cmd_indec(s, out);
    if (ch->parsed()) return cmd_character(s, out);
    if (dec->parsed()) return cmd_decompose(s, cache, out);
    if (table->parsed()) return cmd_table(s, cache, out);
    if (verify->parsed()) return cmd_verify(s, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "unresolved: " << e.what() << '\n';
    return kExitUnresolved;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pkostka::cli
