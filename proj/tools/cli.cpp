#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "bench.hpp"
#include "relmatch/closure.hpp"
#include "relmatch/match.hpp"
#include "relmatch/oracle.hpp"
#include "relmatch/quantitative.hpp"
#include "relmatch/regex.hpp"
#include "relmatch/universal.hpp"

namespace relmatch::tools {

namespace {

using Json = nlohmann::ordered_json;

// Raised for one-line diagnostics that end in exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string regex;
  std::string nfa_path;
  std::string relation = "equality";
  std::string text;
  std::string file;
  bool json = false;
  bool oracle = false;
};

void add_automaton_flags(CLI::App& cmd, Input& in) {
  auto* regex = cmd.add_option("--regex", in.regex, "regular expression");
  auto* nfa = cmd.add_option("--nfa", in.nfa_path, "automaton file (nfa text format)");
  regex->excludes(nfa);
}

void add_query_flags(CLI::App& cmd, Input& in) {
  add_automaton_flags(cmd, in);
  cmd.add_option("--relation", in.relation, "string relation")
      ->check(CLI::IsMember({"equality", "infix", "prefix", "extension", "left-extension",
                             "subsequence", "supersequence"}));
  auto* text = cmd.add_option("--text", in.text, "input string");
  auto* file = cmd.add_option("--file", in.file, "read the input string from a file (raw bytes)");
  text->excludes(file);
  cmd.add_flag("--json", in.json, "JSON output");
  cmd.add_flag("--oracle", in.oracle, "cross-check against the brute-force oracle");
}

struct Loaded {
  Nfa nfa = Nfa::empty(0);
  Alphabet alphabet;
};

Loaded load_automaton(const CLI::App& cmd, const Input& in) {
  Loaded out;
  if (cmd.count("--regex") == 0 && cmd.count("--nfa") == 0) {
    throw UsageError("one of --regex or --nfa is required");
  }
  if (cmd.count("--regex") != 0) {
    try {
      CompiledRegex compiled = compile_regex(in.regex);
      out.nfa = std::move(compiled.nfa);
      out.alphabet = std::move(compiled.alphabet);
    } catch (const RegexSyntaxError& e) {
      throw UsageError(std::string("regex syntax error at ") + e.what());
    }
    return out;
  }
  std::ifstream file(in.nfa_path);
  if (!file) throw UsageError("cannot open automaton file '" + in.nfa_path + "'");
  try {
    out.nfa = read_nfa(file);
  } catch (const NfaFormatError& e) {
    throw UsageError(in.nfa_path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(in.nfa_path + ": " + e.what());
  }
  return out;
}

Word load_text(const CLI::App& cmd, const Input& in, Alphabet& alphabet) {
  if (cmd.count("--file") != 0) {
    std::ifstream file(in.file, std::ios::binary);
    if (!file) throw UsageError("cannot open text file '" + in.file + "'");
    const std::string bytes{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    return alphabet.encode(bytes);
  }
  if (cmd.count("--text") == 0) throw UsageError("one of --text or --file is required");
  return alphabet.encode(in.text);
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

Json answer_json(const LengthAnswer& answer, const Alphabet& alphabet) {
  Json j;
  j["kind"] = std::string(to_string(answer.kind));
  if (answer.kind == LengthAnswer::Kind::kFinite) {
    j["length"] = answer.length;
    j["witness"] = alphabet.decode(answer.witness);
  }
  return j;
}

int mismatch(std::ostream& err, const std::vector<std::string>& args, const std::string& engine,
             const std::string& oracle) {
  err << "oracle mismatch: engine " << engine << ", oracle " << oracle << "; reproduce with: relmatch";
  for (const std::string& a : args) err << " '" << a << "'";
  err << '\n';
  return kExitMismatch;
}

int run_match(const CLI::App& cmd, const Input& in, const std::vector<std::string>& args,
              std::ostream& out, std::ostream& err) {
  Loaded loaded = load_automaton(cmd, in);
  const Word w = load_text(cmd, in, loaded.alphabet);
  const Relation rel = *parse_relation(in.relation);
  const bool result = match(loaded.nfa, w, rel);
  if (in.json) {
    Json j;
    j["result"] = result;
    out << dump(j) << '\n';
  } else {
    out << (result ? "true" : "false") << '\n';
  }
  if (in.oracle) {
    const bool expected = oracle::brute_match(loaded.nfa, w, rel);
    if (expected != result) {
      return mismatch(err, args, result ? "true" : "false", expected ? "true" : "false");
    }
  }
  return result ? kExitTrue : kExitFalse;
}

int run_quantify(const CLI::App& cmd, const Input& in, const std::string& mode_name,
                 const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_automaton(cmd, in);
  const Word w = load_text(cmd, in, loaded.alphabet);
  const Relation rel = *parse_relation(in.relation);
  const Optimum mode = mode_name == "min" ? Optimum::kMin : Optimum::kMax;
  const LengthAnswer answer = quantitative_match(loaded.nfa, w, rel, mode);
  out << dump(answer_json(answer, loaded.alphabet)) << '\n';
  if (in.oracle) {
    const LengthAnswer expected = oracle::brute_quantitative(loaded.nfa, w, rel, mode);
    if (expected.kind != answer.kind || expected.length != answer.length) {
      return mismatch(err, args, dump(answer_json(answer, loaded.alphabet)),
                      dump(answer_json(expected, loaded.alphabet)));
    }
  }
  return answer.kind == LengthAnswer::Kind::kNoMatch ? kExitFalse : kExitTrue;
}

int run_universal(const CLI::App& cmd, const Input& in, std::uint64_t cap,
                  const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_automaton(cmd, in);
  const Word w = load_text(cmd, in, loaded.alphabet);
  const Relation rel = *parse_relation(in.relation);
  const UniversalResult result = universal_check(loaded.nfa, w, rel, cap);
  const std::string verdict(to_string(result.verdict));
  if (in.json) {
    Json j;
    j["result"] = verdict;
    if (result.counterexample) j["counterexample"] = loaded.alphabet.decode(*result.counterexample);
    j["explored"] = result.explored;
    out << dump(j) << '\n';
  } else {
    out << verdict << '\n';
  }
  if (result.verdict == UniversalResult::Verdict::kCapExceeded) return kExitCap;
  const bool holds = result.verdict == UniversalResult::Verdict::kHolds;
  if (in.oracle) {
    const bool expected = oracle::brute_universal(loaded.nfa, w, rel);
    if (expected != holds) return mismatch(err, args, verdict, expected ? "true" : "false");
  }
  return holds ? kExitTrue : kExitFalse;
}

int run_compile(const CLI::App& cmd, const Input& in, const std::string& emit, std::ostream& out) {
  const Loaded loaded = load_automaton(cmd, in);
  if (emit == "nfa") {
    write_nfa(out, loaded.nfa);
  } else if (emit == "upward") {
    write_nfa(out, upward_automaton(trim(loaded.nfa)));
  } else if (emit == "downward") {
    write_nfa(out, downward_automaton(trim(loaded.nfa)));
  } else {
    write_nfa(out, condense(downward_automaton(trim(loaded.nfa))).condensed);
  }
  return kExitTrue;
}

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& items, const char* flag) {
  std::vector<std::size_t> out;
  for (const std::string& s : items) {
    // Accept plain numbers and powers written as 2^k.
    try {
      if (s.rfind("2^", 0) == 0) {
        out.push_back(std::size_t{1} << std::stoul(s.substr(2)));
      } else {
        out.push_back(std::stoull(s));
      }
    } catch (const std::exception&) {
      throw UsageError(std::string("bad value '") + s + "' for " + flag);
    }
  }
  return out;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relation-aware regular expression matching"};
  app.name("relmatch");
  app.require_subcommand(1);

  Input in;
  std::string mode;
  std::string emit = "nfa";
  std::uint64_t cap = kDefaultUniversalCap;

  auto* match_cmd = app.add_subcommand("match", "is some u R w accepted");
  add_query_flags(*match_cmd, in);

  auto* quantify_cmd = app.add_subcommand("quantify", "shortest or longest accepted u R w");
  add_query_flags(*quantify_cmd, in);
  quantify_cmd->add_option("--mode", mode, "min or max")->required()->check(CLI::IsMember({"min", "max"}));

  auto* universal_cmd = app.add_subcommand("universal", "is every u R w accepted");
  add_query_flags(*universal_cmd, in);
  universal_cmd->add_option("--cap", cap, "budget for the exhaustive checkers");

  auto* compile_cmd = app.add_subcommand("compile", "print an automaton in nfa text format");
  add_automaton_flags(*compile_cmd, in);
  compile_cmd->add_option("--emit", emit, "nfa, upward, downward or condensed")
      ->check(CLI::IsMember({"nfa", "upward", "downward", "condensed"}));

  BenchConfig bench;
  std::vector<std::string> bench_relations{"subsequence", "supersequence"};
  std::vector<std::string> m_values{"2^14"};
  std::vector<std::string> w_lengths{"2^16", "2^17", "2^18", "2^19", "2^20"};
  std::string baseline_max;
  auto* bench_cmd = app.add_subcommand("bench", "scaling benchmark, CSV on stdout");
  bench_cmd->add_option("--relation", bench_relations, "subsequence and/or supersequence")
      ->delimiter(',')
      ->check(CLI::IsMember({"subsequence", "supersequence"}));
  bench_cmd->add_option("--m", m_values, "automaton sizes (transitions)")->delimiter(',');
  bench_cmd->add_option("--wlen", w_lengths, "text lengths")->delimiter(',');
  bench_cmd->add_option("--engines", bench.engines, "linear and/or baseline")
      ->delimiter(',')
      ->check(CLI::IsMember({"linear", "baseline"}));
  bench_cmd->add_option("--baseline-max-wlen", baseline_max, "skip baseline rows above this length");
  bench_cmd->add_option("--reps", bench.reps, "repetitions per row (median reported)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--sigma", bench.sigma, "alphabet size")->check(CLI::Range(2, 1 << 20));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitTrue;
    }
    err << "relmatch: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*match_cmd) return run_match(*match_cmd, in, args, out, err);
    if (*quantify_cmd) return run_quantify(*quantify_cmd, in, mode, args, out, err);
    if (*universal_cmd) return run_universal(*universal_cmd, in, cap, args, out, err);
    if (*compile_cmd) return run_compile(*compile_cmd, in, emit, out);
    bench.relations.clear();
    for (const std::string& r : bench_relations) bench.relations.push_back(*parse_relation(r));
    bench.m_values = parse_sizes(m_values, "--m");
    bench.w_lengths = parse_sizes(w_lengths, "--wlen");
    if (!baseline_max.empty()) bench.baseline_max_wlen = parse_sizes({baseline_max}, "--baseline-max-wlen")[0];
    write_bench_csv(out, bench_scaling(bench));
    return kExitTrue;
  } catch (const UsageError& e) {
    err << "relmatch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "relmatch: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace relmatch::tools
