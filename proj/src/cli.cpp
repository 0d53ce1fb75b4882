// Copyright 2026 The twelverep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twelverep/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "twelverep/analysis.hpp"
#include "twelverep/errors.hpp"
#include "twelverep/graph_io.hpp"
#include "twelverep/oracle.hpp"
#include "twelverep/shortener.hpp"
#include "twelverep/word.hpp"

namespace twelverep::cli {

namespace {

enum class Command {
  kDecode,
  kVerify,
  kShorten,
  kAnalyze,
  kOracleShortest,
  kOraclePermutation,
  kOracleLabelSearch,
};

struct CliConfig {
  Command command = Command::kDecode;
  std::string word_literal;
  std::vector<std::string> word_tokens;
  std::string word_file;
  std::string graph_path;
  bool json = false;
  TraceLevel trace = TraceLevel::kNone;
  std::optional<int> max_n;
  bool acknowledge_slow = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Word load_word(CliConfig config) {
  const int sources = static_cast<int>(!config.word_literal.empty()) +
                      static_cast<int>(!config.word_tokens.empty()) +
                      static_cast<int>(!config.word_file.empty());
  if (sources > 1) {
    throw Error(ErrorCode::kParseError,
                "give the word once: positional, --word or --word-file");
  }
  for (const std::string& token : config.word_tokens) {
    if (!config.word_literal.empty()) config.word_literal += ' ';
    config.word_literal += token;
  }
  if (!config.word_file.empty()) return parse_word(read_file(config.word_file));
  if (config.word_literal.empty()) {
    throw Error(ErrorCode::kParseError, "a word is required");
  }
  return parse_word(config.word_literal);
}

LabeledGraph load_graph(const CliConfig& config) {
  if (config.graph_path.empty()) {
    throw Error(ErrorCode::kParseError, "--graph is required");
  }
  return load_graph_file(config.graph_path);
}

oracle::SearchBudget budget_for(const CliConfig& config,
                                oracle::SearchBudget budget) {
  if (config.max_n) budget.max_n = *config.max_n;
  budget.acknowledge_slow = config.acknowledge_slow;
  return budget;
}

std::string join(const std::vector<Label>& labels) {
  std::string s;
  for (Label x : labels) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

int cmd_decode(const CliConfig& config, std::ostream& out) {
  const Word w = load_word(config);
  const LabeledGraph g = decode(w);
  if (config.json) {
    out << graph_to_json(g).dump() << '\n';
  } else {
    out << "n=" << g.n() << " edges:";
    for (const Edge& e : g.edges()) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  const LabeledGraph g = load_graph(config);
  const Word w = load_word(config);
  const bool ok = verify(w, g);
  if (config.json) {
    out << nlohmann::json{{"verified", ok}}.dump() << '\n';
  } else {
    out << (ok ? "true" : "false") << '\n';
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_shorten(const CliConfig& config, std::ostream& out) {
  const Word w = load_word(config);
  auto [result, trace] = shorten_with_trace(w, config.trace);
  if (config.json) {
    nlohmann::json doc = {{"input", format_word(w)},
                          {"input_length", w.size()},
                          {"word", format_word(result)},
                          {"length", result.size()}};
    if (config.trace != TraceLevel::kNone) doc["trace"] = trace_to_json(trace);
    out << doc.dump() << '\n';
  } else if (config.trace != TraceLevel::kNone) {
    out << format_trace(trace);
  } else {
    out << format_word(result) << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const CliConfig& config, std::ostream& out) {
  const AnalysisReport report = analyze(load_graph(config));
  if (config.json) {
    out << to_json(report).dump() << '\n';
    return kExitOk;
  }
  out << "n=" << report.n << '\n';
  out << "edges=" << report.edge_count << '\n';
  out << "bad={" << join(report.bad.bad) << "}\n";
  for (const auto& [b, t] : report.bad.witnesses) {
    out << "  witness " << b << ": (" << t[0] << ',' << t[1] << ',' << t[2]
        << ")\n";
  }
  out << "lower_bound=" << report.lower_bound << '\n';
  out << "valid=" << (report.valid() ? "true" : "false") << '\n';
  if (report.forbidden_pattern) {
    out << "pattern=" << to_string(report.forbidden_pattern->kind) << '('
        << join(report.forbidden_pattern->vertices) << ")\n";
  } else {
    out << "pattern=none\n";
  }
  return kExitOk;
}

int print_search(const CliConfig& config, const oracle::SearchResult& result,
                 std::ostream& out) {
  if (config.json) {
    out << oracle::to_json(result, true).dump() << '\n';
  } else if (result.word) {
    out << format_word(*result.word) << '\n';
  } else {
    out << "none\n";
  }
  return result.found() ? kExitOk : kExitNegative;
}

int cmd_oracle_shortest(const CliConfig& config, std::ostream& out) {
  const LabeledGraph g = load_graph(config);
  return print_search(
      config,
      oracle::brute_force_shortest(
          g, budget_for(config, oracle::SearchBudget::words())),
      out);
}

int cmd_oracle_permutation(const CliConfig& config, std::ostream& out) {
  const LabeledGraph g = load_graph(config);
  return print_search(
      config,
      oracle::is_permutation_representable(
          g, budget_for(config, oracle::SearchBudget::permutations())),
      out);
}

int cmd_oracle_label_search(const CliConfig& config, std::ostream& out) {
  const LabeledGraph g = load_graph(config);
  oracle::RepresentantProvider provider;
  if (g.n() > oracle::kDefaultWordSearchMaxN) {
    provider = oracle::construct_representant;
  }
  std::optional<oracle::LabelingResult> result;
  try {
    result = oracle::min_bad_labeling(
        g, budget_for(config, oracle::SearchBudget::permutations()), provider);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotRepresentable) throw;
  }
  if (config.json) {
    nlohmann::json doc = {{"found", result.has_value()}};
    if (result) {
      doc["labeling"] = result->labeling;
      doc["bad_count"] = result->bad_count;
      doc["word"] = format_word(result->representant);
      doc["length"] = result->representant.size();
      doc["graph"] = graph_to_json(result->relabeled);
      doc["stats"] = {{"labelings_checked", result->labelings_checked},
                      {"valid_labelings", result->valid_labelings}};
    } else {
      doc["labeling"] = nullptr;
      doc["bad_count"] = nullptr;
      doc["word"] = nullptr;
      doc["length"] = nullptr;
    }
    out << doc.dump() << '\n';
  } else if (result) {
    out << "labeling=" << join(result->labeling) << '\n';
    out << "bad_count=" << result->bad_count << '\n';
    out << "word=" << format_word(result->representant) << '\n';
  } else {
    out << "none\n";
  }
  return result ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& /*in*/,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest 12-representants of labeled graphs"};
  app.name("twelverep");
  app.require_subcommand(1);
  CliConfig config;

  std::string trace_name = "none";

  auto add_word = [&](CLI::App* sub) {
    sub->add_option("WORD", config.word_tokens,
                    "word as a digit string (8753532847616421) or letters");
    sub->add_option("--word", config.word_literal, "word literal");
    sub->add_option("--word-file", config.word_file, "file holding the word");
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph_path, "graph JSON file")
        ->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-n", config.max_n, "largest n to search");
    sub->add_flag("--acknowledge-slow", config.acknowledge_slow,
                  "allow --max-n above the default cap");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"decode", "print the graph a word represents", Command::kDecode},
      {"verify", "check that a word represents a graph", Command::kVerify},
      {"shorten", "compute a shortest representant", Command::kShorten},
      {"analyze", "bad vertices, lower bound, forbidden patterns",
       Command::kAnalyze},
      {"oracle-shortest", "exhaustive shortest representant",
       Command::kOracleShortest},
      {"oracle-permutation", "exhaustive permutation representant",
       Command::kOraclePermutation},
      {"oracle-label-search", "labeling with the fewest bad vertices",
       Command::kOracleLabelSearch},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_flag("--json", config.json, "machine-readable output");
    sub->callback([&config, cmd = e.command] { config.command = cmd; });
    switch (e.command) {
      case Command::kDecode:
        add_word(sub);
        break;
      case Command::kVerify:
        add_graph(sub);
        add_word(sub);
        break;
      case Command::kShorten:
        add_word(sub);
        sub->add_option("--trace", trace_name, "none|lengths|full")
            ->check(CLI::IsMember({"none", "lengths", "full"}));
        break;
      case Command::kAnalyze:
        add_graph(sub);
        break;
      case Command::kOracleShortest:
      case Command::kOraclePermutation:
      case Command::kOracleLabelSearch:
        add_graph(sub);
        add_budget(sub);
        break;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "twelverep: " << e.what() << '\n';
    return kExitMalformed;
  }
  config.trace = *trace_level_from_string(trace_name);

  try {
    switch (config.command) {
      case Command::kDecode: return cmd_decode(config, out);
      case Command::kVerify: return cmd_verify(config, out);
      case Command::kShorten: return cmd_shorten(config, out);
      case Command::kAnalyze: return cmd_analyze(config, out);
      case Command::kOracleShortest: return cmd_oracle_shortest(config, out);
      case Command::kOraclePermutation:
        return cmd_oracle_permutation(config, out);
      case Command::kOracleLabelSearch:
        return cmd_oracle_label_search(config, out);
    }
  } catch (const Error& e) {
    err << "twelverep: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "twelverep: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace twelverep::cli
