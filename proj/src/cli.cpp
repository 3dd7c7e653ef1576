#include "pidx/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pidx/enumeration.hpp"
#include "pidx/extraction.hpp"
#include "pidx/indices.hpp"
#include "pidx/report_io.hpp"
#include "pidx/sampling.hpp"

namespace pidx {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSizeCap = 4;
constexpr int kExitPropertyFailure = 5;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Problem load_problem(const std::string& path) {
  return parse_problem(read_file(path));
}

std::vector<Element> parse_label_list(const std::string& text) {
  std::vector<Element> labels;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    try {
      std::size_t used = 0;
      const int label = std::stoi(part, &used);
      if (used != part.size() || label < 1 || label > 63) {
        throw std::invalid_argument(part);
      }
      labels.push_back(label);
    } catch (const std::exception&) {
      throw UsageError("malformed label list entry \"" + part +
                       "\"; expected labels like 1,3,5");
    }
  }
  if (labels.empty()) throw UsageError("empty label list");
  return labels;
}

std::vector<IndexKind> parse_index_list(const std::string& text) {
  if (text == "all") {
    return {IndexKind::shapley, IndexKind::banzhaf_raw, IndexKind::banzhaf_frac,
            IndexKind::banzhaf_norm, IndexKind::deegan_packel};
  }
  std::vector<IndexKind> kinds;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    const auto kind = index_kind_from_string(part);
    if (!kind) throw UsageError("unknown index \"" + part + "\"");
    if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end()) {
      kinds.push_back(*kind);
    }
  }
  return kinds;
}

int default_precision() {
  const char* env = std::getenv("PIDX_PRECISION");
  if (env == nullptr) return 3;
  try {
    std::size_t used = 0;
    const int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 0 || value > 18) {
      throw std::invalid_argument(env);
    }
    return value;
  } catch (const std::exception&) {
    throw UsageError(
        "environment variable PIDX_PRECISION must be an integer between 0 "
        "and 18");
  }
}

Json set_json(SubsetMask s) {
  Json arr = Json::array();
  for (Element e : s) arr.push_back(e);
  return arr;
}

Json family_json(const MinimalFamily& family) {
  Json arr = Json::array();
  for (SubsetMask s : family.members()) arr.push_back(set_json(s));
  return arr;
}

struct CommonOpts {
  std::string input;
  int max_brute_bits = kDefaultBruteCap;
  int threads = 1;
};

int cmd_minimal(const CommonOpts& common, const std::string& kind,
                const std::string& algo_name,
                const std::optional<std::string>& seed_set,
                std::ostream& out) {
  const Problem problem = load_problem(common.input);
  const PredicateOracle oracle = problem.make_oracle();
  const ExtractAlgo algo = [&] {
    if (algo_name == "deletion") return ExtractAlgo::deletion;
    if (algo_name == "quickxplain") return ExtractAlgo::quickxplain;
    if (algo_name == "progression") return ExtractAlgo::progression;
    return ExtractAlgo::dichotomic;
  }();

  ExtractionResult result;
  if (kind == "msp") {
    SubsetMask seed = oracle.ground().full();
    if (seed_set) {
      const std::vector<Element> labels = parse_label_list(*seed_set);
      for (Element e : labels) {
        if (!oracle.ground().contains(e)) {
          throw UsageError("seed label " + std::to_string(e) +
                           " is outside the ground set of size " +
                           std::to_string(oracle.ground().size()));
        }
      }
      seed = SubsetMask::from_labels(labels);
    }
    result = extract_msp(oracle, seed, algo);
  } else {
    if (seed_set) {
      throw UsageError("--seed-set only applies to --kind msp; break "
                       "extraction always seeds the full ground set");
    }
    result = extract_mbp(oracle, algo);
  }

  Json doc;
  doc["kind"] = kind;
  doc["algorithm"] = to_string(result.algorithm);
  doc["set"] = set_json(result.found);
  doc["cardinality"] = result.found.cardinality();
  doc["oracle_calls"] = result.oracle_calls;
  out << doc.dump() << '\n';
  return 0;
}

int cmd_enumerate(const CommonOpts& common, const std::string& kind,
                  const std::string& algo,
                  const std::optional<std::uint64_t>& limit,
                  std::ostream& out) {
  const Problem problem = load_problem(common.input);
  const PredicateOracle oracle = problem.make_oracle();
  if (limit && algo != "marco") {
    throw UsageError("--limit requires --algo marco");
  }

  if (kind == "both") {
    const auto [msps, mbps] =
        algo == "brute"
            ? enumerate_brute(oracle, common.max_brute_bits, common.threads)
            : enumerate_marco_both(oracle);
    const bool dual = check_duality(msps, mbps);
    Json doc;
    doc["msp"] = family_json(msps);
    doc["mbp"] = family_json(mbps);
    doc["duality"] = dual ? "ok" : "FAIL";
    out << doc.dump() << '\n';
    return dual ? 0 : kExitPropertyFailure;
  }

  const FamilyKind family_kind =
      kind == "msp" ? FamilyKind::msp : FamilyKind::mbp;
  MinimalFamily family = [&] {
    if (algo == "brute") {
      auto both = enumerate_brute(oracle, common.max_brute_bits, common.threads);
      return family_kind == FamilyKind::msp ? std::move(both.first)
                                            : std::move(both.second);
    }
    return enumerate_marco(oracle, family_kind,
                           limit ? std::optional<std::size_t>(*limit)
                                 : std::nullopt);
  }();
  out << render_family(family) << '\n';
  return 0;
}

int cmd_indices(const CommonOpts& common, const std::string& index_list,
                const std::string& method_name, int precision,
                const std::string& format_name, std::ostream& out) {
  const Problem problem = load_problem(common.input);
  const std::vector<IndexKind> requested = parse_index_list(index_list);
  const auto method = compute_method_from_string(method_name);
  if (!method) throw UsageError("unknown method \"" + method_name + "\"");
  const ReportFormat format = [&] {
    if (format_name == "json") return ReportFormat::json;
    if (format_name == "csv") return ReportFormat::csv;
    return ReportFormat::table;
  }();
  const IndexReport report =
      compute_report(problem, requested, *method, precision,
                     common.max_brute_bits, common.threads);
  out << render_report(report, format);
  if (format == ReportFormat::json) out << '\n';
  return 0;
}

int cmd_sample(const CommonOpts& common, const std::string& index_name,
               double epsilon, double delta, std::uint64_t rng_seed,
               std::uint64_t max_samples, std::ostream& out) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw UsageError("--epsilon must lie strictly between 0 and 1");
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw UsageError("--delta must lie strictly between 0 and 1");
  }
  if (max_samples == 0) {
    throw UsageError("--max-samples must be positive");
  }
  const Problem problem = load_problem(common.input);
  const PredicateOracle oracle = problem.make_oracle();
  SampleConfig config;
  config.epsilon = epsilon;
  config.delta = delta;
  config.rng_seed = rng_seed;
  config.max_samples = max_samples;

  if (index_name == "shapley") {
    const SampleEstimate estimate = sample_shapley(oracle, config);
    out << render_sample(estimate, "shapley", config) << '\n';
    return 0;
  }
  // banzhaf-raw: one substream per element, merged into a single result.
  const int m = oracle.ground().size();
  SampleEstimate merged;
  merged.rng_seed = config.rng_seed;
  merged.estimate.assign(static_cast<std::size_t>(m), 0.0);
  merged.half_width.assign(static_cast<std::size_t>(m), 0.0);
  for (Element e = 1; e <= m; ++e) {
    const SampleEstimate single = sample_banzhaf_raw(oracle, e, config);
    merged.estimate[static_cast<std::size_t>(e) - 1] =
        single.estimate[static_cast<std::size_t>(e) - 1];
    merged.half_width[static_cast<std::size_t>(e) - 1] =
        single.half_width[static_cast<std::size_t>(e) - 1];
    merged.samples_used = single.samples_used;
  }
  out << render_sample(merged, "banzhaf_raw", config) << '\n';
  return 0;
}

int cmd_check(const CommonOpts& common, std::uint64_t trials,
              std::uint64_t rng_seed, bool duality, std::ostream& out) {
  const Problem problem = load_problem(common.input);
  const PredicateOracle oracle = problem.make_oracle();
  int exit_code = 0;

  const auto witness = find_monotonicity_violation(oracle, trials, rng_seed);
  if (witness) {
    std::ostringstream line;
    line << "monotone: FAIL " << witness->reason << " (inner "
         << witness->inner << ", outer " << witness->outer << ")";
    out << line.str() << '\n';
    exit_code = kExitPropertyFailure;
  } else {
    out << "monotone: ok (" << trials << " trials)" << '\n';
  }

  if (duality) {
    const auto [msps, mbps] =
        enumerate_brute(oracle, common.max_brute_bits, common.threads);
    if (check_duality(msps, mbps)) {
      out << "duality: ok" << '\n';
    } else {
      out << "duality: FAIL" << '\n';
      exit_code = kExitPropertyFailure;
    }
  }
  return exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"power indices of elements under monotone set predicates"};
  app.require_subcommand(1);

  CommonOpts common;
  const auto add_common = [&common](CLI::App* cmd, bool with_threads) {
    cmd->add_option("--input", common.input, "problem file (JSON)")
        ->required();
    cmd->add_option("--max-brute-bits", common.max_brute_bits,
                    "override the exhaustive-tabulation cap")
        ->check(CLI::Range(1, 63));
    if (with_threads) {
      cmd->add_option("--threads", common.threads,
                      "workers for exhaustive tabulation")
          ->check(CLI::Range(1, 256));
    }
  };

  // minimal
  std::string minimal_kind = "msp";
  std::string minimal_algo = "deletion";
  std::string seed_set_text;
  CLI::App* minimal = app.add_subcommand(
      "minimal", "extract one minimal satisfying set or minimal break");
  add_common(minimal, false);
  minimal->add_option("--kind", minimal_kind, "msp or mbp")
      ->check(CLI::IsMember({"msp", "mbp"}));
  minimal
      ->add_option("--algo", minimal_algo,
                   "deletion, quickxplain, progression, or dichotomic")
      ->check(CLI::IsMember(
          {"deletion", "quickxplain", "progression", "dichotomic"}));
  CLI::Option* seed_opt = minimal->add_option(
      "--seed-set", seed_set_text, "comma-separated seed labels, e.g. 1,3,5");

  // enumerate
  std::string enum_kind = "both";
  std::string enum_algo = "brute";
  std::uint64_t enum_limit = 0;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "enumerate minimal satisfying sets and minimal breaks");
  add_common(enumerate, true);
  enumerate->add_option("--kind", enum_kind, "msp, mbp, or both")
      ->check(CLI::IsMember({"msp", "mbp", "both"}));
  enumerate->add_option("--algo", enum_algo, "brute or marco")
      ->check(CLI::IsMember({"brute", "marco"}));
  CLI::Option* limit_opt = enumerate->add_option(
      "--limit", enum_limit, "stop after this many members (marco only)");

  // indices
  std::string index_list = "all";
  std::string method_name = "auto";
  std::string format_name = "table";
  int precision = -1;  // resolved after parse: flag > environment > 3
  CLI::App* indices = app.add_subcommand(
      "indices", "compute exact power indices");
  add_common(indices, true);
  indices->add_option("--index", index_list,
                      "comma-separated indices or \"all\"");
  indices->add_option("--method", method_name,
                      "auto, brute, family, or threshold-dp");
  CLI::Option* precision_opt = indices->add_option(
      "--precision", precision, "decimal places for rendered values");
  precision_opt->check(CLI::Range(0, 18));
  indices->add_option("--format", format_name, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // sample
  std::string sample_index;
  double epsilon = 0.05;
  double delta = 0.05;
  std::uint64_t rng_seed = 0;
  std::uint64_t max_samples = 10'000'000;
  CLI::App* sample = app.add_subcommand(
      "sample", "estimate an index by Monte-Carlo sampling");
  add_common(sample, false);
  sample->add_option("--index", sample_index, "shapley or banzhaf-raw")
      ->required()
      ->check(CLI::IsMember({"shapley", "banzhaf-raw"}));
  sample->add_option("--epsilon", epsilon, "additive error bound");
  sample->add_option("--delta", delta, "failure probability");
  sample->add_option("--rng-seed", rng_seed, "generator seed");
  sample->add_option("--max-samples", max_samples, "sample-count ceiling");

  // check
  std::uint64_t trials = 1000;
  bool duality = false;
  CLI::App* check = app.add_subcommand(
      "check", "sanity-check an instance (monotonicity, duality)");
  add_common(check, true);
  check->add_option("--monotone-trials", trials,
                    "random subset pairs to test");
  check->add_option("--rng-seed", rng_seed, "generator seed");
  check->add_flag("--duality", duality,
                  "also verify the hitting-set duality exhaustively");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pidx");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (common.max_brute_bits != kDefaultBruteCap) {
    err << "warning: exhaustive-tabulation cap overridden to m <= "
        << common.max_brute_bits << "; expect 2^m memory and time" << '\n';
  }

  try {
    if (app.got_subcommand(minimal)) {
      return cmd_minimal(common, minimal_kind, minimal_algo,
                         seed_opt->count() > 0
                             ? std::optional<std::string>(seed_set_text)
                             : std::nullopt,
                         out);
    }
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(common, enum_kind, enum_algo,
                           limit_opt->count() > 0
                               ? std::optional<std::uint64_t>(enum_limit)
                               : std::nullopt,
                           out);
    }
    if (app.got_subcommand(indices)) {
      const int resolved_precision =
          precision_opt->count() > 0 ? precision : default_precision();
      return cmd_indices(common, index_list, method_name, resolved_precision,
                         format_name, out);
    }
    if (app.got_subcommand(sample)) {
      return cmd_sample(common, sample_index, epsilon, delta, rng_seed,
                        max_samples, out);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(common, trials, rng_seed, duality, out);
    }
    err << "error: no subcommand selected" << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InvalidSubsetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace pidx
