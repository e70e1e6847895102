/*******************************************************************************
 * Command-line front end.
 *
 * @file:   commands.cc
 ******************************************************************************/
#include "commands.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lmpart/clustering.h"
#include "lmpart/generators.h"
#include "lmpart/metis_io.h"
#include "lmpart/metrics.h"
#include "lmpart/modularity.h"
#include "lmpart/multilevel.h"
#include "lmpart/partition.h"
#include "lmpart/performance_profile.h"
#include "lmpart/sparsification.h"

namespace lmpart::cli {
namespace {
// Reported with exit code 1.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string format_double(const double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  std::string text(buffer, result.ptr);
  if (text.find_first_of(".eEn") == std::string::npos) {
    text += ".0";
  }
  return text;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IOError("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::ofstream open_output(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IOError("cannot write " + path);
  }
  return out;
}

// One non-negative integer per line, one line per node.
std::vector<std::uint32_t> read_assignment(const std::string &path, const NodeID n) {
  std::istringstream in(read_file(path));
  std::vector<std::uint32_t> ids;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    std::uint32_t id = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), id);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw IOError(path + ":" + std::to_string(line_number) + ": invalid id");
    }
    ids.push_back(id);
  }
  if (ids.size() != n) {
    throw UsageError(path + " has " + std::to_string(ids.size()) + " entries, graph has " +
                     std::to_string(n) + " nodes");
  }
  return ids;
}

void write_assignment(const std::vector<std::uint32_t> &ids, std::ostream &out) {
  std::string buffer;
  buffer.reserve(ids.size() * 3);
  for (const std::uint32_t id : ids) {
    buffer += std::to_string(id);
    buffer += '\n';
  }
  out << buffer;
}

struct PartitionOptions {
  std::string graph;
  BlockID k = 2;
  double epsilon = 0.03;
  std::string sparsifier = "t-weight";
  double tau_e = 0.5;
  double tau_d = 0.5;
  double rho = 4.0;
  double ff_p = 0.6;
  double ff_nu = 0.5;
  std::uint64_t seed = 1;
  std::uint32_t rounds = 5;
  std::string out;
  std::string stats;
  bool timings = false;
};

int cmd_partition(const PartitionOptions &opts, std::ostream &out, std::ostream &err) {
  const auto kind = parse_sparsifier(opts.sparsifier);
  if (!kind) {
    throw UsageError("unknown sparsifier " + opts.sparsifier);
  }

  PartitionerConfig cfg;
  cfg.k = opts.k;
  cfg.epsilon = opts.epsilon;
  cfg.sparsify.kind = *kind;
  cfg.sparsify.tau_e = opts.tau_e;
  cfg.sparsify.tau_d = opts.tau_d;
  cfg.sparsify.rho = opts.rho;
  cfg.sparsify.ff_p = opts.ff_p;
  cfg.sparsify.ff_nu = opts.ff_nu;
  cfg.seed = opts.seed;
  cfg.clustering.max_rounds = opts.rounds;
  cfg.refine_rounds = opts.rounds;

  const Graph graph = read_metis(opts.graph);
  err << "read graph with n=" << graph.n() << " m=" << graph.m() << "\n";

  const PartitionResult result = partition(graph, cfg);

  if (!opts.out.empty()) {
    std::ofstream file = open_output(opts.out);
    write_assignment(result.partition.assignment, file);
  }
  if (!opts.stats.empty()) {
    std::ofstream file = open_output(opts.stats);
    file << to_json(result.stats, opts.timings).dump(2) << '\n';
  }

  out << "cut=" << result.stats.cut << " imbalance=" << format_double(result.stats.imbalance)
      << " feasible=" << (result.stats.feasible ? "true" : "false") << '\n';
  return result.stats.feasible ? kExitOk : kExitInfeasible;
}

struct GenOptions {
  std::string type = "er";
  NodeID n = 0;
  std::optional<double> p;
  std::optional<double> avg_degree;
  double p_in = 0.0;
  double p_out = 0.0;
  BlockID blocks = 2;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenOptions &opts, std::ostream &out, std::ostream &err) {
  GeneratorSpec spec;
  spec.node_count = opts.n;
  spec.seed = opts.seed;
  if (opts.type == "er") {
    spec.kind = GeneratorKind::kErdosRenyi;
    if (opts.p.has_value() == opts.avg_degree.has_value()) {
      throw UsageError("er needs exactly one of --p and --avg-degree");
    }
    if (opts.p) {
      spec.edge_probability = *opts.p;
    } else {
      spec.expected_edges = *opts.avg_degree * opts.n / 2.0;
    }
  } else if (opts.type == "planted") {
    spec.kind = GeneratorKind::kPlantedPartition;
    spec.block_count = opts.blocks;
    spec.intra_probability = opts.p_in;
    spec.inter_probability = opts.p_out;
  } else {
    throw UsageError("unknown generator type " + opts.type);
  }

  Graph graph;
  try {
    graph = generate(spec);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  err << "generated graph with n=" << graph.n() << " m=" << graph.m() << "\n";

  if (opts.out.empty()) {
    write_metis(graph, out);
  } else {
    std::ofstream file = open_output(opts.out);
    write_metis(graph, file);
  }
  if (spec.kind == GeneratorKind::kPlantedPartition) {
    if (opts.out.empty()) {
      err << "no --out given, ground truth not written\n";
    } else {
      std::ofstream file = open_output(opts.out + ".truth");
      write_assignment(planted_assignment(spec), file);
    }
  }
  return kExitOk;
}

struct AnalyzeOptions {
  std::string graph;
  std::string partition;
  std::string clustering;
  std::string mode = "metrics";
  std::optional<BlockID> k;
  double epsilon = 0.03;
  bool weighted = false;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_analyze(const AnalyzeOptions &opts, std::ostream &out, std::ostream &) {
  if (opts.format != "json" && opts.format != "csv") {
    throw UsageError("unknown format " + opts.format);
  }
  if (!opts.partition.empty() && !opts.clustering.empty()) {
    throw UsageError("--partition and --clustering are mutually exclusive");
  }
  const Graph graph = read_metis(opts.graph);
  const std::string &assignment_path = opts.partition.empty() ? opts.clustering : opts.partition;

  std::ostringstream text;
  if (opts.mode == "metrics") {
    if (assignment_path.empty()) {
      throw UsageError("metrics needs --partition");
    }
    std::vector<BlockID> blocks = read_assignment(assignment_path, graph.n());
    const BlockID used = blocks.empty() ? 1 : *std::max_element(blocks.begin(), blocks.end()) + 1;
    const BlockID k = opts.k.value_or(used);
    if (used > k) {
      throw UsageError("partition uses block ids beyond --k");
    }
    const Partition p = make_partition(graph, k, std::move(blocks));
    const BalanceSpec balance = make_balance(graph, k, opts.epsilon);
    const Imbalance result = imbalance(p, balance);
    const EdgeWeight cut_weight = cut(graph, p);
    if (opts.format == "json") {
      const nlohmann::ordered_json doc = {
          {"k", k},
          {"epsilon", opts.epsilon},
          {"cut", cut_weight},
          {"max_block_weight", result.max_block_weight},
          {"l_max", balance.max_block_weight()},
          {"imbalance", result.ratio},
          {"feasible", result.feasible},
      };
      text << doc.dump(2) << '\n';
    } else {
      text << "k,epsilon,cut,max_block_weight,l_max,imbalance,feasible\n"
           << k << ',' << format_double(opts.epsilon) << ',' << cut_weight << ','
           << result.max_block_weight << ',' << format_double(balance.max_block_weight()) << ','
           << format_double(result.ratio) << ',' << (result.feasible ? "true" : "false") << '\n';
    }
  } else if (opts.mode == "modularity") {
    if (assignment_path.empty()) {
      throw UsageError("modularity needs --clustering");
    }
    const Clustering clustering =
        compact_clustering(graph, read_assignment(assignment_path, graph.n()));
    if (graph.m() == 0) {
      throw UsageError("modularity is undefined on edgeless graphs");
    }
    const ModularityReport report = modularity_report(
        graph, clustering, opts.weighted ? ModularityMode::kWeighted : ModularityMode::kUnweighted);
    if (opts.format == "json") {
      text << to_json(report).dump(2) << '\n';
    } else {
      write_csv(report, text);
    }
  } else if (opts.mode == "reduction") {
    if (graph.m() == 0) {
      throw UsageError("edge reduction is undefined on edgeless graphs");
    }
    EdgeReductionRecord record;
    if (assignment_path.empty()) {
      PartitionerConfig cfg;
      cfg.k = opts.k.value_or(2);
      cfg.seed = opts.seed;
      record = edge_reduction_study(graph, cfg);
    } else {
      record = edge_reduction_study(
          graph, compact_clustering(graph, read_assignment(assignment_path, graph.n())));
    }
    if (opts.format == "json") {
      text << to_json(record).dump(2) << '\n';
    } else {
      write_csv(record, text);
    }
  } else {
    throw UsageError("unknown mode " + opts.mode);
  }

  if (opts.out.empty()) {
    out << text.str();
  } else {
    open_output(opts.out) << text.str();
  }
  return kExitOk;
}

struct ProfileOptions {
  std::string cuts;
  std::string format = "csv";
  std::string out;
};

int cmd_profile(const ProfileOptions &opts, std::ostream &out, std::ostream &err) {
  if (opts.format != "json" && opts.format != "csv") {
    throw UsageError("unknown format " + opts.format);
  }
  ProfileTable table;
  try {
    table = performance_profile(parse_cut_csv(read_file(opts.cuts)));
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  for (const std::string &warning : table.warnings) {
    err << "warning: " << warning << '\n';
  }

  std::ostringstream text;
  if (opts.format == "json") {
    text << to_json(table).dump(2) << '\n';
  } else {
    write_profile_csv(table, text);
  }
  if (opts.out.empty()) {
    out << text.str();
  } else {
    open_output(opts.out) << text.str();
  }
  return kExitOk;
}
} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Multilevel graph partitioning with sparsification", "lmpart"};
  app.require_subcommand(1);

  PartitionOptions partition_opts;
  auto *partition_cmd = app.add_subcommand("partition", "Partition a METIS graph into k blocks");
  partition_cmd->add_option("--graph", partition_opts.graph, "Input graph (METIS)")->required();
  partition_cmd->add_option("--k", partition_opts.k, "Number of blocks")
      ->required()
      ->check(CLI::PositiveNumber);
  partition_cmd->add_option("--epsilon", partition_opts.epsilon, "Imbalance parameter")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  partition_cmd
      ->add_option("--sparsifier", partition_opts.sparsifier, "none, uniform, t-weight, t-ff, t-wff")
      ->capture_default_str();
  partition_cmd->add_option("--tau-e", partition_opts.tau_e, "Edge factor of the target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  partition_cmd->add_option("--tau-d", partition_opts.tau_d, "Density factor of the target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  partition_cmd->add_option("--rho", partition_opts.rho, "Sparsification trigger factor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  partition_cmd->add_option("--ff-p", partition_opts.ff_p, "Forest fire burn probability")
      ->check(CLI::Range(0.0, 1.0, "[0, 1]"))
      ->capture_default_str();
  partition_cmd->add_option("--ff-nu", partition_opts.ff_nu, "Forest fire budget factor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  partition_cmd->add_option("--seed", partition_opts.seed, "Random seed")->capture_default_str();
  partition_cmd->add_option("--rounds", partition_opts.rounds, "Label propagation rounds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  partition_cmd->add_option("--out", partition_opts.out, "Partition output file");
  partition_cmd->add_option("--stats", partition_opts.stats, "Run statistics output file (JSON)");
  partition_cmd->add_flag("--timings", partition_opts.timings, "Include phase timings in stats");

  GenOptions gen_opts;
  auto *gen_cmd = app.add_subcommand("gen", "Generate a random graph");
  gen_cmd->add_option("--type", gen_opts.type, "er or planted")->capture_default_str();
  gen_cmd->add_option("--n", gen_opts.n, "Number of nodes")->required();
  gen_cmd->add_option("--p", gen_opts.p, "Edge probability (er)");
  gen_cmd->add_option("--avg-degree", gen_opts.avg_degree, "Expected average degree (er)");
  gen_cmd->add_option("--p-in", gen_opts.p_in, "Intra-block probability (planted)");
  gen_cmd->add_option("--p-out", gen_opts.p_out, "Inter-block probability (planted)");
  gen_cmd->add_option("--blocks", gen_opts.blocks, "Number of blocks (planted)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_opts.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_opts.out, "Output file, stdout if omitted");

  AnalyzeOptions analyze_opts;
  auto *analyze_cmd = app.add_subcommand("analyze", "Evaluate partitions and clusterings");
  analyze_cmd->add_option("--graph", analyze_opts.graph, "Input graph (METIS)")->required();
  analyze_cmd->add_option("--partition", analyze_opts.partition, "Block id per node");
  analyze_cmd->add_option("--clustering", analyze_opts.clustering, "Cluster id per node");
  analyze_cmd->add_option("--mode", analyze_opts.mode, "metrics, modularity or reduction")
      ->capture_default_str();
  analyze_cmd->add_option("--k", analyze_opts.k, "Number of blocks")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--epsilon", analyze_opts.epsilon, "Imbalance parameter")
      ->capture_default_str();
  analyze_cmd->add_flag("--weighted", analyze_opts.weighted, "Weighted modularity");
  analyze_cmd->add_option("--format", analyze_opts.format, "json or csv")->capture_default_str();
  analyze_cmd->add_option("--seed", analyze_opts.seed, "Seed for the reduction study")
      ->capture_default_str();
  analyze_cmd->add_option("--out", analyze_opts.out, "Output file, stdout if omitted");

  ProfileOptions profile_opts;
  auto *profile_cmd = app.add_subcommand("profile", "Performance profile over cut tables");
  profile_cmd->add_option("--cuts", profile_opts.cuts, "CSV with header algorithm,instance,cut")
      ->required();
  profile_cmd->add_option("--format", profile_opts.format, "csv or json")->capture_default_str();
  profile_cmd->add_option("--out", profile_opts.out, "Output file, stdout if omitted");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*partition_cmd) {
      return cmd_partition(partition_opts, out, err);
    }
    if (*gen_cmd) {
      return cmd_gen(gen_opts, out, err);
    }
    if (*analyze_cmd) {
      return cmd_analyze(analyze_opts, out, err);
    }
    return cmd_profile(profile_opts, out, err);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}
} // namespace lmpart::cli
