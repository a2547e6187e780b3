#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oversmooth/bounds.hpp"
#include "oversmooth/graph.hpp"
#include "oversmooth/io.hpp"
#include "oversmooth/propagation.hpp"
#include "oversmooth/report.hpp"
#include "oversmooth/rng.hpp"
#include "oversmooth/spectral.hpp"
#include "oversmooth/verify.hpp"
#include "oversmooth/version.hpp"

namespace {

using namespace oversmooth;

// Exit codes: 0 success, 1 usage or I/O error, 2 audited-inequality failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAuditFailure = 2;

struct GraphSource {
  std::string edges_file;
  std::string generate_spec;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  auto* edges = cmd->add_option("--edges", src.edges_file,
                                "Edge-list file (two ids per line, '#' comments)");
  auto* gen = cmd->add_option(
      "--generate", src.generate_spec,
      "Generator spec: er:N,P  ws:N,K,BETA  star:N  path:N  cycle:N  complete:N  karate");
  edges->excludes(gen);
  gen->excludes(edges);
}

Graph resolve_graph(const GraphSource& src, std::uint64_t seed,
                    std::string* label) {
  if (!src.edges_file.empty()) {
    *label = src.edges_file;
    return load_edge_list_file(src.edges_file);
  }
  if (!src.generate_spec.empty()) {
    *label = src.generate_spec;
    return generate(parse_generator_spec(src.generate_spec, seed));
  }
  throw std::invalid_argument("a graph source is required: --edges or --generate");
}

std::unique_ptr<std::ofstream> open_output(const std::string& path,
                                           std::ostream** out) {
  if (path.empty() || path == "-") {
    *out = &std::cout;
    return nullptr;
  }
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) throw std::runtime_error("cannot open output file: " + path);
  *out = file.get();
  return file;
}

// ---------------------------------------------------------------------------
// simulate / compare machinery

struct SimulateOptions {
  std::string arch = "gcn";
  int depth = 8;
  int channels = 8;
  std::string activation = "relu";
  double s_target = 1.0;
  double alpha = 0.1;
  double beta = 0.5;
  double drop_rate = 0.5;
  int hops = -1;    // dagnn; defaults to depth
  int hidden = 16;  // dagnn MLP width
};

// Sub-streams of the user seed, shared across architectures so that reduced
// configurations (DropEdge 0, GCNII alpha=0/beta=1) reproduce GCN bitwise.
struct SeedPlan {
  std::uint64_t features;
  std::uint64_t kernels;
  std::uint64_t masks;
  std::uint64_t dagnn;
  explicit SeedPlan(std::uint64_t seed)
      : features(mix_seed(seed, 0)),
        kernels(mix_seed(seed, 1)),
        masks(mix_seed(seed, 2)),
        dagnn(mix_seed(seed, 3)) {}
};

DenseMatrix build_features(const Graph& g, const std::string& init,
                           int channels, std::uint64_t feature_seed) {
  if (init == "uniform") return uniform_features(g.node_count(), channels, feature_seed);
  if (init == "orthogonal") return orthogonal_features(g, channels, feature_seed);
  if (init.rfind("file:", 0) == 0) {
    DenseMatrix x = load_features_csv_file(init.substr(5));
    if (x.rows() != g.node_count()) {
      throw std::invalid_argument("feature file row count does not match graph");
    }
    return x;
  }
  throw std::invalid_argument("unknown --init '" + init + "' (uniform|orthogonal|file:PATH)");
}

Trajectory layer0_only(const Graph& g, const DenseMatrix& x, const std::string& arch) {
  Trajectory t;
  t.metadata.arch = arch;
  t.records.push_back(measure_smoothness(0, x, limit_projector(g).basis));
  t.final_features = x;
  return t;
}

Trajectory run_architecture(const Graph& g, const DenseMatrix& x,
                            const SimulateOptions& opts, const SeedPlan& seeds) {
  const Activation act = parse_activation(opts.activation);
  const int depth = opts.depth;
  if (depth < 0) throw std::invalid_argument("--depth must be >= 0");
  const std::vector<int> dims(depth + 1, x.cols());

  if (opts.arch == "sgc") {
    const DenseMatrix theta =
        make_kernels(1, {x.cols(), x.cols()}, opts.s_target, seeds.kernels)
            .layer_kernels[0];
    return sgc_trajectory(g, x, depth, theta);
  }
  if (opts.arch == "dagnn") {
    const int hops = opts.hops >= 0 ? opts.hops : depth;
    const DagnnParams params =
        make_dagnn_params(x.cols(), opts.hidden, x.cols(), seeds.dagnn);
    return dagnn_trajectory(g, x, hops, params);
  }
  if (depth == 0) return layer0_only(g, x, opts.arch);

  const KernelSet kernels = make_kernels(depth, dims, opts.s_target, seeds.kernels);
  if (opts.arch == "gcn") return forward_gcn(g, x, kernels, act);
  if (opts.arch == "gcnii") {
    return forward_gcnii(g, x, kernels, std::vector<double>(depth, opts.alpha),
                         std::vector<double>(depth, opts.beta), act);
  }
  if (opts.arch == "dropedge") {
    return forward_dropedge(g, x, kernels, opts.drop_rate, act, seeds.masks);
  }
  if (opts.arch == "residual") return forward_residual(g, x, kernels, act);
  throw std::invalid_argument("unknown --arch '" + opts.arch + "'");
}

// Config mini-grammar for compare: name[:key=value,...], e.g.
// "gcnii:alpha=0.1,beta=0" or "dropedge:rate=0.5".
SimulateOptions parse_arch_config(const std::string& text,
                                  const SimulateOptions& defaults) {
  SimulateOptions opts = defaults;
  std::string name = text;
  std::string args;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  opts.arch = name;
  std::stringstream stream(args);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config '" + text + "': expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "alpha") opts.alpha = std::stod(value);
      else if (key == "beta") opts.beta = std::stod(value);
      else if (key == "rate") opts.drop_rate = std::stod(value);
      else if (key == "s_target") opts.s_target = std::stod(value);
      else if (key == "hops") opts.hops = std::stoi(value);
      else if (key == "hidden") opts.hidden = std::stoi(value);
      else if (key == "activation") opts.activation = value;
      else throw std::invalid_argument("config '" + text + "': unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("config '" + text + "': bad value for '" + key + "'");
    }
  }
  return opts;
}

// ---------------------------------------------------------------------------
// subcommands

struct AnalyzeArgs {
  GraphSource source;
  double epsilon = 1e-3;
  double s = 1.0;
  std::optional<double> d0;
  int channels = 8;
  std::uint64_t seed = 0;
  std::string dmax_reading = "paper";
  std::string output;
};

int run_analyze(const AnalyzeArgs& args) {
  std::string label;
  const Graph g = resolve_graph(args.source, args.seed, &label);

  AnalyzeConfig cfg;
  cfg.graph_source = label;
  cfg.epsilon = args.epsilon;
  cfg.s = args.s;
  cfg.d0_override = args.d0;
  cfg.channels = args.channels;
  cfg.seed = args.seed;
  if (args.dmax_reading == "augmented") {
    cfg.augmented_reading = true;
  } else if (args.dmax_reading != "paper") {
    throw std::invalid_argument("--dmax-reading must be 'paper' or 'augmented'");
  }

  const AnalyzeResult result = analyze_graph(g, cfg);
  std::ostream* out = nullptr;
  auto file = open_output(args.output, &out);
  *out << result.document.dump(2) << '\n';
  return result.chain_failed ? kExitAuditFailure : kExitOk;
}

struct SimulateArgs {
  GraphSource source;
  SimulateOptions opts;
  std::string init = "uniform";
  std::uint64_t seed = 0;
  std::string output;
};

int run_simulate(const SimulateArgs& args) {
  std::string label;
  const Graph g = resolve_graph(args.source, args.seed, &label);
  const SeedPlan seeds(args.seed);
  const DenseMatrix x = build_features(g, args.init, args.opts.channels, seeds.features);
  const Trajectory t = run_architecture(g, x, args.opts, seeds);
  std::ostream* out = nullptr;
  auto file = open_output(args.output, &out);
  write_trajectory_csv(t, *out);
  return kExitOk;
}

struct CompareArgs {
  GraphSource source;
  SimulateOptions defaults;
  std::vector<std::string> configs;
  std::string init = "uniform";
  std::uint64_t seed = 0;
  std::string output;
};

int run_compare(const CompareArgs& args) {
  if (args.configs.size() < 2) {
    throw std::invalid_argument("compare needs at least two --config entries");
  }
  std::string label;
  const Graph g = resolve_graph(args.source, args.seed, &label);
  const SeedPlan seeds(args.seed);
  const DenseMatrix x =
      build_features(g, args.init, args.defaults.channels, seeds.features);

  std::vector<std::pair<std::string, Trajectory>> runs;
  for (const std::string& config : args.configs) {
    const SimulateOptions opts = parse_arch_config(config, args.defaults);
    runs.emplace_back(config, run_architecture(g, x, opts, seeds));
  }
  std::ostream* out = nullptr;
  auto file = open_output(args.output, &out);
  write_compare_csv(runs, *out);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  int trials = 1000;
  std::string audit_table;
};

int run_verify(const VerifyArgs& args) {
  if (args.suite == "theorem3-chain") {
    const Theorem3Audit audit = verify_theorem3_chain(args.seed);
    for (const VerifyCase& c : audit.report.cases) {
      if (!c.pass) std::cout << "FAIL " << c.name << "  " << c.detail << '\n';
    }
    std::cout << "theorem3-chain: " << audit.report.passed() << '/'
              << audit.report.total() << " asserted links hold\n";
    if (!args.audit_table.empty()) {
      std::ofstream out(args.audit_table);
      if (!out) throw std::runtime_error("cannot open " + args.audit_table);
      write_audit_table_csv(audit.table, out);
      std::cout << "audit table written to " << args.audit_table << '\n';
    } else {
      write_audit_table_csv(audit.table, std::cout);
    }
    return audit.report.all_pass() ? kExitOk : kExitAuditFailure;
  }

  const VerifyReport report = run_verify_suite(args.suite, args.seed, args.trials);
  if (report.total() <= 20) {
    for (const VerifyCase& c : report.cases) {
      std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << '\n';
    }
  } else {
    for (const VerifyCase& c : report.cases) {
      if (!c.pass) std::cout << "FAIL " << c.name << "  " << c.detail << '\n';
    }
  }
  std::cout << report.suite << ": " << report.passed() << '/' << report.total()
            << " checks pass\n";
  return report.all_pass() ? kExitOk : kExitAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral over-smoothing analysis for graph convolutions"};
  app.set_version_flag("--version", oversmooth::kVersion);
  app.require_subcommand(1);

  int exit_code = kExitOk;

  auto analyze_args = std::make_shared<AnalyzeArgs>();
  {
    CLI::App* cmd = app.add_subcommand(
        "analyze", "Spectral quantities, bounds and the inequality-chain audit");
    add_graph_source(cmd, analyze_args->source);
    cmd->add_option("--epsilon", analyze_args->epsilon, "Smoothing threshold")
        ->capture_default_str();
    cmd->add_option("--s", analyze_args->s, "Kernel singular-value supremum")
        ->capture_default_str();
    cmd->add_option("--d0", analyze_args->d0,
                    "Initial subspace distance (measured from seeded features if omitted)");
    cmd->add_option("--channels", analyze_args->channels, "Channels for the measured d0")
        ->capture_default_str();
    cmd->add_option("--seed", analyze_args->seed, "Seed (flag wins over OVERSMOOTH_SEED)")
        ->envname("OVERSMOOTH_SEED");
    cmd->add_option("--dmax-reading", analyze_args->dmax_reading,
                    "Which d_max reading drives the audited chain: paper|augmented")
        ->capture_default_str();
    cmd->add_option("--output,-o", analyze_args->output, "Output file (default stdout)");
    cmd->callback([&exit_code, analyze_args] { exit_code = run_analyze(*analyze_args); });
  }

  auto simulate_args = std::make_shared<SimulateArgs>();
  {
    CLI::App* cmd = app.add_subcommand(
        "simulate", "Forward propagation trajectory as CSV (layer,d_m,mad,row_diff,col_diff)");
    add_graph_source(cmd, simulate_args->source);
    cmd->add_option("--arch", simulate_args->opts.arch,
                    "gcn|sgc|gcnii|dagnn|dropedge|residual")
        ->capture_default_str();
    cmd->add_option("--depth", simulate_args->opts.depth, "Layer count")
        ->capture_default_str();
    cmd->add_option("--channels", simulate_args->opts.channels, "Feature channels")
        ->capture_default_str();
    cmd->add_option("--activation", simulate_args->opts.activation, "relu|identity")
        ->capture_default_str();
    cmd->add_option("--s-target", simulate_args->opts.s_target,
                    "Max singular value of every kernel")
        ->capture_default_str();
    cmd->add_option("--alpha", simulate_args->opts.alpha, "GCNII initial-residual weight")
        ->capture_default_str();
    cmd->add_option("--beta", simulate_args->opts.beta, "GCNII identity-map weight")
        ->capture_default_str();
    cmd->add_option("--drop-rate", simulate_args->opts.drop_rate, "DropEdge removal probability")
        ->capture_default_str();
    cmd->add_option("--hops", simulate_args->opts.hops, "DAGNN hops (default: depth)");
    cmd->add_option("--hidden", simulate_args->opts.hidden, "DAGNN MLP hidden width")
        ->capture_default_str();
    cmd->add_option("--init", simulate_args->init, "uniform|orthogonal|file:PATH")
        ->capture_default_str();
    cmd->add_option("--seed", simulate_args->seed, "Seed (flag wins over OVERSMOOTH_SEED)")
        ->envname("OVERSMOOTH_SEED");
    cmd->add_option("--output,-o", simulate_args->output, "Output file (default stdout)");
    cmd->callback([&exit_code, simulate_args] { exit_code = run_simulate(*simulate_args); });
  }

  auto compare_args = std::make_shared<CompareArgs>();
  {
    CLI::App* cmd = app.add_subcommand(
        "compare", "Run several architectures on one graph, long-format CSV");
    add_graph_source(cmd, compare_args->source);
    cmd->add_option("--config", compare_args->configs,
                    "Architecture config, repeatable: name[:key=value,...] "
                    "(keys: alpha, beta, rate, s_target, hops, hidden, activation)")
        ->required();
    cmd->add_option("--depth", compare_args->defaults.depth, "Layer count")
        ->capture_default_str();
    cmd->add_option("--channels", compare_args->defaults.channels, "Feature channels")
        ->capture_default_str();
    cmd->add_option("--activation", compare_args->defaults.activation, "relu|identity")
        ->capture_default_str();
    cmd->add_option("--s-target", compare_args->defaults.s_target,
                    "Max singular value of every kernel")
        ->capture_default_str();
    cmd->add_option("--init", compare_args->init, "uniform|orthogonal|file:PATH")
        ->capture_default_str();
    cmd->add_option("--seed", compare_args->seed, "Seed (flag wins over OVERSMOOTH_SEED)")
        ->envname("OVERSMOOTH_SEED");
    cmd->add_option("--output,-o", compare_args->output, "Output file (default stdout)");
    cmd->callback([&exit_code, compare_args] { exit_code = run_compare(*compare_args); });
  }

  auto verify_args = std::make_shared<VerifyArgs>();
  {
    CLI::App* cmd = app.add_subcommand("verify", "Property suites for the paper's claims");
    cmd->add_option("suite", verify_args->suite,
                    "lemma1|theorem1|theorem2|theorem3-chain|claim1|reductions")
        ->required();
    cmd->add_option("--seed", verify_args->seed, "Seed (flag wins over OVERSMOOTH_SEED)")
        ->envname("OVERSMOOTH_SEED");
    cmd->add_option("--trials", verify_args->trials, "Trial count for lemma1/theorem2")
        ->capture_default_str();
    cmd->add_option("--audit-table", verify_args->audit_table,
                    "Write the theorem3-chain audit table to this CSV file");
    cmd->callback([&exit_code, verify_args] { exit_code = run_verify(*verify_args); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}
