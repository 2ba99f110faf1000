// Command-line front end: graph generation, walks, records, decoding, cover
// experiments, the invariance suite and the mixing checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rwlab/rwlab.hpp"

namespace {

using namespace rwlab;

// Exit status for failed checks; usage and input errors exit with 2.
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

// ---------------------------------------------------------------- graph input

struct GraphArgs {
  std::string file;
  std::string family;
  std::size_t m = 10;
  std::size_t n = 10;
  std::size_t k = 4;
  std::size_t s = 2;

  void add(CLI::App* app) {
    app->add_option("--graph", file, "Edge-list file (first line 'n m', then 'u v' pairs)");
    app->add_option("--family", family,
                    "Generated family: lollipop(--m), csl(--n --s), clique(--k), barbell(--k), "
                    "cycle(--n), path(--n), star(--k), triangle, star-plus-edge, rook4x4, "
                    "shrikhande");
    app->add_option("--m", m, "Lollipop clique size (2m vertices in total)");
    app->add_option("--n", n, "Vertex count for csl, cycle and path");
    app->add_option("--k", k, "Size parameter for clique, barbell and star");
    app->add_option("--s", s, "Skip length for csl");
  }

  std::pair<Graph, std::string> load() const {
    if (!file.empty() && !family.empty()) throw UsageError("give either --graph or --family");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open graph file " + file);
      return {read_edge_list(in), std::filesystem::path(file).stem().string()};
    }
    const std::string& f = family;
    auto num = [](std::size_t x) { return std::to_string(x); };
    if (f == "lollipop") return {gen_lollipop(m), "lollipop_m" + num(m) + "_n" + num(2 * m)};
    if (f == "csl") return {gen_csl(n, s), "csl_" + num(n) + "_" + num(s)};
    if (f == "clique") return {gen_clique(k), "clique_" + num(k)};
    if (f == "barbell") return {gen_barbell(k), "barbell_" + num(k)};
    if (f == "cycle") return {gen_cycle(n), "cycle_" + num(n)};
    if (f == "path") return {gen_path(n), "path_" + num(n)};
    if (f == "star") return {gen_star(k), "star_" + num(k)};
    if (f == "triangle") return {gen_cycle(3), "triangle"};
    if (f == "star-plus-edge") return {gen_star_plus_edge(), "star_plus_edge"};
    if (f == "rook4x4") return {gen_rook4x4(), "rook4x4"};
    if (f == "shrikhande") return {gen_shrikhande(), "shrikhande"};
    if (f.empty()) throw UsageError("a graph is required: --graph FILE or --family NAME");
    throw UsageError("unknown graph family '" + f + "'");
  }
};

// ----------------------------------------------------------------- walk input

struct WalkArgs {
  std::size_t length = 0;
  std::string conductance = "uniform";
  bool nb = false;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> restart_prob;
  std::optional<std::size_t> restart_period;

  void add(CLI::App* app, bool with_length) {
    if (with_length) app->add_option("--length", length, "Walk length l (steps)");
    app->add_option("--conductance", conductance, "uniform | mdlr")
        ->check(CLI::IsMember({"uniform", "mdlr"}));
    app->add_flag("--nb", nb, "Non-backtracking second-order rule");
    app->add_option("--p", p, "node2vec return parameter (enables node2vec)");
    app->add_option("--q", q, "node2vec in-out parameter (enables node2vec)");
    app->add_option("--restart-prob", restart_prob, "Restart with probability alpha per step");
    app->add_option("--restart-period", restart_period, "Restart every k steps");
  }

  WalkConfig config(std::uint64_t seed) const {
    WalkConfig c;
    c.length = length;
    c.seed = seed;
    if (conductance == "mdlr") c.conductance = MdlrConductance{};
    c.non_backtracking = nb;
    if (p || q) c.node2vec = Node2Vec{p.value_or(1.0), q.value_or(1.0)};
    if (restart_prob && restart_period) {
      throw UsageError("--restart-prob and --restart-period are mutually exclusive");
    }
    if (restart_prob) c.restart = RestartProb{*restart_prob};
    if (restart_period) c.restart = RestartPeriod{*restart_period};
    c.validate();
    return c;
  }
};

// ------------------------------------------------------------------ utilities

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string format_walk(const Walk& w) {
  std::string out = std::to_string(w.vertices[0]);
  for (std::size_t t = 1; t < w.vertices.size(); ++t) {
    out += ',' + std::to_string(w.vertices[t]);
    if (w.restart_flags[t - 1]) out += 'R';
  }
  return out;
}

Walk parse_walk(const std::string& line) {
  Walk w;
  std::stringstream in(line);
  std::string item;
  while (std::getline(in, item, ',')) {
    bool restart = !item.empty() && item.back() == 'R';
    if (restart) item.pop_back();
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("malformed walk line: " + line);
    if (w.vertices.empty() && restart) throw UsageError("first vertex cannot be a restart");
    if (!w.vertices.empty()) w.restart_flags.push_back(restart);
    w.vertices.push_back(static_cast<Vertex>(v));
  }
  if (w.vertices.empty()) throw UsageError("empty walk line");
  return w;
}

std::istream& input(const std::string& path, std::ifstream& file) {
  if (path.empty() || path == "-") return std::cin;
  file.open(path);
  if (!file) throw UsageError("cannot open " + path);
  return file;
}

// Turns "key = value" lines into "--key=value" arguments placed right after
// the subcommand name, so later command-line flags take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path || args.size() < 2) return args;
  std::ifstream in(*path);
  if (!in) throw UsageError("cannot open config file " + *path);
  std::vector<std::string> from_file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(*path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw UsageError(*path + ":" + std::to_string(lineno) + ": invalid key '" + key + "'");
    }
    from_file.push_back("--" + key + "=" + value);
  }
  args.insert(args.begin() + 2, from_file.begin(), from_file.end());
  return args;
}

// ---------------------------------------------------------------- subcommands

struct Common {
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string out;
  std::string config;
};

void add_config(CLI::App* app, Common& c) {
  app->add_option("--config", c.config,
                  "Plain-text 'key = value' file; keys are option names without dashes. "
                  "Command-line flags override the file; unknown keys are rejected");
}
void add_seed(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Global 64-bit seed (required)")->required();
}
void add_threads(CLI::App* app, Common& c) {
  app->add_option("--threads", c.threads, "Worker threads (0 = all cores); output is independent of it");
}
void add_out(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "Output file (default: standard output)");
}

int run(int argc, char** argv) {
  CLI::App app{"Random-walk laboratory: walks, invariant records, cover times and mixing checks"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough(false);

  Common common;
  GraphArgs graph;
  WalkArgs walk;

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a generated graph as an edge list");
  graph.add(gen);
  add_out(gen, common);
  add_config(gen, common);

  // walk
  std::optional<Vertex> start;
  std::size_t count = 1;
  auto* walk_cmd = app.add_subcommand(
      "walk",
      "Sample walks; one per line as comma-separated vertex ids, a trailing R marks a restart "
      "step (e.g. 0,1,0R,2). Walk i uses the stream (seed, i)");
  graph.add(walk_cmd);
  walk.add(walk_cmd, true);
  walk_cmd->add_option("--start", start, "Start vertex (default: uniform per walk)");
  walk_cmd->add_option("--count", count, "Number of walks");
  add_seed(walk_cmd, common);
  add_out(walk_cmd, common);
  add_config(walk_cmd, common);

  // record
  std::string walks_file;
  std::string scheme = "named";
  std::string attrs_file;
  std::string directions_file;
  auto* record_cmd = app.add_subcommand(
      "record", "Record walks (walk-command format, one per line) as invariant records");
  graph.add(record_cmd);
  record_cmd->add_option("--walks", walks_file, "Walk file (default: standard input)");
  record_cmd->add_option("--scheme", scheme, "anon | named | attributed")
      ->check(CLI::IsMember({"anon", "named", "attributed"}));
  record_cmd->add_option("--attrs", attrs_file,
                         "Attribute file for --scheme attributed: vertex<TAB>text[<TAB>label]");
  record_cmd->add_option("--directions", directions_file,
                         "Directed links 'u v' (u cites v) for --scheme attributed");
  add_out(record_cmd, common);
  add_config(record_cmd, common);

  // decode
  std::string record_text;
  std::string records_file;
  auto* decode_cmd = app.add_subcommand(
      "decode", "Decode records into edge lists over ids 1..K (written 0-based); several "
                "records produce blank-line separated edge lists");
  decode_cmd->add_option("--record", record_text, "Record text, e.g. 1-2-3#1-4#1#2");
  decode_cmd->add_option("--records", records_file, "File with one record per line (default: stdin)");
  add_out(decode_cmd, common);
  add_config(decode_cmd, common);

  // cover
  std::string mode = "vertex";
  std::size_t trials = 1000;
  bool worst = false;
  std::optional<std::size_t> radius;
  auto* cover_cmd = app.add_subcommand(
      "cover",
      "Monte Carlo cover times. CSV columns: graph,walk,mode,mean,std_err,trials,censored "
      "(mean and std_err in steps; censored trials are excluded from the mean)");
  graph.add(cover_cmd);
  walk.add(cover_cmd, false);
  cover_cmd->add_option("--mode", mode, "vertex | edge (one direction) | arc (both directions)")
      ->check(CLI::IsMember({"vertex", "edge", "arc"}));
  cover_cmd->add_option("--trials", trials, "Trials per start");
  cover_cmd->add_option("--start", start, "Fixed start vertex (ball center with --radius)");
  cover_cmd->add_flag("--worst-starts", worst, "Maximum over all starts of the per-start mean");
  cover_cmd->add_option("--radius", radius,
                        "Local cover time of the radius-r ball around --start (needs a restart rule)");
  add_seed(cover_cmd, common);
  add_threads(cover_cmd, common);
  add_out(cover_cmd, common);
  add_config(cover_cmd, common);

  // reconstruct-test
  auto* recon_cmd = app.add_subcommand(
      "reconstruct-test",
      "Check that covering walks decode to the source graph. CSV columns: graph,walk,scheme,"
      "trials,covered,coverage_fraction,failures,invented_edges. Exits 1 on any failure");
  graph.add(recon_cmd);
  walk.add(recon_cmd, true);
  recon_cmd->add_option("--trials", trials, "Number of walks");
  recon_cmd->add_option("--scheme", scheme, "anon | named")->check(CLI::IsMember({"anon", "named"}));
  add_seed(recon_cmd, common);
  add_threads(recon_cmd, common);
  add_out(recon_cmd, common);
  add_config(recon_cmd, common);

  // invariance
  InvarianceOptions inv;
  bool no_restarts = false;
  auto* inv_cmd = app.add_subcommand(
      "invariance",
      "Exact invariance suite: walk laws, record laws and fixed-walk records agree between a "
      "graph and a random relabeling. Exits 1 on any failure");
  inv_cmd->add_option("--min-n", inv.min_n, "Smallest graph size");
  inv_cmd->add_option("--max-n", inv.max_n, "Largest graph size (<= 6 enumerates exhaustively up to --exhaustive-n)");
  inv_cmd->add_option("--max-l", inv.max_length, "Longest walk length");
  inv_cmd->add_option("--graphs-per-n", inv.graphs_per_n, "Random graphs per size above --exhaustive-n");
  inv_cmd->add_option("--exhaustive-n", inv.exhaustive_up_to, "Enumerate all connected labeled graphs up to this size");
  inv_cmd->add_flag("--no-restarts", no_restarts, "Skip the restart variants");
  add_seed(inv_cmd, common);
  add_threads(inv_cmd, common);
  add_config(inv_cmd, common);

  // mixing
  std::string lengths = "5,20";
  std::optional<Vertex> from;
  bool check = false;
  auto* mix_cmd = app.add_subcommand(
      "mixing",
      "Visit frequencies of the uniform walk against the averaged matrix powers. CSV columns: "
      "l,u,v,mc_estimate,exact_value,abs_err. With --check, exits 1 if any abs_err exceeds 4 "
      "binomial sigma");
  graph.add(mix_cmd);
  mix_cmd->add_option("--lengths", lengths, "Comma-separated walk lengths");
  mix_cmd->add_option("--length", lengths, "Single walk length");
  mix_cmd->add_option("--trials", trials, "Walks per start vertex");
  mix_cmd->add_option("--u", from, "Start vertex (default: all)");
  mix_cmd->add_flag("--check", check, "Fail when a deviation exceeds 4 binomial sigma");
  add_seed(mix_cmd, common);
  add_threads(mix_cmd, common);
  add_out(mix_cmd, common);
  add_config(mix_cmd, common);

  // fig3
  Fig3Options fig3;
  std::string sizes = "10,20,40";
  auto* fig3_cmd = app.add_subcommand(
      "fig3",
      "Lollipop cover times for uniform, MDLR (each with and without non-backtracking) and "
      "node2vec(1,2); vertex and edge modes. Sizes are clique sizes m (2m vertices). CSV "
      "columns: graph,walk,mode,mean,std_err,trials,censored");
  fig3_cmd->add_option("--sizes", sizes, "Comma-separated clique sizes m");
  fig3_cmd->add_option("--trials", fig3.trials, "Trials per start");
  fig3_cmd->add_flag("--full-scan", fig3.full_scan, "Worst case over all starts instead of vertex 0");
  add_seed(fig3_cmd, common);
  add_threads(fig3_cmd, common);
  add_out(fig3_cmd, common);
  add_config(fig3_cmd, common);

  // sr16
  Sr16Options sr16;
  auto* sr16_cmd = app.add_subcommand(
      "sr16",
      "Cover times of the MDLR non-backtracking walk on the rook's 4x4 and Shrikhande graphs "
      "with uniform starts, plus their average (graph 'sr16'); modes vertex, edge and arc. CSV "
      "columns: graph,walk,mode,mean,std_err,trials,censored");
  sr16_cmd->add_option("--trials", sr16.trials, "Trials per graph");
  add_seed(sr16_cmd, common);
  add_threads(sr16_cmd, common);
  add_out(sr16_cmd, common);
  add_config(sr16_cmd, common);

  std::vector<std::string> args = expand_config(argc, argv);
  std::vector<char*> cargs;
  for (auto& a : args) cargs.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (gen->parsed()) {
    Output out(common.out);
    write_edge_list(out.stream(), graph.load().first);
    return 0;
  }

  if (walk_cmd->parsed()) {
    const auto [g, name] = graph.load();
    const WalkSampler sampler(g, walk.config(common.seed));
    Output out(common.out);
    for (std::size_t i = 0; i < count; ++i) out.stream() << format_walk(sampler.sample(start, i)) << '\n';
    return 0;
  }

  if (record_cmd->parsed()) {
    const auto [g, name] = graph.load();
    std::ifstream file;
    std::istream& in = input(walks_file, file);
    AttributeProvider attrs;
    if (scheme == "attributed") {
      if (attrs_file.empty()) throw UsageError("--scheme attributed needs --attrs");
      std::ifstream a(attrs_file);
      if (!a) throw UsageError("cannot open " + attrs_file);
      attrs = read_attributes(a);
      if (!directions_file.empty()) {
        std::ifstream d(directions_file);
        if (!d) throw UsageError("cannot open " + directions_file);
        attrs.edge_direction = read_directions(d);
      }
    }
    Output out(common.out);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Walk w = parse_walk(line);
      for (Vertex v : w.vertices)
        if (v >= g.num_vertices()) throw UsageError("walk vertex out of range: " + line);
      if (scheme == "attributed") {
        out.stream() << record_attributed(w, g, attrs) << '\n';
      } else {
        const auto s = scheme == "anon" ? RecordScheme::Anonymized : RecordScheme::NamedNeighbors;
        out.stream() << serialize(make_record(w, g, s)) << '\n';
      }
    }
    return 0;
  }

  if (decode_cmd->parsed()) {
    Output out(common.out);
    std::vector<std::string> texts;
    if (!record_text.empty()) {
      texts.push_back(record_text);
    } else {
      std::ifstream file;
      std::istream& in = input(records_file, file);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) texts.push_back(line);
    }
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (i > 0) out.stream() << '\n';
      write_edge_list(out.stream(), decode(parse(texts[i])).graph);
    }
    return 0;
  }

  if (cover_cmd->parsed()) {
    const auto [g, name] = graph.load();
    const WalkConfig cfg = walk.config(common.seed);
    const CoverMode m = mode == "vertex" ? CoverMode::Vertex
                        : mode == "edge" ? CoverMode::Edge
                                         : CoverMode::Arc;
    CoverStats stats;
    std::string label = name;
    if (radius) {
      if (worst) throw UsageError("--worst-starts does not apply to local cover times");
      const Vertex center = start.value_or(0);
      stats = local_cover_time(g, center, *radius, cfg, m, trials, common.threads);
      label += "_ball_v" + std::to_string(center) + "_r" + std::to_string(*radius);
      if (cfg.has_restart()) {
        std::cerr << "# restart bound: "
                  << restart_cover_bound(g.max_degree(), *radius, cfg.restart, m) << '\n';
      }
    } else {
      if (worst && start) throw UsageError("--start and --worst-starts are mutually exclusive");
      const StartPolicy policy = worst   ? StartPolicy{WorstOverStarts{}}
                                 : start ? StartPolicy{FixedStart{*start}}
                                         : StartPolicy{UniformStart{}};
      stats = estimate_cover_time(g, cfg, m, trials, policy, common.threads);
    }
    Output out(common.out);
    write_cover_csv(out.stream(), {make_row(label, cfg, stats)});
    return 0;
  }

  if (recon_cmd->parsed()) {
    const auto [g, name] = graph.load();
    const WalkConfig cfg = walk.config(common.seed);
    const auto s = scheme == "anon" ? RecordScheme::Anonymized : RecordScheme::NamedNeighbors;
    const auto rep = check_reconstruction(g, cfg, trials, s, common.threads);
    Output out(common.out);
    out.stream() << "graph,walk,scheme,trials,covered,coverage_fraction,failures,invented_edges\n"
                 << name << ',' << describe(cfg) << ',' << scheme << ',' << rep.trials << ','
                 << rep.covered << ',' << format_fixed(rep.coverage_fraction()) << ','
                 << rep.failures << ',' << rep.invented_edges << '\n';
    return rep.failures == 0 && rep.invented_edges == 0 ? 0 : kCheckFailed;
  }

  if (inv_cmd->parsed()) {
    inv.seed = common.seed;
    inv.threads = common.threads;
    inv.with_restarts = !no_restarts;
    if (inv.max_n > 6) throw UsageError("--max-n is limited to 6");
    const auto rep = run_invariance_suite(inv);
    std::cout << "graphs: " << rep.graphs << "\nwalk-law checks: " << rep.walk_law_checks
              << "\nrecord-law checks: " << rep.record_law_checks
              << "\nfixed-walk record checks: " << rep.exact_record_checks
              << "\nmax difference: " << rep.max_difference << "\nfailures: " << rep.failures
              << '\n';
    for (const auto& m : rep.messages) std::cout << "FAIL " << m << '\n';
    if (rep.failures != 0) return kCheckFailed;
    std::cout << "all distribution-equality checks passed\n";
    return 0;
  }

  if (mix_cmd->parsed()) {
    const auto [g, name] = graph.load();
    const auto ls = parse_size_list(lengths);
    const auto P = transition_matrix(g, ConstantConductance{});
    WalkConfig cfg;
    cfg.seed = common.seed;
    Output out(common.out);
    out.stream() << "l,u,v,mc_estimate,exact_value,abs_err\n";
    bool ok = true;
    for (std::size_t li = 0; li < ls.size(); ++li) {
      const std::size_t l = ls[li];
      for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (from && u != *from) continue;
        // Separate seed per (l, u) so each row is reproducible on its own.
        cfg.seed = mix64(common.seed) ^ mix64((std::uint64_t{l} << 32) + u);
        const auto mc = monte_carlo_visit_frequencies(g, cfg, u, l, trials, common.threads);
        const auto exact = averaged_power_row(P, u, l);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          const double err = std::abs(mc.mean[v] - exact[v]);
          const double tol = exact[v] == 0.0 ? 1e-12 : 4.0 * binomial_sigma(exact[v], trials);
          ok = ok && err <= tol;
          out.stream() << l << ',' << u << ',' << v << ',' << format_fixed(mc.mean[v], 8) << ','
                       << format_fixed(exact[v], 8) << ',' << format_fixed(err, 8) << '\n';
        }
      }
    }
    return check && !ok ? kCheckFailed : 0;
  }

  if (fig3_cmd->parsed()) {
    fig3.clique_sizes = parse_size_list(sizes);
    fig3.seed = common.seed;
    fig3.threads = common.threads;
    Output out(common.out);
    write_cover_csv(out.stream(), run_fig3(fig3).rows);
    return 0;
  }

  if (sr16_cmd->parsed()) {
    sr16.seed = common.seed;
    sr16.threads = common.threads;
    Output out(common.out);
    write_cover_csv(out.stream(), run_sr16(sr16));
    return 0;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const rwlab::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const rwlab::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const rwlab::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const rwlab::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}
