// udg: build unit-distance graphs, compute alpha / chi exactly, run and verify
// E8 augmentations, and tabulate chi(C(d,u)).
//
// Exit status: 0 success, 1 invalid input, 2 verification failure,
// 3 budget exhausted (result is a bracket, not a value).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "udg/udg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitBudget = 3;

struct BudgetFlags {
  double seconds = 3600;
  std::uint64_t nodes = 0;

  udg::SearchBudget budget() const {
    udg::SearchBudget b;
    if (seconds > 0) b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000));
    if (nodes > 0) b.max_nodes = nodes;
    return b;
  }
  std::string describe() const {
    std::ostringstream os;
    os << "budget_seconds=" << seconds << " budget_nodes=" << nodes;
    return os.str();
  }
};

void add_budget(CLI::App* cmd, BudgetFlags& b, double default_seconds) {
  b.seconds = default_seconds;
  cmd->add_option("--budget-seconds", b.seconds, "wall-clock limit per solve (0 = unlimited)")->capture_default_str();
  cmd->add_option("--budget-nodes", b.nodes, "search-node limit per solve (0 = unlimited)")->capture_default_str();
}

int default_threads() {
  if (const char* env = std::getenv("UDG_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

double seconds_of(std::chrono::nanoseconds ns) { return std::chrono::duration<double>(ns).count(); }

std::string point_str(const udg::Point& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p[k]);
  }
  return s;
}

// "2..8" or "5"
std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range " + text);
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "' (expected N or LO..HI)");
  }
}

struct BuildArgs {
  std::string family;
  int d = 0;
  int u = 0;
  int s = -1;
  std::string out;
  std::string coords;
};

int cmd_build(const BuildArgs& a) {
  std::cout << "config command=build family=" << a.family << " d=" << a.d << " u=" << a.u << " s=" << a.s
            << " out=" << a.out << " coords=" << (a.coords.empty() ? a.out + ".coords" : a.coords) << "\n";
  udg::GeometricGraph gg;
  if (a.family == "cube") {
    gg = udg::hamming_graph(a.d, a.u);
  } else if (a.family == "half") {
    gg = udg::half_cube(a.d, a.u);
  } else if (a.family == "slice") {
    if (a.s < 0) throw std::invalid_argument("slice requires -s");
    gg = udg::slice_graph(a.d, a.u, a.s);
  } else if (a.family == "gosset") {
    gg = udg::build_g0();
  } else {
    throw std::invalid_argument("unknown family " + a.family);
  }
  udg::io::write_graph(a.out, gg.graph);
  udg::io::write_file(a.coords.empty() ? a.out + ".coords" : a.coords,
                      udg::io::serialize_sidecar(gg.cloud, gg.graph));
  const auto p = udg::degree_profile(gg.graph);
  std::cout << "graph=" << gg.graph.name() << " n=" << gg.graph.vertex_count() << " m=" << gg.graph.edge_count()
            << " min_degree=" << p.min_degree << " max_degree=" << p.max_degree << " regular=" << p.regular
            << " rational_unit=" << udg::rational_rescale_check(gg.cloud) << "\n";
  return kExitOk;
}

struct AlphaArgs {
  std::string graph;
  int pivot = -1;
  std::string witness;
  int threads = 1;
  BudgetFlags budget;
};

int cmd_alpha(const AlphaArgs& a) {
  std::cout << "config command=alpha graph=" << a.graph << " transitive_pivot=" << a.pivot
            << " witness=" << (a.witness.empty() ? "-" : a.witness) << " threads=" << a.threads << " "
            << a.budget.describe() << "\n";
  const auto g = udg::io::read_graph(a.graph);
  udg::MisOptions opt;
  opt.budget = a.budget.budget();
  opt.threads = a.threads;
  const auto r = a.pivot >= 0 ? udg::alpha_vertex_transitive(g, a.pivot, opt) : udg::max_independent_set(g, opt);
  if (!a.witness.empty()) udg::io::write_witness(a.witness, udg::io::independent_set_witness(g, r.witness));
  const int n = g.vertex_count();
  if (r.complete()) {
    std::cout << "status=optimal n=" << n << " alpha=" << r.lower_bound;
    if (n > 0 && r.lower_bound > 0) std::cout << " chi_lower=" << udg::ratio_lower_bound(n, r.lower_bound);
    std::cout << " nodes=" << r.stats.nodes << " seconds=" << seconds_of(r.stats.wall_time) << "\n";
    return kExitOk;
  }
  std::cout << "status=incomplete n=" << n << " alpha_lower=" << r.lower_bound << " alpha_upper=" << r.upper_bound;
  if (n > 0 && r.upper_bound > 0) std::cout << " chi_lower=" << udg::ratio_lower_bound(n, r.upper_bound);
  std::cout << " nodes=" << r.stats.nodes << " seconds=" << seconds_of(r.stats.wall_time) << "\n";
  return kExitBudget;
}

struct ChiArgs {
  std::string graph;
  bool transitive = false;
  std::string witness;
  BudgetFlags budget;
};

int cmd_chi(const ChiArgs& a) {
  std::cout << "config command=chi graph=" << a.graph << " transitive=" << a.transitive
            << " witness=" << (a.witness.empty() ? "-" : a.witness) << " " << a.budget.describe() << "\n";
  auto g = udg::io::read_graph(a.graph);
  if (a.transitive) {
    // Re-tag: files carry no symmetry information, the caller asserts it.
    udg::GraphBuilder b(g.vertex_count(), g.name());
    for (auto [i, j] : g.edges()) b.add_edge(i, j);
    b.set_vertex_transitive(true);
    g = std::move(b).build();
  }
  udg::ChromaticOptions opt;
  opt.budget = a.budget.budget();
  const auto start = std::chrono::steady_clock::now();
  const auto r = udg::chromatic_number(g, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.complete()) {
    if (!a.witness.empty()) udg::io::write_witness(a.witness, udg::io::coloring_witness(g, r.coloring));
    std::cout << "status=optimal n=" << g.vertex_count() << " chi=" << *r.chi();
    if (r.alpha) std::cout << " alpha=" << *r.alpha;
    std::cout << " nodes=" << r.nodes_explored << " seconds=" << secs << "\n";
    return kExitOk;
  }
  std::cout << "status=incomplete n=" << g.vertex_count() << " chi_lower=" << r.lower_bound
            << " chi_upper=" << r.upper_bound << " nodes=" << r.nodes_explored << " seconds=" << secs << "\n";
  return kExitBudget;
}

struct AugmentArgs {
  std::string order = "lex";
  std::uint64_t seed = 0;
  std::string pool_file;
  std::int64_t budget_candidates = -1;
  std::int64_t budget_accepted = -1;
  double budget_seconds = 3600;
  std::string out;
  std::string log;
  bool skip_isolated = false;
  bool verify_full = false;
};

int cmd_augment(const AugmentArgs& a) {
  std::cout << "config command=augment order=" << a.order << " seed=" << a.seed
            << " pool_file=" << (a.pool_file.empty() ? "-" : a.pool_file)
            << " budget_candidates=" << a.budget_candidates << " budget_accepted=" << a.budget_accepted
            << " budget_seconds=" << a.budget_seconds << " out=" << (a.out.empty() ? "-" : a.out)
            << " log=" << (a.log.empty() ? "-" : a.log) << " skip_isolated=" << a.skip_isolated
            << " verify_full=" << a.verify_full << "\n";
  const auto base = udg::build_g0();
  auto state = udg::start_augmentation(base);

  udg::CandidatePool pool;
  if (!a.pool_file.empty()) {
    pool.points = udg::io::parse_point_list(udg::io::read_file(a.pool_file));
  } else {
    udg::PoolOrder order;
    if (a.order == "lex")
      order = udg::PoolOrder::lex;
    else if (a.order == "degree")
      order = udg::PoolOrder::degree;
    else if (a.order == "random")
      order = udg::PoolOrder::random;
    else
      throw std::invalid_argument("unknown order " + a.order);
    pool = udg::make_pool(state.cloud, order, a.seed);
  }

  udg::AugmentOptions opt;
  if (a.budget_candidates >= 0) opt.max_candidates = a.budget_candidates;
  if (a.budget_accepted >= 0) opt.max_accepted = a.budget_accepted;
  if (a.budget_seconds > 0) opt.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(a.budget_seconds * 1000));
  opt.skip_isolated = a.skip_isolated;
  opt.verify_full = a.verify_full;

  std::ofstream log_file;
  if (!a.log.empty()) {
    log_file.open(a.log);
    if (!log_file) throw std::invalid_argument("cannot write " + a.log);
  }
  std::ostream& log = a.log.empty() ? std::cout : log_file;
  const auto res = udg::augment_greedy(state, pool, opt, [&](const udg::CandidateEvent& ev) {
    log << "candidate index=" << ev.index << " point=" << point_str(ev.point) << " degree=" << ev.degree
        << " result=" << (ev.skipped ? "skipped" : ev.accepted ? "accepted" : "rejected") << " alpha=" << ev.alpha_after
        << "\n";
  });

  udg::Certificate cert;
  cert.points = res.state.added;
  cert.claimed_alpha = res.state.alpha;
  const auto n = res.state.graph.vertex_count();
  cert.claimed_chi_lower = udg::ratio_lower_bound(n, res.state.alpha);
  if (!a.out.empty()) udg::io::write_certificate(a.out, cert, std::string(udg::to_string(res.stop)));
  std::cout << "accepted=" << res.state.added.size() << " tested=" << res.tested
            << " rejected=" << res.state.rejected_count << " n=" << n << " alpha=" << res.state.alpha
            << " chi_lower=" << cert.claimed_chi_lower << " stop=" << udg::to_string(res.stop) << "\n";
  return res.stop == udg::AugmentStop::pool_exhausted ? kExitOk : kExitBudget;
}

struct VerifyArgs {
  std::string certificate;
  BudgetFlags budget;
};

int cmd_verify(const VerifyArgs& a) {
  std::cout << "config command=verify certificate=" << a.certificate << " " << a.budget.describe() << "\n";
  const auto file = udg::io::read_certificate(a.certificate);
  udg::MisOptions opt;
  opt.budget = a.budget.budget();
  const auto check = udg::verify_certificate(file.cert, opt);
  const auto& rep = check.report;
  if (check.pass) {
    std::cout << "check=pass graph=" << rep.graph_name << " n=" << rep.n_vertices << " alpha=" << *rep.alpha
              << " chi_lower=" << *rep.chi_lower << "\n";
    return kExitOk;
  }
  std::cout << "check=fail reason=\"" << check.failure << "\"";
  if (check.point_index) std::cout << " point_index=" << *check.point_index;
  if (rep.alpha) std::cout << " recomputed_alpha=" << *rep.alpha;
  std::cout << "\n";
  return check.failure.rfind("independence number not resolved", 0) == 0 ? kExitBudget : kExitVerifyFailed;
}

struct TableArgs {
  std::vector<int> us;
  std::string d_range = "2..8";
  std::string format = "text";
  std::string out;
  bool timing = false;
  BudgetFlags budget;
};

int cmd_table(const TableArgs& a) {
  std::cout << "config command=table u=";
  for (std::size_t k = 0; k < a.us.size(); ++k) std::cout << (k ? "," : "") << a.us[k];
  std::cout << " d=" << a.d_range << " format=" << a.format << " out=" << (a.out.empty() ? "-" : a.out)
            << " timing=" << a.timing << " " << a.budget.describe() << "\n";
  const auto ds = parse_range(a.d_range);
  udg::ResultTable t;
  for (int u : a.us)
    for (int d : ds) t.rows.push_back(udg::compute_cell(d, u, a.budget.budget()));
  udg::apply_row_monotonicity(t);
  std::string rendered;
  if (a.format == "text")
    rendered = udg::render_text(t, a.timing);
  else if (a.format == "csv")
    rendered = udg::render_csv(t, a.timing);
  else if (a.format == "json")
    rendered = udg::render_json(t, a.timing);
  else
    throw std::invalid_argument("unknown format " + a.format);
  std::cout << rendered;
  if (!a.out.empty()) udg::io::write_file(a.out, rendered);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit-distance graph toolkit: exact alpha and chi, E8 augmentation, certificates"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* c_build = app.add_subcommand("build", "construct a graph and its coordinate sidecar");
  c_build->add_option("family", build.family, "cube | half | slice | gosset")
      ->required()
      ->check(CLI::IsMember({"cube", "half", "slice", "gosset"}));
  c_build->add_option("-d", build.d, "dimension");
  c_build->add_option("-u", build.u, "Hamming distance");
  c_build->add_option("-s", build.s, "slice height");
  c_build->add_option("--out", build.out, "graph file")->required();
  c_build->add_option("--coords", build.coords, "sidecar file (default: OUT.coords)");

  AlphaArgs alpha;
  alpha.threads = default_threads();
  auto* c_alpha = app.add_subcommand("alpha", "exact independence number");
  c_alpha->add_option("graph", alpha.graph, "graph file")->required();
  c_alpha->add_option("--transitive-pivot", alpha.pivot,
                      "assert vertex-transitivity and reduce to the non-neighbours of this 0-based vertex");
  c_alpha->add_option("--witness", alpha.witness, "write the independent set here");
  c_alpha->add_option("--threads", alpha.threads, "worker threads (default: $UDG_THREADS or 1)");
  add_budget(c_alpha, alpha.budget, 3600);

  ChiArgs chi;
  auto* c_chi = app.add_subcommand("chi", "exact chromatic number");
  c_chi->add_option("graph", chi.graph, "graph file")->required();
  c_chi->add_flag("--transitive", chi.transitive, "assert vertex-transitivity (speeds up the ratio bound)");
  c_chi->add_option("--witness", chi.witness, "write the colouring here");
  add_budget(c_chi, chi.budget, 3600);

  AugmentArgs aug;
  auto* c_aug = app.add_subcommand("augment", "greedy alpha-preserving augmentation of the E8 root graph");
  c_aug->add_option("--order", aug.order, "pool order: lex | degree | random")
      ->check(CLI::IsMember({"lex", "degree", "random"}))
      ->capture_default_str();
  c_aug->add_option("--seed", aug.seed, "seed for --order random")->capture_default_str();
  c_aug->add_option("--pool-file", aug.pool_file, "use these points, in file order, as the pool");
  c_aug->add_option("--budget-candidates", aug.budget_candidates, "stop after testing this many candidates");
  c_aug->add_option("--budget-accepted", aug.budget_accepted, "stop after accepting this many points");
  c_aug->add_option("--budget-seconds", aug.budget_seconds, "wall-clock limit (0 = unlimited)")->capture_default_str();
  c_aug->add_option("--out", aug.out, "certificate file");
  c_aug->add_option("--log", aug.log, "per-candidate log (default: stdout)");
  c_aug->add_flag("--skip-isolated", aug.skip_isolated, "skip candidates with no neighbour in the current graph");
  c_aug->add_flag("--verify-full", aug.verify_full, "recompute alpha from scratch after each acceptance");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "re-derive every claim of a certificate");
  c_verify->add_option("certificate", verify.certificate, "certificate file")->required();
  add_budget(c_verify, verify.budget, 3600);

  TableArgs table;
  auto* c_table = app.add_subcommand("table", "chi(C(d,u)) grid");
  c_table->add_option("-u", table.us, "Hamming distances (repeatable or comma separated)")
      ->required()
      ->delimiter(',');
  c_table->add_option("-d", table.d_range, "dimension range LO..HI")->capture_default_str();
  c_table->add_option("--format", table.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  c_table->add_option("--out", table.out, "also write the table here");
  c_table->add_flag("--timing", table.timing, "include per-cell runtimes");
  add_budget(c_table, table.budget, 60);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*c_build) return cmd_build(build);
    if (*c_alpha) return cmd_alpha(alpha);
    if (*c_chi) return cmd_chi(chi);
    if (*c_aug) return cmd_augment(aug);
    if (*c_verify) return cmd_verify(verify);
    if (*c_table) return cmd_table(table);
  } catch (const udg::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
