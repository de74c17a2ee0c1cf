#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "kcut/driver.hpp"
#include "kcut/gomory_hu.hpp"
#include "kcut/instancegen.hpp"
#include "kcut/json_io.hpp"
#include "kcut/oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kcut::InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw kcut::InputError("cannot write '" + path + "'");
  out << text;
}

json trace_json(const kcut::SchemeCertificate& cert) {
  json t;
  t["lambda_guess"] = kcut::rat_to_string(cert.lambda_guess);
  t["lambda_unit"] = cert.lambda_unit;
  t["theta"] = kcut::rat_to_string(cert.theta);
  t["removed_cut_sets"] = cert.removed_cut_sets;
  t["sample_p"] = cert.sample_p;
  t["lambda_cap"] = cert.lambda_cap;
  t["retry_used"] = cert.retry_used;
  t["table_rows"] = cert.stats.rows;
  return t;
}

int run_solve(const std::string& algorithm, const std::string& input, int k,
              const std::string& objective, long long lambda, bool have_lambda,
              const std::string& epsilon, bool have_epsilon, std::uint64_t seed,
              bool emit_trace, int retries, int tree_retry, int oracle_cap,
              const std::string& dump_tables) {
  auto g = kcut::parse_graph(read_file(input));
  auto obj = kcut::parse_objective(objective);
  if (algorithm != "dp" && have_lambda)
    throw kcut::InputError("--lambda only applies to --algorithm dp");
  if (algorithm != "scheme" && have_epsilon)
    throw kcut::InputError("--epsilon only applies to --algorithm scheme");

  json out;
  bool feasible = false;
  if (algorithm == "brute") {
    kcut::OracleOptions opts;
    opts.cap = oracle_cap;
    auto result = kcut::brute_opt(g, k, obj, opts);
    feasible = result.feasible;
    if (feasible) {
      out = kcut::partition_report(g, result.witnesses.front(), obj);
      out["evaluated"] = result.evaluated_count;
    }
  } else if (algorithm == "dp") {
    if (!have_lambda) throw kcut::InputError("--algorithm dp needs --lambda");
    if (!g.is_unit())
      throw kcut::InputError("dp expects unit weights; use --algorithm scheme "
                             "for weighted graphs");
    kcut::ExactOptions opts;
    opts.tree_retry = tree_retry;
    auto result = kcut::exact_fpt(g, k, lambda, obj, opts);
    feasible = result.feasible;
    if (feasible) {
      out = kcut::partition_report(g, result.partition, obj);
      out["table_rows"] = result.stats.rows;
      if (!dump_tables.empty()) {
        // Rerun the table pass on the (connected) instance to dump it.
        std::ostringstream dump;
        kcut::DPSolver solver(g, k, lambda, kcut::thorup_tree(g, k),
                              kcut::trivial_decomposition(g), {});
        solver.compute_node_table(solver.decomposition().root);
        solver.dump_tables(dump);
        write_file(dump_tables, dump.str());
      }
    }
  } else if (algorithm == "scheme") {
    if (!have_epsilon) throw kcut::InputError("--algorithm scheme needs --epsilon");
    kcut::Rational eps = kcut::parse_rational(epsilon);
    kcut::SchemeOptions opts;
    opts.retries = retries;
    auto result = kcut::approx_scheme(g, k, eps, seed, obj, opts);
    feasible = result.feasible;
    if (feasible) {
      out = kcut::partition_report(g, result.partition, obj);
      if (emit_trace) out["trace"] = trace_json(result.certificate);
    }
  } else if (algorithm == "baseline2k") {
    auto p = kcut::minmax_2k_approx(g, k);
    feasible = true;
    out = kcut::partition_report(g, p, obj);
  } else {
    throw kcut::InputError("unknown algorithm '" + algorithm + "'");
  }
  if (!feasible) {
    std::cerr << "infeasible\n";
    return 2;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify_partition(const std::string& graph_path, const std::string& part_path) {
  auto g = kcut::parse_graph(read_file(graph_path));
  json doc = json::parse(read_file(part_path));
  bool ok = true;
  auto check = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "pass" : "fail") << " " << name << "\n";
    ok = ok && pass;
  };
  if (!doc.contains("parts") || !doc["parts"].is_array()) {
    check("schema: parts array", false);
    return 1;
  }
  std::vector<std::vector<int>> parts = doc["parts"];
  std::vector<char> seen(g.n(), 0);
  bool disjoint = true, in_range = true, nonempty = true;
  for (const auto& part : parts) {
    if (part.empty()) nonempty = false;
    for (int v : part) {
      if (v < 0 || v >= g.n()) {
        in_range = false;
        continue;
      }
      if (seen[v]) disjoint = false;
      seen[v] = 1;
    }
  }
  check("vertex ids in range", in_range);
  check("disjointness", disjoint);
  check("nonempty parts", nonempty);
  bool covers = in_range;
  for (int v = 0; v < g.n(); ++v) covers = covers && seen[v];
  check("covers all vertices", covers);
  if (ok && doc.contains("per_part_cut")) {
    auto cuts = kcut::per_part_cuts(g, parts);
    std::vector<double> declared = doc["per_part_cut"];
    bool match = declared.size() == cuts.size();
    for (std::size_t i = 0; match && i < cuts.size(); ++i)
      match = std::abs(kcut::rat_to_double(cuts[i]) - declared[i]) < 1e-6;
    check("per_part_cut matches", match);
  }
  return ok ? 0 : 1;
}

int run_verify_decomposition(const std::string& graph_path, const std::string& td_path) {
  auto g = kcut::parse_graph(read_file(graph_path));
  auto td = kcut::parse_tree_decomposition(read_file(td_path));
  auto report = kcut::verify_decomposition(g, td);
  std::cout << (report.valid ? "pass" : "fail") << " tree decomposition";
  if (!report.valid) std::cout << " (" << report.first_violation << ")";
  std::cout << "\n";
  std::cout << (report.compact ? "pass" : "fail") << " compactness";
  if (report.valid && !report.compact) std::cout << " (" << report.first_violation << ")";
  std::cout << "\n";
  std::cout << "info max adhesion " << report.max_adhesion << "\n";
  return report.valid && report.compact ? 0 : 1;
}

int run_verify_nice(const std::string& graph_path, const std::string& td_path,
                    int node, int k, const std::string& nice_path) {
  auto g = kcut::parse_graph(read_file(graph_path));
  auto td = kcut::parse_tree_decomposition(read_file(td_path));
  if (node < 0 || node >= td.size()) throw kcut::InputError("node id out of range");
  json doc = json::parse(read_file(nice_path));
  kcut::NiceDecomposition d;
  d.parts = doc.at("parts").get<std::vector<std::vector<int>>>();
  d.core = doc.at("core").get<std::vector<int>>();
  d.fine.parts = doc.at("fine").get<std::vector<std::vector<int>>>();
  d.fine.ground = td.nodes[node].bag;
  bool pass = kcut::verify_nice(g, td, node, d, k);
  std::cout << (pass ? "pass" : "fail") << " bag decomposition\n";
  return pass ? 0 : 1;
}

struct BenchRow {
  std::string instance;
  std::string algorithm;
  double cost = 0;
  double ratio = -1;
  double seconds = 0;
  bool ok = false;
};

int run_bench(const std::vector<std::string>& inputs, const std::string& algorithms,
              int k, const std::string& objective, const std::string& epsilon,
              std::uint64_t seed, int jobs, int oracle_cap) {
  auto obj = kcut::parse_objective(objective);
  std::vector<std::string> algos;
  {
    std::stringstream ss(algorithms);
    std::string item;
    while (std::getline(ss, item, ',')) algos.push_back(item);
  }
  struct Task {
    std::string path;
    std::string algo;
  };
  std::vector<Task> tasks;
  for (const auto& path : inputs)
    for (const auto& algo : algos) tasks.push_back({path, algo});

  std::vector<BenchRow> rows(tasks.size());
  std::mutex heavy;  // serializes the shared brute-force baselines
  std::map<std::string, double> brute_cache;
  auto brute_for = [&](const std::string& path, const kcut::WeightedMultigraph& g) {
    std::lock_guard<std::mutex> lock(heavy);
    auto it = brute_cache.find(path);
    if (it != brute_cache.end()) return it->second;
    double value = -1;
    if (g.n() <= oracle_cap) {
      kcut::OracleOptions opts;
      opts.cap = oracle_cap;
      auto r = kcut::brute_opt(g, k, obj, opts);
      if (r.feasible) value = r.opt_numeric;
    }
    brute_cache[path] = value;
    return value;
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const auto& task = tasks[i];
      BenchRow row;
      row.instance = fs::path(task.path).filename().string();
      row.algorithm = task.algo;
      try {
        auto g = kcut::parse_graph(read_file(task.path));
        auto start = std::chrono::steady_clock::now();
        double cost = -1;
        if (task.algo == "brute") {
          kcut::OracleOptions opts;
          opts.cap = oracle_cap;
          auto r = kcut::brute_opt(g, k, obj, opts);
          if (r.feasible) cost = r.opt_numeric;
        } else if (task.algo == "baseline2k") {
          auto p = kcut::minmax_2k_approx(g, k);
          cost = kcut::cost_numeric(kcut::per_part_cuts(g, p.parts), obj);
        } else if (task.algo == "scheme") {
          kcut::Rational eps = kcut::parse_rational(epsilon.empty() ? "1/2" : epsilon);
          auto r = kcut::approx_scheme(g, k, eps, seed, obj);
          if (r.feasible) cost = r.cost;
        } else if (task.algo == "dp") {
          long long lambda = g.edge_count();
          auto r = kcut::exact_fpt(g, k, lambda, obj);
          if (r.feasible) cost = r.cost;
        } else {
          throw kcut::InputError("unknown algorithm '" + task.algo + "'");
        }
        row.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (cost >= 0) {
          row.cost = cost;
          row.ok = true;
          double brute = brute_for(task.path, g);
          if (brute > 0) row.ratio = cost / brute;
          if (brute == 0) row.ratio = cost == 0 ? 1 : -1;
        }
      } catch (const std::exception& e) {
        std::cerr << row.instance << " " << row.algorithm << ": " << e.what() << "\n";
      }
      rows[i] = std::move(row);
    }
  };
  int workers = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::cout << "instance,algorithm,cost,ratio_to_brute,wall_time_s\n";
  for (const auto& row : rows) {
    if (!row.ok) continue;
    std::cout << row.instance << "," << row.algorithm << "," << row.cost << ",";
    if (row.ratio >= 0) std::cout << row.ratio;
    std::cout << "," << row.seconds << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minmax and l_p-norm graph k-partitioning toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance");
  std::string algorithm, input, objective = "minmax", epsilon, dump_tables;
  int k = 2, retries = 1, tree_retry = 1, oracle_cap = 12;
  long long lambda = 0;
  std::uint64_t seed = 1;
  bool emit_trace = false;
  solve->add_option("--algorithm", algorithm, "brute|dp|scheme|baseline2k")
      ->required();
  solve->add_option("--k", k, "number of parts")->required();
  solve->add_option("--objective", objective, "minmax|minsum|lp:<p>");
  auto* lambda_opt = solve->add_option("--lambda", lambda, "budget for dp");
  auto* eps_opt = solve->add_option("--epsilon", epsilon, "accuracy for scheme");
  solve->add_option("--seed", seed, "random seed");
  solve->add_option("--input", input, "graph file")->required();
  solve->add_flag("--emit-trace", emit_trace, "include the reduction trace");
  solve->add_option("--retries", retries, "scheme retries with fresh seeds");
  solve->add_option("--tree-retry", tree_retry, "guide trees tried by dp");
  solve->add_option("--oracle-cap", oracle_cap, "brute-force vertex cap");
  solve->add_option("--dump-tables", dump_tables, "write dp tables as JSON lines");

  // generate
  auto* generate = app.add_subcommand("generate", "write instance files");
  auto* gadget = generate->add_subcommand("gadget", "clique-detection instance");
  gadget->set_help_flag("--help", "print help");  // frees -h for the flag below
  std::string gadget_input, gadget_output = "gadget";
  int gadget_h = 2;
  bool gadget_full = false;
  gadget->add_option("--input", gadget_input, "base graph file")->required();
  gadget->add_option("--h", gadget_h, "clique size")->required();
  gadget->add_option("--output", gadget_output, "output prefix");
  gadget->add_flag("--full", gadget_full, "also write the expanded gadget");
  auto* random = generate->add_subcommand("random", "random connected graphs");
  kcut::RandomCorpusSpec rspec;
  std::string random_dir = ".";
  random->add_option("--n", rspec.n_max, "vertex count")->required();
  random->add_option("--n-min", rspec.n_min, "smallest vertex count (default --n)");
  random->add_option("--density", rspec.density, "edge probability");
  random->add_option("--count", rspec.count, "number of graphs");
  random->add_option("--weight-min", rspec.weight_min, "smallest weight");
  random->add_option("--weight-max", rspec.weight_max, "largest weight");
  random->add_option("--seed", rspec.seed, "random seed");
  random->add_option("--output-dir", random_dir, "target directory");

  // verify
  auto* verify = app.add_subcommand("verify", "check files against a graph");
  auto* vdec = verify->add_subcommand("decomposition", "tree decomposition file");
  std::string v_graph, v_td;
  vdec->add_option("--graph", v_graph, "graph file")->required();
  vdec->add_option("--decomposition", v_td, "decomposition file")->required();
  auto* vpart = verify->add_subcommand("partition", "partition JSON");
  std::string vp_graph, vp_file;
  vpart->add_option("--graph", vp_graph, "graph file")->required();
  vpart->add_option("--partition", vp_file, "partition JSON file")->required();
  auto* vnice = verify->add_subcommand("nice", "bag decomposition JSON");
  std::string vn_graph, vn_td, vn_file;
  int vn_node = 0, vn_k = 2;
  vnice->add_option("--graph", vn_graph, "graph file")->required();
  vnice->add_option("--decomposition", vn_td, "decomposition file")->required();
  vnice->add_option("--node", vn_node, "decomposition node")->required();
  vnice->add_option("--k", vn_k, "number of parts")->required();
  vnice->add_option("--nice", vn_file, "bag decomposition JSON")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "CSV benchmark over a corpus");
  std::string bench_dir, bench_algos = "brute,dp,baseline2k";
  std::string bench_obj = "minmax", bench_eps;
  int bench_k = 2, bench_jobs = 1, bench_cap = 12;
  std::uint64_t bench_seed = 1;
  bench->add_option("--input-dir", bench_dir, "directory of .graph files")
      ->required();
  bench->add_option("--algorithms", bench_algos, "comma-separated list");
  bench->add_option("--k", bench_k, "number of parts")->required();
  bench->add_option("--objective", bench_obj, "objective");
  bench->add_option("--epsilon", bench_eps, "scheme accuracy");
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--jobs", bench_jobs, "worker threads");
  bench->add_option("--oracle-cap", bench_cap, "brute-force vertex cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(algorithm, input, k, objective, lambda, lambda_opt->count() > 0,
                       epsilon, eps_opt->count() > 0, seed, emit_trace, retries,
                       tree_retry, oracle_cap, dump_tables);
    if (gadget->parsed()) {
      auto base = kcut::parse_graph(read_file(gadget_input));
      auto [quotient, spec] = kcut::quotient_graph(base, gadget_h);
      write_file(gadget_output + ".quotient.graph", kcut::serialize_graph(quotient));
      json side;
      side["base_n"] = spec.base_n;
      side["base_m"] = spec.base_m;
      side["h"] = spec.h;
      side["M"] = spec.M;
      side["N"] = spec.N;
      side["threshold"] = spec.threshold;
      side["gadget_vertices"] = (spec.base_n + 1) * spec.N;
      write_file(gadget_output + ".json", side.dump(2) + "\n");
      if (gadget_full) {
        auto [full, spec2] = kcut::clique_gadget(base, gadget_h);
        write_file(gadget_output + ".gadget.graph", kcut::serialize_graph(full));
      }
      std::cerr << "gadget threshold " << spec.threshold << "\n";
      return 0;
    }
    if (random->parsed()) {
      if (random->count("--n-min") == 0) rspec.n_min = rspec.n_max;
      auto corpus = kcut::random_corpus(rspec);
      fs::create_directories(random_dir);
      json side;
      side["density"] = rspec.density;
      side["seed"] = rspec.seed;
      side["count"] = rspec.count;
      side["weight_min"] = rspec.weight_min;
      side["weight_max"] = rspec.weight_max;
      write_file((fs::path(random_dir) / "corpus.json").string(), side.dump(2) + "\n");
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "random_%03zu.graph", i);
        write_file((fs::path(random_dir) / name).string(),
                   kcut::serialize_graph(corpus[i]));
      }
      return 0;
    }
    if (vdec->parsed()) return run_verify_decomposition(v_graph, v_td);
    if (vpart->parsed()) return run_verify_partition(vp_graph, vp_file);
    if (vnice->parsed())
      return run_verify_nice(vn_graph, vn_td, vn_node, vn_k, vn_file);
    if (bench->parsed()) {
      std::vector<std::string> inputs;
      for (const auto& entry : fs::directory_iterator(bench_dir))
        if (entry.path().extension() == ".graph") inputs.push_back(entry.path());
      std::sort(inputs.begin(), inputs.end());
      return run_bench(inputs, bench_algos, bench_k, bench_obj, bench_eps, bench_seed,
                       bench_jobs, bench_cap);
    }
  } catch (const kcut::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
