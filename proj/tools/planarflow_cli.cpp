// Command-line front end: solve, verify, phi, gen grid, bench.
//
// Exit codes: 0 success, 1 verification failure or aborted solve, 2 usage or
// input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "planarflow/planarflow.hpp"

namespace {

using namespace planarflow;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct Run {
  FlowResult result;
  std::int64_t micros = 0;
};

Run solve(const Instance& in, const std::string& algo, CheckLevel check) {
  const auto start = std::chrono::steady_clock::now();
  Run run;
  if (algo == "cover") {
    run.result = max_flow_via_cover(in.embedding, in.capacity);
  } else if (algo == "adaptive") {
    auto ad = max_adaptive_flow(in.embedding, in.capacity, check);
    if (!ad.trace.all_checks_pass()) throw CheckFailure("adaptive run failed a trace check");
    run.result = std::move(ad.result);
  } else {
    auto ek = edmonds_karp(in.embedding, in.capacity);
    run.result = FlowResult{std::move(ek.flow), ek.value, {}, 0, 0, 0, "oracle"};
  }
  run.micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return run;
}

nlohmann::json stats_json(const Run& run, const std::string& instance) {
  const auto& r = run.result;
  return {{"instance", instance},
          {"solver", r.solver},
          {"value", r.value},
          {"sp_calls", r.stats.shortest_path_count},
          {"pq_operations", r.stats.pq_operations},
          {"iterations", r.iterations},
          {"phi", r.phi},
          {"k", r.k},
          {"micros", run.micros}};
}

CheckLevel parse_check(const std::string& s) {
  if (s == "none") return CheckLevel::None;
  if (s == "bounds") return CheckLevel::Bounds;
  return CheckLevel::Full;
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& list) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto x = item.find('x');
    try {
      if (x == std::string::npos) {
        const int n = std::stoi(item);
        out.emplace_back(n, n);
      } else {
        out.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
      }
    } catch (const std::exception&) {
      throw UsageError("bad size '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("no sizes given");
  return out;
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum st-flow in planar embedded graphs via dual shortest paths"};
  app.require_subcommand(1);

  std::string input, flow_out, stats_out, algo = "cover", check = "none";
  auto* solve_cmd = app.add_subcommand("solve", "Compute a maximum flow");
  solve_cmd->add_option("--algo", algo)->check(CLI::IsMember({"cover", "adaptive", "oracle"}));
  solve_cmd->add_option("--input", input)->required();
  solve_cmd->add_option("--flow-out", flow_out);
  solve_cmd->add_option("--stats-json", stats_out);
  solve_cmd->add_option("--check", check)->check(CLI::IsMember({"none", "bounds", "full"}));

  std::string flow_in;
  bool leftmost = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a flow file against an instance");
  verify_cmd->add_option("--input", input)->required();
  verify_cmd->add_option("--flow", flow_in)->required();
  verify_cmd->add_flag("--leftmost", leftmost);

  auto* phi_cmd = app.add_subcommand("phi", "Print the face-distance parameter phi");
  phi_cmd->add_option("--input", input)->required();

  int width = 0, height = 0;
  Amount cap_max = 10;
  std::uint64_t seed = 1;
  std::string st = "corners", out_path;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* grid_cmd = gen_cmd->add_subcommand("grid", "Directed grid with random capacities");
  grid_cmd->add_option("--width", width)->required();
  grid_cmd->add_option("--height", height)->required();
  grid_cmd->add_option("--cap-max", cap_max);
  grid_cmd->add_option("--seed", seed);
  grid_cmd->add_option("--st", st)->check(CLI::IsMember({"corners", "center-corner", "random"}));
  grid_cmd->add_option("-o,--output", out_path)->required();

  std::string family = "grid", sizes = "5,6,7,8,9", algos = "cover,adaptive", csv_path, bench_st = "center-corner";
  int seeds = 3;
  auto* bench_cmd = app.add_subcommand("bench", "Run solvers over generated instances and emit CSV");
  bench_cmd->add_option("--family", family)->check(CLI::IsMember({"grid"}));
  bench_cmd->add_option("--sizes", sizes);
  bench_cmd->add_option("--algos", algos);
  bench_cmd->add_option("--seeds", seeds);
  bench_cmd->add_option("--cap-max", cap_max);
  bench_cmd->add_option("--st", bench_st)->check(CLI::IsMember({"corners", "center-corner", "random"}));
  bench_cmd->add_option("--csv", csv_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_cmd) {
      const Instance in = parse_graph(read_file(input));
      const Run run = solve(in, algo, parse_check(check));
      std::cout << "value " << run.result.value << "\n"
                << "sp_calls " << run.result.stats.shortest_path_count << "\n"
                << "iterations " << run.result.iterations << "\n"
                << "phi " << run.result.phi << "\n"
                << "k " << run.result.k << "\n";
      if (!flow_out.empty()) write_file(flow_out, serialize_flow(run.result.flow));
      if (!stats_out.empty()) write_file(stats_out, stats_json(run, input).dump() + "\n");
      return 0;
    }
    if (*verify_cmd) {
      const Instance in = parse_graph(read_file(input));
      const FlowAssignment f = parse_flow(read_file(flow_in), static_cast<std::size_t>(in.embedding.dart_count()));
      const auto rep = verify_flow(in.embedding, in.capacity, f, in.embedding.s(), in.embedding.t(), leftmost);
      for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
      }
      return rep.ok() ? 0 : 1;
    }
    if (*phi_cmd) {
      const Instance in = parse_graph(read_file(input));
      std::cout << "phi " << compute_phi(in.embedding) << "\n";
      return 0;
    }
    if (*grid_cmd) {
      write_file(out_path, serialize_graph(gen_grid(width, height, cap_max, seed, parse_st_mode(st))));
      return 0;
    }
    if (*bench_cmd) {
      const auto dims = parse_sizes(sizes);
      const auto algo_list = split_list(algos);
      for (const auto& a : algo_list) {
        if (a != "cover" && a != "adaptive" && a != "oracle") throw UsageError("unknown algorithm '" + a + "'");
      }
      const StMode mode = parse_st_mode(bench_st);
      std::ofstream csv(csv_path);
      if (!csv) throw UsageError("cannot write " + csv_path);
      csv << "instance,seed,algo,value,sp_calls,iterations,phi,k,micros\n";
      for (const auto& [w, h] : dims) {
        for (int s = 0; s < seeds; ++s) {
          const Instance in = make_instance(gen_grid(w, h, cap_max, static_cast<std::uint64_t>(s), mode));
          const int phi = compute_phi(in.embedding);
          const std::string name =
              "grid-" + std::to_string(w) + "x" + std::to_string(h) + "-" + to_string(mode) + "-c" + std::to_string(cap_max);
          for (const auto& a : algo_list) {
            try {
              const Run run = solve(in, a, CheckLevel::None);
              csv << name << ',' << s << ',' << a << ',' << run.result.value << ','
                  << run.result.stats.shortest_path_count << ',' << run.result.iterations << ',' << phi << ','
                  << run.result.k << ',' << run.micros << "\n";
            } catch (const std::exception& e) {
              std::cerr << name << " seed " << s << " " << a << ": " << e.what() << "\n";
              csv << name << ',' << s << ',' << a << ",NA,NA,NA," << phi << ",NA,NA\n";
            }
          }
        }
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::SummedCapacityViolated:
      case ErrorKind::NotCwAcyclic:
        return 1;
      default:
        return 2;
    }
  }
  return 2;
}
