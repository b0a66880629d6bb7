#include "kset/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kset/arrangement.hpp"
#include "kset/k_graph.hpp"
#include "kset/generate.hpp"
#include "kset/io.hpp"
#include "kset/svg.hpp"
#include "kset/verifier.hpp"

namespace kset {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void print_report(const Report& r, std::ostream& out) {
  out << "n=" << r.n << " k=" << r.k << " t=" << r.t << " X=" << r.x << " tangents=" << r.tangents
      << " chain_crossings=" << r.chain_crossings << " below_level=" << r.below_level << " nk=" << r.nk
      << " ksets_above=" << r.ksets_above << " ksets_below=" << r.ksets_below
      << " easy_case=" << (r.easy_case ? "yes" : "no") << " bound_ok=" << (r.bound_ok ? "yes" : "no") << '\n';
  for (const auto& v : r.verdicts)
    out << "  " << (v.holds ? "ok  " : "FAIL") << ' ' << v.name << "  lhs=" << to_string(v.lhs)
        << " rhs=" << to_string(v.rhs) << '\n';
  for (const auto& e : r.errors) out << "  error: " << e << '\n';
}

void print_table(const Instance& inst, std::ostream& out) {
  const Verifier verifier(inst);
  const auto sizes = verifier.arrangement().class_sizes();
  out << std::setw(4) << "k" << std::setw(8) << "|V_k-1|" << std::setw(8) << "above" << std::setw(8) << "below"
      << std::setw(6) << "t" << std::setw(6) << "X" << std::setw(10) << "tangents" << std::setw(11) << "chain_x"
      << std::setw(8) << "<=lvl" << std::setw(6) << "nk" << std::setw(6) << "ok" << '\n';
  for (const Report& r : verifier.verify_all()) {
    out << std::setw(4) << r.k << std::setw(8) << sizes[r.k - 1] << std::setw(8) << r.ksets_above << std::setw(8)
        << r.ksets_below << std::setw(6) << r.t << std::setw(6) << r.x << std::setw(10) << r.tangents
        << std::setw(11) << r.chain_crossings << std::setw(8) << r.below_level << std::setw(6) << r.nk
        << std::setw(6) << (r.all_hold() ? "yes" : "NO") << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-set, k-level and concave-chain analysis of planar point sets"};
  app.require_subcommand(1);

  GenSpec gen_spec;
  std::string shape_name = "uniform";
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--shape", shape_name, "uniform | parabola | grid-jitter")->capture_default_str();
  gen->add_option("--n", gen_spec.n, "Number of points")->capture_default_str();
  gen->add_option("--range", gen_spec.range, "Coordinates lie in [-range, range]")->capture_default_str();
  gen->add_option("--seed", gen_spec.seed, "RNG seed")->capture_default_str();
  gen->add_option("-o", output, "Output path (default stdout)");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Per-k count table");
  analyze->add_option("file", input, "Instance file")->required();

  std::optional<int> k;
  bool all_k = false;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "Check every inequality of the k-set bound");
  verify->add_option("file", input, "Instance file")->required();
  auto* verify_k = verify->add_option("--k", k, "Single k");
  verify->add_flag("--all-k", all_k, "Every k in [1, n-1] (default)")->excludes(verify_k);
  verify->add_flag("--json", json, "Emit the JSON report");

  SweepConfig sweep_cfg;
  std::string sweep_shape = "uniform";
  bool sweep_all_k = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify many seeded random instances");
  sweep_cmd->add_option("--n", sweep_cfg.n, "Points per instance")->capture_default_str();
  auto* sweep_k = sweep_cmd->add_option("--k", sweep_cfg.k, "Single k");
  sweep_cmd->add_flag("--all-k", sweep_all_k, "Every k in [1, n-1] (default)")->excludes(sweep_k);
  sweep_cmd->add_option("--trials", sweep_cfg.trials, "Number of instances")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_cfg.seed, "Master seed")->capture_default_str();
  sweep_cmd->add_option("--shape", sweep_shape, "uniform | parabola | grid-jitter")->capture_default_str();
  sweep_cmd->add_option("--range", sweep_cfg.range, "Coordinates lie in [-range, range]")->capture_default_str();
  sweep_cmd->add_option("-o", output, "Output path (default stdout)");

  int plot_k = 1;
  std::string view_name = "dual";
  auto* plot = app.add_subcommand("plot", "Render an SVG figure");
  plot->add_option("file", input, "Instance file")->required();
  plot->add_option("--k", plot_k, "Level / k-set size")->required();
  plot->add_option("--view", view_name, "primal | dual")->capture_default_str();
  plot->add_option("-o", output, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kInputError;
  }

  try {
    if (gen->parsed()) {
      auto shape = parse_shape(shape_name);
      if (!shape) throw InputError("unknown shape '" + shape_name + "'");
      gen_spec.shape = *shape;
      emit(write_instance(generate_instance(gen_spec)), output, out);
      return exit_code::kOk;
    }
    if (analyze->parsed()) {
      print_table(load(input), out);
      return exit_code::kOk;
    }
    if (verify->parsed()) {
      const Verifier verifier(load(input));
      std::vector<Report> reports;
      if (k)
        reports.push_back(verifier.verify(*k));
      else
        reports = verifier.verify_all();
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.all_hold();
      if (json) {
        nlohmann::ordered_json j;
        if (k) {
          j = to_json(reports.front());
        } else {
          j = nlohmann::ordered_json::array();
          for (const auto& r : reports) j.push_back(to_json(r));
        }
        out << j.dump(2) << '\n';
      } else {
        for (const auto& r : reports) print_report(r, out);
      }
      return ok ? exit_code::kOk : exit_code::kVerdictFailed;
    }
    if (sweep_cmd->parsed()) {
      auto shape = parse_shape(sweep_shape);
      if (!shape) throw InputError("unknown shape '" + sweep_shape + "'");
      sweep_cfg.shape = *shape;
      if (sweep_cfg.n < 2) throw InputError("--n must be at least 2");
      if (sweep_cfg.k && (*sweep_cfg.k < 1 || *sweep_cfg.k > sweep_cfg.n - 1))
        throw BadK(*sweep_cfg.k, 1, sweep_cfg.n - 1);
      const SweepSummary s = sweep(sweep_cfg);
      emit(to_json(s).dump(2) + "\n", output, out);
      return s.failures.empty() ? exit_code::kOk : exit_code::kVerdictFailed;
    }
    if (plot->parsed()) {
      View view;
      if (view_name == "primal")
        view = View::Primal;
      else if (view_name == "dual")
        view = View::Dual;
      else
        throw InputError("unknown view '" + view_name + "'");
      const Instance inst = load(input);
      if (plot_k < 1 || plot_k > inst.n() - 1) throw BadK(plot_k, 1, inst.n() - 1);
      emit(render_svg(inst, plot_k, view), output, out);
      return exit_code::kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const RetriesExhausted& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  return exit_code::kInputError;
}

}  // namespace kset
