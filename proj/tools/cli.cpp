#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quartic/errors.hpp"
#include "quartic/sweep.hpp"

namespace quartic::cli {

namespace {

std::vector<double> collect_grid(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  for (const auto& tok : tokens) {
    for (double v : parse_grid(tok)) out.push_back(v);
  }
  return out;
}

struct RawOptions {
  std::vector<std::string> alpha{"1"};
  std::vector<std::string> theta{"pi/2"};
  std::vector<std::string> lambda{"0.01"};
  std::string t_start = "0";
  std::string t_end = "2pi";
  int t_steps = 64;
  std::string dim = "auto";
  std::string mode = "closed_form";
  std::string forms = "published";
  std::vector<std::string> witnesses;
  std::string out;
  bool convergence = false;
};

SweepSpec to_spec(const RawOptions& raw) {
  SweepSpec spec;
  auto keyed = [](const char* key, auto&& fn) {
    try {
      return fn();
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(std::string(key) + ": " + e.what());
    }
  };
  spec.alpha = keyed("alpha", [&] { return collect_grid(raw.alpha); });
  spec.theta = keyed("theta", [&] { return collect_grid(raw.theta); });
  spec.lambda = keyed("lambda", [&] { return collect_grid(raw.lambda); });
  spec.t.start = keyed("t-start", [&] { return parse_angle(raw.t_start); });
  spec.t.end = keyed("t-end", [&] { return parse_angle(raw.t_end); });
  spec.t.steps = raw.t_steps;
  if (raw.dim != "auto") {
    spec.dim = keyed("dim", [&] {
      std::size_t used = 0;
      int d = 0;
      try {
        d = std::stoi(raw.dim, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != raw.dim.size()) {
        throw InvalidArgument("expected an integer or 'auto', got '" + raw.dim + "'");
      }
      return d;
    });
  }
  spec.mode = parse_mode(raw.mode);
  spec.forms = parse_forms(raw.forms);
  if (raw.witnesses.empty()) {
    spec.witnesses = all_witnesses();
  } else {
    for (const auto& w : raw.witnesses) spec.witnesses.push_back(parse_witness(w));
  }
  spec.output_path = raw.out;
  return spec;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quartic anharmonic oscillator: closed-form and exact nonclassicality sweeps"};
  RawOptions raw;
  app.set_config("--config", "", "Flat key = value file; keys mirror the long flag names");
  app.add_option("--alpha", raw.alpha, "|alpha| values, comma separated or repeated");
  app.add_option("--theta", raw.theta, "Coherent phase in radians; accepts pi/2, 3pi/4, 2pi");
  app.add_option("--lambda", raw.lambda, "Quartic coupling values");
  app.add_option("--t-start", raw.t_start, "First time point");
  app.add_option("--t-end", raw.t_end, "Last time point (inclusive)");
  app.add_option("--t-steps", raw.t_steps, "Number of time points (>= 2)");
  app.add_option("--dim", raw.dim, "Truncation dimension or 'auto'");
  app.add_option("--mode", raw.mode, "closed_form | exact | compare");
  app.add_option("--forms", raw.forms, "Closed-form family: published | derived");
  app.add_option("--witness", raw.witnesses, "f d1 d2 d3 N quadrature hillery (comma separated or repeated)")
      ->delimiter(',');
  app.add_option("--out", raw.out, "CSV output path (default: standard output)");
  app.add_flag("--convergence", raw.convergence,
               "Also recompute sampled points at twice the truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kSpecError;
  }

  try {
    const SweepSpec spec = to_spec(raw);
    const SweepResult result = run_sweep(spec);

    std::ostream* summary = &err;
    if (spec.output_path.empty()) {
      write_csv(out, result.rows);
    } else {
      std::ofstream file(spec.output_path, std::ios::binary);
      if (!file) {
        err << "error: out: cannot open '" << spec.output_path << "' for writing\n";
        return kIoError;
      }
      write_csv(file, result.rows);
      if (!file) {
        err << "error: out: write to '" << spec.output_path << "' failed\n";
        return kIoError;
      }
      summary = &out;
    }
    write_summary(*summary, spec, result);

    int code = kOk;
    if (result.scaling && !result.scaling->passed()) code = kVerdictFailed;
    if (raw.convergence) {
      const ConvergenceReport conv = convergence_check(spec);
      *summary << "convergence points=" << conv.points_checked
               << " max_relative_drift=" << format_number(conv.max_relative_drift)
               << (conv.passed ? " ok" : " FAIL") << '\n';
      if (!conv.passed) code = kVerdictFailed;
    }
    return code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kSpecError;
  } catch (const PreconditionFailure& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ZeroDenominator& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace quartic::cli
