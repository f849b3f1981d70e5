#include "quartic/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <thread>
#include <tuple>

#include "quartic/dynamics.hpp"
#include "quartic/errors.hpp"

namespace quartic {

std::string_view to_string(Witness w) {
  switch (w) {
    case Witness::kF: return "f";
    case Witness::kD1: return "d1";
    case Witness::kD2: return "d2";
    case Witness::kD3: return "d3";
    case Witness::kN: return "N";
    case Witness::kQuadrature: return "quadrature";
    case Witness::kHillery: return "hillery";
  }
  return "?";
}

std::string_view to_string(SweepMode m) {
  switch (m) {
    case SweepMode::kClosedForm: return "closed_form";
    case SweepMode::kExact: return "exact";
    case SweepMode::kCompare: return "compare";
  }
  return "?";
}

std::string_view to_string(FormFamily f) {
  return f == FormFamily::kPublished ? "published" : "derived";
}

std::string_view to_string(ScalingStatus s) {
  switch (s) {
    case ScalingStatus::kPass: return "pass";
    case ScalingStatus::kFail: return "fail";
    case ScalingStatus::kFloorLimited: return "floor-limited";
  }
  return "?";
}

const std::vector<Witness>& all_witnesses() {
  static const std::vector<Witness> all = {Witness::kF,        Witness::kD1, Witness::kD2,
                                           Witness::kD3,       Witness::kN,  Witness::kQuadrature,
                                           Witness::kHillery};
  return all;
}

Witness parse_witness(std::string_view token) {
  for (Witness w : all_witnesses()) {
    if (to_string(w) == token) return w;
  }
  throw InvalidArgument("witness: unknown witness '" + std::string(token) +
                        "' (expected f, d1, d2, d3, N, quadrature, hillery)");
}

SweepMode parse_mode(std::string_view token) {
  for (SweepMode m : {SweepMode::kClosedForm, SweepMode::kExact, SweepMode::kCompare}) {
    if (to_string(m) == token) return m;
  }
  throw InvalidArgument("mode: unknown mode '" + std::string(token) +
                        "' (expected closed_form, exact, compare)");
}

FormFamily parse_forms(std::string_view token) {
  if (token == "published") return FormFamily::kPublished;
  if (token == "derived") return FormFamily::kDerived;
  throw InvalidArgument("forms: unknown family '" + std::string(token) +
                        "' (expected published, derived)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw InvalidArgument("cannot parse number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double parse_angle(std::string_view token) {
  const std::string_view whole = token;
  token = trim(token);
  if (token.empty()) throw InvalidArgument("empty numeric token");
  const auto pi_pos = token.find("pi");
  if (pi_pos == std::string_view::npos) {
    const auto slash = token.find('/');
    if (slash == std::string_view::npos) return parse_real(token, whole);
    return parse_real(token.substr(0, slash), whole) / parse_real(token.substr(slash + 1), whole);
  }
  std::string_view coef = token.substr(0, pi_pos);
  std::string_view rest = token.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  double k = 1.0;
  if (coef == "-") {
    k = -1.0;
  } else if (coef == "+") {
    k = 1.0;
  } else if (!coef.empty()) {
    k = parse_real(coef, whole);
  }
  double value = k * std::numbers::pi;
  if (!rest.empty()) {
    if (rest.front() != '/') throw InvalidArgument("cannot parse angle '" + std::string(whole) + "'");
    const double m = parse_real(rest.substr(1), whole);
    if (m == 0.0) throw InvalidArgument("division by zero in angle '" + std::string(whole) + "'");
    value /= m;
  }
  return value;
}

std::vector<double> parse_grid(std::string_view list) {
  std::vector<double> out;
  while (true) {
    const auto comma = list.find(',');
    out.push_back(parse_angle(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

double TimeGrid::at(int i) const {
  if (i == steps - 1) return end;
  return start + (end - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepSpec::validate() const {
  auto finite_grid = [](const std::vector<double>& g, const char* key, bool nonnegative) {
    if (g.empty()) throw InvalidArgument(std::string(key) + ": grid must not be empty");
    for (double v : g) {
      if (!std::isfinite(v)) throw InvalidArgument(std::string(key) + ": non-finite value");
      if (nonnegative && v < 0.0) {
        throw InvalidArgument(std::string(key) + ": values must be nonnegative");
      }
    }
  };
  finite_grid(alpha, "alpha", true);
  finite_grid(theta, "theta", false);
  finite_grid(lambda, "lambda", true);
  if (t.steps < 2) throw InvalidArgument("t-steps: must be at least 2");
  if (!std::isfinite(t.start)) throw InvalidArgument("t-start: non-finite value");
  if (!std::isfinite(t.end)) throw InvalidArgument("t-end: non-finite value");
  if (std::max(std::abs(t.start), std::abs(t.end)) > kDefaultTimeHorizon) {
    throw InvalidArgument("t-end: exceeds time horizon");
  }
  if (dim && *dim < 2) throw InvalidArgument("dim: must be at least 2 or 'auto'");
  if (witnesses.empty()) throw InvalidArgument("witness: at least one witness required");
  if (mode == SweepMode::kCompare) {
    for (double l : lambda) {
      if (l <= 0.0) throw InvalidArgument("lambda: compare mode requires lambda > 0");
    }
  }
}

void SweepSpec::check_truncation() const {
  for (double a : alpha) require_truncation_safe(a, dim_for(a));
}

int SweepSpec::dim_for(double alpha_mag) const {
  return dim ? *dim : ModelParams::auto_dim(alpha_mag);
}

std::size_t SweepSpec::expected_rows() const {
  return alpha.size() * theta.size() * lambda.size() * static_cast<std::size_t>(t.steps) *
         witnesses.size();
}

namespace {

struct Group {
  double alpha_mag;
  double theta;
  double lambda;
};

std::vector<Group> groups_of(const SweepSpec& spec) {
  std::vector<Group> out;
  for (double a : spec.alpha)
    for (double th : spec.theta)
      for (double l : spec.lambda) out.push_back({a, th, l});
  return out;
}

std::optional<double> closed_form_value(FormFamily family, Witness w, const ClosedFormInputs& in) {
  switch (w) {
    case Witness::kF:
    case Witness::kHillery: return squeezing_witness_f(family, in);
    case Witness::kD1: return hoa_witness_d(family, 1, in);
    case Witness::kD2: return hoa_witness_d(family, 2, in);
    case Witness::kD3: return hoa_witness_d(family, 3, in);
    case Witness::kN: return mean_photon_number(family, in);
    case Witness::kQuadrature:
      if (family == FormFamily::kDerived) return derived::quadrature_witness(in);
      return std::nullopt;
  }
  return std::nullopt;
}

double moment_value(Witness w, const MomentSet& m) {
  switch (w) {
    case Witness::kF:
    case Witness::kHillery: return hillery_squeezing(m).value;
    case Witness::kD1: return hoa_d_from_moments(m.factorial_moments(), 1).value;
    case Witness::kD2: return hoa_d_from_moments(m.factorial_moments(), 2).value;
    case Witness::kD3: return hoa_d_from_moments(m.factorial_moments(), 3).value;
    case Witness::kN: return m.get(Moment::kN).real();
    case Witness::kQuadrature: return quadrature_squeezing(m).value;
  }
  return 0.0;
}

// N is a mean, not a witness; classify its deviation from |alpha|^2.
double classification_value(Witness w, double value, double alpha_mag) {
  return w == Witness::kN ? value - alpha_mag * alpha_mag : value;
}

std::vector<SweepRow> run_group(const SweepSpec& spec, const Group& g) {
  std::optional<ExactEvolver> evolver;
  if (spec.mode != SweepMode::kClosedForm) {
    evolver.emplace(ModelParams{g.alpha_mag, g.theta, g.lambda, spec.dim_for(g.alpha_mag)});
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.t.steps) * spec.witnesses.size());
  for (int i = 0; i < spec.t.steps; ++i) {
    const double t = spec.t.at(i);
    const ClosedFormInputs in{g.alpha_mag, g.theta, g.lambda, t};
    std::optional<MomentSet> moments;
    if (evolver) moments = interaction_moments(evolver->evolve(t));
    for (Witness w : spec.witnesses) {
      SweepRow row{g.alpha_mag, g.theta, g.lambda, t, w, {}, {}, {}, {}};
      if (spec.mode != SweepMode::kExact) row.value_cf = closed_form_value(spec.forms, w, in);
      if (moments) row.value_exact = moment_value(w, *moments);
      if (spec.mode == SweepMode::kCompare && row.value_cf && row.value_exact) {
        row.abs_error = std::abs(*row.value_cf - *row.value_exact);
      }
      const std::optional<double> primary = row.value_exact ? row.value_exact : row.value_cf;
      if (primary) row.classification = classify(classification_value(w, *primary, g.alpha_mag));
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<WitnessSummary> summarize(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::vector<WitnessSummary> out;
  const std::size_t per_group = static_cast<std::size_t>(spec.t.steps) * spec.witnesses.size();
  for (std::size_t base = 0; base < rows.size(); base += per_group) {
    for (std::size_t wi = 0; wi < spec.witnesses.size(); ++wi) {
      const SweepRow& first = rows[base + wi];
      WitnessSummary s{first.alpha_mag, first.theta, first.lambda, first.witness, 0, 0, 0, {}};
      bool seen = false;
      int last_sign = 0;
      for (int i = 0; i < spec.t.steps; ++i) {
        const SweepRow& r = rows[base + static_cast<std::size_t>(i) * spec.witnesses.size() + wi];
        const std::optional<double> v = r.value_exact ? r.value_exact : r.value_cf;
        if (r.abs_error) s.max_abs_error = std::max(s.max_abs_error.value_or(0.0), *r.abs_error);
        if (!v) continue;
        if (!seen) s.min = s.max = *v;
        s.min = std::min(s.min, *v);
        s.max = std::max(s.max, *v);
        seen = true;
        const double c = classification_value(r.witness, *v, r.alpha_mag);
        if (std::abs(c) > kBoundaryTolerance) {
          const int sign = c > 0 ? 1 : -1;
          if (last_sign != 0 && sign != last_sign) ++s.zero_crossings;
          last_sign = sign;
        }
      }
      if (seen) out.push_back(s);
    }
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  spec.check_truncation();
  const std::vector<Group> groups = groups_of(spec);
  std::vector<std::vector<SweepRow>> per_group(groups.size());

  // Groups are independent; output order is fixed by group index.
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(groups.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t k = next++; k < groups.size(); k = next++) {
        per_group[k] = run_group(spec, groups[k]);
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult result;
  result.rows.reserve(spec.expected_rows());
  for (auto& g : per_group) {
    result.rows.insert(result.rows.end(), g.begin(), g.end());
  }
  result.summary = summarize(spec, result.rows);
  if (spec.mode == SweepMode::kCompare) result.scaling = scaling_from_rows(spec, result.rows);
  return result;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("loglog_slope: need at least two paired points");
  }
  double mx = 0, my = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log10(x[i]);
    my += std::log10(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log10(x[i]) - mx;
    sxy += dx * (std::log10(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw InvalidArgument("loglog_slope: x values must be distinct");
  return sxy / sxx;
}

bool ScalingReport::passed() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const WitnessVerdict& v) { return v.status == ScalingStatus::kFail; });
}

ScalingReport scaling_from_rows(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  // (alpha, theta, witness) -> lambda -> max |error| over t
  std::map<std::tuple<double, double, int>, std::map<double, double>> table;
  for (const SweepRow& r : rows) {
    if (!r.abs_error) continue;
    auto& slot = table[{r.alpha_mag, r.theta, static_cast<int>(r.witness)}][r.lambda];
    slot = std::max(slot, *r.abs_error);
  }
  ScalingReport report;
  for (double a : spec.alpha) {
    for (double th : spec.theta) {
      for (Witness w : spec.witnesses) {
        auto it = table.find({a, th, static_cast<int>(w)});
        if (it == table.end()) continue;
        ScalingEntry e{a, th, w, {}, {}, {}, false, false};
        std::vector<double> fit_x, fit_y;
        for (const auto& [lam, err] : it->second) {
          e.lambdas.push_back(lam);
          e.max_errors.push_back(err);
          if (err >= kErrorFloor) {
            fit_x.push_back(lam);
            fit_y.push_back(err);
          }
        }
        if (fit_x.size() < 2) {
          e.floor_limited = true;
          e.passed = true;
        } else {
          e.slope = loglog_slope(fit_x, fit_y);
          e.passed = *e.slope >= kScalingSlopeThreshold;
        }
        report.entries.push_back(std::move(e));
      }
    }
  }
  for (Witness w : spec.witnesses) {
    WitnessVerdict v{w, ScalingStatus::kFloorLimited, {}};
    bool any = false;
    for (const ScalingEntry& e : report.entries) {
      if (e.witness != w) continue;
      any = true;
      if (e.slope) {
        v.worst_slope = v.worst_slope ? std::min(*v.worst_slope, *e.slope) : *e.slope;
      }
    }
    if (!any) continue;
    if (v.worst_slope) {
      v.status = *v.worst_slope >= kScalingSlopeThreshold ? ScalingStatus::kPass : ScalingStatus::kFail;
    }
    report.verdicts.push_back(v);
  }
  return report;
}

ScalingReport compare_report(const SweepSpec& spec) {
  if (spec.mode != SweepMode::kCompare) throw InvalidArgument("mode: compare_report requires mode=compare");
  spec.validate();
  std::set<double> distinct(spec.lambda.begin(), spec.lambda.end());
  if (distinct.size() < 2) throw InvalidArgument("lambda: scaling fit needs at least two distinct values");
  if (*distinct.rbegin() < 10.0 * *distinct.begin()) {
    throw InvalidArgument("lambda: scaling fit needs the grid to span at least one decade");
  }
  return *run_sweep(spec).scaling;
}

ConvergenceReport convergence_check(const SweepSpec& spec, int samples_per_group) {
  spec.validate();
  if (spec.mode == SweepMode::kClosedForm) {
    throw InvalidArgument("mode: convergence check requires mode=exact or compare");
  }
  spec.check_truncation();
  const int samples = std::clamp(samples_per_group, 1, spec.t.steps);
  ConvergenceReport report;
  for (const Group& g : groups_of(spec)) {
    const int dim = spec.dim_for(g.alpha_mag);
    const ExactEvolver base(ModelParams{g.alpha_mag, g.theta, g.lambda, dim});
    const ExactEvolver doubled(ModelParams{g.alpha_mag, g.theta, g.lambda, 2 * dim});
    for (int s = 0; s < samples; ++s) {
      const int idx = samples == 1 ? 0 : static_cast<int>(
          static_cast<long long>(s) * (spec.t.steps - 1) / (samples - 1));
      const double t = spec.t.at(idx);
      const MomentSet m1 = interaction_moments(base.evolve(t));
      const MomentSet m2 = interaction_moments(doubled.evolve(t));
      for (Moment m : kAllMoments) {
        const double diff = std::abs(m1.get(m) - m2.get(m));
        const double scale = std::max(std::abs(m2.get(m)), kErrorFloor);
        report.max_relative_drift = std::max(report.max_relative_drift, diff / scale);
      }
      ++report.points_checked;
    }
  }
  report.passed = report.max_relative_drift < kConvergenceTolerance;
  return report;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw InvalidArgument("format_number: conversion failed");
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  auto opt = [&](const std::optional<double>& v) {
    if (v) out << format_number(*v);
  };
  for (const SweepRow& r : rows) {
    out << format_number(r.alpha_mag) << ',' << format_number(r.theta) << ','
        << format_number(r.lambda) << ',' << format_number(r.t) << ',' << to_string(r.witness)
        << ',';
    opt(r.value_cf);
    out << ',';
    opt(r.value_exact);
    out << ',';
    opt(r.abs_error);
    out << ',';
    if (r.classification) out << to_string(*r.classification);
    out << '\n';
  }
}

void write_summary(std::ostream& out, const SweepSpec& spec, const SweepResult& result) {
  out << "mode=" << to_string(spec.mode) << " forms=" << to_string(spec.forms)
      << " rows=" << result.rows.size() << '\n';
  for (const WitnessSummary& s : result.summary) {
    out << "alpha=" << format_number(s.alpha_mag) << " theta=" << format_number(s.theta)
        << " lambda=" << format_number(s.lambda) << " witness=" << to_string(s.witness)
        << " min=" << format_number(s.min) << " max=" << format_number(s.max)
        << " zero_crossings=" << s.zero_crossings;
    if (s.max_abs_error) out << " max_abs_error=" << format_number(*s.max_abs_error);
    out << '\n';
  }
  if (result.scaling) {
    for (const ScalingEntry& e : result.scaling->entries) {
      out << "scaling alpha=" << format_number(e.alpha_mag) << " theta=" << format_number(e.theta)
          << " witness=" << to_string(e.witness) << " slope=";
      if (e.slope) {
        out << format_number(*e.slope);
      } else {
        out << "floor-limited";
      }
      out << (e.passed ? " ok" : " FAIL") << '\n';
    }
    for (const WitnessVerdict& v : result.scaling->verdicts) {
      out << "verdict witness=" << to_string(v.witness) << " status=" << to_string(v.status);
      if (v.worst_slope) out << " worst_slope=" << format_number(*v.worst_slope);
      out << '\n';
    }
  }
}

}  // namespace quartic
