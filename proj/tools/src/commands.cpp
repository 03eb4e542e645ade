#include "th_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "th_cli/json_io.hpp"
#include "th_cli/sweep.hpp"

namespace th::cli {
namespace {

using jsonio::json;

struct Context {
  Int max_order = kDefaultMaxGroupOrder;
  Int max_enumeration = kDefaultMaxEnumeration;
};

Context context_from_env() {
  Context ctx;
  if (const char* env = std::getenv("TH_MAX_ORDER")) {
    try {
      ctx.max_order = std::stoll(env);
    } catch (const std::exception&) {
      throw error("bad_env", "TH_MAX_ORDER must be an integer");
    }
    if (ctx.max_order < 1) {
      throw error("bad_env", "TH_MAX_ORDER must be >= 1");
    }
  }
  return ctx;
}

/// JSON argument: inline text, @file, or - for standard input.
json parse_json_arg(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw error("bad_file", "cannot read " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    text = arg;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw error("bad_json", e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(const error& e) {
  emit(json{{"error", {{"code", e.code()}, {"message", e.what()}}}});
  return 2;
}

struct Inputs {
  std::string group;
  std::string subgroup;
  std::string measure;
  std::string points;
  std::string s_points;
  std::string r_points;
  std::string f_values;
  std::string signal;
  std::string samples;
  std::string spectrum;
  std::string config;
  std::string out_path;
  std::string method = "both";
  std::string format = "json";
  double alpha = 2.0;
  double tol = kDefaultRankTolerance;
  bool partial = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

GroupSpec need_group(const Inputs& in, const Context& ctx) {
  if (in.group.empty()) throw error("bad_args", "--group is required");
  return jsonio::group_from_json(parse_json_arg(in.group), ctx.max_order);
}

Subgroup need_subgroup(const Inputs& in, const GroupSpec& spec) {
  if (in.subgroup.empty()) throw error("bad_args", "--subgroup is required");
  return jsonio::subgroup_from_json(parse_json_arg(in.subgroup), spec);
}

DiscreteMeasure need_measure(const Inputs& in, const GroupSpec& spec) {
  if (in.measure.empty()) throw error("bad_args", "--measure is required");
  return jsonio::measure_from_json(parse_json_arg(in.measure), spec);
}

PointSet need_points(const std::string& arg, const char* flag,
                     const GroupSpec& spec) {
  if (arg.empty()) {
    throw error("bad_args", std::string(flag) + " is required");
  }
  return jsonio::pointset_from_json(parse_json_arg(arg), spec);
}

int cmd_group(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  emit(json{{"group", jsonio::to_json(spec)}, {"order", spec.order()}});
  return 0;
}

int cmd_annihilator(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const Subgroup h = need_subgroup(in, spec);
  emit(jsonio::to_json(annihilator(h)));
  return 0;
}

int cmd_quotient(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const Subgroup lam = need_subgroup(in, spec);
  const QuotientMap q = quotient(lam);
  emit(json{{"index", q.index()},
            {"lambda", jsonio::to_json(lam)},
            {"quotient_spec", jsonio::to_json(q.quotient_spec())}});
  return 0;
}

int cmd_transversal_check(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const QuotientMap q = quotient(need_subgroup(in, spec));
  const PointSet pts = need_points(in.points, "--points", spec);
  const bool ok = in.partial ? is_partial_transversal(q, pts)
                             : is_transversal(q, pts);
  emit(json{{"partial", in.partial}, {"result", ok}});
  return ok ? 0 : 1;
}

int cmd_transversal_canonical(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const QuotientMap q = quotient(need_subgroup(in, spec));
  emit(jsonio::to_json(canonical_transversal(q, ctx.max_enumeration)));
  return 0;
}

int cmd_transversal_merge(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const QuotientMap q = quotient(need_subgroup(in, spec));
  const PointSet s = need_points(in.s_points, "--s", spec);
  const PointSet r = need_points(in.r_points, "--r", spec);
  emit(jsonio::to_json(merge_transversal(q, s, r)));
  return 0;
}

int cmd_density_check(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const Subgroup h = need_subgroup(in, spec);
  const DiscreteMeasure m = need_measure(in, spec);
  if (in.method == "rank") {
    const auto v = is_dense_rank(m, h, in.alpha, in.tol, ctx.max_enumeration);
    emit(jsonio::to_json(v));
    return v.dense ? 0 : 1;
  }
  const QuotientMap q = quotient(annihilator(h));
  if (in.method == "coset") {
    const auto v = is_dense_coset(m, q);
    emit(jsonio::to_json(v));
    return v.dense ? 0 : 1;
  }
  if (in.method != "both") {
    throw error("bad_args", "--method is rank, coset or both");
  }
  const auto rank_v = is_dense_rank(m, h, in.alpha, in.tol, ctx.max_enumeration);
  const auto coset_v = is_dense_coset(m, q);
  const bool agree = rank_v.dense == coset_v.dense;
  emit(json{{"agree", agree},
            {"coset", jsonio::to_json(coset_v)},
            {"rank", jsonio::to_json(rank_v)}});
  return (agree && rank_v.dense) ? 0 : 1;
}

int cmd_density_bestapprox(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const Subgroup h = need_subgroup(in, spec);
  const DiscreteMeasure m = need_measure(in, spec);
  if (in.f_values.empty()) throw error("bad_args", "--f is required");
  const json fj = parse_json_arg(in.f_values);
  if (!fj.is_array()) throw error("bad_json", "--f must be an array");
  std::vector<std::complex<double>> f;
  for (const auto& v : fj) f.push_back(jsonio::complex_from_json(v));

  ApproxOptions opts;
  opts.max_enumeration = ctx.max_enumeration;
  if (in.seed_set) opts.seed = in.seed;
  const ApproxResult r = best_approximation_error(m, h, f, in.alpha, opts);
  emit(json{{"alpha", in.alpha},
            {"converged", r.converged},
            {"error", r.error},
            {"heuristic", r.heuristic},
            {"iterations", r.iterations}});
  return 0;
}

int cmd_density_extract(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const Subgroup h = need_subgroup(in, spec);
  const DiscreteMeasure m = need_measure(in, spec);
  const QuotientMap q = quotient(annihilator(h));
  const ExtractResult r = extract_concentration_set(m, q);
  emit(jsonio::to_json(r));
  return r.success ? 0 : 1;
}

int cmd_measure_push(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const QuotientMap q = quotient(need_subgroup(in, spec));
  emit(jsonio::to_json(pushforward(need_measure(in, spec), q)));
  return 0;
}

int cmd_measure_fibers(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const QuotientMap q = quotient(need_subgroup(in, spec));
  json out = json::array();
  for (const auto& [rep, fiber] : fibers(need_measure(in, spec), q)) {
    out.push_back(json{{"coset_rep", jsonio::to_json(rep)},
                       {"measure", jsonio::to_json(fiber)}});
  }
  emit(json{{"fibers", std::move(out)}});
  return 0;
}

int cmd_measure_concentrated(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const QuotientMap q = quotient(need_subgroup(in, spec));
  const auto r = is_concentrated_on_transversal(need_measure(in, spec), q);
  if (r.concentrated) {
    emit(json{{"concentrated", true}, {"witness", jsonio::to_json(r.witness)}});
    return 0;
  }
  emit(json{{"concentrated", false},
            {"violating_rep", jsonio::to_json(*r.violating_rep)}});
  return 1;
}

int cmd_sample(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const Subgroup h = need_subgroup(in, spec);
  if (in.signal.empty()) throw error("bad_args", "--signal is required");
  const Signal x = jsonio::signal_from_json(parse_json_arg(in.signal),
                                            ctx.max_order);
  if (!(x.group == spec)) {
    throw error("parent_mismatch", "signal group differs from --group");
  }
  const auto samples = sample_on_subgroup(x, h, ctx.max_enumeration);
  emit(json{{"samples", jsonio::samples_to_json(samples, h)}});
  return 0;
}

int cmd_reconstruct(const Inputs& in, const Context& ctx) {
  const GroupSpec spec = need_group(in, ctx);
  const Subgroup h = need_subgroup(in, spec);
  if (in.samples.empty()) throw error("bad_args", "--samples is required");
  const auto samples =
      jsonio::samples_from_json(parse_json_arg(in.samples), h);
  const PointSet d = need_points(in.spectrum, "--spectrum", spec);
  emit(jsonio::to_json(reconstruct(samples, h, d, ctx.max_enumeration)));
  return 0;
}

int cmd_sweep_equivalence(const Inputs& in) {
  if (in.config.empty()) throw error("bad_args", "--config is required");
  auto cfg = sweep::SweepConfig::from_json(parse_json_arg(in.config));
  if (in.seed_set) cfg.seed = in.seed;
  if (!in.out_path.empty()) cfg.output = in.out_path;
  const auto outcome = sweep::run_equivalence_sweep(cfg);
  const std::string text = outcome.report.dump(2) + "\n";
  if (cfg.output) {
    std::ofstream out(*cfg.output);
    if (!out) throw error("bad_file", "cannot write " + *cfg.output);
    out << text;
  }
  std::cout << text;
  return outcome.disagreements == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
  Inputs in;
  std::function<int()> action;

  CLI::App app{"trigonometric approximation and sampling on finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--group", in.group, "group JSON (inline, @file or -)");
    cmd->add_option("--subgroup", in.subgroup, "subgroup JSON");
    cmd->add_option("--format", in.format, "output format (json)");
  };

  auto* group_cmd = app.add_subcommand("group", "validate and describe a group");
  add_common(group_cmd);

  auto* ann = app.add_subcommand("annihilator", "annihilator of a subgroup");
  add_common(ann);

  auto* quo = app.add_subcommand("quotient", "quotient by a subgroup");
  add_common(quo);

  auto* trans = app.add_subcommand("transversal", "transversal machinery");
  auto* tcheck = trans->add_subcommand("check", "test a point set");
  add_common(tcheck);
  tcheck->add_option("--points", in.points, "point set JSON");
  tcheck->add_flag("--partial", in.partial, "test the at-most-once condition");
  auto* tcanon = trans->add_subcommand("canonical", "canonical transversal");
  add_common(tcanon);
  auto* tmerge = trans->add_subcommand("merge", "extend s to a transversal via r");
  add_common(tmerge);
  tmerge->add_option("--s", in.s_points, "partial transversal JSON");
  tmerge->add_option("--r", in.r_points, "transversal JSON");

  auto* dens = app.add_subcommand("density", "density of H-polynomials in L^alpha");
  auto* dcheck = dens->add_subcommand("check", "decide density");
  add_common(dcheck);
  dcheck->add_option("--measure", in.measure, "measure JSON");
  dcheck->add_option("--method", in.method, "rank|coset|both");
  dcheck->add_option("--alpha", in.alpha, "exponent (verdict is alpha-free)");
  dcheck->add_option("--tol", in.tol, "rank tolerance");
  auto* dbest = dens->add_subcommand("bestapprox", "best approximation error");
  add_common(dbest);
  dbest->add_option("--measure", in.measure, "measure JSON");
  dbest->add_option("--f", in.f_values, "target values on the support");
  dbest->add_option("--alpha", in.alpha, "exponent");
  dbest->add_option("--seed", in.seed, "multistart seed")
      ->each([&](const std::string&) { in.seed_set = true; });
  auto* dext = dens->add_subcommand("extract", "extract the concentration set");
  add_common(dext);
  dext->add_option("--measure", in.measure, "measure JSON");

  auto* meas = app.add_subcommand("measure", "measure operations");
  auto* mpush = meas->add_subcommand("push", "pushforward to the quotient");
  add_common(mpush);
  mpush->add_option("--measure", in.measure, "measure JSON");
  auto* mfib = meas->add_subcommand("fibers", "coset fiber decomposition");
  add_common(mfib);
  mfib->add_option("--measure", in.measure, "measure JSON");
  auto* mcon = meas->add_subcommand("concentrated", "concentration test");
  add_common(mcon);
  mcon->add_option("--measure", in.measure, "measure JSON");

  auto* samp = app.add_subcommand("sample", "restrict a signal to a subgroup");
  add_common(samp);
  samp->add_option("--signal", in.signal, "signal JSON");

  auto* rec = app.add_subcommand("reconstruct", "rebuild a signal from samples");
  add_common(rec);
  rec->add_option("--samples", in.samples, "sample table JSON");
  rec->add_option("--spectrum", in.spectrum, "spectrum support JSON");

  auto* sw = app.add_subcommand("sweep", "acceptance-style sweep drivers");
  auto* sweq = sw->add_subcommand("equivalence", "rank vs coset oracle sweep");
  sweq->add_option("--config", in.config, "sweep config JSON");
  sweq->add_option("--seed", in.seed, "override the config seed")
      ->each([&](const std::string&) { in.seed_set = true; });
  sweq->add_option("--out", in.out_path, "also write the report to a file");
  sweq->add_option("--format", in.format, "output format (json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(error("bad_args", e.what()));
  }

  try {
    if (in.format != "json") {
      throw error("bad_args", "only --format json is supported");
    }
    const Context ctx = context_from_env();
    if (group_cmd->parsed()) return cmd_group(in, ctx);
    if (ann->parsed()) return cmd_annihilator(in, ctx);
    if (quo->parsed()) return cmd_quotient(in, ctx);
    if (trans->parsed()) {
      if (tcheck->parsed()) return cmd_transversal_check(in, ctx);
      if (tcanon->parsed()) return cmd_transversal_canonical(in, ctx);
      if (tmerge->parsed()) return cmd_transversal_merge(in, ctx);
      throw error("bad_args", "transversal needs check, canonical or merge");
    }
    if (dens->parsed()) {
      if (dcheck->parsed()) return cmd_density_check(in, ctx);
      if (dbest->parsed()) return cmd_density_bestapprox(in, ctx);
      if (dext->parsed()) return cmd_density_extract(in, ctx);
      throw error("bad_args", "density needs check, bestapprox or extract");
    }
    if (meas->parsed()) {
      if (mpush->parsed()) return cmd_measure_push(in, ctx);
      if (mfib->parsed()) return cmd_measure_fibers(in, ctx);
      if (mcon->parsed()) return cmd_measure_concentrated(in, ctx);
      throw error("bad_args", "measure needs push, fibers or concentrated");
    }
    if (samp->parsed()) return cmd_sample(in, ctx);
    if (rec->parsed()) return cmd_reconstruct(in, ctx);
    if (sw->parsed()) {
      if (sweq->parsed()) return cmd_sweep_equivalence(in);
      throw error("bad_args", "sweep needs equivalence");
    }
    throw error("bad_args", "unknown subcommand");
  } catch (const error& e) {
    return emit_error(e);
  } catch (const std::exception& e) {
    return emit_error(error("internal", e.what()));
  }
}

}  // namespace th::cli
