#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "chroma/gadgets.hpp"
#include "chroma/io.hpp"
#include "chroma/lmcsc.hpp"
#include "chroma/mcsc.hpp"
#include "chroma/random.hpp"
#include "chroma/smcsc.hpp"
#include "chroma/svg.hpp"

namespace chroma::cli {

namespace {

using io::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

Tolerance tolerance_from_env() {
  const char* raw = std::getenv("CHROMA_EPS");
  if (raw == nullptr || *raw == '\0') return {};
  char* end = nullptr;
  const double eps = std::strtod(raw, &end);
  if (end == raw || *end != '\0') throw UsageError(std::string("CHROMA_EPS is not a number: ") + raw);
  try {
    return Tolerance::with_eps(eps);
  } catch (const Error& e) {
    throw UsageError(std::string("CHROMA_EPS: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text_file(path, text);
  }
}

// Disks reordered by (x, y, color). Returns the new position of each old index.
std::vector<std::size_t> canonicalize(Instance& inst) {
  const auto order = canonical_order(inst.disks);
  std::vector<ColoredDisk> sorted;
  std::vector<std::size_t> new_index(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.push_back(inst.disks[order[i]]);
    new_index[order[i]] = i;
  }
  inst.disks = std::move(sorted);
  return new_index;
}

json point_json(Point p) { return json::array({io::round_sig(p.x), io::round_sig(p.y)}); }

struct GenOptions {
  std::string output;
  // random
  int n = 0;
  int k = 0;
  double width = 8.0;
  std::uint64_t seed = 0;
  // tight
  double epsilon = 0.05;
  int far_blue = 0;
  // stack
  double cx = 0.0;
  double cy = 0.0;
  std::string pattern = "BRB";
  double axis_x = 0.0;
  double axis_y = 1.0;
  std::string realization;
  // clause
  double gx = 0.0;
  double gy = 0.0;
  double offset = kDefaultClauseOffset;
};

struct SolveOptions {
  std::string input;
  std::string output;
  std::string svg;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double delta = kSeparation;
};

std::string instance_text(Instance inst, json annotations = {}) {
  return io::dump(io::to_json(io::InstanceFile{std::move(inst), std::move(annotations)}));
}

int gen_random(const GenOptions& o, std::ostream& out) {
  if (o.k < 1 || o.n < o.k) throw UsageError("gen random needs 1 <= k <= n");
  if (!(o.width > 0.0)) throw UsageError("gen random needs a positive --width");
  std::mt19937_64 rng(mix64(o.seed));
  Instance inst;
  inst.k = o.k;
  for (int i = 0; i < o.n; ++i) {
    const Point c{o.width * uniform01(rng), o.width * uniform01(rng)};
    const int color = i < o.k ? i : static_cast<int>(uniform01(rng) * o.k) % o.k;
    inst.disks.push_back({c, color});
  }
  canonicalize(inst);
  emit(instance_text(std::move(inst)), o.output, out);
  return kOk;
}

int gen_tight(const GenOptions& o, std::ostream& out) {
  if (!(o.epsilon > 0.0) || o.far_blue < 0) throw UsageError("gen tight needs --epsilon > 0, --far-blue >= 0");
  Instance inst = make_tightness_instance(o.epsilon, o.far_blue);
  canonicalize(inst);
  json notes{{"gadget", "tightness"},
             {"epsilon", io::round_sig(o.epsilon)},
             {"pitch", io::round_sig(tightness_pitch(o.epsilon))},
             {"far_blue", o.far_blue}};
  emit(instance_text(std::move(inst), std::move(notes)), o.output, out);
  return kOk;
}

int gen_stack(const GenOptions& o, std::ostream& out) {
  if (o.pattern != "BRB" && o.pattern != "RBR") throw UsageError("--pattern must be BRB or RBR");
  const StackGadget s = make_stack({o.cx, o.cy}, o.pattern == "BRB" ? StackPattern::BRB : StackPattern::RBR,
                                   {o.axis_x, o.axis_y});
  if (!o.realization.empty()) {
    if (o.realization != "L" && o.realization != "R") throw UsageError("--realization must be L or R");
    const StackExtremes ex = stack_extreme_realizations(s);
    const Realization& r = o.realization == "L" ? ex.left : ex.right;
    emit(io::dump(io::points_to_json(as_point_set(r, 2))), o.output, out);
    return kOk;
  }
  Instance inst = s.instance();
  const auto at = canonicalize(inst);
  json notes{{"gadget", "stack"},
             {"pattern", o.pattern},
             {"axis", point_json(s.axis)},
             {"parts", {{"plus_axis", at[0]}, {"middle", at[1]}, {"minus_axis", at[2]}}}};
  emit(instance_text(std::move(inst), std::move(notes)), o.output, out);
  return kOk;
}

int gen_clause(const GenOptions& o, std::ostream& out) {
  if (!(o.offset >= 0.0)) throw UsageError("--offset must be non-negative");
  const ClauseGadget cg = make_clause_gadget({o.gx, o.gy}, o.offset);
  Instance inst = cg.instance();
  const auto at = canonicalize(inst);
  json t = json::array();
  json f = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    t.push_back(point_json(cg.t_anchor[i]));
    f.push_back(point_json(cg.f_anchor[i]));
  }
  json notes{{"gadget", "clause"},
             {"offset", io::round_sig(o.offset)},
             {"parts", {{"red", json::array({at[0], at[1], at[2]})}, {"blue", at[3]}}},
             {"t_anchors", std::move(t)},
             {"f_anchors", std::move(f)}};
  emit(instance_text(std::move(inst), std::move(notes)), o.output, out);
  return kOk;
}

void write_svg(const SolveOptions& o, std::span<const ColoredDisk> disks,
               std::span<const ColoredPoint> points, const Circle& c) {
  if (!o.svg.empty()) io::write_text_file(o.svg, svg::render(disks, points, c));
}

Instance load_instance(const std::string& path) {
  Instance inst = io::parse_instance(io::read_json_file(path)).instance;
  canonicalize(inst);
  return inst;
}

int solve_mcsc(const SolveOptions& o, Tolerance tol, std::ostream& out) {
  const PrecisePointSet ps = io::parse_points(io::read_json_file(o.input));
  const McscResult r = mcsc_exact(ps, tol, Workers{o.workers});
  io::SolutionFile s;
  s.command = "solve mcsc";
  s.radius = r.circle.radius;
  s.center = r.circle.center;
  s.realization = r.per_color_cover;
  emit(io::dump(io::to_json(s)), o.output, out);
  write_svg(o, {}, ps.points, r.circle);
  return kOk;
}

int solve_smcsc(const SolveOptions& o, Tolerance tol, std::ostream& out) {
  const Instance inst = load_instance(o.input);
  const SmcscResult r = smcsc(inst, tol, Workers{o.workers});
  io::SolutionFile s;
  s.command = "solve smcsc";
  s.radius = r.circle.radius;
  s.center = r.circle.center;
  s.realization = r.realization;
  s.centers_circle = r.centers_circle;
  emit(io::dump(io::to_json(s)), o.output, out);
  write_svg(o, inst.disks, r.realization, r.circle);
  return kOk;
}

int solve_lmcsc(const SolveOptions& o, Tolerance tol, std::ostream& out) {
  const Instance inst = load_instance(o.input);
  const LmcscResult r = lmcsc_approx(inst, tol, Workers{o.workers});
  io::SolutionFile s;
  s.command = "solve lmcsc";
  s.radius = r.circle.radius;
  s.center = r.circle.center;
  s.realization = r.realization;
  s.certificate = r.certificate;
  if (o.samples > 0) {
    const SamplingResult probe = lmcsc_sampling_oracle(inst, o.samples, o.seed, tol, Workers{o.workers});
    s.oracle = io::OracleSummary{o.samples, o.seed, probe.radius};
  }
  emit(io::dump(io::to_json(s)), o.output, out);
  write_svg(o, inst.disks, r.realization, r.circle);
  return kOk;
}

int oracle_lmcsc(const SolveOptions& o, Tolerance tol, std::ostream& out) {
  if (o.samples == 0) throw UsageError("--samples must be at least 1");
  const Instance inst = load_instance(o.input);
  const SamplingResult probe = lmcsc_sampling_oracle(inst, o.samples, o.seed, tol, Workers{o.workers});
  io::SolutionFile s;
  s.command = "oracle lmcsc";
  s.radius = probe.radius;
  s.center = probe.mcsc.circle.center;
  s.realization = probe.realization;
  s.oracle = io::OracleSummary{o.samples, o.seed, probe.radius};
  emit(io::dump(io::to_json(s)), o.output, out);
  write_svg(o, inst.disks, probe.realization, probe.mcsc.circle);
  return kOk;
}

int check_pdelta(const SolveOptions& o, Tolerance tol, std::ostream& out) {
  if (!(o.delta > 0.0)) throw UsageError("--delta must be positive");
  const json j = io::read_json_file(o.input);
  std::vector<ColoredPoint> points;
  if (j.is_object() && j.contains("realization")) {
    points = io::parse_solution(j).realization;
  } else {
    points = io::parse_points(j).points;
  }
  const PDeltaReport report = pdelta_check(points, o.delta, tol);
  json pairs = json::array();
  for (const auto& [a, b] : report.violating_pairs) pairs.push_back(json::array({a, b}));
  json doc{{"command", "check pdelta"},
           {"delta", io::round_sig(o.delta)},
           {"min_cross_color_distance", std::isfinite(report.min_cross_color_distance)
                                            ? json(io::round_sig(report.min_cross_color_distance))
                                            : json(nullptr)},
           {"pass", report.pass},
           {"violating_pairs", std::move(pairs)}};
  emit(io::dump(doc), o.output, out);
  return report.pass ? kOk : kInvalid;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum color spanning circles of colored unit disks", "chroma"};
  app.require_subcommand(1);

  GenOptions g;
  SolveOptions s;
  std::function<int(Tolerance)> action;

  auto* gen = app.add_subcommand("gen", "Generate instance files");
  gen->require_subcommand(1);
  auto* gen_r = gen->add_subcommand("random", "Uniform random disk centers");
  gen_r->add_option("--n", g.n, "Number of disks")->required();
  gen_r->add_option("--k", g.k, "Number of colors")->required();
  gen_r->add_option("--width", g.width, "Centers lie in [0, width]^2");
  gen_r->add_option("--seed", g.seed, "Random seed");
  gen_r->callback([&] { action = [&](Tolerance) { return gen_random(g, out); }; });

  auto* gen_t = gen->add_subcommand("tight", "Instance whose largest MCSC is at most 1/4 + epsilon");
  gen_t->add_option("--epsilon", g.epsilon, "Slack above 1/4")->required();
  gen_t->add_option("--far-blue", g.far_blue, "Extra blue disks placed far away");
  gen_t->callback([&] { action = [&](Tolerance) { return gen_tight(g, out); }; });

  auto* gen_s = gen->add_subcommand("stack", "Three-disk stack gadget");
  gen_s->add_option("--cx", g.cx, "Middle disk x");
  gen_s->add_option("--cy", g.cy, "Middle disk y");
  gen_s->add_option("--pattern", g.pattern, "BRB or RBR");
  gen_s->add_option("--axis-x", g.axis_x, "Stack direction x");
  gen_s->add_option("--axis-y", g.axis_y, "Stack direction y");
  gen_s->add_option("--realization", g.realization, "Write extreme realization L or R as a points file");
  gen_s->callback([&] { action = [&](Tolerance) { return gen_stack(g, out); }; });

  auto* gen_c = gen->add_subcommand("clause", "Clause gadget");
  gen_c->add_option("--gx", g.gx, "Triangle center x");
  gen_c->add_option("--gy", g.gy, "Triangle center y");
  gen_c->add_option("--offset", g.offset, "Corner to red center distance");
  gen_c->callback([&] { action = [&](Tolerance) { return gen_clause(g, out); }; });

  for (auto* sub : {gen_r, gen_t, gen_s, gen_c}) sub->add_option("-o,--output", g.output, "Output file");

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->require_subcommand(1);
  auto* solve_m = solve->add_subcommand("mcsc", "Exact MCSC of a points file");
  auto* solve_s = solve->add_subcommand("smcsc", "Exact smallest MCSC over realizations");
  auto* solve_l = solve->add_subcommand("lmcsc", "Certified 1/3-approximate largest MCSC");
  for (auto* sub : {solve_m, solve_s, solve_l}) {
    sub->add_option("-i,--input", s.input, "Input file")->required();
    sub->add_option("-o,--output", s.output, "Solution file");
    sub->add_option("--svg", s.svg, "SVG figure");
    sub->add_option("--samples", s.samples, "Sampling oracle samples (lmcsc)");
    sub->add_option("--seed", s.seed, "Sampling oracle seed (lmcsc)");
    sub->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  }
  solve_m->callback([&] { action = [&](Tolerance t) { return solve_mcsc(s, t, out); }; });
  solve_s->callback([&] { action = [&](Tolerance t) { return solve_smcsc(s, t, out); }; });
  solve_l->callback([&] { action = [&](Tolerance t) { return solve_lmcsc(s, t, out); }; });

  auto* check = app.add_subcommand("check", "Verify properties of a point set");
  check->require_subcommand(1);
  auto* check_p = check->add_subcommand("pdelta", "Minimum cross-color distance >= delta");
  check_p->add_option("-i,--input", s.input, "Points or solution file")->required();
  check_p->add_option("--delta", s.delta, "Required separation")->required();
  check_p->add_option("-o,--output", s.output, "Report file");
  check_p->callback([&] { action = [&](Tolerance t) { return check_pdelta(s, t, out); }; });

  auto* oracle = app.add_subcommand("oracle", "Sampling oracles");
  oracle->require_subcommand(1);
  auto* oracle_l = oracle->add_subcommand("lmcsc", "Best of N random realizations");
  oracle_l->add_option("-i,--input", s.input, "Instance file")->required();
  oracle_l->add_option("--samples", s.samples, "Number of realizations")->required();
  oracle_l->add_option("--seed", s.seed, "Random seed")->required();
  oracle_l->add_option("-o,--output", s.output, "Solution file");
  oracle_l->add_option("--svg", s.svg, "SVG figure");
  oracle_l->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  oracle_l->callback([&] { action = [&](Tolerance t) { return oracle_lmcsc(s, t, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Tolerance tol = tolerance_from_env();
    return action(tol);
  } catch (const UsageError& e) {
    err << "chroma: " << e.what() << "\n";
    return kUsage;
  } catch (const io::ParseError& e) {
    err << "chroma: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Missing colors, empty input, invalid instances.
    err << "chroma: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "chroma: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace chroma::cli
