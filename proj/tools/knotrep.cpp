// knotrep: command-line front end.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 bad input or usage.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "knotrep/errors.hpp"
#include "knotrep/figure8.hpp"
#include "knotrep/io.hpp"
#include "knotrep/version.hpp"

namespace {

using namespace knotrep;
using io::json;

struct RunConfig {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::size_t m = 2;
  std::size_t seed_count = 20;
  std::uint64_t seed_base = 0;
  std::vector<std::uint64_t> seed_list;
  double tol = 1e-9;
  WordSample sample{};
  int verbosity = 0;
  std::string output;

  std::vector<std::uint64_t> seeds() const {
    if (!seed_list.empty()) return seed_list;
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < seed_count; ++i) out.push_back(seed_base + i);
    return out;
  }
};

json to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"inputs", c.inputs},
          {"m", c.m},
          {"seeds", c.seeds()},
          {"tol", c.tol},
          {"sample", io::to_json(c.sample)},
          {"verbosity", c.verbosity},
          {"output", c.output}};
}

json report(const RunConfig& c, json result) {
  return {{"tool", {{"name", "knotrep"}, {"version", version}}}, {"config", to_json(c)}, {"result", std::move(result)}};
}

void emit(const RunConfig& c, const json& j) {
  if (c.output.empty())
    std::cout << j.dump(2) << '\n';
  else
    io::write_file(c.output, j);
}

/// Reports go to the output file when one is given; the summary always goes
/// to standard output.
void emit_report(const RunConfig& c, const json& j) {
  if (!c.output.empty()) io::write_file(c.output, j);
  else if (c.verbosity >= 1) std::cout << j.dump(2) << '\n';
}

void add_sample_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--sample-length", c.sample.exhaustive_length, "Exhaustive word length")->check(CLI::Range(0, 6));
  cmd->add_option("--sample-count", c.sample.random_count, "Random words")->check(CLI::Range(0, 10000));
  cmd->add_option("--sample-max", c.sample.random_max_length, "Maximal random word length")->check(CLI::Range(0, 200));
  cmd->add_option("--sample-seed", c.sample.seed, "Word sample seed");
}

int cmd_two_bridge(const RunConfig& c, int alpha, int beta, const std::string& form) {
  const TwoBridgeParams p{alpha, beta};
  const Presentation pres = form == "sa" ? two_bridge_sa_presentation(p) : two_bridge_presentation(p);
  emit(c, io::to_json(pres));
  if (!c.output.empty()) fmt::print("b({}, {}): {}\n", alpha, beta, to_string(pres.relators().front()));
  return 0;
}

int cmd_subgroup(const RunConfig& c, const std::string& presentation, const std::string& permrep,
                 std::optional<int> dihedral, std::uint32_t point, bool kernel, const std::string& prefix) {
  std::shared_ptr<const PermRep> rep;
  if (!permrep.empty()) {
    rep = io::permrep_from_json(io::read_file(permrep));
    if (!presentation.empty() &&
        !(*io::presentation_from_json(io::read_file(presentation)) == *rep->presentation()))
      throw InvalidInput("permutation representation is defined on a different presentation");
  } else if (dihedral) {
    if (presentation.empty()) throw InvalidInput("--dihedral needs --presentation");
    rep = std::make_shared<const PermRep>(dihedral_rep(io::presentation_from_json(io::read_file(presentation)), *dihedral));
  } else {
    throw InvalidInput("give --permrep or --dihedral");
  }
  if (point == 0 || point > rep->degree())
    throw InvalidInput(fmt::format("point {} is outside 1..{}", point, rep->degree()));
  const auto sub = io::make_subgroup(rep, point - 1, kernel, prefix);
  emit(c, io::to_json(sub));
  if (!c.output.empty())
    fmt::print("subgroup of index {}: {} generators, {} relators, round trip exact\n", sub.sub->table().index(),
               sub.sub->generators().size(), sub.sub->presentation()->relators().size());
  return 0;
}

int cmd_induce(const RunConfig& c, const std::string& subgroup, const std::string& rep_path,
               const std::string& quotient) {
  const auto sub = io::subgroup_from_json(io::read_file(subgroup));
  MatrixRep rep = io::matrix_rep_from_json(io::read_file(rep_path));
  std::optional<MatrixRep> alpha;
  if (!quotient.empty()) {
    const auto qj = io::read_file(quotient);
    const WordMap map = io::word_map_from_json(qj, sub.sub->alphabet(), rep.presentation()->alphabet());
    quotient_to_free(*sub.sub, map);
    alpha = pullback(rep, map, sub.sub->presentation());
  } else {
    alpha = io::rebind(rep, sub.sub->presentation());
  }
  const MatrixRep ind = induce(*alpha, *sub.sub);
  emit(c, io::to_json(ind));
  if (!c.output.empty())
    fmt::print("induced dimension {}, relation residual {:.3e}\n", ind.dim(), ind.verify_relations());
  return 0;
}

int cmd_verify(const RunConfig& c, const std::string& rep_path, std::optional<double> tol) {
  const MatrixRep rep = io::matrix_rep_from_json(io::read_file(rep_path), MatrixRep::Check::deferred);
  const double bound = tol.value_or(rep.tol());
  const double residual = rep.verify_relations();
  const bool ok = residual <= bound;
  fmt::print("relation residual {:.3e} (tolerance {:.1e}): {}\n", residual, bound, ok ? "ok" : "FAILED");
  emit_report(c, report(c, {{"residual", residual}, {"tol", bound}, {"passed", ok}}));
  return ok ? 0 : 1;
}

int cmd_analyze(const RunConfig& c, const std::string& rep_path, bool commutant, std::optional<std::size_t> alg_len,
                bool characters) {
  const MatrixRep rep = io::matrix_rep_from_json(io::read_file(rep_path));
  json result{{"n", rep.dim()}};
  if (commutant) {
    const auto est = commutant_estimate(rep);
    fmt::print("commutant dimension {}\n", est.nullity());
    result["commutant"] = {{"dimension", est.nullity()}, {"estimate", io::to_json(est)}};
  }
  if (alg_len) {
    const auto dim = algebra_dimension(rep, *alg_len);
    fmt::print("algebra dimension {} of {} (words of length <= {})\n", dim, rep.dim() * rep.dim(), *alg_len);
    result["algebra_dimension"] = {{"dimension", dim}, {"max_len", *alg_len}, {"full", dim == rep.dim() * rep.dim()}};
  }
  if (characters) {
    const auto tv = character(rep, c.sample);
    json entries = json::array();
    for (std::size_t i = 0; i < tv.words.size(); ++i)
      entries.push_back({{"word", to_string(tv.words[i])}, {"trace", {tv.traces[i].real(), tv.traces[i].imag()}}});
    fmt::print("character sampled on {} words\n", tv.words.size());
    result["character"] = entries;
  }
  emit_report(c, report(c, result));
  return 0;
}

int cmd_h1(const RunConfig& c, const std::string& rep_path) {
  const MatrixRep rep = io::matrix_rep_from_json(io::read_file(rep_path));
  const DimReport d = h1_dimension(rep);
  fmt::print("Z1 {}  B1 {}  H0 {}  H1 {}{}\n", d.dim_Z1, d.dim_B1, d.dim_H0, d.dim_H1,
             d.flagged ? "  (flagged: no clear singular-value gap)" : "");
  emit_report(c, report(c, io::to_json(d)));
  return d.flagged ? 1 : 0;
}

int cmd_jacobian(const RunConfig& c, const std::string& pipeline, std::uint64_t seed, double step) {
  const auto [a, b] = random_sl_pair(c.m, seed);
  std::optional<figure8::Bundle> bundle;
  TracePipeline pipe;
  if (pipeline == "figure8") {
    bundle = figure8::build_bundle();
    pipe = figure8::character_pipeline(*bundle, sample_words(bundle->st->alphabet(), c.sample));
  } else {
    auto f2 = std::make_shared<const Presentation>(Alphabet::make(std::vector<std::string>{"x", "y"}),
                                                   std::vector<Word>{});
    pipe = [f2, words = sample_words(f2->alphabet(), c.sample)](const CMatrix& x, const CMatrix& y) {
      const MatrixRep beta(f2, {x, y});
      std::vector<Complex> out;
      for (const auto& w : words) out.push_back(beta.trace(w));
      return out;
    };
  }
  const JacobianRank j = character_jacobian_rank(pipe, a, b, step);
  fmt::print("{} pipeline, m = {}, seed {}: rank {} of {} parameters{}\n", pipeline, c.m, seed, j.estimate.rank,
             j.parameters, j.inconclusive() ? " (inconclusive gap)" : "");
  json result = io::to_json(j);
  result["pipeline"] = pipeline;
  result["seed"] = seed;
  emit_report(c, report(c, result));
  return j.inconclusive() ? 1 : 0;
}

int cmd_figure8(const RunConfig& c, std::size_t alg_len, double step) {
  figure8::Options opt;
  opt.m = c.m;
  opt.seeds = c.seeds();
  opt.tol = c.tol;
  opt.sample = c.sample;
  opt.algebra_max_len = alg_len;
  opt.jacobian_step = step;
  opt.validate();
  const auto bundle = figure8::build_bundle();
  const auto rep = figure8::run_figure8(bundle, opt);
  for (const auto& s : rep.seeds) {
    std::string line = fmt::format("seed {:>4}: {:<12}", s.seed, figure8::to_string(s.verdict));
    if (s.precondition && s.jacobian && s.h1)
      line += fmt::format(" residual {:.1e}  algebra {}  jacobian rank {}  H1 {}",
                          std::max(s.relation_residual_sa, s.relation_residual_st), s.algebra_dim,
                          s.jacobian->estimate.rank, s.h1->dim_H1);
    for (const auto& f : s.failures) line += fmt::format("  [{}]", f);
    for (const auto& f : s.inconclusive) line += fmt::format("  ({})", f);
    fmt::print("{}\n", line);
  }
  fmt::print("{} passed, {} inconclusive, {} failed; {} fiber collisions\n", rep.passed, rep.inconclusive, rep.failed,
             rep.fibers.collisions.size());
  emit_report(c, report(c, figure8::to_json(rep, c.verbosity)));
  return rep.failed == 0 && rep.fibers.collisions.empty() ? 0 : 1;
}

int cmd_bundle_verify(const RunConfig& c, const std::string& data, bool fresh_only, const std::string& write_dir) {
  if (!write_dir.empty()) {
    figure8::write_bundle(figure8::build_bundle(), write_dir);
    fmt::print("bundle written to {}\n", write_dir);
  }
  std::optional<std::filesystem::path> dir;
  if (!fresh_only) dir = data.empty() ? figure8::default_bundle_dir() : std::filesystem::path(data);
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = figure8::verify_bundle(dir);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& i : checks.items)
    fmt::print("{:<4} {}{}{}\n", i.passed ? "ok" : "FAIL", i.name, i.flagged ? " (flagged)" : "",
               i.detail.empty() ? "" : ": " + i.detail);
  fmt::print("{} checks in {:.3f} s\n", checks.items.size(), secs);
  emit_report(c, report(c, figure8::to_json(checks)));
  return checks.passed() && !checks.flagged() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced representations of knot groups"};
  app.set_version_flag("--version", std::string(knotrep::version));
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* cmd, const char* out_help) {
    cmd->add_option("-o,--out,--report", c.output, out_help);
    cmd->add_flag("-v,--verbose", c.verbosity, "Increase verbosity (repeatable)");
  };

  int alpha = 0, beta = 0;
  std::string form = "st";
  auto* tb = app.add_subcommand("two-bridge", "Presentation of a two-bridge knot group");
  tb->add_option("--alpha,alpha", alpha, "Odd alpha >= 3")->required();
  tb->add_option("--beta,beta", beta, "0 < beta < alpha, coprime to alpha")->required();
  tb->add_option("--form", form, "Generators (s, t) or (s, a)")->check(CLI::IsMember({"st", "sa"}));
  common(tb, "Output file (default: standard output)");

  std::string presentation, permrep, prefix = "y";
  std::optional<int> dihedral;
  std::uint32_t point = 1;
  bool kernel = false;
  auto* sg = app.add_subcommand("subgroup", "Reidemeister-Schreier presentation of a point stabilizer or kernel");
  sg->add_option("--presentation", presentation, "Presentation file");
  sg->add_option("--permrep", permrep, "Permutation representation file");
  sg->add_option("--dihedral", dihedral, "Use the dihedral representation of this degree");
  sg->add_option("--point", point, "Point (1-based) whose stabilizer is taken");
  sg->add_flag("--kernel", kernel, "Take the kernel of the representation instead");
  sg->add_option("--prefix", prefix, "Generator name prefix");
  common(sg, "Output file (default: standard output)");

  std::string subgroup, rep_path, quotient;
  auto* in = app.add_subcommand("induce", "Induce a subgroup representation to the parent group");
  in->add_option("--subgroup", subgroup, "Subgroup file")->required();
  in->add_option("--rep", rep_path, "Representation of the subgroup, or of the quotient's target")->required();
  in->add_option("--quotient", quotient, "Map from the subgroup onto a free group");
  common(in, "Output file (default: standard output)");

  std::optional<double> verify_tol;
  auto* ve = app.add_subcommand("verify", "Check the relators of a representation");
  ve->add_option("--rep,rep", rep_path, "Representation file")->required();
  ve->add_option("--tol", verify_tol, "Residual tolerance (default: from the file)");
  common(ve, "Report file");

  bool commutant = false, characters = false;
  std::optional<std::size_t> alg_len;
  auto* an = app.add_subcommand("analyze", "Commutant, matrix algebra and character of a representation");
  an->add_option("--rep,rep", rep_path, "Representation file")->required();
  an->add_flag("--commutant", commutant, "Commutant dimension");
  an->add_option("--algebra-dim", alg_len, "Span of words up to this length")->check(CLI::Range(1, 64));
  an->add_flag("--character", characters, "Sample the character");
  add_sample_options(an, c);
  common(an, "Report file");

  auto* h1 = app.add_subcommand("h1", "Twisted cohomology dimensions with adjoint coefficients");
  h1->add_option("--rep,rep", rep_path, "Representation file")->required();
  common(h1, "Report file");

  std::string pipeline = "figure8";
  std::uint64_t seed = 0;
  double step = 1e-5;
  auto* jr = app.add_subcommand("jacobian-rank", "Rank of the character map at a random pair");
  jr->add_option("--pipeline", pipeline, "figure8 or identity")->check(CLI::IsMember({"figure8", "identity"}));
  jr->add_option("--m", c.m, "Dimension of the free group representation")->check(CLI::Range(1, 8));
  jr->add_option("--seed", seed, "Seed of the base point");
  jr->add_option("--step", step, "Finite-difference step")->check(CLI::PositiveNumber);
  add_sample_options(jr, c);
  common(jr, "Report file");

  std::size_t f8_alg_len = 8;
  auto* f8 = app.add_subcommand("figure8", "End-to-end figure-eight verification over seeds");
  f8->add_option("--m", c.m, "Even dimension of the free group representation");
  f8->add_option("--seeds", c.seed_count, "Number of seeds")->check(CLI::Range(1, 10000));
  f8->add_option("--seed-base", c.seed_base, "First seed");
  f8->add_option("--seed-list", c.seed_list, "Explicit seeds (overrides --seeds)");
  f8->add_option("--tol", c.tol, "Relation tolerance")->check(CLI::PositiveNumber);
  f8->add_option("--algebra-len", f8_alg_len, "Word length for the algebra span")->check(CLI::Range(1, 64));
  f8->add_option("--step", step, "Finite-difference step")->check(CLI::PositiveNumber);
  add_sample_options(f8, c);
  common(f8, "Report file");

  std::string data, write_dir;
  bool fresh_only = false;
  auto* bv = app.add_subcommand("bundle-verify", "Recompute the figure-eight data and compare");
  bv->add_option("--data", data, "Bundle directory (default: the checked-in one)");
  bv->add_flag("--fresh-only", fresh_only, "Skip the comparison with stored files");
  bv->add_option("--write", write_dir, "Write a freshly computed bundle to this directory first");
  common(bv, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  c.command = cmd->get_name();
  for (const auto* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    c.inputs[opt->get_name()] = fmt::format("{}", fmt::join(opt->results(), " "));
  }

  try {
    if (cmd == tb) return cmd_two_bridge(c, alpha, beta, form);
    if (cmd == sg) return cmd_subgroup(c, presentation, permrep, dihedral, point, kernel, prefix);
    if (cmd == in) return cmd_induce(c, subgroup, rep_path, quotient);
    if (cmd == ve) return cmd_verify(c, rep_path, verify_tol);
    if (cmd == an) return cmd_analyze(c, rep_path, commutant, alg_len, characters);
    if (cmd == h1) return cmd_h1(c, rep_path);
    if (cmd == jr) return cmd_jacobian(c, pipeline, seed, step);
    if (cmd == f8) return cmd_figure8(c, f8_alg_len, step);
    if (cmd == bv) return cmd_bundle_verify(c, data, fresh_only, write_dir);
  } catch (const VerificationFailure& e) {
    fmt::print(stderr, "verification failed: {}\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  return 2;
}
