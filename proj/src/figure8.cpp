#include "knotrep/figure8.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "knotrep/errors.hpp"
#include "knotrep/parallel.hpp"
#include "knotrep/version.hpp"

#ifndef KNOTREP_DATA_DIR
#define KNOTREP_DATA_DIR "data"
#endif

namespace knotrep::figure8 {

namespace {

constexpr const char* kFiles[] = {"presentation_st.json", "presentation_sa.json", "delta.json",
                                  "H.json", "N.json", "psi.json"};

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(to_string(w));
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

PresentationPtr make_free2() {
  return std::make_shared<const Presentation>(Alphabet::make(std::vector<std::string>{"x", "y"}),
                                              std::vector<Word>{});
}

io::json bundle_file(const Bundle& b, std::string_view name) {
  if (name == "presentation_st.json") return io::to_json(*b.st);
  if (name == "presentation_sa.json") return io::to_json(*b.sa);
  if (name == "delta.json") return io::to_json(b.delta());
  if (name == "H.json") return io::to_json(b.h);
  if (name == "N.json") return io::to_json(b.n);
  return io::to_json(b.psi.map);
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

Bundle build_bundle() {
  const TwoBridgeParams params{5, 3};
  Bundle b;
  b.st = std::make_shared<const Presentation>(two_bridge_presentation(params));
  b.sa = std::make_shared<const Presentation>(two_bridge_sa_presentation(params));
  b.st_to_sa = st_to_sa_map(*b.st, *b.sa);
  b.sa_to_st = sa_to_st_map(*b.sa, *b.st);
  auto delta = std::make_shared<const PermRep>(dihedral_rep(b.sa, params.alpha));
  b.h = io::make_subgroup(delta, 0, false, "y");
  b.n = io::make_subgroup(delta, 0, true, "z");
  b.free2 = make_free2();
  WordMap psi(b.h.sub->alphabet(), b.free2->alphabet());
  for (std::uint32_t i = 0; i < reference::psi_images.size(); ++i)
    psi.set(GeneratorId{i}, parse_word(b.free2->alphabet(), reference::psi_images[i]));
  b.psi = quotient_to_free(*b.h.sub, psi);
  return b;
}

std::filesystem::path default_bundle_dir() { return std::filesystem::path(KNOTREP_DATA_DIR) / "figure8"; }

void write_bundle(const Bundle& b, const std::filesystem::path& dir) {
  for (const char* f : kFiles) io::write_file(dir / f, bundle_file(b, f));
}

Bundle load_bundle(const std::filesystem::path& dir) {
  Bundle b;
  b.st = io::presentation_from_json(io::read_file(dir / "presentation_st.json"));
  b.sa = io::presentation_from_json(io::read_file(dir / "presentation_sa.json"));
  b.st_to_sa = st_to_sa_map(*b.st, *b.sa);
  b.sa_to_st = sa_to_st_map(*b.sa, *b.st);
  if (!(change_generators(*b.st, b.st_to_sa, b.sa_to_st) == *b.sa))
    throw VerificationFailure("stored (s, a) presentation is not the transform of the (s, t) one");

  auto delta = io::permrep_from_json(io::read_file(dir / "delta.json"));
  if (!same_presentation(delta->presentation(), b.sa))
    throw VerificationFailure("stored delta is not defined on the (s, a) presentation");

  b.h = io::subgroup_from_json(io::read_file(dir / "H.json"));
  b.n = io::subgroup_from_json(io::read_file(dir / "N.json"));
  if (b.h.kernel || !b.n.kernel) throw VerificationFailure("stored H and N have the wrong kernel flags");
  if (b.h.rep->images() != delta->images() || b.n.rep->images() != delta->images())
    throw VerificationFailure("stored subgroups use a different permutation representation");
  if (!same_presentation(b.h.rep->presentation(), b.sa))
    throw VerificationFailure("stored subgroups have a different parent");

  const auto psi_json = io::read_file(dir / "psi.json");
  b.free2 = make_free2();
  b.psi = quotient_to_free(*b.h.sub, io::word_map_from_json(psi_json, b.h.sub->alphabet(), b.free2->alphabet()));
  return b;
}

bool Checklist::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

bool Checklist::flagged() const {
  return std::any_of(items.begin(), items.end(), [](const CheckItem& c) { return c.flagged; });
}

Checklist verify_bundle(const std::optional<std::filesystem::path>& dir) {
  Checklist out;
  auto add = [&](std::string name, bool ok, std::string detail = {}, bool flagged = false) {
    out.items.push_back({std::move(name), ok, flagged, std::move(detail)});
  };

  Bundle b;
  try {
    b = build_bundle();
  } catch (const std::exception& e) {
    add("build", false, e.what());
    return out;
  }

  const auto st_rel = strings(b.st->relators());
  add("presentation (s, t)", st_rel == std::vector<std::string>{reference::st_relator}, join(st_rel));
  const auto sa_rel = strings(b.sa->relators());
  add("presentation (s, a)", sa_rel == std::vector<std::string>{reference::sa_relator}, join(sa_rel));

  const std::string ds = b.delta().image(b.sa->alphabet()->id("s")).to_cycles();
  const std::string da = b.delta().image(b.sa->alphabet()->id("a")).to_cycles();
  add("dihedral representation", ds == reference::delta_s && da == reference::delta_a,
      fmt::format("s -> {}, a -> {}", ds, da));

  const auto& table = b.h.sub->table();
  const auto trans = strings(table.transversal());
  add("transversal", trans == reference::transversal, join(trans));
  add("left transversal", !table.left_reps_inverted() && table.left_reps() == table.transversal(),
      table.left_reps_inverted() ? "inverted" : "equal to the transversal");

  std::vector<std::string> names, expansions;
  for (const auto& g : b.h.sub->generators()) {
    names.push_back(g.name);
    expansions.push_back(to_string(g.expansion));
  }
  add("H generators",
      expansions == reference::y_expansions &&
          names == std::vector<std::string>{"y0", "y1", "y2", "y3", "y4", "y5"},
      join(expansions));

  const auto rels = strings(b.h.sub->presentation()->relators());
  if (rels == reference::h_relators) {
    add("H relators", true, join(rels));
  } else {
    bool rotated = rels.size() == reference::h_relators.size();
    for (std::size_t i = 0; rotated && i < rels.size(); ++i)
      rotated = equal_up_to_rotation_and_inversion(b.h.sub->presentation()->relators()[i],
                                                   b.h.sub->presentation()->parse(reference::h_relators[i]));
    add("H relators", rotated, join(rels), rotated);
  }

  add("H round trip", b.h.sub->round_trip_exact());
  add("N round trip", b.n.sub->round_trip_exact());

  std::size_t killed = 0;
  for (const auto& r : b.h.sub->presentation()->relators())
    if (apply_hom(r, b.psi.map).empty()) ++killed;
  const std::size_t total = b.h.sub->presentation()->relators().size();
  add("psi kills the relators of H", killed == total, fmt::format("{}/{}", killed, total));
  add("psi is onto F(x, y)", b.psi.surjective);

  const auto& ntable = b.n.sub->table();
  add("N has index 10 and is normal", ntable.index() == 10 && ntable.subgroup_is_normal(),
      fmt::format("index {}", ntable.index()));

  std::vector<std::string> in_y;
  bool in_kernel = true;
  for (const auto& z : b.n.sub->generators()) {
    in_y.push_back(to_string(b.h.sub->rewrite(z.expansion)));
    in_kernel = in_kernel && b.delta().in_kernel(z.expansion);
  }
  auto sorted_ref = reference::n_generators;
  auto sorted_got = in_y;
  std::sort(sorted_ref.begin(), sorted_ref.end());
  std::sort(sorted_got.begin(), sorted_got.end());
  add("N generators", sorted_got == sorted_ref, join(in_y));
  add("N generators lie in Ker delta", in_kernel);

  const Word a = b.sa->generator("a");
  const Word s2 = b.sa->parse("s^2");
  const auto w1 = to_string(b.h.sub->rewrite(conjugate(s2, a)));
  const auto w2 = to_string(b.h.sub->rewrite(conjugate(s2, power(a, 2))));
  add("twisted separating element", w1 == "y5^-1 y4 y1 y5" && w2 == "y5^-1 y3 y2 y5",
      fmt::format("a^-1 s^2 a = {}, a^-2 s^2 a^2 = {}", w1, w2));

  if (!dir) return out;
  try {
    load_bundle(*dir);
    add("stored bundle loads", true, dir->string());
  } catch (const std::exception& e) {
    add("stored bundle loads", false, e.what());
  }
  for (const char* f : kFiles) {
    try {
      const bool same = io::read_file(*dir / f) == bundle_file(b, f);
      add(fmt::format("stored {}", f), same, same ? "" : "differs from the recomputation");
    } catch (const std::exception& e) {
      add(fmt::format("stored {}", f), false, e.what());
    }
  }
  return out;
}

MatrixRep alpha_rep(const Bundle& b, const CMatrix& a, const CMatrix& bm, MatrixRep::Check check) {
  const MatrixRep beta(b.free2, {a, bm}, std::nullopt, check);
  return pullback(beta, b.psi.map, b.h.sub->presentation());
}

Induced induce_figure8(const Bundle& b, const CMatrix& a, const CMatrix& bm, std::optional<double> tol,
                       MatrixRep::Check check) {
  const MatrixRep sa = induce(alpha_rep(b, a, bm, MatrixRep::Check::deferred), *b.h.sub, tol);
  MatrixRep st = pullback(sa, b.st_to_sa, b.st);
  if (check == MatrixRep::Check::on_construction) {
    st = MatrixRep(b.st, st.images(), tol);
    return {MatrixRep(b.sa, sa.images(), tol), std::move(st)};
  }
  return {sa, st};
}

double pattern_deviation(const CMatrix& rho, const reference::Pattern& pattern, const CMatrix& a,
                         const CMatrix& bm) {
  const long m = a.rows();
  if (rho.rows() != 5 * m || rho.cols() != 5 * m || bm.rows() != m)
    throw InvalidInput("block pattern needs a 5m x 5m matrix");
  double worst = 0;
  for (long i = 0; i < 5; ++i)
    for (long j = 0; j < 5; ++j) {
      CMatrix expected;
      switch (pattern[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        case reference::Block::zero: expected = CMatrix::Zero(m, m); break;
        case reference::Block::identity: expected = CMatrix::Identity(m, m); break;
        case reference::Block::a: expected = a; break;
        case reference::Block::b: expected = bm; break;
      }
      worst = std::max(worst, max_abs(rho.block(i * m, j * m, m, m) - expected));
    }
  return worst;
}

MackeyVerdict mackey_check_figure8(const Bundle& b, const CMatrix& a, const CMatrix& bm, double tol) {
  const auto m = static_cast<std::size_t>(a.rows());
  const MatrixRep beta(b.free2, {a, bm}, std::nullopt, MatrixRep::Check::deferred);
  if (const auto dim = algebra_dimension(beta, m * m); dim != m * m)
    throw InvalidInput(fmt::format("reducible input pair: (A, B) spans {} of {} dimensions", dim, m * m));
  const SubgroupRep alpha_h(b.h.sub, alpha_rep(b, a, bm));
  const SubgroupRep alpha_n(b.n.sub, restrict(alpha_h, *b.n.sub));
  const Word g = b.sa->generator("a");
  const std::vector<Word> reps{g, power(g, 2)};
  return mackey_check(alpha_n, reps, b.sa->parse("s^2"), tol);
}

TracePipeline character_pipeline(const Bundle& b, std::vector<Word> words) {
  return [&b, words = std::move(words)](const CMatrix& a, const CMatrix& bm) {
    const Induced ind = induce_figure8(b, a, bm, std::nullopt, MatrixRep::Check::deferred);
    std::vector<Complex> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(ind.st.trace(w));
    return out;
  };
}

void Options::validate() const {
  if (m < 2 || m % 2 != 0) throw InvalidInput(fmt::format("m must be even and at least 2, got {}", m));
  if (seeds.empty()) throw InvalidInput("at least one seed is required");
  if (!(tol > 0)) throw InvalidInput("tol must be positive");
  if (algebra_max_len == 0) throw InvalidInput("algebra length must be positive");
  if (!(jacobian_step > 0)) throw InvalidInput("Jacobian step must be positive");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::fail: return "fail";
  }
  return "fail";
}

SeedReport run_figure8_pair(const Bundle& b, const CMatrix& a, const CMatrix& bm, const Options& opt) {
  SeedReport r;
  r.a = a;
  r.b = bm;
  const std::size_t m = static_cast<std::size_t>(a.rows());
  const std::size_t bound = m * m - 1;
  auto fail = [&](std::string why) { r.failures.push_back(std::move(why)); };
  try {
    const MatrixRep beta(b.free2, {a, bm}, std::nullopt, MatrixRep::Check::deferred);
    r.beta_algebra_dim = algebra_dimension(beta, m * m);
    r.precondition = r.beta_algebra_dim == m * m;
    if (!r.precondition) {
      fail(fmt::format("precondition: (A, B) is reducible ({} of {})", r.beta_algebra_dim, m * m));
    } else {
      const Induced ind = induce_figure8(b, a, bm, opt.tol, MatrixRep::Check::deferred);
      r.relation_residual_sa = ind.sa.verify_relations();
      r.relation_residual_st = ind.st.verify_relations();
      if (std::max(r.relation_residual_sa, r.relation_residual_st) > opt.tol) fail("relations");

      r.pattern_deviation = std::max(pattern_deviation(ind.st.image("s"), reference::rho_s, a, bm),
                                     pattern_deviation(ind.st.image("t"), reference::rho_t, a, bm));
      if (r.pattern_deviation > 1e-12) fail("block pattern");

      for (const auto* rep : {&ind.st, &ind.sa})
        for (const auto& img : rep->images())
          r.det_deviation = std::max(r.det_deviation, std::abs(img.determinant() - Complex(1, 0)));
      if (r.det_deviation > 1e-10) fail("determinant");

      r.mackey = mackey_check_figure8(b, a, bm, opt.tol);
      r.witness_deviation = max_abs(r.mackey->base_value - CMatrix::Identity(a.rows(), a.rows()));
      r.witness_deviation = std::max(r.witness_deviation, max_abs(r.mackey->witnesses.at(0).value - bm * a));
      r.witness_deviation = std::max(r.witness_deviation, max_abs(r.mackey->witnesses.at(1).value - a));
      if (r.witness_deviation > 1e-12) fail("Mackey witnesses");
      if (!r.mackey->irreducible) fail("Mackey criterion");

      r.algebra_dim = algebra_dimension(ind.sa, opt.algebra_max_len);
      if (r.algebra_dim != 25 * m * m) fail("algebra dimension");

      const SubgroupRep alpha_n(b.n.sub, restrict(SubgroupRep(b.h.sub, alpha_rep(b, a, bm)), *b.n.sub));
      std::vector<Word> nwords;
      for (const auto& w : sample_words(b.n.sub->alphabet(), opt.normal_sample))
        nwords.push_back(b.n.sub->expand(w));
      r.res_ind = res_ind_check(alpha_n, nwords, 1e-8);
      if (r.res_ind.beyond_bound > 0)
        fail("restriction identity");
      else if (r.res_ind.above_threshold > 0)
        r.inconclusive.push_back("restriction identity below double-precision resolution");

      const auto words = sample_words(b.st->alphabet(), opt.sample);
      r.jacobian_sample = opt.sample;
      r.jacobian = character_jacobian_rank(character_pipeline(b, words), a, bm, opt.jacobian_step);
      for (std::size_t k = 0; k < opt.jacobian_doublings && !r.jacobian->inconclusive() &&
                              r.jacobian->estimate.rank < bound && r.jacobian_sample.random_count > 0;
           ++k) {
        r.jacobian_sample.random_count *= 2;
        r.jacobian = character_jacobian_rank(
            character_pipeline(b, sample_words(b.st->alphabet(), r.jacobian_sample)), a, bm, opt.jacobian_step);
      }
      if (r.jacobian->inconclusive())
        r.inconclusive.push_back("character Jacobian rank gap");
      else if (r.jacobian->estimate.rank < bound)
        fail("character Jacobian rank");

      r.h1 = h1_dimension(ind.st);
      if (r.h1->flagged)
        r.inconclusive.push_back("H1 rank gap");
      else if (r.h1->dim_H1 < bound)
        fail("H1 dimension");

      r.induced_character = character(ind.st, words);
      r.source_character = character(beta, sample_words(b.free2->alphabet(), opt.sample));
    }
  } catch (const std::exception& e) {
    fail(fmt::format("stage error: {}", e.what()));
  }
  r.verdict = !r.failures.empty()      ? Verdict::fail
              : !r.inconclusive.empty() ? Verdict::inconclusive
                                        : Verdict::pass;
  return r;
}

PipelineReport run_figure8(const Bundle& b, const Options& opt) {
  opt.validate();
  PipelineReport report;
  report.options = opt;
  report.seeds.resize(opt.seeds.size());
  parallel_for(opt.seeds.size(), [&](std::size_t i) {
    const auto [a, bm] = random_sl_pair(opt.m, opt.seeds[i]);
    report.seeds[i] = run_figure8_pair(b, a, bm, opt);
    report.seeds[i].seed = opt.seeds[i];
  });

  std::vector<std::size_t> idx;
  std::vector<TraceVector> induced, source;
  for (std::size_t i = 0; i < report.seeds.size(); ++i) {
    const auto& s = report.seeds[i];
    if (!s.induced_character || !s.source_character) continue;
    idx.push_back(i);
    induced.push_back(*s.induced_character);
    source.push_back(*s.source_character);
  }
  if (idx.size() >= 2) {
    const FiberReport f = fiber_sampling(induced, source, opt.tol);
    for (const auto& [i, j] : f.collisions) report.fibers.collisions.emplace_back(idx[i], idx[j]);
    for (const auto& [i, j] : f.same_source) report.fibers.same_source.emplace_back(idx[i], idx[j]);
  }

  for (const auto& s : report.seeds) {
    switch (s.verdict) {
      case Verdict::pass: ++report.passed; break;
      case Verdict::inconclusive: ++report.inconclusive; break;
      case Verdict::fail: ++report.failed; break;
    }
  }
  return report;
}

io::json to_json(const SeedReport& r, int verbosity) {
  io::json j{{"seed", r.seed},
             {"verdict", to_string(r.verdict)},
             {"failures", r.failures},
             {"inconclusive", r.inconclusive},
             {"precondition", r.precondition},
             {"beta_algebra_dim", r.beta_algebra_dim}};
  if (r.precondition) {
    j["relation_residual"] = {{"sa", r.relation_residual_sa}, {"st", r.relation_residual_st}};
    j["pattern_deviation"] = r.pattern_deviation;
    j["det_deviation"] = r.det_deviation;
    j["algebra_dim"] = r.algebra_dim;
    j["res_ind"] = {{"residual", r.res_ind.residual},
                    {"bound_at_worst", r.res_ind.bound_at_worst},
                    {"words", r.res_ind.words},
                    {"above_threshold", r.res_ind.above_threshold},
                    {"beyond_bound", r.res_ind.beyond_bound}};
  }
  if (r.mackey) {
    io::json w = io::json::array();
    for (const auto& x : r.mackey->witnesses) {
      io::json e{{"representative", knotrep::to_string(x.representative)}, {"separates", x.separates}};
      if (verbosity >= 2) e["value"] = io::matrix_to_json(x.value);
      w.push_back(e);
    }
    io::json mk{{"separating_element", knotrep::to_string(r.mackey->separating_element)},
                {"irreducible", r.mackey->irreducible},
                {"witness_deviation", r.witness_deviation},
                {"witnesses", w}};
    if (verbosity >= 2) mk["base_value"] = io::matrix_to_json(r.mackey->base_value);
    j["mackey"] = mk;
  }
  if (r.jacobian) {
    j["jacobian"] = io::to_json(*r.jacobian);
    j["jacobian"]["sample"] = io::to_json(r.jacobian_sample);
  }
  if (r.h1) j["h1"] = io::to_json(*r.h1);
  if (verbosity >= 2) {
    j["A"] = io::matrix_to_json(r.a);
    j["B"] = io::matrix_to_json(r.b);
  }
  return j;
}

io::json to_json(const PipelineReport& r, int verbosity) {
  io::json seeds = io::json::array();
  for (const auto& s : r.seeds) seeds.push_back(to_json(s, verbosity));
  const auto& o = r.options;
  return {{"tool", {{"name", "knotrep"}, {"version", version}}},
          {"options",
           {{"m", o.m},
            {"seeds", o.seeds},
            {"tol", o.tol},
            {"sample", io::to_json(o.sample)},
            {"normal_sample", io::to_json(o.normal_sample)},
            {"algebra_max_len", o.algebra_max_len},
            {"jacobian_step", o.jacobian_step},
            {"jacobian_doublings", o.jacobian_doublings}}},
          {"summary", {{"passed", r.passed}, {"inconclusive", r.inconclusive}, {"failed", r.failed}}},
          {"fibers", {{"collisions", r.fibers.collisions}, {"same_source", r.fibers.same_source}}},
          {"seeds", seeds}};
}

io::json to_json(const Checklist& c) {
  io::json items = io::json::array();
  for (const auto& i : c.items)
    items.push_back({{"name", i.name}, {"passed", i.passed}, {"flagged", i.flagged}, {"detail", i.detail}});
  return {{"passed", c.passed()}, {"flagged", c.flagged()}, {"items", items}};
}

}  // namespace knotrep::figure8
