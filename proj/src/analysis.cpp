#include "knotrep/analysis.hpp"

#include <cmath>
#include <random>
#include <set>

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep {

namespace {

std::vector<Syllable> letters_of(const AlphabetPtr& alphabet) {
  std::vector<Syllable> out;
  for (std::uint32_t g = 0; g < alphabet->size(); ++g) {
    out.push_back({GeneratorId{g}, 1});
    out.push_back({GeneratorId{g}, -1});
  }
  return out;
}

bool cancels(const Syllable& a, const Syllable& b) { return a.gen == b.gen && a.exponent == -b.exponent; }

Eigen::VectorXcd vec(const CMatrix& m) { return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size()); }

}  // namespace

std::vector<Word> sample_words(const AlphabetPtr& alphabet, const WordSample& sample) {
  const auto letters = letters_of(alphabet);
  std::vector<Word> out;
  std::set<std::string> seen;
  auto add = [&](const std::vector<Syllable>& raw) {
    Word w = Word::reduce(alphabet, raw);
    if (seen.insert(to_string(w)).second) out.push_back(std::move(w));
  };

  std::vector<std::vector<Syllable>> level{{}};
  add({});
  for (std::size_t len = 1; len <= sample.exhaustive_length && !letters.empty(); ++len) {
    std::vector<std::vector<Syllable>> next;
    for (const auto& w : level)
      for (const auto& l : letters) {
        if (!w.empty() && cancels(w.back(), l)) continue;
        auto ext = w;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    for (const auto& w : next) add(w);
    level = std::move(next);
  }

  if (letters.empty() || sample.random_max_length == 0) return out;
  std::mt19937_64 engine(sample.seed);
  std::uniform_int_distribution<std::size_t> length_dist(1, sample.random_max_length);
  std::uniform_int_distribution<std::size_t> letter_dist(0, letters.size() - 1);
  for (std::size_t c = 0; c < sample.random_count; ++c) {
    const auto len = length_dist(engine);
    std::vector<Syllable> raw;
    while (raw.size() < len) {
      const auto& l = letters[letter_dist(engine)];
      if (!raw.empty() && cancels(raw.back(), l)) continue;
      raw.push_back(l);
    }
    add(raw);
  }
  return out;
}

TraceVector character(const MatrixRep& rep, std::span<const Word> words) {
  TraceVector tv;
  tv.words.assign(words.begin(), words.end());
  tv.traces.reserve(words.size());
  for (const auto& w : words) tv.traces.push_back(rep.trace(w));
  return tv;
}

TraceVector character(const MatrixRep& rep, const WordSample& sample) {
  const auto words = sample_words(rep.presentation()->alphabet(), sample);
  return character(rep, words);
}

double character_distance(const TraceVector& a, const TraceVector& b) {
  if (a.words != b.words || a.traces.size() != b.traces.size())
    throw InvalidInput("characters sampled on different word sets");
  double worst = 0;
  for (std::size_t i = 0; i < a.traces.size(); ++i)
    worst = std::max(worst, std::abs(a.traces[i] - b.traces[i]));
  return worst;
}

bool characters_equal(const TraceVector& a, const TraceVector& b, double tol) {
  return character_distance(a, b) <= tol;
}

RankEstimate commutant_estimate(const MatrixRep& rep, double relative_threshold) {
  const long n = static_cast<long>(rep.dim());
  const long n2 = n * n;
  const CMatrix id = CMatrix::Identity(n, n);
  const auto& images = rep.images();
  CMatrix system = CMatrix::Zero(n2 * static_cast<long>(images.size()), n2);
  // vec(X r - r X) = (r^T (x) I - I (x) r) vec(X), column-major.
  for (std::size_t g = 0; g < images.size(); ++g) {
    const CMatrix& r = images[g];
    auto block = system.block(static_cast<long>(g) * n2, 0, n2, n2);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        block.block(i * n, j * n, n, n) += r(j, i) * id;
        block.block(i * n, j * n, n, n) -= id(i, j) * r;
      }
  }
  return estimate_rank(system, relative_threshold);
}

std::size_t commutant_dimension(const MatrixRep& rep) { return commutant_estimate(rep).nullity(); }

std::size_t algebra_dimension(const MatrixRep& rep, std::size_t max_len, double relative_threshold) {
  const long n = static_cast<long>(rep.dim());
  const long n2 = n * n;
  std::vector<CMatrix> steps;
  for (const auto& m : rep.images()) steps.push_back(m);
  for (const auto& m : rep.images()) steps.push_back(m.inverse());

  std::vector<Eigen::VectorXcd> basis;     // orthonormal
  std::vector<Eigen::VectorXcd> accepted;  // normalized word matrices
  auto try_add = [&](const CMatrix& m) {
    if (static_cast<long>(basis.size()) >= n2) return false;
    Eigen::VectorXcd v = vec(m);
    v /= v.norm();
    Eigen::VectorXcd r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) r -= q * q.dot(r);
    const double res = r.norm();
    if (res <= relative_threshold) return false;
    basis.push_back(r / res);
    accepted.push_back(v);
    return true;
  };

  std::vector<CMatrix> frontier{CMatrix::Identity(n, n)};
  try_add(frontier.front());
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<CMatrix> next;
    for (const auto& f : frontier)
      for (const auto& g : steps) {
        CMatrix m = f * g;
        if (try_add(m)) next.push_back(std::move(m));
      }
    frontier = std::move(next);
    if (static_cast<long>(basis.size()) == n2) break;
  }

  CMatrix stacked(n2, static_cast<long>(accepted.size()));
  for (std::size_t i = 0; i < accepted.size(); ++i) stacked.col(static_cast<long>(i)) = accepted[i];
  return estimate_rank(stacked, relative_threshold).rank;
}

MackeyVerdict mackey_check(const SubgroupRep& alpha_on_normal, std::span<const Word> representatives,
                           const Word& separating_element, double tol) {
  MackeyVerdict v;
  v.separating_element = separating_element;
  v.base_value = alpha_on_normal.eval_parent(separating_element);
  const long m = v.base_value.rows();
  const Complex c = v.base_value.trace() / static_cast<double>(m);
  const bool base_scalar = (v.base_value - c * CMatrix::Identity(m, m)).norm() <= tol;
  v.irreducible = true;
  for (const auto& s : representatives) {
    MackeyWitness w{s, conjugate_rep(alpha_on_normal, s).eval_parent(separating_element)};
    const bool differs = (w.value - v.base_value).norm() > tol;
    const bool traces_differ = std::abs(w.value.trace() - v.base_value.trace()) > tol;
    w.separates = (base_scalar && differs) || traces_differ;
    v.irreducible = v.irreducible && w.separates;
    v.witnesses.push_back(std::move(w));
  }
  return v;
}

namespace {

// Product of entrywise absolute values of the letter images along w, and
// the letter count.
std::pair<Eigen::MatrixXd, std::size_t> abs_product(const MatrixRep& rep, const Word& w) {
  const long n = static_cast<long>(rep.dim());
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(n, n);
  std::size_t letters = 0;
  for (const auto& s : w.syllables()) {
    const CMatrix& img = rep.image(s.gen);
    const Eigen::MatrixXd g = s.exponent > 0 ? Eigen::MatrixXd(img.cwiseAbs())
                                             : Eigen::MatrixXd(CMatrix(img.inverse()).cwiseAbs());
    for (int k = 0; k < std::abs(s.exponent); ++k) out = out * g;
    letters += static_cast<std::size_t>(std::abs(s.exponent));
  }
  return {out, letters};
}

}  // namespace

ResIndReport res_ind_check(const SubgroupRep& alpha, std::span<const Word> normal_words, double threshold) {
  if (!alpha.conjugator().empty())
    throw InvalidInput("res/ind identity needs an untwisted representation");
  const auto& table = alpha.sub().table();
  if (!table.subgroup_is_normal()) throw InvalidInput("subgroup is not normal");
  const MatrixRep ind = induce(alpha.rep(), alpha.sub());
  const double u = std::ldexp(1.0, -53);

  ResIndReport report;
  for (const auto& w : normal_words) {
    if (!table.contains(w))
      throw InvalidInput(fmt::format("word {} is not in the normal subgroup", to_string(w)));
    Complex sum{0, 0};
    auto [abs_ind, letters] = abs_product(ind, w);
    double scale = abs_ind.trace();
    std::size_t longest = 0;
    for (const auto& l : table.left_reps()) {
      const Word h = alpha.sub().rewrite(conjugate(w, l));
      sum += alpha.rep().eval(h).trace();
      auto [abs_h, len] = abs_product(alpha.rep(), h);
      scale += abs_h.trace();
      longest = std::max(longest, len);
    }
    const double residual = std::abs(ind.trace(w) - sum);
    const double bound = u * static_cast<double>(letters + longest + 1) * scale;
    ++report.words;
    if (residual > threshold) ++report.above_threshold;
    if (residual > std::max(threshold, bound)) ++report.beyond_bound;
    if (residual >= report.residual) {
      report.residual = residual;
      report.bound_at_worst = bound;
    }
  }
  return report;
}

double res_ind_character_identity(const SubgroupRep& alpha, std::span<const Word> normal_words) {
  return res_ind_check(alpha, normal_words).residual;
}

bool summand_dimension_check(std::span<const std::size_t> dims, std::size_t m, std::size_t k) {
  if (m == 0 || dims.empty()) return false;
  std::size_t total = 0;
  for (auto p : dims) {
    if (p % m != 0 || p < m || p > m * k) return false;
    total += p;
  }
  return total == m * k;
}

FiberReport fiber_sampling(std::span<const TraceVector> induced, std::span<const TraceVector> source,
                           double tol) {
  if (induced.size() != source.size()) throw InvalidInput("fiber sampling needs paired samples");
  if (induced.size() < 2) throw InvalidInput("fiber sampling needs at least two samples");
  FiberReport report;
  for (std::size_t i = 0; i < induced.size(); ++i)
    for (std::size_t j = i + 1; j < induced.size(); ++j) {
      if (!characters_equal(induced[i], induced[j], tol)) continue;
      if (character_distance(source[i], source[j]) > 10 * tol)
        report.collisions.emplace_back(i, j);
      else
        report.same_source.emplace_back(i, j);
    }
  return report;
}

}  // namespace knotrep
