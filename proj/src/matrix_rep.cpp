#include "knotrep/matrix_rep.hpp"

#include <cmath>

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep {

namespace {

Complex ipow(Complex z, long k) {
  Complex base = k < 0 ? 1.0 / z : z;
  Complex out{1.0, 0.0};
  for (long e = std::labs(k); e > 0; e >>= 1) {
    if (e & 1) out *= base;
    base *= base;
  }
  return out;
}

}  // namespace

double default_tolerance(std::size_t n) {
  return n <= 4 ? 1e-9 : 1e-9 * static_cast<double>(n);
}

MatrixRep::MatrixRep(PresentationPtr presentation, std::vector<CMatrix> images,
                     std::optional<double> tol, Check check)
    : presentation_(std::move(presentation)), images_(std::move(images)) {
  if (images_.size() != presentation_->generator_count())
    throw InvalidInput(fmt::format("representation needs {} generator images, got {}",
                                   presentation_->generator_count(), images_.size()));
  n_ = images_.empty() ? 0 : static_cast<std::size_t>(images_.front().rows());
  tol_ = tol.value_or(default_tolerance(n_));
  inverses_.reserve(images_.size());
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const auto& m = images_[g];
    if (m.rows() != static_cast<long>(n_) || m.cols() != static_cast<long>(n_))
      throw InvalidInput("generator images must all be square of the same size");
    if (!m.allFinite()) throw InvalidInput("generator image has non-finite entries");
    Eigen::PartialPivLU<CMatrix> lu(m);
    if (std::abs(lu.determinant()) <= 1e-12)
      throw InvalidInput(fmt::format("image of '{}' is singular",
                                     presentation_->alphabet()->name(GeneratorId{static_cast<std::uint32_t>(g)})));
    inverses_.push_back(lu.inverse());
  }
  if (check == Check::on_construction) {
    const double residual = verify_relations();
    if (!(residual <= tol_))
      throw VerificationFailure(
          fmt::format("relation residual {:.3e} exceeds tolerance {:.3e}", residual, tol_));
  }
}

CMatrix MatrixRep::eval(const Word& w) const {
  if (!same_alphabet(w.alphabet(), presentation_->alphabet()))
    throw InvalidInput("word is not over the representation's alphabet");
  CMatrix out = CMatrix::Identity(static_cast<long>(n_), static_cast<long>(n_));
  for (const auto& s : w.syllables()) {
    const CMatrix& step = s.exponent > 0 ? images_[s.gen.index] : inverses_[s.gen.index];
    for (int k = 0; k < std::abs(s.exponent); ++k) out = out * step;
  }
  return out;
}

double MatrixRep::verify_relations() const {
  double worst = 0.0;
  const CMatrix id = CMatrix::Identity(static_cast<long>(n_), static_cast<long>(n_));
  for (const auto& r : presentation_->relators()) worst = std::max(worst, (eval(r) - id).norm());
  return worst;
}

CMatrix eval(const MatrixRep& rep, const Word& w) { return rep.eval(w); }
double verify_relations(const MatrixRep& rep) { return rep.verify_relations(); }

MatrixRep trivial_rep(PresentationPtr presentation, std::size_t n) {
  const auto count = presentation->generator_count();
  return MatrixRep(std::move(presentation),
                   std::vector<CMatrix>(count, CMatrix::Identity(static_cast<long>(n), static_cast<long>(n))));
}

MatrixRep direct_sum(std::span<const MatrixRep> reps) {
  if (reps.empty()) throw InvalidInput("direct sum of no representations");
  const auto& p = reps.front().presentation();
  std::size_t total = 0;
  double tol = 0;
  for (const auto& r : reps) {
    if (!same_presentation(r.presentation(), p))
      throw InvalidInput("direct sum of representations of different presentations");
    total += r.dim();
    tol = std::max(tol, r.tol());
  }
  std::vector<CMatrix> images;
  for (std::uint32_t g = 0; g < p->generator_count(); ++g) {
    CMatrix m = CMatrix::Zero(static_cast<long>(total), static_cast<long>(total));
    long offset = 0;
    for (const auto& r : reps) {
      const auto d = static_cast<long>(r.dim());
      m.block(offset, offset, d, d) = r.image(GeneratorId{g});
      offset += d;
    }
    images.push_back(std::move(m));
  }
  return MatrixRep(p, std::move(images), std::max(tol, default_tolerance(total)));
}

MatrixRep conjugate_by(const MatrixRep& rep, const CMatrix& p) {
  const CMatrix p_inv = p.inverse();
  std::vector<CMatrix> images;
  for (const auto& m : rep.images()) images.push_back(p * m * p_inv);
  return MatrixRep(rep.presentation(), std::move(images), rep.tol());
}

MatrixRep abelian_twist(const MatrixRep& rep, const AbelianTwist& twist) {
  if (twist.lambda == Complex{0.0, 0.0}) throw InvalidInput("twist parameter must be nonzero");
  const auto& p = rep.presentation();
  std::vector<CMatrix> images;
  for (std::uint32_t g = 0; g < p->generator_count(); ++g) {
    const long phi = exponent_sum(p->generator(GeneratorId{g}));
    images.push_back(ipow(twist.lambda, twist.exponent * phi) * rep.image(GeneratorId{g}));
  }
  return MatrixRep(p, std::move(images), rep.tol());
}

MatrixRep phi_direct_sum(std::span<const MatrixRep> reps, std::span<const Complex> lambdas) {
  if (reps.empty()) throw InvalidInput("phi direct sum of no representations");
  if (lambdas.size() + 1 != reps.size())
    throw InvalidInput("phi direct sum needs one parameter fewer than summands");
  for (const auto& r : reps)
    for (const auto& m : r.images())
      if (std::abs(m.determinant() - 1.0) > 1e-8)
        throw InvalidInput("phi direct sum needs special linear summands");

  const long p_last = static_cast<long>(reps.back().dim());
  std::vector<MatrixRep> twisted;
  Complex balance{1.0, 0.0};
  for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
    twisted.push_back(abelian_twist(reps[i], {lambdas[i], static_cast<int>(p_last)}));
    balance *= ipow(lambdas[i], -static_cast<long>(reps[i].dim()));
  }
  twisted.push_back(abelian_twist(reps.back(), {balance, 1}));
  return direct_sum(twisted);
}

MatrixRep pullback(const MatrixRep& rep, const WordMap& f, PresentationPtr source) {
  if (!same_alphabet(f.target, rep.presentation()->alphabet()) ||
      !same_alphabet(f.source, source->alphabet()))
    throw InvalidInput("pullback map does not match the representation");
  std::vector<CMatrix> images;
  for (std::uint32_t g = 0; g < source->generator_count(); ++g)
    images.push_back(rep.eval(f.image(GeneratorId{g})));
  return MatrixRep(std::move(source), std::move(images), rep.tol());
}

MatrixRep restrict(const MatrixRep& rep, const SubgroupPresentation& sub) {
  if (!same_presentation(rep.presentation(), sub.parent()))
    throw InvalidInput("restriction to a subgroup of a different group");
  std::vector<CMatrix> images;
  for (const auto& g : sub.generators()) images.push_back(rep.eval(g.expansion));
  return MatrixRep(sub.presentation(), std::move(images), rep.tol());
}

SubgroupRep::SubgroupRep(std::shared_ptr<const SubgroupPresentation> sub, MatrixRep rep)
    : sub_(std::move(sub)), rep_(std::move(rep)), conjugator_(sub_->parent()->identity()) {
  if (!same_presentation(rep_.presentation(), sub_->presentation()))
    throw InvalidInput("subgroup representation over a different presentation");
}

CMatrix SubgroupRep::eval_parent(const Word& x) const {
  return rep_.eval(sub_->rewrite(knotrep::conjugate(x, conjugator_)));
}

SubgroupRep SubgroupRep::conjugate(const Word& g) const {
  SubgroupRep out = *this;
  // (alpha^h)^g (x) = alpha^h(g^-1 x g) = alpha(h^-1 g^-1 x g h)
  out.conjugator_ = g * conjugator_;
  return out;
}

SubgroupRep conjugate_rep(const SubgroupRep& alpha, const Word& g) { return alpha.conjugate(g); }

MatrixRep restrict(const SubgroupRep& alpha, const SubgroupPresentation& smaller) {
  if (!same_presentation(alpha.sub().parent(), smaller.parent()))
    throw InvalidInput("restriction between subgroups of different groups");
  std::vector<CMatrix> images;
  for (const auto& g : smaller.generators()) images.push_back(alpha.eval_parent(g.expansion));
  return MatrixRep(smaller.presentation(), std::move(images), alpha.rep().tol());
}

MatrixRep induce(const MatrixRep& alpha, const SubgroupPresentation& sub, std::optional<double> tol) {
  if (!same_presentation(alpha.presentation(), sub.presentation()))
    throw InvalidInput("induction from a representation of a different subgroup");
  const auto& table = sub.table();
  const auto& parent = sub.parent();
  const long m = static_cast<long>(alpha.dim());
  const long k = static_cast<long>(table.index());
  std::vector<CMatrix> images;
  for (std::uint32_t g = 0; g < parent->generator_count(); ++g) {
    CMatrix img = CMatrix::Zero(m * k, m * k);
    for (std::uint32_t i = 0; i < table.index(); ++i) {
      const auto f = factorize(table, GeneratorId{g}, i);
      img.block(static_cast<long>(f.coset) * m, static_cast<long>(i) * m, m, m) =
          alpha.eval(sub.rewrite(f.h));
    }
    images.push_back(std::move(img));
  }
  const auto n = static_cast<std::size_t>(m * k);
  return MatrixRep(parent, std::move(images), tol.value_or(default_tolerance(n)));
}

CMatrix random_sl(std::size_t m, std::mt19937_64& engine) {
  if (m == 0) throw InvalidInput("random_sl needs m >= 1");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const auto d = static_cast<long>(m);
  for (int attempt = 0; attempt < 100; ++attempt) {
    CMatrix a(d, d);
    for (long j = 0; j < d; ++j)
      for (long i = 0; i < d; ++i) {
        const double re = unit(engine);
        const double im = unit(engine);
        a(i, j) = Complex(re, im);
      }
    const Complex det = a.determinant();
    if (std::abs(det) < 1e-8) continue;
    return a / std::pow(det, 1.0 / static_cast<double>(m));
  }
  throw VerificationFailure("random_sl: no invertible sample after 100 attempts");
}

CMatrix random_sl(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return random_sl(m, engine);
}

std::pair<CMatrix, CMatrix> random_sl_pair(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  CMatrix a = random_sl(m, engine);
  CMatrix b = random_sl(m, engine);
  return {std::move(a), std::move(b)};
}

}  // namespace knotrep
