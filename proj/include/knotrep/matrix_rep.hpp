#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "knotrep/presentation.hpp"
#include "knotrep/reidemeister_schreier.hpp"

namespace knotrep {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Relation-residual tolerance for an n-dimensional representation: 1e-9 up
/// to n = 4, then 1e-9 * n.
double default_tolerance(std::size_t n);

/// Assignment of invertible complex matrices to the generators of a
/// presentation. Unless constructed with Check::deferred, the constructor
/// throws VerificationFailure when some relator residual exceeds tol.
class MatrixRep {
 public:
  enum class Check { on_construction, deferred };

  MatrixRep(PresentationPtr presentation, std::vector<CMatrix> images,
            std::optional<double> tol = std::nullopt, Check check = Check::on_construction);

  const PresentationPtr& presentation() const { return presentation_; }
  const std::vector<CMatrix>& images() const { return images_; }
  const CMatrix& image(GeneratorId g) const { return images_.at(g.index); }
  const CMatrix& image(std::string_view name) const {
    return image(presentation_->alphabet()->id(name));
  }
  std::size_t dim() const { return n_; }
  double tol() const { return tol_; }

  /// Product of generator images along w, left to right.
  CMatrix eval(const Word& w) const;
  Complex trace(const Word& w) const { return eval(w).trace(); }

  /// max over relators of the Frobenius norm of eval(r) - I.
  double verify_relations() const;
  bool valid() const { return verify_relations() <= tol_; }

 private:
  PresentationPtr presentation_;
  std::vector<CMatrix> images_;
  std::vector<CMatrix> inverses_;
  std::size_t n_ = 0;
  double tol_ = 0;
};

CMatrix eval(const MatrixRep& rep, const Word& w);
double verify_relations(const MatrixRep& rep);

/// Every generator mapped to the n x n identity.
MatrixRep trivial_rep(PresentationPtr presentation, std::size_t n = 1);

/// Block-diagonal sum over a common presentation.
MatrixRep direct_sum(std::span<const MatrixRep> reps);

/// P rho P^-1.
MatrixRep conjugate_by(const MatrixRep& rep, const CMatrix& p);

/// g -> lambda^(exponent * phi(g)) rho(g), phi the exponent sum.
struct AbelianTwist {
  Complex lambda{1.0, 0.0};
  int exponent = 1;
};
MatrixRep abelian_twist(const MatrixRep& rep, const AbelianTwist& twist);

/// (+)_{i<l} rho_i (x) lambda_i^(p_l phi)  (+)  rho_l (x) (prod_i lambda_i^-p_i)^phi
/// with p_i = dim rho_i. Inputs must be special linear on the generators;
/// the result is again special linear.
MatrixRep phi_direct_sum(std::span<const MatrixRep> reps, std::span<const Complex> lambdas);

/// rep o f for a substitution f: source -> rep's generators. This is the
/// pullback along an epimorphism, and also transports a representation
/// across a change of generators.
MatrixRep pullback(const MatrixRep& rep, const WordMap& f, PresentationPtr source);

/// Restriction of a representation of the parent group to a subgroup: each
/// subgroup generator goes to the image of its expansion.
MatrixRep restrict(const MatrixRep& rep, const SubgroupPresentation& sub);

/// A representation of a subgroup viewed as a function on parent words
/// lying in (a conjugate of) the subgroup. With conjugator g it evaluates
/// x -> alpha(g^-1 x g), i.e. the twisted representation alpha^g on gHg^-1.
class SubgroupRep {
 public:
  SubgroupRep(std::shared_ptr<const SubgroupPresentation> sub, MatrixRep rep);

  const SubgroupPresentation& sub() const { return *sub_; }
  const std::shared_ptr<const SubgroupPresentation>& sub_ptr() const { return sub_; }
  const MatrixRep& rep() const { return rep_; }
  const Word& conjugator() const { return conjugator_; }
  std::size_t dim() const { return rep_.dim(); }

  /// Throws VerificationFailure when the (conjugated) word leaves the subgroup.
  CMatrix eval_parent(const Word& x) const;

  SubgroupRep conjugate(const Word& g) const;

 private:
  std::shared_ptr<const SubgroupPresentation> sub_;
  MatrixRep rep_;
  Word conjugator_;
};

SubgroupRep conjugate_rep(const SubgroupRep& alpha, const Word& g);

/// Restriction of a subgroup representation to a smaller subgroup of the
/// same parent: each generator of `smaller` goes to alpha(expansion).
MatrixRep restrict(const SubgroupRep& alpha, const SubgroupPresentation& smaller);

/// Induced representation in the coset-major basis l_1 (x) e_1 .. l_k (x) e_m.
/// Block (j, i) of the image of g is alpha(rewrite(h)) for g l_i = l_j h.
MatrixRep induce(const MatrixRep& alpha, const SubgroupPresentation& sub,
                 std::optional<double> tol = std::nullopt);

/// Seeded random element of SL(m, C): entries with real and imaginary parts
/// uniform in [-1, 1], divided by the principal m-th root of the determinant.
CMatrix random_sl(std::size_t m, std::mt19937_64& engine);
CMatrix random_sl(std::size_t m, std::uint64_t seed);

/// Two consecutive random_sl draws from one seeded engine.
std::pair<CMatrix, CMatrix> random_sl_pair(std::size_t m, std::uint64_t seed);

}  // namespace knotrep
