#pragma once

#include <functional>
#include <vector>

#include "knotrep/matrix_rep.hpp"
#include "knotrep/rank.hpp"

namespace knotrep {

/// Coordinates on sl(n): off-diagonal entries (row-major), then the partial
/// sums d_1 + .. + d_k of the diagonal for k = 1 .. n-1.
Eigen::VectorXcd sl_coordinates(const CMatrix& x);
CMatrix sl_basis_element(std::size_t n, std::size_t index);
/// Matrix of X -> g X g^-1 on sl(n), size (n^2 - 1) square.
CMatrix adjoint_matrix(const CMatrix& g);

/// Fox derivative dr/dg evaluated through rho (n x n) or through Ad o rho
/// ((n^2-1) x (n^2-1)), using d(uv) = du + u dv, dg/dg = 1, dg^-1/dg = -g^-1.
CMatrix fox_derivative(const Word& r, GeneratorId g, const MatrixRep& rep, bool adjoint);

/// Block matrix [Ad(dr_i/dg_j)]: rows relators, columns generators.
CMatrix fox_matrix(const MatrixRep& rep);

/// Twisted cohomology dimensions with coefficients in sl(n) via Ad o rho.
/// H^1 here is the Zariski tangent space dimension at rho, an upper bound
/// for the local dimension of the character variety.
struct DimReport {
  std::size_t dim_Z1 = 0;
  std::size_t dim_B1 = 0;
  std::size_t dim_H0 = 0;
  std::size_t dim_H1 = 0;
  RankEstimate fox;
  RankEstimate invariants;
  /// Either rank lacked a clear singular-value gap.
  bool flagged = false;
};

DimReport h1_dimension(const MatrixRep& rep, double relative_threshold = 1e-7);

/// Map from a pair (A, B) in SL(m)^2 to a vector of traces.
using TracePipeline = std::function<std::vector<Complex>(const CMatrix&, const CMatrix&)>;

struct JacobianRank {
  RankEstimate estimate;
  double step = 0;
  std::size_t parameters = 0;
  std::size_t coordinates = 0;
  bool inconclusive() const { return !estimate.conclusive; }
};

/// Complex rank of the central-difference Jacobian of `pipeline` at (A, B).
/// Perturbations are A exp(+-h X), B exp(+-h X) for X in a basis of sl(m),
/// which keeps both matrices in SL(m). Each trace coordinate is scaled by
/// 1 / (1 + |value|) before the rank is taken.
JacobianRank character_jacobian_rank(const TracePipeline& pipeline, const CMatrix& a,
                                     const CMatrix& b, double h = 1e-5,
                                     double relative_threshold = 1e-6);

}  // namespace knotrep
