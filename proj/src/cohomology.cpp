#include "knotrep/cohomology.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "knotrep/errors.hpp"
#include "knotrep/parallel.hpp"

namespace knotrep {

Eigen::VectorXcd sl_coordinates(const CMatrix& x) {
  const long n = x.rows();
  Eigen::VectorXcd c(n * n - 1);
  long k = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j) c(k++) = x(i, j);
  Complex partial{0, 0};
  for (long i = 0; i + 1 < n; ++i) {
    partial += x(i, i);
    c(k++) = partial;
  }
  return c;
}

CMatrix sl_basis_element(std::size_t n_, std::size_t index) {
  const long n = static_cast<long>(n_);
  CMatrix e = CMatrix::Zero(n, n);
  long k = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j && k++ == static_cast<long>(index)) {
        e(i, j) = 1;
        return e;
      }
  const long d = static_cast<long>(index) - k;
  if (d < 0 || d + 1 >= n) throw InvalidInput("sl(n) basis index out of range");
  e(d, d) = 1;
  e(d + 1, d + 1) = -1;
  return e;
}

CMatrix adjoint_matrix(const CMatrix& g) {
  const auto n = static_cast<std::size_t>(g.rows());
  const long d = static_cast<long>(n * n - 1);
  const CMatrix g_inv = g.inverse();
  CMatrix ad(d, d);
  for (long b = 0; b < d; ++b)
    ad.col(b) = sl_coordinates(g * sl_basis_element(n, static_cast<std::size_t>(b)) * g_inv);
  return ad;
}

CMatrix fox_derivative(const Word& r, GeneratorId g, const MatrixRep& rep, bool adjoint) {
  const long n = static_cast<long>(rep.dim());
  const long out_dim = adjoint ? n * n - 1 : n;
  CMatrix prefix = CMatrix::Identity(n, n);
  CMatrix out = CMatrix::Zero(out_dim, out_dim);
  auto accumulate = [&](const CMatrix& term, double sign) {
    out += sign * (adjoint ? adjoint_matrix(term) : term);
  };
  const CMatrix& img = rep.image(g);
  const CMatrix img_inv = img.inverse();
  if (!same_alphabet(r.alphabet(), rep.presentation()->alphabet()))
    throw InvalidInput("word is not over the representation's alphabet");
  for (const auto& s : r.syllables()) {
    const CMatrix& step_img = rep.image(s.gen);
    const CMatrix step = s.exponent > 0 ? step_img : CMatrix(step_img.inverse());
    for (int k = 0; k < std::abs(s.exponent); ++k) {
      if (s.gen == g) {
        if (s.exponent > 0)
          accumulate(prefix, 1.0);
        else
          accumulate(prefix * img_inv, -1.0);
      }
      prefix = prefix * step;
    }
  }
  return out;
}

CMatrix fox_matrix(const MatrixRep& rep) {
  const long d = static_cast<long>(rep.dim() * rep.dim() - 1);
  const auto& p = *rep.presentation();
  const long rows = static_cast<long>(p.relators().size()) * d;
  const long cols = static_cast<long>(p.generator_count()) * d;
  CMatrix fox = CMatrix::Zero(rows, cols);
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::uint32_t g = 0; g < p.generator_count(); ++g)
      fox.block(static_cast<long>(r) * d, static_cast<long>(g) * d, d, d) =
          fox_derivative(p.relators()[r], GeneratorId{g}, rep, true);
  return fox;
}

DimReport h1_dimension(const MatrixRep& rep, double relative_threshold) {
  if (rep.dim() < 2) throw InvalidInput("h1_dimension needs n >= 2");
  const long d = static_cast<long>(rep.dim() * rep.dim() - 1);
  const auto gens = static_cast<long>(rep.presentation()->generator_count());

  DimReport out;
  out.fox = estimate_rank(fox_matrix(rep), relative_threshold);
  out.dim_Z1 = static_cast<std::size_t>(gens * d) - out.fox.rank;

  CMatrix inv = CMatrix::Zero(gens * d, d);
  const CMatrix id = CMatrix::Identity(d, d);
  for (long g = 0; g < gens; ++g)
    inv.block(g * d, 0, d, d) = adjoint_matrix(rep.images()[static_cast<std::size_t>(g)]) - id;
  out.invariants = estimate_rank(inv, relative_threshold);
  out.dim_H0 = out.invariants.nullity();
  out.dim_B1 = static_cast<std::size_t>(d) - out.dim_H0;
  out.dim_H1 = out.dim_Z1 - out.dim_B1;
  out.flagged = !(out.fox.conclusive && out.invariants.conclusive);
  return out;
}

JacobianRank character_jacobian_rank(const TracePipeline& pipeline, const CMatrix& a,
                                     const CMatrix& b, double h, double relative_threshold) {
  const auto m = static_cast<std::size_t>(a.rows());
  const std::size_t per_matrix = m * m - 1;
  const std::size_t params = 2 * per_matrix;
  const auto base = pipeline(a, b);

  CMatrix jac(static_cast<long>(base.size()), static_cast<long>(params));
  parallel_for(params, [&](std::size_t p) {
    const CMatrix x = sl_basis_element(m, p % per_matrix);
    const CMatrix plus = (Complex(h, 0) * x).exp();
    const CMatrix minus = (Complex(-h, 0) * x).exp();
    const bool on_a = p < per_matrix;
    const auto f_plus = on_a ? pipeline(a * plus, b) : pipeline(a, b * plus);
    const auto f_minus = on_a ? pipeline(a * minus, b) : pipeline(a, b * minus);
    if (f_plus.size() != base.size() || f_minus.size() != base.size())
      throw InvalidInput("trace pipeline changed its output length");
    for (std::size_t i = 0; i < base.size(); ++i)
      jac(static_cast<long>(i), static_cast<long>(p)) =
          (f_plus[i] - f_minus[i]) / (2 * h) / (1.0 + std::abs(base[i]));
  });

  JacobianRank out;
  out.estimate = estimate_rank(jac, relative_threshold);
  out.step = h;
  out.parameters = params;
  out.coordinates = base.size();
  return out;
}

}  // namespace knotrep
