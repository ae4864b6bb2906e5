#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace knotrep {

/// Numerical rank from singular values with a threshold relative to the
/// largest one.
///
/// The estimate is conclusive when the smallest retained relative singular
/// value is at least 10x the threshold and the largest discarded one is at
/// most a tenth of it. `gap` is their ratio (infinite when nothing is
/// discarded or nothing is retained).
struct RankEstimate {
  std::size_t rank = 0;
  std::size_t cols = 0;
  double threshold = 0;
  double sigma_max = 0;
  double smallest_kept = 0;    // relative
  double largest_dropped = 0;  // relative
  double gap = 0;
  bool conclusive = false;

  std::size_t nullity() const { return cols - rank; }
};

RankEstimate estimate_rank(const Eigen::MatrixXcd& m, double relative_threshold);

/// Same estimate from precomputed singular values (any order).
RankEstimate estimate_rank(std::vector<double> singular_values, std::size_t cols,
                           double relative_threshold);

}  // namespace knotrep
