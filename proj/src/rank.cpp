#include "knotrep/rank.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace knotrep {

RankEstimate estimate_rank(std::vector<double> sv, std::size_t cols, double relative_threshold) {
  RankEstimate r;
  r.cols = cols;
  r.threshold = relative_threshold;
  std::sort(sv.begin(), sv.end(), std::greater<>());
  constexpr double inf = std::numeric_limits<double>::infinity();
  r.sigma_max = sv.empty() ? 0.0 : sv.front();
  if (r.sigma_max == 0.0) {
    r.smallest_kept = inf;
    r.gap = inf;
    r.conclusive = true;
    return r;
  }
  // Columns beyond the row count contribute exact zeros.
  sv.resize(std::max(sv.size(), cols), 0.0);
  for (double s : sv) {
    const double rel = s / r.sigma_max;
    if (rel > relative_threshold) {
      ++r.rank;
      r.smallest_kept = rel;
    } else {
      r.largest_dropped = std::max(r.largest_dropped, rel);
    }
  }
  r.gap = r.largest_dropped > 0 ? r.smallest_kept / r.largest_dropped : inf;
  r.conclusive = r.smallest_kept >= 10 * relative_threshold &&
                 r.largest_dropped <= relative_threshold / 10;
  return r;
}

RankEstimate estimate_rank(const Eigen::MatrixXcd& m, double relative_threshold) {
  if (m.size() == 0) return estimate_rank(std::vector<double>{}, static_cast<std::size_t>(m.cols()),
                                          relative_threshold);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return estimate_rank(std::vector<double>(s.data(), s.data() + s.size()),
                       static_cast<std::size_t>(m.cols()), relative_threshold);
}

}  // namespace knotrep
