#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "knotrep/matrix_rep.hpp"
#include "knotrep/rank.hpp"

namespace knotrep {

/// Reproducible finite word set: every reduced word of length <= exhaustive_length
/// in shortlex order, then `random_count` random reduced words of length
/// 1..random_max_length drawn from `seed`. Duplicates are dropped.
struct WordSample {
  std::size_t exhaustive_length = 3;
  std::size_t random_count = 50;
  std::size_t random_max_length = 12;
  std::uint64_t seed = 0;
};

std::vector<Word> sample_words(const AlphabetPtr& alphabet, const WordSample& sample);

struct TraceVector {
  std::vector<Word> words;
  std::vector<Complex> traces;
};

TraceVector character(const MatrixRep& rep, std::span<const Word> words);
TraceVector character(const MatrixRep& rep, const WordSample& sample);

/// Throws InvalidInput when the two vectors were taken on different words.
double character_distance(const TraceVector& a, const TraceVector& b);
bool characters_equal(const TraceVector& a, const TraceVector& b, double tol);

/// Dimension of {X : X rho(g) = rho(g) X for every generator g}.
RankEstimate commutant_estimate(const MatrixRep& rep, double relative_threshold = 1e-8);
std::size_t commutant_dimension(const MatrixRep& rep);

/// Dimension of the linear span of rho(w) over words of length <= max_len.
/// Reaching n^2 certifies irreducibility (Burnside).
std::size_t algebra_dimension(const MatrixRep& rep, std::size_t max_len,
                              double relative_threshold = 1e-8);

/// Disjointness of a representation of a normal subgroup from its twists.
///
/// For each representative s the twisted value alpha^s(x) at the separating
/// element x is compared with alpha(x). When alpha(x) is scalar, any
/// difference already rules out equivalence; otherwise the traces must
/// differ.
struct MackeyWitness {
  Word representative;
  CMatrix value;
  bool separates = false;
};

struct MackeyVerdict {
  Word separating_element;
  CMatrix base_value;
  std::vector<MackeyWitness> witnesses;
  bool irreducible = false;
};

MackeyVerdict mackey_check(const SubgroupRep& alpha_on_normal, std::span<const Word> representatives,
                           const Word& separating_element, double tol = 1e-9);

/// max over parent words w in N of |tr ind(alpha)(w) - sum_s tr alpha(s^-1 w s)|,
/// with s running over the left coset representatives of N. Throws
/// InvalidInput when N is not normal.
double res_ind_character_identity(const SubgroupRep& alpha, std::span<const Word> normal_words);

/// The same comparison with a floating-point error bound per word:
/// u (|w| + |rewritten w|) times the traces of the products of entrywise
/// absolute values of the factors on both sides. A residual above
/// `threshold` but inside that bound cannot be resolved in double precision.
struct ResIndReport {
  double residual = 0;
  double bound_at_worst = 0;
  std::size_t words = 0;
  std::size_t above_threshold = 0;
  std::size_t beyond_bound = 0;
};
ResIndReport res_ind_check(const SubgroupRep& alpha, std::span<const Word> normal_words,
                           double threshold = 1e-8);

/// Every p_j a multiple of m with m <= p_j <= m k, and sum p_j = m k.
bool summand_dimension_check(std::span<const std::size_t> dims, std::size_t m, std::size_t k);

/// Pairs (i, j) with i < j. A collision has induced characters within tol
/// and source characters more than 10 tol apart; agreeing sources are
/// reported separately.
struct FiberReport {
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  std::vector<std::pair<std::size_t, std::size_t>> same_source;
};

FiberReport fiber_sampling(std::span<const TraceVector> induced, std::span<const TraceVector> source,
                           double tol);

}  // namespace knotrep
