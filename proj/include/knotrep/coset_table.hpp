#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "knotrep/permutation.hpp"

namespace knotrep {

/// Coset table of H = Stab(point) under a permutation representation.
///
/// Coset i has representative transversal()[i]; transversal()[0] is the
/// empty word. The transversal is prefix-closed and indexes both coset
/// sides:
///   right cosets H t_i  <->  point^{t_i}      (Reidemeister-Schreier side)
///   left cosets  l_i H  <->  point^{l_i^-1}   (induced-representation side)
/// where l_i = t_i whenever that is a valid left transversal (true for the
/// two-bridge dihedral tables) and l_i = t_i^-1 otherwise.
///
/// Representatives are grown breadth-first over cosets, following for each
/// generator in declaration order the chain of its positive powers until it
/// revisits a coset. For the figure-eight table with generators (s, a) this
/// yields {1, a, a^2, a^3, a^4}.
class CosetTable {
 public:
  /// `point` is 0-based. Throws InvalidInput when it is outside the degree.
  CosetTable(std::shared_ptr<const PermRep> rep, std::uint32_t point);

  const PermRep& rep() const { return *rep_; }
  const std::shared_ptr<const PermRep>& rep_ptr() const { return rep_; }
  const PresentationPtr& parent() const { return rep_->presentation(); }
  std::uint32_t point() const { return point_; }
  std::size_t index() const { return transversal_.size(); }

  const std::vector<Word>& transversal() const { return transversal_; }
  /// Left coset representatives l_i.
  const std::vector<Word>& left_reps() const { return left_reps_; }
  bool left_reps_inverted() const { return left_reps_inverted_; }

  /// Membership oracle for H.
  bool contains(const Word& w) const { return rep_->in_stabilizer(w, point_); }

  /// j with H t_i g = H t_j.
  std::uint32_t right_action(GeneratorId g, std::uint32_t i) const {
    return right_action_.at(g.index).at(i);
  }
  std::uint32_t right_action_inverse(GeneratorId g, std::uint32_t i) const {
    return right_inverse_.at(g.index).at(i);
  }
  /// j with g l_i H = l_j H.
  std::uint32_t left_action(GeneratorId g, std::uint32_t i) const {
    return left_action_.at(g.index).at(i);
  }
  /// The left action of g on coset indices, as a permutation.
  Permutation left_permutation(GeneratorId g) const;
  Permutation left_permutation(const Word& w) const;

  std::uint32_t right_coset_of(const Word& w) const;
  std::uint32_t left_coset_of(const Word& w) const;

  /// Normality of H: every element fixing `point` fixes the whole orbit.
  bool subgroup_is_normal() const;

 private:
  std::shared_ptr<const PermRep> rep_;
  std::uint32_t point_;
  std::vector<Word> transversal_;
  std::vector<Word> left_reps_;
  bool left_reps_inverted_ = false;
  std::vector<std::int64_t> right_index_;  // point -> right coset index, -1 off orbit
  std::vector<std::int64_t> left_index_;   // point -> left coset index
  std::vector<std::vector<std::uint32_t>> right_action_, right_inverse_, left_action_;
};

CosetTable coset_table(std::shared_ptr<const PermRep> rep, std::uint32_t point);

struct Factorization {
  std::uint32_t coset;
  Word h;
};

/// g l_i = l_j h with h in H. Throws VerificationFailure if h fails the
/// membership oracle.
Factorization factorize(const CosetTable& table, const Word& g, std::uint32_t i);
Factorization factorize(const CosetTable& table, GeneratorId g, std::uint32_t i);

}  // namespace knotrep
