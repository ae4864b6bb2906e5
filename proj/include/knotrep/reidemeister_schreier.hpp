#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotrep/coset_table.hpp"

namespace knotrep {

struct SchreierGenerator {
  std::string name;
  Word expansion;  // over the parent alphabet
  std::uint32_t coset;
  GeneratorId parent_gen;
};

/// One candidate per (coset i, parent generator g), in that lexicographic
/// order: t_i g t_{i.g}^-1. Trivial expansions (tree edges) are dropped and
/// the remaining ones are named prefix0, prefix1, ...
std::vector<SchreierGenerator> schreier_generators(const CosetTable& table,
                                                   const std::string& prefix = "y");

/// Presentation of a finite-index subgroup obtained by Reidemeister-Schreier
/// rewriting of the conjugates t_i R t_i^-1 of the parent relators.
class SubgroupPresentation {
 public:
  struct RelatorOrigin {
    std::size_t parent_relator;
    std::uint32_t coset;
  };

  SubgroupPresentation(std::shared_ptr<const CosetTable> table, const std::string& prefix = "y");

  const CosetTable& table() const { return *table_; }
  const std::shared_ptr<const CosetTable>& table_ptr() const { return table_; }
  const PresentationPtr& parent() const { return table_->parent(); }
  const PresentationPtr& presentation() const { return presentation_; }
  const AlphabetPtr& alphabet() const { return presentation_->alphabet(); }
  const std::vector<SchreierGenerator>& generators() const { return generators_; }
  const std::vector<RelatorOrigin>& relator_origins() const { return origins_; }

  /// Subgroup generator -> parent word.
  const WordMap& expansion_map() const { return expansion_; }
  Word expand(const Word& subgroup_word) const { return apply_hom(subgroup_word, expansion_); }

  /// Schreier rewriting of a parent word lying in the subgroup. The result
  /// expands back to w exactly. Throws VerificationFailure otherwise.
  Word rewrite(const Word& parent_word) const;

  /// Exact free-group check that every relator expands to the conjugate
  /// t_i R t_i^-1 it came from and every generator lies in the subgroup.
  bool round_trip_exact() const;

 private:
  std::shared_ptr<const CosetTable> table_;
  std::vector<SchreierGenerator> generators_;
  std::vector<std::vector<std::optional<GeneratorId>>> gen_of_;  // [coset][parent gen]
  PresentationPtr presentation_;
  std::vector<RelatorOrigin> origins_;
  WordMap expansion_;
};

Word rewrite(const SubgroupPresentation& sub, const Word& parent_word);

SubgroupPresentation subgroup_presentation(std::shared_ptr<const CosetTable> table,
                                           const std::string& prefix = "y");

/// A homomorphism from a subgroup onto a free group, checked to kill every
/// subgroup relator.
struct FreeQuotient {
  WordMap map;
  /// Every free generator occurs as the image of some subgroup generator.
  bool surjective = false;
};

/// Throws VerificationFailure naming the first relator that survives.
FreeQuotient quotient_to_free(const SubgroupPresentation& sub, const WordMap& images);

/// Schreier generator expansions of the stabilizer subgroup of `table`
/// (used with the regular representation to get generators of a kernel).
std::vector<Word> kernel_subgroup_generators(const CosetTable& table);

}  // namespace knotrep
