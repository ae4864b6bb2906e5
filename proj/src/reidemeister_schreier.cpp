#include "knotrep/reidemeister_schreier.hpp"

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep {

std::vector<SchreierGenerator> schreier_generators(const CosetTable& table,
                                                   const std::string& prefix) {
  std::vector<SchreierGenerator> out;
  const auto& parent = *table.parent();
  const auto& t = table.transversal();
  for (std::uint32_t i = 0; i < table.index(); ++i)
    for (std::uint32_t g = 0; g < parent.generator_count(); ++g) {
      const GeneratorId gid{g};
      Word w = t[i] * parent.generator(gid) * invert(t[table.right_action(gid, i)]);
      if (w.empty()) continue;
      out.push_back({fmt::format("{}{}", prefix, out.size()), std::move(w), i, gid});
    }
  return out;
}

SubgroupPresentation::SubgroupPresentation(std::shared_ptr<const CosetTable> table,
                                           const std::string& prefix)
    : table_(std::move(table)) {
  const auto& parent = *table_->parent();
  generators_ = schreier_generators(*table_, prefix);

  std::vector<std::string> names;
  for (const auto& g : generators_) names.push_back(g.name);
  auto alphabet = Alphabet::make(std::move(names));

  gen_of_.assign(table_->index(), std::vector<std::optional<GeneratorId>>(parent.generator_count()));
  for (std::uint32_t k = 0; k < generators_.size(); ++k) {
    const auto& g = generators_[k];
    if (!table_->contains(g.expansion))
      throw VerificationFailure(fmt::format("Schreier generator {} is not in the subgroup", g.name));
    gen_of_[g.coset][g.parent_gen.index] = GeneratorId{k};
  }
  expansion_ = WordMap(alphabet, parent.alphabet());
  for (std::uint32_t k = 0; k < generators_.size(); ++k)
    expansion_.set(GeneratorId{k}, generators_[k].expansion);

  // Rewriting needs the alphabet in place before relators exist.
  presentation_ = std::make_shared<const Presentation>(alphabet, std::vector<Word>{});
  std::vector<Word> relators;
  const auto& t = table_->transversal();
  for (std::size_t r = 0; r < parent.relators().size(); ++r)
    for (std::uint32_t i = 0; i < table_->index(); ++i) {
      Word rel = rewrite(t[i] * parent.relators()[r] * invert(t[i]));
      if (rel.empty()) continue;
      relators.push_back(std::move(rel));
      origins_.push_back({r, i});
    }
  presentation_ = std::make_shared<const Presentation>(alphabet, std::move(relators));
}

Word SubgroupPresentation::rewrite(const Word& parent_word) const {
  if (!same_alphabet(parent_word.alphabet(), parent()->alphabet()))
    throw InvalidInput("word is not over the parent alphabet");
  std::vector<Syllable> raw;
  std::uint32_t c = 0;
  for (const auto& s : parent_word.syllables()) {
    for (int k = 0; k < std::abs(s.exponent); ++k) {
      if (s.exponent > 0) {
        if (const auto& y = gen_of_[c][s.gen.index]) raw.push_back({*y, 1});
        c = table_->right_action(s.gen, c);
      } else {
        c = table_->right_action_inverse(s.gen, c);
        if (const auto& y = gen_of_[c][s.gen.index]) raw.push_back({*y, -1});
      }
    }
  }
  if (c != 0)
    throw VerificationFailure(
        fmt::format("word {} is not in the subgroup", to_string(parent_word)));
  return Word::reduce(presentation_->alphabet(), raw);
}

bool SubgroupPresentation::round_trip_exact() const {
  for (const auto& g : generators_)
    if (!table_->contains(g.expansion)) return false;
  const auto& t = table_->transversal();
  const auto& rels = presentation_->relators();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const auto& o = origins_[k];
    const Word expected = t[o.coset] * parent()->relators()[o.parent_relator] * invert(t[o.coset]);
    if (expand(rels[k]) != expected) return false;
  }
  return true;
}

Word rewrite(const SubgroupPresentation& sub, const Word& parent_word) {
  return sub.rewrite(parent_word);
}

SubgroupPresentation subgroup_presentation(std::shared_ptr<const CosetTable> table,
                                           const std::string& prefix) {
  return SubgroupPresentation(std::move(table), prefix);
}

FreeQuotient quotient_to_free(const SubgroupPresentation& sub, const WordMap& images) {
  if (!same_alphabet(images.source, sub.alphabet()))
    throw InvalidInput("quotient map is not defined on the subgroup generators");
  if (!images.complete()) throw InvalidInput("quotient map misses a subgroup generator");
  const auto& rels = sub.presentation()->relators();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const Word img = apply_hom(rels[k], images);
    if (!img.empty())
      throw VerificationFailure(fmt::format("relator {} maps to {} instead of 1",
                                            to_string(rels[k]), to_string(img)));
  }
  FreeQuotient q{images, true};
  for (std::uint32_t x = 0; x < images.target->size(); ++x) {
    const Word gen = Word::generator(images.target, GeneratorId{x});
    bool hit = false;
    for (const auto& img : images.images)
      if (*img == gen || *img == invert(gen)) hit = true;
    q.surjective = q.surjective && hit;
  }
  return q;
}

std::vector<Word> kernel_subgroup_generators(const CosetTable& table) {
  std::vector<Word> out;
  for (auto& g : schreier_generators(table, "z")) out.push_back(std::move(g.expansion));
  return out;
}

}  // namespace knotrep
