#include "knotrep/coset_table.hpp"

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep {

CosetTable::CosetTable(std::shared_ptr<const PermRep> rep, std::uint32_t point)
    : rep_(std::move(rep)), point_(point) {
  const auto degree = rep_->degree();
  if (point_ >= degree)
    throw InvalidInput(fmt::format("point {} outside 1..{}", point_ + 1, degree));
  const auto& alph = rep_->presentation()->alphabet();
  const auto& images = rep_->images();

  right_index_.assign(degree, -1);
  std::vector<std::uint32_t> coset_point{point_};
  transversal_.push_back(Word(alph));
  right_index_[point_] = 0;
  for (std::size_t i = 0; i < transversal_.size(); ++i) {
    for (std::uint32_t g = 0; g < images.size(); ++g) {
      Word rep_word = transversal_[i];
      std::uint32_t p = coset_point[i];
      const Word step = Word::generator(alph, GeneratorId{g});
      while (true) {
        p = images[g](p);
        if (right_index_[p] >= 0) break;
        rep_word = rep_word * step;
        right_index_[p] = static_cast<std::int64_t>(transversal_.size());
        transversal_.push_back(rep_word);
        coset_point.push_back(p);
      }
    }
  }
  const auto k = transversal_.size();

  right_action_.assign(images.size(), std::vector<std::uint32_t>(k));
  right_inverse_.assign(images.size(), std::vector<std::uint32_t>(k));
  for (std::uint32_t g = 0; g < images.size(); ++g)
    for (std::uint32_t i = 0; i < k; ++i) {
      const auto j = static_cast<std::uint32_t>(right_index_[images[g](coset_point[i])]);
      right_action_[g][i] = j;
      right_inverse_[g][j] = i;
    }

  // Left cosets l H are labelled by point^{l^-1}.
  auto try_left = [&](const std::vector<Word>& reps) {
    left_index_.assign(degree, -1);
    for (std::uint32_t i = 0; i < k; ++i) {
      const auto p = rep_->act(point_, invert(reps[i]));
      if (left_index_[p] >= 0) return false;
      left_index_[p] = i;
    }
    return true;
  };
  left_reps_ = transversal_;
  if (!try_left(left_reps_)) {
    left_reps_.clear();
    for (const auto& t : transversal_) left_reps_.push_back(invert(t));
    left_reps_inverted_ = true;
    if (!try_left(left_reps_)) throw VerificationFailure("inverted transversal is not a left transversal");
  }

  left_action_.assign(images.size(), std::vector<std::uint32_t>(k));
  for (std::uint32_t g = 0; g < images.size(); ++g) {
    const auto g_inv = images[g].inverse();
    for (std::uint32_t i = 0; i < k; ++i) {
      // (g l_i)^-1 = l_i^-1 g^-1
      const auto p = g_inv(rep_->act(point_, invert(left_reps_[i])));
      left_action_[g][i] = static_cast<std::uint32_t>(left_index_[p]);
    }
  }

  for (std::uint32_t i = 0; i < k; ++i) {
    if (rep_->act(point_, transversal_[i]) != coset_point[i])
      throw VerificationFailure("coset table representative does not reach its coset");
  }
}

Permutation CosetTable::left_permutation(GeneratorId g) const {
  return Permutation(left_action_.at(g.index));
}

Permutation CosetTable::left_permutation(const Word& w) const {
  // Left action: (uv) acts as v first, then u.
  Permutation out = Permutation::identity(index());
  for (const auto& s : w.syllables()) {
    const Permutation step =
        s.exponent > 0 ? left_permutation(s.gen) : left_permutation(s.gen).inverse();
    for (int k = 0; k < std::abs(s.exponent); ++k) out = step.then(out);
  }
  return out;
}

std::uint32_t CosetTable::right_coset_of(const Word& w) const {
  const auto idx = right_index_[rep_->act(point_, w)];
  if (idx < 0) throw VerificationFailure("word leaves the orbit");
  return static_cast<std::uint32_t>(idx);
}

std::uint32_t CosetTable::left_coset_of(const Word& w) const {
  const auto idx = left_index_[rep_->act(point_, invert(w))];
  if (idx < 0) throw VerificationFailure("word leaves the orbit");
  return static_cast<std::uint32_t>(idx);
}

bool CosetTable::subgroup_is_normal() const {
  const auto orbit = rep_->orbit(point_);
  const auto& alph = parent()->alphabet();
  for (std::uint32_t i = 0; i < index(); ++i)
    for (std::uint32_t g = 0; g < rep_->images().size(); ++g) {
      const Word gen = transversal_[i] * Word::generator(alph, GeneratorId{g}) *
                       invert(transversal_[right_action_[g][i]]);
      const auto perm = rep_->eval(gen);
      for (auto p : orbit)
        if (perm(p) != p) return false;
    }
  return true;
}

CosetTable coset_table(std::shared_ptr<const PermRep> rep, std::uint32_t point) {
  return CosetTable(std::move(rep), point);
}

Factorization factorize(const CosetTable& table, const Word& g, std::uint32_t i) {
  if (i >= table.index()) throw InvalidInput(fmt::format("coset index {} out of range", i + 1));
  const auto& l = table.left_reps();
  const Word gl = g * l[i];
  const auto j = table.left_coset_of(gl);
  Word h = invert(l[j]) * gl;
  if (!table.contains(h))
    throw VerificationFailure(fmt::format("factorization {} is not in the subgroup", to_string(h)));
  return {j, std::move(h)};
}

Factorization factorize(const CosetTable& table, GeneratorId g, std::uint32_t i) {
  return factorize(table, table.parent()->generator(g), i);
}

}  // namespace knotrep
