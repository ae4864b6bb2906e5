#include "knotrep/presentation.hpp"

#include <numeric>

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep {

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
  if (!alphabet_) throw InvalidInput("presentation without alphabet");
  for (const auto& r : relators_) {
    if (!same_alphabet(r.alphabet(), alphabet_))
      throw InvalidInput("relator over a different alphabet");
    if (r.empty()) throw InvalidInput("empty relator");
  }
}

bool Presentation::operator==(const Presentation& other) const {
  return same_alphabet(alphabet_, other.alphabet_) && relators_ == other.relators_;
}

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void TwoBridgeParams::validate() const {
  if (alpha < 3 || alpha % 2 == 0)
    throw InvalidInput(fmt::format("alpha must be odd and >= 3 (got {})", alpha));
  if (beta <= 0 || beta >= alpha)
    throw InvalidInput(fmt::format("beta must satisfy 0 < beta < alpha (got {})", beta));
  if (std::gcd(alpha, beta) != 1)
    throw InvalidInput(fmt::format("gcd(alpha, beta) must be 1 (got {}, {})", alpha, beta));
}

std::vector<int> two_bridge_signs(const TwoBridgeParams& p) {
  p.validate();
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(p.alpha - 1));
  for (int k = 1; k < p.alpha; ++k) eps.push_back(((k * p.beta) / p.alpha) % 2 == 0 ? 1 : -1);
  return eps;
}

Presentation two_bridge_presentation(const TwoBridgeParams& p) {
  const auto eps = two_bridge_signs(p);
  auto alphabet = Alphabet::make({"s", "t"}, /*meridional=*/true);
  const GeneratorId s{0}, t{1};

  std::vector<Syllable> ls;
  for (std::size_t k = 0; k < eps.size(); ++k) ls.push_back({k % 2 == 0 ? s : t, eps[k]});
  const Word l_s = Word::reduce(alphabet, ls);
  const Word sw = Word::generator(alphabet, s);
  const Word tw = Word::generator(alphabet, t);
  return Presentation(alphabet, {(l_s * sw) * invert(tw * l_s)});
}

WordMap st_to_sa_map(const Presentation& st, const Presentation& sa) {
  WordMap m(st.alphabet(), sa.alphabet());
  m.set("s", "s");
  m.set("t", "a s");
  return m;
}

WordMap sa_to_st_map(const Presentation& sa, const Presentation& st) {
  WordMap m(sa.alphabet(), st.alphabet());
  m.set("s", "s");
  m.set("a", "t s^-1");
  return m;
}

Presentation two_bridge_sa_presentation(const TwoBridgeParams& p) {
  const Presentation st = two_bridge_presentation(p);
  const Presentation sa_shape(Alphabet::make(std::vector<Alphabet::Letter>{{"s", true}, {"a", false}}), {});
  return change_generators(st, st_to_sa_map(st, sa_shape), sa_to_st_map(sa_shape, st));
}

Presentation change_generators(const Presentation& p, const WordMap& old_to_new,
                               const WordMap& new_to_old) {
  if (!same_alphabet(old_to_new.source, p.alphabet()) ||
      !same_alphabet(new_to_old.target, p.alphabet()) ||
      !same_alphabet(old_to_new.target, new_to_old.source))
    throw InvalidInput("substitution maps do not match the presentation");

  for (std::uint32_t i = 0; i < p.generator_count(); ++i) {
    const Word g = p.generator(GeneratorId{i});
    if (apply_hom(apply_hom(g, old_to_new), new_to_old) != g)
      throw VerificationFailure(
          fmt::format("substitution round trip fails on '{}'", p.alphabet()->name(GeneratorId{i})));
  }
  const auto& target = old_to_new.target;
  for (std::uint32_t i = 0; i < target->size(); ++i) {
    const Word h = Word::generator(target, GeneratorId{i});
    if (apply_hom(apply_hom(h, new_to_old), old_to_new) != h)
      throw VerificationFailure(
          fmt::format("substitution round trip fails on '{}'", target->name(GeneratorId{i})));
  }

  std::vector<Word> relators;
  relators.reserve(p.relators().size());
  for (const auto& r : p.relators()) relators.push_back(apply_hom(r, old_to_new));
  return Presentation(target, std::move(relators));
}

}  // namespace knotrep
