#pragma once

#include <memory>
#include <vector>

#include "knotrep/words.hpp"

namespace knotrep {

/// Finite presentation <generators | relators>. Relators are stored as
/// single words r with r = 1, reduced and nonempty.
class Presentation {
 public:
  Presentation(AlphabetPtr alphabet, std::vector<Word> relators);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return alphabet_->size(); }

  Word generator(GeneratorId g, int exponent = 1) const {
    return Word::generator(alphabet_, g, exponent);
  }
  Word generator(std::string_view name, int exponent = 1) const {
    return generator(alphabet_->id(name), exponent);
  }
  Word parse(std::string_view text) const { return parse_word(alphabet_, text); }
  Word identity() const { return Word(alphabet_); }

  bool operator==(const Presentation& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> relators_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b);

/// Parameters of the two-bridge knot b(alpha, beta).
struct TwoBridgeParams {
  int alpha = 0;
  int beta = 0;

  /// Throws InvalidInput unless alpha is odd and >= 3, 0 < beta < alpha and
  /// gcd(alpha, beta) = 1.
  void validate() const;
};

/// eps_k = (-1)^floor(k beta / alpha) for k = 1 .. alpha-1, in exact integers.
std::vector<int> two_bridge_signs(const TwoBridgeParams& p);

/// <s, t | (l_s s)(t l_s)^-1> with l_s = s^e1 t^e2 s^e3 ... t^e_{alpha-1};
/// both generators meridional.
Presentation two_bridge_presentation(const TwoBridgeParams& p);

/// Same group on generators (s, a) with a = t s^-1; only s is meridional.
Presentation two_bridge_sa_presentation(const TwoBridgeParams& p);

/// The substitutions t -> a s and a -> t s^-1 between the two forms above.
WordMap st_to_sa_map(const Presentation& st, const Presentation& sa);
WordMap sa_to_st_map(const Presentation& sa, const Presentation& st);

/// Rewrites p over `old_to_new.target`. The two maps must be mutually
/// inverse on generators, which is checked by free reduction; throws
/// VerificationFailure otherwise.
Presentation change_generators(const Presentation& p, const WordMap& old_to_new,
                               const WordMap& new_to_old);

}  // namespace knotrep
