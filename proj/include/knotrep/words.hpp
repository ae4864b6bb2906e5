#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotrep {

struct GeneratorId {
  std::uint32_t index = 0;
  auto operator<=>(const GeneratorId&) const = default;
};

/// Named, ordered generator list. Each generator carries a meridional flag;
/// the exponent-sum homomorphism onto Z is only defined on words whose
/// letters are all meridional.
class Alphabet {
 public:
  struct Letter {
    std::string name;
    bool meridional = false;
    bool operator==(const Letter&) const = default;
  };

  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);

  /// All generators share one meridional flag.
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names,
                                              bool meridional = false);
  static std::shared_ptr<const Alphabet> make(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](GeneratorId g) const { return letters_.at(g.index); }
  const std::string& name(GeneratorId g) const { return letters_.at(g.index).name; }
  bool meridional(GeneratorId g) const { return letters_.at(g.index).meridional; }
  const std::vector<Letter>& letters() const { return letters_; }

  std::optional<GeneratorId> find(std::string_view name) const;
  /// Throws InvalidInput for unknown names.
  GeneratorId id(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Letter> letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Pointer-equal or structurally equal.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Syllable {
  GeneratorId gen;
  int exponent = 0;
  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word in syllable (run-length) form. Adjacent syllables
/// carry distinct generators and no exponent is zero.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  /// Freely reduces an arbitrary syllable list.
  static Word reduce(AlphabetPtr alphabet, std::span<const Syllable> raw);
  static Word generator(AlphabetPtr alphabet, GeneratorId g, int exponent = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Number of letters, i.e. the sum of absolute exponents.
  std::size_t length() const;

  bool operator==(const Word& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Syllable> syllables_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
/// g^-1 w g.
Word conjugate(const Word& w, const Word& g);
Word power(const Word& w, int k);
Word operator*(const Word& u, const Word& v);

/// Total exponent; only defined when every letter of w is meridional.
long exponent_sum(const Word& w);

/// Substitution homomorphism between free groups: generator g of `source`
/// maps to images[g], a word over `target`.
struct WordMap {
  AlphabetPtr source;
  AlphabetPtr target;
  std::vector<std::optional<Word>> images;

  WordMap() = default;
  WordMap(AlphabetPtr src, AlphabetPtr tgt);

  void set(GeneratorId g, Word image);
  void set(std::string_view name, std::string_view image_text);
  const Word& image(GeneratorId g) const;
  bool complete() const;
};

Word apply_hom(const Word& w, const WordMap& map);

/// Tokens `name^k` separated by whitespace; `^1` may be omitted; `1` or an
/// empty string is the empty word.
Word parse_word(const AlphabetPtr& alphabet, std::string_view text);
std::string to_string(const Word& w);

/// True iff u is a cyclic rotation of v (as letter sequences after cyclic
/// reduction) or of v^-1.
bool equal_up_to_rotation_and_inversion(const Word& u, const Word& v);

}  // namespace knotrep
