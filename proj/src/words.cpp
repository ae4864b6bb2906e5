#include "knotrep/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep {

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& n = letters_[i].name;
    if (n.empty() || n.find_first_of(" \t\n^()") != std::string::npos || n == "1")
      throw InvalidInput(fmt::format("invalid generator name '{}'", n));
    for (std::size_t j = 0; j < i; ++j)
      if (letters_[j].name == n)
        throw InvalidInput(fmt::format("duplicate generator name '{}'", n));
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names,
                                               bool meridional) {
  std::vector<Letter> letters;
  letters.reserve(names.size());
  for (auto& n : names) letters.push_back({std::move(n), meridional});
  return std::make_shared<const Alphabet>(std::move(letters));
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<Letter> letters) {
  return std::make_shared<const Alphabet>(std::move(letters));
}

std::optional<GeneratorId> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name == name) return GeneratorId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

GeneratorId Alphabet::id(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw InvalidInput(fmt::format("unknown generator '{}'", name));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw InvalidInput("alphabet mismatch between words");
}

// Pushes one syllable onto an already reduced stack, merging and cancelling.
void push_reduced(std::vector<Syllable>& out, Syllable s) {
  if (s.exponent == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exponent += s.exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

}  // namespace

Word Word::reduce(AlphabetPtr alphabet, std::span<const Syllable> raw) {
  Word w(std::move(alphabet));
  const std::size_t n = w.alphabet_ ? w.alphabet_->size() : 0;
  for (const auto& s : raw) {
    if (s.gen.index >= n)
      throw InvalidInput(fmt::format("generator index {} out of range", s.gen.index));
    push_reduced(w.syllables_, s);
  }
  return w;
}

Word Word::generator(AlphabetPtr alphabet, GeneratorId g, int exponent) {
  const Syllable s{g, exponent};
  return reduce(std::move(alphabet), std::span<const Syllable>(&s, 1));
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(std::abs(s.exponent));
  return n;
}

bool Word::operator==(const Word& other) const {
  return syllables_ == other.syllables_ && same_alphabet(alphabet_, other.alphabet_);
}

Word multiply(const Word& u, const Word& v) {
  require_same(u.alphabet(), v.alphabet());
  std::vector<Syllable> raw = u.syllables();
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return Word::reduce(u.alphabet(), raw);
}

Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

Word invert(const Word& w) {
  std::vector<Syllable> raw(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : raw) s.exponent = -s.exponent;
  return Word::reduce(w.alphabet(), raw);
}

Word conjugate(const Word& w, const Word& g) { return multiply(invert(g), multiply(w, g)); }

Word power(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  Word out(w.alphabet());
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
  return out;
}

long exponent_sum(const Word& w) {
  long total = 0;
  for (const auto& s : w.syllables()) {
    if (!w.alphabet()->meridional(s.gen))
      throw InvalidInput(fmt::format("exponent sum undefined: generator '{}' is not meridional",
                                     w.alphabet()->name(s.gen)));
    total += s.exponent;
  }
  return total;
}

WordMap::WordMap(AlphabetPtr src, AlphabetPtr tgt)
    : source(std::move(src)), target(std::move(tgt)), images(source->size()) {}

void WordMap::set(GeneratorId g, Word image) {
  require_same(image.alphabet(), target);
  images.at(g.index) = std::move(image);
}

void WordMap::set(std::string_view name, std::string_view image_text) {
  set(source->id(name), parse_word(target, image_text));
}

const Word& WordMap::image(GeneratorId g) const {
  const auto& img = images.at(g.index);
  if (!img)
    throw InvalidInput(fmt::format("no image for generator '{}'", source->name(g)));
  return *img;
}

bool WordMap::complete() const {
  return std::all_of(images.begin(), images.end(), [](const auto& i) { return i.has_value(); });
}

Word apply_hom(const Word& w, const WordMap& map) {
  require_same(w.alphabet(), map.source);
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    const Word& img = map.image(s.gen);
    const auto& syl = img.syllables();
    for (int k = 0; k < std::abs(s.exponent); ++k) {
      if (s.exponent > 0) {
        raw.insert(raw.end(), syl.begin(), syl.end());
      } else {
        for (auto it = syl.rbegin(); it != syl.rend(); ++it)
          raw.push_back({it->gen, -it->exponent});
      }
    }
  }
  return Word::reduce(map.target, raw);
}

Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<Syllable> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    const auto caret = token.find('^');
    const std::string name = token.substr(0, caret);
    int exponent = 1;
    if (caret != std::string::npos) {
      const std::string e = token.substr(caret + 1);
      const char* first = e.data();
      const char* last = e.data() + e.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc{} || ptr != last || first == last)
        throw InvalidInput(fmt::format("bad exponent in token '{}'", token));
      if (exponent == 0) throw InvalidInput(fmt::format("zero exponent in token '{}'", token));
    }
    raw.push_back({alphabet->id(name), exponent});
  }
  return Word::reduce(alphabet, raw);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet()->name(s.gen);
    if (s.exponent != 1) out += fmt::format("^{}", s.exponent);
  }
  return out;
}

namespace {

using Letters = std::vector<std::pair<std::uint32_t, int>>;

Letters cyclic_letters(const Word& w) {
  Letters out;
  for (const auto& s : w.syllables())
    for (int k = 0; k < std::abs(s.exponent); ++k)
      out.emplace_back(s.gen.index, s.exponent > 0 ? 1 : -1);
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo].first == out[hi - 1].first &&
         out[lo].second == -out[hi - 1].second) {
    ++lo;
    --hi;
  }
  return Letters(out.begin() + static_cast<long>(lo), out.begin() + static_cast<long>(hi));
}

bool is_rotation(const Letters& a, const Letters& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Letters doubled = b;
  doubled.insert(doubled.end(), b.begin(), b.end());
  return std::search(doubled.begin(), doubled.end(), a.begin(), a.end()) != doubled.end();
}

}  // namespace

bool equal_up_to_rotation_and_inversion(const Word& u, const Word& v) {
  require_same(u.alphabet(), v.alphabet());
  const Letters a = cyclic_letters(u);
  return is_rotation(a, cyclic_letters(v)) || is_rotation(a, cyclic_letters(invert(v)));
}

}  // namespace knotrep
