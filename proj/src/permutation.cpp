#include "knotrep/permutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto p : images_) {
    if (p >= images_.size() || seen[p]) throw InvalidInput("permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  auto images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidInput(fmt::format("bad cycle notation '{}'", text));
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw InvalidInput(fmt::format("unterminated cycle in '{}'", text));
    std::string body(text.substr(pos + 1, close - pos - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<std::uint32_t> cycle;
    long v = 0;
    while (in >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw InvalidInput(fmt::format("point {} outside 1..{}", v, degree));
      const auto p = static_cast<std::uint32_t>(v - 1);
      if (used[p]) throw InvalidInput(fmt::format("point {} repeated in '{}'", v, text));
      used[p] = true;
      cycle.push_back(p);
    }
    if (!in.eof()) throw InvalidInput(fmt::format("bad token in cycle '{}'", body));
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree()) throw InvalidInput("permutation degree mismatch");
  std::vector<std::uint32_t> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = other.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::sign() const {
  std::vector<bool> seen(degree(), false);
  int s = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermRep::PermRep(PresentationPtr presentation, std::vector<Permutation> images)
    : presentation_(std::move(presentation)), images_(std::move(images)) {
  if (images_.size() != presentation_->generator_count())
    throw InvalidInput("permutation representation needs one image per generator");
  degree_ = images_.empty() ? 0 : images_.front().degree();
  for (const auto& p : images_)
    if (p.degree() != degree_) throw InvalidInput("permutation images of different degrees");
  for (const auto& r : presentation_->relators())
    if (!eval(r).is_identity())
      throw VerificationFailure(
          fmt::format("relator {} does not map to the identity permutation", to_string(r)));
}

Permutation PermRep::eval(const Word& w) const {
  if (!same_alphabet(w.alphabet(), presentation_->alphabet()))
    throw InvalidInput("word is not over the representation's alphabet");
  Permutation out = Permutation::identity(degree_);
  for (const auto& s : w.syllables()) {
    const Permutation step = s.exponent > 0 ? images_[s.gen.index] : images_[s.gen.index].inverse();
    for (int k = 0; k < std::abs(s.exponent); ++k) out = out.then(step);
  }
  return out;
}

std::uint32_t PermRep::act(std::uint32_t point, const Word& w) const {
  if (point >= degree_) throw InvalidInput(fmt::format("point {} outside 1..{}", point + 1, degree_));
  return eval(w)(point);
}

std::vector<std::uint32_t> PermRep::orbit(std::uint32_t point) const {
  if (point >= degree_) throw InvalidInput(fmt::format("point {} outside 1..{}", point + 1, degree_));
  std::vector<std::uint32_t> out{point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : images_) {
      const auto q = g(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  return out;
}

Permutation eval_perm(const PermRep& rep, const Word& w) { return rep.eval(w); }

std::pair<Permutation, Permutation> dihedral_images(int alpha) {
  if (alpha < 3 || alpha % 2 == 0)
    throw InvalidInput(fmt::format("alpha must be odd and >= 3 (got {})", alpha));
  const auto d = static_cast<std::uint32_t>(alpha);
  std::vector<std::uint32_t> s(d), a(d);
  // 1-based: s fixes 1 and swaps i with alpha + 2 - i; a sends i to i + 1.
  s[0] = 0;
  for (std::uint32_t i = 1; i < d; ++i) s[i] = d - i;
  for (std::uint32_t i = 0; i < d; ++i) a[i] = (i + 1) % d;
  return {Permutation(std::move(s)), Permutation(std::move(a))};
}

PermRep dihedral_rep(PresentationPtr p, int alpha) {
  const auto [s, a] = dihedral_images(alpha);
  const auto& alph = *p->alphabet();
  if (alph.size() != 2 || !alph.find("s"))
    throw InvalidInput("dihedral representation needs generators (s, a) or (s, t)");
  std::vector<Permutation> images(2);
  images[alph.id("s").index] = s;
  if (auto ga = alph.find("a")) {
    images[ga->index] = a;
  } else if (auto gt = alph.find("t")) {
    images[gt->index] = a.then(s);
  } else {
    throw InvalidInput("dihedral representation needs generators (s, a) or (s, t)");
  }
  return PermRep(std::move(p), std::move(images));
}

PermRep dihedral_rep(const TwoBridgeParams& params) {
  return dihedral_rep(std::make_shared<const Presentation>(two_bridge_sa_presentation(params)),
                      params.alpha);
}

PermRep regular_rep(const PermRep& rep) {
  std::vector<Permutation> elements{Permutation::identity(rep.degree())};
  std::map<Permutation, std::uint32_t> index{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : rep.images()) {
      Permutation next = elements[i].then(g);
      if (index.emplace(next, static_cast<std::uint32_t>(elements.size())).second)
        elements.push_back(std::move(next));
    }

  std::vector<Permutation> images;
  for (const auto& g : rep.images()) {
    std::vector<std::uint32_t> img(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) img[e] = index.at(elements[e].then(g));
    images.emplace_back(std::move(img));
  }
  return PermRep(rep.presentation(), std::move(images));
}

}  // namespace knotrep
