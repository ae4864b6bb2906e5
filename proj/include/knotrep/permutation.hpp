#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "knotrep/presentation.hpp"

namespace knotrep {

/// Permutation of {0, .., d-1} acting on the right: point p goes to
/// images()[p]. Printed and parsed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  /// Parses "(2 5)(3 4)"; "()" or "" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_.at(point); }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Right-action composition: first *this, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// +1 or -1.
  int sign() const;
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Homomorphism from a presented group into S_d. Construction checks that
/// every relator maps to the identity.
class PermRep {
 public:
  PermRep(PresentationPtr presentation, std::vector<Permutation> images);

  const PresentationPtr& presentation() const { return presentation_; }
  const std::vector<Permutation>& images() const { return images_; }
  const Permutation& image(GeneratorId g) const { return images_.at(g.index); }
  std::size_t degree() const { return degree_; }

  /// Left-to-right evaluation.
  Permutation eval(const Word& w) const;
  std::uint32_t act(std::uint32_t point, const Word& w) const;

  bool in_stabilizer(const Word& w, std::uint32_t point) const { return act(point, w) == point; }
  /// Kernel of the action on the orbit of `point`: the normal core of
  /// Stab(point) when the action on that orbit is transitive.
  bool in_kernel(const Word& w) const { return eval(w).is_identity(); }

  std::vector<std::uint32_t> orbit(std::uint32_t point) const;

 private:
  PresentationPtr presentation_;
  std::vector<Permutation> images_;
  std::size_t degree_ = 0;
};

Permutation eval_perm(const PermRep& rep, const Word& w);

/// delta(s) = (2, alpha)(3, alpha-1)..., delta(a) = (1 2 .. alpha) as
/// permutations of degree alpha.
std::pair<Permutation, Permutation> dihedral_images(int alpha);

/// The dihedral representation on a two-bridge presentation. Accepts the
/// (s, a) form, or the (s, t) form with delta(t) = delta(a) delta(s).
PermRep dihedral_rep(PresentationPtr p, int alpha);
/// Dihedral representation on the (s, a) presentation of b(alpha, beta).
PermRep dihedral_rep(const TwoBridgeParams& params);

/// Right regular action of the image group of `rep` on its own elements.
/// Point 0 is the identity, so Stab(0) is the kernel of `rep`.
PermRep regular_rep(const PermRep& rep);

}  // namespace knotrep
