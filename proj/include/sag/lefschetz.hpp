#pragma once

// Lefschetz fibrations over the sphere, described by their monodromy
// factorization: an ordered list of signed Dehn twists about vanishing cycles
// on a closed fiber of genus h.

#include <string>
#include <string_view>
#include <vector>

#include "sag/fpgroup.hpp"
#include "sag/zlinalg.hpp"

namespace sag {

/// Class in H_1(fiber; Z) in the basis a1, b1, ..., ag, bg, paired by
/// <a_i, b_i> = 1 = -<b_i, a_i>.
class HomologyClass {
public:
  explicit HomologyClass(std::vector<Integer> coordinates);

  std::size_t genus() const noexcept { return coordinates_.size() / 2; }
  const std::vector<Integer>& coordinates() const noexcept { return coordinates_; }

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

private:
  std::vector<Integer> coordinates_;
};

Integer intersection_pairing(const HomologyClass& x, const HomologyClass& y);
/// Gram matrix of the pairing.
IntMatrix symplectic_form(std::size_t genus);

/// Curve on the fiber as a word in pi_1, together with its homology class.
class VanishingCycle {
public:
  /// The word is cyclically reduced; its alphabet must be that of the
  /// surface group of the given genus.
  VanishingCycle(std::size_t genus, const Word& word);

  const Word& word() const noexcept { return word_; }
  const HomologyClass& homology() const noexcept { return homology_; }

private:
  Word word_;
  HomologyClass homology_;
};

enum class TwistSign { Positive = 1, Negative = -1 };

struct Twist {
  VanishingCycle cycle;
  TwistSign sign = TwistSign::Positive;
};

class MonodromyFactorization {
public:
  explicit MonodromyFactorization(std::size_t fiber_genus,
                                  std::vector<Twist> twists = {},
                                  std::string label = {});

  std::size_t fiber_genus() const noexcept { return fiber_genus_; }
  const std::vector<Twist>& twists() const noexcept { return twists_; }
  const std::string& label() const noexcept { return label_; }
  const Presentation& fiber_group() const noexcept { return fiber_group_; }

  /// Parses `word` over the fiber group and appends the twist.
  void add(TwistSign sign, std::string_view word);
  /// Concatenation of factorizations over the same fiber.
  MonodromyFactorization then(const MonodromyFactorization& other) const;

private:
  std::size_t fiber_genus_;
  Presentation fiber_group_;
  std::vector<Twist> twists_;
  std::string label_;
};

/// x -> x + sign * <x, c> c, acting on column vectors.
IntMatrix twist_matrix(const HomologyClass& c, TwistSign sign);
/// T_n ... T_1: the first twist acts first.
IntMatrix monodromy_product(const MonodromyFactorization& m);
/// Necessary condition only: the monodromy acts trivially on H_1.
bool homology_trivial(const MonodromyFactorization& m);

struct TotalSpaceGroup {
  Presentation presentation;
  /// Set when the homological check fails, in which case the presentation is
  /// not known to describe an actual fibration's total space.
  bool caveat = false;
};

/// pi_1(fiber) modulo the normal closure of the vanishing cycles.
TotalSpaceGroup total_space_pi1(const MonodromyFactorization& m);

/// 2 (2 - 2h) + n for n critical points over the sphere.
long euler_characteristic(const MonodromyFactorization& m);

/// File format:
///   fibration <label>
///   fiber_genus <h>
///   cycle <+|-> <word>
MonodromyFactorization parse_factorization(std::string_view text);
std::string render_factorization(const MonodromyFactorization& m);

}  // namespace sag
