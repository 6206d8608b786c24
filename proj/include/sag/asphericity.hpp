#pragma once

// Which finitely generated abelian groups are fundamental groups of closed
// symplectically aspherical manifolds, in which dimensions, and when pi_2 of
// a four-dimensional realization is forced to be nonzero.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sag/zlinalg.hpp"

namespace sag {

enum class AsphericityReason {
  IsZ2,
  RankAtLeast4,
  RankZeroOrOne,
  RankTwoWithTorsion,
  RankThree,
};

std::string to_string(AsphericityReason reason);
std::optional<AsphericityReason> parse_reason(std::string_view text);

struct AsphericityVerdict {
  bool aspherical = false;
  AsphericityReason reason = AsphericityReason::RankZeroOrOne;
  std::set<unsigned> realizable_dims;
  /// Only meaningful when aspherical.
  bool pi2_forced_nonzero_in_dim4 = false;
  std::optional<std::string> class_note;
  std::optional<std::string> covering_note;
  std::vector<std::string> citations;

  friend bool operator==(const AsphericityVerdict&, const AsphericityVerdict&) = default;
};

AsphericityVerdict classify(const FgAbelian& gamma);

/// Even dimensions 2n of closed symplectically aspherical manifolds with
/// fundamental group gamma.
std::set<unsigned> realizable_dimensions(const FgAbelian& gamma);

/// True when a closed 4-manifold with fundamental group gamma and vanishing
/// pi_2 cannot exist: Z^rank has no epimorphism onto H_3(gamma).
bool hopf_obstruction_dim4(const FgAbelian& gamma);

/// Report text for gamma = Z^4, absent otherwise.
std::optional<std::string> covering_note(const FgAbelian& gamma);

inline const std::string kClassNoteAnotB = "𝒜∖ℬ";
inline const std::string kClassNoteBnotA = "ℬ∖𝒜";

}  // namespace sag
