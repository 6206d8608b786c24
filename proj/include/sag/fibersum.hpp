#pragma once

// Presentation-level fiber sums and the constructive pipeline that produces
// witness presentations for aspherical abelian groups.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sag/fpgroup.hpp"
#include "sag/zlinalg.hpp"

namespace sag {

/// pi_1 of a fibered total space presented on the fiber generators
/// a1, b1, ..., af, bf: the surface relator first, then extra relators.
class SurfaceFiberedPresentation {
public:
  /// Throws InvalidGenus for f = 0.
  SurfaceFiberedPresentation(std::size_t fiber_genus, std::vector<Word> extra_relators);
  /// Accepts any presentation on exactly the generators a1..bf.
  static SurfaceFiberedPresentation from_presentation(const Presentation& p);

  std::size_t fiber_genus() const noexcept { return fiber_genus_; }
  const Presentation& presentation() const noexcept { return presentation_; }
  const std::vector<Word>& extra_relators() const noexcept { return extra_; }

private:
  std::size_t fiber_genus_;
  std::vector<Word> extra_;
  Presentation presentation_;
};

/// For each base generator (x1, y1, ..., xe, ye in that order), the image of
/// every fiber generator under the bundle's monodromy, as words over the fiber
/// generators. An absent table means the trivial action.
using FiberAction = std::vector<std::vector<std::string>>;

/// Fiber sum with a surface bundle over the genus-e surface; generators are
/// a1..bf, x1, y1, ..., xe, ye. Throws InvalidGenus for e = 0.
Presentation fiber_sum(const SurfaceFiberedPresentation& x, std::size_t base_genus,
                       const std::optional<FiberAction>& action = std::nullopt);
/// Fiber sum with the product bundle: every base generator commutes with every
/// fiber generator.
Presentation fiber_sum_with_trivial_bundle(const SurfaceFiberedPresentation& x,
                                           std::size_t base_genus);

/// Abelianized short surjectivity diagram. Maps are matrices with one row per
/// target generator and one column per source generator; relations have one
/// row per relation and one column per generator.
struct SsdData {
  IntMatrix j_matrix;    // A -> B
  IntMatrix phi_matrix;  // A -> P, onto
  IntMatrix a_relations;
  IntMatrix b_relations;
  IntMatrix p_relations;
};

/// B / j(ker phi). Throws NotSurjective if phi misses part of P.
FgAbelian ssd_quotient(const SsdData& d);

/// Diagram for the product-bundle fiber sum at the abelian level:
/// A = H_1(fiber), B = H_1(fiber x base), P = H_1 of x's total space.
SsdData trivial_bundle_ssd(const SurfaceFiberedPresentation& x, std::size_t base_genus);

struct PresentationChain {
  GroupHom map;             // pi_genus -> abelian_presentation(gamma)
  std::size_t genus = 0;
};

/// Finite presentation of gamma by a surface group, built as
///   pi_{h+1} -> pi_h * Z^2 -> gamma,   h = 2r,
/// where r is the number of generators of gamma, pi_h reaches gamma through
/// the free group F_r, and Z^2 lands on the first two free generators.
/// Throws RankTooSmall when rank(gamma) < 2.
PresentationChain presentation_chain_for(const FgAbelian& gamma);

/// pi_1 of a total space whose fiber group maps onto gamma through `chain`:
/// the surface group modulo all commutators and the kernel of the abelianized
/// chain map.
SurfaceFiberedPresentation realize_over_fiber(const PresentationChain& chain,
                                              const FgAbelian& gamma);

/// Group-theoretic witness that gamma is the fundamental group of a closed
/// symplectically aspherical manifold. Throws NotAspherical otherwise.
Presentation witness_presentation(const FgAbelian& gamma);

}  // namespace sag
