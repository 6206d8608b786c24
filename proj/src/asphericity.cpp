#include "sag/asphericity.hpp"

#include "sag/abhomology.hpp"

namespace sag {

namespace {

const char* const kCiteClassification =
    "abelian classification: aspherical iff Z^2 or rank >= 4";
const char* const kCiteConstruction =
    "rank >= 4: fiber sum of a Lefschetz fibration over Z^(m-2)+T with the trivial "
    "bundle over the torus realizes (Z^(m-2)+T) x Z^2";
const char* const kCiteDimensionThree =
    "real cohomological dimension 3 forces a 2-dimensional realization, contradiction";
const char* const kCiteRankTwoTorsion =
    "cohomology vanishing above degree 2 forces a surface, which must be the torus";
const char* const kCiteSmallRank =
    "finite groups and Z are not symplectically aspherical (external result, trusted)";
const char* const kCiteDimensions =
    "realizable dimensions: exactly the even 2n with 4 <= 2n <= rank";
const char* const kCiteHopf =
    "Hopf sequence: no epimorphism H_3(N) = Z^rank -> H_3(pi_1 N), so pi_2(N) != 0";
const char* const kCiteAllRealizations =
    "every realization has dimension 4, so pi_2 != 0 for all of them";

bool is_z4_plus_z2(const FgAbelian& g) {
  return g == FgAbelian(4, {Integer(2)});
}

}  // namespace

std::string to_string(AsphericityReason reason) {
  switch (reason) {
    case AsphericityReason::IsZ2: return "IsZ2";
    case AsphericityReason::RankAtLeast4: return "RankAtLeast4";
    case AsphericityReason::RankZeroOrOne: return "RankZeroOrOne";
    case AsphericityReason::RankTwoWithTorsion: return "RankTwoWithTorsion";
    case AsphericityReason::RankThree: return "RankThree";
  }
  return "?";
}

std::optional<AsphericityReason> parse_reason(std::string_view text) {
  for (auto r : {AsphericityReason::IsZ2, AsphericityReason::RankAtLeast4,
                 AsphericityReason::RankZeroOrOne, AsphericityReason::RankTwoWithTorsion,
                 AsphericityReason::RankThree})
    if (to_string(r) == text) return r;
  return std::nullopt;
}

std::set<unsigned> realizable_dimensions(const FgAbelian& gamma) {
  const std::size_t m = rank(gamma);
  if (m == 2 && gamma.torsion().empty()) return {2};
  std::set<unsigned> dims;
  if (m >= 4)
    for (unsigned d = 4; d <= m; d += 2) dims.insert(d);
  return dims;
}

bool hopf_obstruction_dim4(const FgAbelian& gamma) {
  // H_3(N) = H^1(N) = Hom(gamma, Z) by duality.
  return !exists_epimorphism(FgAbelian::free(rank(gamma)), group_homology(gamma, 3));
}

std::optional<std::string> covering_note(const FgAbelian& gamma) {
  if (!(gamma == FgAbelian::free(4))) return std::nullopt;
  return "a two-sheeted cover of a 4-dimensional realization of Z^4 + Z/2 is a "
         "closed symplectically aspherical 4-manifold with pi_1 = Z^4 and pi_2 != 0";
}

AsphericityVerdict classify(const FgAbelian& gamma) {
  AsphericityVerdict v;
  const std::size_t m = rank(gamma);
  v.citations.push_back(kCiteClassification);

  if (m == 2 && gamma.torsion().empty()) {
    v.aspherical = true;
    v.reason = AsphericityReason::IsZ2;
    v.class_note = kClassNoteAnotB;
  } else if (m >= 4) {
    v.aspherical = true;
    v.reason = AsphericityReason::RankAtLeast4;
    v.citations.push_back(kCiteConstruction);
  } else if (m <= 1) {
    v.reason = AsphericityReason::RankZeroOrOne;
    v.citations.push_back(kCiteSmallRank);
  } else if (m == 2) {
    v.reason = AsphericityReason::RankTwoWithTorsion;
    v.citations.push_back(kCiteRankTwoTorsion);
  } else if (real_cohomological_dimension(gamma) == 3) {
    v.reason = AsphericityReason::RankThree;
    v.citations.push_back(kCiteDimensionThree);
  }

  if (!v.aspherical) return v;

  v.realizable_dims = realizable_dimensions(gamma);
  v.citations.push_back(kCiteDimensions);
  v.pi2_forced_nonzero_in_dim4 = hopf_obstruction_dim4(gamma);
  if (v.pi2_forced_nonzero_in_dim4) v.citations.push_back(kCiteHopf);
  if (is_z4_plus_z2(gamma)) {
    v.class_note = kClassNoteBnotA;
    v.citations.push_back(kCiteAllRealizations);
  }
  v.covering_note = covering_note(gamma);
  return v;
}

}  // namespace sag
