#include <doctest.h>

#include "oracles.hpp"
#include "sag/abhomology.hpp"
#include "sag/asphericity.hpp"

using namespace sag;

namespace {

FgAbelian G(std::size_t r, std::initializer_list<long> t = {}) {
  return FgAbelian(r, std::vector<Integer>(t.begin(), t.end()));
}

// Every group of rank <= 6 with invariant factors from {2,3,4,6}, chain
// length <= 2.
std::vector<FgAbelian> sweep() {
  const std::vector<std::vector<long>> chains{{},     {2},    {3},    {4},    {6},
                                              {2, 2}, {2, 4}, {2, 6}, {3, 3}, {3, 6},
                                              {4, 4}, {6, 6}};
  std::vector<FgAbelian> out;
  for (std::size_t m = 0; m <= 6; ++m)
    for (const auto& c : chains) out.emplace_back(m, std::vector<Integer>(c.begin(), c.end()));
  return out;
}

}  // namespace

TEST_CASE("classification examples") {
  const auto z2 = classify(G(2));
  CHECK(z2.aspherical);
  CHECK(z2.reason == AsphericityReason::IsZ2);
  CHECK(z2.realizable_dims == std::set<unsigned>{2});
  CHECK(z2.class_note == kClassNoteAnotB);

  const auto r3 = classify(G(3, {7}));
  CHECK_FALSE(r3.aspherical);
  CHECK(r3.reason == AsphericityReason::RankThree);
  CHECK(r3.realizable_dims.empty());

  const auto b = classify(G(4, {2}));
  CHECK(b.aspherical);
  CHECK(b.reason == AsphericityReason::RankAtLeast4);
  CHECK(b.pi2_forced_nonzero_in_dim4);
  CHECK(b.class_note == kClassNoteBnotA);

  CHECK(classify(G(0)).reason == AsphericityReason::RankZeroOrOne);
  CHECK(classify(G(1, {3})).reason == AsphericityReason::RankZeroOrOne);
  CHECK(classify(G(2, {2})).reason == AsphericityReason::RankTwoWithTorsion);
  CHECK_FALSE(classify(G(4)).class_note.has_value());
  CHECK_FALSE(classify(G(4, {4})).class_note.has_value());
  CHECK_FALSE(classify(G(3)).aspherical);
  CHECK(classify(G(5)).aspherical);
  CHECK(classify(G(6, {3, 6})).aspherical);
}

TEST_CASE("classification sweep") {
  for (const auto& g : sweep()) {
    INFO(to_string(g));
    const auto v = classify(g);
    const bool expected = (rank(g) == 2 && g.torsion().empty()) || rank(g) >= 4;
    CHECK(v.aspherical == expected);
    CHECK(v.aspherical == (v.reason == AsphericityReason::IsZ2 ||
                           v.reason == AsphericityReason::RankAtLeast4));
    CHECK(v.aspherical == !v.realizable_dims.empty());
    CHECK_FALSE(v.citations.empty());
    for (unsigned d : v.realizable_dims) {
      CHECK(d % 2 == 0);
      if (!(g == G(2))) CHECK(d <= rank(g));
    }
    if (v.aspherical) CHECK(v.pi2_forced_nonzero_in_dim4 == hopf_obstruction_dim4(g));
    CHECK(classify(g) == v);
  }
}

TEST_CASE("parse reasons") {
  for (auto r : {AsphericityReason::IsZ2, AsphericityReason::RankAtLeast4,
                 AsphericityReason::RankZeroOrOne, AsphericityReason::RankTwoWithTorsion,
                 AsphericityReason::RankThree})
    CHECK(parse_reason(to_string(r)) == r);
  CHECK_FALSE(parse_reason("Nope").has_value());
}

TEST_CASE("realizable dimensions") {
  CHECK(realizable_dimensions(G(5, {3})) == std::set<unsigned>{4});
  CHECK(realizable_dimensions(G(8)) == std::set<unsigned>{4, 6, 8});
  CHECK(realizable_dimensions(G(1)).empty());
  CHECK(realizable_dimensions(G(3)).empty());
  CHECK(realizable_dimensions(G(2, {2})).empty());
  CHECK(realizable_dimensions(G(4)) == std::set<unsigned>{4});
}

TEST_CASE("dimension four obstruction") {
  CHECK(hopf_obstruction_dim4(G(4, {2})));
  CHECK_FALSE(hopf_obstruction_dim4(G(4)));
  CHECK(hopf_obstruction_dim4(G(5)));
}

TEST_CASE("dimension four obstruction against the brute-force oracle") {
  const std::vector<std::vector<long>> torsions{{}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {2, 2, 2}};
  for (std::size_t m = 0; m <= 4; ++m)
    for (const auto& t : torsions) {
      const FgAbelian g(m, std::vector<Integer>(t.begin(), t.end()));
      const FgAbelian h3 = group_homology(g, 3);
      if (h3.torsion_order() > 64) continue;
      INFO(to_string(g));
      CHECK(hopf_obstruction_dim4(g) ==
            !sag::testing::brute_force_epimorphism(FgAbelian::free(m), h3));
    }
}

TEST_CASE("covering note") {
  CHECK(covering_note(G(4)).has_value());
  CHECK(classify(G(4)).covering_note.has_value());
  CHECK_FALSE(covering_note(G(2)).has_value());
  CHECK_FALSE(covering_note(G(6)).has_value());
  CHECK_FALSE(covering_note(G(4, {2})).has_value());
}
