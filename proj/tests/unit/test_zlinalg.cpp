#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "sag/errors.hpp"
#include "sag/fpgroup.hpp"
#include "sag/zlinalg.hpp"

using namespace sag;
using sag::testing::Rng;

namespace {

FgAbelian G(std::size_t r, std::initializer_list<long> t = {}) {
  return FgAbelian(r, std::vector<Integer>(t.begin(), t.end()));
}

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n && d(i + 1, i + 1) != 0 && (d(i, i) == 0 || d(i + 1, i + 1) % d(i, i) != 0))
      return false;
    if (i + 1 < n && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).d == IntMatrix::identity(2));
  const auto s = smith_normal_form({{2, 4}, {6, 8}});
  CHECK(s.d == IntMatrix({{2, 0}, {0, 4}}));
  CHECK(s.u * IntMatrix({{2, 4}, {6, 8}}) * s.v == s.d);
  CHECK(smith_normal_form({{0}}).d == IntMatrix({{0}}));
  CHECK(smith_normal_form({{0}}).rank() == 0);
  const auto empty = smith_normal_form(IntMatrix(0, 3));
  CHECK(empty.v.rows() == 3);
  CHECK(empty.rank() == 0);
  // Large intermediate values stay exact.
  const auto big = smith_normal_form({{1000000007, 998244353}, {998244353, 1000000009}});
  CHECK(big.u * IntMatrix({{1000000007, 998244353}, {998244353, 1000000009}}) * big.v == big.d);
}

TEST_CASE("smith normal form is deterministic") {
  const IntMatrix a{{6, 4, 2}, {3, 9, 12}, {0, 5, 7}};
  const auto s1 = smith_normal_form(a);
  const auto s2 = smith_normal_form(a);
  CHECK(s1.u == s2.u);
  CHECK(s1.v == s2.v);
}

TEST_CASE("smith normal form on random matrices") {
  Rng rng(2024);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = sag::testing::random_matrix(rng, dim(rng), dim(rng), 9);
    const auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(is_diagonal_chain(s.d));
    if (a.rows() == a.cols()) {
      Integer prod = 1;
      for (std::size_t i = 0; i < a.rows(); ++i) prod *= s.d(i, i);
      CHECK(prod == abs(determinant(a)));
    }
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant({{2, 1}, {7, 4}}) == 1);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant({{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}) == -30);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("cokernels") {
  CHECK(cokernel(IntMatrix(1, 2)) == G(2));
  CHECK(cokernel({{2, 0}, {0, 3}}) == G(0, {6}));
  CHECK(cokernel({{2, 4}, {6, 8}}) == G(0, {2, 4}));
  CHECK(cokernel(IntMatrix::identity(3)).is_trivial());
  CHECK(cokernel(relator_matrix(surface_group(3))) == G(6));
}

TEST_CASE("cokernel invariance under permutations and zero rows") {
  Rng rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = sag::testing::random_matrix(rng, dim(rng), dim(rng), 9);
    const FgAbelian c = cokernel(a);
    std::vector<std::size_t> rp(a.rows()), cp(a.cols());
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix b(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < a.cols(); ++k) b(r, k) = a(rp[r], cp[k]);
    CHECK(cokernel(b) == c);
    IntMatrix z = a;
    z.append_row(std::vector<Integer>(a.cols(), 0));
    CHECK(cokernel(z) == c);
  }
}

TEST_CASE("fg abelian values") {
  CHECK_THROWS_AS(FgAbelian(0, {Integer(1)}), Error);
  CHECK_THROWS_AS(FgAbelian(0, {Integer(2), Integer(3)}), Error);
  CHECK(FgAbelian::from_cyclic_orders({2, 3}) == G(0, {6}));
  CHECK(FgAbelian::from_cyclic_orders({0, 1, 4, 2}) == G(1, {2, 4}));
  CHECK(G(1, {2, 4}).torsion_order() == 8);
  CHECK(G(2, {2, 4}).generator_count() == 4);
  CHECK(direct_sum(G(1, {2}), G(2, {3})) == G(3, {6}));
  CHECK(to_string(G(0)) == "0");
  CHECK(to_string(G(1)) == "Z");
  CHECK(to_string(G(4, {2})) == "Z^4 + Z/2");
  CHECK(to_string(G(0, {2, 4})) == "Z/2 + Z/4");
}

TEST_CASE("abelianization and rank") {
  CHECK(abelianization(surface_group(2)) == G(4));
  CHECK(abelianization(abelian_presentation(G(4, {2}))) == G(4, {2}));
  CHECK(abelianization(free_group(3)) == G(3));
  CHECK(rank(G(4, {2})) == 4);
  CHECK(rank(G(0, {6})) == 0);
  CHECK(rank(G(2)) == 2);
}

TEST_CASE("primary decomposition") {
  const auto z6 = primary_decomposition(G(0, {6}));
  CHECK(z6.size() == 2);
  CHECK(z6.at(2) == std::vector<unsigned>{1});
  CHECK(z6.at(3) == std::vector<unsigned>{1});
  CHECK(primary_decomposition(G(0, {2, 4})).at(2) == std::vector<unsigned>{2, 1});
  CHECK(primary_decomposition(G(3)).empty());
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = sag::testing::random_fg_abelian(rng, 3, 4, 60);
    CHECK(recombine(g.free_rank(), primary_decomposition(g)) == g);
  }
}

TEST_CASE("epimorphism criterion examples") {
  CHECK_FALSE(exists_epimorphism(G(4), G(4, {2})));
  CHECK(exists_epimorphism(G(2), G(2)));
  CHECK_FALSE(exists_epimorphism(G(0, {2, 2}), G(0, {4})));
  CHECK(exists_epimorphism(G(1), G(0, {4})));
  CHECK(exists_epimorphism(G(0, {4}), G(0, {2})));
  CHECK(exists_epimorphism(G(3), G(0, {2, 2, 2})));
  CHECK_FALSE(exists_epimorphism(G(2), G(0, {2, 2, 2})));
  CHECK(exists_epimorphism(G(1, {2}), G(0, {2, 2})));
  CHECK(exists_epimorphism(G(0), G(0)));
  CHECK_FALSE(exists_epimorphism(G(0), G(0, {2})));
}

TEST_CASE("epimorphism criterion properties") {
  Rng rng(31);
  std::vector<FgAbelian> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(sag::testing::random_fg_abelian(rng, 2, 2, 8));
  for (const auto& a : sample) {
    CHECK(exists_epimorphism(a, a));
    CHECK(exists_epimorphism(a, FgAbelian::trivial()));
  }
  for (const auto& a : sample)
    for (const auto& b : sample) {
      if (!exists_epimorphism(a, b)) continue;
      for (const auto& c : sample)
        if (exists_epimorphism(b, c)) CHECK(exists_epimorphism(a, c));
    }
}

TEST_CASE("surjectivity checks") {
  CHECK(is_surjective_onto(IntMatrix::identity(3), G(3), IntMatrix(0, 3)));
  CHECK_FALSE(is_surjective_onto({{2}}, G(1), IntMatrix(0, 1)));
  // Z^2 -> Z/2, both generators to the class of 1.
  CHECK(is_surjective_onto({{1, 1}}, G(0, {2}), {{2}}));
  CHECK_FALSE(is_surjective_onto({{2, 0}}, G(0, {4}), {{4}}));
  CHECK_THROWS_AS(is_surjective_onto({{1, 1}}, G(0, {3}), {{2}}), DimensionMismatch);
  CHECK_THROWS_AS(is_surjective_onto({{1, 1}}, G(2), IntMatrix(0, 2)), DimensionMismatch);
}

TEST_CASE("lattice membership and kernels") {
  CHECK(in_row_lattice({{2, 0}, {0, 3}}, {4, -3}));
  CHECK_FALSE(in_row_lattice({{2, 0}, {0, 3}}, {1, 0}));
  CHECK(in_row_lattice(IntMatrix(0, 2), {0, 0}));
  CHECK_FALSE(in_row_lattice(IntMatrix(0, 2), {0, 1}));

  Rng rng(19);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = sag::testing::random_matrix(rng, dim(rng), dim(rng), 5);
    const auto k = integer_kernel(a);
    CHECK(k.cols() == a.cols());
    CHECK(k.rows() == a.cols() - smith_normal_form(a).rank());
    if (k.rows() > 0) CHECK((a * k.transpose()).is_zero());
    // The kernel is saturated: its cokernel in Z^n is free.
    CHECK(cokernel(k).torsion().empty());
  }
}

TEST_CASE("matrix text format") {
  const auto m = parse_matrix("# a comment\n1 2 3\n\n-4 5 6  # trailing\n");
  CHECK(m == IntMatrix({{1, 2, 3}, {-4, 5, 6}}));
  CHECK(parse_matrix(render_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), FormatError);
  CHECK_THROWS_AS(parse_matrix("1 x\n"), FormatError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
}
