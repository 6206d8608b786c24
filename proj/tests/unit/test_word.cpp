#include <doctest.h>

#include "oracles.hpp"
#include "sag/errors.hpp"
#include "sag/word.hpp"

using namespace sag;
using sag::testing::Rng;

namespace {

AlphabetPtr two_handles() { return Alphabet::make({"a1", "b1", "a2", "b2"}); }

std::vector<Letter> L(std::initializer_list<std::pair<std::uint32_t, int>> xs) {
  std::vector<Letter> out;
  for (auto [g, s] : xs) out.push_back({g, s});
  return out;
}

// Cancels adjacent inverse pairs in a random order until none is left.
std::vector<Letter> reduce_randomly(std::vector<Letter> w, Rng& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].generator == w[i + 1].generator && w[i].sign == -w[i + 1].sign)
        spots.push_back(i);
    if (spots.empty()) return w;
    std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
    const std::size_t i = spots[pick(rng)];
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
  }
}

}  // namespace

TEST_CASE("generator names") {
  CHECK(Generator::is_valid_name("a1"));
  CHECK(Generator::is_valid_name("x_2"));
  CHECK_FALSE(Generator::is_valid_name("1"));
  CHECK_FALSE(Generator::is_valid_name("A"));
  CHECK_FALSE(Generator::is_valid_name(""));
  CHECK_FALSE(Generator::is_valid_name("a'"));
  CHECK_THROWS_AS(Generator("B2"), InvalidGenerator);
  CHECK_THROWS_AS(Alphabet::make({"a", "a"}), InvalidGenerator);
}

TEST_CASE("parse literal words") {
  const auto alpha = two_handles();
  CHECK(parse_word("a1 b1 a1^-1 b1^-1", alpha).letters() ==
        L({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
  CHECK(parse_word("[a1,b1]", alpha).letters() == L({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
  CHECK(parse_word("a1 a1^-1", alpha).is_identity());
  CHECK(parse_word("1", alpha).is_identity());
  CHECK(parse_word("a1^3", alpha).letters() == L({{0, 1}, {0, 1}, {0, 1}}));
  CHECK(parse_word("(a1 b1)^-1", alpha) == parse_word("b1^-1 a1^-1", alpha));
  CHECK(parse_word("a1*b1", alpha) == parse_word("a1 b1", alpha));
  CHECK(parse_word("[a1, [b1, a2]]", alpha).length() == 10);
}

TEST_CASE("parse errors") {
  const auto alpha = two_handles();
  CHECK_THROWS_AS(parse_word("a3", alpha), UnknownGenerator);
  CHECK_THROWS_AS(parse_word("a1^", alpha), SyntaxError);
  CHECK_THROWS_AS(parse_word("[a1 b1]", alpha), SyntaxError);
  CHECK_THROWS_AS(parse_word("(a1", alpha), SyntaxError);
  CHECK_THROWS_AS(parse_word("", alpha), SyntaxError);
  CHECK_THROWS_AS(parse_word("a1 )", alpha), SyntaxError);
  try {
    parse_word("a1 b1 ?", alpha);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("multiply and invert") {
  const auto alpha = two_handles();
  const auto w = [&](const char* s) { return parse_word(s, alpha); };
  CHECK(multiply(w("a1"), w("a1^-1")).is_identity());
  CHECK(multiply(Word(alpha), w("a1 b2")) == w("a1 b2"));
  CHECK(multiply(w("a1 b1"), w("b1^-1 a2")) == w("a1 a2"));
  CHECK(invert(w("a1 b1")) == w("b1^-1 a1^-1"));
  CHECK(invert(Word(alpha)).is_identity());
  CHECK(invert(w("[a1,b1]")) == w("[b1,a1]"));
  const auto other = Alphabet::make({"a1", "b1"});
  CHECK_THROWS_AS(multiply(w("a1"), parse_word("a1", other)), AlphabetMismatch);
  // Equal-valued alphabets built separately are the same alphabet.
  const auto copy = Alphabet::make({"a1", "b1", "a2", "b2"});
  CHECK(multiply(w("a1"), parse_word("a1^-1", copy)).is_identity());
}

TEST_CASE("cyclic reduction") {
  const auto alpha = two_handles();
  const auto w = [&](const char* s) { return parse_word(s, alpha); };
  CHECK(cyclic_reduce(w("a1 b1 a1^-1")) == w("b1"));
  CHECK(cyclic_reduce(w("[a1,b1]")) == w("[a1,b1]"));
  CHECK(cyclic_reduce(w("a2^-1 [a1,b1] a2")) == w("[a1,b1]"));
  CHECK(cyclic_reduce(w("a1 a2 a1^-1")) == w("a2"));
  CHECK(cyclic_reduce(Word(alpha)).is_identity());
  CHECK(is_cyclically_reduced(w("a1 b1")));
  CHECK_FALSE(is_cyclically_reduced(w("a1 b1 a1^-1")));
}

TEST_CASE("exponent sums") {
  const auto alpha = two_handles();
  const auto w = [&](const char* s) { return parse_word(s, alpha); };
  CHECK(exponent_sum(w("[a1,b1]"), Generator("a1")) == 0);
  CHECK(exponent_sum(w("a1 a1 a1"), Generator("a1")) == 3);
  CHECK(exponent_sum(w("[a1,b1][a2,b2]"), Generator("b2")) == 0);
  CHECK(exponent_vector(w("a1^2 b2^-1 a1")) == std::vector<long>{3, 0, 0, -1});
  CHECK_THROWS_AS(exponent_sum(w("a1"), Generator("c")), UnknownGenerator);
}

TEST_CASE("render") {
  const auto alpha = two_handles();
  CHECK(render(Word(alpha)) == "1");
  CHECK(render(parse_word("[a1,b1]", alpha)) == "a1 b1 a1^-1 b1^-1");
  CHECK(render(parse_word("a2^-2", alpha)) == "a2^-1 a2^-1");
}

TEST_CASE("commutator, power, substitute, relabel") {
  const auto alpha = two_handles();
  const auto w = [&](const char* s) { return parse_word(s, alpha); };
  CHECK(Word::commutator(w("a1"), w("b1")) == w("a1 b1 a1^-1 b1^-1"));
  CHECK(w("a1 b1").power(2) == w("a1 b1 a1 b1"));
  CHECK(w("a1 b1").power(-1) == w("b1^-1 a1^-1"));
  CHECK(w("a1 b1").power(0).is_identity());

  const auto target = Alphabet::make({"x", "y"});
  const std::vector<Word> images{parse_word("x y", target), parse_word("y", target),
                                 Word(target), parse_word("x^-1", target)};
  CHECK(substitute(w("a1 b1^-1 a2 b2"), images, target) == parse_word("x x^-1", target));
  CHECK(substitute(w("a1 b1"), images, target) == parse_word("x y y", target));

  const std::vector<std::size_t> map{1, 0, 1, 0};
  CHECK(w("a1 b1 a2").relabel(target, map) == parse_word("y x y", target));
}

TEST_CASE("word properties on random input") {
  Rng rng(101);
  const auto alpha = two_handles();
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = sag::testing::random_word(rng, alpha, 20);
    const Word v = sag::testing::random_word(rng, alpha, 20);
    const Word x = sag::testing::random_word(rng, alpha, 20);
    CHECK(multiply(multiply(u, v), x) == multiply(u, multiply(v, x)));
    CHECK(parse_word(render(u), alpha) == u);
    CHECK(multiply(u, invert(u)).is_identity());
    const Word c = cyclic_reduce(u);
    CHECK(is_cyclically_reduced(c));
    for (std::size_t g = 0; g < alpha->size(); ++g)
      CHECK(exponent_sum(c, g) == exponent_sum(u, g));
  }
}

TEST_CASE("free reduction is confluent") {
  Rng rng(7);
  const auto alpha = Alphabet::make({"a", "b"});
  std::uniform_int_distribution<std::size_t> len(0, 64);
  std::uniform_int_distribution<std::uint32_t> gen(0, 1);
  std::bernoulli_distribution sign(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw(len(rng));
    for (auto& l : raw) l = {gen(rng), sign(rng) ? 1 : -1};
    const Word canonical(alpha, raw);
    for (int order = 0; order < 5; ++order)
      CHECK(reduce_randomly(raw, rng) == canonical.letters());
  }
}
