#pragma once

// Words in a free group on a finite, named generating set.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sag {

/// A named free generator. Names match [a-z][a-z0-9_]*.
class Generator {
public:
  explicit Generator(std::string name);

  const std::string& name() const noexcept { return name_; }

  static bool is_valid_name(std::string_view name);

  friend bool operator==(const Generator&, const Generator&) = default;

private:
  std::string name_;
};

/// Ordered list of pairwise distinct generators.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> generators);

  static std::shared_ptr<const Alphabet> make(std::vector<Generator> generators);
  static std::shared_ptr<const Alphabet> make(
      const std::vector<std::string>& names);
  /// Keeps `make({"a", "b"})` from matching vector's iterator-pair constructor.
  static std::shared_ptr<const Alphabet> make(std::initializer_list<std::string> names);

  std::size_t size() const noexcept { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const noexcept {
    return generators_;
  }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<Generator> generators_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Letter {
  std::uint32_t generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const noexcept { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over an alphabet. The empty word is the identity.
class Word {
public:
  /// Identity word over `alphabet`.
  explicit Word(AlphabetPtr alphabet);
  /// Freely reduces `letters`; throws UnknownGenerator on an out-of-range index.
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  static Word generator(AlphabetPtr alphabet, std::size_t index, int power = 1);
  static Word commutator(const Word& u, const Word& v);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  Word power(long exponent) const;

  /// Rewrites the word over another alphabet, mapping generator i to
  /// `index_map[i]`.
  Word relabel(AlphabetPtr alphabet, std::span<const std::size_t> index_map) const;

  friend bool operator==(const Word& a, const Word& b);

private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Free reduction by a single left-to-right stack pass.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

Word parse_word(std::string_view text, const AlphabetPtr& alphabet);
std::string render(const Word& w);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

long exponent_sum(const Word& w, const Generator& g);
long exponent_sum(const Word& w, std::size_t generator_index);
/// One entry per alphabet generator.
std::vector<long> exponent_vector(const Word& w);

/// Replaces generator i of `w` by `images[i]`; all images share one alphabet.
Word substitute(const Word& w, std::span<const Word> images,
                const AlphabetPtr& target);

}  // namespace sag
