#pragma once

// Finitely presented groups and homomorphisms between them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sag/word.hpp"
#include "sag/zlinalg.hpp"

namespace sag {

/// <generators | relators>. Relators are stored freely and cyclically
/// reduced; identity relators are dropped.
class Presentation {
public:
  Presentation();
  Presentation(AlphabetPtr generators, std::vector<Word> relators,
               std::optional<std::string> label = std::nullopt);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t generator_count() const noexcept { return alphabet_->size(); }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const std::optional<std::string>& label() const noexcept { return label_; }

  Presentation with_label(std::string label) const;
  Word word(std::string_view text) const { return parse_word(text, alphabet_); }
  Word identity() const { return Word(alphabet_); }
  Word generator(std::size_t i) const { return Word::generator(alphabet_, i); }

  /// Generators and relators agree; the label is ignored.
  friend bool operator==(const Presentation& a, const Presentation& b);

private:
  AlphabetPtr alphabet_;
  std::vector<Word> relators_;
  std::optional<std::string> label_;
};

/// Homomorphism given by generator images. Construction certifies only the
/// abelianized compatibility: each source relator must map into the target's
/// relation lattice. Throws InvalidHomomorphism otherwise.
class GroupHom {
public:
  GroupHom(Presentation source, Presentation target, std::vector<Word> images);

  static GroupHom identity(const Presentation& p);

  const Presentation& source() const noexcept { return source_; }
  const Presentation& target() const noexcept { return target_; }
  const std::vector<Word>& images() const noexcept { return images_; }

  Word apply(const Word& w) const;

private:
  Presentation source_;
  Presentation target_;
  std::vector<Word> images_;
};

Presentation free_group(std::size_t rank);
Presentation surface_group(std::size_t genus);
/// Product of commutators [a1,b1]...[ag,bg] over `alphabet`, whose first 2g
/// generators are a1,b1,...
Word surface_relator(const AlphabetPtr& alphabet, std::size_t genus,
                     std::size_t first_index = 0);

/// Second argument's generators are renamed on clash by appending `_k` for
/// the smallest k >= 1 that makes them unique.
Presentation free_product(const Presentation& p, const Presentation& q);
Presentation direct_product(const Presentation& p, const Presentation& q);
Presentation quotient_by_normal_closure(const Presentation& p,
                                        const std::vector<Word>& words);
Presentation quotient_by_normal_closure(const Presentation& p,
                                        const std::vector<std::string>& words);
/// Generators g1..gr for the free part and t1..tk for the invariant factors.
Presentation abelian_presentation(const FgAbelian& g);

/// pi_{g1+g2} -> pi_{g1} * pi_{g2}, collapsing the curve separating the first
/// g1 handles from the rest. Throws InvalidGenus unless g2 >= 1.
GroupHom pinch_presentation_map(std::size_t g1, std::size_t g2);

/// g after f. Throws TargetSourceMismatch unless f.target() == g.source().
GroupHom compose(const GroupHom& f, const GroupHom& g);

/// Text format:
///   group <label>
///   gens <ident> <ident> ...
///   rel <word>
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& p);

}  // namespace sag
