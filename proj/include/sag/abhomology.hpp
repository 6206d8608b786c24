#pragma once

// Integral homology of finitely generated abelian groups, assembled from
// cyclic pieces with the Kunneth formula.

#include <cstddef>
#include <vector>

#include "sag/zlinalg.hpp"

namespace sag {

inline constexpr std::size_t kDefaultMaxDegree = 8;

/// H_0, H_1, ..., H_N.
struct GradedAbelian {
  std::vector<FgAbelian> groups;

  std::size_t top_degree() const { return groups.empty() ? 0 : groups.size() - 1; }
  const FgAbelian& operator[](std::size_t k) const { return groups.at(k); }
  friend bool operator==(const GradedAbelian&, const GradedAbelian&) = default;
};

/// H_k of Z (modulus 0), of Z/n (n >= 2), or of the trivial group (n = 1).
FgAbelian homology_cyclic(const Integer& modulus, std::size_t k);
GradedAbelian homology_cyclic_graded(const Integer& modulus, std::size_t max_degree);

FgAbelian tensor(const FgAbelian& a, const FgAbelian& b);
FgAbelian tor(const FgAbelian& a, const FgAbelian& b);

/// Degree-n homology of a product from the homology of its factors. Throws
/// InsufficientDegrees unless both inputs reach degree n.
FgAbelian kunneth(const GradedAbelian& ha, const GradedAbelian& hb, std::size_t n);

/// H_0..H_{max_degree} of g.
GradedAbelian group_homology_graded(const FgAbelian& g,
                                    std::size_t max_degree = kDefaultMaxDegree);
FgAbelian group_homology(const FgAbelian& g, std::size_t k);

/// dim H^k(g; R) = binomial(rank g, k).
Integer real_cohomology_rank(const FgAbelian& g, std::size_t k);
std::size_t real_cohomological_dimension(const FgAbelian& g);

/// Whether `sub` is isomorphic to a direct summand of `g`.
bool is_direct_summand(const FgAbelian& sub, const FgAbelian& g);

}  // namespace sag
