#include "sag/abhomology.hpp"

#include <algorithm>

#include "sag/errors.hpp"

namespace sag {

FgAbelian homology_cyclic(const Integer& modulus, std::size_t k) {
  if (modulus < 0) throw InvalidModulus("negative modulus " + modulus.get_str());
  if (k == 0) return FgAbelian::free(1);
  if (modulus == 0) return k == 1 ? FgAbelian::free(1) : FgAbelian::trivial();
  if (modulus == 1 || k % 2 == 0) return FgAbelian::trivial();
  return FgAbelian(0, {modulus});
}

GradedAbelian homology_cyclic_graded(const Integer& modulus, std::size_t max_degree) {
  GradedAbelian h;
  for (std::size_t k = 0; k <= max_degree; ++k) h.groups.push_back(homology_cyclic(modulus, k));
  return h;
}

namespace {

// gcd with the convention that 0 stands for Z: gcd(Z, n) = n.
Integer cyclic_gcd(const Integer& m, const Integer& n) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  return g;
}

}  // namespace

FgAbelian tensor(const FgAbelian& a, const FgAbelian& b) {
  std::vector<Integer> pieces;
  for (const auto& m : a.cyclic_orders())
    for (const auto& n : b.cyclic_orders()) pieces.push_back(cyclic_gcd(m, n));
  return FgAbelian::from_cyclic_orders(pieces);
}

FgAbelian tor(const FgAbelian& a, const FgAbelian& b) {
  std::vector<Integer> pieces;
  for (const auto& m : a.torsion())
    for (const auto& n : b.torsion()) pieces.push_back(cyclic_gcd(m, n));
  return FgAbelian::from_cyclic_orders(pieces);
}

FgAbelian kunneth(const GradedAbelian& ha, const GradedAbelian& hb, std::size_t n) {
  if (ha.groups.size() <= n || hb.groups.size() <= n)
    throw InsufficientDegrees("Kunneth in degree " + std::to_string(n) +
                              " needs both factors through that degree");
  FgAbelian out;
  for (std::size_t i = 0; i <= n; ++i) out = direct_sum(out, tensor(ha[i], hb[n - i]));
  for (std::size_t i = 0; i + 1 <= n; ++i) out = direct_sum(out, tor(ha[i], hb[n - 1 - i]));
  return out;
}

GradedAbelian group_homology_graded(const FgAbelian& g, std::size_t max_degree) {
  GradedAbelian h = homology_cyclic_graded(1, max_degree);
  for (const auto& order : g.cyclic_orders()) {
    const GradedAbelian factor = homology_cyclic_graded(order, max_degree);
    GradedAbelian next;
    for (std::size_t n = 0; n <= max_degree; ++n) next.groups.push_back(kunneth(h, factor, n));
    h = std::move(next);
  }
  return h;
}

FgAbelian group_homology(const FgAbelian& g, std::size_t k) {
  return group_homology_graded(g, k)[k];
}

Integer real_cohomology_rank(const FgAbelian& g, std::size_t k) {
  return binomial(static_cast<unsigned>(g.free_rank()), static_cast<unsigned>(k));
}

std::size_t real_cohomological_dimension(const FgAbelian& g) {
  std::size_t dim = 0;
  for (std::size_t k = 0; k <= g.free_rank(); ++k)
    if (real_cohomology_rank(g, k) > 0) dim = k;
  return dim;
}

bool is_direct_summand(const FgAbelian& sub, const FgAbelian& g) {
  if (sub.free_rank() > g.free_rank()) return false;
  // Each p-primary part of sub must be a sub-multiset of g's.
  const auto ps = primary_decomposition(sub);
  const auto pg = primary_decomposition(g);
  for (const auto& [p, exps] : ps) {
    const auto it = pg.find(p);
    if (it == pg.end()) return false;
    std::vector<unsigned> pool = it->second;
    for (unsigned e : exps) {
      const auto found = std::find(pool.begin(), pool.end(), e);
      if (found == pool.end()) return false;
      pool.erase(found);
    }
  }
  return true;
}

}  // namespace sag
