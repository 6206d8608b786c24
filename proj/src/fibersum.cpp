#include "sag/fibersum.hpp"

#include "sag/asphericity.hpp"
#include "sag/errors.hpp"

namespace sag {

namespace {

bool has_fiber_generators(const Alphabet& a, std::size_t genus) {
  if (a.size() != 2 * genus) return false;
  for (std::size_t i = 0; i < genus; ++i)
    if (a[2 * i].name() != "a" + std::to_string(i + 1) ||
        a[2 * i + 1].name() != "b" + std::to_string(i + 1))
      return false;
  return true;
}

Word word_from_exponents(const AlphabetPtr& alphabet, const std::vector<Integer>& exps) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (!exps[i].fits_slong_p()) throw Error("relator exponent too large");
    const long e = exps[i].get_si();
    for (long k = 0; k < std::labs(e); ++k)
      letters.push_back({static_cast<std::uint32_t>(i), e < 0 ? -1 : 1});
  }
  return Word(alphabet, std::move(letters));
}

// Generators of {x in Z^n : map x lies in the row lattice of relations},
// one per row, where map is (m x n) and relations is (k x m).
IntMatrix preimage_of_relations(const IntMatrix& map, const IntMatrix& relations) {
  IntMatrix neg_rel_t = relations.transpose();
  for (std::size_t r = 0; r < neg_rel_t.rows(); ++r) neg_rel_t.negate_row(r);
  const IntMatrix kernel = integer_kernel(hconcat(map, neg_rel_t));
  IntMatrix out(0, map.cols());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    std::vector<Integer> row = kernel.row(r);
    row.resize(map.cols());
    out.append_row(row);
  }
  return out;
}

}  // namespace

SurfaceFiberedPresentation::SurfaceFiberedPresentation(std::size_t fiber_genus,
                                                       std::vector<Word> extra_relators)
    : fiber_genus_(fiber_genus), extra_(std::move(extra_relators)) {
  if (fiber_genus_ == 0) throw InvalidGenus("fiber genus must be at least 1");
  const Presentation fiber = surface_group(fiber_genus_);
  std::vector<Word> relators = fiber.relators();
  for (Word& w : extra_) {
    if (!same_alphabet(w.alphabet(), fiber.alphabet())) throw AlphabetMismatch();
    w = Word(fiber.alphabet(), w.letters());
    relators.push_back(w);
  }
  presentation_ = Presentation(fiber.alphabet(), std::move(relators));
}

SurfaceFiberedPresentation SurfaceFiberedPresentation::from_presentation(
    const Presentation& p) {
  const std::size_t n = p.generator_count();
  if (n == 0 || n % 2 != 0 || !has_fiber_generators(*p.alphabet(), n / 2))
    throw InvalidGenus("fibered presentation needs generators a1 b1 ... af bf");
  const std::size_t genus = n / 2;
  const Word surface = surface_relator(p.alphabet(), genus);
  std::vector<Word> extra;
  for (const Word& r : p.relators())
    if (!(r == surface)) extra.push_back(r);
  const AlphabetPtr fiber = surface_group(genus).alphabet();
  for (Word& w : extra) w = Word(fiber, w.letters());
  return SurfaceFiberedPresentation(genus, std::move(extra));
}

Presentation fiber_sum(const SurfaceFiberedPresentation& x, std::size_t base_genus,
                       const std::optional<FiberAction>& action) {
  if (base_genus == 0) throw InvalidGenus("fiber sum needs a base of genus >= 1");
  const std::size_t f = x.fiber_genus();
  const std::size_t e = base_genus;

  std::vector<std::string> names;
  for (const auto& g : x.presentation().alphabet()->generators()) names.push_back(g.name());
  for (std::size_t j = 1; j <= e; ++j) {
    names.push_back("x" + std::to_string(j));
    names.push_back("y" + std::to_string(j));
  }
  const AlphabetPtr alphabet = Alphabet::make(names);
  std::vector<std::size_t> fiber_map(2 * f);
  for (std::size_t i = 0; i < 2 * f; ++i) fiber_map[i] = i;

  if (action && (action->size() != 2 * e ||
                 std::any_of(action->begin(), action->end(),
                             [f](const auto& row) { return row.size() != 2 * f; })))
    throw DimensionMismatch("action table needs " + std::to_string(2 * e) + " rows of " +
                            std::to_string(2 * f) + " words");

  std::vector<Word> relators;
  relators.push_back(surface_relator(alphabet, f));
  relators.push_back(surface_relator(alphabet, e, 2 * f));
  for (std::size_t s = 0; s < 2 * e; ++s) {
    const Word base = Word::generator(alphabet, 2 * f + s);
    for (std::size_t c = 0; c < 2 * f; ++c) {
      const Word fiber_gen = Word::generator(alphabet, c);
      Word image = fiber_gen;
      if (action)
        image = parse_word((*action)[s][c], x.presentation().alphabet())
                    .relabel(alphabet, fiber_map);
      // base * c * base^-1 = action(base)(c)
      relators.push_back(
          multiply(multiply(multiply(base, fiber_gen), invert(base)), invert(image)));
    }
  }
  for (const Word& r : x.extra_relators()) relators.push_back(r.relabel(alphabet, fiber_map));
  return Presentation(alphabet, std::move(relators));
}

Presentation fiber_sum_with_trivial_bundle(const SurfaceFiberedPresentation& x,
                                           std::size_t base_genus) {
  return fiber_sum(x, base_genus, std::nullopt);
}

FgAbelian ssd_quotient(const SsdData& d) {
  const std::size_t na = d.a_relations.cols();
  const std::size_t nb = d.b_relations.cols();
  const std::size_t np = d.p_relations.cols();
  if (d.j_matrix.rows() != nb || d.j_matrix.cols() != na)
    throw DimensionMismatch("j must be a " + std::to_string(nb) + "x" + std::to_string(na) +
                            " matrix");
  if (d.phi_matrix.rows() != np || d.phi_matrix.cols() != na)
    throw DimensionMismatch("phi must be a " + std::to_string(np) + "x" +
                            std::to_string(na) + " matrix");
  const FgAbelian p = cokernel(d.p_relations);
  if (!is_surjective_onto(d.phi_matrix, p, d.p_relations))
    throw NotSurjective("phi does not map onto " + to_string(p));

  const IntMatrix kernel = preimage_of_relations(d.phi_matrix, d.p_relations);
  const IntMatrix pushed = kernel * d.j_matrix.transpose();
  return cokernel(vconcat(d.b_relations, pushed));
}

SsdData trivial_bundle_ssd(const SurfaceFiberedPresentation& x, std::size_t base_genus) {
  if (base_genus == 0) throw InvalidGenus("fiber sum needs a base of genus >= 1");
  const std::size_t nf = 2 * x.fiber_genus();
  const std::size_t nb = nf + 2 * base_genus;
  SsdData d;
  d.a_relations = relator_matrix(surface_group(x.fiber_genus()));
  d.b_relations =
      relator_matrix(direct_product(surface_group(x.fiber_genus()), surface_group(base_genus)));
  d.p_relations = relator_matrix(x.presentation());
  d.j_matrix = IntMatrix(nb, nf);
  for (std::size_t i = 0; i < nf; ++i) d.j_matrix(i, i) = 1;
  d.phi_matrix = IntMatrix::identity(nf);
  return d;
}

PresentationChain presentation_chain_for(const FgAbelian& gamma) {
  if (rank(gamma) < 2)
    throw RankTooSmall("need rank >= 2 for nonzero H^2(.;R), got " + to_string(gamma));
  const Presentation target = abelian_presentation(gamma);
  const std::size_t r = target.generator_count();
  const std::size_t h = 2 * r;

  // pi_h -> F_r -> gamma: a_i -> x_i for i <= r, all other generators die.
  const Presentation fiber = surface_group(h);
  const Presentation free = free_group(r);
  std::vector<Word> to_free;
  for (std::size_t i = 0; i < 2 * h; ++i)
    to_free.push_back(i % 2 == 0 && i / 2 < r ? free.generator(i / 2) : free.identity());
  std::vector<Word> free_to_gamma;
  for (std::size_t i = 0; i < r; ++i) free_to_gamma.push_back(target.generator(i));
  const GroupHom f = compose(GroupHom(fiber, free, to_free),
                             GroupHom(free, target, free_to_gamma));

  // pi_{h+1} -> pi_h * pi_1 -> (pi_h * pi_1)_ab -> gamma; the torus factor
  // lands on the first two free generators.
  const GroupHom pinch = pinch_presentation_map(h, 1);
  const Presentation& product = pinch.target();
  const FgAbelian product_ab = abelianization(product);
  if (!(product_ab == FgAbelian::free(2 * h + 2)))
    throw Error("unexpected abelianization of pi_h * Z^2");
  const Presentation ab_group = abelian_presentation(product_ab);
  std::vector<Word> to_ab;
  for (std::size_t i = 0; i < 2 * h + 2; ++i) to_ab.push_back(ab_group.generator(i));
  std::vector<Word> ab_to_gamma = f.images();
  ab_to_gamma.push_back(target.generator(0));
  ab_to_gamma.push_back(target.generator(1));

  const GroupHom chain = compose(compose(pinch, GroupHom(product, ab_group, to_ab)),
                                 GroupHom(ab_group, target, ab_to_gamma));
  return {chain, h + 1};
}

SurfaceFiberedPresentation realize_over_fiber(const PresentationChain& chain,
                                              const FgAbelian& gamma) {
  const IntMatrix map = induced_matrix(chain.map);
  const IntMatrix relations = relator_matrix(chain.map.target());
  if (!is_surjective_onto(map, gamma, relations))
    throw NotSurjective("presentation chain does not map onto " + to_string(gamma));

  const AlphabetPtr alphabet = chain.map.source().alphabet();
  const std::size_t n = alphabet->size();
  std::vector<Word> extra;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      extra.push_back(Word::commutator(Word::generator(alphabet, i), Word::generator(alphabet, j)));
  const IntMatrix kernel = preimage_of_relations(map, relations);
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    extra.push_back(word_from_exponents(alphabet, kernel.row(r)));
  return SurfaceFiberedPresentation(chain.genus, std::move(extra));
}

Presentation witness_presentation(const FgAbelian& gamma) {
  const AsphericityVerdict verdict = classify(gamma);
  if (!verdict.aspherical)
    throw NotAspherical(to_string(verdict.reason),
                        to_string(gamma) + " is not symplectically aspherical (" +
                            to_string(verdict.reason) + ")");
  const std::string label = "witness_" + to_string(gamma);
  if (verdict.reason == AsphericityReason::IsZ2) return surface_group(1).with_label(label);

  // gamma = A + Z^2, the Z^2 taken from the last two free generators.
  const FgAbelian a(gamma.free_rank() - 2, gamma.torsion());
  const PresentationChain chain = presentation_chain_for(a);
  const SurfaceFiberedPresentation x = realize_over_fiber(chain, a);
  return fiber_sum_with_trivial_bundle(x, 1).with_label(label);
}

}  // namespace sag
