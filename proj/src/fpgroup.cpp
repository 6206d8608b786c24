#include "sag/fpgroup.hpp"

#include <sstream>
#include <unordered_set>

#include "sag/errors.hpp"

namespace sag {

namespace {

std::vector<Word> normalize_relators(const AlphabetPtr& alphabet,
                                     const std::vector<Word>& relators) {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const Word& r : relators) {
    if (!same_alphabet(r.alphabet(), alphabet)) throw AlphabetMismatch();
    Word reduced = cyclic_reduce(Word(alphabet, r.letters()));
    if (!reduced.is_identity()) out.push_back(std::move(reduced));
  }
  return out;
}

std::vector<std::string> names_of(const Alphabet& a) {
  std::vector<std::string> names;
  for (const auto& g : a.generators()) names.push_back(g.name());
  return names;
}

// Alphabet of p followed by q, with q's names renamed on clash. Fills the index
// maps taking each factor's generators into the combined alphabet.
AlphabetPtr combined_alphabet(const Alphabet& p, const Alphabet& q,
                              std::vector<std::size_t>& p_map,
                              std::vector<std::size_t>& q_map) {
  std::vector<std::string> names = names_of(p);
  std::unordered_set<std::string> taken(names.begin(), names.end());
  for (const auto& g : q.generators()) taken.insert(g.name());
  std::unordered_set<std::string> used(names.begin(), names.end());

  p_map.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) p_map[i] = i;
  q_map.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::string name = q[i].name();
    if (used.count(name)) {
      for (std::size_t k = 1;; ++k) {
        std::string candidate = name + "_" + std::to_string(k);
        if (!taken.count(candidate) && !used.count(candidate)) {
          name = std::move(candidate);
          break;
        }
      }
    }
    used.insert(name);
    q_map[i] = names.size();
    names.push_back(std::move(name));
  }
  return Alphabet::make(names);
}

}  // namespace

Presentation::Presentation() : alphabet_(std::make_shared<const Alphabet>()) {}

Presentation::Presentation(AlphabetPtr generators, std::vector<Word> relators,
                           std::optional<std::string> label)
    : alphabet_(generators ? std::move(generators)
                           : std::make_shared<const Alphabet>()),
      relators_(normalize_relators(alphabet_, relators)),
      label_(std::move(label)) {}

Presentation Presentation::with_label(std::string label) const {
  Presentation p = *this;
  p.label_ = std::move(label);
  return p;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return *a.alphabet_ == *b.alphabet_ && a.relators_ == b.relators_;
}

GroupHom::GroupHom(Presentation source, Presentation target,
                   std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_.generator_count())
    throw InvalidHomomorphism("expected " +
                              std::to_string(source_.generator_count()) +
                              " generator images, got " +
                              std::to_string(images.size()));
  images_.reserve(images.size());
  for (const Word& w : images) {
    if (!same_alphabet(w.alphabet(), target_.alphabet())) throw AlphabetMismatch();
    images_.emplace_back(target_.alphabet(), w.letters());
  }
  const IntMatrix relations = relator_matrix(target_);
  for (const Word& r : source_.relators()) {
    const auto sums = exponent_vector(apply(r));
    std::vector<Integer> v(sums.begin(), sums.end());
    if (!in_row_lattice(relations, v))
      throw InvalidHomomorphism("image of relator '" + render(r) +
                                "' is nontrivial in the target abelianization");
  }
}

GroupHom GroupHom::identity(const Presentation& p) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    images.push_back(p.generator(i));
  return GroupHom(p, p, std::move(images));
}

Word GroupHom::apply(const Word& w) const {
  if (!same_alphabet(w.alphabet(), source_.alphabet())) throw AlphabetMismatch();
  return substitute(w, images_, target_.alphabet());
}

Presentation free_group(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("g" + std::to_string(i));
  return Presentation(Alphabet::make(names), {});
}

Word surface_relator(const AlphabetPtr& alphabet, std::size_t genus,
                     std::size_t first_index) {
  Word r(alphabet);
  for (std::size_t i = 0; i < genus; ++i) {
    const auto a = Word::generator(alphabet, first_index + 2 * i);
    const auto b = Word::generator(alphabet, first_index + 2 * i + 1);
    r = multiply(r, Word::commutator(a, b));
  }
  return r;
}

Presentation surface_group(std::size_t genus) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  auto alphabet = Alphabet::make(names);
  if (genus == 0) return Presentation(alphabet, {});
  return Presentation(alphabet, {surface_relator(alphabet, genus)});
}

Presentation free_product(const Presentation& p, const Presentation& q) {
  std::vector<std::size_t> p_map, q_map;
  auto alphabet = combined_alphabet(*p.alphabet(), *q.alphabet(), p_map, q_map);
  std::vector<Word> relators;
  for (const Word& r : p.relators()) relators.push_back(r.relabel(alphabet, p_map));
  for (const Word& r : q.relators()) relators.push_back(r.relabel(alphabet, q_map));
  return Presentation(alphabet, std::move(relators));
}

Presentation direct_product(const Presentation& p, const Presentation& q) {
  std::vector<std::size_t> p_map, q_map;
  auto alphabet = combined_alphabet(*p.alphabet(), *q.alphabet(), p_map, q_map);
  Presentation fp = free_product(p, q);
  std::vector<Word> relators = fp.relators();
  for (std::size_t x : p_map)
    for (std::size_t y : q_map)
      relators.push_back(Word::commutator(Word::generator(alphabet, x),
                                          Word::generator(alphabet, y)));
  return Presentation(alphabet, std::move(relators));
}

Presentation quotient_by_normal_closure(const Presentation& p,
                                        const std::vector<Word>& words) {
  std::vector<Word> relators = p.relators();
  for (const Word& w : words) {
    if (!same_alphabet(w.alphabet(), p.alphabet())) {
      // Words over a foreign alphabet must at least name our generators.
      std::vector<std::size_t> map;
      for (const auto& g : w.alphabet()->generators())
        map.push_back(p.alphabet()->index_of(g.name()));
      relators.push_back(w.relabel(p.alphabet(), map));
    } else {
      relators.push_back(w);
    }
  }
  return Presentation(p.alphabet(), std::move(relators), p.label());
}

Presentation quotient_by_normal_closure(const Presentation& p,
                                        const std::vector<std::string>& words) {
  std::vector<Word> parsed;
  for (const auto& text : words) parsed.push_back(p.word(text));
  return quotient_by_normal_closure(p, parsed);
}

Presentation abelian_presentation(const FgAbelian& g) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= g.free_rank(); ++i) names.push_back("g" + std::to_string(i));
  for (std::size_t i = 1; i <= g.torsion().size(); ++i)
    names.push_back("t" + std::to_string(i));
  auto alphabet = Alphabet::make(names);
  std::vector<Word> relators;
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      relators.push_back(Word::commutator(Word::generator(alphabet, i),
                                          Word::generator(alphabet, j)));
  for (std::size_t k = 0; k < g.torsion().size(); ++k) {
    const Integer& d = g.torsion()[k];
    if (!d.fits_slong_p()) throw Error("invariant factor too large to present");
    relators.push_back(
        Word::generator(alphabet, g.free_rank() + k).power(d.get_si()));
  }
  return Presentation(alphabet, std::move(relators));
}

GroupHom pinch_presentation_map(std::size_t g1, std::size_t g2) {
  if (g2 < 1) throw InvalidGenus("pinch map needs a second factor of genus >= 1");
  const Presentation source = surface_group(g1 + g2);
  const Presentation target = free_product(surface_group(g1), surface_group(g2));
  std::vector<Word> images;
  for (std::size_t i = 0; i < 2 * (g1 + g2); ++i) images.push_back(target.generator(i));
  return GroupHom(source, target, std::move(images));
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (!(f.target() == g.source())) throw TargetSourceMismatch();
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const Word& w : f.images())
    images.push_back(g.apply(Word(g.source().alphabet(), w.letters())));
  return GroupHom(f.source(), g.target(), std::move(images));
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<std::string> label;
  AlphabetPtr alphabet;
  std::vector<std::pair<std::size_t, std::string>> relator_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, space);
    const std::string rest = space == std::string::npos ? "" : trim(line.substr(space));
    if (keyword == "group") {
      if (label) throw FormatError(line_no, "duplicate 'group' line");
      if (rest.empty()) throw FormatError(line_no, "missing group label");
      label = rest;
    } else if (keyword == "gens") {
      if (alphabet) throw FormatError(line_no, "duplicate 'gens' line");
      std::istringstream names_in(rest);
      std::vector<std::string> names;
      for (std::string n; names_in >> n;) names.push_back(n);
      try {
        alphabet = Alphabet::make(names);
      } catch (const InvalidGenerator& e) {
        throw FormatError(line_no, e.what());
      }
    } else if (keyword == "rel") {
      if (!alphabet) throw FormatError(line_no, "'rel' before 'gens'");
      relator_lines.emplace_back(line_no, rest);
    } else {
      throw FormatError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!alphabet) throw FormatError(line_no, "missing 'gens' line");
  std::vector<Word> relators;
  for (const auto& [no, word_text] : relator_lines) {
    try {
      relators.push_back(parse_word(word_text, alphabet));
    } catch (const SyntaxError& e) {
      throw FormatError(no, e.what());
    } catch (const UnknownGenerator& e) {
      throw FormatError(no, e.what());
    }
  }
  return Presentation(alphabet, std::move(relators), label);
}

std::string render_presentation(const Presentation& p) {
  std::string out;
  if (p.label()) out += "group " + *p.label() + "\n";
  out += "gens";
  for (const auto& g : p.alphabet()->generators()) out += " " + g.name();
  out += "\n";
  for (const Word& r : p.relators()) out += "rel " + render(r) + "\n";
  return out;
}

}  // namespace sag
