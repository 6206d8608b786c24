#include "sag/lefschetz.hpp"

#include <sstream>

#include "sag/errors.hpp"

namespace sag {

HomologyClass::HomologyClass(std::vector<Integer> coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.size() % 2 != 0)
    throw DimensionMismatch("homology class needs an even number of coordinates");
}

Integer intersection_pairing(const HomologyClass& x, const HomologyClass& y) {
  if (x.coordinates().size() != y.coordinates().size())
    throw DimensionMismatch("pairing classes of different genus");
  Integer sum = 0;
  const auto& u = x.coordinates();
  const auto& v = y.coordinates();
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) sum += u[i] * v[i + 1] - u[i + 1] * v[i];
  return sum;
}

IntMatrix symplectic_form(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

namespace {

HomologyClass class_of(const Word& w) {
  const auto sums = exponent_vector(w);
  return HomologyClass(std::vector<Integer>(sums.begin(), sums.end()));
}

}  // namespace

VanishingCycle::VanishingCycle(std::size_t genus, const Word& word)
    : word_(cyclic_reduce(word)), homology_(class_of(word_)) {
  if (word_.alphabet()->size() != 2 * genus)
    throw DimensionMismatch("vanishing cycle is not a word over the genus-" +
                            std::to_string(genus) + " fiber group");
}

MonodromyFactorization::MonodromyFactorization(std::size_t fiber_genus,
                                               std::vector<Twist> twists,
                                               std::string label)
    : fiber_genus_(fiber_genus),
      fiber_group_(surface_group(fiber_genus)),
      twists_(std::move(twists)),
      label_(std::move(label)) {
  for (const Twist& t : twists_)
    if (!same_alphabet(t.cycle.word().alphabet(), fiber_group_.alphabet()))
      throw AlphabetMismatch();
}

void MonodromyFactorization::add(TwistSign sign, std::string_view word) {
  twists_.push_back({VanishingCycle(fiber_genus_, fiber_group_.word(word)), sign});
}

MonodromyFactorization MonodromyFactorization::then(
    const MonodromyFactorization& other) const {
  if (other.fiber_genus_ != fiber_genus_)
    throw InvalidGenus("cannot concatenate factorizations over different fibers");
  auto twists = twists_;
  twists.insert(twists.end(), other.twists_.begin(), other.twists_.end());
  return MonodromyFactorization(fiber_genus_, std::move(twists), label_);
}

IntMatrix twist_matrix(const HomologyClass& c, TwistSign sign) {
  const std::size_t n = c.coordinates().size();
  IntMatrix t = IntMatrix::identity(n);
  // Column j is the image of basis vector e_j: e_j + sign <e_j, c> c.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> e(n, Integer(0));
    e[j] = 1;
    Integer pairing = intersection_pairing(HomologyClass(std::move(e)), c);
    if (sign == TwistSign::Negative) pairing = -pairing;
    for (std::size_t i = 0; i < n; ++i) t(i, j) += pairing * c.coordinates()[i];
  }
  return t;
}

IntMatrix monodromy_product(const MonodromyFactorization& m) {
  IntMatrix product = IntMatrix::identity(2 * m.fiber_genus());
  for (const Twist& t : m.twists())
    product = twist_matrix(t.cycle.homology(), t.sign) * product;
  return product;
}

bool homology_trivial(const MonodromyFactorization& m) {
  return monodromy_product(m).is_identity();
}

TotalSpaceGroup total_space_pi1(const MonodromyFactorization& m) {
  std::vector<Word> cycles;
  for (const Twist& t : m.twists()) cycles.push_back(t.cycle.word());
  Presentation p = quotient_by_normal_closure(m.fiber_group(), cycles);
  if (!m.label().empty()) p = p.with_label(m.label());
  return {std::move(p), !homology_trivial(m)};
}

long euler_characteristic(const MonodromyFactorization& m) {
  return 2 * (2 - 2 * static_cast<long>(m.fiber_genus())) +
         static_cast<long>(m.twists().size());
}

MonodromyFactorization parse_factorization(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string label;
  std::optional<MonodromyFactorization> m;
  bool saw_label = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream tokens(raw);
    std::string keyword;
    if (!(tokens >> keyword)) continue;
    std::string rest;
    std::getline(tokens, rest);
    if (const auto b = rest.find_first_not_of(" \t\r"); b != std::string::npos)
      rest = rest.substr(b, rest.find_last_not_of(" \t\r") - b + 1);
    else
      rest.clear();

    if (keyword == "fibration") {
      if (saw_label) throw FormatError(line_no, "duplicate 'fibration' line");
      if (rest.empty()) throw FormatError(line_no, "missing fibration label");
      saw_label = true;
      label = rest;
    } else if (keyword == "fiber_genus") {
      if (m) throw FormatError(line_no, "duplicate 'fiber_genus' line");
      std::size_t pos = 0;
      long h = -1;
      try {
        h = std::stol(rest, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (rest.empty() || pos != rest.size() || h < 0)
        throw FormatError(line_no, "fiber_genus must be a natural number");
      m.emplace(static_cast<std::size_t>(h));
    } else if (keyword == "cycle") {
      if (!m) throw FormatError(line_no, "'cycle' before 'fiber_genus'");
      if (rest.size() < 1 || (rest[0] != '+' && rest[0] != '-') ||
          (rest.size() > 1 && rest[1] != ' ' && rest[1] != '\t'))
        throw FormatError(line_no, "cycle needs a sign '+' or '-' followed by a word");
      const TwistSign sign = rest[0] == '+' ? TwistSign::Positive : TwistSign::Negative;
      try {
        m->add(sign, rest.substr(1));
      } catch (const SyntaxError& e) {
        throw FormatError(line_no, e.what());
      } catch (const UnknownGenerator& e) {
        throw FormatError(line_no, e.what());
      }
    } else {
      throw FormatError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!m) throw FormatError(line_no, "missing 'fiber_genus' line");
  return MonodromyFactorization(m->fiber_genus(), m->twists(), label);
}

std::string render_factorization(const MonodromyFactorization& m) {
  std::string out;
  if (!m.label().empty()) out += "fibration " + m.label() + "\n";
  out += "fiber_genus " + std::to_string(m.fiber_genus()) + "\n";
  for (const Twist& t : m.twists())
    out += std::string("cycle ") + (t.sign == TwistSign::Positive ? "+" : "-") + " " +
           render(t.cycle.word()) + "\n";
  return out;
}

}  // namespace sag
