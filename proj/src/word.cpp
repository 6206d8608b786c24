#include "sag/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_set>

#include "sag/errors.hpp"

namespace sag {

Generator::Generator(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_))
    throw InvalidGenerator("invalid generator name '" + name_ + "'");
}

bool Generator::is_valid_name(std::string_view name) {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Alphabet::Alphabet(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : generators_)
    if (!seen.insert(g.name()).second)
      throw InvalidGenerator("duplicate generator name '" + g.name() + "'");
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<Generator> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

std::shared_ptr<const Alphabet> Alphabet::make(
    const std::vector<std::string>& names) {
  std::vector<Generator> gens;
  gens.reserve(names.size());
  for (const auto& n : names) gens.emplace_back(n);
  return make(std::move(gens));
}

std::shared_ptr<const Alphabet> Alphabet::make(std::initializer_list<std::string> names) {
  return make(std::vector<std::string>(names));
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name() == name) return i;
  return std::nullopt;
}

std::size_t Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownGenerator(std::string(name));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) alphabet_ = std::make_shared<const Alphabet>();
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : Word(std::move(alphabet)) {
  for (const Letter& l : letters) {
    if (l.generator >= alphabet_->size())
      throw UnknownGenerator("#" + std::to_string(l.generator));
    if (l.sign != 1 && l.sign != -1)
      throw Error("letter sign must be +1 or -1");
  }
  letters_ = free_reduce(letters);
}

Word Word::generator(AlphabetPtr alphabet, std::size_t index, int power) {
  const auto sign = power < 0 ? -1 : 1;
  std::vector<Letter> letters(static_cast<std::size_t>(std::abs(power)),
                              Letter{static_cast<std::uint32_t>(index), sign});
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word Word::power(long exponent) const {
  const Word base = exponent < 0 ? invert(*this) : *this;
  Word result(alphabet_);
  for (long i = 0; i < std::labs(exponent); ++i) result = multiply(result, base);
  return result;
}

Word Word::relabel(AlphabetPtr alphabet,
                   std::span<const std::size_t> index_map) const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_)
    out.push_back({static_cast<std::uint32_t>(index_map[l.generator]), l.sign});
  return Word(std::move(alphabet), std::move(out));
}

bool operator==(const Word& a, const Word& b) {
  return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
}

Word multiply(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch();
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(letters));
}

Word invert(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return Word(w.alphabet(), std::move(letters));
}

bool is_cyclically_reduced(const Word& w) {
  const auto& l = w.letters();
  return l.size() < 2 || !(l.front() == l.back().inverse());
}

Word cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(w.alphabet(), std::vector<Letter>(l.begin() + lo, l.begin() + hi));
}

long exponent_sum(const Word& w, std::size_t generator_index) {
  long sum = 0;
  for (const Letter& l : w.letters())
    if (l.generator == generator_index) sum += l.sign;
  return sum;
}

long exponent_sum(const Word& w, const Generator& g) {
  return exponent_sum(w, w.alphabet()->index_of(g.name()));
}

std::vector<long> exponent_vector(const Word& w) {
  std::vector<long> v(w.alphabet()->size(), 0);
  for (const Letter& l : w.letters()) v[l.generator] += l.sign;
  return v;
}

Word substitute(const Word& w, std::span<const Word> images,
                const AlphabetPtr& target) {
  if (images.size() != w.alphabet()->size())
    throw DimensionMismatch("substitution needs one image per generator");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const Word& img = images[l.generator];
    if (!same_alphabet(img.alphabet(), target)) throw AlphabetMismatch();
    if (l.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return Word(target, std::move(out));
}

std::string render(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (*w.alphabet())[l.generator].name();
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

namespace {

constexpr std::size_t kMaxParsedLength = 1'000'000;

// Recursive-descent parser over the word grammar. Letters are accumulated
// unreduced and reduced once at the end of each factor.
class WordParser {
public:
  WordParser(std::string_view text, const AlphabetPtr& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    skip_separators();
    std::vector<Letter> letters;
    if (at_identity_token()) {
      ++pos_;
      skip_separators();
    } else {
      letters = parse_factors();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return Word(alphabet_, std::move(letters));
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
                         text_[pos_] == '*'))
      ++pos_;
  }

  bool at_identity_token() const {
    if (peek() != '1') return false;
    const std::size_t next = pos_ + 1;
    return next >= text_.size() ||
           !std::isalnum(static_cast<unsigned char>(text_[next]));
  }

  bool at_factor_start() const {
    const char c = peek();
    return (c >= 'a' && c <= 'z') || c == '[' || c == '(';
  }

  // word := "1" | factor+   (inside brackets)
  std::vector<Letter> parse_inner_word() {
    skip_separators();
    if (at_identity_token()) {
      ++pos_;
      skip_separators();
      return {};
    }
    return parse_factors();
  }

  std::vector<Letter> parse_factors() {
    if (!at_factor_start()) fail("expected a generator, '[' or '('");
    std::vector<Letter> letters;
    while (at_factor_start()) {
      auto f = parse_factor();
      letters.insert(letters.end(), f.begin(), f.end());
      if (letters.size() > kMaxParsedLength) fail("word too long");
      skip_separators();
    }
    return letters;
  }

  std::vector<Letter> parse_factor() {
    std::vector<Letter> base;
    const char c = peek();
    if (c == '[') {
      ++pos_;
      auto u = parse_inner_word();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      auto v = parse_inner_word();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      base = commutator_letters(u, v);
    } else if (c == '(') {
      ++pos_;
      base = parse_inner_word();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      const std::size_t start = pos_;
      while (!at_end() && (std::islower(static_cast<unsigned char>(peek())) ||
                           std::isdigit(static_cast<unsigned char>(peek())) ||
                           peek() == '_'))
        ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      const auto index = alphabet_->find(name);
      if (!index) throw UnknownGenerator(std::string(name));
      base.push_back({static_cast<std::uint32_t>(*index), 1});
    }
    const std::size_t before_power = pos_;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      return raise(base, parse_exponent());
    }
    pos_ = before_power;
    return base;
  }

  long parse_exponent() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    long value = 0;
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_)
      fail("exponent out of range");
    return value;
  }

  std::vector<Letter> raise(const std::vector<Letter>& base, long exponent) {
    std::vector<Letter> unit = base;
    if (exponent < 0) unit = inverse_letters(base);
    const auto n = static_cast<std::size_t>(std::labs(exponent));
    if (!unit.empty() && n > kMaxParsedLength / unit.size()) fail("word too long");
    std::vector<Letter> out;
    out.reserve(n * unit.size());
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  static std::vector<Letter> inverse_letters(const std::vector<Letter>& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
  }

  static std::vector<Letter> commutator_letters(const std::vector<Letter>& u,
                                                const std::vector<Letter>& v) {
    std::vector<Letter> out = u;
    out.insert(out.end(), v.begin(), v.end());
    const auto ui = inverse_letters(u);
    const auto vi = inverse_letters(v);
    out.insert(out.end(), ui.begin(), ui.end());
    out.insert(out.end(), vi.begin(), vi.end());
    return out;
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  if (!alphabet) throw Error("parse_word needs an alphabet");
  return WordParser(text, alphabet).parse();
}

}  // namespace sag
