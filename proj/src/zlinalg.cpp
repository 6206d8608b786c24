#include "sag/zlinalg.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "sag/errors.hpp"
#include "sag/fpgroup.hpp"

namespace sag {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_};
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
  std::vector<Integer> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (row.size() != cols_)
    throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                            " appended to matrix with " + std::to_string(cols_) +
                            " columns");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hconcat row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vconcat column counts differ");
  IntMatrix m = a;
  for (std::size_t r = 0; r < b.rows(); ++r) m.append_row(b.row(r));
  return m;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<Integer>> rows;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<Integer> row;
    for (std::string tok; tokens >> tok;) {
      Integer x;
      const bool ok = !tok.empty() && x.set_str(tok, 10) == 0;
      if (!ok) throw FormatError(line_no, "not an integer: '" + tok + "'");
      row.push_back(std::move(x));
    }
    if (row.empty()) continue;
    if (rows.empty()) cols = row.size();
    if (row.size() != cols)
      throw FormatError(line_no, "expected " + std::to_string(cols) + " entries, got " +
                                     std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

std::string render_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

namespace {

struct Pivot {
  std::size_t row, col;
};

// Smallest nonzero |entry| in the trailing block from (t, t); ties go to the
// lowest (row, col) in row-major order.
std::optional<Pivot> find_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      const Integer& x = a(r, c);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!best || ax < best_abs) {
        best = Pivot{r, c};
        best_abs = std::move(ax);
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    bool finished = false;
    for (;;) {
      const auto pivot = find_pivot(a, t);
      if (!pivot) {
        finished = true;
        break;
      }
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility of the rest.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (finished) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(a), std::move(u), std::move(v)};
}

FgAbelian::FgAbelian(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw Error("invariant factors must be >= 2");
    if (i && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw Error("invariant factors must form a divisor chain");
  }
}

FgAbelian FgAbelian::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) m(i, i) = abs(orders[i]);
  return cokernel(m);
}

Integer FgAbelian::torsion_order() const {
  Integer order = 1;
  for (const auto& d : torsion_) order *= d;
  return order;
}

std::vector<Integer> FgAbelian::cyclic_orders() const {
  std::vector<Integer> out(free_rank_, Integer(0));
  out.insert(out.end(), torsion_.begin(), torsion_.end());
  return out;
}

FgAbelian direct_sum(const FgAbelian& a, const FgAbelian& b) {
  auto orders = a.cyclic_orders();
  const auto more = b.cyclic_orders();
  orders.insert(orders.end(), more.begin(), more.end());
  return FgAbelian::from_cyclic_orders(orders);
}

std::string to_string(const FgAbelian& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  if (g.free_rank() == 1)
    out = "Z";
  else if (g.free_rank() > 1)
    out = "Z^" + std::to_string(g.free_rank());
  for (const auto& d : g.torsion()) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FgAbelian& g) {
  return os << to_string(g);
}

FgAbelian cokernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  std::vector<Integer> torsion;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) torsion.push_back(d);
  }
  return FgAbelian(a.cols() - nonzero, std::move(torsion));
}

IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix m(0, p.generator_count());
  for (const Word& r : p.relators()) {
    const auto sums = exponent_vector(r);
    m.append_row(std::vector<Integer>(sums.begin(), sums.end()));
  }
  return m;
}

FgAbelian abelianization(const Presentation& p) { return cokernel(relator_matrix(p)); }

std::size_t rank(const FgAbelian& g) { return g.free_rank(); }

namespace {

std::map<Integer, unsigned> factorize(Integer n) {
  std::map<Integer, unsigned> out;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) break;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

PrimaryDecomposition primary_decomposition(const FgAbelian& g) {
  PrimaryDecomposition parts;
  for (const auto& d : g.torsion())
    for (const auto& [p, e] : factorize(d)) parts[p].push_back(e);
  for (auto& [p, exps] : parts) std::sort(exps.begin(), exps.end(), std::greater<>());
  return parts;
}

FgAbelian recombine(std::size_t free_rank, const PrimaryDecomposition& parts) {
  std::size_t length = 0;
  for (const auto& [p, exps] : parts) length = std::max(length, exps.size());
  // factors[0] is the largest invariant factor.
  std::vector<Integer> factors(length, Integer(1));
  for (const auto& [p, exps] : parts)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), exps[i]);
      factors[i] *= pk;
    }
  std::reverse(factors.begin(), factors.end());
  std::erase_if(factors, [](const Integer& d) { return d == 1; });
  return FgAbelian(free_rank, std::move(factors));
}

bool exists_epimorphism(const FgAbelian& a, const FgAbelian& b) {
  const std::size_t ra = a.free_rank(), rb = b.free_rank();
  if (ra < rb) return false;
  const auto pa = primary_decomposition(a);
  const auto pb = primary_decomposition(b);
  for (const auto& [p, exps_b] : pb) {
    static const std::vector<unsigned> none;
    const auto it = pa.find(p);
    const auto& exps_a = it == pa.end() ? none : it->second;
    // Generators needed for p^{k-1}X / p^k X on each side.
    for (unsigned k = 1; k <= exps_b.front(); ++k) {
      const auto count = [k](const std::vector<unsigned>& e) {
        return static_cast<std::size_t>(
            std::count_if(e.begin(), e.end(), [k](unsigned x) { return x >= k; }));
      };
      if (ra + count(exps_a) < rb + count(exps_b)) return false;
    }
  }
  return true;
}

IntMatrix induced_matrix(const GroupHom& f) {
  IntMatrix m(f.target().generator_count(), f.source().generator_count());
  for (std::size_t j = 0; j < f.images().size(); ++j) {
    const auto sums = exponent_vector(f.images()[j]);
    for (std::size_t i = 0; i < sums.size(); ++i) m(i, j) = sums[i];
  }
  return m;
}

bool is_surjective_onto(const IntMatrix& f_matrix, const FgAbelian& target,
                        const IntMatrix& target_relations) {
  if (f_matrix.rows() != target_relations.cols())
    throw DimensionMismatch("map has " + std::to_string(f_matrix.rows()) +
                            " target rows but relations have " +
                            std::to_string(target_relations.cols()) + " columns");
  if (!(cokernel(target_relations) == target))
    throw DimensionMismatch("target relations present " +
                            to_string(cokernel(target_relations)) + ", not " +
                            to_string(target));
  return cokernel(vconcat(f_matrix.transpose(), target_relations)).is_trivial();
}

bool in_row_lattice(const IntMatrix& a, const std::vector<Integer>& v) {
  if (v.size() != a.cols()) throw DimensionMismatch("vector length differs from column count");
  const auto snf = smith_normal_form(a);
  const auto diag = snf.diagonal();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Integer w = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) w += v[k] * snf.v(k, j);
    const Integer d = j < diag.size() ? diag[j] : Integer(0);
    if (d == 0) {
      if (w != 0) return false;
    } else if (!mpz_divisible_p(w.get_mpz_t(), d.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntMatrix basis(0, a.cols());
  for (std::size_t j = r; j < a.cols(); ++j) basis.append_row(snf.v.col(j));
  return basis;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace sag
