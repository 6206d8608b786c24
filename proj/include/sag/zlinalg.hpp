#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sag {

class Presentation;
class GroupHom;

using Integer = mpz_class;

/// Dense row-major integer matrix. Zero-dimensional shapes are allowed.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> col(std::size_t c) const;
  void append_row(const std::vector<Integer>& row);

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// [a | b], same row count.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
/// a stacked over b, same column count.
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// Whitespace-separated rows, one per line. Blank lines and '#' comments
/// are skipped. Throws FormatError.
IntMatrix parse_matrix(std::string_view text);
std::string render_matrix(const IntMatrix& m);

/// u * a * v == d with u, v unimodular and d diagonal in divisor-chain form.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with
/// 2 <= d1 | d2 | ... | dk. Equality is group isomorphism.
class FgAbelian {
public:
  FgAbelian() = default;
  /// Throws Error unless `torsion` is already a divisor chain of entries >= 2.
  FgAbelian(std::size_t free_rank, std::vector<Integer> torsion);

  static FgAbelian free(std::size_t rank) { return FgAbelian(rank, {}); }
  static FgAbelian trivial() { return FgAbelian(); }
  /// Direct sum of cyclic groups; an order of 0 means Z, 1 is dropped.
  static FgAbelian from_cyclic_orders(const std::vector<Integer>& orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;
  /// Minimal number of generators.
  std::size_t generator_count() const noexcept {
    return free_rank_ + torsion_.size();
  }
  /// Cyclic factors in canonical order: free ones (as 0) then the chain.
  std::vector<Integer> cyclic_orders() const;

  friend bool operator==(const FgAbelian&, const FgAbelian&) = default;

private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

FgAbelian direct_sum(const FgAbelian& a, const FgAbelian& b);
/// `Z^r + Z/d1 + ...`, `0` for the trivial group.
std::string to_string(const FgAbelian& g);
std::ostream& operator<<(std::ostream& os, const FgAbelian& g);

/// Z^cols modulo the row lattice of `a`.
FgAbelian cokernel(const IntMatrix& a);
FgAbelian abelianization(const Presentation& p);
/// Rows indexed by relators, columns by generators.
IntMatrix relator_matrix(const Presentation& p);
std::size_t rank(const FgAbelian& g);

/// Torsion part as prime -> exponents, each list in descending order.
using PrimaryDecomposition = std::map<Integer, std::vector<unsigned>>;

PrimaryDecomposition primary_decomposition(const FgAbelian& g);
FgAbelian recombine(std::size_t free_rank, const PrimaryDecomposition& parts);

/// Whether some homomorphism from `a` onto `b` exists.
bool exists_epimorphism(const FgAbelian& a, const FgAbelian& b);

/// Entry (i, j) is the exponent sum of target generator i in the image of
/// source generator j.
IntMatrix induced_matrix(const GroupHom& f);

/// Whether the map with matrix `f_matrix` (target generators x source
/// generators) hits all of Z^n / rows(target_relations). `target` must be that
/// quotient.
bool is_surjective_onto(const IntMatrix& f_matrix, const FgAbelian& target,
                        const IntMatrix& target_relations);

/// Whether `v` lies in the integer row span of `a`.
bool in_row_lattice(const IntMatrix& a, const std::vector<Integer>& v);

/// Basis of the integer kernel {x : a x = 0}, one basis vector per row.
IntMatrix integer_kernel(const IntMatrix& a);

Integer binomial(unsigned n, unsigned k);

}  // namespace sag
