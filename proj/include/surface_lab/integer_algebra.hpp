#ifndef SURFACE_LAB_INTEGER_ALGEBRA_HPP
#define SURFACE_LAB_INTEGER_ALGEBRA_HPP

// Exact integer linear algebra: Smith normal form, cokernels of relation
// matrices, ranks over Q and over F_2, and finitely generated abelian groups
// in invariant-factor form.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace surface_lab {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(const std::vector<Integer>& row);
  void append_row(const std::vector<long>& row);

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Smith normal form of an m x n matrix M.
///
/// `diag` holds the nonzero invariant factors d_1 | d_2 | ... | d_r (all
/// positive). When transforms were requested, `left` (m x m) and `right`
/// (n x n) are unimodular and left * M * right is the m x n matrix with
/// `diag` on the leading diagonal and zeros elsewhere.
struct SmithForm {
  std::vector<Integer> diag;
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;

  std::size_t rank() const { return diag.size(); }
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with
/// t_1 | t_2 | ... | t_k and every t_i >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Normalizes an arbitrary decomposition into cyclic factors (orders of 0
  /// count as free summands, orders of 1 are dropped).
  static FinAbGroup from_cyclic(std::size_t free_rank, const std::vector<long>& orders);
  static FinAbGroup from_invariants(std::size_t free_rank, std::vector<Integer> torsion);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }

  bool is_finite() const { return free_rank_ == 0; }
  /// Group order; empty when the group is infinite.
  std::optional<Integer> order() const;

  FinAbGroup direct_sum(const FinAbGroup& other) const;

  /// Human-readable form, e.g. "Z/4 ⊕ (Z/2)^4" or "Z^2".
  std::string to_string() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Z^cols / (row span of m).
FinAbGroup cokernel(const IntMatrix& m);

std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_mod2(const IntMatrix& m);

bool groups_isomorphic(const FinAbGroup& a, const FinAbGroup& b);

}  // namespace surface_lab

#endif  // SURFACE_LAB_INTEGER_ALGEBRA_HPP
