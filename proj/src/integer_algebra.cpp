#include "surface_lab/integer_algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

#include "surface_lab/errors.hpp"

namespace surface_lab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows,
                               std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (row.size() != cols_) throw InvalidArgument("IntMatrix::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::append_row(const std::vector<long>& row) {
  if (row.size() != cols_) throw InvalidArgument("IntMatrix::append_row: width mismatch");
  for (long v : row) data_.emplace_back(v);
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("IntMatrix product: dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Working state for the reduction. Row operations are mirrored into `left`,
// column operations into `right`, so left * M * right == a at all times.
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool track)
      : a_(m), track_(track), m_(m.rows()), n_(m.cols()) {
    if (track_) {
      left_ = IntMatrix::identity(m_);
      right_ = IntMatrix::identity(n_);
    }
  }

  SmithForm run() {
    const std::size_t limit = std::min(m_, n_);
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!move_min_to(t, t, m_, t, n_)) break;
      eliminate(t);
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.diag.push_back(a_(i, i));
    if (track_) {
      out.left = std::move(left_);
      out.right = std::move(right_);
    }
    return out;
  }

 private:
  // Moves the nonzero entry of least absolute value in rows [r0, r1) x
  // cols [c0, c1) to (t, t). Returns false if that block is zero.
  bool move_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0,
                   std::size_t c1) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    Integer best;
    for (std::size_t r = r0; r < r1; ++r)
      for (std::size_t c = c0; c < c1; ++c) {
        const Integer& v = a_(r, c);
        if (v == 0) continue;
        if (!found || cmpabs(v, best) < 0) {
          best = abs(v);
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void eliminate(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (a_(i, t) == 0) continue;
        Integer q = a_(i, t) / a_(t, t);  // truncating; remainder is smaller than the pivot
        add_row_multiple(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (a_(t, j) == 0) continue;
        Integer q = a_(t, j) / a_(t, t);
        add_col_multiple(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        pull_smaller_pivot(t);
        continue;
      }
      // Row t and column t are clear; enforce divisibility on the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m_ && divisible; ++i)
        for (std::size_t j = t + 1; j < n_; ++j)
          if (a_(i, j) % a_(t, t) != 0) {
            add_row_multiple(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) return;
    }
  }

  // Some remainder in row/column t is nonzero and strictly smaller than the
  // pivot: bring the smallest one to (t, t).
  void pull_smaller_pivot(std::size_t t) {
    std::size_t br = t, bc = t;
    Integer best = abs(a_(t, t));
    for (std::size_t i = t + 1; i < m_; ++i)
      if (a_(i, t) != 0 && cmpabs(a_(i, t), best) < 0) {
        best = abs(a_(i, t));
        br = i;
        bc = t;
      }
    for (std::size_t j = t + 1; j < n_; ++j)
      if (a_(t, j) != 0 && cmpabs(a_(t, j), best) < 0) {
        best = abs(a_(t, j));
        br = t;
        bc = j;
      }
    swap_rows(t, br);
    swap_cols(t, bc);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(a_(i, c), a_(j, c));
    if (track_)
      for (std::size_t c = 0; c < m_; ++c) std::swap(left_(i, c), left_(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m_; ++r) std::swap(a_(r, i), a_(r, j));
    if (track_)
      for (std::size_t r = 0; r < n_; ++r) std::swap(right_(r, i), right_(r, j));
  }

  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < n_; ++c) a_(dst, c) += k * a_(src, c);
    if (track_)
      for (std::size_t c = 0; c < m_; ++c) left_(dst, c) += k * left_(src, c);
  }

  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < m_; ++r) a_(r, dst) += k * a_(r, src);
    if (track_)
      for (std::size_t r = 0; r < n_; ++r) right_(r, dst) += k * right_(r, src);
  }

  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < n_; ++c) a_(t, c) = -a_(t, c);
    if (track_)
      for (std::size_t c = 0; c < m_; ++c) left_(t, c) = -left_(t, c);
  }

  IntMatrix a_;
  IntMatrix left_;
  IntMatrix right_;
  bool track_;
  std::size_t m_;
  std::size_t n_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  return SmithReducer(m, with_transforms).run();
}

FinAbGroup FinAbGroup::from_cyclic(std::size_t free_rank, const std::vector<long>& orders) {
  std::vector<long> finite;
  for (long o : orders) {
    if (o == 0)
      ++free_rank;
    else
      finite.push_back(o < 0 ? -o : o);
  }
  // Z/o_1 + ... + Z/o_k is the cokernel of diag(o_1, ..., o_k).
  IntMatrix d(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
  FinAbGroup g = cokernel(d);
  g.free_rank_ += free_rank;
  return g;
}

FinAbGroup FinAbGroup::from_invariants(std::size_t free_rank, std::vector<Integer> torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw InvalidArgument("FinAbGroup: invariant factors must be >= 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw InvalidArgument("FinAbGroup: invariant factors must form a divisibility chain");
  }
  FinAbGroup g;
  g.free_rank_ = free_rank;
  g.torsion_ = std::move(torsion);
  return g;
}

std::optional<Integer> FinAbGroup::order() const {
  if (free_rank_ != 0) return std::nullopt;
  Integer o = 1;
  for (const auto& t : torsion_) o *= t;
  return o;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<Integer> all = torsion_;
  all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
  IntMatrix d(all.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) d(i, i) = all[i];
  FinAbGroup g = cokernel(d);
  g.free_rank_ = free_rank_ + other.free_rank_;
  return g;
}

std::string FinAbGroup::to_string() const {
  std::vector<std::string> parts;
  // Group equal factors, largest first: Z/4 ⊕ (Z/2)^4.
  std::size_t i = torsion_.size();
  while (i > 0) {
    std::size_t j = i;
    while (j > 0 && torsion_[j - 1] == torsion_[i - 1]) --j;
    const std::size_t count = i - j;
    const std::string base = "Z/" + torsion_[i - 1].get_str();
    parts.push_back(count == 1 ? base : "(" + base + ")^" + std::to_string(count));
    i = j;
  }
  if (free_rank_ > 0)
    parts.insert(parts.begin(), free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " ⊕ " + parts[k];
  return out;
}

FinAbGroup cokernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<Integer> torsion;
  for (const auto& d : snf.diag)
    if (d > 1) torsion.push_back(d);
  return FinAbGroup::from_invariants(m.cols() - snf.rank(), std::move(torsion));
}

std::size_t rank_rational(const IntMatrix& m) { return smith_normal_form(m).rank(); }

std::size_t rank_mod2(const IntMatrix& m) {
  std::vector<std::vector<std::uint8_t>> rows(m.rows(), std::vector<std::uint8_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = mpz_odd_p(m(r, c).get_mpz_t()) ? 1 : 0;

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = c; k < m.cols(); ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

bool groups_isomorphic(const FinAbGroup& a, const FinAbGroup& b) {
  return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

}  // namespace surface_lab
