#include "weilgraph/smith.hpp"

#include <stdexcept>
#include <utility>

namespace weilgraph {
namespace {

// Row and column operations on the working matrix, mirrored into the
// transforms. Row ops act on `left` from the left and on `left_inverse`
// (inversely) from the right.
class Reducer {
public:
  explicit Reducer(const IntMatrix& m)
      : a_(m),
        left_(IntMatrix::Identity(m.rows(), m.rows())),
        left_inv_(IntMatrix::Identity(m.rows(), m.rows())),
        right_(IntMatrix::Identity(m.cols(), m.cols())) {}

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.row(i).swap(a_.row(j));
    left_.row(i).swap(left_.row(j));
    left_inv_.col(i).swap(left_inv_.col(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.col(i).swap(a_.col(j));
    right_.col(i).swap(right_.col(j));
  }
  // row(target) -= q * row(source)
  void row_axpy(Eigen::Index target, Eigen::Index source, const BigInt& q) {
    if (q.is_zero()) return;
    a_.row(target) -= q * a_.row(source);
    left_.row(target) -= q * left_.row(source);
    left_inv_.col(source) += q * left_inv_.col(target);
  }
  // col(target) -= q * col(source)
  void col_axpy(Eigen::Index target, Eigen::Index source, const BigInt& q) {
    if (q.is_zero()) return;
    a_.col(target) -= q * a_.col(source);
    right_.col(target) -= q * right_.col(source);
  }
  void negate_row(Eigen::Index i) {
    a_.row(i) = -a_.row(i);
    left_.row(i) = -left_.row(i);
    left_inv_.col(i) = -left_inv_.col(i);
  }

  const BigInt& at(Eigen::Index i, Eigen::Index j) const { return a_(i, j); }
  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }

  SmithForm finish(Eigen::Index rank) && {
    SmithForm out;
    for (Eigen::Index t = 0; t < std::min(a_.rows(), a_.cols()); ++t)
      out.diagonal.push_back(t < rank ? a_(t, t) : BigInt(0));
    out.left = std::move(left_);
    out.right = std::move(right_);
    out.left_inverse = std::move(left_inv_);
    return out;
  }

private:
  IntMatrix a_;
  IntMatrix left_;
  IntMatrix left_inv_;
  IntMatrix right_;
};

// Position of the smallest nonzero magnitude in the trailing block.
bool smallest_nonzero(const Reducer& r, Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
  bool found = false;
  BigInt best;
  for (Eigen::Index j = t; j < r.cols(); ++j) {
    for (Eigen::Index i = t; i < r.rows(); ++i) {
      if (r.at(i, j).is_zero()) continue;
      BigInt mag = abs(r.at(i, j));
      if (!found || mag < best) {
        best = std::move(mag);
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

IntMatrix SmithForm::diagonal_matrix(Eigen::Index rows, Eigen::Index cols) const {
  IntMatrix d = IntMatrix::Zero(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diagonal[i];
  }
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  const Eigen::Index k = std::min(m.rows(), m.cols());
  Eigen::Index t = 0;
  for (; t < k; ++t) {
    Eigen::Index pi = 0, pj = 0;
    if (!smallest_nonzero(r, t, pi, pj)) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot; a nonzero remainder is a smaller
      // pivot candidate.
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < r.rows(); ++i) {
        if (r.at(i, t).is_zero()) continue;
        r.row_axpy(i, t, r.at(i, t) / r.at(t, t));
        if (!r.at(i, t).is_zero()) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < r.cols(); ++j) {
        if (r.at(t, j).is_zero()) continue;
        r.col_axpy(j, t, r.at(t, j) / r.at(t, t));
        if (!r.at(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // Move the smallest remaining entry of row/column t onto the pivot.
        Eigen::Index bi = t, bj = t;
        BigInt best = abs(r.at(t, t));
        for (Eigen::Index i = t + 1; i < r.rows(); ++i)
          if (!r.at(i, t).is_zero() && abs(r.at(i, t)) < best) { best = abs(r.at(i, t)); bi = i; bj = t; }
        for (Eigen::Index j = t + 1; j < r.cols(); ++j)
          if (!r.at(t, j).is_zero() && abs(r.at(t, j)) < best) { best = abs(r.at(t, j)); bi = t; bj = j; }
        r.swap_rows(t, bi);
        r.swap_cols(t, bj);
        continue;
      }

      // Pivot must divide the rest of the trailing block.
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < r.rows() && bad_row < 0; ++i)
        for (Eigen::Index j = t + 1; j < r.cols(); ++j)
          if (!(r.at(i, j) % r.at(t, t)).is_zero()) { bad_row = i; break; }
      if (bad_row < 0) break;
      r.row_axpy(t, bad_row, BigInt(-1));
    }
    if (r.at(t, t).sign() < 0) r.negate_row(t);
  }
  return std::move(r).finish(t);
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return BigInt(1);
  IntMatrix a = m;
  BigInt sign(1);
  BigInt prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) { swap = i; break; }
      if (swap < 0) return BigInt(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("int_product: inner dimensions differ");
  IntMatrix out = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace weilgraph
