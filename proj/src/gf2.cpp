#include "weilgraph/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace weilgraph {
namespace {

struct Echelon {
  Gf2Matrix reduced;
  std::vector<Eigen::Index> pivot_cols;
};

// Reduced row echelon form, eliminating only in the first `ncols` columns.
Echelon row_reduce(Gf2Matrix m, Eigen::Index ncols) {
  m = m.unaryExpr([](std::uint8_t x) -> std::uint8_t { return x & 1u; });
  Echelon out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < ncols && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col)) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col)) {
        for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) ^= m(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace

std::size_t gf2_rank(const Gf2Matrix& m) {
  return row_reduce(m, m.cols()).pivot_cols.size();
}

std::vector<Gf2Vector> gf2_kernel_basis(const Gf2Matrix& m) {
  const Echelon e = row_reduce(m, m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Gf2Vector> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Gf2Vector x = Gf2Vector::Zero(m.cols());
    x(free) = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      x(e.pivot_cols[i]) = e.reduced(static_cast<Eigen::Index>(i), free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Gf2Vector> gf2_solve(const Gf2Matrix& m, const Gf2Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("gf2_solve: right-hand side has wrong length");
  Gf2Matrix aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const Echelon e = row_reduce(std::move(aug), m.cols());
  const auto rank = static_cast<Eigen::Index>(e.pivot_cols.size());
  for (Eigen::Index r = rank; r < m.rows(); ++r) {
    if (e.reduced(r, m.cols())) return std::nullopt;
  }
  Gf2Vector x = Gf2Vector::Zero(m.cols());
  for (Eigen::Index i = 0; i < rank; ++i) x(e.pivot_cols[static_cast<std::size_t>(i)]) = e.reduced(i, m.cols());
  return x;
}

Gf2Matrix gf2_product(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("gf2_product: inner dimensions differ");
  Gf2Matrix out = Gf2Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (a(i, k) & 1u)
        for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) ^= (b(k, j) & 1u);
  return out;
}

Gf2Vector gf2_apply(const Gf2Matrix& a, const Gf2Vector& x) {
  return gf2_product(a, x);
}

std::uint8_t gf2_dot(const Gf2Vector& x, const Gf2Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("gf2_dot: length mismatch");
  std::uint8_t acc = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc ^= static_cast<std::uint8_t>(x(i) & y(i) & 1u);
  return acc;
}

std::uint8_t gf2_bilinear(const Gf2Vector& x, const Gf2Matrix& m, const Gf2Vector& y) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw std::invalid_argument("gf2_bilinear: size mismatch");
  return gf2_dot(x, gf2_apply(m, y));
}

}  // namespace weilgraph
