#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace weilgraph {

// Matrices and vectors over the two-element field. Entries are stored as
// bytes holding 0 or 1; every routine reduces its inputs mod 2 first.
using Gf2Matrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using Gf2Vector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;

std::size_t gf2_rank(const Gf2Matrix& m);

// Basis of the right null space, one vector per free column taken in
// ascending column order.
std::vector<Gf2Vector> gf2_kernel_basis(const Gf2Matrix& m);

// Some x with m x = b, free variables set to zero; nullopt when the
// system is inconsistent. Throws std::invalid_argument on size mismatch.
std::optional<Gf2Vector> gf2_solve(const Gf2Matrix& m, const Gf2Vector& b);

Gf2Matrix gf2_product(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Vector gf2_apply(const Gf2Matrix& a, const Gf2Vector& x);
std::uint8_t gf2_dot(const Gf2Vector& x, const Gf2Vector& y);

inline bool gf2_is_invertible(const Gf2Matrix& m) {
  return m.rows() == m.cols() && gf2_rank(m) == static_cast<std::size_t>(m.rows());
}

// x^T m y.
std::uint8_t gf2_bilinear(const Gf2Vector& x, const Gf2Matrix& m, const Gf2Vector& y);

}  // namespace weilgraph
