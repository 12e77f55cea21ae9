#pragma once

#include "weilgraph/bigint.hpp"

#include <Eigen/Core>

#include <vector>

namespace weilgraph {

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;

// left * original * right == diag(diagonal) padded with zeros to the shape
// of the original. The diagonal is non-negative and every entry divides the
// next, so zeros trail. left_inverse is carried along so that cokernel
// generators can be expressed in the original coordinates.
struct SmithForm {
  std::vector<BigInt> diagonal;
  IntMatrix left;
  IntMatrix right;
  IntMatrix left_inverse;

  IntMatrix diagonal_matrix(Eigen::Index rows, Eigen::Index cols) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Fraction-free (Bareiss) determinant. Independent of smith_normal_form.
BigInt determinant(const IntMatrix& m);

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b);

}  // namespace weilgraph
