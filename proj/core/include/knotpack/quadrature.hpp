#ifndef KNOTPACK_QUADRATURE_HPP
#define KNOTPACK_QUADRATURE_HPP

#include <vector>

namespace knotpack {

struct QuadratureNode {
    double t;  // node mapped to [0,1]
    double w;  // weight; weights sum to 1 over [0,1]
};

// Gauss-Legendre rule with `points` nodes, mapped to [0,1].
// Exact for polynomials up to degree 2*points - 1.
const std::vector<QuadratureNode>& gauss_legendre_unit(int points);

}  // namespace knotpack

#endif  // KNOTPACK_QUADRATURE_HPP
