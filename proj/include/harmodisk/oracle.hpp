#pragma once

#include <cstddef>
#include <span>

#include "harmodisk/boundary_data.hpp"
#include "harmodisk/fourier.hpp"

// Reference implementations used only to validate the series pipeline.
// Nothing in the library proper depends on this header.
namespace harmodisk::oracle {

// max(8192, ceil(100 / (1 - |p|/R))).
std::size_t default_poisson_nodes(const CartesianPoint& p, double radius);

// Poisson integral by the periodic trapezoidal rule. nodes == 0 selects
// default_poisson_nodes. Throws ErrorKind::out_of_domain unless |p| < R.
double poisson_eval(const BoundaryData& b, const CartesianPoint& p, std::size_t nodes = 0);

// a_0/2 + sum (r/R)^k (a_k cos k theta + b_k sin k theta) with library
// trigonometry. Throws ErrorKind::out_of_domain for r > R.
double polar_partial_sum(const FourierSpectrum& s, double r, double theta);

// sum_{k=1}^m a_k b_k by summation by parts:
//   a_{m+1} B_m - sum_{k=1}^m (a_{k+1} - a_k) B_k,  B_k = b_1 + ... + b_k.
// `a` carries one trailing element a_{m+1}; throws invalid_argument unless
// a.size() == b.size() + 1 and b is nonempty.
double abel_sum(std::span<const double> a, std::span<const double> b);

}  // namespace harmodisk::oracle
