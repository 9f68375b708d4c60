#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmodisk/boundary_data.hpp"

namespace harmodisk {

// Regularity class of a built-in boundary expression.
enum class CorpusClass {
  trig_polynomial,  // finite Fourier series; `degree` is set
  analytic,         // C^infinity with geometric coefficient decay
  holder,           // C^{k,alpha} with finite k
  discontinuous,
};

struct CorpusEntry {
  std::string name;
  CorpusClass cls;
  int degree = -1;  // trig_polynomial only
  BoundaryData data;
};

// Built-in closed-form boundary expressions, by name:
//   const<c>       g = c
//   cos<m>, sin<m> f = cos(m theta), sin(m theta)
//   abssin<a>      f = |sin(theta/2)|^a, 0 < a <= 1
//   hat            f = 1 - 2|theta|/pi (piecewise linear)
//   square         f = sign(theta), 0 at theta = 0, +-pi
//   parabolic      f = theta (pi - |theta|), in C^{1,1}
//   expcos         f = exp(cos theta)
//   kernel<q>      f = (1 - q^2) / (1 - 2q cos theta + q^2), 0 < q < 1
//   x, y, x2-y2, 2xy, re3, im3   harmonic polynomial traces g(x, y)
// Throws ErrorKind::invalid_argument for unknown names.
CorpusEntry corpus_entry(const std::string& name, double radius = 1.0);

// Names covering every class above, used by tests and studies.
std::vector<std::string> corpus_names();

// Members whose Fourier coefficients decay at least geometrically.
std::vector<std::string> smooth_corpus_names();

}  // namespace harmodisk
