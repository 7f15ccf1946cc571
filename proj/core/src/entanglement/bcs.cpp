#include "wba/entanglement/bcs.hpp"

#include <cmath>

#include "wba/util/error.hpp"

namespace wba {

WbaElement bcs_element(double alpha, double beta) {
  WbaElement out(3);
  out.add_term(parse_diagram("(1 2)^T{2}", 3), Complex(1.0));
  out.add_term(parse_diagram("(1 3)", 3), Complex(1.0));
  out.add_term(WbaDiagram::identity(3), Complex(alpha));
  out.add_term(parse_diagram("(2 3)^T{2}", 3), Complex(beta));
  return out;
}

DenseOperator bcs_kernel(double alpha, double beta, int d) {
  if (d < 2) throw Error("the BCS kernel needs d >= 2");
  return realize(bcs_element(alpha, beta), d);
}

double bcs_threshold(double beta, int d) {
  if (d < 3) throw Error("the BCS positivity condition is stated for d >= 3");
  if (beta >= 0) return 0.0;
  const double db = d * beta;
  return (-(2.0 + db) + std::sqrt(db * db - 4.0 * (d - 2) * beta + 4.0)) / 2.0;
}

bool bcs_positivity_condition(double alpha, double beta, int d) {
  const double threshold = bcs_threshold(beta, d);
  if (beta >= 0) return alpha >= 0;
  return alpha >= threshold;
}

}  // namespace wba
