#include "wba/maps/projector_maps.hpp"

#include "wba/algebra/projectors.hpp"
#include "wba/dense/operations.hpp"

namespace wba {
namespace {

DenseOperator one_site(const Matrix& m) { return DenseOperator::single_site(m); }

DenseOperator pair(const Matrix& x, const Matrix& y) { return kron(one_site(x), one_site(y)); }

DenseOperator r(const DenseOperator& m) { return reshuffle_bipartite(m); }

}  // namespace

WbaElement mixed_projector_n4() { return f_projector(Partition({2, 1}), Partition({2}), 4, 1, 2); }

WbaElement mixed_projector_n4_truncated() {
  WbaElement out(4);
  const char* bases[] = {"(1 4)^T{4}", "(2 4)^T{4}", "(3 4)^T{4}"};
  for (const char* b : bases) {
    const WbaElement g(parse_diagram(b, 4));
    out += DPolynomial(2.0 / 6.0) * g;
    out -= DPolynomial(1.0 / 6.0) * multiply(WbaElement(parse_diagram("(1 2 3)", 4)), g);
    out -= DPolynomial(1.0 / 6.0) * multiply(WbaElement(parse_diagram("(1 3 2)", 4)), g);
  }
  return out;
}

DenseOperator lambda_2to2(const Matrix& a, const Matrix& b) {
  const auto d = a.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Complex ta = a.trace();
  const Complex tb = b.trace();
  const Complex tab = (a * b).trace();
  const Matrix at = a.transpose();
  const Matrix bt = b.transpose();
  DenseOperator plus = tb * pair(id, at) + ta * pair(id, bt) + (ta * tb + tab) * r(pair(id, id)) + pair(a, bt) +
                       pair(b, at);
  DenseOperator minus = r(pair(b, at)) + r(pair(id, at * bt)) + r(pair(b * a, id)) + r(pair(id, bt * at)) +
                        r(pair(a, bt)) + r(pair(a * b, id)) + tb * r(pair(a, id)) + ta * r(pair(id, bt)) +
                        pair(id, bt * at) + ta * r(pair(b, id)) + pair(id, at * bt) + tb * r(pair(id, at));
  return Complex(1.0 / 3.0) * plus - Complex(1.0 / 6.0) * minus;
}

DenseOperator lambda_3to1(const Matrix& a, const Matrix& b, const Matrix& c) {
  const Complex ta = a.trace();
  const Complex tb = b.trace();
  const Complex tc = c.trace();
  const Matrix plus = tb * tc * a.transpose() + ta * tc * b.transpose() + ta * tb * c.transpose() +
                      (a * b).trace() * c.transpose() + (a * c).trace() * b.transpose() +
                      (b * c).trace() * a.transpose();
  const Matrix cycles = (a * c * b + b * a * c + c * b * a + a * b * c + b * c * a + c * a * b).transpose();
  const Matrix pairs = ta * (b * c + c * b).transpose() + tb * (a * c + c * a).transpose() +
                       tc * (a * b + b * a).transpose();
  return one_site(plus / 3.0 - cycles / 6.0 - pairs / 6.0);
}

DenseOperator lambda_2to2_truncated(const Matrix& a, const Matrix& b) {
  const auto d = a.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Complex ta = a.trace();
  const Complex tb = b.trace();
  const Matrix at = a.transpose();
  const Matrix bt = b.transpose();
  DenseOperator minus = r(pair(b, at)) + r(pair(id, at * bt)) + r(pair(id, b * a)) + r(pair(id, bt * at)) +
                        r(pair(a, bt)) + r(pair(a * b, id));
  DenseOperator plus = tb * pair(id, at) + ta * pair(id, bt) + ta * tb * r(pair(id, id));
  return Complex(1.0 / 3.0) * plus - Complex(1.0 / 6.0) * minus;
}

DenseOperator lambda_3to1_truncated(const Matrix& a, const Matrix& b, const Matrix& c) {
  const Complex ta = a.trace();
  const Complex tb = b.trace();
  const Complex tc = c.trace();
  const Matrix cycles = (a * c * b + b * a * c + c * b * a + a * b * c + b * c * a + c * a * b).transpose();
  const Matrix plus = tb * tc * a.transpose() + ta * tc * b.transpose() + ta * tb * c.transpose();
  return one_site(plus / 3.0 - cycles / 6.0);
}

}  // namespace wba
