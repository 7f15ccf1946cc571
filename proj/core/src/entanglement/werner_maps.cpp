#include "wba/entanglement/werner_maps.hpp"

#include <limits>

#include "wba/dense/operations.hpp"
#include "wba/dense/random.hpp"
#include "wba/maps/oracle.hpp"
#include "wba/util/error.hpp"

namespace wba {
namespace {

DenseOperator one(const Matrix& m) { return DenseOperator::single_site(m); }
DenseOperator pair(const Matrix& x, const Matrix& y) { return kron(one(x), one(y)); }
DenseOperator r(const DenseOperator& m) { return reshuffle_bipartite(m); }
DenseOperator rt2(const DenseOperator& m) { return partial_transpose(reshuffle_bipartite(m), {2}); }

DenseOperator f_closed(const std::string& name, const std::array<Complex, 6>& al, const Matrix& a) {
  const auto d = a.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix at = a.transpose();
  const Complex ta = a.trace();
  const DenseOperator ii = pair(id, id);
  std::array<DenseOperator, 6> t;
  if (name == "f1") {
    t = {ta * ii, pair(at, id), ta * rt2(ii), pair(id, at), rt2(pair(at, id)), rt2(pair(id, a))};
  } else if (name == "f2") {
    t = {ta * ii, pair(at, id), ta * r(ii), pair(id, a), r(pair(id, a)), r(pair(at, id))};
  } else if (name == "f3") {
    t = {ta * ii, pair(a, id), ta * r(ii), pair(id, at), r(pair(a, id)), r(pair(id, at))};
  } else if (name == "f12") {
    t = {ta * ii, pair(a, id), ta * r(ii), pair(id, at), r(pair(id, at)), r(pair(a, id))};
  } else if (name == "f13") {
    t = {ta * ii, pair(at, id), ta * r(ii), pair(id, a), r(pair(at, id)), r(pair(id, a))};
  } else if (name == "f23") {
    t = {ta * ii, pair(at, id), ta * rt2(ii), pair(id, at), rt2(pair(id, a)), rt2(pair(at, id))};
  } else {
    throw Error("unknown f map " + name);
  }
  DenseOperator out(2, static_cast<int>(d));
  for (std::size_t i = 0; i < 6; ++i) out += al[i] * t[i];
  return out;
}

DenseOperator g_closed(const std::string& name, const std::array<Complex, 6>& al, const Matrix& a, const Matrix& b) {
  const auto d = a.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix at = a.transpose();
  const Matrix bt = b.transpose();
  const Complex ta = a.trace();
  const Complex tb = b.trace();
  std::array<Matrix, 6> t;
  if (name == "g1") {
    t = {ta * tb * id, (at * b).trace() * id, ta * b, tb * at, b * at, at * b};
  } else if (name == "g2") {
    t = {ta * tb * id, (a * bt).trace() * id, ta * bt, tb * a, bt * a, a * bt};
  } else if (name == "g3") {
    t = {ta * tb * id, (a * b).trace() * id, ta * bt, tb * at, at * bt, bt * at};
  } else if (name == "g12") {
    t = {ta * tb * id, (at * bt).trace() * id, ta * bt, tb * at, bt * at, at * bt};
  } else if (name == "g13") {
    t = {ta * tb * id, (at * b).trace() * id, ta * bt, tb * a, a * bt, bt * a};
  } else if (name == "g23") {
    t = {ta * tb * id, (at * b).trace() * id, ta * b, tb * at, at * b, b * at};
  } else {
    throw Error("unknown g map " + name);
  }
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < 6; ++i) out += al[i] * t[i];
  return one(out);
}

void check_inputs(const WernerMapRow& row, const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || a.rows() < 1) throw Error("map input A must be square");
  if (row.kind == WernerMapKind::kG && (b.rows() != a.rows() || b.cols() != a.cols())) {
    throw Error("g maps take two inputs of equal size");
  }
}

double min_output(const DenseOperator& out) {
  const DenseOperator h = 0.5 * (out + out.adjoint());
  return min_eigenvalue(h);
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

}  // namespace

std::string WernerMapRow::name() const {
  std::string out = kind == WernerMapKind::kF ? "f" : "g";
  for (int s : transposed) out += std::to_string(s);
  return out;
}

const std::vector<WernerMapRow>& werner_map_rows() {
  static const std::vector<WernerMapRow> rows = [] {
    std::vector<WernerMapRow> out;
    for (auto kind : {WernerMapKind::kF, WernerMapKind::kG})
      for (const SiteSubset& s : {SiteSubset{1}, SiteSubset{2}, SiteSubset{3}, SiteSubset{1, 2}, SiteSubset{1, 3},
                                  SiteSubset{2, 3}})
        out.push_back({kind, s});
    return out;
  }();
  return rows;
}

WernerMapRow parse_werner_map_row(std::string_view text) {
  for (const auto& row : werner_map_rows())
    if (row.name() == text) return row;
  throw Error("unknown map row '" + std::string(text) + "' (expected f1..f23 or g1..g23)");
}

DenseOperator eggeling_werner_map(const WernerMapRow& row, const std::array<Complex, 6>& alphas, const Matrix& a,
                                  const Matrix& b) {
  check_inputs(row, a, b);
  if (row.kind == WernerMapKind::kF) return f_closed(row.name(), alphas, a);
  return g_closed(row.name(), alphas, a, b);
}

DenseOperator eggeling_werner_map(const WernerMapRow& row, const WernerParams& params, const Matrix& a,
                                  const Matrix& b) {
  params.check_consistent();
  return eggeling_werner_map(row, params.alphas, a, b);
}

DenseOperator eggeling_werner_trace_form(const WernerMapRow& row, const std::array<Complex, 6>& alphas,
                                         const Matrix& a, const Matrix& b) {
  check_inputs(row, a, b);
  const int d = static_cast<int>(a.rows());
  const auto perms = werner_permutations(d);
  DenseOperator rho(3, d);
  for (std::size_t i = 0; i < 6; ++i) rho += alphas[i] * perms[i];
  const DenseOperator kernel = partial_transpose(rho, row.transposed);
  const DenseOperator id = DenseOperator::identity(1, d);
  if (row.kind == WernerMapKind::kF) {
    const std::vector<DenseOperator> factors{one(a), id, id};
    return contract(kernel, factors, {1});
  }
  const std::vector<DenseOperator> factors{one(a), one(b), id};
  return contract(kernel, factors, {1, 2});
}

MapPositivityReport map_positivity_check(const WernerParams& params, const SiteSubset& s, const SearchBudget& budget,
                                      int samples, double tol) {
  if (s.size() >= 3) throw Error("S must be a proper subset of {1,2,3}");
  s.check_range(3);
  const int d = params.d;
  const DenseOperator kernel = partial_transpose(werner_state(params), s);
  MapPositivityReport rep;
  rep.f_verdict = check_block_positive(kernel, parse_partition_spec("1|23"), budget);
  rep.g_verdict = check_block_positive(kernel, PartitionSpec::singletons(3), budget);

  const WernerMapRow f_row{WernerMapKind::kF, s};
  const WernerMapRow g_row{WernerMapKind::kG, s};
  Rng rng(budget.seed ^ 0x5eed5eedULL);
  std::vector<std::pair<Matrix, Matrix>> inputs;
  for (int i = 0; i < samples; ++i) {
    const Matrix a = projector(random_unit_vector(d, rng));
    const Matrix b = projector(random_unit_vector(d, rng));
    inputs.emplace_back(a, b);
  }
  rep.f_min_output = std::numeric_limits<double>::infinity();
  rep.g_min_output = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : inputs) {
    rep.f_min_output = std::min(rep.f_min_output, min_output(eggeling_werner_map(f_row, params.alphas, a)));
    rep.g_min_output = std::min(rep.g_min_output, min_output(eggeling_werner_map(g_row, params.alphas, a, b)));
  }
  // Inputs built from the product minimizers.
  double f_cert = std::numeric_limits<double>::infinity();
  double g_cert = std::numeric_limits<double>::infinity();
  if (rep.f_verdict.violating_product_state) {
    const auto& v = *rep.f_verdict.violating_product_state;
    f_cert = min_output(eggeling_werner_map(f_row, params.alphas, projector(v[0])));
    rep.f_min_output = std::min(rep.f_min_output, f_cert);
  }
  if (rep.g_verdict.violating_product_state) {
    const auto& v = *rep.g_verdict.violating_product_state;
    g_cert = min_output(eggeling_werner_map(g_row, params.alphas, projector(v[0]), projector(v[1])));
    rep.g_min_output = std::min(rep.g_min_output, g_cert);
  }
  auto judge = [&](const char* name, const PositivityVerdict& verdict, double min_out, double cert, bool& ok) {
    if (verdict.block_positive() && min_out < -tol) {
      ok = false;
      rep.contradictions.push_back(std::string(name) + ": block-positive kernel but output eigenvalue " +
                                   std::to_string(min_out));
    }
    if (verdict.classification == Classification::kNotBlockPositive && cert >= -tol) {
      ok = false;
      rep.contradictions.push_back(std::string(name) + ": product certificate does not give a negative output");
    }
  };
  judge(f_row.name().c_str(), rep.f_verdict, rep.f_min_output, f_cert, rep.f_consistent);
  judge(g_row.name().c_str(), rep.g_verdict, rep.g_min_output, g_cert, rep.g_consistent);
  if (rep.f_verdict.block_positive() && rep.g_verdict.classification == Classification::kNotBlockPositive) {
    rep.nesting_consistent = false;
    rep.contradictions.push_back("block-positive across 1|23 but not across 1|2|3");
  }
  return rep;
}

}  // namespace wba
