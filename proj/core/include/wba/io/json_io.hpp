#pragma once

#include <complex>
#include <nlohmann/json.hpp>

#include "wba/algebra/element.hpp"
#include "wba/dense/operator.hpp"
#include "wba/entanglement/block_positivity.hpp"
#include "wba/entanglement/werner.hpp"
#include "wba/maps/verification.hpp"

namespace wba {

using Json = nlohmann::json;

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

/// Array of rows, each entry {"re": .., "im": ..}.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"n": .., "d": .., "entries": matrix}.
Json operator_to_json(const DenseOperator& m);
DenseOperator operator_from_json(const Json& j);

/// [{"diagram": "(1 2)^T{2}", "coeff": [{"power": 0, "re": .., "im": ..}]}].
Json element_to_json(const WbaElement& x);
WbaElement element_from_json(const Json& j, int n);

Json verdict_to_json(const PositivityVerdict& v);
Json werner_to_json(const WernerParams& p);
Json report_to_json(const VerificationReport& r);

}  // namespace wba
