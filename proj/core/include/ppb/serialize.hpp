#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ppb/fermionic.hpp"
#include "ppb/heisenberg.hpp"
#include "ppb/numeric.hpp"
#include "ppb/poly.hpp"
#include "ppb/scalar.hpp"
#include "ppb/states.hpp"

namespace ppb {

using Json = nlohmann::ordered_json;

// JSON: every rational is a "p/q" string; key order is fixed so output is
// byte-stable. Readers accept "p" for "p/1" and throw std::invalid_argument
// on malformed documents.

/// {"a_re", "a_im", "b_re", "b_im"}.
Json to_json(const ExactScalar& x);
ExactScalar scalar_from_json(const Json& j);

/// Coefficient list, index = degree.
Json to_json(const PolyC& p);
PolyC poly_from_json(const Json& j);

/// {"phase_rate", "coeffs"}.
Json to_json(const PhasePolyFunction& f);
PhasePolyFunction function_from_json(const Json& j);

/// {"c_x", "c_p"}.
Json to_json(const LinearObservable& obs);
LinearObservable observable_from_json(const Json& j);

/// Row-major list of the four entries.
Json to_json(const Matrix2& m);
Matrix2 matrix_from_json(const Json& j);

/// Header "degree,a_re,a_im,b_re,b_im", one row per coefficient.
std::string to_csv(const PolyC& p);

/// Header "xi,re,im,abs2"; invalid nodes are skipped.
std::string to_csv(const SampledFunction& s);

std::string to_latex(const ExactScalar& x);
/// Descending powers of \xi, e.g. "4\xi^{2} - 2i".
std::string to_latex(const PolyC& p);

}  // namespace ppb
