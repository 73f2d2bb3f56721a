#include "ppb/serialize.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace ppb {

namespace {

constexpr std::array<const char*, 4> kScalarKeys{"a_re", "a_im", "b_re", "b_im"};

Rational rational_from_json(const Json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON member \"") + key + "\"");
  return j.at(key);
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace

Json to_json(const ExactScalar& x) {
  Json j = Json::object();
  j[kScalarKeys[0]] = format_rational(x.a_re());
  j[kScalarKeys[1]] = format_rational(x.a_im());
  j[kScalarKeys[2]] = format_rational(x.b_re());
  j[kScalarKeys[3]] = format_rational(x.b_im());
  return j;
}

ExactScalar scalar_from_json(const Json& j) {
  std::array<Rational, 4> parts;
  for (std::size_t k = 0; k < 4; ++k) parts[k] = rational_from_json(member(j, kScalarKeys[k]), kScalarKeys[k]);
  return ExactScalar(parts[0], parts[1], parts[2], parts[3]);
}

Json to_json(const PolyC& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

PolyC poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected a coefficient array");
  std::vector<ExactScalar> coeffs;
  for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
  return PolyC(std::move(coeffs));
}

Json to_json(const PhasePolyFunction& f) {
  Json j = Json::object();
  j["phase_rate"] = format_rational(f.phase_rate());
  j["coeffs"] = to_json(f.poly());
  return j;
}

PhasePolyFunction function_from_json(const Json& j) {
  return {rational_from_json(member(j, "phase_rate"), "phase_rate"), poly_from_json(member(j, "coeffs"))};
}

Json to_json(const LinearObservable& obs) {
  Json j = Json::object();
  j["c_x"] = to_json(obs.c_x);
  j["c_p"] = to_json(obs.c_p);
  return j;
}

LinearObservable observable_from_json(const Json& j) {
  return {scalar_from_json(member(j, "c_x")), scalar_from_json(member(j, "c_p"))};
}

Json to_json(const Matrix2& m) {
  Json j = Json::array();
  for (const auto& e : m.entries) j.push_back(to_json(e));
  return j;
}

Matrix2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("matrix: expected four row-major entries");
  Matrix2 m;
  for (std::size_t k = 0; k < 4; ++k) m.entries[k] = scalar_from_json(j[k]);
  return m;
}

std::string to_csv(const PolyC& p) {
  std::string out = "degree,a_re,a_im,b_re,b_im\n";
  const auto coeffs = p.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& c = coeffs[k];
    out += std::to_string(k) + "," + format_rational(c.a_re()) + "," + format_rational(c.a_im()) + "," +
           format_rational(c.b_re()) + "," + format_rational(c.b_im()) + "\n";
  }
  return out;
}

std::string to_csv(const SampledFunction& s) {
  std::string out = "xi,re,im,abs2\n";
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (!s.is_valid(k)) continue;
    const auto v = s.values[k];
    out += format_double(s.grid.node(k)) + "," + format_double(v.real()) + "," + format_double(v.imag()) + "," +
           format_double(std::norm(v)) + "\n";
  }
  return out;
}

namespace {

struct LatexTerm {
  Rational value;
  std::string unit;
};

std::vector<LatexTerm> latex_terms(const ExactScalar& x) {
  std::vector<LatexTerm> terms;
  const std::array<std::pair<const Rational*, const char*>, 4> parts{
      {{&x.a_re(), ""}, {&x.a_im(), "i"}, {&x.b_re(), "\\sqrt{2}"}, {&x.b_im(), "i\\sqrt{2}"}}};
  for (const auto& [value, unit] : parts)
    if (*value != 0) terms.push_back({*value, unit});
  return terms;
}

// Magnitude of one term; `bare_one` drops a unit coefficient when a unit or
// power of xi follows.
std::string latex_magnitude(const Rational& magnitude, const std::string& unit, bool bare_one) {
  std::string number;
  if (magnitude.get_den() == 1) {
    number = magnitude.get_num().get_str();
  } else {
    number = "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
  }
  if (magnitude == 1 && (!unit.empty() || bare_one)) number.clear();
  return number + unit;
}

std::string latex_signed(const std::vector<LatexTerm>& terms, bool bare_one) {
  std::string out;
  for (const auto& t : terms) {
    const bool negative = t.value < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += latex_magnitude(abs(t.value), t.unit, bare_one && terms.size() == 1);
  }
  return out;
}

}  // namespace

std::string to_latex(const ExactScalar& x) {
  if (x.is_zero()) return "0";
  return latex_signed(latex_terms(x), false);
}

std::string to_latex(const PolyC& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coeffs();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const auto& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string power;
    if (k == 1) power = "\\xi";
    if (k > 1) power = "\\xi^{" + std::to_string(k) + "}";
    const auto terms = latex_terms(c);
    std::string body;
    bool negative = false;
    if (terms.size() == 1) {
      negative = terms.front().value < 0;
      body = latex_magnitude(abs(terms.front().value), terms.front().unit, !power.empty());
    } else {
      body = "(" + latex_signed(terms, false) + ")";
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += body + power;
  }
  return out;
}

}  // namespace ppb
