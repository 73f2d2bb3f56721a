#include "ppb_tool/expression.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace ppb::tool {

ExpressionError::ExpressionError(Kind kind, std::size_t offset, const std::string& message)
    : std::runtime_error("at byte " + std::to_string(offset) + ": " + message), kind_(kind), offset_(offset) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    tokens.push_back({text.substr(start, pos - start), start});
  }
  return tokens;
}

constexpr std::array<std::pair<std::string_view, OpToken>, 6> kOperators{{
    {"b+", OpToken::ladder_plus},
    {"b-", OpToken::ladder_minus},
    {"N", OpToken::number},
    {"H", OpToken::hamiltonian},
    {"P", OpToken::parity},
    {"T", OpToken::time_reverse},
}};

std::optional<OpToken> lookup_operator(std::string_view text) {
  for (const auto& [name, op] : kOperators)
    if (name == text) return op;
  return std::nullopt;
}

StateToken parse_state(const Token& tok) {
  using Kind = ExpressionError::Kind;
  const auto text = tok.text;
  if (text.size() < 2) throw ExpressionError(Kind::syntax, tok.offset + text.size(), "state needs a sign after 'u'");
  if (text[1] != '+' && text[1] != '-')
    throw ExpressionError(Kind::syntax, tok.offset + 1, "expected '+' or '-' after 'u'");
  if (text.size() == 2) throw ExpressionError(Kind::syntax, tok.offset + 2, "state is missing its index");
  const auto digits = text.substr(2);
  for (std::size_t k = 0; k < digits.size(); ++k)
    if (digits[k] < '0' || digits[k] > '9')
      throw ExpressionError(Kind::syntax, tok.offset + 2 + k, "state index must be decimal digits");
  unsigned n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || n > kMaxStateIndex)
    throw ExpressionError(Kind::syntax, tok.offset + 2,
                          "state index exceeds " + std::to_string(kMaxStateIndex));
  return {text[1] == '+' ? Sign::plus : Sign::minus, n};
}

}  // namespace

OperatorExpression parse_expression(std::string_view text) {
  using Kind = ExpressionError::Kind;
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ExpressionError(Kind::syntax, text.size(), "expected a state token");

  OperatorExpression e;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const auto& tok = tokens[k];
    const bool last = k + 1 == tokens.size();
    if (tok.text.front() == 'u') {
      if (!last) throw ExpressionError(Kind::syntax, tokens[k + 1].offset, "unexpected token after the state");
      e.state = parse_state(tok);
      return e;
    }
    const auto op = lookup_operator(tok.text);
    if (!op) throw ExpressionError(Kind::unknown_token, tok.offset, "unknown token \"" + std::string(tok.text) + "\"");
    e.ops.push_back(*op);
  }
  throw ExpressionError(Kind::syntax, text.size(), "expected a state token at the end");
}

std::string_view token_text(OpToken op) {
  for (const auto& [name, candidate] : kOperators)
    if (candidate == op) return name;
  return "?";
}

std::string to_string(const OperatorExpression& e) {
  std::string out;
  for (const auto op : e.ops) {
    out += token_text(op);
    out += ' ';
  }
  out += 'u';
  out += sign_char(e.state.sign);
  out += std::to_string(e.state.n);
  return out;
}

PhasePolyFunction apply_operator(OpToken op, const PhasePolyFunction& f) {
  switch (op) {
    case OpToken::ladder_plus: return apply_ladder(Sign::plus, f);
    case OpToken::ladder_minus: return apply_ladder(Sign::minus, f);
    case OpToken::number: return apply_number(f);
    case OpToken::hamiltonian: return apply_hamiltonian(f);
    case OpToken::parity: return parity(f);
    case OpToken::time_reverse: return time_reverse(f);
  }
  throw std::logic_error("unhandled operator token");
}

std::optional<RecognizedState> recognize_state(const PhasePolyFunction& f) {
  if (f.is_zero()) return std::nullopt;
  const Rational& r = f.phase_rate();
  if (r != 1 && r != -1) return std::nullopt;
  const Sign sign = r == 1 ? Sign::plus : Sign::minus;
  for (unsigned n = 0; static_cast<long>(n) <= f.poly().degree(); ++n) {
    if (auto c = proportionality_scalar(f, nth_state_poly(sign, n))) return RecognizedState{sign, n, std::move(*c)};
  }
  return std::nullopt;
}

Evaluation evaluate_expression(const OperatorExpression& e) {
  auto f = nth_state_poly(e.state.sign, e.state.n);
  for (auto it = e.ops.rbegin(); it != e.ops.rend(); ++it) f = apply_operator(*it, f);
  auto recognized = recognize_state(f);
  return {std::move(f), std::move(recognized)};
}

}  // namespace ppb::tool
