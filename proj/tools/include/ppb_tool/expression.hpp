#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ppb/states.hpp"

namespace ppb::tool {

// Flat operator language:
//   expr  := op* state
//   op    := "b+" | "b-" | "N" | "H" | "P" | "T"
//   state := "u" ("+" | "-") digits
// Tokens are whitespace separated and operators apply right to left.

enum class OpToken { ladder_plus, ladder_minus, number, hamiltonian, parity, time_reverse };

struct StateToken {
  Sign sign = Sign::plus;
  unsigned n = 0;

  friend bool operator==(const StateToken&, const StateToken&) = default;
};

struct OperatorExpression {
  std::vector<OpToken> ops;  // textual order, leftmost applied last
  StateToken state;

  friend bool operator==(const OperatorExpression&, const OperatorExpression&) = default;
};

/// Largest accepted state index.
inline constexpr unsigned kMaxStateIndex = 1024;

class ExpressionError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_token };

  ExpressionError(Kind kind, std::size_t offset, const std::string& message);

  Kind kind() const { return kind_; }
  /// Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

OperatorExpression parse_expression(std::string_view text);

/// Canonical text: tokens joined by single spaces.
std::string to_string(const OperatorExpression& e);
std::string_view token_text(OpToken op);

/// result = scalar * u^{sign}_n with B_n = 1.
struct RecognizedState {
  Sign sign;
  unsigned n;
  ExactScalar scalar;
};

struct Evaluation {
  PhasePolyFunction result;
  std::optional<RecognizedState> recognized;
};

PhasePolyFunction apply_operator(OpToken op, const PhasePolyFunction& f);

/// Folds the operators onto u^{sign}_n and looks for a multiple of a basis state.
Evaluation evaluate_expression(const OperatorExpression& e);

std::optional<RecognizedState> recognize_state(const PhasePolyFunction& f);

}  // namespace ppb::tool
