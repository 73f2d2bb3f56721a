#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ppb_tool/expression.hpp"

using namespace ppb;
using namespace ppb::tool;

namespace {

ExpressionError parse_error(std::string_view text) {
  try {
    parse_expression(text);
  } catch (const ExpressionError& e) {
    return e;
  }
  FAIL("expected a parse error for \"" << std::string(text) << "\"");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse valid expressions") {
  const auto e = parse_expression("b+ b+ u+0");
  CHECK(e.ops == std::vector<OpToken>{OpToken::ladder_plus, OpToken::ladder_plus});
  CHECK(e.state == StateToken{Sign::plus, 0});
  const auto n = parse_expression("N u-3");
  CHECK(n.ops == std::vector<OpToken>{OpToken::number});
  CHECK(n.state == StateToken{Sign::minus, 3});
  CHECK(parse_expression("  \tH  P T b-\nu+12 ").state.n == 12);
  CHECK(parse_expression("u-0").ops.empty());
}

TEST_CASE("parse errors carry byte offsets") {
  auto e = parse_error("u+");
  CHECK(e.kind() == ExpressionError::Kind::syntax);
  CHECK(e.offset() == 2);
  e = parse_error("N X u+0");
  CHECK(e.kind() == ExpressionError::Kind::unknown_token);
  CHECK(e.offset() == 2);
  e = parse_error("");
  CHECK(e.kind() == ExpressionError::Kind::syntax);
  e = parse_error("b+ b-");
  CHECK(e.kind() == ExpressionError::Kind::syntax);
  CHECK(e.offset() == 5);
  e = parse_error("u+1 N");
  CHECK(e.kind() == ExpressionError::Kind::syntax);
  CHECK(e.offset() == 4);
  e = parse_error("N u*1");
  CHECK(e.offset() == 3);
  e = parse_error("u+1a");
  CHECK(e.offset() == 3);
  e = parse_error("u");
  CHECK(e.kind() == ExpressionError::Kind::syntax);
  e = parse_error("u+99999999999999999999");
  CHECK(e.kind() == ExpressionError::Kind::syntax);
  e = parse_error("u+1025");
  CHECK(e.kind() == ExpressionError::Kind::syntax);
}

TEST_CASE("pretty-print round trip on random canonical expressions") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> op_dist(0, 5);
  std::uniform_int_distribution<int> len_dist(0, 6);
  std::uniform_int_distribution<unsigned> n_dist(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    OperatorExpression e;
    for (int k = len_dist(rng); k > 0; --k) e.ops.push_back(static_cast<OpToken>(op_dist(rng)));
    e.state = {op_dist(rng) % 2 == 0 ? Sign::plus : Sign::minus, n_dist(rng)};
    const auto text = to_string(e);
    CHECK(parse_expression(text) == e);
    CHECK(to_string(parse_expression(text)) == text);
  }
}

TEST_CASE("evaluate_expression") {
  const auto annihilated = evaluate_expression(parse_expression("b- u+0"));
  CHECK(annihilated.result.is_zero());
  CHECK_FALSE(annihilated.recognized);

  const auto number = evaluate_expression(parse_expression("N u+2"));
  CHECK(number.result == scale(nth_state_poly(Sign::plus, 2), ExactScalar(0, Rational(5, 2))));
  REQUIRE(number.recognized);
  CHECK(number.recognized->sign == Sign::plus);
  CHECK(number.recognized->n == 2);
  CHECK(number.recognized->scalar == ExactScalar(0, Rational(5, 2)));

  const auto flipped = evaluate_expression(parse_expression("P u+1"));
  CHECK(flipped.result == scale(nth_state_poly(Sign::plus, 1), ExactScalar(-1)));
  REQUIRE(flipped.recognized);
  CHECK(flipped.recognized->scalar == ExactScalar(-1));

  const auto reversed = evaluate_expression(parse_expression("T u+3"));
  CHECK(reversed.result == nth_state_poly(Sign::minus, 3));

  // Lowering u+2: b- u+2 = proportional to u+1.
  const auto lowered = evaluate_expression(parse_expression("b- u+2"));
  REQUIRE(lowered.recognized);
  CHECK(lowered.recognized->n == 1);
}

TEST_CASE("n raising operators reproduce the ladder construction") {
  for (const Sign s : {Sign::plus, Sign::minus})
    for (unsigned n = 0; n <= 10; ++n) {
      OperatorExpression e;
      e.ops.assign(n, s == Sign::plus ? OpToken::ladder_plus : OpToken::ladder_minus);
      e.state = {s, 0};
      CHECK(evaluate_expression(e).result == nth_state_ladder(s, n));
      CHECK(evaluate_expression(parse_expression(to_string(e))).result == nth_state_ladder(s, n));
    }
}

TEST_CASE("recognize_state rejects non-basis functions") {
  CHECK_FALSE(recognize_state(add(nth_state_poly(Sign::plus, 0), nth_state_poly(Sign::plus, 2))));
  CHECK_FALSE(recognize_state(PhasePolyFunction(Rational(2), PolyC::constant(1))));
}
