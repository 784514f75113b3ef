#include <stdexcept>

#include "doctest.h"
#include "powser/literals.hpp"
#include "powser/tensor_series.hpp"

using namespace powser;

namespace {
Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }
const TruncationCtx kCtx{2, 3};
}  // namespace

TEST_CASE("insertion respects the window and cancels exactly") {
  TensorSeries a(kCtx);
  a.add_term(w({0, 1}), Rational(2));
  a.add_term(w({0, 3}), Rational(5));        // letter outside window
  a.add_term(w({0, 1, 0, 1}), Rational(5));  // degree outside window
  CHECK(a.coefficient(w({0, 1})) == 2);
  CHECK(a.coefficient(w({0, 3})) == 0);
  CHECK(a.terms().size() == 1);
  a.add_term(w({0, 1}), Rational(-2));
  CHECK(a.is_zero());
}

TEST_CASE("unit and generators") {
  const TensorSeries one = TensorSeries::unit(kCtx);
  CHECK(one.constant_term() == 1);
  CHECK(one.top_degree() == 0);
  const TensorSeries x2 = TensorSeries::generator(2, kCtx);
  CHECK(x2.coefficient(w({2})) == 1);
  CHECK_THROWS_AS(TensorSeries::generator(3, kCtx), std::out_of_range);
}

TEST_CASE("product is concatenation with window clipping") {
  const TensorSeries x0 = TensorSeries::generator(0, kCtx);
  const TensorSeries x1 = TensorSeries::generator(1, kCtx);
  const TensorSeries p = x0 * x1;
  CHECK(p.coefficient(w({0, 1})) == 1);
  CHECK(p.coefficient(w({1, 0})) == 0);

  // (X0 X1) * (X0 X1) has degree 4 > 3 and is clipped away entirely.
  CHECK((p * p).is_zero());

  const TensorSeries q = (x0 + x1) * (x0 - x1);
  CHECK(q.coefficient(w({0, 0})) == 1);
  CHECK(q.coefficient(w({0, 1})) == -1);
  CHECK(q.coefficient(w({1, 0})) == 1);
  CHECK(q.coefficient(w({1, 1})) == -1);

  CHECK(TensorSeries::unit(kCtx) * x1 == x1);
}

TEST_CASE("grading helpers") {
  const TensorSeries a = parse_tensor("1 + 2*X0.X1 + 3*X1 - X0.X0", kCtx);
  CHECK(a.top_degree() == 2);
  CHECK_FALSE(a.is_homogeneous(1));
  const TensorSeries a1 = graded_component(a, 1);
  CHECK(a1.coefficient(w({1})) == 3);
  CHECK(a1.terms().size() == 1);
  CHECK(a1.is_homogeneous(1));
  CHECK(TensorSeries::zero(kCtx).is_homogeneous(2));

  const TensorSeries z = zero_class_projection(a, 2, 1);
  CHECK(z.coefficient(w({0, 1})) == 2);
  CHECK(z.terms().size() == 1);
  const TensorSeries z2 = zero_class_projection(a, 2, 2);
  CHECK(z2.coefficient(w({0, 0})) == -1);
}

TEST_CASE("left division strips the leading letter") {
  const TensorSeries a = parse_tensor("2*X1.X0 + 3*X0 + 5*X1", kCtx);
  const TensorSeries p1 = left_division(a, 1);
  CHECK(p1.coefficient(Word()) == 5);
  CHECK(p1.coefficient(w({0})) == 2);
  CHECK(p1.terms().size() == 2);
  const TensorSeries p0 = left_division(a, 0);
  CHECK(p0.coefficient(Word()) == 3);
  CHECK(p0.terms().size() == 1);
  CHECK(left_division(a, 2).is_zero());
  const TensorSeries with_const = parse_tensor("1 + X0", kCtx);
  CHECK_THROWS_AS(left_division(with_const, 0), std::domain_error);
}

TEST_CASE("averaging projection") {
  const TensorSeries a = parse_tensor("X0.X1", kCtx);
  const TensorSeries avg = averaging_alpha(a);
  CHECK(avg.coefficient(w({0, 1})) == Rational(1, 2));
  CHECK(avg.coefficient(w({1, 0})) == Rational(1, 2));
  CHECK(averaging_alpha(avg) == avg);
  CHECK(averaging_alpha(TensorSeries::unit(kCtx)) == TensorSeries::unit(kCtx));

  // Words with repeated letters average over distinct arrangements only.
  const TensorSeries b = parse_tensor("X1.X1.X0", kCtx);
  const TensorSeries avgb = averaging_alpha(b);
  CHECK(avgb.coefficient(w({1, 1, 0})) == Rational(1, 3));
  CHECK(avgb.coefficient(w({1, 0, 1})) == Rational(1, 3));
  CHECK(avgb.coefficient(w({0, 1, 1})) == Rational(1, 3));
}

TEST_CASE("letter-deletion derivation") {
  const TensorSeries a = parse_tensor("X1.X1", kCtx);
  const TensorSeries da = tensor_derivation(a, 1);
  CHECK(da.coefficient(w({1})) == 2);
  CHECK(da.terms().size() == 1);

  CHECK(tensor_derivation(TensorSeries::generator(0, kCtx), 1).is_zero());
  const TensorSeries d1 = tensor_derivation(TensorSeries::generator(1, kCtx), 1);
  CHECK(d1.constant_term() == 1);

  const TensorSeries b = parse_tensor("X1.X0.X2", kCtx);
  const TensorSeries db = tensor_derivation(b, 1);
  CHECK(db.coefficient(w({0, 2})) == 1);
  CHECK(db.terms().size() == 1);
}

TEST_CASE("window policies on mismatched operands") {
  const TruncationCtx other{3, 2};
  const TensorSeries a = TensorSeries::generator(1, kCtx);
  const TensorSeries b = TensorSeries::generator(3, other);
  CHECK_THROWS_AS(add(a, b, ContextPolicy::Strict), std::invalid_argument);
  const TensorSeries m = add(a, b, ContextPolicy::Meet);
  CHECK(m.ctx() == TruncationCtx{2, 2});
  CHECK(m.coefficient(w({1})) == 1);
  CHECK(m.coefficient(w({3})) == 0);  // clipped by the meet window
  CHECK_NOTHROW(add(a, a, ContextPolicy::Strict));
}
