#include <stdexcept>

#include "doctest.h"
#include "powser/literals.hpp"
#include "powser/psi_map.hpp"
#include "powser/sampler.hpp"

using namespace powser;

namespace {
Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }
}  // namespace

TEST_CASE("degree-1 matrix over {0,1} is the identity") {
  const PsiMatrix m = psi_matrix(1, 1, 1);
  REQUIRE(m.dim() == 2);
  CHECK(m.basis[0] == w({1}));
  CHECK(m.basis[1] == w({0}));
  CHECK(m.entries[0][0] == 1);
  CHECK(m.entries[0][1] == 0);
  CHECK(m.entries[1][0] == 0);
  CHECK(m.entries[1][1] == 1);
}

TEST_CASE("degree-1 matrix over {0,1,2}: the summing row leaks across the "
          "zero-count diagonal block") {
  const PsiMatrix m = psi_matrix(1, 2, 1);
  REQUIRE(m.dim() == 3);
  // canonical basis: zero count 0 first (X1, X2), then X0
  CHECK(m.basis[0] == w({1}));
  CHECK(m.basis[1] == w({2}));
  CHECK(m.basis[2] == w({0}));
  // column of X2: psi row reads 1, coordinate row reads 1
  CHECK(m.entries[0][1] == 1);
  CHECK(m.entries[1][1] == 1);
  CHECK(m.entries[2][1] == 0);
  // column of X1 and X0 stay canonical
  CHECK(m.entries[0][0] == 1);
  CHECK(m.entries[1][0] == 0);
  CHECK(m.entries[2][2] == 1);

  const PsiStructure s = analyze_structure(m);
  CHECK(s.zero_class_lower_triangular);
  // The strict identity-block claim is refuted by the X2 column.
  CHECK_FALSE(s.zero_class_diagonal_identity);
  CHECK(s.refined_lower_triangular);
  CHECK(s.unit_diagonal);
  CHECK(s.determinant == 1);
}

TEST_CASE("matrix argument validation") {
  CHECK_THROWS_AS(psi_matrix(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(psi_matrix(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi_matrix(1, 1, 2), std::invalid_argument);
}

TEST_CASE("structure holds exactly on every window up to (r,n) = (3,3)") {
  for (Letter n = 1; n <= 3; ++n) {
    for (Letter i = 1; i <= n; ++i) {
      for (std::uint32_t r = 1; r <= 3; ++r) {
        const PsiMatrix m = psi_matrix(r, n, i);
        const PsiStructure s = analyze_structure(m);
        CHECK_MESSAGE(s.zero_class_lower_triangular, "r=", r, " n=", n, " i=", i);
        CHECK_MESSAGE(s.refined_lower_triangular, "r=", r, " n=", n, " i=", i);
        CHECK_MESSAGE(s.unit_diagonal, "r=", r, " n=", n, " i=", i);
        CHECK_MESSAGE(s.determinant == 1, "r=", r, " n=", n, " i=", i);
        // The strict identity-block form survives only in the window with a
        // single positive letter: the summing row reads every positive
        // letter, above and below its own position.
        CHECK(s.zero_class_diagonal_identity == (n == 1));
      }
    }
  }
}

TEST_CASE("corrupted family breaks triangularity (negative control)") {
  const PsiMatrix m = psi_matrix(1, 2, 1, ExecMode::Serial, /*corrupt=*/true);
  const PsiStructure s = analyze_structure(m);
  CHECK_FALSE(s.zero_class_lower_triangular);
  CHECK_FALSE(s.refined_lower_triangular);
  CHECK(s.unit_diagonal);  // diagonal itself survives corruption
}

TEST_CASE("coordinate family gives the identity matrix") {
  for (std::uint32_t r = 1; r <= 2; ++r) {
    const PsiMatrix m =
        psi_matrix_for_family(r, 2, FunctionalFamily::coordinate());
    for (std::size_t row = 0; row < m.dim(); ++row) {
      for (std::size_t col = 0; col < m.dim(); ++col) {
        CHECK(m.entries[row][col] == ((row == col) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("frozen image and preimage of X2 at summing position 1") {
  const TruncationCtx ctx{2, 1};
  const FunctionalFamily fam = FunctionalFamily::psi_at(1);
  const TensorSeries x2 = TensorSeries::generator(2, ctx);
  const TensorSeries image = apply_psi(x2, fam, 2);
  CHECK(image == parse_tensor("X1 + X2", ctx));

  const PsiMatrix m = psi_matrix(1, 2, 1);
  CHECK(invert_psi(x2, m) == parse_tensor("X2 - X1", ctx));
  CHECK(invert_psi(image, m) == x2);
}

TEST_CASE("apply_psi keeps the constant term and validates support") {
  const TruncationCtx ctx{2, 2};
  const FunctionalFamily fam = FunctionalFamily::psi_at(1);
  const TensorSeries a = parse_tensor("5 + X1.X2", ctx);
  const TensorSeries b = apply_psi(a, fam, 2);
  CHECK(b.constant_term() == 5);
  const TensorSeries wide = TensorSeries::generator(2, ctx);
  CHECK_THROWS_AS(apply_psi(wide, fam, 1), std::domain_error);
}

TEST_CASE("invert_psi validates its input") {
  const PsiMatrix m = psi_matrix(2, 2, 1);
  const TruncationCtx ctx{2, 2};
  CHECK_THROWS_AS(invert_psi(parse_tensor("1 + X1.X1", ctx), m),
                  std::invalid_argument);
  CHECK_THROWS_AS(invert_psi(parse_tensor("X3.X3", TruncationCtx{3, 2}), m),
                  std::invalid_argument);
}

TEST_CASE("roundtrip on random homogeneous elements") {
  Sampler rng(43);
  for (int t = 0; t < 100; ++t) {
    const Letter n = rng.uniform(1, 3);
    const Letter i = rng.uniform(1, n);
    const std::uint32_t r = rng.uniform(1, 3);
    const PsiMatrix m = psi_matrix(r, n, i);
    const TensorSeries a = rng.homogeneous_tensor(n, r, 5);
    const TensorSeries image = apply_psi(a, m.family, n);
    CHECK(invert_psi(image, m) == a);
  }
}

TEST_CASE("exhaustive statement scan finds the known counterexample") {
  const StatementReport rep =
      check_statements(3, 3, {1, 2, 3}, /*corrupt=*/false, ExecMode::Serial);
  // Statement (2): fewer zeros in the row word always annihilates.
  CHECK(rep.annihilation.failed == 0);
  CHECK(rep.annihilation.checked > 0);
  // Refined forms hold everywhere.
  CHECK(rep.refined_recovery.failed == 0);
  CHECK(rep.refined_annihilation.failed == 0);
  // The strict same-zero-count recovery claim fails, first at the word
  // pair (X1, X2) in the window {0,1,2} with summing position 1.
  CHECK(rep.recovery.failed > 0);
  REQUIRE(rep.recovery.first_failure.has_value());
  const StatementCounterexample& ce = *rep.recovery.first_failure;
  CHECK(ce.r == 1);
  CHECK(ce.n == 2);
  CHECK(ce.i == 1);
  CHECK(ce.row == w({1}));
  CHECK(ce.col == w({2}));
  CHECK(ce.got == 1);
  CHECK(ce.want == 0);
}

TEST_CASE("corrupted scan violates annihilation (negative control)") {
  const StatementReport rep =
      check_statements(2, 2, {1}, /*corrupt=*/true, ExecMode::Serial);
  CHECK(rep.annihilation.failed > 0);
  CHECK(rep.refined_annihilation.failed > 0);
}

TEST_CASE("matrix rendering") {
  const PsiMatrix m = psi_matrix(1, 2, 1);
  const PsiStructure s = analyze_structure(m);
  const auto j = psi_matrix_to_json(m, s);
  CHECK(j["r"] == 1);
  CHECK(j["n"] == 2);
  CHECK(j["dim"] == 3);
  CHECK(j["basis"][0] == "X1");
  CHECK(j["entries"][0][1] == "1");
  CHECK(j["structure"]["determinant"] == "1");
  CHECK(j["structure"]["zero_class_diagonal_identity"] == false);
  const std::string text = psi_matrix_to_text(m, s);
  CHECK(text.find("determinant: 1") != std::string::npos);
  CHECK(text.find("zero-class diagonal blocks identity: no") !=
        std::string::npos);
}
