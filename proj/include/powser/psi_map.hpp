#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "powser/exec.hpp"
#include "powser/functionals.hpp"

namespace powser {

// The matrix of the degree-r reconstruction map on the span of words in
// the letters {0..n}: column c holds the coordinates of the image of
// basis word c, i.e. entries[row][col] = row_tensor(fam, basis[row],
// basis word col). The basis is ordered by zero count, then
// lexicographically.
struct PsiMatrix {
  std::uint32_t r = 1;
  Letter n = 1;
  FunctionalFamily family = FunctionalFamily::coordinate();
  std::vector<Word> basis;
  std::vector<std::vector<Rational>> entries;  // [row][col]
  std::size_t dim() const { return basis.size(); }
};

PsiMatrix psi_matrix_for_family(std::uint32_t r, Letter n,
                                const FunctionalFamily& fam,
                                ExecMode mode = ExecMode::Serial);

// Convenience wrapper for the summing family at position i; requires
// r >= 1 and 1 <= i <= n.
PsiMatrix psi_matrix(std::uint32_t r, Letter n, Letter i,
                     ExecMode mode = ExecMode::Serial, bool corrupt = false);

// Structural facts about a reconstruction matrix, all decided exactly.
//  - zero_class_lower_triangular: entries vanish whenever the row word
//    has strictly fewer zero letters than the column word.
//  - zero_class_diagonal_identity: within each fixed zero count the
//    diagonal block is the identity.
//  - refined_lower_triangular: entries vanish whenever the pair
//    (zero count, count of the summing letter) of the row word is
//    lexicographically smaller than that of the column word, and within
//    equal pairs the block is the identity.
//  - unit_diagonal / determinant: as stated.
struct PsiStructure {
  bool zero_class_lower_triangular = false;
  bool zero_class_diagonal_identity = false;
  bool refined_lower_triangular = false;
  bool unit_diagonal = false;
  Rational determinant = 0;
};

PsiStructure analyze_structure(const PsiMatrix& m);

// Image of a window element under the reconstruction map:
//   a |-> a^(0) + sum_{r>=1} sum_{l in {0..n}^r} row_tensor(fam, l, a^(r)) X^l.
// Requires every letter of `a` to lie in {0..n}.
TensorSeries apply_psi(const TensorSeries& a, const FunctionalFamily& fam,
                       Letter n);

// Solves apply_psi(x) = b for a homogeneous b of degree m.r supported on
// words over {0..m.n}, by forward substitution along the refined
// (zero count, summing-letter count) order. Requires m to be unit lower
// triangular in that order (true for the honest summing family).
TensorSeries invert_psi(const TensorSeries& b, const PsiMatrix& m);

struct StatementCounterexample {
  std::uint32_t r = 0;
  Letter n = 0;
  Letter i = 0;
  Word row;
  Word col;
  Rational got = 0;
  Rational want = 0;
};

struct StatementCounts {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<StatementCounterexample> first_failure;
  bool pass() const { return failed == 0; }
};

// Exhaustive scan of row_tensor(fam, l, X^u) over all word pairs with
// letters in {0..n}, n <= n_max, length r <= r_max, for every summing
// position i in i_set:
//  - recovery: same zero count        => value equals [l == u]
//  - annihilation: zc(l) < zc(u)      => value equals 0
//  - refined_recovery: same (zero count, i count)   => value equals [l == u]
//  - refined_annihilation: (zc, ic)(l) <lex (zc, ic)(u) => value equals 0
struct StatementReport {
  StatementCounts recovery;
  StatementCounts annihilation;
  StatementCounts refined_recovery;
  StatementCounts refined_annihilation;
};

StatementReport check_statements(std::uint32_t r_max, Letter n_max,
                                 const std::vector<Letter>& i_set,
                                 bool corrupt, ExecMode mode);

nlohmann::ordered_json psi_matrix_to_json(const PsiMatrix& m,
                                          const PsiStructure& s);
std::string psi_matrix_to_text(const PsiMatrix& m, const PsiStructure& s);

}  // namespace powser
