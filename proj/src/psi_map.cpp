#include "powser/psi_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "powser/literals.hpp"

namespace powser {

namespace {

// Refined grade of a word: zero count first, then the number of
// occurrences of the family's summing letter (0 when there is none).
std::pair<std::uint32_t, std::uint32_t> refined_grade(
    const Word& w, const FunctionalFamily& fam) {
  const std::uint32_t zeros = w.zero_count();
  const std::uint32_t summing =
      fam.has_psi() ? w.count_letter(fam.psi_position()) : 0u;
  return {zeros, summing};
}

}  // namespace

PsiMatrix psi_matrix_for_family(std::uint32_t r, Letter n,
                                const FunctionalFamily& fam, ExecMode mode) {
  if (r == 0) {
    throw std::invalid_argument("psi_matrix: degree r must be >= 1");
  }
  PsiMatrix m;
  m.r = r;
  m.n = n;
  m.family = fam;
  m.basis = enumerate_words(n, r);
  const std::size_t dim = m.basis.size();
  m.entries.assign(dim, std::vector<Rational>(dim, Rational(0)));
  const TruncationCtx ctx{n, r};
  parallel_for(dim, mode, [&](std::size_t col) {
    TensorSeries unit(ctx);
    unit.add_term(m.basis[col], Rational(1));
    for (std::size_t row = 0; row < dim; ++row) {
      m.entries[row][col] = row_tensor(fam, m.basis[row], unit);
    }
  });
  return m;
}

PsiMatrix psi_matrix(std::uint32_t r, Letter n, Letter i, ExecMode mode,
                     bool corrupt) {
  if (n == 0 || i == 0 || i > n) {
    throw std::invalid_argument(
        "psi_matrix: requires n >= 1 and a summing position 1 <= i <= n");
  }
  return psi_matrix_for_family(r, n, FunctionalFamily::psi_at(i, corrupt),
                               mode);
}

PsiStructure analyze_structure(const PsiMatrix& m) {
  PsiStructure s;
  const std::size_t dim = m.dim();
  std::vector<std::uint32_t> zeros(dim);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> grade(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    zeros[k] = m.basis[k].zero_count();
    grade[k] = refined_grade(m.basis[k], m.family);
  }

  s.zero_class_lower_triangular = true;
  s.zero_class_diagonal_identity = true;
  s.refined_lower_triangular = true;
  s.unit_diagonal = true;
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      const Rational& v = m.entries[row][col];
      if (zeros[row] < zeros[col] && v != 0) {
        s.zero_class_lower_triangular = false;
      }
      if (zeros[row] == zeros[col]) {
        const Rational want = (row == col) ? 1 : 0;
        if (v != want) {
          s.zero_class_diagonal_identity = false;
        }
      }
      if (grade[row] < grade[col] && v != 0) {
        s.refined_lower_triangular = false;
      }
      if (grade[row] == grade[col]) {
        const Rational want = (row == col) ? 1 : 0;
        if (v != want) {
          s.refined_lower_triangular = false;
        }
      }
      if (row == col && v != 1) {
        s.unit_diagonal = false;
      }
    }
  }

  // Exact determinant by fraction-free-enough Gaussian elimination over
  // the rationals.
  std::vector<std::vector<Rational>> a = m.entries;
  Rational det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == dim) {
      det = 0;
      break;
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < dim; ++row) {
      if (a[row][col] == 0) {
        continue;
      }
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < dim; ++k) {
        a[row][k] -= factor * a[col][k];
      }
    }
  }
  s.determinant = det;
  return s;
}

TensorSeries apply_psi(const TensorSeries& a, const FunctionalFamily& fam,
                       Letter n) {
  if (!a.is_zero() && a.max_letter_used() > n) {
    throw std::domain_error(
        "apply_psi: element uses letters outside the window {0..n}");
  }
  const TruncationCtx out_ctx{std::max(a.ctx().max_index, n),
                              a.ctx().max_degree};
  TensorSeries out(out_ctx);
  out.add_term(Word{}, a.constant_term());
  const std::uint32_t top = a.top_degree();
  for (std::uint32_t r = 1; r <= top; ++r) {
    const TensorSeries comp = graded_component(a, r);
    if (comp.is_zero()) {
      continue;
    }
    for (const Word& l : enumerate_words(n, r)) {
      out.add_term(l, row_tensor(fam, l, comp));
    }
  }
  return out;
}

TensorSeries invert_psi(const TensorSeries& b, const PsiMatrix& m) {
  if (!b.is_homogeneous(m.r)) {
    throw std::invalid_argument(
        "invert_psi: element must be homogeneous of the matrix degree");
  }
  if (!b.is_zero() && b.max_letter_used() > m.n) {
    throw std::invalid_argument(
        "invert_psi: element uses letters outside the matrix window");
  }
  const std::size_t dim = m.dim();
  std::vector<Rational> rhs(dim, Rational(0));
  for (std::size_t k = 0; k < dim; ++k) {
    rhs[k] = b.coefficient(m.basis[k]);
  }
  // Solve column-coordinates x with entries * x = rhs by substitution in
  // ascending refined grade; ties keep basis order.
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t p, std::size_t q) {
                     return refined_grade(m.basis[p], m.family) <
                            refined_grade(m.basis[q], m.family);
                   });
  std::vector<Rational> x(dim, Rational(0));
  std::vector<bool> solved(dim, false);
  for (const std::size_t pos : order) {
    Rational acc = rhs[pos];
    for (std::size_t q = 0; q < dim; ++q) {
      if (q != pos && solved[q]) {
        acc -= m.entries[pos][q] * x[q];
      }
    }
    if (m.entries[pos][pos] == 0) {
      throw std::domain_error(
          "invert_psi: zero diagonal entry; matrix is not unit triangular "
          "in the refined order");
    }
    x[pos] = acc / m.entries[pos][pos];
    solved[pos] = true;
  }
  TensorSeries out(TruncationCtx{m.n, m.r});
  for (std::size_t k = 0; k < dim; ++k) {
    out.add_term(m.basis[k], x[k]);
  }
  return out;
}

namespace {

struct RowScan {
  StatementCounts recovery;
  StatementCounts annihilation;
  StatementCounts refined_recovery;
  StatementCounts refined_annihilation;
};

void record(StatementCounts& c, bool ok, std::uint32_t r, Letter n, Letter i,
            const Word& row, const Word& col, const Rational& got,
            const Rational& want) {
  ++c.checked;
  if (!ok) {
    ++c.failed;
    if (!c.first_failure) {
      c.first_failure = StatementCounterexample{r, n, i, row, col, got, want};
    }
  }
}

void merge(StatementCounts& into, const StatementCounts& from) {
  into.checked += from.checked;
  into.failed += from.failed;
  if (!into.first_failure && from.first_failure) {
    into.first_failure = from.first_failure;
  }
}

}  // namespace

StatementReport check_statements(std::uint32_t r_max, Letter n_max,
                                 const std::vector<Letter>& i_set,
                                 bool corrupt, ExecMode mode) {
  StatementReport report;
  for (Letter n = 1; n <= n_max; ++n) {
    for (const Letter i : i_set) {
      const FunctionalFamily fam = FunctionalFamily::psi_at(i, corrupt);
      for (std::uint32_t r = 1; r <= r_max; ++r) {
        const std::vector<Word> words = enumerate_words(n, r);
        const TruncationCtx ctx{n, r};
        std::vector<RowScan> rows(words.size());
        parallel_for(words.size(), mode, [&](std::size_t li) {
          const Word& l = words[li];
          RowScan& scan = rows[li];
          const auto gl = std::make_pair(l.zero_count(),
                                         l.count_letter(i));
          for (const Word& u : words) {
            TensorSeries unit(ctx);
            unit.add_term(u, Rational(1));
            const Rational got = row_tensor(fam, l, unit);
            const auto gu = std::make_pair(u.zero_count(),
                                           u.count_letter(i));
            if (gl.first == gu.first) {
              const Rational want = (l == u) ? 1 : 0;
              record(scan.recovery, got == want, r, n, i, l, u, got, want);
            } else if (gl.first < gu.first) {
              record(scan.annihilation, got == 0, r, n, i, l, u, got,
                     Rational(0));
            }
            if (gl == gu) {
              const Rational want = (l == u) ? 1 : 0;
              record(scan.refined_recovery, got == want, r, n, i, l, u, got,
                     want);
            } else if (gl < gu) {
              record(scan.refined_annihilation, got == 0, r, n, i, l, u, got,
                     Rational(0));
            }
          }
        });
        for (const RowScan& scan : rows) {
          merge(report.recovery, scan.recovery);
          merge(report.annihilation, scan.annihilation);
          merge(report.refined_recovery, scan.refined_recovery);
          merge(report.refined_annihilation, scan.refined_annihilation);
        }
      }
    }
  }
  return report;
}

nlohmann::ordered_json psi_matrix_to_json(const PsiMatrix& m,
                                          const PsiStructure& s) {
  nlohmann::ordered_json j;
  j["r"] = m.r;
  j["n"] = m.n;
  j["family"] = m.family.describe();
  j["dim"] = m.dim();
  auto basis = nlohmann::ordered_json::array();
  for (const Word& w : m.basis) {
    basis.push_back(word_to_text(w));
  }
  j["basis"] = std::move(basis);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : m.entries) {
    auto jr = nlohmann::ordered_json::array();
    for (const Rational& v : row) {
      jr.push_back(to_string(v));
    }
    rows.push_back(std::move(jr));
  }
  j["entries"] = std::move(rows);
  nlohmann::ordered_json st;
  st["zero_class_lower_triangular"] = s.zero_class_lower_triangular;
  st["zero_class_diagonal_identity"] = s.zero_class_diagonal_identity;
  st["refined_lower_triangular"] = s.refined_lower_triangular;
  st["unit_diagonal"] = s.unit_diagonal;
  st["determinant"] = to_string(s.determinant);
  j["structure"] = std::move(st);
  return j;
}

std::string psi_matrix_to_text(const PsiMatrix& m, const PsiStructure& s) {
  std::ostringstream out;
  out << "reconstruction matrix  r=" << m.r << "  n=" << m.n
      << "  family=" << m.family.describe() << "  dim=" << m.dim() << "\n";
  std::size_t label_width = 0;
  std::vector<std::string> labels;
  labels.reserve(m.dim());
  for (const Word& w : m.basis) {
    labels.push_back(word_to_text(w));
    label_width = std::max(label_width, labels.back().size());
  }
  std::vector<std::vector<std::string>> cells(m.dim());
  std::vector<std::size_t> col_width(m.dim(), 0);
  for (std::size_t row = 0; row < m.dim(); ++row) {
    cells[row].resize(m.dim());
    for (std::size_t col = 0; col < m.dim(); ++col) {
      cells[row][col] = to_string(m.entries[row][col]);
      col_width[col] = std::max(col_width[col], cells[row][col].size());
    }
  }
  for (std::size_t col = 0; col < m.dim(); ++col) {
    col_width[col] = std::max(col_width[col], labels[col].size());
  }
  out << std::string(label_width, ' ');
  for (std::size_t col = 0; col < m.dim(); ++col) {
    out << "  " << std::string(col_width[col] - labels[col].size(), ' ')
        << labels[col];
  }
  out << "\n";
  for (std::size_t row = 0; row < m.dim(); ++row) {
    out << labels[row] << std::string(label_width - labels[row].size(), ' ');
    for (std::size_t col = 0; col < m.dim(); ++col) {
      out << "  " << std::string(col_width[col] - cells[row][col].size(), ' ')
          << cells[row][col];
    }
    out << "\n";
  }
  out << "zero-class lower triangular: "
      << (s.zero_class_lower_triangular ? "yes" : "no") << "\n";
  out << "zero-class diagonal blocks identity: "
      << (s.zero_class_diagonal_identity ? "yes" : "no") << "\n";
  out << "refined-grade unit triangular: "
      << (s.refined_lower_triangular ? "yes" : "no") << "\n";
  out << "unit diagonal: " << (s.unit_diagonal ? "yes" : "no") << "\n";
  out << "determinant: " << to_string(s.determinant) << "\n";
  return out.str();
}

}  // namespace powser
