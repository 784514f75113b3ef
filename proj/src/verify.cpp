#include "powser/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powser/comm_series.hpp"
#include "powser/extension.hpp"
#include "powser/functionals.hpp"
#include "powser/literals.hpp"
#include "powser/psi_map.hpp"
#include "powser/sampler.hpp"
#include "powser/seminorms.hpp"
#include "powser/tensor_series.hpp"

namespace powser {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t mix3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return (a << 42) ^ (b << 21) ^ c;
}

CheckResult make_check(std::string id, std::string anchor, json params) {
  CheckResult res;
  res.id = std::move(id);
  res.anchor = std::move(anchor);
  res.params = std::move(params);
  return res;
}

void tick(CheckResult& c, bool ok, const json& counterexample) {
  ++c.checked;
  if (!ok) {
    ++c.failed;
    if (c.counterexample.is_null()) {
      c.counterexample = counterexample;
    }
  }
}

void finish(std::vector<CheckResult>& out, CheckResult c) {
  c.pass = c.informational || (c.failed == 0);
  out.push_back(std::move(c));
}

struct SampleOutcome {
  bool ok = true;
  json counterexample;
};

SampleOutcome sample_fail(json counterexample) {
  return SampleOutcome{false, std::move(counterexample)};
}

CheckResult sampled_check(
    const RunConfig& cfg, std::string id, std::string anchor, json params,
    std::uint32_t samples,
    const std::function<SampleOutcome(Sampler&)>& body) {
  CheckResult res = make_check(std::move(id), std::move(anchor),
                               std::move(params));
  std::vector<SampleOutcome> slots(samples);
  const std::uint64_t stream = cfg.seed ^ fnv1a(res.id);
  parallel_for(samples, cfg.mode, [&](std::size_t s) {
    Sampler rng = Sampler::for_sample(stream, s);
    try {
      slots[s] = body(rng);
    } catch (const std::exception& e) {
      slots[s] = sample_fail(json{{"error", e.what()}});
    }
  });
  res.checked = samples;
  for (std::uint32_t s = 0; s < samples; ++s) {
    if (!slots[s].ok) {
      ++res.failed;
      if (res.counterexample.is_null()) {
        json ce = slots[s].counterexample;
        ce["sample"] = s;
        res.counterexample = std::move(ce);
      }
    }
  }
  res.pass = (res.failed == 0);
  return res;
}

std::string ext_text(const ExtElement& a) {
  return "(" + comm_to_text(a.algebra_part()) + "; " +
         comm_to_text(a.module_part()) + ")";
}

json counts_counterexample(const StatementCounterexample& ce) {
  json j;
  j["r"] = ce.r;
  j["n"] = ce.n;
  j["i"] = ce.i;
  j["l"] = word_to_text(ce.row);
  j["u"] = word_to_text(ce.col);
  j["got"] = to_string(ce.got);
  j["want"] = to_string(ce.want);
  return j;
}

CheckResult counts_check(std::string id, std::string anchor, json params,
                         const StatementCounts& counts) {
  CheckResult res = make_check(std::move(id), std::move(anchor),
                               std::move(params));
  res.checked = counts.checked;
  res.failed = counts.failed;
  res.pass = counts.failed == 0;
  if (counts.first_failure) {
    res.counterexample = counts_counterexample(*counts.first_failure);
  }
  return res;
}

// ---------------------------------------------------------------- statements

void suite_statements(const RunConfig& cfg, std::vector<CheckResult>& out) {
  const StatementReport rep =
      check_statements(cfg.max_degree, cfg.max_index, cfg.i_values,
                       cfg.corrupt_psi, cfg.mode);
  json params;
  params["r_max"] = cfg.max_degree;
  params["n_max"] = cfg.max_index;
  params["i_values"] = cfg.i_values;
  params["corrupt"] = cfg.corrupt_psi;
  out.push_back(counts_check(
      "statements.coefficient_recovery",
      "row_tensor(l, X^u) == [l == u] when zero_count(l) == zero_count(u)",
      params, rep.recovery));
  out.push_back(counts_check(
      "statements.lower_annihilation",
      "row_tensor(l, X^u) == 0 when zero_count(l) < zero_count(u)", params,
      rep.annihilation));
  out.push_back(counts_check(
      "statements.refined_recovery",
      "row_tensor(l, X^u) == [l == u] when (zero_count, i_count)(l) == "
      "(zero_count, i_count)(u)",
      params, rep.refined_recovery));
  out.push_back(counts_check(
      "statements.refined_triangular",
      "row_tensor(l, X^u) == 0 when (zero_count, i_count)(l) <lex "
      "(zero_count, i_count)(u)",
      params, rep.refined_annihilation));
}

// ----------------------------------------------------------------------- psi

void suite_psi(const RunConfig& cfg, std::vector<CheckResult>& out) {
  json params;
  params["r_max"] = cfg.max_degree;
  params["n_max"] = cfg.max_index;
  params["i_values"] = cfg.i_values;
  params["corrupt"] = cfg.corrupt_psi;
  params["psi_samples"] = cfg.psi_samples;

  CheckResult block = make_check(
      "psi.block_triangular",
      "M[l][u] == 0 when zero_count(l) < zero_count(u)", params);
  CheckResult diag = make_check(
      "psi.diagonal_identity",
      "M[l][u] == [l == u] when zero_count(l) == zero_count(u)", params);
  CheckResult refined = make_check(
      "psi.refined_triangular",
      "M unit lower triangular in ascending (zero_count, i_count)", params);
  CheckResult unit = make_check("psi.unit_diagonal", "M[w][w] == 1", params);
  CheckResult det = make_check("psi.determinant_one", "det(M) == 1", params);
  CheckResult inv = make_check(
      "psi.invert_roundtrip", "invert_psi(apply_psi(a, fam, n), M) == a",
      params);
  CheckResult amm = make_check(
      "psi.apply_matches_matrix",
      "coords(apply_psi(a, fam, n)) == M * coords(a)", params);
  CheckResult coord = make_check(
      "psi.coordinate_identity", "matrix(coordinate family) == Id", params);

  for (Letter n = 1; n <= cfg.max_index; ++n) {
    for (std::uint32_t r = 1; r <= cfg.max_degree; ++r) {
      {
        const PsiMatrix mc = psi_matrix_for_family(
            r, n, FunctionalFamily::coordinate(), cfg.mode);
        bool identity = true;
        for (std::size_t row = 0; row < mc.dim() && identity; ++row) {
          for (std::size_t col = 0; col < mc.dim(); ++col) {
            const Rational want = (row == col) ? 1 : 0;
            if (mc.entries[row][col] != want) {
              identity = false;
              break;
            }
          }
        }
        tick(coord, identity, json{{"r", r}, {"n", n}});
      }
      for (const Letter i : cfg.i_values) {
        if (i < 1 || i > n) {
          continue;
        }
        const PsiMatrix m = psi_matrix(r, n, i, cfg.mode, cfg.corrupt_psi);
        const PsiStructure s = analyze_structure(m);
        const json where{{"r", r}, {"n", n}, {"i", i}};
        tick(block, s.zero_class_lower_triangular, where);
        tick(diag, s.zero_class_diagonal_identity, where);
        tick(refined, s.refined_lower_triangular, where);
        tick(unit, s.unit_diagonal, where);
        json det_ce = where;
        det_ce["determinant"] = to_string(s.determinant);
        tick(det, s.determinant == 1, det_ce);

        const std::uint64_t stream =
            cfg.seed ^ fnv1a("psi.invert_roundtrip") ^ mix3(r, n, i);
        std::vector<std::uint8_t> rt_ok(cfg.psi_samples, 1);
        std::vector<std::uint8_t> mm_ok(cfg.psi_samples, 1);
        parallel_for(cfg.psi_samples, cfg.mode, [&](std::size_t t) {
          Sampler rng = Sampler::for_sample(stream, t);
          const TensorSeries a = rng.homogeneous_tensor(n, r, 5);
          try {
            const TensorSeries b = apply_psi(a, m.family, n);
            bool matches = true;
            for (std::size_t row = 0; row < m.dim(); ++row) {
              Rational want = 0;
              for (std::size_t col = 0; col < m.dim(); ++col) {
                const Rational ca = a.coefficient(m.basis[col]);
                if (ca != 0) {
                  want += m.entries[row][col] * ca;
                }
              }
              if (b.coefficient(m.basis[row]) != want) {
                matches = false;
                break;
              }
            }
            mm_ok[t] = matches ? 1 : 0;
            rt_ok[t] = (invert_psi(b, m) == a) ? 1 : 0;
          } catch (const std::exception&) {
            mm_ok[t] = 0;
            rt_ok[t] = 0;
          }
        });
        for (std::uint32_t t = 0; t < cfg.psi_samples; ++t) {
          json ce = where;
          ce["sample"] = t;
          tick(inv, rt_ok[t] != 0, ce);
          tick(amm, mm_ok[t] != 0, ce);
        }
      }
    }
  }
  finish(out, std::move(block));
  finish(out, std::move(diag));
  finish(out, std::move(refined));
  finish(out, std::move(unit));
  finish(out, std::move(det));
  finish(out, std::move(inv));
  finish(out, std::move(amm));
  finish(out, std::move(coord));
}

// --------------------------------------------------------------- convergence

void suite_convergence(const RunConfig& cfg, std::vector<CheckResult>& out) {
  Letter top = static_cast<Letter>(cfg.seq_limit);
  for (const Letter i : cfg.i_values) {
    top = std::max(top, i);
  }
  const TruncationCtx tctx{top, std::max<std::uint32_t>(1, cfg.m_limit)};
  json params;
  params["i_values"] = cfg.i_values;
  params["seq_limit"] = cfg.seq_limit;
  params["m_limit"] = cfg.m_limit;
  params["k_limit"] = cfg.k_limit;

  CheckResult null_part = make_check(
      "convergence.tau_i_null",
      "tau_i(X_N - X_i; n, m) == 0 when n < N or m == 0", params);
  CheckResult tail = make_check(
      "convergence.tau_i_tail",
      "tau_i(X_N - X_i; n, m) == 1 when n >= N and m >= 1", params);
  CheckResult deriv = make_check(
      "convergence.derivation_witness",
      "d_i(X_i - X_N) == 1 and p_k(1) == 1 and p'_k_i(1) == 1", params);

  for (const Letter i : cfg.i_values) {
    const FunctionalFamily fam = FunctionalFamily::psi_at(i, cfg.corrupt_psi);
    for (std::uint32_t bign = 1; bign <= cfg.seq_limit; ++bign) {
      if (bign == i) {
        continue;
      }
      const TensorSeries a = TensorSeries::generator(bign, tctx) -
                             TensorSeries::generator(i, tctx);
      for (Letter n = 0; n <= static_cast<Letter>(cfg.seq_limit); ++n) {
        for (std::uint32_t m = 0; m <= cfg.m_limit; ++m) {
          const Rational v = tau_i_seminorm(a, n, m, fam);
          const json ce{{"i", i}, {"N", bign}, {"n", n},
                        {"m", m}, {"value", to_string(v)}};
          if (n < bign || m == 0) {
            tick(null_part, v == 0, ce);
          } else {
            tick(tail, v == 1, ce);
          }
        }
      }
    }

    const TruncationCtx cctx{top, std::max<std::uint32_t>(1, cfg.max_degree)};
    for (std::uint32_t bign = 1; bign <= cfg.seq_limit; ++bign) {
      if (bign == i) {
        continue;
      }
      const CommSeries x = CommSeries::generator(i, cctx) -
                           CommSeries::generator(bign, cctx);
      const CommSeries dx = partial_derivative(x, i);
      tick(deriv, dx == CommSeries::unit(cctx),
           json{{"i", i}, {"N", bign}, {"got", comm_to_text(dx)}});
    }
    const CommSeries one = CommSeries::unit(cctx);
    for (std::uint32_t k = 0; k <= cfg.k_limit; ++k) {
      tick(deriv, p_k(one, k) == 1,
           json{{"i", i}, {"k", k}, {"which", "p_k(1)"}});
      tick(deriv, p_prime_k(one, k, i) == 1,
           json{{"i", i}, {"k", k}, {"which", "p'_k_i(1)"}});
    }
  }
  finish(out, std::move(null_part));
  finish(out, std::move(tail));
  finish(out, std::move(deriv));
}

// ----------------------------------------------------------- incomparability

void suite_incomparability(const RunConfig& cfg,
                           std::vector<CheckResult>& out) {
  Letter top = static_cast<Letter>(cfg.seq_limit);
  for (const Letter i : cfg.i_values) {
    top = std::max(top, i);
  }
  const TruncationCtx cctx{top, 1};
  json params;
  params["i_values"] = cfg.i_values;
  params["seq_limit"] = cfg.seq_limit;
  params["k_limit"] = cfg.k_limit;

  CheckResult obstruction = make_check(
      "incomparability.tau_j_obstruction",
      "p'_k_j(X_N - X_i) == [i <= k] + [N <= k] for i, N != j (nonzero once "
      "k >= i)",
      params);
  CheckResult vanish = make_check("incomparability.tau_j_null",
                                  "p'_k_j(X_N - X_j) == [N <= k]", params);
  CheckResult cross = make_check(
      "incomparability.cross_derivation",
      "d_i(X_j - X_N) == 0 when i != j and i != N", params);

  for (const Letter j : cfg.i_values) {
    for (std::uint32_t bign = 1; bign <= cfg.seq_limit; ++bign) {
      if (bign == j) {
        continue;
      }
      const CommSeries x = CommSeries::generator(bign, cctx) -
                           CommSeries::generator(j, cctx);
      for (std::uint32_t k = 0; k <= cfg.k_limit; ++k) {
        const Rational v = p_prime_k(x, k, j);
        const Rational want = (bign <= k) ? 1 : 0;
        tick(vanish, v == want,
             json{{"j", j}, {"N", bign}, {"k", k}, {"got", to_string(v)},
                  {"want", to_string(want)}});
      }
    }
    for (const Letter i : cfg.i_values) {
      if (i == j) {
        continue;
      }
      for (std::uint32_t bign = 1; bign <= cfg.seq_limit; ++bign) {
        if (bign == i || bign == j) {
          continue;
        }
        const CommSeries x = CommSeries::generator(bign, cctx) -
                             CommSeries::generator(i, cctx);
        for (std::uint32_t k = 0; k <= cfg.k_limit; ++k) {
          const Rational v = p_prime_k(x, k, j);
          Rational want = 0;
          if (i <= k) {
            want += 1;
          }
          if (bign <= k) {
            want += 1;
          }
          tick(obstruction, v == want,
               json{{"j", j}, {"i", i}, {"N", bign}, {"k", k},
                    {"got", to_string(v)}, {"want", to_string(want)}});
        }
        const CommSeries y = CommSeries::generator(j, cctx) -
                             CommSeries::generator(bign, cctx);
        tick(cross, partial_derivative(y, i).is_zero(),
             json{{"i", i}, {"j", j}, {"N", bign}});
      }
    }
  }
  finish(out, std::move(obstruction));
  finish(out, std::move(vanish));
  finish(out, std::move(cross));
}

// ------------------------------------------------------------------ extension

void suite_extension(const RunConfig& cfg, std::vector<CheckResult>& out) {
  const TruncationCtx ctx{cfg.max_index, cfg.max_degree};
  const std::uint32_t k_plain = cfg.k_limit;
  const std::uint32_t k_prime = std::min(cfg.k_limit, cfg.max_degree);
  const std::uint32_t k_del =
      std::min(cfg.k_limit, cfg.max_degree > 0 ? cfg.max_degree - 1 : 0);

  const auto pick_i = [&cfg](Sampler& rng) {
    return cfg.i_values[rng.uniform(
        0, static_cast<std::uint32_t>(cfg.i_values.size()) - 1)];
  };
  const auto draw_ext = [&](Sampler& rng) {
    return ExtElement(rng.comm_series(ctx, 5, cfg.max_degree),
                      rng.comm_series(ctx, 5, cfg.max_degree));
  };
  json params;
  params["samples"] = cfg.samples;
  params["max_index"] = cfg.max_index;
  params["max_degree"] = cfg.max_degree;
  params["i_values"] = cfg.i_values;

  const auto submult = [&](const std::string& id, const std::string& anchor,
                           std::uint32_t k_max, auto make_kind_fn) {
    json p = params;
    p["k_max"] = k_max;
    out.push_back(sampled_check(
        cfg, id, anchor, p, cfg.samples,
        [&, k_max, make_kind_fn](Sampler& rng) -> SampleOutcome {
          const ExtElement a = draw_ext(rng);
          const ExtElement b = draw_ext(rng);
          const std::uint32_t k = rng.uniform(0, k_max);
          const Letter i = pick_i(rng);
          const ExtSeminormKind kind = make_kind_fn(k, i);
          const Rational lhs = ext_seminorm(kind, ext_mul(a, b));
          const Rational rhs =
              ext_seminorm(kind, a) * ext_seminorm(kind, b);
          if (lhs <= rhs) {
            return SampleOutcome{};
          }
          return sample_fail(json{{"kind", kind.label()},
                                  {"a", ext_text(a)},
                                  {"b", ext_text(b)},
                                  {"lhs", to_string(lhs)},
                                  {"rhs", to_string(rhs)}});
        }));
  };

  submult("extension.submultiplicative.q", "q_k(a b) <= q_k(a) q_k(b)",
          k_plain, [](std::uint32_t k, Letter) {
            return ExtSeminormKind::q(k);
          });
  submult("extension.submultiplicative.qprime",
          "q'_k_i(a b) <= q'_k_i(a) q'_k_i(b) for k <= max_degree", k_prime,
          [](std::uint32_t k, Letter i) {
            return ExtSeminormKind::q_prime(k, i);
          });
  submult("extension.submultiplicative.qdel",
          "q_k_di(a b) <= q_k_di(a) q_k_di(b) for k < max_degree", k_del,
          [](std::uint32_t k, Letter i) {
            return ExtSeminormKind::q_del(k, i);
          });
  submult("extension.submultiplicative.qdelprime",
          "q'_k_di(a b) <= q'_k_di(a) q'_k_di(b) for k < max_degree", k_del,
          [](std::uint32_t k, Letter i) {
            return ExtSeminormKind::q_del_prime(k, i);
          });

  out.push_back(sampled_check(
      cfg, "extension.theta_involution", "theta_i(theta_i(a)) == a", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const ExtElement a = draw_ext(rng);
        const Letter i = pick_i(rng);
        if (theta(i, theta(i, a)) == a) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"i", i}, {"a", ext_text(a)}});
      }));

  out.push_back(sampled_check(
      cfg, "extension.theta_isometry",
      "q_k_di(a) == q_k(theta_i(a)) and q'_k_di(a) == q'_k_i(theta_i(a))",
      params, cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const ExtElement a = draw_ext(rng);
        const Letter i = pick_i(rng);
        const std::uint32_t k = rng.uniform(0, cfg.k_limit);
        const ExtElement t = theta(i, a);
        const bool plain =
            ext_seminorm(ExtSeminormKind::q_del(k, i), a) ==
            ext_seminorm(ExtSeminormKind::q(k), t);
        const bool primed =
            ext_seminorm(ExtSeminormKind::q_del_prime(k, i), a) ==
            ext_seminorm(ExtSeminormKind::q_prime(k, i), t);
        if (plain && primed) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"i", i}, {"k", k}, {"a", ext_text(a)}});
      }));

  out.push_back(sampled_check(
      cfg, "extension.iota_multiplicative", "iota(x) iota(y) == iota(x y)",
      params, cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const CommSeries x = rng.comm_series(ctx, 5, cfg.max_degree);
        const CommSeries y = rng.comm_series(ctx, 5, cfg.max_degree);
        if (ext_mul(iota(x), iota(y)) == iota(comm_mul(x, y))) {
          return SampleOutcome{};
        }
        return sample_fail(
            json{{"x", comm_to_text(x)}, {"y", comm_to_text(y)}});
      }));

  out.push_back(sampled_check(
      cfg, "extension.square_zero_ideal", "(0, m)(0, n) == 0", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const CommSeries m = rng.comm_series(ctx, 5, cfg.max_degree);
        const CommSeries n = rng.comm_series(ctx, 5, cfg.max_degree);
        if (ext_mul(pure_module(m), pure_module(n)).is_zero()) {
          return SampleOutcome{};
        }
        return sample_fail(
            json{{"m", comm_to_text(m)}, {"n", comm_to_text(n)}});
      }));

  out.push_back(sampled_check(
      cfg, "extension.leibniz_D",
      "D_i(a b) == D_i(a) b + a D_i(b) (unclipped degrees)", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const std::uint32_t da = rng.uniform(0, cfg.max_degree);
        const std::uint32_t db = rng.uniform(0, cfg.max_degree - da);
        const ExtElement a(rng.comm_series(ctx, 4, da),
                           rng.comm_series(ctx, 4, cfg.max_degree));
        const ExtElement b(rng.comm_series(ctx, 4, db),
                           rng.comm_series(ctx, 4, cfg.max_degree));
        const Letter i = pick_i(rng);
        const ExtElement lhs = derivation_D(i, ext_mul(a, b));
        const ExtElement rhs = ext_add(ext_mul(derivation_D(i, a), b),
                                       ext_mul(a, derivation_D(i, b)));
        if (lhs == rhs) {
          return SampleOutcome{};
        }
        return sample_fail(
            json{{"i", i}, {"a", ext_text(a)}, {"b", ext_text(b)}});
      }));
}

// -------------------------------------------------------------- singer_wermer

void suite_singer_wermer(const RunConfig& cfg,
                         std::vector<CheckResult>& out) {
  const TruncationCtx ctx{cfg.max_index, cfg.max_degree};
  json params;
  params["samples"] = cfg.samples;
  params["i_values"] = cfg.i_values;
  params["max_index"] = cfg.max_index;
  params["max_degree"] = cfg.max_degree;

  CheckResult shape = make_check("singer_wermer.image_shape",
                                 "D_i(x, m) == (0, d_i x)", params);
  CheckResult square = make_check("singer_wermer.image_square_zero",
                                  "D_i(a)^2 == 0", params);
  CheckResult radical = make_check(
      "singer_wermer.image_in_radical",
      "constant_term(algebra_part(D_i(a))) == 0", params);
  CheckResult control = make_check(
      "singer_wermer.negative_control",
      "radical_predicate(iota(1)) == false", params);

  for (const Letter i : cfg.i_values) {
    const std::uint64_t stream = cfg.seed ^ fnv1a("singer_wermer") ^ i;
    const SingerWermerReport rep =
        singer_wermer_report(i, ctx, stream, cfg.samples, cfg.mode);
    shape.checked += rep.samples;
    shape.failed += rep.image_shape_failures;
    if (rep.image_shape_failures > 0 && shape.counterexample.is_null()) {
      shape.counterexample = json{{"i", i}};
    }
    square.checked += rep.samples;
    square.failed += rep.square_failures;
    if (rep.square_failures > 0 && square.counterexample.is_null()) {
      square.counterexample = json{{"i", i}};
    }
    radical.checked += rep.samples;
    radical.failed += rep.radical_failures;
    if (rep.radical_failures > 0 && radical.counterexample.is_null()) {
      radical.counterexample = json{{"i", i}};
    }
    tick(control, rep.negative_control_pass, json{{"i", i}});
  }
  finish(out, std::move(shape));
  finish(out, std::move(square));
  finish(out, std::move(radical));
  finish(out, std::move(control));
}

// -------------------------------------------------------------------- bounds

void suite_bounds(const RunConfig& cfg, std::vector<CheckResult>& out) {
  const TruncationCtx ctx{cfg.max_index, cfg.max_degree};
  const auto pick_i = [&cfg](Sampler& rng) {
    return cfg.i_values[rng.uniform(
        0, static_cast<std::uint32_t>(cfg.i_values.size()) - 1)];
  };
  json params;
  params["samples"] = cfg.samples;
  params["max_index"] = cfg.max_index;
  params["max_degree"] = cfg.max_degree;
  params["i_values"] = cfg.i_values;
  params["m_limit"] = cfg.m_limit;
  params["k_limit"] = cfg.k_limit;

  out.push_back(sampled_check(
      cfg, "bounds.derivation_tau_c",
      "tau_c(D_i a; n, m) <= (m+1) tau_c(a; max(n,i), m+1)", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 6, cfg.max_degree);
        const Letter i = pick_i(rng);
        const Letter n = rng.uniform(0, cfg.max_index);
        const std::uint32_t m = rng.uniform(0, cfg.m_limit);
        const Rational lhs = tau_c_seminorm(tensor_derivation(a, i), n, m);
        const Rational rhs =
            Rational(static_cast<unsigned long>(m + 1)) *
            tau_c_seminorm(a, std::max(n, i), m + 1);
        if (lhs <= rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"i", i}, {"n", n}, {"m", m},
                                {"a", tensor_to_text(a)},
                                {"lhs", to_string(lhs)},
                                {"rhs", to_string(rhs)}});
      }));

  out.push_back(sampled_check(
      cfg, "bounds.comm_derivation_p",
      "p_m(d_i x) <= (m+1) p_{max(m,i)+1}(x)", params, cfg.samples,
      [&](Sampler& rng) -> SampleOutcome {
        const CommSeries x = rng.comm_series(ctx, 6, cfg.max_degree);
        const Letter i = pick_i(rng);
        const std::uint32_t m = rng.uniform(0, cfg.k_limit);
        const Rational lhs = p_k(partial_derivative(x, i), m);
        const std::uint32_t big = std::max(m, static_cast<std::uint32_t>(i));
        const Rational rhs =
            Rational(static_cast<unsigned long>(m + 1)) * p_k(x, big + 1);
        if (lhs <= rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"i", i}, {"m", m}, {"x", comm_to_text(x)},
                                {"lhs", to_string(lhs)},
                                {"rhs", to_string(rhs)}});
      }));

  out.push_back(sampled_check(
      cfg, "bounds.qdel_vs_q", "q_m_di(a) <= (m+2) q_{max(m,i)+1}(a)",
      params, cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const ExtElement a(rng.comm_series(ctx, 5, cfg.max_degree),
                           rng.comm_series(ctx, 5, cfg.max_degree));
        const Letter i = pick_i(rng);
        const std::uint32_t m = rng.uniform(0, cfg.k_limit);
        const std::uint32_t big = std::max(m, static_cast<std::uint32_t>(i));
        const Rational lhs =
            ext_seminorm(ExtSeminormKind::q_del(m, i), a);
        const Rational rhs = Rational(static_cast<unsigned long>(m + 2)) *
                             ext_seminorm(ExtSeminormKind::q(big + 1), a);
        if (lhs <= rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"i", i}, {"m", m}, {"a", ext_text(a)},
                                {"lhs", to_string(lhs)},
                                {"rhs", to_string(rhs)}});
      }));

  Letter top = static_cast<Letter>(cfg.seq_limit);
  for (const Letter i : cfg.i_values) {
    top = std::max(top, i);
  }
  const TruncationCtx wctx{top, 1};
  CheckResult witness = make_check(
      "bounds.qprime_witness",
      "q'_k_i(iota(X_i - X_N)) == [N <= k] and q'_k_di(iota(X_i - X_N)) == "
      "1 + [N <= k]",
      params);
  for (const Letter i : cfg.i_values) {
    for (std::uint32_t bign = 1; bign <= cfg.seq_limit; ++bign) {
      if (bign == i) {
        continue;
      }
      const CommSeries x = CommSeries::generator(i, wctx) -
                           CommSeries::generator(bign, wctx);
      const ExtElement e = iota(x);
      for (std::uint32_t k = 0; k <= cfg.k_limit; ++k) {
        const Rational inert = (bign <= k) ? 1 : 0;
        const Rational got_prime =
            ext_seminorm(ExtSeminormKind::q_prime(k, i), e);
        const Rational got_del =
            ext_seminorm(ExtSeminormKind::q_del_prime(k, i), e);
        tick(witness, got_prime == inert && got_del == 1 + inert,
             json{{"i", i}, {"N", bign}, {"k", k},
                  {"q_prime", to_string(got_prime)},
                  {"q_del_prime", to_string(got_del)},
                  {"want_prime", to_string(inert)},
                  {"want_del_prime", to_string(Rational(1 + inert))}});
      }
    }
  }
  finish(out, std::move(witness));
}

// ---------------------------------------------------------------------- laws

void suite_laws(const RunConfig& cfg, std::vector<CheckResult>& out) {
  const TruncationCtx ctx{cfg.max_index, cfg.max_degree};
  const auto pick_i = [&cfg](Sampler& rng) {
    return cfg.i_values[rng.uniform(
        0, static_cast<std::uint32_t>(cfg.i_values.size()) - 1)];
  };
  json params;
  params["samples"] = cfg.samples;
  params["max_index"] = cfg.max_index;
  params["max_degree"] = cfg.max_degree;
  params["i_values"] = cfg.i_values;

  out.push_back(sampled_check(
      cfg, "laws.associativity", "(a b) c == a (b c)", params, cfg.samples,
      [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 4, cfg.max_degree);
        const TensorSeries b = rng.tensor_series(ctx, 4, cfg.max_degree);
        const TensorSeries c = rng.tensor_series(ctx, 4, cfg.max_degree);
        const CommSeries x = rng.comm_series(ctx, 4, cfg.max_degree);
        const CommSeries y = rng.comm_series(ctx, 4, cfg.max_degree);
        const CommSeries z = rng.comm_series(ctx, 4, cfg.max_degree);
        const bool tensor_ok = (a * b) * c == a * (b * c);
        const bool comm_ok = (x * y) * z == x * (y * z);
        if (tensor_ok && comm_ok) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"tensor_ok", tensor_ok},
                                {"comm_ok", comm_ok},
                                {"a", tensor_to_text(a)},
                                {"x", comm_to_text(x)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.distributivity", "a (b + c) == a b + a c", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 4, cfg.max_degree);
        const TensorSeries b = rng.tensor_series(ctx, 4, cfg.max_degree);
        const TensorSeries c = rng.tensor_series(ctx, 4, cfg.max_degree);
        if (a * (b + c) == a * b + a * c) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"a", tensor_to_text(a)},
                                {"b", tensor_to_text(b)},
                                {"c", tensor_to_text(c)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.leibniz_partial",
      "d_i(x y) == d_i(x) y + x d_i(y) (unclipped degrees)", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const std::uint32_t da = rng.uniform(0, cfg.max_degree);
        const std::uint32_t db = rng.uniform(0, cfg.max_degree - da);
        const CommSeries x = rng.comm_series(ctx, 4, da);
        const CommSeries y = rng.comm_series(ctx, 4, db);
        const Letter i = pick_i(rng);
        const CommSeries lhs = partial_derivative(comm_mul(x, y), i);
        const CommSeries rhs = add(comm_mul(partial_derivative(x, i), y),
                                   comm_mul(x, partial_derivative(y, i)));
        if (lhs == rhs) {
          return SampleOutcome{};
        }
        return sample_fail(
            json{{"i", i}, {"x", comm_to_text(x)}, {"y", comm_to_text(y)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.leibniz_tensor",
      "D_i(a b) == D_i(a) b + a D_i(b) (unclipped degrees)", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const std::uint32_t da = rng.uniform(0, cfg.max_degree);
        const std::uint32_t db = rng.uniform(0, cfg.max_degree - da);
        const TensorSeries a = rng.tensor_series(ctx, 4, da);
        const TensorSeries b = rng.tensor_series(ctx, 4, db);
        const Letter i = pick_i(rng);
        const TensorSeries lhs = tensor_derivation(mul(a, b), i);
        const TensorSeries rhs = add(mul(tensor_derivation(a, i), b),
                                     mul(a, tensor_derivation(b, i)));
        if (lhs == rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{
            {"i", i}, {"a", tensor_to_text(a)}, {"b", tensor_to_text(b)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.derivations_commute", "d_i d_j x == d_j d_i x", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const CommSeries x = rng.comm_series(ctx, 5, cfg.max_degree);
        const Letter i = pick_i(rng);
        const Letter j = pick_i(rng);
        const CommSeries lhs =
            partial_derivative(partial_derivative(x, j), i);
        const CommSeries rhs =
            partial_derivative(partial_derivative(x, i), j);
        if (lhs == rhs) {
          return SampleOutcome{};
        }
        return sample_fail(
            json{{"i", i}, {"j", j}, {"x", comm_to_text(x)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.alpha_idempotent", "alpha(alpha(a)) == alpha(a)", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 5, cfg.max_degree);
        const TensorSeries once = averaging_alpha(a);
        if (averaging_alpha(once) == once) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"a", tensor_to_text(a)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.alpha_contraction",
      "tau_c(alpha(a); n, m) <= tau_c(a; n, m)", params, cfg.samples,
      [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 5, cfg.max_degree);
        const Letter n = rng.uniform(0, cfg.max_index);
        const std::uint32_t m = rng.uniform(0, cfg.m_limit);
        const Rational lhs = tau_c_seminorm(averaging_alpha(a), n, m);
        const Rational rhs = tau_c_seminorm(a, n, m);
        if (lhs <= rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"n", n}, {"m", m}, {"a", tensor_to_text(a)},
                                {"lhs", to_string(lhs)},
                                {"rhs", to_string(rhs)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.collapse_embed_id", "collapse(embed_symmetric(x)) == x",
      params, cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const CommSeries x = rng.comm_series(ctx, 5, cfg.max_degree);
        if (collapse(embed_symmetric(x)) == x) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"x", comm_to_text(x)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.embed_alpha_fixed",
      "alpha(embed_symmetric(x)) == embed_symmetric(x)", params, cfg.samples,
      [&](Sampler& rng) -> SampleOutcome {
        const CommSeries x = rng.comm_series(ctx, 5, cfg.max_degree);
        const TensorSeries e = embed_symmetric(x);
        if (averaging_alpha(e) == e) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"x", comm_to_text(x)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.embed_product_compat",
      "alpha(embed_symmetric(x) embed_symmetric(y)) == embed_symmetric(x y)",
      params, cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const CommSeries x = rng.comm_series(ctx, 4, cfg.max_degree);
        const CommSeries y = rng.comm_series(ctx, 4, cfg.max_degree);
        const TensorSeries lhs =
            averaging_alpha(mul(embed_symmetric(x), embed_symmetric(y)));
        const TensorSeries rhs = embed_symmetric(comm_mul(x, y));
        if (lhs == rhs) {
          return SampleOutcome{};
        }
        return sample_fail(
            json{{"x", comm_to_text(x)}, {"y", comm_to_text(y)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.tau_coordinate_matches",
      "tau_i(a; n, m, coordinate) == tau_c(a; n, m)", params, cfg.samples,
      [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 5, cfg.max_degree);
        const Letter n = rng.uniform(0, cfg.max_index);
        const std::uint32_t m = rng.uniform(0, cfg.m_limit);
        const Rational lhs =
            tau_i_seminorm(a, n, m, FunctionalFamily::coordinate());
        const Rational rhs = tau_c_seminorm(a, n, m);
        if (lhs == rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"n", n}, {"m", m}, {"a", tensor_to_text(a)},
                                {"lhs", to_string(lhs)},
                                {"rhs", to_string(rhs)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.seminorm_monotone",
      "tau(a; n, m) <= tau(a; n', m') when n <= n' and m <= m'", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 5, cfg.max_degree);
        const Letter n = rng.uniform(0, cfg.max_index);
        const Letter n2 = rng.uniform(n, cfg.max_index);
        const std::uint32_t m = rng.uniform(0, cfg.m_limit);
        const std::uint32_t m2 = rng.uniform(m, cfg.m_limit);
        const Letter i = pick_i(rng);
        const FunctionalFamily fam =
            FunctionalFamily::psi_at(i, cfg.corrupt_psi);
        const bool c_ok =
            tau_c_seminorm(a, n, m) <= tau_c_seminorm(a, n2, m2);
        const bool i_ok = tau_i_seminorm(a, n, m, fam) <=
                          tau_i_seminorm(a, n2, m2, fam);
        if (c_ok && i_ok) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"n", n}, {"n2", n2}, {"m", m}, {"m2", m2},
                                {"i", i}, {"a", tensor_to_text(a)},
                                {"tau_c_ok", c_ok}, {"tau_i_ok", i_ok}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.submultiplicative_tau_c",
      "tau_c(a b; n, m) <= tau_c(a; n, m) tau_c(b; n, m)", params,
      cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 5, cfg.max_degree);
        const TensorSeries b = rng.tensor_series(ctx, 5, cfg.max_degree);
        const Letter n = rng.uniform(0, cfg.max_index);
        const std::uint32_t m = rng.uniform(0, cfg.m_limit);
        const Rational lhs = tau_c_seminorm(mul(a, b), n, m);
        const Rational rhs =
            tau_c_seminorm(a, n, m) * tau_c_seminorm(b, n, m);
        if (lhs <= rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"n", n}, {"m", m}, {"a", tensor_to_text(a)},
                                {"b", tensor_to_text(b)},
                                {"lhs", to_string(lhs)},
                                {"rhs", to_string(rhs)}});
      }));

  out.push_back(sampled_check(
      cfg, "laws.submultiplicative_tau_i",
      "tau_i(a b; n, m) <= tau_i(a; n, m) tau_i(b; n, m) for m <= "
      "max_degree",
      params, cfg.samples, [&](Sampler& rng) -> SampleOutcome {
        const TensorSeries a = rng.tensor_series(ctx, 4, cfg.max_degree);
        const TensorSeries b = rng.tensor_series(ctx, 4, cfg.max_degree);
        const Letter n = rng.uniform(0, cfg.max_index);
        const std::uint32_t m = rng.uniform(0, cfg.max_degree);
        const Letter i = pick_i(rng);
        const FunctionalFamily fam =
            FunctionalFamily::psi_at(i, cfg.corrupt_psi);
        const Rational lhs = tau_i_seminorm(mul(a, b), n, m, fam);
        const Rational rhs = tau_i_seminorm(a, n, m, fam) *
                             tau_i_seminorm(b, n, m, fam);
        if (lhs <= rhs) {
          return SampleOutcome{};
        }
        return sample_fail(json{{"n", n}, {"m", m}, {"i", i},
                                {"a", tensor_to_text(a)},
                                {"b", tensor_to_text(b)},
                                {"lhs", to_string(lhs)},
                                {"rhs", to_string(rhs)}});
      }));

  // Observational only: the averaging projection need not contract the
  // summing-family seminorms, so the suite records the worst observed
  // ratio instead of asserting a bound.
  {
    CheckResult ratio = make_check(
        "laws.alpha_tau_i_ratio",
        "max observed tau_i(alpha(a); n, m) / tau_i(a; n, m) (no bound "
        "asserted)",
        params);
    ratio.informational = true;
    const std::uint64_t stream = cfg.seed ^ fnv1a(ratio.id);
    std::vector<std::optional<Rational>> ratios(cfg.samples);
    parallel_for(cfg.samples, cfg.mode, [&](std::size_t s) {
      Sampler rng = Sampler::for_sample(stream, s);
      const TensorSeries a = rng.tensor_series(ctx, 5, cfg.max_degree);
      const Letter n = rng.uniform(0, cfg.max_index);
      const std::uint32_t m =
          rng.uniform(1, std::max<std::uint32_t>(1, cfg.m_limit));
      const Letter i = pick_i(rng);
      const FunctionalFamily fam =
          FunctionalFamily::psi_at(i, cfg.corrupt_psi);
      const Rational den = tau_i_seminorm(a, n, m, fam);
      if (den == 0) {
        return;
      }
      const Rational num = tau_i_seminorm(averaging_alpha(a), n, m, fam);
      ratios[s] = num / den;
    });
    Rational best = 0;
    std::uint64_t used = 0;
    std::int64_t best_at = -1;
    for (std::uint32_t s = 0; s < cfg.samples; ++s) {
      if (!ratios[s]) {
        continue;
      }
      ++used;
      if (*ratios[s] > best) {
        best = *ratios[s];
        best_at = s;
      }
    }
    ratio.checked = used;
    json values;
    values["max_ratio"] = to_string(best);
    values["at_sample"] = best_at;
    ratio.values = std::move(values);
    finish(out, std::move(ratio));
  }

  {
    const std::string anchor =
        cfg.strict_ctx
            ? "add(a, b) throws when the operand windows differ (strict)"
            : "add(a, b) restricts to the window meet";
    const TruncationCtx wide{static_cast<Letter>(cfg.max_index + 1),
                             cfg.max_degree + 1};
    out.push_back(sampled_check(
        cfg, "laws.window_policy", anchor, params, cfg.samples,
        [&, wide](Sampler& rng) -> SampleOutcome {
          const CommSeries x = rng.comm_series(ctx, 4, cfg.max_degree);
          const CommSeries y = rng.comm_series(wide, 4, cfg.max_degree + 1);
          if (cfg.strict_ctx) {
            try {
              const CommSeries z = add(x, y, ContextPolicy::Strict);
              (void)z;
            } catch (const std::invalid_argument&) {
              return SampleOutcome{};
            }
            return sample_fail(json{{"x", comm_to_text(x)},
                                    {"y", comm_to_text(y)},
                                    {"error", "no exception thrown"}});
          }
          const CommSeries z = add(x, y, ContextPolicy::Meet);
          const TruncationCtx shared = meet(x.ctx(), y.ctx());
          CommSeries expect(shared);
          for (const auto& [e, c] : x.terms()) {
            expect.add_term(e, c);
          }
          for (const auto& [e, c] : y.terms()) {
            expect.add_term(e, c);
          }
          if (z == expect && z.ctx() == shared) {
            return SampleOutcome{};
          }
          return sample_fail(json{{"x", comm_to_text(x)},
                                  {"y", comm_to_text(y)},
                                  {"got", comm_to_text(z)},
                                  {"want", comm_to_text(expect)}});
        }));
  }
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

std::uint64_t VerificationReport::assertions_checked() const {
  std::uint64_t total = 0;
  for (const CheckResult& c : checks) {
    total += c.checked;
  }
  return total;
}

std::uint64_t VerificationReport::assertions_failed() const {
  std::uint64_t total = 0;
  for (const CheckResult& c : checks) {
    total += c.failed;
  }
  return total;
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {
      "statements",  "psi",           "convergence", "incomparability",
      "extension",   "singer_wermer", "bounds",      "laws"};
  return names;
}

VerificationReport run_verify(const RunConfig& cfg) {
  if (cfg.max_index < 1) {
    throw std::invalid_argument("max_index must be >= 1");
  }
  if (cfg.max_degree < 1) {
    throw std::invalid_argument("max_degree must be >= 1");
  }
  if (cfg.i_values.empty()) {
    throw std::invalid_argument("i_values must not be empty");
  }
  for (const Letter i : cfg.i_values) {
    if (i < 1) {
      throw std::invalid_argument("summing positions must be >= 1");
    }
  }
  if (cfg.seq_limit < 2) {
    throw std::invalid_argument("seq_limit must be >= 2");
  }
  for (const std::string& s : cfg.suites) {
    if (std::find(known_suites().begin(), known_suites().end(), s) ==
        known_suites().end()) {
      throw std::invalid_argument("unknown suite: " + s);
    }
  }
  const auto wants = [&cfg](const char* name) {
    return cfg.suites.empty() ||
           std::find(cfg.suites.begin(), cfg.suites.end(), name) !=
               cfg.suites.end();
  };

  VerificationReport report;
  report.config = cfg;
  if (wants("statements")) {
    suite_statements(cfg, report.checks);
  }
  if (wants("psi")) {
    suite_psi(cfg, report.checks);
  }
  if (wants("convergence")) {
    suite_convergence(cfg, report.checks);
  }
  if (wants("incomparability")) {
    suite_incomparability(cfg, report.checks);
  }
  if (wants("extension")) {
    suite_extension(cfg, report.checks);
  }
  if (wants("singer_wermer")) {
    suite_singer_wermer(cfg, report.checks);
  }
  if (wants("bounds")) {
    suite_bounds(cfg, report.checks);
  }
  if (wants("laws")) {
    suite_laws(cfg, report.checks);
  }
  return report;
}

nlohmann::ordered_json config_to_json(const RunConfig& cfg) {
  json j;
  j["max_index"] = cfg.max_index;
  j["max_degree"] = cfg.max_degree;
  j["i_values"] = cfg.i_values;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["psi_samples"] = cfg.psi_samples;
  j["seq_limit"] = cfg.seq_limit;
  j["m_limit"] = cfg.m_limit;
  j["k_limit"] = cfg.k_limit;
  j["corrupt_psi"] = cfg.corrupt_psi;
  j["strict_ctx"] = cfg.strict_ctx;
  j["mode"] = cfg.mode == ExecMode::Parallel ? "parallel" : "serial";
  j["suites"] = cfg.suites;
  return j;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  json j;
  j["tool"] = "powser";
  j["format"] = "verification-report/1";
  j["config"] = config_to_json(report.config);
  j["checks"] = json::array();
  std::uint64_t passed = 0;
  for (const CheckResult& c : report.checks) {
    json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    jc["params"] = c.params;
    jc["informational"] = c.informational;
    jc["pass"] = c.pass;
    jc["checked"] = c.checked;
    jc["failed"] = c.failed;
    jc["counterexample"] = c.counterexample;
    jc["values"] = c.values;
    j["checks"].push_back(std::move(jc));
    if (c.pass) {
      ++passed;
    }
  }
  json summary;
  summary["checks"] = report.checks.size();
  summary["passed"] = passed;
  summary["failed"] = report.checks.size() - passed;
  summary["assertions_checked"] = report.assertions_checked();
  summary["assertions_failed"] = report.assertions_failed();
  summary["all_pass"] = report.all_pass();
  j["summary"] = std::move(summary);
  return j;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification report\n";
  out << "config: " << config_to_json(report.config).dump() << "\n";
  for (const CheckResult& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  checked="
        << c.checked;
    if (c.failed > 0) {
      out << " failed=" << c.failed;
    }
    if (c.informational) {
      out << " (informational)";
    }
    out << "\n       " << c.anchor << "\n";
    if (!c.counterexample.is_null()) {
      out << "       counterexample: " << c.counterexample.dump() << "\n";
    }
    if (!c.values.is_null()) {
      out << "       values: " << c.values.dump() << "\n";
    }
  }
  std::uint64_t passed = 0;
  for (const CheckResult& c : report.checks) {
    if (c.pass) {
      ++passed;
    }
  }
  out << "summary: " << passed << "/" << report.checks.size()
      << " checks passed, " << report.assertions_failed() << "/"
      << report.assertions_checked() << " assertions failed\n";
  out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (!token.empty()) {
      parts.push_back(token);
    }
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid integer for config key '" + key +
                                "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") {
    return true;
  }
  if (value == "0" || value == "false" || value == "no") {
    return false;
  }
  throw std::invalid_argument("invalid boolean for config key '" + key +
                              "': " + value);
}

}  // namespace

void set_config_value(RunConfig& cfg, const std::string& key,
                      const std::string& value) {
  if (key == "max_index") {
    cfg.max_index = static_cast<Letter>(parse_u64(key, value));
  } else if (key == "max_degree") {
    cfg.max_degree = static_cast<std::uint32_t>(parse_u64(key, value));
  } else if (key == "i_values") {
    std::vector<Letter> vals;
    for (const std::string& part : split_commas(value)) {
      vals.push_back(static_cast<Letter>(parse_u64(key, part)));
    }
    if (vals.empty()) {
      throw std::invalid_argument("i_values must not be empty");
    }
    cfg.i_values = std::move(vals);
  } else if (key == "seed") {
    cfg.seed = parse_u64(key, value);
  } else if (key == "samples") {
    cfg.samples = static_cast<std::uint32_t>(parse_u64(key, value));
  } else if (key == "psi_samples") {
    cfg.psi_samples = static_cast<std::uint32_t>(parse_u64(key, value));
  } else if (key == "seq_limit") {
    cfg.seq_limit = static_cast<std::uint32_t>(parse_u64(key, value));
  } else if (key == "m_limit") {
    cfg.m_limit = static_cast<std::uint32_t>(parse_u64(key, value));
  } else if (key == "k_limit") {
    cfg.k_limit = static_cast<std::uint32_t>(parse_u64(key, value));
  } else if (key == "corrupt_psi") {
    cfg.corrupt_psi = parse_bool(key, value);
  } else if (key == "strict_ctx") {
    cfg.strict_ctx = parse_bool(key, value);
  } else if (key == "mode") {
    if (value == "serial") {
      cfg.mode = ExecMode::Serial;
    } else if (value == "parallel") {
      cfg.mode = ExecMode::Parallel;
    } else {
      throw std::invalid_argument("mode must be 'serial' or 'parallel', got: " +
                                  value);
    }
  } else if (key == "suites") {
    cfg.suites = split_commas(value);
    for (const std::string& s : cfg.suites) {
      if (std::find(known_suites().begin(), known_suites().end(), s) ==
          known_suites().end()) {
        throw std::invalid_argument("unknown suite: " + s);
      }
    }
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  RunConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  " is missing '=': " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    set_config_value(cfg, key, value);
  }
  return cfg;
}

}  // namespace powser
