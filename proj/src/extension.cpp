#include "powser/extension.hpp"

#include <stdexcept>
#include <utility>

#include "powser/exec.hpp"
#include "powser/sampler.hpp"

namespace powser {

ExtElement::ExtElement(CommSeries algebra_part, CommSeries module_part)
    : x_(std::move(algebra_part)), m_(std::move(module_part)) {
  if (!(x_.ctx() == m_.ctx())) {
    const TruncationCtx shared = meet(x_.ctx(), m_.ctx());
    CommSeries nx(shared);
    for (const auto& [e, c] : x_.terms()) {
      nx.add_term(e, c);
    }
    CommSeries nm(shared);
    for (const auto& [e, c] : m_.terms()) {
      nm.add_term(e, c);
    }
    x_ = std::move(nx);
    m_ = std::move(nm);
  }
}

ExtElement ext_add(const ExtElement& a, const ExtElement& b) {
  return ExtElement(add(a.algebra_part(), b.algebra_part()),
                    add(a.module_part(), b.module_part()));
}

ExtElement ext_sub(const ExtElement& a, const ExtElement& b) {
  return ExtElement(sub(a.algebra_part(), b.algebra_part()),
                    sub(a.module_part(), b.module_part()));
}

ExtElement ext_scale(const Rational& c, const ExtElement& a) {
  return ExtElement(scale(a.algebra_part(), c), scale(a.module_part(), c));
}

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  CommSeries alg = comm_mul(a.algebra_part(), b.algebra_part());
  CommSeries mod = add(comm_mul(a.algebra_part(), b.module_part()),
                       comm_mul(b.algebra_part(), a.module_part()));
  return ExtElement(std::move(alg), std::move(mod));
}

ExtElement iota(const CommSeries& x) {
  return ExtElement(x, CommSeries(x.ctx()));
}

ExtElement pure_module(const CommSeries& m) {
  return ExtElement(CommSeries(m.ctx()), m);
}

ExtSeminormKind ExtSeminormKind::q(std::uint32_t k) {
  return ExtSeminormKind{Form::Q, k, 1};
}
ExtSeminormKind ExtSeminormKind::q_prime(std::uint32_t k, Letter i) {
  return ExtSeminormKind{Form::QPrime, k, i};
}
ExtSeminormKind ExtSeminormKind::q_del(std::uint32_t k, Letter i) {
  return ExtSeminormKind{Form::QDel, k, i};
}
ExtSeminormKind ExtSeminormKind::q_del_prime(std::uint32_t k, Letter i) {
  return ExtSeminormKind{Form::QDelPrime, k, i};
}

std::string ExtSeminormKind::label() const {
  switch (form) {
    case Form::Q:
      return "q[k=" + std::to_string(k) + "]";
    case Form::QPrime:
      return "q'[k=" + std::to_string(k) + ",i=" + std::to_string(i) + "]";
    case Form::QDel:
      return "q[k=" + std::to_string(k) + ",d" + std::to_string(i) + "]";
    case Form::QDelPrime:
      return "q'[k=" + std::to_string(k) + ",d" + std::to_string(i) + "]";
  }
  return "q[?]";
}

Rational ext_seminorm(const ExtSeminormKind& kind, const ExtElement& a) {
  const CommSeries& x = a.algebra_part();
  const CommSeries& m = a.module_part();
  switch (kind.form) {
    case ExtSeminormKind::Form::Q:
      return p_k(x, kind.k) + p_k(m, kind.k);
    case ExtSeminormKind::Form::QPrime:
      return p_prime_k(x, kind.k, kind.i) + p_prime_k(m, kind.k, kind.i);
    case ExtSeminormKind::Form::QDel: {
      const CommSeries shifted = sub(partial_derivative(x, kind.i), m);
      return p_k(x, kind.k) + p_k(shifted, kind.k);
    }
    case ExtSeminormKind::Form::QDelPrime: {
      const CommSeries shifted = sub(partial_derivative(x, kind.i), m);
      return p_prime_k(x, kind.k, kind.i) + p_prime_k(shifted, kind.k, kind.i);
    }
  }
  throw std::logic_error("ext_seminorm: unknown form");
}

ExtElement theta(Letter i, const ExtElement& a) {
  return ExtElement(a.algebra_part(),
                    sub(partial_derivative(a.algebra_part(), i),
                        a.module_part()));
}

ExtElement derivation_D(Letter i, const ExtElement& a) {
  return ExtElement(CommSeries(a.ctx()),
                    partial_derivative(a.algebra_part(), i));
}

bool radical_predicate(const ExtElement& a) {
  return a.algebra_part().constant_term() == 0;
}

SingerWermerReport singer_wermer_report(Letter i, const TruncationCtx& ctx,
                                        std::uint64_t seed,
                                        std::uint32_t samples, ExecMode mode) {
  SingerWermerReport report;
  report.samples = samples;
  std::vector<std::uint8_t> shape_ok(samples, 1);
  std::vector<std::uint8_t> square_ok(samples, 1);
  std::vector<std::uint8_t> radical_ok(samples, 1);
  parallel_for(samples, mode, [&](std::size_t s) {
    Sampler rng = Sampler::for_sample(seed, s);
    const CommSeries x = rng.comm_series(ctx, 6, ctx.max_degree);
    const CommSeries m = rng.comm_series(ctx, 6, ctx.max_degree);
    const ExtElement a(x, m);
    const ExtElement d = derivation_D(i, a);
    shape_ok[s] = d.algebra_part().is_zero() ? 1 : 0;
    square_ok[s] = ext_mul(d, d).is_zero() ? 1 : 0;
    radical_ok[s] = radical_predicate(d) ? 1 : 0;
  });
  for (std::uint32_t s = 0; s < samples; ++s) {
    report.image_shape_failures += shape_ok[s] ? 0 : 1;
    report.square_failures += square_ok[s] ? 0 : 1;
    report.radical_failures += radical_ok[s] ? 0 : 1;
  }
  // Negative control: the unit (1, 0) must NOT satisfy the radical
  // predicate, so the predicate is not vacuously true.
  CommSeries unit_series = CommSeries::unit(ctx);
  report.negative_control_pass = !radical_predicate(iota(unit_series));
  return report;
}

ExtSeminormKind make_kind(const ExtFamilyDesc& fam, std::uint32_t k) {
  switch (fam.form) {
    case ExtSeminormKind::Form::Q:
      return ExtSeminormKind::q(k);
    case ExtSeminormKind::Form::QPrime:
      return ExtSeminormKind::q_prime(k, fam.i);
    case ExtSeminormKind::Form::QDel:
      return ExtSeminormKind::q_del(k, fam.i);
    case ExtSeminormKind::Form::QDelPrime:
      return ExtSeminormKind::q_del_prime(k, fam.i);
  }
  throw std::logic_error("make_kind: unknown form");
}

WitnessTable topology_pair_witness(
    const std::vector<ExtFamilyDesc>& families,
    const std::vector<std::uint32_t>& ks,
    const std::function<ExtElement(std::uint32_t)>& sequence,
    const std::string& sequence_label,
    const std::vector<std::uint32_t>& indices, ExecMode mode) {
  std::vector<std::pair<std::string, std::function<Rational(const ExtElement&)>>>
      rows;
  for (const ExtFamilyDesc& fam : families) {
    for (const std::uint32_t k : ks) {
      const ExtSeminormKind kind = make_kind(fam, k);
      rows.emplace_back(kind.label(), [kind](const ExtElement& a) {
        return ext_seminorm(kind, a);
      });
    }
  }
  return tabulate<ExtElement>("extension seminorm grid", sequence_label,
                              indices, rows, sequence, mode);
}

}  // namespace powser
