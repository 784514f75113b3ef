#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "powser/comm_series.hpp"
#include "powser/seminorms.hpp"
#include "powser/witness.hpp"

namespace powser {

// Square-zero extension of the commutative window algebra by itself:
// pairs (x, m) with product (x, m)(y, n) = (xy, x n + y m). The second
// component is a copy of the algebra carrying only the module action, so
// every element of the form (0, m) squares to zero.
class ExtElement {
 public:
  ExtElement(CommSeries algebra_part, CommSeries module_part);
  const CommSeries& algebra_part() const { return x_; }
  const CommSeries& module_part() const { return m_; }
  const TruncationCtx& ctx() const { return x_.ctx(); }
  bool is_zero() const { return x_.is_zero() && m_.is_zero(); }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.x_ == b.x_ && a.m_ == b.m_;
  }

 private:
  CommSeries x_;
  CommSeries m_;
};

ExtElement ext_add(const ExtElement& a, const ExtElement& b);
ExtElement ext_sub(const ExtElement& a, const ExtElement& b);
ExtElement ext_scale(const Rational& c, const ExtElement& a);
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);

// Embedding of the base algebra on the first coordinate, x |-> (x, 0).
ExtElement iota(const CommSeries& x);
// Pure module element (0, m).
ExtElement pure_module(const CommSeries& m);

// Families of seminorms on the extension, all built from the diagonal
// sequences on the base algebra:
//   Q          q_k(x, m)        = p_k(x) + p_k(m)
//   QPrime     q'_{k,i}(x, m)   = p'_{k,i}(x) + p'_{k,i}(m)
//   QDel       q_{k,di}(x, m)   = p_k(x) + p_k(d_i x - m)
//   QDelPrime  q'_{k,di}(x, m)  = p'_{k,i}(x) + p'_{k,i}(d_i x - m)
struct ExtSeminormKind {
  enum class Form { Q, QPrime, QDel, QDelPrime };
  Form form = Form::Q;
  std::uint32_t k = 0;
  Letter i = 1;  // unused by Form::Q

  static ExtSeminormKind q(std::uint32_t k);
  static ExtSeminormKind q_prime(std::uint32_t k, Letter i);
  static ExtSeminormKind q_del(std::uint32_t k, Letter i);
  static ExtSeminormKind q_del_prime(std::uint32_t k, Letter i);
  std::string label() const;
};

Rational ext_seminorm(const ExtSeminormKind& kind, const ExtElement& a);

// The twist theta_i(x, m) = (x, d_i x - m); an involution that swaps the
// plain and derivation-shifted seminorm families isometrically.
ExtElement theta(Letter i, const ExtElement& a);

// The derivation D_i(x, m) = (0, d_i x). Its image consists of square-zero
// elements inside the non-unital maximal ideal.
ExtElement derivation_D(Letter i, const ExtElement& a);

// True when the algebra part has zero constant term, i.e. the element
// lies in the maximal ideal (0 constant term) of the extension; on the
// truncated window this ideal plays the role of the radical.
bool radical_predicate(const ExtElement& a);

struct SingerWermerReport {
  std::uint64_t samples = 0;
  std::uint64_t image_shape_failures = 0;  // D(a) not of the form (0, *)
  std::uint64_t square_failures = 0;       // D(a)^2 != 0
  std::uint64_t radical_failures = 0;      // D(a) outside the ideal
  bool negative_control_pass = false;      // iota(1) itself is NOT radical
  bool pass() const {
    return image_shape_failures == 0 && square_failures == 0 &&
           radical_failures == 0 && negative_control_pass;
  }
};

SingerWermerReport singer_wermer_report(Letter i, const TruncationCtx& ctx,
                                        std::uint64_t seed,
                                        std::uint32_t samples, ExecMode mode);

// Grid of two extension seminorm families evaluated along a sequence of
// extension elements, used to witness that the families separate.
struct ExtFamilyDesc {
  ExtSeminormKind::Form form = ExtSeminormKind::Form::Q;
  Letter i = 1;
};

ExtSeminormKind make_kind(const ExtFamilyDesc& fam, std::uint32_t k);

WitnessTable topology_pair_witness(
    const std::vector<ExtFamilyDesc>& families,
    const std::vector<std::uint32_t>& ks,
    const std::function<ExtElement(std::uint32_t)>& sequence,
    const std::string& sequence_label,
    const std::vector<std::uint32_t>& indices, ExecMode mode);

}  // namespace powser
