#pragma once

#include <optional>
#include <string>

#include "powser/comm_series.hpp"
#include "powser/indices.hpp"
#include "powser/tensor_series.hpp"

namespace powser {

// Text forms.
//
//   word      ::= 'X' int ('.' 'X' int)*          e.g. X2.X0.X1
//   tterm     ::= rational '*' word | rational
//   tseries   ::= tterm (('+'|'-') tterm)*        e.g. 3/2*X0.X1 + 1
//   monomial  ::= 'X' int ('^' int)? ('*' 'X' int ('^' int)?)*
//   cterm     ::= rational '*' monomial | rational | monomial
//   cseries   ::= cterm (('+'|'-') cterm)*        e.g. 3/2*X0^2*X1 + 1
//
// Printing is canonical: terms ascend by degree then lexicographically,
// coefficients always precede words in tensor terms, terms join with
// ' + ' or ' - ' according to the sign of the coefficient, and the empty
// series prints as "0". parse(print(s)) is the identity and
// print(parse(text)) is idempotent.
//
// The index token 'N' (as in "XN") is a placeholder resolved by the
// optional argument; parsing fails if a placeholder appears without one.

std::string word_to_text(const Word& w);  // empty word prints "1"
Word parse_word(const std::string& text, std::optional<Letter> placeholder = std::nullopt);

std::string monomial_to_text(const ExponentIndex& e);  // unit prints "1"

std::string tensor_to_text(const TensorSeries& a);
std::string comm_to_text(const CommSeries& a);

// Parse into an explicit window (out-of-window terms are discarded, the
// usual truncation semantics) ...
TensorSeries parse_tensor(const std::string& text, TruncationCtx ctx,
                          std::optional<Letter> placeholder = std::nullopt);
CommSeries parse_comm(const std::string& text, TruncationCtx ctx,
                      std::optional<Letter> placeholder = std::nullopt);

// ... or into the smallest window admitting every parsed term.
TensorSeries parse_tensor_auto(const std::string& text,
                               std::optional<Letter> placeholder = std::nullopt);
CommSeries parse_comm_auto(const std::string& text,
                           std::optional<Letter> placeholder = std::nullopt);

}  // namespace powser
