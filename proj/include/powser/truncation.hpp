#pragma once

#include <algorithm>
#include <cstdint>

#include "powser/indices.hpp"

namespace powser {

// Finite computation window: indeterminates X_0..X_{max_index}, total
// degree at most max_degree. Every stored coefficient lives inside the
// window; arithmetic silently discards anything that leaves it.
struct TruncationCtx {
  Letter max_index = 0;
  std::uint32_t max_degree = 0;

  bool admits(const Word& w) const {
    return w.length() <= max_degree && w.max_letter() <= max_index;
  }
  bool admits(const ExponentIndex& e) const {
    return e.total_degree() <= max_degree && e.max_index() <= max_index;
  }

  friend bool operator==(const TruncationCtx&, const TruncationCtx&) = default;
};

inline TruncationCtx meet(const TruncationCtx& a, const TruncationCtx& b) {
  return {std::min(a.max_index, b.max_index), std::min(a.max_degree, b.max_degree)};
}

// How binary operations reconcile operand windows: Meet takes the
// componentwise minimum; Strict rejects mismatched windows.
enum class ContextPolicy { Meet, Strict };

}  // namespace powser
