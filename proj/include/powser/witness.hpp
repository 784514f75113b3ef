#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "powser/exec.hpp"
#include "powser/rational.hpp"

namespace powser {

// A grid of exact seminorm values: one row per seminorm, one column per
// sequence index, plus a per-row verdict describing the behaviour of the
// values over the tabulated range. Verdicts never claim anything beyond
// the range that was actually evaluated.
struct WitnessRow {
  std::string label;
  std::vector<Rational> values;
  std::string verdict;
};

struct WitnessTable {
  std::string title;
  std::string sequence_label;
  std::vector<std::uint32_t> indices;
  std::vector<WitnessRow> rows;
};

// Verdict classification for one row of exact values, aligned with
// `indices`:
//   - "identically 0 within range"
//   - "eventually 0 within range (N >= x)"   tail of zeros after a nonzero
//   - "constant v within range"
//   - "growing within range"                 strictly increasing
//   - "bounded within range (max = v)"       anything else
std::string verdict_for(const std::vector<Rational>& values,
                        const std::vector<std::uint32_t>& indices);

std::string render_text(const WitnessTable& table);
nlohmann::ordered_json witness_to_json(const WitnessTable& table);

// Fills the grid; every cell is evaluated independently so serial and
// parallel execution produce identical tables.
template <class Elem>
WitnessTable tabulate(
    std::string title, std::string sequence_label,
    const std::vector<std::uint32_t>& indices,
    const std::vector<std::pair<std::string, std::function<Rational(const Elem&)>>>& rows,
    const std::function<Elem(std::uint32_t)>& sequence, ExecMode mode) {
  WitnessTable table;
  table.title = std::move(title);
  table.sequence_label = std::move(sequence_label);
  table.indices = indices;
  table.rows.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    table.rows[r].label = rows[r].first;
    table.rows[r].values.resize(indices.size());
  }
  const std::size_t cells = rows.size() * indices.size();
  parallel_for(cells, mode, [&](std::size_t cell) {
    const std::size_t r = cell / indices.size();
    const std::size_t c = cell % indices.size();
    table.rows[r].values[c] = rows[r].second(sequence(indices[c]));
  });
  for (auto& row : table.rows) {
    row.verdict = verdict_for(row.values, indices);
  }
  return table;
}

}  // namespace powser
