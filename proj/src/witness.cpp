#include "powser/witness.hpp"

#include <algorithm>
#include <sstream>

namespace powser {

std::string verdict_for(const std::vector<Rational>& values,
                        const std::vector<std::uint32_t>& indices) {
  if (values.empty()) {
    return "empty range";
  }
  const bool all_zero =
      std::all_of(values.begin(), values.end(),
                  [](const Rational& v) { return v == 0; });
  if (all_zero) {
    return "identically 0 within range";
  }
  // A nonzero prefix followed by a zero tail.
  std::size_t first_of_zero_tail = values.size();
  while (first_of_zero_tail > 0 && values[first_of_zero_tail - 1] == 0) {
    --first_of_zero_tail;
  }
  if (first_of_zero_tail < values.size()) {
    bool clean_tail = true;
    for (std::size_t c = 0; c < first_of_zero_tail; ++c) {
      if (values[c] == 0) {
        clean_tail = false;
        break;
      }
    }
    if (clean_tail) {
      return "eventually 0 within range (N >= " +
             std::to_string(indices[first_of_zero_tail]) + ")";
    }
  }
  const bool constant =
      std::all_of(values.begin(), values.end(),
                  [&](const Rational& v) { return v == values.front(); });
  if (constant) {
    return "constant " + to_string(values.front()) + " within range";
  }
  bool strictly_increasing = true;
  for (std::size_t c = 1; c < values.size(); ++c) {
    if (!(values[c] > values[c - 1])) {
      strictly_increasing = false;
      break;
    }
  }
  if (strictly_increasing) {
    return "growing within range";
  }
  const Rational maxv = *std::max_element(values.begin(), values.end());
  return "bounded within range (max = " + to_string(maxv) + ")";
}

std::string render_text(const WitnessTable& table) {
  std::ostringstream out;
  out << table.title << "\n";
  out << "sequence: " << table.sequence_label << "\n";
  std::size_t label_width = 8;
  for (const auto& row : table.rows) {
    label_width = std::max(label_width, row.label.size());
  }
  std::vector<std::size_t> col_width(table.indices.size(), 0);
  std::vector<std::vector<std::string>> cells(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    cells[r].resize(table.indices.size());
    for (std::size_t c = 0; c < table.indices.size(); ++c) {
      cells[r][c] = to_string(table.rows[r].values[c]);
      col_width[c] = std::max(col_width[c], cells[r][c].size());
    }
  }
  for (std::size_t c = 0; c < table.indices.size(); ++c) {
    col_width[c] = std::max(col_width[c], ("N=" + std::to_string(table.indices[c])).size());
  }
  out << std::string(label_width, ' ');
  for (std::size_t c = 0; c < table.indices.size(); ++c) {
    const std::string head = "N=" + std::to_string(table.indices[c]);
    out << "  " << std::string(col_width[c] - head.size(), ' ') << head;
  }
  out << "  verdict\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    out << row.label << std::string(label_width - row.label.size(), ' ');
    for (std::size_t c = 0; c < table.indices.size(); ++c) {
      out << "  " << std::string(col_width[c] - cells[r][c].size(), ' ')
          << cells[r][c];
    }
    out << "  " << row.verdict << "\n";
  }
  return out.str();
}

nlohmann::ordered_json witness_to_json(const WitnessTable& table) {
  nlohmann::ordered_json j;
  j["title"] = table.title;
  j["sequence"] = table.sequence_label;
  j["indices"] = table.indices;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jr;
    jr["label"] = row.label;
    auto vals = nlohmann::ordered_json::array();
    for (const auto& v : row.values) {
      vals.push_back(to_string(v));
    }
    jr["values"] = std::move(vals);
    jr["verdict"] = row.verdict;
    j["rows"].push_back(std::move(jr));
  }
  return j;
}

}  // namespace powser
