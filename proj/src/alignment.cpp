#include "eedag/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eedag {

Backbone extract_backbone(const ExtremalEventDAG& dag, std::string_view series) {
  auto it = std::find(dag.series_names.begin(), dag.series_names.end(), series);
  if (it == dag.series_names.end()) {
    throw InputError("unknown series '" + std::string(series) + "'");
  }
  const std::size_t idx = static_cast<std::size_t>(it - dag.series_names.begin());
  Backbone bb;
  bb.provenance = std::string(series);
  for (const auto& v : dag.vertices) {
    if (v.series == idx) bb.nodes.push_back({v.label, v.weight});
  }
  return bb;
}

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

std::vector<AlignmentViolation> validate_alignment(const Alignment& alignment, const Backbone& x,
                                                   const Backbone& y) {
  std::vector<AlignmentViolation> out;
  auto flag = [&](const char* property, std::string detail) {
    out.push_back({property, std::move(detail)});
  };

  std::vector<std::size_t> x_seen(x.size(), 0), y_seen(y.size(), 0);
  std::optional<std::size_t> last_x, last_y;
  for (std::size_t k = 0; k < alignment.size(); ++k) {
    const auto& p = alignment[k];
    if (!p.x && !p.y) {
      flag("no-null-alignments", "pair " + std::to_string(k) + " aligns the empty node with itself");
      continue;
    }
    if (p.x) {
      if (*p.x >= x.size()) {
        flag("valid-index", "pair " + std::to_string(k) + " references x node out of range");
        continue;
      }
      ++x_seen[*p.x];
      if (last_x && !(*last_x < *p.x)) {
        flag("preserves-order", "x indices not increasing at pair " + std::to_string(k));
      }
      last_x = *p.x;
    }
    if (p.y) {
      if (*p.y >= y.size()) {
        flag("valid-index", "pair " + std::to_string(k) + " references y node out of range");
        continue;
      }
      ++y_seen[*p.y];
      if (last_y && !(*last_y < *p.y)) {
        flag("preserves-order", "y indices not increasing at pair " + std::to_string(k));
      }
      last_y = *p.y;
    }
    if (p.x && p.y && x.nodes[*p.x].label != y.nodes[*p.y].label) {
      std::ostringstream msg;
      msg << "pair " << k << " aligns " << label_name(x.nodes[*p.x].label) << " with "
          << label_name(y.nodes[*p.y].label);
      flag("no-misalignments", msg.str());
    }
  }
  for (std::size_t i = 0; i < x_seen.size(); ++i) {
    if (x_seen[i] != 1) {
      flag("restriction-to-matching",
           "x node " + std::to_string(i) + " appears " + std::to_string(x_seen[i]) + " times");
    }
  }
  for (std::size_t j = 0; j < y_seen.size(); ++j) {
    if (y_seen[j] != 1) {
      flag("restriction-to-matching",
           "y node " + std::to_string(j) + " appears " + std::to_string(y_seen[j]) + " times");
    }
  }
  return out;
}

double alignment_cost(const Alignment& alignment, const Backbone& x, const Backbone& y) {
  double cost = 0.0;
  for (const auto& p : alignment) {
    const double wx = p.x ? x.nodes.at(*p.x).weight : 0.0;
    const double wy = p.y ? y.nodes.at(*p.y).weight : 0.0;
    cost += std::abs(wx - wy);
  }
  return cost;
}

AlignmentMatrix::AlignmentMatrix(const Backbone& x, const Backbone& y)
    : rows_(x.size() + 1), cols_(y.size() + 1), cells_(rows_ * cols_) {
  auto cell = [&](std::size_t i, std::size_t j) -> double& { return cells_[i * cols_ + j]; };
  cell(0, 0) = 0.0;
  for (std::size_t i = 1; i < rows_; ++i) cell(i, 0) = cell(i - 1, 0) + x.nodes[i - 1].weight;
  for (std::size_t j = 1; j < cols_; ++j) cell(0, j) = cell(0, j - 1) + y.nodes[j - 1].weight;
  for (std::size_t i = 1; i < rows_; ++i) {
    for (std::size_t j = 1; j < cols_; ++j) {
      double best = std::min(cell(i - 1, j) + x.nodes[i - 1].weight,
                             cell(i, j - 1) + y.nodes[j - 1].weight);
      if (x.nodes[i - 1].label == y.nodes[j - 1].label) {
        best = std::min(best,
                        cell(i - 1, j - 1) + std::abs(x.nodes[i - 1].weight - y.nodes[j - 1].weight));
      }
      cell(i, j) = best;
    }
  }
}

namespace {

enum class Move { diagonal, vertical, horizontal };

/// Moves out of cell (i, j) that reproduce its value, in canonical preference
/// order: diagonal (match) > vertical (x insertion) > horizontal (y insertion).
void tied_moves(const AlignmentMatrix& m, const Backbone& x, const Backbone& y, std::size_t i,
                std::size_t j, std::vector<Move>& out) {
  out.clear();
  const double v = m.at(i, j);
  if (i > 0 && j > 0 && x.nodes[i - 1].label == y.nodes[j - 1].label &&
      nearly_equal(v, m.at(i - 1, j - 1) + std::abs(x.nodes[i - 1].weight - y.nodes[j - 1].weight))) {
    out.push_back(Move::diagonal);
  }
  if (i > 0 && nearly_equal(v, m.at(i - 1, j) + x.nodes[i - 1].weight)) {
    out.push_back(Move::vertical);
  }
  if (j > 0 && nearly_equal(v, m.at(i, j - 1) + y.nodes[j - 1].weight)) {
    out.push_back(Move::horizontal);
  }
  if (out.empty() && (i > 0 || j > 0)) {
    throw InternalError("alignment matrix admits no backtracking move");
  }
}

AlignmentPair pair_for(Move mv, std::size_t i, std::size_t j) {
  switch (mv) {
    case Move::diagonal:
      return {i - 1, j - 1};
    case Move::vertical:
      return {i - 1, std::nullopt};
    default:
      return {std::nullopt, j - 1};
  }
}

void step_back(Move mv, std::size_t& i, std::size_t& j) {
  if (mv != Move::horizontal) --i;
  if (mv != Move::vertical) --j;
}

}  // namespace

Alignment backtrack(const AlignmentMatrix& m, const Backbone& x, const Backbone& y) {
  Alignment rev;
  std::size_t i = x.size();
  std::size_t j = y.size();
  std::vector<Move> moves;
  while (i > 0 || j > 0) {
    tied_moves(m, x, y, i, j, moves);
    const Move mv = moves.front();
    rev.push_back(pair_for(mv, i, j));
    step_back(mv, i, j);
  }
  return {rev.rbegin(), rev.rend()};
}

EnumerationResult enumerate_optimal(const AlignmentMatrix& m, const Backbone& x, const Backbone& y,
                                    std::size_t cap) {
  if (cap < 1) throw InputError("enumeration cap must be >= 1");
  EnumerationResult result{{}, false};
  Alignment rev;

  // Depth-first over tied moves; the truncation flag is raised only when the
  // cap actually cuts off remaining work.
  auto dfs = [&](auto&& self, std::size_t i, std::size_t j) -> bool {
    if (result.alignments.size() >= cap) {
      result.truncated = true;
      return false;
    }
    if (i == 0 && j == 0) {
      result.alignments.emplace_back(rev.rbegin(), rev.rend());
      return true;
    }
    std::vector<Move> moves;
    tied_moves(m, x, y, i, j, moves);
    for (Move mv : moves) {
      std::size_t ni = i, nj = j;
      step_back(mv, ni, nj);
      rev.push_back(pair_for(mv, i, j));
      const bool keep_going = self(self, ni, nj);
      rev.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  dfs(dfs, x.size(), y.size());
  return result;
}

double backbone_distance(const Backbone& x, const Backbone& y) {
  return AlignmentMatrix(x, y).corner();
}

double backbone_infinity_distance(const Backbone& x, const Backbone& y) {
  const std::size_t rows = x.size() + 1;
  const std::size_t cols = y.size() + 1;
  std::vector<double> cells(rows * cols);
  auto cell = [&](std::size_t i, std::size_t j) -> double& { return cells[i * cols + j]; };
  cell(0, 0) = 0.0;
  for (std::size_t i = 1; i < rows; ++i) {
    cell(i, 0) = std::max(cell(i - 1, 0), x.nodes[i - 1].weight);
  }
  for (std::size_t j = 1; j < cols; ++j) {
    cell(0, j) = std::max(cell(0, j - 1), y.nodes[j - 1].weight);
  }
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      double best = std::min(std::max(cell(i - 1, j), x.nodes[i - 1].weight),
                             std::max(cell(i, j - 1), y.nodes[j - 1].weight));
      if (x.nodes[i - 1].label == y.nodes[j - 1].label) {
        best = std::min(best, std::max(cell(i - 1, j - 1),
                                       std::abs(x.nodes[i - 1].weight - y.nodes[j - 1].weight)));
      }
      cell(i, j) = best;
    }
  }
  return cells.back();
}

}  // namespace eedag
