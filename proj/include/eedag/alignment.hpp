#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eedag/event_dag.hpp"
#include "eedag/persistence.hpp"

namespace eedag {

struct BackboneNode {
  ExtremumLabel label;
  double weight;

  friend bool operator==(const BackboneNode&, const BackboneNode&) = default;
};

/// Ordered (label, node life) sequence of one series' extrema; labels strictly
/// alternate. The empty node is never stored: insertions are represented in
/// alignments by an absent index.
struct Backbone {
  std::string provenance;
  std::vector<BackboneNode> nodes;

  std::size_t size() const { return nodes.size(); }
};

Backbone extract_backbone(const ExtremalEventDAG& dag, std::string_view series);

/// One alignment pair: positional indices into the two backbones; an absent
/// side marks an insertion. Never both absent.
struct AlignmentPair {
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;

  friend bool operator==(const AlignmentPair&, const AlignmentPair&) = default;
};

using Alignment = std::vector<AlignmentPair>;

struct AlignmentViolation {
  std::string property;
  std::string detail;
};

/// Checks the four alignment properties (no null pairs, order preservation,
/// label agreement, exact coverage of both backbones) plus index validity.
/// Violations are data, not errors.
std::vector<AlignmentViolation> validate_alignment(const Alignment& alignment, const Backbone& x,
                                                   const Backbone& y);

/// Sum of |w_x - w_y| over pairs, with weight 0 on the insertion side.
double alignment_cost(const Alignment& alignment, const Backbone& x, const Backbone& y);

/// Relative tie tolerance for matrix entries (they are sums of input weights,
/// so genuine ties are exact up to a few ulps).
bool nearly_equal(double a, double b);

/// (m+1) x (n+1) dynamic-programming table; the bottom-right entry is the
/// minimum alignment cost. A label mismatch removes the diagonal move from the
/// minimum rather than contributing an infinite addend.
class AlignmentMatrix {
 public:
  AlignmentMatrix(const Backbone& x, const Backbone& y);

  double at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  double corner() const { return cells_.back(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
};

/// Deterministic backtracking with move preference diagonal > x-insertion >
/// y-insertion. The result is a valid alignment whose cost equals the matrix
/// corner.
Alignment backtrack(const AlignmentMatrix& m, const Backbone& x, const Backbone& y);

struct EnumerationResult {
  std::vector<Alignment> alignments;  // first entry is the canonical backtrack
  bool truncated;
};

/// Depth-first enumeration of every tied backtracking path, at most `cap`
/// results.
EnumerationResult enumerate_optimal(const AlignmentMatrix& m, const Backbone& x, const Backbone& y,
                                    std::size_t cap);

/// Minimum alignment cost (the edit-distance analogue); a metric.
double backbone_distance(const Backbone& x, const Backbone& y);

/// Min over alignments of the max aligned weight difference, computed by the
/// min-max analogue of the alignment recurrence.
double backbone_infinity_distance(const Backbone& x, const Backbone& y);

}  // namespace eedag
