#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "eedag/dataset.hpp"
#include "eedag/persistence.hpp"

namespace eedag {

/// Discrete epsilon-extremal interval: endpoints lie on the owning series'
/// grid. The interval is open at an endpoint unless that endpoint is the
/// domain boundary and the underlying component reaches it, in which case it
/// is relatively open (closed there).
struct DiscreteInterval {
  double left;
  double right;
  bool closed_left;
  bool closed_right;

  bool contains(double z) const {
    return (z > left || (closed_left && z == left)) &&
           (z < right || (closed_right && z == right));
  }

  double length() const { return right - left; }
};

/// Nonempty intersection test on open endpoints: max of lefts strictly below
/// min of rights. Relative openness at domain boundaries never changes the
/// outcome because no interval can end at another domain's left boundary.
inline bool strictly_overlaps(const DiscreteInterval& a, const DiscreteInterval& b) {
  return std::max(a.left, b.left) < std::min(a.right, b.right);
}

/// Direct construction: the continuous interval of the linear interpolation,
/// widened outward to grid endpoints. Evaluated at exactly `eps`, a grid point
/// whose height sits exactly on the shifted level is not yet included.
DiscreteInterval extremal_interval(const TimeSeries& ts, std::size_t extremum_index, double eps);

/// Epsilon values at which the right endpoint of the interval jumps outward;
/// empty for the last grid point. Sorted ascending, strictly positive.
std::vector<double> eps_jumps_right(const TimeSeries& ts, std::size_t extremum_index);
std::vector<double> eps_jumps_left(const TimeSeries& ts, std::size_t extremum_index);

/// Left and right jump lists concatenated, then sorted (duplicates kept).
std::vector<double> eps_jumps(const TimeSeries& ts, std::size_t extremum_index);

/// Precomputed growth of one extremum's interval as a step function of eps.
/// Lookups cost O(log jumps); results agree exactly with extremal_interval.
class IntervalGrowth {
 public:
  IntervalGrowth(const TimeSeries& ts, std::size_t extremum_index);

  DiscreteInterval at(double eps) const;
  DiscreteInterval just_past(double eps) const;

  const std::vector<double>& jumps_left() const { return jumps_left_; }
  const std::vector<double>& jumps_right() const { return jumps_right_; }
  /// Sorted union of both jump lists (duplicates kept).
  const std::vector<double>& jumps() const { return jumps_all_; }

  double domain_left() const { return left_steps_.back(); }
  double domain_right() const { return right_steps_.back(); }

 private:
  std::vector<double> jumps_left_;
  std::vector<double> jumps_right_;
  std::vector<double> jumps_all_;
  std::vector<double> left_steps_;   // jumps_left_.size() + 1 entries
  std::vector<double> right_steps_;  // jumps_right_.size() + 1 entries
};

/// Infimum eps at which the two intervals intersect: 0 when the limit
/// intervals already overlap, otherwise the smallest merged jump value J such
/// that the intervals just past J intersect. nullopt when the intervals can
/// never intersect (possible only for disjoint domains).
std::optional<double> eps_intersection(const IntervalGrowth& a, const IntervalGrowth& b);
std::optional<double> eps_intersection(const TimeSeries& a, std::size_t extremum_a,
                                       const TimeSeries& b, std::size_t extremum_b);

}  // namespace eedag
