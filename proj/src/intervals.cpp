#include "eedag/intervals.hpp"

#include <algorithm>
#include <cmath>

namespace eedag {

namespace {

ExtremumLabel label_at(const TimeSeries& ts, std::size_t i) {
  const auto& h = ts.heights;
  const std::size_t n = h.size();
  if (i >= n) throw InputError("extremum index out of range");
  bool is_min, is_max;
  if (i == 0) {
    is_min = h[0] < h[1];
    is_max = h[0] > h[1];
  } else if (i + 1 == n) {
    is_min = h[n - 1] < h[n - 2];
    is_max = h[n - 1] > h[n - 2];
  } else {
    is_min = h[i] < h[i - 1] && h[i] < h[i + 1];
    is_max = h[i] > h[i - 1] && h[i] > h[i + 1];
  }
  if (is_min) return ExtremumLabel::min;
  if (is_max) return ExtremumLabel::max;
  throw InputError("point is not a local extremum of the series");
}

/// For a minimum the component is cut by heights >= h_i + 2 eps; for a maximum
/// by heights <= h_i - 2 eps.
bool blocks(ExtremumLabel label, double h, double level) {
  return label == ExtremumLabel::min ? h >= level : h <= level;
}

double level_for(ExtremumLabel label, double h_i, double eps) {
  return label == ExtremumLabel::min ? h_i + 2.0 * eps : h_i - 2.0 * eps;
}

}  // namespace

DiscreteInterval extremal_interval(const TimeSeries& ts, std::size_t extremum_index, double eps) {
  if (eps < 0.0) throw InputError("eps must be >= 0");
  const auto& h = ts.heights;
  const std::size_t n = h.size();
  const std::size_t i = extremum_index;
  const ExtremumLabel label = label_at(ts, i);
  const double level = level_for(label, h[i], eps);

  DiscreteInterval out{ts.times.front(), ts.times.back(), true, true};
  for (std::size_t j = i + 1; j < n; ++j) {
    if (blocks(label, h[j], level)) {
      out.right = ts.times[j];
      out.closed_right = false;
      break;
    }
  }
  for (std::size_t j = i; j-- > 0;) {
    if (blocks(label, h[j], level)) {
      out.left = ts.times[j];
      out.closed_left = false;
      break;
    }
  }
  return out;
}

IntervalGrowth::IntervalGrowth(const TimeSeries& ts, std::size_t extremum_index) {
  const auto& h = ts.heights;
  const std::size_t n = h.size();
  const std::size_t i = extremum_index;
  const ExtremumLabel label = label_at(ts, i);

  if (i + 1 < n) {
    jumps_right_.push_back(std::abs(h[i + 1] - h[i]) / 2.0);
    right_steps_.push_back(ts.times[i + 1]);
    double barrier = h[i + 1];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (blocks(label, h[j], barrier)) {
        jumps_right_.push_back(std::abs(h[j] - h[i]) / 2.0);
        right_steps_.push_back(ts.times[j]);
        barrier = h[j];
      }
    }
  }
  right_steps_.push_back(ts.times.back());

  if (i > 0) {
    jumps_left_.push_back(std::abs(h[i - 1] - h[i]) / 2.0);
    left_steps_.push_back(ts.times[i - 1]);
    double barrier = h[i - 1];
    for (std::size_t j = i - 1; j-- > 0;) {
      if (blocks(label, h[j], barrier)) {
        jumps_left_.push_back(std::abs(h[j] - h[i]) / 2.0);
        left_steps_.push_back(ts.times[j]);
        barrier = h[j];
      }
    }
  }
  left_steps_.push_back(ts.times.front());

  jumps_all_.resize(jumps_left_.size() + jumps_right_.size());
  std::merge(jumps_left_.begin(), jumps_left_.end(), jumps_right_.begin(), jumps_right_.end(),
             jumps_all_.begin());
}

DiscreteInterval IntervalGrowth::at(double eps) const {
  if (eps < 0.0) throw InputError("eps must be >= 0");
  const std::size_t kl =
      std::lower_bound(jumps_left_.begin(), jumps_left_.end(), eps) - jumps_left_.begin();
  const std::size_t kr =
      std::lower_bound(jumps_right_.begin(), jumps_right_.end(), eps) - jumps_right_.begin();
  return {left_steps_[kl], right_steps_[kr], kl == jumps_left_.size(), kr == jumps_right_.size()};
}

DiscreteInterval IntervalGrowth::just_past(double eps) const {
  if (eps < 0.0) throw InputError("eps must be >= 0");
  const std::size_t kl =
      std::upper_bound(jumps_left_.begin(), jumps_left_.end(), eps) - jumps_left_.begin();
  const std::size_t kr =
      std::upper_bound(jumps_right_.begin(), jumps_right_.end(), eps) - jumps_right_.begin();
  return {left_steps_[kl], right_steps_[kr], kl == jumps_left_.size(), kr == jumps_right_.size()};
}

std::vector<double> eps_jumps_right(const TimeSeries& ts, std::size_t extremum_index) {
  return IntervalGrowth(ts, extremum_index).jumps_right();
}

std::vector<double> eps_jumps_left(const TimeSeries& ts, std::size_t extremum_index) {
  return IntervalGrowth(ts, extremum_index).jumps_left();
}

std::vector<double> eps_jumps(const TimeSeries& ts, std::size_t extremum_index) {
  return IntervalGrowth(ts, extremum_index).jumps();
}

std::optional<double> eps_intersection(const IntervalGrowth& a, const IntervalGrowth& b) {
  if (strictly_overlaps(a.just_past(0.0), b.just_past(0.0))) return 0.0;

  std::vector<double> candidates(a.jumps().size() + b.jumps().size());
  std::merge(a.jumps().begin(), a.jumps().end(), b.jumps().begin(), b.jumps().end(),
             candidates.begin());
  double previous = -1.0;
  for (double J : candidates) {
    if (J == previous) continue;
    previous = J;
    if (strictly_overlaps(a.just_past(J), b.just_past(J))) return J;
  }

  const DiscreteInterval full_a{a.domain_left(), a.domain_right(), true, true};
  const DiscreteInterval full_b{b.domain_left(), b.domain_right(), true, true};
  if (strictly_overlaps(full_a, full_b)) {
    throw InternalError("overlapping domains but no intersection epsilon found");
  }
  return std::nullopt;
}

std::optional<double> eps_intersection(const TimeSeries& a, std::size_t extremum_a,
                                       const TimeSeries& b, std::size_t extremum_b) {
  return eps_intersection(IntervalGrowth(a, extremum_a), IntervalGrowth(b, extremum_b));
}

}  // namespace eedag
