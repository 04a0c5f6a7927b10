#include "nsky/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace nsky {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Instance::Instance(std::uint32_t dim, std::vector<Point> points,
                   std::optional<InstanceMeta> meta)
    : dim_(dim), points_(std::move(points)), meta_(std::move(meta)) {
  std::sort(points_.begin(), points_.end(),
            [](const Point& a, const Point& b) { return a.id < b.id; });
  flat_.resize(points_.size() * dim_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id != i) {
      throw std::invalid_argument("instance ids must be dense 0..n-1");
    }
    if (points_[i].coords.size() != dim_) {
      throw std::invalid_argument("point dimension mismatch");
    }
    std::copy(points_[i].coords.begin(), points_[i].coords.end(),
              flat_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
  }
}

std::vector<PointId> Instance::all_ids() const {
  std::vector<PointId> ids(points_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<PointId>(i);
  return ids;
}

void Instance::validate() const {
  if (dim_ < 1) throw std::invalid_argument("dimension must be >= 1");
  if (points_.empty()) throw std::invalid_argument("instance must hold >= 1 point");
  if (meta_ && meta_->general_position) {
    for (std::uint32_t d = 0; d < dim_; ++d) {
      std::unordered_set<double> seen;
      for (const Point& p : points_) {
        if (!seen.insert(p.coords[d]).second) {
          throw std::invalid_argument("general-position instance has duplicate coordinate");
        }
      }
    }
  }
}

Interval Interval::open_span(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("open span requires lo < hi");
  return {IntervalKind::kOpenSpan, lo, hi};
}
Interval Interval::singleton(double x) { return {IntervalKind::kSingleton, x, x}; }
Interval Interval::left_unbounded(double hi) { return {IntervalKind::kLeftUnbounded, 0.0, hi}; }
Interval Interval::right_unbounded(double lo) { return {IntervalKind::kRightUnbounded, lo, 0.0}; }
Interval Interval::whole_line() { return {IntervalKind::kWholeLine, 0.0, 0.0}; }

bool Interval::contains(double x) const {
  switch (kind) {
    case IntervalKind::kOpenSpan: return lo < x && x < hi;
    case IntervalKind::kSingleton: return x == lo;
    case IntervalKind::kLeftUnbounded: return x < hi;
    case IntervalKind::kRightUnbounded: return lo < x;
    case IntervalKind::kWholeLine: return true;
  }
  return false;
}

double Interval::inf() const {
  switch (kind) {
    case IntervalKind::kOpenSpan:
    case IntervalKind::kSingleton:
    case IntervalKind::kRightUnbounded: return lo;
    default: return -kInf;
  }
}

double Interval::sup() const {
  switch (kind) {
    case IntervalKind::kOpenSpan:
    case IntervalKind::kSingleton:
    case IntervalKind::kLeftUnbounded: return hi;
    default: return kInf;
  }
}

std::vector<Interval> partition_from_breakpoints(std::span<const double> breakpoints) {
  const std::size_t m = breakpoints.size();
  std::vector<Interval> cells;
  cells.reserve(2 * m + 1);
  for (std::uint32_t leaf = 0; leaf < 2 * m + 1; ++leaf) {
    cells.push_back(partition_cell(breakpoints, leaf));
  }
  return cells;
}

Interval partition_cell(std::span<const double> breakpoints, std::uint32_t leaf) {
  const std::size_t m = breakpoints.size();
  if (leaf >= 2 * m + 1) throw std::out_of_range("partition cell index");
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  if (m == 0) return Interval::whole_line();
  if (leaf == 0) return Interval::left_unbounded(breakpoints[0]);
  if (leaf == 2 * m) return Interval::right_unbounded(breakpoints[m - 1]);
  if (leaf % 2 == 1) return Interval::singleton(breakpoints[(leaf - 1) / 2]);
  return Interval::open_span(breakpoints[leaf / 2 - 1], breakpoints[leaf / 2]);
}

bool dominates_exact(const Point& p, const Point& q) {
  if (p.coords.size() != q.coords.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i] < q.coords[i]) return false;
  }
  return true;
}

bool strictly_dominates_exact(const Point& p, const Point& q) {
  if (p.coords.size() != q.coords.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  bool strict = false;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i] < q.coords[i]) return false;
    if (p.coords[i] > q.coords[i]) strict = true;
  }
  return strict;
}

std::vector<PointId> skyline_exact(const Instance& x) {
  const std::size_t n = x.size();
  const std::uint32_t d = x.dim();
  std::vector<PointId> out;
  for (std::size_t p = 0; p < n; ++p) {
    bool dominated = false;
    for (std::size_t q = 0; q < n && !dominated; ++q) {
      if (q == p) continue;
      bool strict = false;
      bool geq = true;
      for (std::uint32_t i = 0; i < d; ++i) {
        const double qc = x.coord(static_cast<PointId>(q), i);
        const double pc = x.coord(static_cast<PointId>(p), i);
        if (qc < pc) { geq = false; break; }
        if (qc > pc) strict = true;
      }
      dominated = geq && strict;
    }
    if (!dominated) out.push_back(static_cast<PointId>(p));
  }
  return out;
}

bool lex_greater_exact(const Point& p, const Point& q) {
  if (p.coords.size() != q.coords.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (p.id == q.id) throw std::invalid_argument("lex order requires distinct ids");
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i] > q.coords[i]) return true;
    if (p.coords[i] < q.coords[i]) return false;
  }
  return p.id > q.id;
}

bool bucket_dominates(const Bucket& b_prime, const Bucket& b) {
  if (b_prime.cells.size() != b.cells.size()) {
    throw std::invalid_argument("bucket dimension mismatch");
  }
  bool differs = false;
  for (std::size_t i = 0; i < b.cells.size(); ++i) {
    if (!(b.cells[i].sup() <= b_prime.cells[i].inf())) return false;
    if (!(b.cells[i] == b_prime.cells[i])) differs = true;
  }
  return differs;
}

}  // namespace nsky
