#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nsky {

using PointId = std::uint32_t;

struct Point {
  PointId id = 0;
  std::vector<double> coords;
};

// Decode table for the null-vectors construction (see generators.hpp).
struct ReductionMeta {
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::vector<PointId> marker_ids;  // per vector: id of the row carrying its 1
  std::vector<int> truth;           // per vector: 0 or 2
  bool collision_free = true;
};

struct InstanceMeta {
  std::string family;
  std::uint64_t seed = 0;
  bool general_position = false;
  std::optional<std::vector<PointId>> skyline;  // intended skyline ids, sorted
  std::optional<ReductionMeta> reduction;
};

// Immutable point set. Ids are dense: point with id i sits at index i.
class Instance {
 public:
  Instance(std::uint32_t dim, std::vector<Point> points,
           std::optional<InstanceMeta> meta = std::nullopt);

  std::uint32_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(PointId id) const { return points_.at(id); }
  const std::optional<InstanceMeta>& meta() const { return meta_; }

  double coord(PointId id, std::uint32_t d) const {
    return flat_[static_cast<std::size_t>(id) * dim_ + d];
  }
  bool has_point(PointId id) const { return id < points_.size(); }

  std::vector<PointId> all_ids() const;

  // Throws std::invalid_argument on any violated invariant. Checks the
  // per-dimension distinctness claim when meta marks general position.
  void validate() const;

 private:
  std::uint32_t dim_;
  std::vector<Point> points_;
  std::vector<double> flat_;  // row-major [id * dim + d]
  std::optional<InstanceMeta> meta_;
};

enum class IntervalKind {
  kOpenSpan,       // (lo, hi)
  kSingleton,      // [lo]  (lo == hi)
  kLeftUnbounded,  // (-inf, hi)
  kRightUnbounded, // (lo, +inf)
  kWholeLine,      // (-inf, +inf)
};

// One-dimensional cell of a breakpoint partition.
struct Interval {
  IntervalKind kind = IntervalKind::kWholeLine;
  double lo = 0.0;
  double hi = 0.0;

  static Interval open_span(double lo, double hi);
  static Interval singleton(double x);
  static Interval left_unbounded(double hi);
  static Interval right_unbounded(double lo);
  static Interval whole_line();

  bool contains(double x) const;
  double inf() const;  // -inf when unbounded below
  double sup() const;  // +inf when unbounded above

  bool operator==(const Interval&) const = default;
};

// The 2m+1 disjoint cells (-inf,b1), [b1], (b1,b2), ..., [bm], (bm,+inf)
// induced by strictly increasing breakpoints. m = 0 gives the whole line.
std::vector<Interval> partition_from_breakpoints(std::span<const double> breakpoints);

// Cell `leaf` (0-based, 0..2m) of the partition above, without materializing it.
Interval partition_cell(std::span<const double> breakpoints, std::uint32_t leaf);

enum class Emptiness { kEmpty, kNonEmpty, kUnknown };

struct Bucket {
  std::vector<Interval> cells;      // one per dimension
  std::vector<PointId> assigned;    // the X_B of the bucketing phase
  Emptiness emptiness = Emptiness::kUnknown;
};

// --- exact (noiseless) dominance machinery -------------------------------

// p weakly dominates q: q_i <= p_i in every coordinate.
bool dominates_exact(const Point& p, const Point& q);

// Weak dominance plus p_i > q_i in at least one coordinate.
bool strictly_dominates_exact(const Point& p, const Point& q);

// Ids of points not strictly dominated by any other point. O(n^2 d) scan,
// deterministic, sorted output. The ground-truth oracle for everything else.
std::vector<PointId> skyline_exact(const Instance& x);

// p > q in lexicographic coordinate order; equal coordinates fall through
// to the id tie-break, so this is a strict total order. Requires p.id != q.id.
bool lex_greater_exact(const Point& p, const Point& q);

// Every point of b_prime strictly dominates every point of b: in each
// dimension sup(cell of b) <= inf(cell of b_prime), and the cell sequences
// differ somewhere. Cells must come from the same per-dimension partitions.
bool bucket_dominates(const Bucket& b_prime, const Bucket& b);

}  // namespace nsky
