#include <algorithm>
#include <set>

#include "doctest.h"
#include "nsky/geometry.hpp"
#include "nsky/rng.hpp"
#include "test_util.hpp"

using namespace nsky;
using nsky_test::make_instance;

namespace {

Point pt(PointId id, std::vector<double> c) { return Point{id, std::move(c)}; }

}  // namespace

TEST_CASE("weak dominance") {
  CHECK(dominates_exact(pt(0, {3, 3}), pt(1, {1, 2})));
  CHECK_FALSE(dominates_exact(pt(0, {1, 3}), pt(1, {2, 2})));
  CHECK(dominates_exact(pt(0, {2, 2}), pt(1, {2, 2})));
  CHECK_THROWS(dominates_exact(pt(0, {1}), pt(1, {1, 2})));
}

TEST_CASE("strict dominance") {
  CHECK(strictly_dominates_exact(pt(0, {3, 3}), pt(1, {1, 2})));
  CHECK_FALSE(strictly_dominates_exact(pt(0, {2, 2}), pt(1, {2, 2})));
  CHECK_FALSE(strictly_dominates_exact(pt(0, {2, 1}), pt(1, {1, 2})));
}

TEST_CASE("brute-force skyline") {
  const auto x = make_instance({{1, 3}, {2, 2}, {3, 1}, {0, 0}});
  CHECK(skyline_exact(x) == std::vector<PointId>{0, 1, 2});

  const auto single = make_instance({{7, 7, 7}});
  CHECK(skyline_exact(single) == std::vector<PointId>{0});
}

TEST_CASE("staircase with k maxima and everything else below") {
  // k maxima on an antichain staircase, the rest strictly under one of them.
  const std::uint32_t k = 5, n = 40;
  Rng rng(11);
  std::vector<std::vector<double>> rows;
  for (std::uint32_t i = 0; i < k; ++i) {
    rows.push_back({100.0 + i, 100.0 + (k - 1 - i)});
  }
  for (std::uint32_t i = k; i < n; ++i) {
    const auto owner = rows[rng.next_below(k)];
    rows.push_back({owner[0] - 1 - rng.next_unit() * 50, owner[1] - 1 - rng.next_unit() * 50});
  }
  const auto x = make_instance(rows);
  const auto sky = skyline_exact(x);
  CHECK(sky == std::vector<PointId>{0, 1, 2, 3, 4});
}

TEST_CASE("skyline is invariant under point relabeling") {
  Rng rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.next_below(30));
    std::vector<std::vector<double>> rows(n, std::vector<double>(3));
    for (auto& r : rows) {
      for (auto& v : r) v = static_cast<double>(rng.next_below(8));
    }
    const auto x = make_instance(rows);
    auto sky = skyline_exact(x);

    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::vector<std::vector<double>> shuffled(n);
    for (std::uint32_t i = 0; i < n; ++i) shuffled[perm[i]] = rows[i];
    auto sky2 = skyline_exact(make_instance(shuffled));

    std::vector<PointId> mapped;
    for (const auto id : sky) mapped.push_back(perm[id]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == sky2);
  }
}

TEST_CASE("every non-skyline point has a skyline witness dominating it") {
  Rng rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.next_below(63));
    std::vector<std::vector<double>> rows(n, std::vector<double>(2));
    for (auto& r : rows) {
      for (auto& v : r) v = static_cast<double>(rng.next_below(16));
    }
    const auto x = make_instance(rows);
    const auto sky = skyline_exact(x);
    const std::set<PointId> sky_set(sky.begin(), sky.end());
    for (PointId p = 0; p < n; ++p) {
      if (sky_set.count(p)) continue;
      bool witnessed = false;
      for (const auto q : sky) {
        if (strictly_dominates_exact(x.point(q), x.point(p))) { witnessed = true; break; }
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("lexicographic order") {
  CHECK(lex_greater_exact(pt(0, {3, 1}), pt(1, {2, 9})));
  CHECK_FALSE(lex_greater_exact(pt(0, {2, 1}), pt(1, {2, 9})));
  CHECK(lex_greater_exact(pt(7, {2, 2}), pt(3, {2, 2})));  // id tie-break
  CHECK_THROWS(lex_greater_exact(pt(3, {2, 2}), pt(3, {2, 2})));
}

TEST_CASE("lex order is a strict total order") {
  // exhaustive over all coordinate pairs with values in {0,1,2}
  std::vector<Point> pts;
  PointId id = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) pts.push_back(pt(id++, {double(a), double(b)}));
  }
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a.id == b.id) continue;
      CHECK(lex_greater_exact(a, b) != lex_greater_exact(b, a));  // antisymmetric, total
      for (const auto& c : pts) {
        if (c.id == a.id || c.id == b.id) continue;
        if (lex_greater_exact(a, b) && lex_greater_exact(b, c)) {
          CHECK(lex_greater_exact(a, c));
        }
      }
    }
  }
}

TEST_CASE("breakpoint partitions") {
  const std::vector<double> bps = {1.0, 4.0, 9.0};
  const auto cells = partition_from_breakpoints(bps);
  REQUIRE(cells.size() == 7);
  CHECK(cells[0].kind == IntervalKind::kLeftUnbounded);
  CHECK(cells[1] == Interval::singleton(1.0));
  CHECK(cells[2] == Interval::open_span(1.0, 4.0));
  CHECK(cells[6].kind == IntervalKind::kRightUnbounded);

  // disjoint cover: every probe lands in exactly one cell
  for (double probe : {-3.0, 1.0, 2.5, 4.0, 6.0, 9.0, 12.0, 0.999, 1.001}) {
    int hits = 0;
    for (const auto& c : cells) hits += c.contains(probe) ? 1 : 0;
    CHECK(hits == 1);
  }

  CHECK(partition_from_breakpoints(std::vector<double>{}).size() == 1);
  CHECK_THROWS(partition_cell(std::vector<double>{2.0, 2.0}, 1));
}

TEST_CASE("bucket dominance") {
  const Bucket low{{Interval::open_span(2, 4), Interval::open_span(2, 4)}, {}, {}};
  const Bucket high{{Interval::singleton(4), Interval::singleton(4)}, {}, {}};
  CHECK(bucket_dominates(high, low));
  CHECK_FALSE(bucket_dominates(low, low));  // identical cells
  const Bucket a{{Interval::left_unbounded(2), Interval::right_unbounded(4)}, {}, {}};
  const Bucket b{{Interval::right_unbounded(4), Interval::left_unbounded(2)}, {}, {}};
  CHECK_FALSE(bucket_dominates(b, a));
  CHECK_FALSE(bucket_dominates(a, b));
}

TEST_CASE("bucket dominance implies pointwise strict dominance") {
  Rng rng(23);
  const std::vector<double> bps = {2.0, 5.0, 11.0};
  const auto cells = partition_from_breakpoints(bps);
  auto sample_inside = [&](const Interval& c) {
    switch (c.kind) {
      case IntervalKind::kOpenSpan: return c.lo + (c.hi - c.lo) * (0.25 + rng.next_unit() / 2);
      case IntervalKind::kSingleton: return c.lo;
      case IntervalKind::kLeftUnbounded: return c.hi - 1 - rng.next_unit();
      case IntervalKind::kRightUnbounded: return c.lo + 1 + rng.next_unit();
      case IntervalKind::kWholeLine: return rng.next_unit();
    }
    return 0.0;
  };
  for (int rep = 0; rep < 300; ++rep) {
    Bucket bp{{cells[rng.next_below(7)], cells[rng.next_below(7)]}, {}, {}};
    Bucket bq{{cells[rng.next_below(7)], cells[rng.next_below(7)]}, {}, {}};
    if (!bucket_dominates(bp, bq)) continue;
    for (int s = 0; s < 5; ++s) {
      const Point hi = pt(0, {sample_inside(bp.cells[0]), sample_inside(bp.cells[1])});
      const Point lo = pt(1, {sample_inside(bq.cells[0]), sample_inside(bq.cells[1])});
      CHECK(strictly_dominates_exact(hi, lo));
    }
  }
}

TEST_CASE("instance invariants") {
  CHECK_THROWS(make_instance({{1, 2}, {3}}));  // ragged dims
  std::vector<Point> dup{pt(0, {1}), pt(0, {2})};
  CHECK_THROWS(Instance(1, dup));

  InstanceMeta meta{.family = "x", .seed = 0, .general_position = true};
  std::vector<Point> tied{pt(0, {1, 2}), pt(1, {1, 3})};
  Instance bad(2, tied, meta);
  CHECK_THROWS(bad.validate());
}
