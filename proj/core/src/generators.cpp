#include "nsky/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "nsky/rng.hpp"

namespace nsky {

namespace {

std::vector<std::uint32_t> random_permutation(std::uint32_t n, Rng& rng) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  rng.shuffle(perm);
  return perm;
}

}  // namespace

Instance gen_uniform(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("gen_uniform: n, d must be >= 1");
  Rng rng(seed);
  std::vector<Point> points(n);
  for (std::uint32_t p = 0; p < n; ++p) {
    points[p].id = p;
    points[p].coords.resize(d);
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    const auto perm = random_permutation(n, rng);
    for (std::uint32_t p = 0; p < n; ++p) points[p].coords[i] = perm[p];
  }
  InstanceMeta meta;
  meta.family = "uniform";
  meta.seed = seed;
  meta.general_position = true;
  const Instance probe(d, points);
  meta.skyline = skyline_exact(probe);
  return Instance(d, std::move(points), std::move(meta));
}

Instance gen_fixed_skyline(std::uint32_t n, std::uint32_t d, std::uint32_t k,
                           std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("gen_fixed_skyline: n, d must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("gen_fixed_skyline: need 1 <= k <= n");
  if (k > 1 && d < 2) {
    throw std::invalid_argument("gen_fixed_skyline: an antichain of size > 1 needs d >= 2");
  }

  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, attempt));

    // Raw real-valued construction; ranks flatten it to integers below.
    // Maxima live in a high band and form a staircase in dims 0/1; the
    // remaining dims permute freely without creating comparabilities.
    std::vector<std::vector<double>> raw(n, std::vector<double>(d));
    std::vector<std::uint32_t> role(n);  // role r -> point id
    std::iota(role.begin(), role.end(), 0u);
    rng.shuffle(role);

    std::vector<PointId> maxima(k);
    for (std::uint32_t r = 0; r < k; ++r) maxima[r] = role[r];
    std::vector<std::vector<std::uint32_t>> high_perm(d);
    for (std::uint32_t i = 2; i < d; ++i) high_perm[i] = random_permutation(k, rng);
    const double band = static_cast<double>(n);
    for (std::uint32_t r = 0; r < k; ++r) {
      for (std::uint32_t i = 0; i < d; ++i) {
        double v;
        if (i == 0) v = r;
        else if (i == 1) v = k - 1 - r;
        else v = high_perm[i][r];
        raw[maxima[r]][i] = band + v;
      }
    }
    for (std::uint32_t r = k; r < n; ++r) {
      const PointId owner = maxima[rng.next_below(k)];
      for (std::uint32_t i = 0; i < d; ++i) {
        raw[role[r]][i] = raw[owner][i] - 1.0 - rng.next_unit() * band;
      }
    }

    // Per-dimension tie check; full-precision draws make ties vanishingly
    // rare, and a fresh derived seed retries the construction if one shows.
    bool tied = false;
    for (std::uint32_t i = 0; i < d && !tied; ++i) {
      std::unordered_set<double> seen;
      for (std::uint32_t p = 0; p < n; ++p) {
        if (!seen.insert(raw[p][i]).second) { tied = true; break; }
      }
    }
    if (tied) continue;

    // Rank-flatten: strictly monotone per dimension, so dominance and the
    // skyline are untouched while coordinates become distinct integers.
    std::vector<Point> points(n);
    for (std::uint32_t p = 0; p < n; ++p) {
      points[p].id = p;
      points[p].coords.resize(d);
    }
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < d; ++i) {
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return raw[a][i] < raw[b][i];
      });
      for (std::uint32_t pos = 0; pos < n; ++pos) points[order[pos]].coords[i] = pos;
    }

    std::sort(maxima.begin(), maxima.end());
    InstanceMeta meta;
    meta.family = "fixed";
    meta.seed = seed;
    meta.general_position = true;
    meta.skyline = maxima;
    Instance x(d, std::move(points), std::move(meta));
    if (skyline_exact(x) != maxima) {
      throw std::logic_error("gen_fixed_skyline: self-check failed");
    }
    return x;
  }
}

std::vector<int> NullVectorsInput::answer() const {
  std::vector<int> w(k);
  for (std::uint32_t i = 0; i < k; ++i) w[i] = nonzero_pos[i] < 0 ? 0 : 2;
  return w;
}

NullVectorsInput gen_null_vectors(std::uint32_t k, std::uint32_t l, std::uint64_t seed) {
  if (k < 1 || l < 1) throw std::invalid_argument("gen_null_vectors: k, l must be >= 1");
  Rng rng(seed);
  NullVectorsInput s{k, l, {}};
  s.nonzero_pos.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (rng.next_unit() < 0.5) {
      s.nonzero_pos[i] = -1;
    } else {
      s.nonzero_pos[i] = static_cast<std::int32_t>(rng.next_below(l));
    }
  }
  return s;
}

Instance reduce_to_skyline(const NullVectorsInput& s, std::uint32_t d,
                           std::uint64_t seed) {
  if (d < 3) throw std::invalid_argument("reduce_to_skyline: d must be >= 3");
  const std::uint32_t cols = d - 2;
  if (s.k % cols != 0) {
    throw std::invalid_argument("reduce_to_skyline: (d-2) must divide k");
  }
  const std::uint32_t blocks = s.k / cols;
  const std::uint32_t rows = s.l + cols;
  const std::uint32_t n = blocks * rows;

  Rng rng(seed);
  // Permuting the entries of a vector with at most one nonzero only moves
  // that nonzero to a uniform position.
  std::vector<std::int32_t> ppos(s.k, -1);
  ReductionMeta rmeta;
  rmeta.k = s.k;
  rmeta.l = s.l;
  rmeta.marker_ids.resize(s.k);
  rmeta.truth.resize(s.k);
  for (std::uint32_t v = 0; v < s.k; ++v) {
    if (s.nonzero_pos[v] >= 0) ppos[v] = static_cast<std::int32_t>(rng.next_below(s.l));
    rmeta.truth[v] = s.nonzero_pos[v] < 0 ? 0 : 2;
  }
  for (std::uint32_t j = 0; j < blocks; ++j) {
    std::unordered_set<std::int32_t> taken;
    for (std::uint32_t c = 0; c < cols; ++c) {
      const std::uint32_t v = j * cols + c;
      rmeta.marker_ids[v] = static_cast<PointId>(j * rows + s.l + c);
      if (ppos[v] >= 0 && !taken.insert(ppos[v]).second) rmeta.collision_free = false;
    }
  }

  std::vector<Point> points(n);
  for (std::uint32_t j = 0; j < blocks; ++j) {
    for (std::uint32_t r = 0; r < rows; ++r) {
      Point& p = points[j * rows + r];
      p.id = j * rows + r;
      p.coords.assign(d, 0.0);
      if (r < s.l) {
        for (std::uint32_t c = 0; c < cols; ++c) {
          const std::uint32_t v = j * cols + c;
          if (ppos[v] == static_cast<std::int32_t>(r)) p.coords[c] = 2.0;
        }
      } else {
        p.coords[r - s.l] = 1.0;  // marker row of column r - l
      }
      p.coords[d - 2] = j;
      p.coords[d - 1] = static_cast<double>(n) - j;
    }
  }

  InstanceMeta meta;
  meta.family = "nullvec_reduce";
  meta.seed = seed;
  meta.general_position = false;
  meta.reduction = std::move(rmeta);
  return Instance(d, std::move(points), std::move(meta));
}

std::vector<int> decode_skyline_to_answer(std::span<const PointId> sky,
                                          const ReductionMeta& meta) {
  std::vector<int> w(meta.k);
  for (std::uint32_t v = 0; v < meta.k; ++v) {
    const bool marker_on_skyline =
        std::binary_search(sky.begin(), sky.end(), meta.marker_ids[v]);
    w[v] = marker_on_skyline ? 0 : 2;
  }
  return w;
}

}  // namespace nsky
