/*
 * Copyright 2026 The meshfield authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "meshfield/mesh/synthesis.hpp"

#include "meshfield/errors.hpp"
#include "meshfield/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace meshfield {

VertexPartition partition_by_x(const TriangleMesh& mesh,
                               const std::vector<double>& thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (!(thresholds[i - 1] < thresholds[i]))
      throw ConfigError("partition thresholds must be strictly increasing");
  VertexPartition part;
  part.group_count = static_cast<int>(thresholds.size()) + 1;
  part.labels.resize(static_cast<std::size_t>(mesh.vertex_count()));
  for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
    const double x = mesh.vertices(v, 0);
    // Ties go to the higher group: count thresholds <= x.
    int label = 0;
    for (const double t : thresholds)
      if (t <= x) ++label;
    part.labels[static_cast<std::size_t>(v)] = label;
  }
  return part;
}

namespace {

// Gradient lattice noise after the classic reference implementation:
// seeded permutation table, corner gradients from the 12 cube-edge
// directions, quintic fade.
struct PerlinTable {
  std::array<int, 512> perm;

  explicit PerlinTable(std::uint64_t seed) {
    std::array<int, 256> p;
    std::iota(p.begin(), p.end(), 0);
    Rng rng(seed);
    for (int i = 255; i > 0; --i)
      std::swap(p[static_cast<std::size_t>(i)],
                p[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
    for (int i = 0; i < 512; ++i) perm[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i & 255)];
  }

  static double fade(double t) { return t * t * t * (t * (t * 6 - 15) + 10); }
  static double lerp(double t, double a, double b) { return a + t * (b - a); }

  static double grad(int hash, double x, double y, double z) {
    const int h = hash & 15;
    const double u = h < 8 ? x : y;
    const double v = h < 4 ? y : (h == 12 || h == 14 ? x : z);
    return ((h & 1) == 0 ? u : -u) + ((h & 2) == 0 ? v : -v);
  }

  double noise(double x, double y, double z) const {
    const int xi = static_cast<int>(std::floor(x)) & 255;
    const int yi = static_cast<int>(std::floor(y)) & 255;
    const int zi = static_cast<int>(std::floor(z)) & 255;
    x -= std::floor(x);
    y -= std::floor(y);
    z -= std::floor(z);
    const double u = fade(x), v = fade(y), w = fade(z);
    const auto& p = perm;
    const int a = p[xi] + yi, aa = p[a] + zi, ab = p[a + 1] + zi;
    const int b = p[xi + 1] + yi, ba = p[b] + zi, bb = p[b + 1] + zi;
    return lerp(w,
                lerp(v, lerp(u, grad(p[aa], x, y, z), grad(p[ba], x - 1, y, z)),
                     lerp(u, grad(p[ab], x, y - 1, z), grad(p[bb], x - 1, y - 1, z))),
                lerp(v, lerp(u, grad(p[aa + 1], x, y, z - 1), grad(p[ba + 1], x - 1, y, z - 1)),
                     lerp(u, grad(p[ab + 1], x, y - 1, z - 1),
                          grad(p[bb + 1], x - 1, y - 1, z - 1))));
  }
};

} // namespace

double perlin_noise3(const Eigen::Vector3d& p, std::uint64_t seed) {
  static thread_local std::uint64_t cached_seed = ~0ull;
  static thread_local std::unique_ptr<PerlinTable> table;
  if (!table || cached_seed != seed) {
    table = std::make_unique<PerlinTable>(seed);
    cached_seed = seed;
  }
  return table->noise(p.x(), p.y(), p.z());
}

VertexField perlin_scalar(const TriangleMesh& mesh, double frequency, std::uint64_t seed) {
  if (!(frequency > 0)) throw ConfigError("perlin frequency must be positive");
  const PerlinTable table(seed);
  MatX values(mesh.vertex_count(), 1);
  for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
    values(v, 0) = table.noise(frequency * mesh.vertices(v, 0),
                               frequency * mesh.vertices(v, 1),
                               frequency * mesh.vertices(v, 2));
  return VertexField(std::move(values), FieldSemantics::scalar);
}

Eigen::Vector3d hsv_hue_to_rgb(double hue) {
  // S = V = 1; standard hue wheel with h in [0, 1].
  const double h6 = std::clamp(hue, 0.0, 1.0) * 6.0;
  const int sector = std::min(5, static_cast<int>(std::floor(h6)));
  const double f = h6 - sector;
  switch (sector) {
    case 0: return {1.0, f, 0.0};
    case 1: return {1.0 - f, 1.0, 0.0};
    case 2: return {0.0, 1.0, f};
    case 3: return {0.0, 1.0 - f, 1.0};
    case 4: return {f, 0.0, 1.0};
    default: return {1.0, 0.0, 1.0 - f};
  }
}

VertexField synth_patchwork_rgb(const TriangleMesh& mesh,
                                const VertexPartition& partition,
                                const std::vector<VertexField>& group_fields) {
  const Eigen::Index n = mesh.vertex_count();
  if (static_cast<int>(group_fields.size()) != partition.group_count)
    throw ConfigError("need exactly one scalar field per group");
  for (const auto& g : group_fields) {
    if (g.semantics != FieldSemantics::scalar)
      throw ConfigError("group fields must be scalar");
    if (g.vertex_count() != n) throw ShapeMismatch("group field has wrong vertex count");
  }
  if (partition.labels.size() != static_cast<std::size_t>(n))
    throw ShapeMismatch("partition has wrong vertex count");

  VecX q(n);
  for (Eigen::Index v = 0; v < n; ++v)
    q(v) = group_fields[static_cast<std::size_t>(partition.labels[static_cast<std::size_t>(v)])].values(v, 0);

  const double lo = q.minCoeff(), hi = q.maxCoeff();
  if (!(hi > lo))
    throw ConstantField("patchwork field is constant; hue normalization undefined");
  MatX rgb(n, 3);
  for (Eigen::Index v = 0; v < n; ++v)
    rgb.row(v) = hsv_hue_to_rgb((q(v) - lo) / (hi - lo)).transpose();
  return VertexField(std::move(rgb), FieldSemantics::rgb);
}

} // namespace meshfield
