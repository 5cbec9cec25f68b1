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

#pragma once

#include "meshfield/mesh/mesh.hpp"

#include <cstdint>

namespace meshfield {

/// Group vertices by x coordinate. `thresholds` must be strictly
/// increasing; label(v) = number of thresholds <= x(v), so a vertex sitting
/// exactly on a threshold goes to the higher group.
VertexPartition partition_by_x(const TriangleMesh& mesh,
                               const std::vector<double>& thresholds);

/// Classic 3D gradient noise sampled at `frequency * vertex position`.
/// Deterministic per seed; values lie in [-1, 1].
VertexField perlin_scalar(const TriangleMesh& mesh, double frequency,
                          std::uint64_t seed);

/// Gradient noise at a single point (exposed for property tests).
double perlin_noise3(const Eigen::Vector3d& p, std::uint64_t seed);

/// hue in [0, 1], full saturation/value -> rgb in [0, 1]^3.
Eigen::Vector3d hsv_hue_to_rgb(double hue);

/// Patchwork field: q(v) = group_fields[label(v)](v), affinely normalized
/// to [0, 1] over all vertices, then mapped to RGB through the hue wheel.
/// Throws ConstantField when max(q) == min(q).
VertexField synth_patchwork_rgb(const TriangleMesh& mesh,
                                const VertexPartition& partition,
                                const std::vector<VertexField>& group_fields);

} // namespace meshfield
