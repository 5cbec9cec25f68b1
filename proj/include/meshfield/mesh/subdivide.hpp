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

namespace meshfield {

/// Midpoint subdivision that only splits edges longer than `edge_threshold`.
/// Faces are retriangulated by split-edge count (1 -> 2, 2 -> 3, 3 -> 4
/// triangles) with orientation preserved. Vertex attributes (uv) are not
/// carried over; per-vertex targets are regenerated on the output mesh.
TriangleMesh subdivide_threshold(const TriangleMesh& mesh, double edge_threshold);

} // namespace meshfield
