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

/// Center the vertex centroid at the origin and scale so the farthest
/// vertex sits on the unit sphere. Idempotent; invariant to rigid
/// translation and uniform scaling of the input.
TriangleMesh normalize_mesh(const TriangleMesh& mesh);

/// Per-face unnormalized normals (cross products); norm = 2 * face area.
MatX face_normal_vectors(const TriangleMesh& mesh);

/// Per-face areas.
VecX face_areas(const TriangleMesh& mesh);

/// Area-weighted per-vertex unit normals. Throws IsolatedVertex when a
/// vertex has no incident face.
VertexField vertex_normals(const TriangleMesh& mesh);

/// Mean edge length over the undirected edge set.
double mean_edge_length(const TriangleMesh& mesh);

/// Unique undirected edges as (min, max) vertex pairs, sorted.
std::vector<std::pair<int, int>> undirected_edges(const TriangleMesh& mesh);

} // namespace meshfield
