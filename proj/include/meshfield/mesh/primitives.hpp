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

/// Parametric generators used by tests, demos and the synthetic experiments.
/// All outputs satisfy TriangleMesh::validate().

TriangleMesh make_tetrahedron();
TriangleMesh make_icosahedron();

/// Icosphere: icosahedron subdivided `subdivisions` times, projected to the
/// unit sphere. Vertex count = 10*4^s + 2.
TriangleMesh make_icosphere(int subdivisions);

/// Latitude/longitude sphere with `rings` >= 2 bands and `segments` >= 3.
TriangleMesh make_uv_sphere(int rings, int segments, double radius = 1.0);

TriangleMesh make_torus(int major_segments, int minor_segments,
                        double major_radius = 1.0, double minor_radius = 0.35);

/// Planar grid in z=0, (nx+1)*(ny+1) vertices, CCW faces facing +z.
/// Comes with planar uv coordinates in [0,1]^2.
TriangleMesh make_grid(int nx, int ny, double size_x = 1.0, double size_y = 1.0);

TriangleMesh make_box();

/// Disjoint union; the second mesh is translated by `offset`.
TriangleMesh disjoint_union(const TriangleMesh& a, const TriangleMesh& b,
                            const Eigen::Vector3d& offset);

/// Sphere with a deterministic radial bump per vertex, useful when a mesh
/// with a simple (non-degenerate) Laplace spectrum is needed.
TriangleMesh make_bumpy_sphere(int subdivisions, double amplitude, unsigned seed);

} // namespace meshfield
