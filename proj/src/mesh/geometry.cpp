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

#include "meshfield/mesh/geometry.hpp"

#include "meshfield/errors.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <set>

namespace meshfield {

TriangleMesh normalize_mesh(const TriangleMesh& mesh) {
  if (mesh.vertex_count() < 3) throw EmptyMesh("normalize_mesh needs at least 3 vertices");
  TriangleMesh out = mesh;
  const Eigen::RowVector3d centroid = out.vertices.colwise().mean();
  out.vertices.rowwise() -= centroid;
  const double radius = out.vertices.rowwise().norm().maxCoeff();
  if (radius <= 0) throw EmptyMesh("all vertices coincide");
  out.vertices /= radius;
  return out;
}

MatX face_normal_vectors(const TriangleMesh& mesh) {
  MatX fn(mesh.face_count(), 3);
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    const Eigen::Vector3d p0 = mesh.vertices.row(mesh.faces(f, 0));
    const Eigen::Vector3d p1 = mesh.vertices.row(mesh.faces(f, 1));
    const Eigen::Vector3d p2 = mesh.vertices.row(mesh.faces(f, 2));
    fn.row(f) = (p1 - p0).cross(p2 - p0);
  }
  return fn;
}

VecX face_areas(const TriangleMesh& mesh) {
  return 0.5 * face_normal_vectors(mesh).rowwise().norm();
}

VertexField vertex_normals(const TriangleMesh& mesh) {
  const Eigen::Index n = mesh.vertex_count();
  const MatX fn = face_normal_vectors(mesh);  // norm = 2 * area, so summing
                                              // these is area weighting
  MatX acc = MatX::Zero(n, 3);
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    for (int k = 0; k < 3; ++k) {
      acc.row(mesh.faces(f, k)) += fn.row(f);
      touched[static_cast<std::size_t>(mesh.faces(f, k))] = 1;
    }
  }
  for (Eigen::Index v = 0; v < n; ++v) {
    if (!touched[static_cast<std::size_t>(v)])
      throw IsolatedVertex("vertex " + std::to_string(v) + " has no incident face",
                           static_cast<long>(v));
    const double norm = acc.row(v).norm();
    if (norm < 1e-14)
      throw DegenerateFace("vertex " + std::to_string(v) +
                               ": incident face normals cancel",
                           static_cast<long>(v));
    acc.row(v) /= norm;
  }
  return VertexField(std::move(acc), FieldSemantics::normal);
}

std::vector<std::pair<int, int>> undirected_edges(const TriangleMesh& mesh) {
  std::set<std::pair<int, int>> edges;
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    for (int k = 0; k < 3; ++k) {
      int a = mesh.faces(f, k), b = mesh.faces(f, (k + 1) % 3);
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return {edges.begin(), edges.end()};
}

double mean_edge_length(const TriangleMesh& mesh) {
  const auto edges = undirected_edges(mesh);
  if (edges.empty()) throw EmptyMesh("mesh has no edges");
  double total = 0;
  for (const auto& [a, b] : edges)
    total += (mesh.vertices.row(a) - mesh.vertices.row(b)).norm();
  return total / static_cast<double>(edges.size());
}

} // namespace meshfield
