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

#include "meshfield/spectral/laplacian.hpp"

#include "meshfield/errors.hpp"

#include <Eigen/Geometry>
#include <vector>

namespace meshfield {

LaplacianPair assemble_laplacian(const TriangleMesh& mesh) {
  mesh.validate();
  const Eigen::Index n = mesh.vertex_count();
  constexpr double kCotClamp = 1e6;

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(mesh.face_count()) * 12);
  VecX mass = VecX::Zero(n);
  long clamped = 0;

  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    const int i[3] = {mesh.faces(f, 0), mesh.faces(f, 1), mesh.faces(f, 2)};
    const Eigen::Vector3d p[3] = {mesh.vertices.row(i[0]), mesh.vertices.row(i[1]),
                                  mesh.vertices.row(i[2])};
    const double area2 = ((p[1] - p[0]).cross(p[2] - p[0])).norm();  // 2 * area
    if (!(area2 > 0))
      throw DegenerateFace("face " + std::to_string(f) + " has zero area",
                           static_cast<long>(f));
    const double area = 0.5 * area2;
    for (int k = 0; k < 3; ++k) mass(i[k]) += area / 3.0;

    // Corner k faces the edge (k+1, k+2); cot(angle at k) = dot / (2*area).
    for (int k = 0; k < 3; ++k) {
      const int a = i[(k + 1) % 3], b = i[(k + 2) % 3];
      const Eigen::Vector3d u = p[(k + 1) % 3] - p[k];
      const Eigen::Vector3d v = p[(k + 2) % 3] - p[k];
      double cot = u.dot(v) / area2;
      if (std::abs(cot) > kCotClamp) {
        cot = cot > 0 ? kCotClamp : -kCotClamp;
        ++clamped;
      }
      const double w = 0.5 * cot;
      triplets.emplace_back(a, b, -w);
      triplets.emplace_back(b, a, -w);
      triplets.emplace_back(a, a, w);
      triplets.emplace_back(b, b, w);
    }
  }

  for (Eigen::Index v = 0; v < n; ++v)
    if (!(mass(v) > 0))
      throw IsolatedVertex("vertex " + std::to_string(v) +
                               " has no incident face; mass matrix not positive",
                           static_cast<long>(v));

  LaplacianPair pair;
  pair.L.resize(n, n);
  pair.L.setFromTriplets(triplets.begin(), triplets.end());
  pair.L.makeCompressed();
  pair.mass = std::move(mass);
  pair.clamped_cots = clamped;
  return pair;
}

} // namespace meshfield
