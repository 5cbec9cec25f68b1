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

#include "meshfield/mesh/subdivide.hpp"

#include "meshfield/errors.hpp"

#include <map>
#include <vector>

namespace meshfield {

TriangleMesh subdivide_threshold(const TriangleMesh& mesh, double edge_threshold) {
  if (!(edge_threshold > 0)) throw ConfigError("edge_threshold must be positive");
  mesh.validate();

  std::vector<Eigen::Vector3d> vs;
  vs.reserve(static_cast<std::size_t>(mesh.vertex_count()) * 2);
  for (Eigen::Index i = 0; i < mesh.vertex_count(); ++i) vs.push_back(mesh.vertices.row(i));

  // Midpoints are created once per undirected edge so neighbouring faces
  // stay stitched.
  std::map<std::pair<int, int>, int> midpoint;
  auto split_of = [&](int a, int b) -> int {
    const auto key = std::minmax(a, b);
    const auto it = midpoint.find({key.first, key.second});
    return it == midpoint.end() ? -1 : it->second;
  };
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    for (int k = 0; k < 3; ++k) {
      const int a = mesh.faces(f, k), b = mesh.faces(f, (k + 1) % 3);
      const auto key = std::minmax(a, b);
      if (midpoint.count({key.first, key.second})) continue;
      const double len = (mesh.vertices.row(a) - mesh.vertices.row(b)).norm();
      if (len > edge_threshold) {
        midpoint[{key.first, key.second}] = static_cast<int>(vs.size());
        vs.push_back((mesh.vertices.row(a) + mesh.vertices.row(b)) / 2.0);
      }
    }
  }

  std::vector<std::array<int, 3>> fs;
  fs.reserve(static_cast<std::size_t>(mesh.face_count()) * 4);
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    int v[3] = {mesh.faces(f, 0), mesh.faces(f, 1), mesh.faces(f, 2)};
    int m[3] = {split_of(v[0], v[1]), split_of(v[1], v[2]), split_of(v[2], v[0])};
    int split_count = (m[0] >= 0) + (m[1] >= 0) + (m[2] >= 0);

    if (split_count == 0) {
      fs.push_back({v[0], v[1], v[2]});
      continue;
    }
    if (split_count == 3) {
      fs.push_back({v[0], m[0], m[2]});
      fs.push_back({v[1], m[1], m[0]});
      fs.push_back({v[2], m[2], m[1]});
      fs.push_back({m[0], m[1], m[2]});
      continue;
    }

    // Rotate so edge (v0, v1) is split.
    while (m[0] < 0) {
      const int tv = v[0], tm = m[0];
      v[0] = v[1]; v[1] = v[2]; v[2] = tv;
      m[0] = m[1]; m[1] = m[2]; m[2] = tm;
    }
    if (split_count == 1) {
      fs.push_back({v[0], m[0], v[2]});
      fs.push_back({m[0], v[1], v[2]});
    } else {
      // Rotate once more if the two split edges are (v0,v1) and (v2,v0);
      // afterwards they share v1.
      if (m[1] < 0) {
        const int tv = v[2], tm = m[2];
        v[2] = v[1]; v[1] = v[0]; v[0] = tv;
        m[1] = m[0]; m[0] = tm;  m[2] = -1;
      }
      // Split edges (v0,v1) and (v1,v2); quad (v0, m0, m1, v2) is cut from v0.
      fs.push_back({m[0], v[1], m[1]});
      fs.push_back({v[0], m[0], m[1]});
      fs.push_back({v[0], m[1], v[2]});
    }
  }

  TriangleMesh out;
  out.vertices.resize(static_cast<Eigen::Index>(vs.size()), 3);
  for (std::size_t i = 0; i < vs.size(); ++i) out.vertices.row(static_cast<Eigen::Index>(i)) = vs[i];
  out.faces.resize(static_cast<Eigen::Index>(fs.size()), 3);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int k = 0; k < 3; ++k) out.faces(static_cast<Eigen::Index>(i), k) = fs[i][static_cast<std::size_t>(k)];
  out.source_path = mesh.source_path;
  return out;
}

} // namespace meshfield
