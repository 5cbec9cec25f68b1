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

#include "meshfield/mesh/primitives.hpp"

#include "meshfield/errors.hpp"
#include "meshfield/rng.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace meshfield {

namespace {

TriangleMesh from_lists(const std::vector<Eigen::Vector3d>& vs,
                        const std::vector<std::array<int, 3>>& fs) {
  TriangleMesh m;
  m.vertices.resize(static_cast<Eigen::Index>(vs.size()), 3);
  for (std::size_t i = 0; i < vs.size(); ++i) m.vertices.row(static_cast<Eigen::Index>(i)) = vs[i];
  m.faces.resize(static_cast<Eigen::Index>(fs.size()), 3);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int k = 0; k < 3; ++k) m.faces(static_cast<Eigen::Index>(i), k) = fs[i][static_cast<std::size_t>(k)];
  return m;
}

} // namespace

TriangleMesh make_tetrahedron() {
  return from_lists(
      {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
      {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

TriangleMesh make_icosahedron() {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> vs = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : vs) v.normalize();
  const std::vector<std::array<int, 3>> fs = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  return from_lists(vs, fs);
}

TriangleMesh make_icosphere(int subdivisions) {
  TriangleMesh mesh = make_icosahedron();
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    std::vector<Eigen::Vector3d> vs;
    vs.reserve(static_cast<std::size_t>(mesh.vertex_count()) * 4);
    for (Eigen::Index i = 0; i < mesh.vertex_count(); ++i) vs.push_back(mesh.vertices.row(i));
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto [it, inserted] = midpoint.try_emplace({key.first, key.second}, -1);
      if (inserted) {
        it->second = static_cast<int>(vs.size());
        vs.push_back(((vs[static_cast<std::size_t>(a)] + vs[static_cast<std::size_t>(b)]) / 2.0).normalized());
      }
      return it->second;
    };
    std::vector<std::array<int, 3>> fs;
    fs.reserve(static_cast<std::size_t>(mesh.face_count()) * 4);
    for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
      const int a = mesh.faces(f, 0), b = mesh.faces(f, 1), c = mesh.faces(f, 2);
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      fs.push_back({a, ab, ca});
      fs.push_back({b, bc, ab});
      fs.push_back({c, ca, bc});
      fs.push_back({ab, bc, ca});
    }
    mesh = from_lists(vs, fs);
  }
  return mesh;
}

TriangleMesh make_uv_sphere(int rings, int segments, double radius) {
  if (rings < 2 || segments < 3) throw ConfigError("uv sphere needs rings >= 2, segments >= 3");
  std::vector<Eigen::Vector3d> vs;
  std::vector<std::array<int, 3>> fs;
  vs.emplace_back(0, 0, radius);  // north pole
  for (int r = 1; r < rings; ++r) {
    const double phi = M_PI * r / rings;
    for (int s = 0; s < segments; ++s) {
      const double theta = 2.0 * M_PI * s / segments;
      vs.emplace_back(radius * std::sin(phi) * std::cos(theta),
                      radius * std::sin(phi) * std::sin(theta), radius * std::cos(phi));
    }
  }
  vs.emplace_back(0, 0, -radius);  // south pole
  const int south = static_cast<int>(vs.size()) - 1;
  auto ring_at = [&](int r, int s) { return 1 + (r - 1) * segments + (s % segments); };
  for (int s = 0; s < segments; ++s) fs.push_back({0, ring_at(1, s), ring_at(1, s + 1)});
  for (int r = 1; r + 1 < rings; ++r)
    for (int s = 0; s < segments; ++s) {
      const int a = ring_at(r, s), b = ring_at(r, s + 1);
      const int c = ring_at(r + 1, s), d = ring_at(r + 1, s + 1);
      fs.push_back({a, c, d});
      fs.push_back({a, d, b});
    }
  for (int s = 0; s < segments; ++s)
    fs.push_back({south, ring_at(rings - 1, s + 1), ring_at(rings - 1, s)});
  return from_lists(vs, fs);
}

TriangleMesh make_torus(int major_segments, int minor_segments, double major_radius,
                        double minor_radius) {
  if (major_segments < 3 || minor_segments < 3) throw ConfigError("torus needs >= 3 segments");
  std::vector<Eigen::Vector3d> vs;
  std::vector<std::array<int, 3>> fs;
  for (int i = 0; i < major_segments; ++i) {
    const double u = 2.0 * M_PI * i / major_segments;
    for (int j = 0; j < minor_segments; ++j) {
      const double v = 2.0 * M_PI * j / minor_segments;
      const double r = major_radius + minor_radius * std::cos(v);
      vs.emplace_back(r * std::cos(u), r * std::sin(u), minor_radius * std::sin(v));
    }
  }
  auto at = [&](int i, int j) {
    return (i % major_segments) * minor_segments + (j % minor_segments);
  };
  for (int i = 0; i < major_segments; ++i)
    for (int j = 0; j < minor_segments; ++j) {
      const int a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
      fs.push_back({a, b, c});
      fs.push_back({a, c, d});
    }
  return from_lists(vs, fs);
}

TriangleMesh make_grid(int nx, int ny, double size_x, double size_y) {
  if (nx < 1 || ny < 1) throw ConfigError("grid needs nx, ny >= 1");
  std::vector<Eigen::Vector3d> vs;
  std::vector<std::array<int, 3>> fs;
  MatX uv((nx + 1) * (ny + 1), 2);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const double fu = static_cast<double>(i) / nx, fv = static_cast<double>(j) / ny;
      vs.emplace_back(fu * size_x, fv * size_y, 0.0);
      uv(static_cast<Eigen::Index>(vs.size()) - 1, 0) = fu;
      uv(static_cast<Eigen::Index>(vs.size()) - 1, 1) = fv;
    }
  auto at = [&](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      fs.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      fs.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  TriangleMesh m = from_lists(vs, fs);
  m.uv = std::move(uv);
  return m;
}

TriangleMesh make_box() {
  const std::vector<Eigen::Vector3d> vs = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                           {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  const std::vector<std::array<int, 3>> fs = {
      {0, 2, 1}, {0, 3, 2},  // bottom (z=0, outward -z)
      {4, 5, 6}, {4, 6, 7},  // top
      {0, 1, 5}, {0, 5, 4},  // front
      {1, 2, 6}, {1, 6, 5},  // right
      {2, 3, 7}, {2, 7, 6},  // back
      {3, 0, 4}, {3, 4, 7}}; // left
  return from_lists(vs, fs);
}

TriangleMesh disjoint_union(const TriangleMesh& a, const TriangleMesh& b,
                            const Eigen::Vector3d& offset) {
  TriangleMesh m;
  m.vertices.resize(a.vertex_count() + b.vertex_count(), 3);
  m.vertices.topRows(a.vertex_count()) = a.vertices;
  m.vertices.bottomRows(b.vertex_count()) = b.vertices.rowwise() + offset.transpose();
  m.faces.resize(a.face_count() + b.face_count(), 3);
  m.faces.topRows(a.face_count()) = a.faces;
  m.faces.bottomRows(b.face_count()) = b.faces.array() + static_cast<int>(a.vertex_count());
  return m;
}

TriangleMesh make_bumpy_sphere(int subdivisions, double amplitude, unsigned seed) {
  TriangleMesh mesh = make_icosphere(subdivisions);
  Rng rng(seed);
  for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
    const double r = 1.0 + amplitude * (2.0 * rng.uniform() - 1.0);
    mesh.vertices.row(v) *= r;
  }
  return mesh;
}

} // namespace meshfield
