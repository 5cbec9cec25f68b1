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

#include "meshfield/mesh/mesh.hpp"

#include "meshfield/errors.hpp"
#include "meshfield/hashing.hpp"

#include <Eigen/Geometry>

namespace meshfield {

void TriangleMesh::validate() const {
  const Eigen::Index n = vertex_count();
  if (vertices.cols() != 3) throw ParseError("vertices must be n x 3");
  if (!vertices.allFinite()) throw ParseError("non-finite vertex coordinate");

  for (Eigen::Index f = 0; f < faces.rows(); ++f) {
    const int a = faces(f, 0), b = faces(f, 1), c = faces(f, 2);
    if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
      throw ParseError("face " + std::to_string(f) + ": vertex index out of range");
    if (a == b || b == c || a == c)
      throw ParseError("face " + std::to_string(f) + ": repeated vertex index");
  }

  if (uv) {
    if (uv->rows() != n || uv->cols() != 2)
      throw ParseError("uv must have exactly one row per vertex");
    if (!uv->allFinite()) throw ParseError("non-finite uv coordinate");
  }

  // Degeneracy is judged at unit scale so the check does not depend on the
  // source units.
  if (n > 0 && faces.rows() > 0) {
    const Eigen::RowVector3d centroid = vertices.colwise().mean();
    const double radius = (vertices.rowwise() - centroid).rowwise().norm().maxCoeff();
    const double scale = radius > 0 ? 1.0 / radius : 1.0;
    for (Eigen::Index f = 0; f < faces.rows(); ++f) {
      const Eigen::Vector3d p0 = vertices.row(faces(f, 0));
      const Eigen::Vector3d p1 = vertices.row(faces(f, 1));
      const Eigen::Vector3d p2 = vertices.row(faces(f, 2));
      const double area =
          0.5 * ((p1 - p0).cross(p2 - p0)).norm() * scale * scale;
      if (!(area > 1e-12))
        throw DegenerateFace("face " + std::to_string(f) + ": area " +
                                 std::to_string(area) + " below tolerance",
                             static_cast<long>(f));
    }
  }
}

std::string TriangleMesh::content_hash() const {
  ContentHash h;
  const auto n = static_cast<std::uint64_t>(vertex_count());
  const auto f = static_cast<std::uint64_t>(face_count());
  h.update_value(n);
  h.update_value(f);
  for (Eigen::Index i = 0; i < vertices.rows(); ++i)
    for (int j = 0; j < 3; ++j) h.update_value(vertices(i, j));
  for (Eigen::Index i = 0; i < faces.rows(); ++i)
    for (int j = 0; j < 3; ++j) h.update_value(faces(i, j));
  const std::uint8_t has_uv = uv ? 1 : 0;
  h.update_value(has_uv);
  if (uv)
    for (Eigen::Index i = 0; i < uv->rows(); ++i)
      for (int j = 0; j < 2; ++j) h.update_value((*uv)(i, j));
  return h.hex();
}

int channel_count(FieldSemantics s) {
  switch (s) {
    case FieldSemantics::rgb: return 3;
    case FieldSemantics::uv: return 2;
    case FieldSemantics::normal: return 3;
    case FieldSemantics::scalar: return 1;
  }
  return 0;
}

const char* semantics_name(FieldSemantics s) {
  switch (s) {
    case FieldSemantics::rgb: return "rgb";
    case FieldSemantics::uv: return "uv";
    case FieldSemantics::normal: return "normal";
    case FieldSemantics::scalar: return "scalar";
  }
  return "?";
}

VertexField::VertexField(MatX v, FieldSemantics s) : values(std::move(v)), semantics(s) {
  if (values.cols() != channel_count(s))
    throw ShapeMismatch(std::string("field '") + semantics_name(s) + "' expects " +
                        std::to_string(channel_count(s)) + " channels, got " +
                        std::to_string(values.cols()));
  if (!values.allFinite()) throw NonFinite("vertex field contains non-finite values");
}

std::vector<std::vector<Eigen::Index>> VertexPartition::group_members() const {
  std::vector<std::vector<Eigen::Index>> groups(static_cast<std::size_t>(group_count));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const int g = labels[v];
    if (g < 0 || g >= group_count) throw Error("partition label out of range");
    groups[static_cast<std::size_t>(g)].push_back(static_cast<Eigen::Index>(v));
  }
  return groups;
}

} // namespace meshfield
