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

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace meshfield {

using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;
using FaceMat = Eigen::Matrix<int, Eigen::Dynamic, 3, Eigen::RowMajor>;

/// Triangle mesh with optional per-vertex texture coordinates.
///
/// Invariants (checked by validate()):
///  - every face index lies in [0, vertex_count())
///  - no face repeats a vertex index
///  - no face is degenerate (area > 1e-12 once scaled to the unit sphere)
///  - uv, when present, has exactly one row per vertex
struct TriangleMesh {
  MatX vertices;              // n x 3
  FaceMat faces;              // f x 3
  std::optional<MatX> uv;     // n x 2 when present
  std::string source_path;

  Eigen::Index vertex_count() const { return vertices.rows(); }
  Eigen::Index face_count() const { return faces.rows(); }

  /// Throws ParseError / DegenerateFace on invariant violations.
  void validate() const;

  /// FNV-1a digest of geometry + connectivity (+ uv). Stable across runs.
  std::string content_hash() const;
};

enum class FieldSemantics { rgb, uv, normal, scalar };

int channel_count(FieldSemantics s);
const char* semantics_name(FieldSemantics s);

/// Per-vertex field with a declared meaning. Channel count must agree with
/// the semantics and every entry must be finite.
struct VertexField {
  MatX values;  // n x C
  FieldSemantics semantics = FieldSemantics::scalar;

  VertexField() = default;
  VertexField(MatX v, FieldSemantics s);

  Eigen::Index vertex_count() const { return values.rows(); }
  Eigen::Index channels() const { return values.cols(); }
};

/// Assignment of every vertex to one of `group_count` groups.
struct VertexPartition {
  std::vector<int> labels;  // one per vertex, in [0, group_count)
  int group_count = 0;

  std::vector<std::vector<Eigen::Index>> group_members() const;
};

} // namespace meshfield
