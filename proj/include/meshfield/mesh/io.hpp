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

#include <iosfwd>
#include <optional>
#include <string>

namespace meshfield {

enum class MeshFormat { obj, ply };

/// Guess the format from the file extension; defaults to OBJ.
MeshFormat format_from_path(const std::string& path);

/// Load and validate a mesh.
///
/// OBJ: supports `v`, `vt` and faces of the forms `f a b c`, `f a/at ...`,
/// `f a//an ...`, `f a/at/an ...` (normal indices are ignored). Indices are
/// one-based. A vertex referenced with two distinct `vt` indices is split
/// into per-corner copies so that uv stays a per-vertex attribute.
/// Polygonal faces are fan-triangulated.
///
/// PLY: ascii and binary_little_endian, float32 x/y/z, optional uint8
/// red/green/blue (ignored on load), uint8-counted int32 face lists.
TriangleMesh load_mesh(const std::string& path, MeshFormat format);
TriangleMesh load_mesh(const std::string& path);

/// Write an OBJ (with `vt` + `f v/vt` lines when uv is present).
void save_obj(const TriangleMesh& mesh, const std::string& path);

/// Write a PLY. `colors`, when given, must be n x 3 in [0, 1] and is
/// quantized to uint8.
void save_ply(const TriangleMesh& mesh, const std::string& path, bool binary,
              const std::optional<MatX>& colors = std::nullopt);

} // namespace meshfield
