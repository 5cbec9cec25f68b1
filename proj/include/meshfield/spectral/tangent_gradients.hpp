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
#include "meshfield/spectral/laplacian.hpp"

namespace meshfield {

/// Per-vertex tangent-plane gradient operator.
///
/// Each vertex carries an orthonormal tangent frame (e1, e2); the frame's
/// first axis is the global x axis projected into the tangent plane (y axis
/// when x is within 1e-6 of the normal). The gradient of a scalar field is
/// estimated by least squares over one-ring edge differences, expressed in
/// that frame. Constant fields map to zero by construction.
struct TangentGradientOperator {
  MatX frame_e1;  // n x 3
  MatX frame_e2;  // n x 3
  SpMat gx;       // n x n, component along e1
  SpMat gy;       // n x n, component along e2

  /// Apply to a scalar (or multi-channel) field: returns two n x C arrays
  /// (e1 and e2 components).
  std::pair<MatX, MatX> apply(const MatX& u) const;
};

/// Build the operator. Throws IsolatedVertex when a vertex has no incident
/// face.
TangentGradientOperator tangent_gradients(const TriangleMesh& mesh);

} // namespace meshfield
