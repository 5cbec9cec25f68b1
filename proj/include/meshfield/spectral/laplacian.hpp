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

#include <Eigen/SparseCore>

namespace meshfield {

using SpMat = Eigen::SparseMatrix<double>;

/// Cotangent stiffness matrix L (positive semidefinite, rows sum to zero)
/// and barycentric lumped mass matrix M (diagonal, strictly positive).
struct LaplacianPair {
  SpMat L;            // n x n, symmetric
  VecX mass;          // diagonal of M
  long clamped_cots;  // cotangents clipped to |cot| <= 1e6 during assembly

  Eigen::Index size() const { return mass.size(); }
};

/// Assemble (L, M) for a triangle mesh. Off-diagonal entries are
/// -(cot(alpha) + cot(beta)) / 2 over the faces sharing the edge (a single
/// term on boundary edges); diagonals make each row sum to zero.
/// M_ii is one third of the incident face area.
///
/// Near-degenerate corners get their cotangent clamped to |cot| <= 1e6 and
/// counted in `clamped_cots`; exactly degenerate faces throw DegenerateFace.
LaplacianPair assemble_laplacian(const TriangleMesh& mesh);

} // namespace meshfield
