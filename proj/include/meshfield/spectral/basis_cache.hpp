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

#include "meshfield/spectral/eigensolver.hpp"

#include <optional>
#include <string>

namespace meshfield {

/// Binary eigenbasis container ("MFSB1"): magic, n, k, float64 eigenvalues,
/// float64 basis (column-major).
void save_basis(const SpectralBasis& basis, const std::string& path);
SpectralBasis load_basis(const std::string& path);

/// Cache filename for (mesh content hash, k) under `cache_dir`.
std::string basis_cache_path(const std::string& cache_dir,
                             const std::string& mesh_hash, Eigen::Index k);

/// solve_eigs with a read-through cache. `cache_dir` may be empty (no
/// caching); typically it comes from the MESHFIELD_CACHE_DIR environment
/// variable. Corrupt or mismatched cache entries are recomputed.
SpectralBasis solve_eigs_cached(const LaplacianPair& pair, Eigen::Index k,
                                const std::string& mesh_hash,
                                const std::string& cache_dir,
                                const EigOptions& options = {});

} // namespace meshfield
