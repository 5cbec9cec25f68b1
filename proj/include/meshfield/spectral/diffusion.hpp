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

#include "meshfield/spectral/bands.hpp"
#include "meshfield/spectral/eigensolver.hpp"

namespace meshfield {

/// Heat diffusion of a per-vertex signal through the truncated eigenbasis:
/// project onto the band's eigenvectors, damp coefficient j by
/// exp(-lambda_j * t_c) (per output channel c), and project back.
/// Linear in u; t must be nonnegative per channel (throws NegativeTime).
///
/// u is n x C, t has length C. Only eigenpairs in `band` contribute.
MatX diffuse(const SpectralBasis& basis, const LaplacianPair& pair,
             const BandRange& band, const MatX& u, const VecX& t);

/// Convenience overload: one shared time for all channels.
MatX diffuse(const SpectralBasis& basis, const LaplacianPair& pair,
             const BandRange& band, const MatX& u, double t);

} // namespace meshfield
