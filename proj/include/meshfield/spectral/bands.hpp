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
#include <vector>

namespace meshfield {

/// Half-open index range [begin, end) into an eigenpair list.
struct BandRange {
  Eigen::Index begin = 0;
  Eigen::Index end = 0;
  Eigen::Index width() const { return end - begin; }
  bool operator==(const BandRange&) const = default;
};

/// Disjoint, ordered ranges covering [0, k_eig) exactly; one per level.
struct SpectrumBands {
  std::vector<BandRange> ranges;
  int level_count() const { return static_cast<int>(ranges.size()); }
};

/// Distribute k_eig eigenpair indices evenly over `levels` contiguous
/// bands: cut points are linspace(0, k_eig, levels + 1) rounded half-up to
/// the nearest integer. Level 1 gets the lowest eigenvalues, level N the
/// highest.
SpectrumBands split_spectrum(Eigen::Index k_eig, int levels);

} // namespace meshfield
