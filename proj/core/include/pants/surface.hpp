// Copyright 2026 The pantscomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <string>

namespace pants {

/// A connected compact orientable surface of genus `genus` with
/// `boundary_count` boundary circles.
///
/// Only types with 2g - 2 + n >= 1 admit a pants decomposition; use
/// validate_surface() to obtain a checked value.
struct SurfaceType {
  int genus = 0;
  int boundary_count = 0;

  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

/// Returns the surface type (g, n) or throws std::invalid_argument when
/// g or n is negative or 2g - 2 + n <= 0.
SurfaceType validate_surface(int g, int n);

/// Number of circles in a maximal cut system: 3g - 3 + n.
int curve_count(SurfaceType s);

/// Number of pairs of pants: 2g - 2 + n = |chi|.
int pants_count(SurfaceType s);

std::string to_string(SurfaceType s);

}  // namespace pants
