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

#include "pants/surface.hpp"

#include <stdexcept>

namespace pants {

SurfaceType validate_surface(int g, int n) {
  if (g < 0 || n < 0) {
    throw std::invalid_argument("surface type (" + std::to_string(g) + "," +
                                std::to_string(n) + "): genus and boundary count must be non-negative");
  }
  if (2 * g - 2 + n < 1) {
    throw std::invalid_argument("surface type (" + std::to_string(g) + "," +
                                std::to_string(n) + ") has no pants decomposition (2g-2+n < 1)");
  }
  return SurfaceType{g, n};
}

int curve_count(SurfaceType s) { return 3 * s.genus - 3 + s.boundary_count; }

int pants_count(SurfaceType s) { return 2 * s.genus - 2 + s.boundary_count; }

std::string to_string(SurfaceType s) {
  return "(" + std::to_string(s.genus) + "," + std::to_string(s.boundary_count) + ")";
}

}  // namespace pants
