// Copyright 2026 The qjpeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

#include "qjpeg/image.h"

namespace qjpeg {

/// 4x4 binary lower-triangular pattern (ones on and below the diagonal).
PixelImage lower_triangle_4x4();

/// side x side image whose row-major pixels are 0, 1, ..., side^2 - 1.
PixelImage ramp_image(std::size_t side, unsigned depth_bits);

/// Modified Shepp-Logan phantom sampled at pixel centers and scaled to the
/// full depth range.
PixelImage shepp_logan_phantom(std::size_t side, unsigned depth_bits);

}  // namespace qjpeg
