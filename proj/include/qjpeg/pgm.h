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

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "qjpeg/image.h"

namespace qjpeg {

/// Raw greymap as stored in a NetPBM file, before any geometry checks.
struct Greymap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint32_t maxval = 0;
    std::vector<std::uint32_t> pixels;
};

/// Reads P5 (binary, 8- or 16-bit big-endian samples) or P2 (ASCII).
/// Throws IoError on malformed input.
Greymap read_greymap(std::istream &in);

/// Converts to a PixelImage of depth bit_width(maxval). Throws
/// ValidationError unless the map is square with power-of-two side.
PixelImage to_pixel_image(const Greymap &map);

PixelImage read_pgm(const std::string &path);

/// Writes binary P5 with maxval = 2^c - 1; 16-bit samples are big-endian.
void write_pgm(std::ostream &out, const PixelImage &image);
void write_pgm(const std::string &path, const PixelImage &image);

}  // namespace qjpeg
