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

#include "qjpeg/pgm.h"

#include <bit>
#include <cctype>
#include <fstream>
#include <limits>

#include "qjpeg/errors.h"

namespace qjpeg {

namespace {

void skip_space_and_comments(std::istream &in) {
    for (;;) {
        int ch = in.peek();
        if (ch == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        } else if (ch != EOF && std::isspace(ch)) {
            in.get();
        } else {
            return;
        }
    }
}

std::uint64_t read_header_value(std::istream &in, const char *what) {
    skip_space_and_comments(in);
    std::uint64_t v = 0;
    bool any = false;
    while (std::isdigit(in.peek())) {
        v = v * 10 + static_cast<std::uint64_t>(in.get() - '0');
        any = true;
        if (v > (std::uint64_t{1} << 32)) {
            throw IoError(std::string("PGM ") + what + " is too large");
        }
    }
    if (!any) {
        throw IoError(std::string("PGM header: expected ") + what);
    }
    return v;
}

}  // namespace

Greymap read_greymap(std::istream &in) {
    char magic[2] = {0, 0};
    if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '2')) {
        throw IoError("not a PGM file (expected P5 or P2 magic)");
    }
    const bool binary = magic[1] == '5';

    Greymap map;
    map.width = read_header_value(in, "width");
    map.height = read_header_value(in, "height");
    const auto maxval = read_header_value(in, "maxval");
    if (map.width == 0 || map.height == 0) {
        throw IoError("PGM has zero size");
    }
    if (maxval == 0 || maxval > 65535) {
        throw IoError("PGM maxval must be in [1, 65535]");
    }
    map.maxval = static_cast<std::uint32_t>(maxval);
    const std::size_t count = map.width * map.height;
    map.pixels.resize(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        if (!std::isspace(in.get())) {
            throw IoError("PGM header not terminated by whitespace");
        }
        const bool wide = map.maxval > 255;
        for (std::size_t i = 0; i < count; ++i) {
            int hi = in.get();
            int lo = wide ? in.get() : 0;
            if (hi == EOF || lo == EOF) {
                throw IoError("PGM raster truncated");
            }
            map.pixels[i] = wide ? (static_cast<std::uint32_t>(hi) << 8) | static_cast<std::uint32_t>(lo)
                                 : static_cast<std::uint32_t>(hi);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            map.pixels[i] = static_cast<std::uint32_t>(read_header_value(in, "sample"));
        }
    }
    for (auto v : map.pixels) {
        if (v > map.maxval) {
            throw IoError("PGM sample exceeds maxval");
        }
    }
    return map;
}

PixelImage to_pixel_image(const Greymap &map) {
    if (map.width != map.height) {
        throw ValidationError("image must be square, got " + std::to_string(map.width) + "x" +
                              std::to_string(map.height));
    }
    const auto depth = static_cast<unsigned>(std::bit_width(map.maxval));
    return PixelImage(map.width, depth, map.pixels);
}

PixelImage read_pgm(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    return to_pixel_image(read_greymap(in));
}

void write_pgm(std::ostream &out, const PixelImage &image) {
    const std::uint32_t maxval = image.max_value();
    out << "P5\n" << image.side() << ' ' << image.side() << '\n' << maxval << '\n';
    const bool wide = maxval > 255;
    for (auto v : image.pixels()) {
        if (wide) {
            out.put(static_cast<char>((v >> 8) & 0xFF));
        }
        out.put(static_cast<char>(v & 0xFF));
    }
    if (!out) {
        throw IoError("failed writing PGM data");
    }
}

void write_pgm(const std::string &path, const PixelImage &image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_pgm(out, image);
}

}  // namespace qjpeg
