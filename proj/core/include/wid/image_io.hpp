#pragma once

#include <string>

#include "wid/image.hpp"

namespace wid {

// Reads a PNG or PGM file (sniffed by magic bytes). RGB/palette PNGs are
// converted through to_grayscale; 16-bit inputs are reduced to 8 bits.
GrayImage load_gray_image(const std::string& path);

void save_png(const GrayImage& img, const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path);

} // namespace wid
