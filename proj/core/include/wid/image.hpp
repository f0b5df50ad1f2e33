#pragma once

#include <cstdint>
#include <vector>

namespace wid {

// Row-major 8-bit grayscale raster.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, uint8_t fill = 0) : width(w), height(h), data(size_t(w) * h, fill) {}

    uint8_t at(int x, int y) const { return data[size_t(y) * width + x]; }
    uint8_t& at(int x, int y) { return data[size_t(y) * width + x]; }
    bool empty() const { return width <= 0 || height <= 0; }
    size_t pixel_count() const { return size_t(width) * height; }
};

// Interleaved RGB raster, 8 bits per channel.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data; // r,g,b per pixel

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), data(size_t(w) * h * 3, 0) {}
};

// Ink mask: true = ink, false = background.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data; // 0 or 1

    BinaryImage() = default;
    BinaryImage(int w, int h, bool fill = false)
        : width(w), height(h), data(size_t(w) * h, fill ? 1 : 0) {}

    bool at(int x, int y) const { return data[size_t(y) * width + x] != 0; }
    void set(int x, int y, bool v) { data[size_t(y) * width + x] = v ? 1 : 0; }
    size_t ink_count() const;
};

// Cumulative sums over the inclusive rectangle (0,0)..(x,y). Exact integer
// arithmetic so box-filter responses carry no float drift.
struct IntegralImage {
    int width = 0;
    int height = 0;
    std::vector<uint64_t> sums;

    uint64_t at(int x, int y) const { return sums[size_t(y) * width + x]; }

    // Sum over [x0,x1] x [y0,y1], inclusive bounds, clamped to the image.
    uint64_t rect_sum(int x0, int y0, int x1, int y1) const;
    // Sum over the size x size box rooted at (row, col) = (y, x), clamped.
    // Mirrors the access pattern box filters need.
    uint64_t box_sum(int row, int col, int rows, int cols) const;
};

struct Rect {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1; // inclusive; empty if x1 < x0
    bool empty() const { return x1 < x0 || y1 < y0; }
    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
};

// Luminance conversion: round(0.299 R + 0.587 G + 0.114 B), clamped to [0,255].
GrayImage to_grayscale(const RgbImage& color);

// Threshold maximizing between-class variance of {<=t, >t}; ties break toward
// the smallest t. Throws ConstantImage when the image has a single intensity.
int otsu_threshold(const GrayImage& img);

// Ink polarity: intensity <= threshold is ink.
BinaryImage binarize(const GrayImage& img, int threshold);

IntegralImage integral_image(const GrayImage& img);

GrayImage crop(const GrayImage& img, const Rect& r);

// Tight bounding box of the ink pixels; empty Rect when the mask is blank.
Rect ink_bounding_box(const BinaryImage& mask);

} // namespace wid
