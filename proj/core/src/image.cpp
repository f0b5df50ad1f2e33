#include "wid/image.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wid/error.hpp"

namespace wid {

size_t BinaryImage::ink_count() const {
    size_t n = 0;
    for (uint8_t v : data) n += v;
    return n;
}

uint64_t IntegralImage::rect_sum(int x0, int y0, int x1, int y1) const {
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, width - 1);
    y1 = std::min(y1, height - 1);
    if (x0 > x1 || y0 > y1) return 0;
    uint64_t a = at(x1, y1);
    uint64_t b = (x0 > 0) ? at(x0 - 1, y1) : 0;
    uint64_t c = (y0 > 0) ? at(x1, y0 - 1) : 0;
    uint64_t d = (x0 > 0 && y0 > 0) ? at(x0 - 1, y0 - 1) : 0;
    return a - b - c + d;
}

uint64_t IntegralImage::box_sum(int row, int col, int rows, int cols) const {
    return rect_sum(col, row, col + cols - 1, row + rows - 1);
}

GrayImage to_grayscale(const RgbImage& color) {
    if (color.width <= 0 || color.height <= 0)
        throw Error(ErrorCode::InvalidImage, "zero-dimension raster");
    GrayImage out(color.width, color.height);
    const uint8_t* p = color.data.data();
    for (size_t i = 0; i < out.pixel_count(); ++i, p += 3) {
        double y = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        long v = std::lround(y);
        out.data[i] = uint8_t(std::clamp(v, 0L, 255L));
    }
    return out;
}

int otsu_threshold(const GrayImage& img) {
    if (img.empty()) throw Error(ErrorCode::InvalidImage, "empty image");
    std::array<uint64_t, 256> hist{};
    for (uint8_t v : img.data) ++hist[v];

    int lo = 0, hi = 255;
    while (hist[lo] == 0) ++lo;
    while (hist[hi] == 0) --hi;
    if (lo == hi) throw Error(ErrorCode::ConstantImage, "single-intensity image");

    uint64_t total = img.pixel_count();
    uint64_t total_sum = 0;
    for (int v = 0; v < 256; ++v) total_sum += hist[v] * uint64_t(v);

    int best_t = 0;
    double best_var = -1.0;
    uint64_t n0 = 0, s0 = 0;
    for (int t = 0; t < 256; ++t) {
        n0 += hist[t];
        s0 += hist[t] * uint64_t(t);
        uint64_t n1 = total - n0;
        if (n0 == 0 || n1 == 0) continue;
        uint64_t s1 = total_sum - s0;
        double mu0 = double(s0) / double(n0);
        double mu1 = double(s1) / double(n1);
        double d = mu0 - mu1;
        double var = double(n0) * double(n1) * d * d;
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }
    return best_t;
}

BinaryImage binarize(const GrayImage& img, int threshold) {
    BinaryImage mask(img.width, img.height);
    for (size_t i = 0; i < img.data.size(); ++i) mask.data[i] = img.data[i] <= threshold ? 1 : 0;
    return mask;
}

IntegralImage integral_image(const GrayImage& img) {
    IntegralImage out;
    out.width = img.width;
    out.height = img.height;
    out.sums.resize(img.pixel_count());
    for (int y = 0; y < img.height; ++y) {
        uint64_t row = 0;
        for (int x = 0; x < img.width; ++x) {
            row += img.at(x, y);
            uint64_t above = (y > 0) ? out.at(x, y - 1) : 0;
            out.sums[size_t(y) * img.width + x] = row + above;
        }
    }
    return out;
}

GrayImage crop(const GrayImage& img, const Rect& r) {
    if (r.empty() || r.x0 < 0 || r.y0 < 0 || r.x1 >= img.width || r.y1 >= img.height)
        throw Error(ErrorCode::InvalidImage, "crop rectangle out of bounds");
    GrayImage out(r.width(), r.height());
    for (int y = 0; y < out.height; ++y)
        std::copy_n(&img.data[size_t(r.y0 + y) * img.width + r.x0], out.width,
                    &out.data[size_t(y) * out.width]);
    return out;
}

Rect ink_bounding_box(const BinaryImage& mask) {
    Rect r{mask.width, mask.height, -1, -1};
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y)) continue;
            r.x0 = std::min(r.x0, x);
            r.y0 = std::min(r.y0, y);
            r.x1 = std::max(r.x1, x);
            r.y1 = std::max(r.y1, y);
        }
    }
    return r;
}

} // namespace wid
