#include "wid/lbp.hpp"

#include <cmath>

#include "wid/error.hpp"

namespace wid {

namespace {

struct RingOffset {
    int x0, y0;      // base pixel
    double fx, fy;   // interpolation fractions, 0 when snapped
};

// Sample at fractional offset. The incremental form keeps constant
// neighborhoods exact: all-equal pixels interpolate to exactly that value.
inline double bilinear(const GrayImage& img, int x0, int y0, double fx, double fy) {
    double v00 = img.at(x0, y0);
    if (fx == 0.0 && fy == 0.0) return v00;
    double v10 = img.at(x0 + 1, y0);
    double v01 = img.at(x0, y0 + 1);
    double v11 = img.at(x0 + 1, y0 + 1);
    return v00 + fx * (v10 - v00) + fy * (v01 - v00) + fx * fy * (v00 - v10 - v01 + v11);
}

std::vector<RingOffset> ring_offsets(int radius, int neighbors) {
    std::vector<RingOffset> offs(size_t(neighbors));
    for (int i = 0; i < neighbors; ++i) {
        double angle = 2.0 * M_PI * i / neighbors;
        double dx = radius * std::cos(angle);
        double dy = -radius * std::sin(angle); // counter-clockwise with y growing downward
        // Snap to the grid where the exact offset is integral; cos/sin noise
        // at the cardinal directions must not smear a pixel across its
        // neighbors.
        if (std::abs(dx - std::round(dx)) < 1e-6) dx = std::round(dx);
        if (std::abs(dy - std::round(dy)) < 1e-6) dy = std::round(dy);
        double bx = std::floor(dx);
        double by = std::floor(dy);
        offs[size_t(i)] = {int(bx), int(by), dx - bx, dy - by};
    }
    return offs;
}

// Uniform-pattern table: codes with at most two 0/1 transitions keep a
// dedicated bin, the rest share one.
std::vector<int> uniform_map(int neighbors) {
    int codes = 1 << neighbors;
    std::vector<int> map(size_t(codes));
    int next = 0;
    int catch_all = neighbors * (neighbors - 1) + 2;
    for (int c = 0; c < codes; ++c) {
        int transitions = 0;
        for (int b = 0; b < neighbors; ++b) {
            int cur = (c >> b) & 1;
            int nxt = (c >> ((b + 1) % neighbors)) & 1;
            transitions += cur != nxt;
        }
        map[size_t(c)] = transitions <= 2 ? next++ : catch_all;
    }
    return map;
}

} // namespace

uint32_t lbp_code(double center, const std::vector<double>& samples) {
    uint32_t code = 0;
    for (size_t i = 0; i < samples.size(); ++i)
        if (samples[i] >= center) code |= 1u << i;
    return code;
}

std::vector<double> lbp_ring_samples(const GrayImage& img, int x, int y, int radius,
                                     int neighbors) {
    auto offs = ring_offsets(radius, neighbors);
    std::vector<double> samples(offs.size());
    for (size_t i = 0; i < offs.size(); ++i)
        samples[i] = bilinear(img, x + offs[i].x0, y + offs[i].y0, offs[i].fx, offs[i].fy);
    return samples;
}

HistogramFeature lbp_histogram(const GrayImage& block, const LbpParams& params) {
    int r = params.radius;
    int p = params.neighbors;
    if (r < 1 || p < 4 || p > 24)
        throw Error(ErrorCode::ConfigError, "unsupported LBP parameters");
    if (block.width <= 2 * r || block.height <= 2 * r)
        throw Error(ErrorCode::BlockTooSmall,
                    "block smaller than LBP neighborhood (radius " + std::to_string(r) + ")");

    auto offs = ring_offsets(r, p);
    std::vector<int> umap;
    int nbins = 1 << p;
    if (params.uniform) {
        umap = uniform_map(p);
        nbins = p * (p - 1) + 3;
    }

    HistogramFeature out;
    out.kind = DescriptorKind::Lbp;
    out.norm = Normalization::RawCounts;
    out.bins.assign(size_t(nbins), 0.0);

    for (int y = r; y < block.height - r; ++y) {
        for (int x = r; x < block.width - r; ++x) {
            double center = block.at(x, y);
            uint32_t code = 0;
            for (size_t i = 0; i < offs.size(); ++i) {
                double s = bilinear(block, x + offs[i].x0, y + offs[i].y0, offs[i].fx, offs[i].fy);
                if (s >= center) code |= 1u << i;
            }
            out.bins[params.uniform ? size_t(umap[code]) : size_t(code)] += 1.0;
        }
    }
    return out;
}

} // namespace wid
