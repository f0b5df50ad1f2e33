#pragma once

#include "wid/features.hpp"
#include "wid/image.hpp"

namespace wid {

struct LbpParams {
    int radius = 1;
    int neighbors = 8;
    bool uniform = false; // 59-bin uniform-pattern coding instead of plain 256
};

// Code for one pixel given its center value and the P ring samples in angular
// order (sample 0 at angle 0, proceeding counter-clockwise). bit_i = 1 iff
// samples[i] >= center.
uint32_t lbp_code(double center, const std::vector<double>& samples);

// Ring sample positions for (radius, neighbors): offsets snapped to the pixel
// grid when within 1e-6, otherwise bilinearly interpolated.
std::vector<double> lbp_ring_samples(const GrayImage& img, int x, int y, int radius,
                                     int neighbors);

// Histogram of per-pixel codes over all interior pixels. Plain coding yields
// 2^P bins; uniform coding yields P*(P-1)+3 bins (59 for P=8).
// Throws BlockTooSmall when the block has no interior pixels.
HistogramFeature lbp_histogram(const GrayImage& block, const LbpParams& params = {});

} // namespace wid
