#pragma once

#include "wid/features.hpp"
#include "wid/image.hpp"

namespace wid {

struct LpqParams {
    int window = 7;           // odd
    bool decorrelate = false; // whiten the 8 coefficient channels before quantizing
    double rho = 0.9;         // pixel correlation model used by the whitening step
};

// Per-pixel 8-bit code from the signs of the four lowest non-DC STFT
// coefficients, u1=(a,0), u2=(0,a), u3=(a,a), u4=(a,-a) with a = 1/window.
// Bits 0..3 are Re(F1..F4) >= 0, bits 4..7 are Im(F1..F4) >= 0. The window is
// centered on the pixel; only pixels whose window fits contribute.
// Throws BlockTooSmall when the block is smaller than the window.
HistogramFeature lpq_histogram(const GrayImage& block, const LpqParams& params = {});

} // namespace wid
