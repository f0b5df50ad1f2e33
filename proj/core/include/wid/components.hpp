#pragma once

#include <vector>

#include "wid/image.hpp"

namespace wid {

struct Pixel {
    int x = 0;
    int y = 0;
};

struct ConnectedComponent {
    std::vector<Pixel> pixels;
    Rect bbox;
    double centroid_x = 0.0;
    double centroid_y = 0.0;

    int width() const { return bbox.width(); }
    int height() const { return bbox.height(); }
    size_t size() const { return pixels.size(); }
};

// 8-connected components of the ink mask, ordered by reading order: centroids
// are binned into horizontal bands of height = median component height, then
// sorted left-to-right within a band. Empty mask yields an empty list.
std::vector<ConnectedComponent> connected_components(const BinaryImage& mask);

// Angle (radians, in (-pi/2, pi/2]) of the dominant stroke direction: the
// principal-axis angle of the summed per-component central second moments.
// Translation of components leaves it unchanged.
double dominant_ink_orientation(const BinaryImage& mask);

} // namespace wid
