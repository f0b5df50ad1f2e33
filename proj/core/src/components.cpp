#include "wid/components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wid {

std::vector<ConnectedComponent> connected_components(const BinaryImage& mask) {
    std::vector<ConnectedComponent> comps;
    if (mask.width <= 0 || mask.height <= 0) return comps;

    std::vector<uint8_t> visited(mask.data.size(), 0);
    std::vector<Pixel> stack;

    for (int sy = 0; sy < mask.height; ++sy) {
        for (int sx = 0; sx < mask.width; ++sx) {
            size_t idx = size_t(sy) * mask.width + sx;
            if (!mask.data[idx] || visited[idx]) continue;

            ConnectedComponent comp;
            comp.bbox = {sx, sy, sx, sy};
            stack.clear();
            stack.push_back({sx, sy});
            visited[idx] = 1;
            long long sum_x = 0, sum_y = 0;

            while (!stack.empty()) {
                Pixel p = stack.back();
                stack.pop_back();
                comp.pixels.push_back(p);
                sum_x += p.x;
                sum_y += p.y;
                comp.bbox.x0 = std::min(comp.bbox.x0, p.x);
                comp.bbox.y0 = std::min(comp.bbox.y0, p.y);
                comp.bbox.x1 = std::max(comp.bbox.x1, p.x);
                comp.bbox.y1 = std::max(comp.bbox.y1, p.y);
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        int nx = p.x + dx, ny = p.y + dy;
                        if (nx < 0 || ny < 0 || nx >= mask.width || ny >= mask.height) continue;
                        size_t nidx = size_t(ny) * mask.width + nx;
                        if (!mask.data[nidx] || visited[nidx]) continue;
                        visited[nidx] = 1;
                        stack.push_back({nx, ny});
                    }
                }
            }

            comp.centroid_x = double(sum_x) / double(comp.pixels.size());
            comp.centroid_y = double(sum_y) / double(comp.pixels.size());
            comps.push_back(std::move(comp));
        }
    }

    if (comps.size() > 1) {
        std::vector<int> heights;
        heights.reserve(comps.size());
        for (const auto& c : comps) heights.push_back(c.height());
        std::nth_element(heights.begin(), heights.begin() + heights.size() / 2, heights.end());
        int band_h = std::max(1, heights[heights.size() / 2]);

        std::vector<size_t> order(comps.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            int band_a = int(comps[a].centroid_y / band_h);
            int band_b = int(comps[b].centroid_y / band_h);
            if (band_a != band_b) return band_a < band_b;
            if (comps[a].centroid_x != comps[b].centroid_x)
                return comps[a].centroid_x < comps[b].centroid_x;
            return comps[a].centroid_y < comps[b].centroid_y;
        });
        std::vector<ConnectedComponent> sorted;
        sorted.reserve(comps.size());
        for (size_t i : order) sorted.push_back(std::move(comps[i]));
        comps = std::move(sorted);
    }
    return comps;
}

double dominant_ink_orientation(const BinaryImage& mask) {
    auto comps = connected_components(mask);
    double mu20 = 0.0, mu02 = 0.0, mu11 = 0.0;
    for (const auto& c : comps) {
        for (const auto& p : c.pixels) {
            double dx = p.x - c.centroid_x;
            double dy = p.y - c.centroid_y;
            mu20 += dx * dx;
            mu02 += dy * dy;
            mu11 += dx * dy;
        }
    }
    return 0.5 * std::atan2(2.0 * mu11, mu20 - mu02);
}

} // namespace wid
