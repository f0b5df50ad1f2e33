#include "wid/surf.hpp"

#include <algorithm>
#include <cmath>

#include "wid/error.hpp"

namespace wid {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Box sums are taken over raw 8-bit values; dividing by 255 puts responses on
// the [0,1] intensity scale the threshold is calibrated for.
inline double box(const IntegralImage& ii, int row, int col, int rows, int cols) {
    return double(ii.box_sum(row, col, rows, cols)) / 255.0;
}

inline double haar_x(const IntegralImage& ii, int row, int col, int size) {
    return box(ii, row - size / 2, col, size, size / 2) -
           box(ii, row - size / 2, col - size / 2, size, size / 2);
}

inline double haar_y(const IntegralImage& ii, int row, int col, int size) {
    return box(ii, row, col - size / 2, size / 2, size) -
           box(ii, row - size / 2, col - size / 2, size / 2, size);
}

struct ResponseLayer {
    int filter_size = 0;
    int step = 0;
    int grid_w = 0;
    int grid_h = 0;
    std::vector<double> det;
    std::vector<int8_t> lap;

    double det_at(int r, int c) const { return det[size_t(r) * grid_w + c]; }
};

ResponseLayer build_layer(const IntegralImage& ii, int filter_size, int step) {
    ResponseLayer layer;
    layer.filter_size = filter_size;
    layer.step = step;
    layer.grid_w = ii.width / step;
    layer.grid_h = ii.height / step;
    layer.det.assign(size_t(layer.grid_w) * layer.grid_h, 0.0);
    layer.lap.assign(size_t(layer.grid_w) * layer.grid_h, 0);

    int b = (filter_size - 1) / 2;
    int l = filter_size / 3;
    double inv_area = 1.0 / (double(filter_size) * filter_size);

    for (int gr = 0; gr < layer.grid_h; ++gr) {
        int r = gr * step;
        if (r - b < 0 || r + b >= ii.height) continue;
        for (int gc = 0; gc < layer.grid_w; ++gc) {
            int c = gc * step;
            if (c - b < 0 || c + b >= ii.width) continue;

            double dxx = box(ii, r - l + 1, c - b, 2 * l - 1, filter_size) -
                         3.0 * box(ii, r - l + 1, c - l / 2, 2 * l - 1, l);
            double dyy = box(ii, r - b, c - l + 1, filter_size, 2 * l - 1) -
                         3.0 * box(ii, r - l / 2, c - l + 1, l, 2 * l - 1);
            double dxy = box(ii, r - l, c + 1, l, l) + box(ii, r + 1, c - l, l, l) -
                         box(ii, r - l, c - l, l, l) - box(ii, r + 1, c + 1, l, l);
            dxx *= inv_area;
            dyy *= inv_area;
            dxy *= inv_area;

            size_t idx = size_t(gr) * layer.grid_w + gc;
            layer.det[idx] = dxx * dyy - 0.81 * dxy * dxy;
            layer.lap[idx] = (dxx + dyy) >= 0 ? 1 : -1;
        }
    }
    return layer;
}

bool is_local_max(const ResponseLayer& below, const ResponseLayer& mid, const ResponseLayer& above,
                  int r, int c) {
    double v = mid.det_at(r, c);
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (above.det_at(r + dr, c + dc) >= v) return false;
            if ((dr != 0 || dc != 0) && mid.det_at(r + dr, c + dc) >= v) return false;
            if (below.det_at(r + dr, c + dc) > v) return false;
        }
    }
    return true;
}

double assign_orientation(const IntegralImage& ii, double kx, double ky, double scale) {
    int s = std::max(1, int(std::lround(scale)));
    int haar = 4 * s;

    struct Sample {
        double angle;
        double rx;
        double ry;
    };
    std::vector<Sample> samples;
    samples.reserve(109);
    for (int i = -6; i <= 6; ++i) {
        for (int j = -6; j <= 6; ++j) {
            if (i * i + j * j >= 36) continue;
            int px = int(std::lround(kx)) + i * s;
            int py = int(std::lround(ky)) + j * s;
            double w = std::exp(-double(i * i + j * j) / (2.0 * 2.5 * 2.5));
            double rx = w * haar_x(ii, py, px, haar);
            double ry = w * haar_y(ii, py, px, haar);
            if (rx == 0.0 && ry == 0.0) continue;
            double ang = std::atan2(ry, rx);
            if (ang < 0) ang += 2.0 * kPi;
            samples.push_back({ang, rx, ry});
        }
    }
    if (samples.empty()) return 0.0;

    // Sliding pi/3 sector; the sector whose summed response vector is longest
    // fixes the orientation.
    double best_len = -1.0, best_ang = 0.0;
    for (double a0 = 0.0; a0 < 2.0 * kPi; a0 += 0.15) {
        double a1 = a0 + kPi / 3.0;
        double sx = 0.0, sy = 0.0;
        for (const auto& smp : samples) {
            bool inside = (smp.angle >= a0 && smp.angle < a1) ||
                          (smp.angle + 2.0 * kPi >= a0 && smp.angle + 2.0 * kPi < a1);
            if (inside) {
                sx += smp.rx;
                sy += smp.ry;
            }
        }
        double len = sx * sx + sy * sy;
        if (len > best_len) {
            best_len = len;
            best_ang = std::atan2(sy, sx);
        }
    }
    if (best_ang < 0) best_ang += 2.0 * kPi;
    return best_ang;
}

std::vector<double> build_descriptor(const IntegralImage& ii, double kx, double ky, double scale,
                                     double orientation) {
    double co = std::cos(orientation);
    double si = std::sin(orientation);
    int haar = 2 * std::max(1, int(std::lround(scale)));

    std::vector<double> desc(64, 0.0);
    for (int k = -10; k < 10; ++k) {
        for (int l = -10; l < 10; ++l) {
            double u = (k + 0.5) * scale;
            double v = (l + 0.5) * scale;
            int sx = int(std::lround(kx + co * u - si * v));
            int sy = int(std::lround(ky + si * u + co * v));
            double dx = haar_x(ii, sy, sx, haar);
            double dy = haar_y(ii, sy, sx, haar);
            double w = std::exp(-double(k * k + l * l) / (2.0 * 3.3 * 3.3));
            // responses rotated back into the keypoint frame
            double rx = w * (co * dx + si * dy);
            double ry = w * (-si * dx + co * dy);

            size_t sub = size_t((l + 10) / 5) * 4 + size_t((k + 10) / 5);
            desc[sub * 4 + 0] += rx;
            desc[sub * 4 + 1] += std::abs(rx);
            desc[sub * 4 + 2] += ry;
            desc[sub * 4 + 3] += std::abs(ry);
        }
    }
    double len = 0.0;
    for (double d : desc) len += d * d;
    if (len <= 0.0) return {};
    len = std::sqrt(len);
    for (double& d : desc) d /= len;
    return desc;
}

} // namespace

std::vector<SurfKeypoint> surf_keypoints(const GrayImage& block, const SurfParams& params) {
    if (block.width < 32 || block.height < 32)
        throw Error(ErrorCode::BlockTooSmall, "SURF needs at least a 32x32 block");
    if (params.octaves < 3 || params.octaves > 6)
        throw Error(ErrorCode::ConfigError, "SURF octave count must be in [3, 6]");

    IntegralImage ii = integral_image(block);
    std::vector<SurfKeypoint> keypoints;

    for (int o = 0; o < params.octaves; ++o) {
        int step = 1 << o;
        if (block.width / step < 3 || block.height / step < 3) break;
        ResponseLayer layers[4];
        for (int i = 0; i < 4; ++i) {
            int filter_size = 3 * ((1 << (o + 1)) * (i + 1) + 1);
            layers[i] = build_layer(ii, filter_size, step);
        }
        for (int t = 1; t <= 2; ++t) {
            const ResponseLayer& mid = layers[t];
            for (int r = 1; r + 1 < mid.grid_h; ++r) {
                for (int c = 1; c + 1 < mid.grid_w; ++c) {
                    double v = mid.det_at(r, c);
                    if (v < params.hessian_threshold) continue;
                    if (!is_local_max(layers[t - 1], mid, layers[t + 1], r, c)) continue;

                    SurfKeypoint kp;
                    kp.x = double(c * step);
                    kp.y = double(r * step);
                    kp.scale = 1.2 * mid.filter_size / 9.0;
                    kp.laplacian_sign = mid.lap[size_t(r) * mid.grid_w + c];
                    kp.response = v;
                    keypoints.push_back(kp);
                }
            }
        }
    }

    std::stable_sort(keypoints.begin(), keypoints.end(),
                     [](const SurfKeypoint& a, const SurfKeypoint& b) {
                         return a.response > b.response;
                     });
    if (params.max_keypoints > 0 && keypoints.size() > size_t(params.max_keypoints))
        keypoints.resize(size_t(params.max_keypoints));

    std::vector<SurfKeypoint> described;
    described.reserve(keypoints.size());
    for (auto& kp : keypoints) {
        kp.orientation = assign_orientation(ii, kp.x, kp.y, kp.scale);
        kp.descriptor = build_descriptor(ii, kp.x, kp.y, kp.scale, kp.orientation);
        if (kp.descriptor.empty()) continue; // no gradient energy anywhere in the patch
        described.push_back(std::move(kp));
    }
    return described;
}

std::vector<std::vector<double>> aggregate_surf(const std::vector<SurfKeypoint>& keypoints) {
    std::vector<std::vector<double>> out;
    out.reserve(keypoints.size());
    for (const auto& kp : keypoints) {
        std::vector<double> v;
        v.reserve(65);
        v.insert(v.end(), kp.descriptor.begin(), kp.descriptor.end());
        v.push_back(double(kp.laplacian_sign));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace wid
