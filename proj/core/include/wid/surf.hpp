#pragma once

#include <vector>

#include "wid/image.hpp"

namespace wid {

struct SurfParams {
    int octaves = 3;                 // >= 3
    double hessian_threshold = 6e-4; // on the normalized determinant response
    int max_keypoints = 0;           // keep the strongest k; 0 = keep all
};

struct SurfKeypoint {
    double x = 0.0;
    double y = 0.0;
    double scale = 0.0;
    double orientation = 0.0; // radians
    int laplacian_sign = 1;   // sign of the Hessian trace
    double response = 0.0;
    std::vector<double> descriptor; // 64 values, L2-normalized
};

// Fast-Hessian keypoints with box-filter scale space over the integral image,
// 3x3x3 non-max suppression, Haar-wavelet orientation, and the 4x4-subregion
// (sum dx, sum |dx|, sum dy, sum |dy|) descriptor. Intensities are treated as
// [0,1] so responses and the threshold are resolution-independent.
std::vector<SurfKeypoint> surf_keypoints(const GrayImage& block, const SurfParams& params = {});

// One SVM instance per keypoint: the 64 descriptor values plus the Laplacian
// sign. Order-preserving.
std::vector<std::vector<double>> aggregate_surf(const std::vector<SurfKeypoint>& keypoints);

} // namespace wid
