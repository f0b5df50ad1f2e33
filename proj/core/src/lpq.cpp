#include "wid/lpq.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wid/error.hpp"

namespace wid {

namespace {

using cd = std::complex<double>;

// 1-D STFT filter at frequency 1/window: exp(-2*pi*i*m/window), m = -r..r.
std::vector<cd> stft_filter(int window) {
    int r = window / 2;
    std::vector<cd> w(size_t(window));
    for (int m = -r; m <= r; ++m) {
        double phase = 2.0 * M_PI * m / window;
        w[size_t(m + r)] = cd(std::cos(phase), -std::sin(phase));
    }
    return w;
}

struct WindowCoeffs {
    cd f[4]; // F1..F4
};

// The four coefficients of one window. g holds the window values minus the
// center pixel; the subtraction leaves the coefficients unchanged (the
// filters have no DC) and makes constant windows produce exact zeros.
WindowCoeffs window_coeffs(const std::vector<double>& g, int window, const std::vector<cd>& wa) {
    WindowCoeffs out{};
    cd f1(0, 0), f2(0, 0), f3(0, 0), f4(0, 0);
    for (int n = 0; n < window; ++n) {
        cd row_a(0, 0);
        double row_1 = 0.0;
        const double* grow = &g[size_t(n) * window];
        for (int m = 0; m < window; ++m) {
            row_a += wa[size_t(m)] * grow[m];
            row_1 += grow[m];
        }
        f1 += row_a;
        f2 += wa[size_t(n)] * row_1;
        f3 += wa[size_t(n)] * row_a;
        f4 += std::conj(wa[size_t(n)]) * row_a;
    }
    out.f[0] = f1;
    out.f[1] = f2;
    out.f[2] = f3;
    out.f[3] = f4;
    return out;
}

// Cyclic Jacobi eigendecomposition of a symmetric 8x8 matrix. Deterministic
// sweep order; eigenpairs sorted by descending eigenvalue.
void jacobi_eigen(std::vector<double>& a, int n, std::vector<double>& values,
                  std::vector<double>& vectors) {
    vectors.assign(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vectors[size_t(i) * n + i] = 1.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[size_t(p) * n + q] * a[size_t(p) * n + q];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[size_t(p) * n + q];
                if (std::abs(apq) < 1e-300) continue;
                double app = a[size_t(p) * n + p];
                double aqq = a[size_t(q) * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[size_t(k) * n + p];
                    double akq = a[size_t(k) * n + q];
                    a[size_t(k) * n + p] = c * akp - s * akq;
                    a[size_t(k) * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[size_t(p) * n + k];
                    double aqk = a[size_t(q) * n + k];
                    a[size_t(p) * n + k] = c * apk - s * aqk;
                    a[size_t(q) * n + k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = vectors[size_t(k) * n + p];
                    double vkq = vectors[size_t(k) * n + q];
                    vectors[size_t(k) * n + p] = c * vkp - s * vkq;
                    vectors[size_t(k) * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    values.resize(size_t(n));
    for (int i = 0; i < n; ++i) values[size_t(i)] = a[size_t(i) * n + i];

    // Sort descending by eigenvalue, fix each eigenvector's sign by its
    // largest-magnitude component.
    std::vector<int> order(size_t(n));
    for (int i = 0; i < n; ++i) order[size_t(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return values[size_t(x)] > values[size_t(y)]; });
    std::vector<double> sorted_vals(size_t(n));
    std::vector<double> sorted_vecs(size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        int src = order[size_t(i)];
        sorted_vals[size_t(i)] = values[size_t(src)];
        int pivot = 0;
        double best = -1.0;
        for (int k = 0; k < n; ++k) {
            double mag = std::abs(vectors[size_t(k) * n + src]);
            if (mag > best) {
                best = mag;
                pivot = k;
            }
        }
        double sign = vectors[size_t(pivot) * n + src] >= 0 ? 1.0 : -1.0;
        for (int k = 0; k < n; ++k)
            sorted_vecs[size_t(k) * n + i] = sign * vectors[size_t(k) * n + src];
    }
    values = std::move(sorted_vals);
    vectors = std::move(sorted_vecs);
}

// Whitening transform of the 8 coefficient channels under an exponential
// pixel-correlation model.
std::vector<double> whitening_transform(int window, double rho, const std::vector<cd>& wa) {
    int r = window / 2;
    int n2 = window * window;

    // M: 8 x W^2, rows ordered like the quantizer bits (Re F1..F4, Im F1..F4).
    std::vector<double> M(size_t(8) * n2, 0.0);
    for (int n = 0; n < window; ++n) {
        for (int m = 0; m < window; ++m) {
            cd ones(1.0, 0.0);
            cd w1 = wa[size_t(m)] * ones;                           // u1 = (a, 0)
            cd w2 = wa[size_t(n)] * ones;                           // u2 = (0, a)
            cd w3 = wa[size_t(m)] * wa[size_t(n)];                  // u3 = (a, a)
            cd w4 = wa[size_t(m)] * std::conj(wa[size_t(n)]);       // u4 = (a, -a)
            int col = n * window + m;
            const cd ws[4] = {w1, w2, w3, w4};
            for (int j = 0; j < 4; ++j) {
                M[size_t(j) * n2 + col] = ws[j].real();
                M[size_t(4 + j) * n2 + col] = ws[j].imag();
            }
        }
    }

    // C: W^2 x W^2 with C_pq = rho^dist(p, q).
    std::vector<double> C(size_t(n2) * n2);
    for (int p = 0; p < n2; ++p) {
        int py = p / window - r, px = p % window - r;
        for (int q = 0; q < n2; ++q) {
            int qy = q / window - r, qx = q % window - r;
            double d = std::hypot(double(px - qx), double(py - qy));
            C[size_t(p) * n2 + q] = std::pow(rho, d);
        }
    }

    // D = M C M^T, 8x8.
    std::vector<double> MC(size_t(8) * n2, 0.0);
    for (int i = 0; i < 8; ++i)
        for (int kk = 0; kk < n2; ++kk) {
            double m_ik = M[size_t(i) * n2 + kk];
            if (m_ik == 0.0) continue;
            for (int j = 0; j < n2; ++j) MC[size_t(i) * n2 + j] += m_ik * C[size_t(kk) * n2 + j];
        }
    std::vector<double> D(64, 0.0);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            double s = 0.0;
            for (int kk = 0; kk < n2; ++kk) s += MC[size_t(i) * n2 + kk] * M[size_t(j) * n2 + kk];
            D[size_t(i) * 8 + j] = s;
        }

    std::vector<double> values, vectors;
    jacobi_eigen(D, 8, values, vectors);

    // Rows of the transform = eigenvectors (V^T).
    std::vector<double> U(64);
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) U[size_t(i) * 8 + k] = vectors[size_t(k) * 8 + i];
    return U;
}

} // namespace

HistogramFeature lpq_histogram(const GrayImage& block, const LpqParams& params) {
    int window = params.window;
    if (window < 3 || window % 2 == 0)
        throw Error(ErrorCode::ConfigError, "LPQ window must be odd and >= 3");
    if (block.width < window || block.height < window)
        throw Error(ErrorCode::BlockTooSmall,
                    "block smaller than LPQ window " + std::to_string(window));

    int r = window / 2;
    auto wa = stft_filter(window);
    std::vector<double> U;
    if (params.decorrelate) U = whitening_transform(window, params.rho, wa);

    HistogramFeature out;
    out.kind = DescriptorKind::Lpq;
    out.norm = Normalization::RawCounts;
    out.bins.assign(256, 0.0);

    std::vector<double> g(size_t(window) * window);
    for (int y = r; y < block.height - r; ++y) {
        for (int x = r; x < block.width - r; ++x) {
            double center = block.at(x, y);
            for (int n = -r; n <= r; ++n)
                for (int m = -r; m <= r; ++m)
                    g[size_t(n + r) * window + size_t(m + r)] = block.at(x + m, y + n) - center;

            WindowCoeffs wc = window_coeffs(g, window, wa);
            double channels[8] = {wc.f[0].real(), wc.f[1].real(), wc.f[2].real(),
                                  wc.f[3].real(), wc.f[0].imag(), wc.f[1].imag(),
                                  wc.f[2].imag(), wc.f[3].imag()};
            if (params.decorrelate) {
                double white[8];
                for (int i = 0; i < 8; ++i) {
                    double s = 0.0;
                    for (int k = 0; k < 8; ++k) s += U[size_t(i) * 8 + k] * channels[k];
                    white[i] = s;
                }
                std::copy(white, white + 8, channels);
            }
            uint32_t code = 0;
            for (int k = 0; k < 8; ++k)
                if (channels[k] >= 0.0) code |= 1u << k;
            out.bins[code] += 1.0;
        }
    }
    return out;
}

} // namespace wid
