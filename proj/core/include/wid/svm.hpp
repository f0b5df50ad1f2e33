#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wid {

// Row-major instance matrix.
struct RowMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<double> data;

    RowMatrix() = default;
    RowMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    std::span<const double> row(size_t i) const { return {&data[i * cols], cols}; }
    std::span<double> row(size_t i) { return {&data[i * cols], cols}; }
    void append_row(std::span<const double> v);
};

enum class KernelType { Linear, Rbf };

struct Kernel {
    KernelType type = KernelType::Rbf;
    double gamma = 0.125;

    double operator()(std::span<const double> a, std::span<const double> b) const;
};

struct SvmParams {
    double c = 1.0;
    Kernel kernel;
    double tolerance = 1e-3;
    long max_iterations = 0; // 0 = 10000 * n, capped
};

struct SvmBinaryModel {
    std::string positive_class_id;
    Kernel kernel;
    double bias = 0.0;
    RowMatrix support_vectors;
    std::vector<double> alphas; // in (0, C]
    std::vector<double> coeffs; // alpha_i * y_i

    double decision_value(std::span<const double> x) const;
    // sum(alpha) - 1/2 sum_ij coeff_i coeff_j K(sv_i, sv_j)
    double dual_objective() const;
};

// Deterministic SMO with maximal-violating-pair working-set selection.
// labels must be +1/-1 with both classes present (DegenerateLabels otherwise);
// all rows must share the matrix dimension (ShapeError is raised on use of a
// mismatching instance).
SvmBinaryModel train_binary(const RowMatrix& instances, const std::vector<int>& labels,
                            const SvmParams& params);

} // namespace wid
