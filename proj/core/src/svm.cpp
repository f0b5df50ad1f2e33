#include "wid/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <unordered_map>

#include "wid/error.hpp"

namespace wid {

void RowMatrix::append_row(std::span<const double> v) {
    if (rows == 0 && cols == 0) cols = v.size();
    if (v.size() != cols)
        throw Error(ErrorCode::ShapeError, "row dimension mismatch");
    data.insert(data.end(), v.begin(), v.end());
    ++rows;
}

double Kernel::operator()(std::span<const double> a, std::span<const double> b) const {
    if (a.size() != b.size()) throw Error(ErrorCode::ShapeError, "kernel dimension mismatch");
    if (type == KernelType::Linear) {
        double dot = 0.0;
        for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
        return dot;
    }
    double d2 = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        d2 += d * d;
    }
    return std::exp(-gamma * d2);
}

double SvmBinaryModel::decision_value(std::span<const double> x) const {
    double sum = bias;
    for (size_t i = 0; i < support_vectors.rows; ++i)
        sum += coeffs[i] * kernel(support_vectors.row(i), x);
    return sum;
}

double SvmBinaryModel::dual_objective() const {
    double obj = 0.0;
    for (double a : alphas) obj += a;
    for (size_t i = 0; i < support_vectors.rows; ++i)
        for (size_t j = 0; j < support_vectors.rows; ++j)
            obj -= 0.5 * coeffs[i] * coeffs[j] * kernel(support_vectors.row(i),
                                                        support_vectors.row(j));
    return obj;
}

namespace {

// LRU cache of kernel matrix rows. Rows are recomputed on miss, so eviction
// never changes results.
class KernelRowCache {
public:
    KernelRowCache(const RowMatrix& x, const Kernel& kernel, size_t max_bytes)
        : x_(x), kernel_(kernel) {
        max_rows_ = std::max<size_t>(2, max_bytes / (sizeof(double) * std::max<size_t>(1, x.rows)));
    }

    const std::vector<double>& row(size_t i) {
        auto it = map_.find(i);
        if (it != map_.end()) {
            lru_.splice(lru_.begin(), lru_, it->second.second);
            return it->second.first;
        }
        if (map_.size() >= max_rows_) {
            size_t victim = lru_.back();
            lru_.pop_back();
            map_.erase(victim);
        }
        std::vector<double> values(x_.rows);
        auto xi = x_.row(i);
        for (size_t j = 0; j < x_.rows; ++j) values[j] = kernel_(xi, x_.row(j));
        lru_.push_front(i);
        auto [pos, inserted] = map_.emplace(i, std::make_pair(std::move(values), lru_.begin()));
        return pos->second.first;
    }

private:
    const RowMatrix& x_;
    Kernel kernel_;
    size_t max_rows_;
    std::list<size_t> lru_;
    std::unordered_map<size_t, std::pair<std::vector<double>, std::list<size_t>::iterator>> map_;
};

} // namespace

SvmBinaryModel train_binary(const RowMatrix& x, const std::vector<int>& labels,
                            const SvmParams& params) {
    size_t n = x.rows;
    if (labels.size() != n) throw Error(ErrorCode::ShapeError, "labels/instances size mismatch");
    bool has_pos = false, has_neg = false;
    for (int y : labels) {
        if (y == 1) has_pos = true;
        else if (y == -1) has_neg = true;
        else throw Error(ErrorCode::DegenerateLabels, "labels must be +1 or -1");
    }
    if (!has_pos || !has_neg)
        throw Error(ErrorCode::DegenerateLabels, "both classes must be present");

    const double c = params.c;
    const double tol = params.tolerance;
    long max_iter = params.max_iterations > 0
                        ? params.max_iterations
                        : std::min<long>(long(10000) * long(n), 20000000L);

    std::vector<double> alpha(n, 0.0);
    // gradient of the dual objective in minimization form: grad_i = (Q a)_i - 1
    std::vector<double> grad(n, -1.0);
    KernelRowCache cache(x, params.kernel, size_t(256) << 20);

    for (long iter = 0; iter < max_iter; ++iter) {
        // maximal violating pair
        int i = -1, j = -1;
        double gmax = -std::numeric_limits<double>::infinity();
        double gmin = std::numeric_limits<double>::infinity();
        for (size_t t = 0; t < n; ++t) {
            double yg = -labels[t] * grad[t];
            bool in_up = (labels[t] == 1 && alpha[t] < c) || (labels[t] == -1 && alpha[t] > 0);
            bool in_low = (labels[t] == 1 && alpha[t] > 0) || (labels[t] == -1 && alpha[t] < c);
            if (in_up && yg > gmax) {
                gmax = yg;
                i = int(t);
            }
            if (in_low && yg < gmin) {
                gmin = yg;
                j = int(t);
            }
        }
        if (i < 0 || j < 0 || gmax - gmin <= tol) break;

        const auto& ki = cache.row(size_t(i));
        const auto& kj = cache.row(size_t(j));
        double qii = ki[size_t(i)];
        double qjj = kj[size_t(j)];
        double qij = double(labels[i]) * labels[j] * ki[size_t(j)];
        double quad = qii + qjj - 2.0 * double(labels[i]) * labels[j] * ki[size_t(j)];
        (void)qij;
        if (quad <= 0) quad = 1e-12;

        // max feasible step along the (i, j) pair direction
        double delta = (gmax - gmin) / quad;
        double step = delta;
        if (labels[i] == 1) step = std::min(step, c - alpha[size_t(i)]);
        else step = std::min(step, alpha[size_t(i)]);
        if (labels[j] == 1) step = std::min(step, alpha[size_t(j)]);
        else step = std::min(step, c - alpha[size_t(j)]);
        if (step <= 0) break;

        alpha[size_t(i)] += labels[i] * step;
        alpha[size_t(j)] -= labels[j] * step;
        for (size_t t = 0; t < n; ++t) {
            grad[t] += step * labels[t] * (ki[t] * labels[i] - kj[t] * labels[j]);
        }
    }

    // bias from the KKT conditions: average over free vectors, midpoint of the
    // violating-pair bounds when none are free.
    double rho_sum = 0.0;
    int rho_count = 0;
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    for (size_t t = 0; t < n; ++t) {
        double yg = -labels[t] * grad[t];
        bool in_up = (labels[t] == 1 && alpha[t] < c) || (labels[t] == -1 && alpha[t] > 0);
        bool in_low = (labels[t] == 1 && alpha[t] > 0) || (labels[t] == -1 && alpha[t] < c);
        if (alpha[t] > 0 && alpha[t] < c) {
            rho_sum += yg;
            ++rho_count;
        }
        if (in_up) ub = std::min(ub, -yg);
        if (in_low) lb = std::max(lb, -yg);
    }
    double bias = rho_count > 0 ? rho_sum / rho_count : -(ub + lb) / 2.0;

    SvmBinaryModel model;
    model.kernel = params.kernel;
    model.bias = bias;
    model.support_vectors.cols = x.cols;
    for (size_t t = 0; t < n; ++t) {
        if (alpha[t] <= 0) continue;
        model.support_vectors.append_row(x.row(t));
        model.alphas.push_back(alpha[t]);
        model.coeffs.push_back(alpha[t] * labels[t]);
    }
    return model;
}

} // namespace wid
