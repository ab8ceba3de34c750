#include "tumorml/svm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tumorml/error.hpp"

namespace tumorml {

std::string kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::Linear: return "linear";
        case KernelKind::Polynomial: return "polynomial";
        case KernelKind::Rbf: return "rbf";
        case KernelKind::Sigmoid: return "sigmoid";
    }
    return "?";
}

std::string gamma_mode_name(GammaMode mode) {
    return mode == GammaMode::Auto ? "auto" : "scale";
}

KernelKind kernel_from_name(const std::string& name) {
    if (name == "linear") return KernelKind::Linear;
    if (name == "polynomial" || name == "poly") return KernelKind::Polynomial;
    if (name == "rbf") return KernelKind::Rbf;
    if (name == "sigmoid") return KernelKind::Sigmoid;
    throw std::invalid_argument("unknown kernel: " + name);
}

GammaMode gamma_mode_from_name(const std::string& name) {
    if (name == "auto") return GammaMode::Auto;
    if (name == "scale") return GammaMode::Scale;
    throw std::invalid_argument("unknown gamma mode: " + name);
}

double kernel_eval(const KernelSpec& spec, double gamma, std::span<const double> x,
                   std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("kernel_eval: dimension mismatch");

    if (spec.kind == KernelKind::Rbf) {
        double dist2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double diff = x[i] - y[i];
            dist2 += diff * diff;
        }
        return std::exp(-gamma * dist2);
    }

    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
    switch (spec.kind) {
        case KernelKind::Linear: return dot;
        case KernelKind::Polynomial: return std::pow(gamma * dot, spec.degree);
        case KernelKind::Sigmoid: return std::tanh(gamma * dot);
        default: return dot;  // unreachable
    }
}

double resolve_gamma(GammaMode mode, const Matrix& train) {
    if (train.rows() == 0 || train.cols() == 0)
        throw std::invalid_argument("resolve_gamma: empty training features");
    const double k = static_cast<double>(train.cols());
    if (mode == GammaMode::Auto) return 1.0 / k;

    // Pooled population variance over every entry, two-pass for stability.
    const std::size_t count = train.rows() * train.cols();
    const double* data = train.data();
    double mean = 0.0;
    for (std::size_t i = 0; i < count; ++i) mean += data[i];
    mean /= static_cast<double>(count);
    double var = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double diff = data[i] - mean;
        var += diff * diff;
    }
    var /= static_cast<double>(count);
    if (var <= 0.0)
        throw std::runtime_error("resolve_gamma: zero pooled variance (degenerate data)");
    return 1.0 / (k * var);
}

namespace {

constexpr double kTol = 1e-3;       // KKT violation tolerance
constexpr double kStepEps = 1e-12;  // minimum useful alpha move
constexpr double kSvEps = 1e-8;     // support-vector cutoff

class SmoSolver {
public:
    SmoSolver(const Matrix& X, std::span<const int> y01, const KernelSpec& spec,
              double gamma, SmoTrace* trace)
        : n_(X.rows()), C_(spec.C), trace_(trace) {
        y_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) y_[i] = y01[i] == 1 ? 1.0 : -1.0;

        kernel_ = Matrix(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const double v = kernel_eval(spec, gamma, X.row(i), X.row(j));
                kernel_(i, j) = v;
                kernel_(j, i) = v;
            }

        alpha_.assign(n_, 0.0);
        cache_.assign(n_, 0.0);  // cache_[i] = sum_j alpha_j y_j K_ij, bias excluded
    }

    /// Full first-violator sweeps until a pass finds no KKT violator.
    void solve(int max_passes) {
        for (int pass = 0; pass < max_passes; ++pass) {
            std::size_t violators = 0;
            std::size_t changed = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if (!violates(i)) continue;
                ++violators;
                if (examine(i)) ++changed;
            }
            if (violators == 0) return;
            if (changed == 0)
                throw ConvergenceError(
                    "svm_fit: SMO stalled with KKT residual " + std::to_string(residual()),
                    residual());
        }
        throw ConvergenceError(
            "svm_fit: no convergence after " + std::to_string(max_passes) +
                " passes, KKT residual " + std::to_string(residual()),
            residual());
    }

    std::span<const double> alphas() const { return alpha_; }
    double bias() const { return b_; }
    double residual() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double ye = y_[i] * error(i);
            if (alpha_[i] < C_) worst = std::max(worst, -ye);
            if (alpha_[i] > 0.0) worst = std::max(worst, ye);
        }
        return worst;
    }

private:
    double error(std::size_t i) const { return cache_[i] + b_ - y_[i]; }

    bool violates(std::size_t i) const {
        const double ye = y_[i] * error(i);
        return (ye < -kTol && alpha_[i] < C_) || (ye > kTol && alpha_[i] > 0.0);
    }

    /// Second-choice heuristic: the partner maximizing |E_i - E_j|, then an
    /// index-order fallback so progress is never missed while a violator
    /// remains.
    bool examine(std::size_t i1) {
        const double e1 = error(i1);
        std::size_t best = i1;
        double best_gap = -1.0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (j == i1) continue;
            const double gap = std::abs(e1 - error(j));
            if (gap > best_gap) {
                best_gap = gap;
                best = j;
            }
        }
        if (best != i1 && take_step(i1, best)) return true;
        for (std::size_t j = 0; j < n_; ++j)
            if (j != i1 && j != best && take_step(i1, j)) return true;
        return false;
    }

    bool take_step(std::size_t i1, std::size_t i2) {
        const double a1 = alpha_[i1], a2 = alpha_[i2];
        const double y1 = y_[i1], y2 = y_[i2];
        const double e1 = error(i1), e2 = error(i2);
        const double s = y1 * y2;

        double lo, hi;
        if (s < 0.0) {
            lo = std::max(0.0, a2 - a1);
            hi = std::min(C_, C_ + a2 - a1);
        } else {
            lo = std::max(0.0, a1 + a2 - C_);
            hi = std::min(C_, a1 + a2);
        }
        if (lo >= hi) return false;

        const double k11 = kernel_(i1, i1), k12 = kernel_(i1, i2), k22 = kernel_(i2, i2);
        const double eta = k11 + k22 - 2.0 * k12;

        double a2_new;
        if (eta > 0.0) {
            a2_new = std::clamp(a2 + y2 * (e1 - e2) / eta, lo, hi);
        } else {
            // Dual is convex along the pair line: compare the endpoints.
            // dW(t) = W'(a2) (t - a2) - eta (t - a2)^2 / 2 with W'(a2) = y2 (e1 - e2).
            const double slope = y2 * (e1 - e2);
            const double dlo = slope * (lo - a2) - 0.5 * eta * (lo - a2) * (lo - a2);
            const double dhi = slope * (hi - a2) - 0.5 * eta * (hi - a2) * (hi - a2);
            if (dlo > dhi + kStepEps)
                a2_new = lo;
            else if (dhi > dlo + kStepEps)
                a2_new = hi;
            else if (dlo > kStepEps)
                a2_new = lo;  // equal gains, both positive: deterministic pick
            else
                return false;
        }
        if (std::abs(a2_new - a2) < kStepEps * (a2_new + a2 + kStepEps)) return false;

        const double a1_new = a1 + s * (a2 - a2_new);
        const double d1 = y1 * (a1_new - a1);
        const double d2 = y2 * (a2_new - a2);

        const double b1 = b_ - e1 - d1 * k11 - d2 * k12;
        const double b2 = b_ - e2 - d1 * k12 - d2 * k22;
        if (a1_new > 0.0 && a1_new < C_)
            b_ = b1;
        else if (a2_new > 0.0 && a2_new < C_)
            b_ = b2;
        else
            b_ = (b1 + b2) / 2.0;

        for (std::size_t i = 0; i < n_; ++i)
            cache_[i] += d1 * kernel_(i1, i) + d2 * kernel_(i2, i);
        alpha_[i1] = a1_new;
        alpha_[i2] = a2_new;

        if (trace_) {
            double w = 0.0;
            for (std::size_t i = 0; i < n_; ++i)
                w += alpha_[i] - 0.5 * alpha_[i] * y_[i] * cache_[i];
            trace_->dual_objective.push_back(w);
        }
        return true;
    }

    std::size_t n_;
    double C_;
    double b_ = 0.0;
    std::vector<double> y_;
    std::vector<double> alpha_;
    std::vector<double> cache_;
    Matrix kernel_;
    SmoTrace* trace_;
};

}  // namespace

SvmModel fit_svm(const Matrix& X, std::span<const int> y, const KernelSpec& spec,
                 SmoTrace* trace, int max_passes) {
    if (X.rows() == 0) throw std::invalid_argument("fit_svm: empty training set");
    if (y.size() != X.rows())
        throw std::invalid_argument("fit_svm: feature/label count mismatch");
    if (spec.C <= 0.0) throw std::invalid_argument("fit_svm: C must be positive");
    if (spec.degree < 1) throw std::invalid_argument("fit_svm: degree must be >= 1");
    bool has0 = false, has1 = false;
    for (int v : y) {
        if (v != 0 && v != 1) throw std::invalid_argument("fit_svm: labels must be 0 or 1");
        (v == 1 ? has1 : has0) = true;
    }
    if (!has0 || !has1)
        throw std::invalid_argument("fit_svm: both classes must be present");

    SvmModel model;
    model.spec = spec;
    model.gamma = resolve_gamma(spec.gamma_mode, X);

    SmoSolver solver(X, y, spec, model.gamma, trace);
    if (max_passes <= 0) max_passes = 10 * static_cast<int>(X.rows());
    solver.solve(max_passes);

    const auto alphas = solver.alphas();
    std::size_t n_sv = 0;
    for (double a : alphas)
        if (a > kSvEps) ++n_sv;

    model.support_vectors = Matrix(n_sv, X.cols());
    model.dual_coef.reserve(n_sv);
    std::size_t row = 0;
    for (std::size_t i = 0; i < X.rows(); ++i) {
        if (alphas[i] <= kSvEps) continue;
        auto src = X.row(i);
        std::copy(src.begin(), src.end(), model.support_vectors.row(row).begin());
        model.dual_coef.push_back(alphas[i] * (y[i] == 1 ? 1.0 : -1.0));
        ++row;
    }
    model.bias = solver.bias();
    return model;
}

double decision_function(const SvmModel& model, std::span<const double> x) {
    if (x.size() != model.support_vectors.cols())
        throw std::invalid_argument("svm predict: dimension mismatch");
    double f = model.bias;
    for (std::size_t i = 0; i < model.support_vectors.rows(); ++i)
        f += model.dual_coef[i] *
             kernel_eval(model.spec, model.gamma, model.support_vectors.row(i), x);
    return f;
}

int predict(const SvmModel& model, std::span<const double> x) {
    return decision_function(model, x) > 0.0 ? 1 : 0;
}

}  // namespace tumorml
