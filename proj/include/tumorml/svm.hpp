#pragma once

#include <span>
#include <string>
#include <vector>

#include "tumorml/matrix.hpp"

namespace tumorml {

enum class KernelKind { Linear, Polynomial, Rbf, Sigmoid };
enum class GammaMode { Auto, Scale };

/// SVM hyperparameter cell. degree only affects the polynomial kernel but is
/// carried (and reported) for every kernel.
struct KernelSpec {
    KernelKind kind = KernelKind::Rbf;
    double C = 1.0;
    GammaMode gamma_mode = GammaMode::Scale;
    int degree = 3;
};

std::string kernel_name(KernelKind kind);
std::string gamma_mode_name(GammaMode mode);
KernelKind kernel_from_name(const std::string& name);
GammaMode gamma_mode_from_name(const std::string& name);

/// linear <x,y>; polynomial (gamma <x,y>)^degree; rbf exp(-gamma |x-y|^2);
/// sigmoid tanh(gamma <x,y>). coef0 is 0 throughout.
double kernel_eval(const KernelSpec& spec, double gamma, std::span<const double> x,
                   std::span<const double> y);

/// auto -> 1/k; scale -> 1/(k * Var) with Var the variance of all training
/// entries pooled. Zero pooled variance is a degenerate-data error.
double resolve_gamma(GammaMode mode, const Matrix& train);

struct SvmModel {
    KernelSpec spec;
    double gamma = 0.0;             // resolved at fit time
    Matrix support_vectors;         // training rows with alpha > 1e-8
    std::vector<double> dual_coef;  // alpha_i * y_i per support vector
    double bias = 0.0;
};

/// Dual objective after each accepted pair update (solver diagnostics).
struct SmoTrace {
    std::vector<double> dual_objective;
};

/// Soft-margin dual via SMO. Pair selection is a deterministic first-violator
/// scan with the maximal |E_i - E_j| partner (index-order fallback when that
/// partner yields no step); KKT tolerance 1e-3; converged when a full pass
/// finds no violator. Throws ConvergenceError with the KKT residual after
/// max_passes full sweeps.
SvmModel fit_svm(const Matrix& X, std::span<const int> y, const KernelSpec& spec,
                 SmoTrace* trace = nullptr, int max_passes = 0 /* 0 = 10n */);

/// sum alpha_i y_i K(sv_i, x) + bias.
double decision_function(const SvmModel& model, std::span<const double> x);

/// sign(decision_function) mapped to {0,1}; zero predicts 0.
int predict(const SvmModel& model, std::span<const double> x);

}  // namespace tumorml
