#include "tumorml/pca.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tumorml/error.hpp"

namespace tumorml {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapRows = Eigen::Map<const RowMajor>;

/// Positive largest-magnitude entry, first index on ties.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    Eigen::Index idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    if (v(idx) < 0.0) v = -v;
}

}  // namespace

PcaModel pca_fit(const Matrix& train, std::size_t k) {
    const std::size_t n = train.rows();
    const std::size_t d = train.cols();
    if (n < 2) throw std::invalid_argument("pca_fit: need at least 2 samples");
    if (k < 1 || k > std::min(n - 1, d))
        throw std::invalid_argument("pca_fit: k must be in [1, min(n-1, d)]");

    MapRows X(train.data(), n, d);

    PcaModel model;
    model.mean.resize(d);
    Eigen::Map<Eigen::VectorXd> mean(model.mean.data(), d);
    mean = X.colwise().mean().transpose();

    RowMajor centered = X.rowwise() - mean.transpose();

    // Gram matrix route: the n x n spectrum equals the covariance spectrum on
    // the top n-1 components, and d x d is out of reach at d ~ 90,000.
    Eigen::MatrixXd gram = (centered * centered.transpose()) / static_cast<double>(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("pca_fit: eigendecomposition failed");

    // Eigen returns ascending order; take the top k descending.
    Eigen::MatrixXd top_vectors(n, k);
    model.explained_variance.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const Eigen::Index src = static_cast<Eigen::Index>(n - 1 - j);
        top_vectors.col(j) = solver.eigenvectors().col(src);
        model.explained_variance[j] = std::max(solver.eigenvalues()(src), 0.0);
    }

    // Lift sample-space eigenvectors to feature space. ||centered^T v|| equals
    // sqrt((n-1) lambda), so normalizing by the actual norm is the stable form.
    RowMajor lifted = centered.transpose() * top_vectors;  // d x k

    model.components = Matrix(k, d);
    const double scale = std::max(1.0, centered.norm());
    std::vector<Eigen::Map<Eigen::VectorXd>> done;
    done.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        Eigen::VectorXd u = lifted.col(j);
        // Modified Gram-Schmidt against earlier components; exact arithmetic
        // already gives orthogonality, this removes the float residue and
        // catches rank-deficient tails.
        for (const auto& q : done) u -= q.dot(u) * q;
        double norm = u.norm();
        if (norm <= 1e-12 * scale) {
            // Zero eigenvalue: complete the basis from canonical vectors.
            for (std::size_t t = 0; t < d; ++t) {
                u.setZero();
                u(t) = 1.0;
                for (const auto& q : done) u -= q.dot(u) * q;
                norm = u.norm();
                if (norm > 0.5) break;
            }
        }
        u /= norm;
        fix_sign(u);
        Eigen::Map<Eigen::VectorXd> out(model.components.row(j).data(), d);
        out = u;
        done.push_back(out);
    }
    return model;
}

std::vector<double> pca_transform(const PcaModel& model, std::span<const double> x) {
    const std::size_t d = model.dim();
    const std::size_t k = model.n_components();
    if (x.size() != d)
        throw std::invalid_argument("pca_transform: expected length " + std::to_string(d));

    Eigen::Map<const Eigen::VectorXd> xv(x.data(), d);
    Eigen::Map<const Eigen::VectorXd> mean(model.mean.data(), d);
    MapRows comps(model.components.data(), k, d);

    std::vector<double> out(k);
    Eigen::Map<Eigen::VectorXd>(out.data(), k) = comps * (xv - mean);
    return out;
}

Matrix pca_transform(const PcaModel& model, const Matrix& x) {
    const std::size_t d = model.dim();
    const std::size_t k = model.n_components();
    if (x.cols() != d)
        throw std::invalid_argument("pca_transform: expected width " + std::to_string(d));

    MapRows X(x.data(), x.rows(), d);
    Eigen::Map<const Eigen::VectorXd> mean(model.mean.data(), d);
    MapRows comps(model.components.data(), k, d);

    Matrix out(x.rows(), k);
    Eigen::Map<RowMajor> O(out.data(), x.rows(), k);
    O = (X.rowwise() - mean.transpose()) * comps.transpose();
    return out;
}

namespace {

void append_values(std::string& line, std::span<const double> values) {
    char buf[40];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), i ? " %.9g" : "%.9g", values[i]);
        line += buf;
    }
    line += '\n';
}

std::vector<double> parse_values(const std::string& line, std::size_t line_no) {
    std::vector<double> out;
    const char* p = line.c_str();
    char* after = nullptr;
    while (*p) {
        double v = std::strtod(p, &after);
        if (after == p) {
            if (std::string(p).find_first_not_of(" \t\r") == std::string::npos) break;
            throw ParseError("pca model line " + std::to_string(line_no) +
                             ": non-numeric field");
        }
        out.push_back(v);
        p = after;
    }
    return out;
}

}  // namespace

void save_pca(const PcaModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());

    std::string line = "mean ";
    append_values(line, model.mean);
    out << line;
    for (std::size_t j = 0; j < model.n_components(); ++j) {
        line.clear();
        append_values(line, model.components.row(j));
        out << line;
    }
    line.clear();
    append_values(line, model.explained_variance);
    out << line;
    if (!out) throw IoError("write failed: " + path.string());
}

PcaModel load_pca(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() < 3)
        throw ParseError("pca model: expected mean, components and variance lines");
    if (lines.front().rfind("mean", 0) != 0)
        throw ParseError("pca model line 1: expected 'mean'");

    PcaModel model;
    model.mean = parse_values(lines.front().substr(4), 1);
    const std::size_t d = model.mean.size();
    const std::size_t k = lines.size() - 2;

    model.components = Matrix(k, d);
    for (std::size_t j = 0; j < k; ++j) {
        auto values = parse_values(lines[1 + j], 2 + j);
        if (values.size() != d)
            throw ParseError("pca model line " + std::to_string(2 + j) +
                             ": expected " + std::to_string(d) + " fields");
        std::copy(values.begin(), values.end(), model.components.row(j).begin());
    }
    model.explained_variance = parse_values(lines.back(), lines.size());
    if (model.explained_variance.size() != k)
        throw ParseError("pca model: variance line must have one value per component");
    return model;
}

}  // namespace tumorml
