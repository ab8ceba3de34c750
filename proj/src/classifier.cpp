#include "tumorml/classifier.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "tumorml/error.hpp"

namespace tumorml {

Algo algo_from_name(const std::string& name) {
    if (name == "tree") return Algo::Tree;
    if (name == "forest") return Algo::Forest;
    if (name == "adaboost") return Algo::AdaBoost;
    if (name == "svm") return Algo::Svm;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algo_name(Algo algo) {
    switch (algo) {
        case Algo::Tree: return "tree";
        case Algo::Forest: return "forest";
        case Algo::AdaBoost: return "adaboost";
        case Algo::Svm: return "svm";
    }
    return "?";
}

TrainedClassifier fit_classifier(const Matrix& X, std::span<const int> y,
                                 const ClassifierConfig& config, std::uint64_t seed) {
    switch (config.algo) {
        case Algo::Tree: {
            TreeFitOptions opt;
            opt.max_depth = config.tree.max_depth;
            opt.min_samples_split = config.tree.min_samples_split;
            return fit_decision_tree(X, y, opt);
        }
        case Algo::Forest:
            return fit_random_forest(X, y, config.forest, seed);
        case Algo::AdaBoost:
            return fit_adaboost(X, y, config.adaboost.rounds);
        case Algo::Svm:
            return fit_svm(X, y, config.svm);
    }
    throw std::invalid_argument("fit_classifier: bad algorithm");
}

int predict(const TrainedClassifier& model, std::span<const double> x) {
    return std::visit([&](const auto& m) { return predict(m, x); }, model);
}

namespace {

// %.17g round-trips doubles exactly, which keeps loaded models
// prediction-identical to the originals.
void put(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
}

double get_double(std::istream& in) {
    double v;
    if (!(in >> v)) throw ParseError("classifier model: expected a number");
    return v;
}

long get_long(std::istream& in) {
    long v;
    if (!(in >> v)) throw ParseError("classifier model: expected an integer");
    return v;
}

void write_tree(const DecisionTreeModel& tree, std::ostream& out) {
    out << "tree " << tree.n_features << ' ' << tree.nodes.size() << '\n';
    for (const TreeNode& n : tree.nodes) {
        out << n.feature << ' ';
        put(out, n.threshold);
        out << ' ' << n.left << ' ' << n.right << ' ' << n.label << ' ';
        put(out, n.count0);
        out << ' ';
        put(out, n.count1);
        out << '\n';
    }
}

DecisionTreeModel read_tree_body(std::istream& in) {
    DecisionTreeModel tree;
    tree.n_features = static_cast<std::size_t>(get_long(in));
    const long n_nodes = get_long(in);
    tree.nodes.resize(n_nodes);
    for (TreeNode& n : tree.nodes) {
        n.feature = static_cast<int>(get_long(in));
        n.threshold = get_double(in);
        n.left = static_cast<int>(get_long(in));
        n.right = static_cast<int>(get_long(in));
        n.label = static_cast<int>(get_long(in));
        n.count0 = get_double(in);
        n.count1 = get_double(in);
    }
    return tree;
}

DecisionTreeModel read_tree(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "tree")
        throw ParseError("classifier model: expected 'tree' block");
    return read_tree_body(in);
}

}  // namespace

void save_classifier(const TrainedClassifier& model, std::ostream& out) {
    if (const auto* tree = std::get_if<DecisionTreeModel>(&model)) {
        write_tree(*tree, out);
        return;
    }
    if (const auto* forest = std::get_if<RandomForestModel>(&model)) {
        const auto& p = forest->params;
        out << "forest " << forest->trees.size() << ' ' << p.max_depth << ' '
            << p.min_samples_split << ' ' << p.features_per_split << ' '
            << (p.bootstrap ? 1 : 0) << '\n';
        for (std::uint64_t s : forest->tree_seeds) out << s << ' ';
        out << '\n';
        for (const auto& tree : forest->trees) write_tree(tree, out);
        return;
    }
    if (const auto* ada = std::get_if<AdaBoostModel>(&model)) {
        out << "adaboost " << ada->rounds << ' ' << ada->stumps.size() << '\n';
        for (std::size_t t = 0; t < ada->stumps.size(); ++t) {
            put(out, ada->alphas[t]);
            out << ' ';
            put(out, ada->stump_errors[t]);
            out << '\n';
        }
        for (const auto& stump : ada->stumps) write_tree(stump, out);
        return;
    }
    const auto& svm = std::get<SvmModel>(model);
    out << "svm " << kernel_name(svm.spec.kind) << ' ';
    put(out, svm.spec.C);
    out << ' ' << gamma_mode_name(svm.spec.gamma_mode) << ' ' << svm.spec.degree << ' ';
    put(out, svm.gamma);
    out << ' ';
    put(out, svm.bias);
    out << ' ' << svm.support_vectors.rows() << ' ' << svm.support_vectors.cols() << '\n';
    for (std::size_t i = 0; i < svm.support_vectors.rows(); ++i) {
        put(out, svm.dual_coef[i]);
        for (double v : svm.support_vectors.row(i)) {
            out << ' ';
            put(out, v);
        }
        out << '\n';
    }
}

TrainedClassifier load_classifier(std::istream& in) {
    std::string tag;
    if (!(in >> tag)) throw ParseError("classifier model: empty input");

    if (tag == "tree") return read_tree_body(in);
    if (tag == "forest") {
        RandomForestModel forest;
        const long n_trees = get_long(in);
        forest.params.n_trees = static_cast<int>(n_trees);
        forest.params.max_depth = static_cast<int>(get_long(in));
        forest.params.min_samples_split = static_cast<int>(get_long(in));
        forest.params.features_per_split = static_cast<int>(get_long(in));
        forest.params.bootstrap = get_long(in) != 0;
        forest.tree_seeds.resize(n_trees);
        for (auto& s : forest.tree_seeds) {
            unsigned long long v;
            if (!(in >> v)) throw ParseError("classifier model: expected a seed");
            s = v;
        }
        forest.trees.reserve(n_trees);
        for (long t = 0; t < n_trees; ++t) forest.trees.push_back(read_tree(in));
        return forest;
    }
    if (tag == "adaboost") {
        AdaBoostModel ada;
        ada.rounds = static_cast<int>(get_long(in));
        const long n_stumps = get_long(in);
        ada.alphas.resize(n_stumps);
        ada.stump_errors.resize(n_stumps);
        for (long t = 0; t < n_stumps; ++t) {
            ada.alphas[t] = get_double(in);
            ada.stump_errors[t] = get_double(in);
        }
        ada.stumps.reserve(n_stumps);
        for (long t = 0; t < n_stumps; ++t) ada.stumps.push_back(read_tree(in));
        return ada;
    }
    if (tag == "svm") {
        SvmModel svm;
        std::string word;
        if (!(in >> word)) throw ParseError("classifier model: expected kernel name");
        svm.spec.kind = kernel_from_name(word);
        svm.spec.C = get_double(in);
        if (!(in >> word)) throw ParseError("classifier model: expected gamma mode");
        svm.spec.gamma_mode = gamma_mode_from_name(word);
        svm.spec.degree = static_cast<int>(get_long(in));
        svm.gamma = get_double(in);
        svm.bias = get_double(in);
        const long n_sv = get_long(in);
        const long dim = get_long(in);
        svm.support_vectors = Matrix(n_sv, dim);
        svm.dual_coef.resize(n_sv);
        for (long i = 0; i < n_sv; ++i) {
            svm.dual_coef[i] = get_double(in);
            for (long j = 0; j < dim; ++j) svm.support_vectors(i, j) = get_double(in);
        }
        return svm;
    }
    throw ParseError("classifier model: unknown variant '" + tag + "'");
}

}  // namespace tumorml
