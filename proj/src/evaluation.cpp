#include "tumorml/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tumorml/rng.hpp"

namespace tumorml {

std::vector<std::size_t> split_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng.shuffle(perm);
    return perm;
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& ds, const SplitSpec& spec) {
    const std::size_t n = ds.size();
    if (n < 2) throw std::invalid_argument("train_test_split: need at least 2 rows");
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw std::invalid_argument("train_test_split: train_fraction must be in (0,1)");

    const auto n_train =
        static_cast<std::size_t>(std::floor(spec.train_fraction * static_cast<double>(n)));
    if (n_train < 1 || n_train >= n)
        throw std::invalid_argument("train_test_split: split leaves an empty side");

    const auto perm = split_permutation(n, spec.seed);
    const std::size_t d = ds.dim();

    auto take = [&](std::size_t from, std::size_t count) {
        Dataset part;
        part.features = Matrix(count, d);
        part.labels.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            const auto src = ds.features.row(perm[from + i]);
            std::copy(src.begin(), src.end(), part.features.row(i).begin());
            part.labels.push_back(ds.labels[perm[from + i]]);
        }
        return part;
    };
    return {take(0, n_train), take(n_train, n - n_train)};
}

double accuracy(std::span<const int> preds, std::span<const int> truth) {
    if (preds.size() != truth.size())
        throw std::invalid_argument("accuracy: length mismatch");
    if (truth.empty()) throw std::invalid_argument("accuracy: empty input");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (preds[i] == truth[i]) ++correct;
    return 100.0 * static_cast<double>(correct) / static_cast<double>(truth.size());
}

double class_recall(std::span<const int> preds, std::span<const int> truth, int cls) {
    if (preds.size() != truth.size())
        throw std::invalid_argument("class_recall: length mismatch");
    if (cls != 0 && cls != 1) throw std::invalid_argument("class_recall: cls must be 0 or 1");
    std::size_t total = 0, correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] != cls) continue;
        ++total;
        if (preds[i] == cls) ++correct;
    }
    if (total == 0)
        throw std::runtime_error("class_recall: undefined metric, class " +
                                 std::to_string(cls) + " absent from truth");
    return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

std::vector<PreparedRun> prepare_runs(const Dataset& ds, const EvalOptions& opt) {
    if (opt.runs < 1) throw std::invalid_argument("prepare_runs: runs must be >= 1");
    if (opt.external_features && opt.external_features->size() != ds.dim())
        throw std::invalid_argument("prepare_runs: external image width != dataset width");

    std::vector<PreparedRun> out;
    out.reserve(opt.runs);
    for (int r = 0; r < opt.runs; ++r) {
        const std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(r);
        try {
            auto [train, test] = train_test_split(ds, {opt.train_fraction, seed});
            // PCA sees the train rows only; the test side and the external
            // image are projected with the train-fit model.
            PcaModel pca = pca_fit(train.features, opt.k_pca);

            PreparedRun run;
            run.run = r;
            run.seed = seed;
            run.train_x = pca_transform(pca, train.features);
            run.train_y = std::move(train.labels);
            run.test_x = pca_transform(pca, test.features);
            run.test_y = std::move(test.labels);
            if (opt.external_features)
                run.external_reduced = pca_transform(pca, *opt.external_features);
            out.push_back(std::move(run));
        } catch (const std::exception& e) {
            throw std::runtime_error("run " + std::to_string(r) + ": " + e.what());
        }
    }
    return out;
}

RunRecord evaluate_run(const PreparedRun& run, const ClassifierConfig& config) {
    TrainedClassifier model = fit_classifier(run.train_x, run.train_y, config, run.seed);

    std::vector<int> preds;
    preds.reserve(run.test_y.size());
    for (std::size_t i = 0; i < run.test_x.rows(); ++i)
        preds.push_back(predict(model, run.test_x.row(i)));

    RunRecord rec;
    rec.run = run.run;
    rec.seed = run.seed;
    rec.accuracy_pct = accuracy(preds, run.test_y);
    for (int v : run.test_y) (v == 1 ? rec.n_test_sick : rec.n_test_not_sick) += 1;
    if (rec.n_test_sick > 0) rec.recall_sick = class_recall(preds, run.test_y, 1);
    if (rec.n_test_not_sick > 0) rec.recall_not_sick = class_recall(preds, run.test_y, 0);
    if (run.external_reduced)
        rec.external_is_tumor = predict(model, *run.external_reduced) == 1;
    return rec;
}

EvalReport summarize_runs(const std::string& algorithm, std::vector<RunRecord> records) {
    if (records.empty()) throw std::invalid_argument("summarize_runs: no records");

    EvalReport report;
    report.algorithm = algorithm;
    report.runs = static_cast<int>(records.size());

    double acc = 0.0, sick = 0.0, not_sick = 0.0;
    int n_sick = 0, n_not_sick = 0, n_external = 0, external_hits = 0;
    for (const RunRecord& rec : records) {
        acc += rec.accuracy_pct;
        if (rec.recall_sick) {
            sick += *rec.recall_sick;
            ++n_sick;
        }
        if (rec.recall_not_sick) {
            not_sick += *rec.recall_not_sick;
            ++n_not_sick;
        }
        if (rec.external_is_tumor) {
            ++n_external;
            if (*rec.external_is_tumor) ++external_hits;
        }
    }
    report.model_accuracy_pct = acc / report.runs;
    if (n_sick > 0) report.pct_sick = sick / n_sick;
    if (n_not_sick > 0) report.pct_not_sick = not_sick / n_not_sick;
    if (n_external > 0)
        report.pct_test = 100.0 * external_hits / static_cast<double>(records.size());
    report.records = std::move(records);
    return report;
}

EvalReport repeated_evaluate(const Dataset& ds, const ClassifierConfig& config,
                             const EvalOptions& opt) {
    const auto prepared = prepare_runs(ds, opt);
    std::vector<RunRecord> records;
    records.reserve(prepared.size());
    for (const PreparedRun& run : prepared) {
        try {
            records.push_back(evaluate_run(run, config));
        } catch (const std::exception& e) {
            throw std::runtime_error("run " + std::to_string(run.run) + ": " + e.what());
        }
    }
    return summarize_runs(algo_name(config.algo), std::move(records));
}

namespace {

std::string fmt_pct(const std::optional<double>& v) {
    if (!v) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", *v);
    return buf;
}

}  // namespace

std::string report_table(const EvalReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "Algorithm" << std::right
        << std::setw(20) << "Model Accuracy (%)" << std::setw(13) << "P. sick (%)"
        << std::setw(17) << "P. not sick (%)" << std::setw(13) << "P. Test (%)" << '\n';
    out << std::left << std::setw(12) << report.algorithm << std::right
        << std::setw(20) << fmt_pct(report.model_accuracy_pct)
        << std::setw(13) << fmt_pct(report.pct_sick)
        << std::setw(17) << fmt_pct(report.pct_not_sick)
        << std::setw(13) << fmt_pct(report.pct_test) << '\n';
    return out.str();
}

std::string report_csv(const EvalReport& report) {
    std::ostringstream out;
    out << "algorithm,model_accuracy_pct,pct_sick,pct_not_sick,pct_test,runs\n";
    out << report.algorithm << ',' << fmt_pct(report.model_accuracy_pct) << ','
        << (report.pct_sick ? fmt_pct(report.pct_sick) : "") << ','
        << (report.pct_not_sick ? fmt_pct(report.pct_not_sick) : "") << ','
        << (report.pct_test ? fmt_pct(report.pct_test) : "") << ',' << report.runs
        << '\n';
    return out.str();
}

}  // namespace tumorml
