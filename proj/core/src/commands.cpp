#include "smokeml/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "smokeml/density_ensemble.hpp"
#include "smokeml/errors.hpp"
#include "smokeml/smote.hpp"

namespace smokeml {

namespace {

namespace fs = std::filesystem;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open \"" + path.string() + "\" for writing");
    }
    out << content;
    if (!out) {
        throw DataError("failed writing \"" + path.string() + "\"");
    }
}

// Synthetic runs are identified by their generator parameters (readable and
// reproducible); file inputs by the FNV-1a hash of the raw bytes.
std::string dataset_fingerprint(const RunConfig& cfg) {
    if (cfg.synthetic) {
        return "synthetic|n_per_class=" + std::to_string(cfg.synth_n_per_class) +
               "|separation=" + format_double(cfg.synth_separation) +
               "|seed=" + std::to_string(cfg.synth_seed);
    }
    return fnv1a_hex(read_file_bytes(cfg.data_path));
}

// Deterministic run manifest: command, fingerprints, and the full effective
// config. Deliberately carries no timestamps so identical runs produce
// byte-identical files.
std::string run_meta_json(const RunConfig& cfg, const std::string& command) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"command\": \"" << command << "\",\n";
    out << "  \"config_hash\": \"" << fnv1a_hex(emit_config(cfg)) << "\",\n";
    out << "  \"dataset_fingerprint\": \"" << dataset_fingerprint(cfg) << "\",\n";
    out << "  \"config\": {\n";
    const auto& keys = config_keys();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        out << "    \"" << keys[i] << "\": \"" << get_config_value(cfg, keys[i]) << "\"";
        out << (i + 1 < keys.size() ? ",\n" : "\n");
    }
    out << "  }\n}\n";
    return out.str();
}

fs::path ensure_output_dir(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw DataError("cannot create output directory \"" + cfg.output_dir +
                        "\": " + ec.message());
    }
    return dir;
}

bool wants_format(const RunConfig& cfg, const std::string& format) {
    for (const std::string& f : cfg.output_formats) {
        if (f == format) return true;
    }
    return false;
}

// "{" -> "{\"model\": \"<name>\", " so per-model objects carry their id.
std::string with_model_key(const std::string& name, const std::string& report_json) {
    return "{\"model\": \"" + name + "\", " + report_json.substr(1);
}

constexpr const char* kTableHeader =
    "model      accuracy   precision  recall     f1         auc        kappa      mcc";

std::string table_row(const std::string& name, const EvalReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-10s %-10s %-10s %-10s %-10s %-10s %-10s %s", name.c_str(),
                  format_metric(r.accuracy).c_str(), format_metric(r.precision).c_str(),
                  format_metric(r.recall).c_str(), format_metric(r.f1).c_str(),
                  format_metric(r.auc).c_str(), format_metric(r.kappa).c_str(),
                  format_metric(r.mcc).c_str());
    return buf;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Dataset load_input(const RunConfig& cfg, std::size_t* dropped_rows) {
    Dataset raw;
    if (cfg.synthetic) {
        raw = generate_synthetic(cfg.synth_n_per_class, cfg.synth_separation, cfg.synth_seed);
    } else if (cfg.data_path.empty()) {
        throw ConfigError("no data source: set data.path or data.synthetic");
    } else {
        ColumnSchema schema = ColumnSchema::smoke_default();
        if (!cfg.schema_features.empty()) {
            schema = ColumnSchema::from_names(
                cfg.schema_features,
                cfg.schema_target.empty() ? schema.target_column() : cfg.schema_target);
        } else if (!cfg.schema_target.empty()) {
            schema = ColumnSchema(schema.feature_columns(), cfg.schema_target);
        }
        raw = load_dataset(cfg.data_path, schema);
    }
    CleanResult cleaned = clean(raw);
    if (dropped_rows != nullptr) {
        *dropped_rows = cleaned.dropped_rows;
    }
    if (!cfg.drop_features.empty()) {
        return cleaned.data.drop_features(cfg.drop_features);
    }
    return cleaned.data;
}

PreparedData prepare_pipeline(const RunConfig& cfg) {
    validate_config(cfg);
    PreparedData p;
    const Dataset base = load_input(cfg, &p.dropped_rows);
    p.pre_smote_positive = base.count_label(1);
    p.pre_smote_negative = base.count_label(0);
    p.smote_applied = cfg.smote_enabled;
    p.smote_on_full = cfg.smote_enabled && cfg.smote_before_split;

    const SmoteConfig smote_cfg{cfg.smote_k, std::nullopt, cfg.smote_seed};
    if (cfg.smote_before_split) {
        p.normalizer = fit_normalizer(base, cfg.normalize_method);
        Dataset full = apply_normalizer(base, p.normalizer);
        if (cfg.smote_enabled) {
            full = smote_oversample(full, smote_cfg);
        }
        p.post_smote_positive = full.count_label(1);
        p.post_smote_negative = full.count_label(0);
        const SplitIndices split =
            train_test_split(full, cfg.split_fraction, cfg.split_seed, cfg.split_stratified);
        p.train = full.select_rows(split.train_indices);
        p.test = full.select_rows(split.test_indices);
    } else {
        const SplitIndices split =
            train_test_split(base, cfg.split_fraction, cfg.split_seed, cfg.split_stratified);
        const Dataset train_raw = base.select_rows(split.train_indices);
        const Dataset test_raw = base.select_rows(split.test_indices);
        p.normalizer =
            fit_normalizer(cfg.normalize_fit_on_train ? train_raw : base, cfg.normalize_method);
        Dataset train = apply_normalizer(train_raw, p.normalizer);
        p.test = apply_normalizer(test_raw, p.normalizer);
        if (cfg.smote_enabled) {
            train = smote_oversample(train, smote_cfg);
        }
        p.post_smote_positive = train.count_label(1);
        p.post_smote_negative = train.count_label(0);
        p.train = std::move(train);
    }
    return p;
}

std::unique_ptr<Classifier> fit_model(const std::string& id, const Dataset& train,
                                      const RunConfig& cfg) {
    if (id == "lr") {
        return std::make_unique<LogisticRegressionClassifier>(
            LogisticRegressionClassifier::fit(train, cfg.lr));
    }
    if (id == "nb") {
        return std::make_unique<GaussianNbClassifier>(GaussianNbClassifier::fit(train, cfg.nb));
    }
    if (id == "knn") {
        return std::make_unique<KnnClassifier>(KnnClassifier::fit(train, cfg.knn));
    }
    if (id == "dt") {
        return std::make_unique<CartClassifier>(CartClassifier::fit(train, cfg.dt));
    }
    if (id == "rf") {
        return std::make_unique<RandomForestClassifier>(
            RandomForestClassifier::fit(train, cfg.rf));
    }
    if (id == "adaboost") {
        return std::make_unique<AdaBoostClassifier>(AdaBoostClassifier::fit(train, cfg.adaboost));
    }
    if (id == "gbt") {
        return std::make_unique<GbtClassifier>(GbtClassifier::fit(train, cfg.gbt));
    }
    if (id == "svm") {
        return std::make_unique<LinearSvmClassifier>(LinearSvmClassifier::fit(train, cfg.svm));
    }
    if (id == "ensemble") {
        const DensityEnsembleConfig ens{cfg.knn, cfg.gbt, cfg.density_k, cfg.density_weights};
        return std::make_unique<WeightedEnsembleModel>(WeightedEnsembleModel::fit(train, ens));
    }
    throw ArgumentError("unknown model \"" + id + "\"");
}

int cmd_inspect(const RunConfig& cfg, std::ostream& out) {
    const PreparedData p = prepare_pipeline(cfg);
    out << "source: " << (cfg.synthetic ? "synthetic" : cfg.data_path) << '\n';
    out << "features: " << p.train.n_features() << '\n';
    out << "rows dropped by cleaning: " << p.dropped_rows << '\n';
    out << "class counts before SMOTE: no_alarm=" << p.pre_smote_negative
        << " alarm=" << p.pre_smote_positive << '\n';
    if (p.smote_applied) {
        out << "class counts after SMOTE" << (p.smote_on_full ? "" : " (training partition)")
            << ": no_alarm=" << p.post_smote_negative << " alarm=" << p.post_smote_positive
            << '\n';
    } else {
        out << "SMOTE disabled\n";
    }
    out << "train rows: " << p.train.n_rows() << '\n';
    out << "test rows: " << p.test.n_rows() << '\n';
    return 0;
}

int cmd_correlations(const RunConfig& cfg, std::ostream& out) {
    validate_config(cfg);
    const Dataset base = load_input(cfg);
    const auto correlations = feature_target_correlation(base);

    std::size_t widest = 0;
    for (const auto& c : correlations) widest = std::max(widest, c.feature.size());
    out << "correlation with the alarm label (sorted by |r|):\n";
    for (const auto& c : correlations) {
        const int bar = static_cast<int>(std::lround(std::fabs(c.r) * 20.0));
        out << "  " << c.feature << std::string(widest - c.feature.size() + 2, ' ')
            << (c.r < 0 ? "" : " ") << format_metric(c.r) << "  "
            << std::string(static_cast<std::size_t>(bar), '#') << '\n';
    }

    const fs::path dir = ensure_output_dir(cfg);
    if (wants_format(cfg, "csv")) {
        std::string csv = "feature,r\n";
        for (const auto& c : correlations) csv += c.feature + "," + format_metric(c.r) + "\n";
        write_file(dir / "correlations.csv", csv);
        out << "wrote " << (dir / "correlations.csv").string() << '\n';
    }
    if (wants_format(cfg, "json")) {
        std::string json = "{\"correlations\": [";
        for (std::size_t i = 0; i < correlations.size(); ++i) {
            json += (i ? ", " : "") + std::string("{\"feature\": \"") + correlations[i].feature +
                    "\", \"r\": " + format_metric(correlations[i].r) + "}";
        }
        json += "]}\n";
        write_file(dir / "correlations.json", json);
        out << "wrote " << (dir / "correlations.json").string() << '\n';
    }
    write_file(dir / "run_meta.json", run_meta_json(cfg, "correlations"));
    return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const auto t_total = std::chrono::steady_clock::now();
    const PreparedData p = prepare_pipeline(cfg);
    out << "train rows: " << p.train.n_rows() << ", test rows: " << p.test.n_rows()
        << ", features: " << p.train.n_features() << '\n';

    struct Row {
        std::string name;
        EvaluationResult eval;
    };
    std::vector<Row> rows;
    for (const std::string& name : cfg.models) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto model = fit_model(name, p.train, cfg);
        const double fit_s = seconds_since(t0);
        const auto t1 = std::chrono::steady_clock::now();
        EvaluationResult eval = evaluate_model(*model, p.test);
        const double eval_s = seconds_since(t1);
        char timing[96];
        std::snprintf(timing, sizeof(timing), "[%s] fit %.2fs, eval %.2fs", name.c_str(), fit_s,
                      eval_s);
        out << timing << '\n';
        rows.push_back({name, std::move(eval)});
    }

    out << kTableHeader << '\n';
    for (const Row& r : rows) out << table_row(r.name, r.eval.report) << '\n';

    const fs::path dir = ensure_output_dir(cfg);
    if (wants_format(cfg, "csv")) {
        std::string csv = report_csv_header() + "\n";
        for (const Row& r : rows) csv += report_csv_row(r.name, r.eval.report, r.eval.cm) + "\n";
        write_file(dir / "comparison.csv", csv);
    }
    if (wants_format(cfg, "json")) {
        std::string json = "{\"models\": [";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json += (i ? ", " : "") +
                    with_model_key(rows[i].name,
                                   report_to_json(rows[i].eval.report, rows[i].eval.cm));
        }
        json += "]}\n";
        write_file(dir / "comparison.json", json);
    }
    for (const Row& r : rows) {
        write_file(dir / ("cm_" + r.name + ".txt"), format_confusion(r.eval.cm));
    }
    write_file(dir / "run_meta.json", run_meta_json(cfg, "compare"));
    out << "artifacts in " << dir.string() << '\n';
    char total[64];
    std::snprintf(total, sizeof(total), "total %.2fs", seconds_since(t_total));
    out << total << '\n';
    return 0;
}

int cmd_ensemble(const RunConfig& cfg, std::ostream& out) {
    const PreparedData p = prepare_pipeline(cfg);
    out << "train rows: " << p.train.n_rows() << ", test rows: " << p.test.n_rows() << '\n';

    const auto t0 = std::chrono::steady_clock::now();
    const DensityEnsembleConfig ens{cfg.knn, cfg.gbt, cfg.density_k, cfg.density_weights};
    const WeightedEnsembleModel model = WeightedEnsembleModel::fit(p.train, ens);
    char timing[64];
    std::snprintf(timing, sizeof(timing), "fit %.2fs", seconds_since(t0));
    out << timing << '\n';

    // One densities pass per row serves the report, the region tally, and the
    // optional per-row dump.
    std::vector<EnsemblePrediction> predictions(p.test.n_rows());
    for (std::size_t i = 0; i < p.test.n_rows(); ++i) {
        predictions[i] = model.predict(p.test.features().row(i));
    }
    std::vector<double> scores(predictions.size());
    std::vector<int> predicted(predictions.size());
    std::size_t high = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        scores[i] = predictions[i].proba;
        predicted[i] = predictions[i].label;
        high += predictions[i].region == DensityRegion::kHigh ? 1 : 0;
    }
    const ConfusionMatrix cm = confusion(p.test.labels(), predicted);
    EvalReport report = metrics_from_cm(cm);
    report.auc = auc_roc(scores, p.test.labels());
    std::erase(report.undefined, "auc");

    out << "test rows in HIGH density region: " << high << " of " << predictions.size() << '\n';
    out << kTableHeader << '\n' << table_row("ensemble", report) << '\n';
    out << format_confusion(cm);

    const fs::path dir = ensure_output_dir(cfg);
    if (wants_format(cfg, "csv")) {
        write_file(dir / "ensemble.csv",
                   report_csv_header() + "\n" + report_csv_row("ensemble", report, cm) + "\n");
    }
    if (wants_format(cfg, "json")) {
        write_file(dir / "ensemble.json",
                   with_model_key("ensemble", report_to_json(report, cm)) + "\n");
    }
    write_file(dir / "cm_ensemble.txt", format_confusion(cm));
    if (cfg.output_per_row) {
        std::string csv = "row,proba,label,region,w_knn,w_gbt\n";
        for (std::size_t i = 0; i < predictions.size(); ++i) {
            const EnsemblePrediction& q = predictions[i];
            csv += std::to_string(i) + "," + format_metric(q.proba) + "," +
                   std::to_string(q.label) + "," + region_name(q.region) + "," +
                   format_metric(q.w_knn) + "," + format_metric(q.w_gbt) + "\n";
        }
        write_file(dir / "per_row.csv", csv);
    }
    write_file(dir / "run_meta.json", run_meta_json(cfg, "ensemble"));
    out << "artifacts in " << dir.string() << '\n';
    return 0;
}

int cmd_metrics(const ConfusionMatrix& cm, std::ostream& out) {
    const EvalReport report = metrics_from_cm(cm);
    const auto print = [&](const char* name, double value) {
        out << name << (report.is_undefined(name) ? " undefined (0 by convention)"
                                                  : " " + format_metric(value))
            << '\n';
    };
    print("accuracy", report.accuracy);
    print("precision", report.precision);
    print("recall", report.recall);
    print("f1", report.f1);
    print("kappa", report.kappa);
    print("mcc", report.mcc);
    out << "auc: not derivable from counts alone (needs ranked scores)\n";
    out << "note: precision, recall, and kappa are matrix-derived; if an external summary"
           " disagrees, the values computed from the matrix cells are authoritative\n";
    out << format_confusion(cm);
    return 0;
}

}  // namespace smokeml
