#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smokeml/adaboost.hpp"
#include "smokeml/dataset.hpp"
#include "smokeml/decision_tree.hpp"
#include "smokeml/density_ensemble.hpp"
#include "smokeml/gbt.hpp"
#include "smokeml/knn.hpp"
#include "smokeml/linear_svm.hpp"
#include "smokeml/logistic_regression.hpp"
#include "smokeml/naive_bayes.hpp"
#include "smokeml/random_forest.hpp"
#include "smokeml/smote.hpp"

namespace smokeml {

// Everything a run needs, addressable as flat dotted keys ("smote.k",
// "gbt.learning_rate", ...) in config files and CLI overrides alike.
struct RunConfig {
    // data source: a CSV path or the synthetic generator
    std::string data_path;                 // data.path
    bool synthetic = false;                // data.synthetic
    std::size_t synth_n_per_class = 2000;  // synth.n_per_class
    double synth_separation = 4.0;         // synth.separation
    std::uint64_t synth_seed = 7;          // synth.seed

    // schema overrides; empty means the default smoke-sensor schema
    std::vector<std::string> schema_features;  // schema.features
    std::string schema_target;                 // schema.target
    std::vector<std::string> drop_features;    // features.drop

    NormalizationMethod normalize_method = NormalizationMethod::kMinMax;  // normalize.method
    // Fit the normalizer on the training partition only (requires
    // smote.before_split = false, otherwise there is no partition yet).
    bool normalize_fit_on_train = false;  // normalize.fit_on_train

    bool smote_enabled = true;      // smote.enabled
    int smote_k = 5;                // smote.k
    bool smote_before_split = true; // smote.before_split
    std::uint64_t smote_seed = 0;   // smote.seed

    double split_fraction = 0.2;     // split.fraction
    std::uint64_t split_seed = 42;   // split.seed
    bool split_stratified = false;   // split.stratified

    // Which models cmd_compare runs, in report order.
    std::vector<std::string> models{"lr", "dt",  "rf",  "nb",      "knn",
                                    "svm", "gbt", "adaboost", "ensemble"};  // models

    LogisticRegressionConfig lr;  // lr.learning_rate lr.epochs lr.l2
    NaiveBayesConfig nb;          // nb.variance_smoothing
    KnnConfig knn;                // knn.k
    CartConfig dt;                // dt.max_depth dt.min_samples_split
    RandomForestConfig rf;        // rf.n_trees rf.max_depth rf.min_samples_split
                                  // rf.feature_subsample rf.bootstrap rf.seed
    AdaBoostConfig adaboost;      // adaboost.n_rounds
    GbtConfig gbt;                // gbt.n_rounds gbt.max_depth gbt.learning_rate
                                  // gbt.l2 gbt.min_split_gain
    LinearSvmConfig svm;          // svm.epochs svm.regularization svm.seed

    int density_k = 10;            // density.k
    RegionWeights density_weights; // density.alpha_high density.alpha_low

    std::string output_dir = "out";                       // output.dir
    std::vector<std::string> output_formats{"csv", "json"};  // output.formats
    bool output_per_row = false;                          // output.per_row

    bool operator==(const RunConfig&) const = default;
};

// Known dotted keys, sorted; the single source of truth shared by the file
// parser, the emitter, and the CLI's generated override flags.
const std::vector<std::string>& config_keys();

// One-line description of a key (for --help); throws ConfigError when unknown.
const std::string& config_key_help(const std::string& key);

// Applies `key = value`; throws ConfigError on unknown keys or unparsable or
// out-of-range values.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Current value of a key in the exact syntax set_config_value accepts.
std::string get_config_value(const RunConfig& cfg, const std::string& key);

// Parses the flat `key = value` format ('#' comments, blank lines allowed)
// on top of defaults.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Effective config, defaults filled, keys sorted. parse(emit(c)) == c, and
// emit(parse(emit(c))) == emit(c).
std::string emit_config(const RunConfig& cfg);

// Cross-field consistency checks (e.g. smote.before_split with
// normalize.fit_on_train); throws ConfigError.
void validate_config(const RunConfig& cfg);

}  // namespace smokeml
