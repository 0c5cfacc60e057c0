#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"
#include "smokeml/metrics.hpp"
#include "smokeml/run_config.hpp"

namespace smokeml {

struct PreparedData {
    Dataset train;
    Dataset test;
    std::size_t dropped_rows = 0;
    std::size_t pre_smote_positive = 0;
    std::size_t pre_smote_negative = 0;
    // Post-SMOTE class counts: of the full dataset when smote.before_split,
    // of the training partition otherwise. Equal to the pre counts when
    // SMOTE is disabled.
    std::size_t post_smote_positive = 0;
    std::size_t post_smote_negative = 0;
    bool smote_applied = false;
    bool smote_on_full = false;
    NormalizationParams normalizer{NormalizationMethod::kMinMax, {}, {}};
};

// Dataset after load (or synthesis), clean, and feature drops — before
// normalization, SMOTE, and splitting.
Dataset load_input(const RunConfig& cfg, std::size_t* dropped_rows = nullptr);

// Full preparation per the config. With smote.before_split (default) the
// whole dataset is normalized then oversampled and only then split; otherwise
// the split comes first, the normalizer fits on the configured partition, and
// SMOTE touches training rows only.
PreparedData prepare_pipeline(const RunConfig& cfg);

// Fits one model by id (lr, dt, rf, nb, knn, svm, gbt, adaboost, ensemble)
// with the config's hyperparameters.
std::unique_ptr<Classifier> fit_model(const std::string& id, const Dataset& train,
                                      const RunConfig& cfg);

// Subcommands print a human-readable summary to `out`, write artifacts into
// cfg.output_dir where documented, and return the process exit code (0).
// Failures are reported by exception.
int cmd_inspect(const RunConfig& cfg, std::ostream& out);
int cmd_correlations(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);
int cmd_ensemble(const RunConfig& cfg, std::ostream& out);
int cmd_metrics(const ConfusionMatrix& cm, std::ostream& out);

// FNV-1a 64-bit hash as 16 hex digits; fingerprints configs and data files.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace smokeml
