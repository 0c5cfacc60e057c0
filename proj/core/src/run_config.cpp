#include "smokeml/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <type_traits>
#include <set>
#include <sstream>

#include "smokeml/errors.hpp"

namespace smokeml {

namespace {

const std::set<std::string> kKnownModels{"lr",  "dt",  "rf",       "nb",      "knn",
                                         "svm", "gbt", "adaboost", "ensemble"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError(key + ": expected true or false, got \"" + value + "\"");
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const char* begin = value.data();
    const char* end = begin + value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end || value.empty()) {
        throw ConfigError(key + ": cannot parse \"" + value + "\" as a number");
    }
    return out;
}

std::vector<std::string> parse_list(const std::string& value) {
    std::vector<std::string> items;
    std::string current;
    std::istringstream in(value);
    while (std::getline(in, current, ',')) {
        const std::string item = trim(current);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ',';
        out += items[i];
    }
    return out;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

struct Entry {
    std::string key;
    std::string help;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

std::vector<Entry> make_entries() {
    std::vector<Entry> e;
    auto add = [&](std::string key, std::string help,
                   std::function<void(RunConfig&, const std::string&)> set,
                   std::function<std::string(const RunConfig&)> get) {
        e.push_back({std::move(key), std::move(help), std::move(set), std::move(get)});
    };
    auto add_bool = [&](const std::string& key, std::string help, bool* (*ptr)(RunConfig&)) {
        add(key, std::move(help),
            [key, ptr](RunConfig& c, const std::string& v) { *ptr(c) = parse_bool(key, v); },
            [ptr](const RunConfig& c) { return bool_text(*ptr(const_cast<RunConfig&>(c))); });
    };
    auto add_string = [&](const std::string& key, std::string help, std::string RunConfig::* field) {
        add(key, std::move(help),
            [field](RunConfig& c, const std::string& v) { c.*field = v; },
            [field](const RunConfig& c) { return c.*field; });
    };
    auto add_list = [&](const std::string& key, std::string help,
                        std::vector<std::string> RunConfig::* field) {
        add(key, std::move(help),
            [field](RunConfig& c, const std::string& v) { c.*field = parse_list(v); },
            [field](const RunConfig& c) { return join_list(c.*field); });
    };
    // Numeric fields live behind accessor lambdas because several sit inside
    // nested per-model config structs.
    auto add_num = [&]<typename T>(const std::string& key, std::string help, T* (*ptr)(RunConfig&)) {
        add(key, std::move(help),
            [key, ptr](RunConfig& c, const std::string& v) { *ptr(c) = parse_number<T>(key, v); },
            [ptr](const RunConfig& c) {
                T* field = ptr(const_cast<RunConfig&>(c));
                if constexpr (std::is_same_v<T, double>) {
                    return format_double(*field);
                } else {
                    return std::to_string(*field);
                }
            });
    };

    add_string("data.path", "CSV dataset path", &RunConfig::data_path);
    add_bool("data.synthetic", "use the synthetic generator instead of a file",
             +[](RunConfig& c) { return &c.synthetic; });
    add_num("synth.n_per_class", "synthetic rows per class",
            +[](RunConfig& c) { return &c.synth_n_per_class; });
    add_num("synth.separation", "synthetic class separation (0 = indistinguishable)",
            +[](RunConfig& c) { return &c.synth_separation; });
    add_num("synth.seed", "synthetic generator seed", +[](RunConfig& c) { return &c.synth_seed; });

    add_list("schema.features", "feature column names (empty = default smoke schema)",
             &RunConfig::schema_features);
    add_string("schema.target", "target column name (empty = default)", &RunConfig::schema_target);
    add_list("features.drop", "features to drop after loading", &RunConfig::drop_features);

    add("normalize.method", "min_max or z_score",
        [](RunConfig& c, const std::string& v) {
            if (v == "min_max") {
                c.normalize_method = NormalizationMethod::kMinMax;
            } else if (v == "z_score") {
                c.normalize_method = NormalizationMethod::kZScore;
            } else {
                throw ConfigError("normalize.method: expected min_max or z_score, got \"" + v +
                                  "\"");
            }
        },
        [](const RunConfig& c) {
            return std::string(c.normalize_method == NormalizationMethod::kMinMax ? "min_max"
                                                                                  : "z_score");
        });
    add_bool("normalize.fit_on_train",
             "fit the normalizer on the training partition only (needs smote.before_split=false)",
             +[](RunConfig& c) { return &c.normalize_fit_on_train; });

    add_bool("smote.enabled", "rebalance with SMOTE", +[](RunConfig& c) { return &c.smote_enabled; });
    add_num("smote.k", "SMOTE neighbor count", +[](RunConfig& c) { return &c.smote_k; });
    add_bool("smote.before_split", "oversample the full dataset before splitting",
             +[](RunConfig& c) { return &c.smote_before_split; });
    add_num("smote.seed", "SMOTE seed", +[](RunConfig& c) { return &c.smote_seed; });

    add_num("split.fraction", "test fraction in (0,1)",
            +[](RunConfig& c) { return &c.split_fraction; });
    add_num("split.seed", "train/test split seed", +[](RunConfig& c) { return &c.split_seed; });
    add_bool("split.stratified", "preserve the class ratio in both partitions",
             +[](RunConfig& c) { return &c.split_stratified; });

    add_list("models", "models for `compare` (subset of lr,dt,rf,nb,knn,svm,gbt,adaboost,ensemble)",
             &RunConfig::models);

    add_num("lr.learning_rate", "logistic regression step size",
            +[](RunConfig& c) { return &c.lr.learning_rate; });
    add_num("lr.epochs", "logistic regression full-batch epochs",
            +[](RunConfig& c) { return &c.lr.epochs; });
    add_num("lr.l2", "logistic regression L2 penalty", +[](RunConfig& c) { return &c.lr.l2; });

    add_num("nb.variance_smoothing", "naive bayes variance floor fraction",
            +[](RunConfig& c) { return &c.nb.variance_smoothing; });

    add_num("knn.k", "KNN neighbor count", +[](RunConfig& c) { return &c.knn.k; });

    add_num("dt.max_depth", "CART depth cap (-1 = unlimited)",
            +[](RunConfig& c) { return &c.dt.max_depth; });
    add_num("dt.min_samples_split", "CART minimum node size to split",
            +[](RunConfig& c) { return &c.dt.min_samples_split; });

    add_num("rf.n_trees", "forest size", +[](RunConfig& c) { return &c.rf.n_trees; });
    add_num("rf.max_depth", "forest tree depth cap (-1 = unlimited)",
            +[](RunConfig& c) { return &c.rf.max_depth; });
    add_num("rf.min_samples_split", "forest minimum node size to split",
            +[](RunConfig& c) { return &c.rf.min_samples_split; });
    add_bool("rf.feature_subsample", "draw sqrt(d) candidate features per split",
             +[](RunConfig& c) { return &c.rf.feature_subsample; });
    add_bool("rf.bootstrap", "train each tree on a bootstrap resample",
             +[](RunConfig& c) { return &c.rf.bootstrap; });
    add_num("rf.seed", "forest seed (tree t uses seed+t)", +[](RunConfig& c) { return &c.rf.seed; });

    add_num("adaboost.n_rounds", "AdaBoost stump rounds",
            +[](RunConfig& c) { return &c.adaboost.n_rounds; });

    add_num("gbt.n_rounds", "boosting rounds", +[](RunConfig& c) { return &c.gbt.n_rounds; });
    add_num("gbt.max_depth", "boosted tree depth cap (-1 = unlimited)",
            +[](RunConfig& c) { return &c.gbt.max_depth; });
    add_num("gbt.learning_rate", "boosting shrinkage",
            +[](RunConfig& c) { return &c.gbt.learning_rate; });
    add_num("gbt.l2", "leaf weight L2 (lambda)", +[](RunConfig& c) { return &c.gbt.l2; });
    add_num("gbt.min_split_gain", "minimum split gain (gamma)",
            +[](RunConfig& c) { return &c.gbt.min_split_gain; });

    add_num("svm.epochs", "Pegasos passes over the data",
            +[](RunConfig& c) { return &c.svm.epochs; });
    add_num("svm.regularization", "Pegasos lambda",
            +[](RunConfig& c) { return &c.svm.regularization; });
    add_num("svm.seed", "Pegasos sampling seed", +[](RunConfig& c) { return &c.svm.seed; });

    add_num("density.k", "neighbors for density estimation",
            +[](RunConfig& c) { return &c.density_k; });
    add_num("density.alpha_high", "KNN weight in the HIGH-density region",
            +[](RunConfig& c) { return &c.density_weights.alpha_high; });
    add_num("density.alpha_low", "KNN weight in the LOW-density region",
            +[](RunConfig& c) { return &c.density_weights.alpha_low; });

    add_string("output.dir", "artifact directory", &RunConfig::output_dir);
    add_list("output.formats", "comparison report formats (csv,json)",
             &RunConfig::output_formats);
    add_bool("output.per_row", "write per-test-row ensemble diagnostics CSV",
             +[](RunConfig& c) { return &c.output_per_row; });

    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
    return e;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = make_entries();
    return table;
}

const Entry& find_entry(const std::string& key) {
    const auto& table = entries();
    const auto it = std::lower_bound(table.begin(), table.end(), key,
                                     [](const Entry& e, const std::string& k) { return e.key < k; });
    if (it == table.end() || it->key != key) {
        throw ConfigError("unknown config key \"" + key + "\"");
    }
    return *it;
}

void check(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const Entry& e : entries()) k.push_back(e.key);
        return k;
    }();
    return keys;
}

const std::string& config_key_help(const std::string& key) { return find_entry(key).help; }

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    find_entry(key).set(cfg, trim(value));
}

std::string get_config_value(const RunConfig& cfg, const std::string& key) {
    return find_entry(key).get(cfg);
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected `key = value`, got \"" + stripped + "\"");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            set_config_value(cfg, key, value);
        } catch (const ConfigError& err) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    RunConfig cfg = parse_config(buffer.str());
    validate_config(cfg);
    return cfg;
}

std::string emit_config(const RunConfig& cfg) {
    std::string out = "# smokeml run configuration (all keys, defaults filled)\n";
    for (const Entry& e : entries()) {
        out += e.key + " = " + e.get(cfg) + "\n";
    }
    return out;
}

void validate_config(const RunConfig& cfg) {
    check(!(cfg.synthetic && !cfg.data_path.empty()),
          "data.path and data.synthetic are mutually exclusive");
    check(cfg.synth_n_per_class >= 1, "synth.n_per_class must be >= 1");
    check(std::isfinite(cfg.synth_separation) && cfg.synth_separation >= 0.0,
          "synth.separation must be finite and >= 0");

    check(cfg.split_fraction > 0.0 && cfg.split_fraction < 1.0,
          "split.fraction must lie strictly between 0 and 1");
    check(cfg.smote_k >= 1, "smote.k must be >= 1");
    check(!(cfg.smote_enabled && cfg.smote_before_split && cfg.normalize_fit_on_train),
          "normalize.fit_on_train requires smote.before_split = false "
          "(the normalizer cannot fit a partition that does not exist yet)");

    check(!cfg.models.empty(), "models must name at least one model");
    std::set<std::string> seen;
    for (const std::string& m : cfg.models) {
        check(kKnownModels.contains(m), "unknown model \"" + m + "\"");
        check(seen.insert(m).second, "model \"" + m + "\" listed twice");
    }
    for (const std::string& f : cfg.output_formats) {
        check(f == "csv" || f == "json", "output.formats: unknown format \"" + f + "\"");
    }

    check(cfg.lr.learning_rate > 0.0, "lr.learning_rate must be > 0");
    check(cfg.lr.epochs >= 0, "lr.epochs must be >= 0");
    check(cfg.lr.l2 >= 0.0, "lr.l2 must be >= 0");
    check(cfg.nb.variance_smoothing >= 0.0, "nb.variance_smoothing must be >= 0");
    check(cfg.knn.k >= 1, "knn.k must be >= 1");
    check(cfg.dt.max_depth >= -1, "dt.max_depth must be >= -1");
    check(cfg.dt.min_samples_split >= 2, "dt.min_samples_split must be >= 2");
    check(cfg.rf.n_trees >= 1, "rf.n_trees must be >= 1");
    check(cfg.rf.max_depth >= -1, "rf.max_depth must be >= -1");
    check(cfg.rf.min_samples_split >= 2, "rf.min_samples_split must be >= 2");
    check(cfg.adaboost.n_rounds >= 1, "adaboost.n_rounds must be >= 1");
    check(cfg.gbt.n_rounds >= 1, "gbt.n_rounds must be >= 1");
    check(cfg.gbt.max_depth >= -1, "gbt.max_depth must be >= -1");
    check(cfg.gbt.learning_rate > 0.0, "gbt.learning_rate must be > 0");
    check(cfg.gbt.l2 >= 0.0, "gbt.l2 must be >= 0");
    check(cfg.gbt.min_split_gain >= 0.0, "gbt.min_split_gain must be >= 0");
    check(cfg.svm.epochs >= 1, "svm.epochs must be >= 1");
    check(cfg.svm.regularization > 0.0, "svm.regularization must be > 0");
    check(cfg.density_k >= 1, "density.k must be >= 1");
    const RegionWeights& rw = cfg.density_weights;
    check(rw.alpha_high >= 0.0 && rw.alpha_high <= 1.0, "density.alpha_high must lie in [0,1]");
    check(rw.alpha_low >= 0.0 && rw.alpha_low <= 1.0, "density.alpha_low must lie in [0,1]");
    check(rw.alpha_high >= rw.alpha_low, "density.alpha_high must be >= density.alpha_low");
}

}  // namespace smokeml
