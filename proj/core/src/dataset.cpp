#include "smokeml/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "smokeml/errors.hpp"
#include "smokeml/rng.hpp"

namespace smokeml {

Dataset::Dataset(ColumnSchema schema, Matrix features, std::vector<int> labels)
    : schema_(std::move(schema)), features_(std::move(features)), labels_(std::move(labels)) {
    if (features_.rows() != labels_.size()) {
        throw DataError("features row count (" + std::to_string(features_.rows()) +
                        ") does not match labels length (" + std::to_string(labels_.size()) + ")");
    }
    if (features_.rows() > 0 && features_.cols() != schema_.feature_count()) {
        throw DataError("feature matrix has " + std::to_string(features_.cols()) +
                        " columns but schema names " + std::to_string(schema_.feature_count()));
    }
    for (const int label : labels_) {
        if (label != 0 && label != 1) {
            throw DataError("label " + std::to_string(label) + " is not 0 or 1");
        }
    }
}

std::size_t Dataset::count_label(int label) const {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& indices) const {
    std::vector<int> picked;
    picked.reserve(indices.size());
    for (const std::size_t i : indices) picked.push_back(labels_[i]);
    return Dataset(schema_, features_.gather_rows(indices), std::move(picked));
}

Dataset Dataset::drop_features(const std::vector<std::string>& names) const {
    if (names.empty()) return *this;
    ColumnSchema reduced = schema_.without(names);
    std::vector<std::size_t> kept_cols;
    for (const auto& name : reduced.feature_names()) {
        kept_cols.push_back(*schema_.feature_index(name));
    }
    Matrix out(n_rows(), kept_cols.size());
    for (std::size_t r = 0; r < n_rows(); ++r) {
        for (std::size_t c = 0; c < kept_cols.size(); ++c) {
            out(r, c) = features_(r, kept_cols[c]);
        }
    }
    return Dataset(std::move(reduced), std::move(out), labels_);
}

namespace {

// Header cells are matched against schema names ignoring case, whitespace
// and a trailing bracketed unit, so "Temperature[C]" satisfies "Temperature"
// and "NC0.5" satisfies "NC 0.5".
std::string normalize_column_name(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (const char ch : raw) {
        if (ch == '[') break;
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r') {
        cells.back().pop_back();
    }
    return cells;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_cell(const std::string& raw, std::size_t row, const std::string& column) {
    const std::string cell = trim(raw);
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || cell.empty()) {
        throw ParseError("row " + std::to_string(row) + ", column \"" + column +
                         "\": cannot parse \"" + cell + "\" as a number");
    }
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

Dataset load_dataset(const std::string& path, const ColumnSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open \"" + path + "\"");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("\"" + path + "\" is empty");
    }

    const std::vector<std::string> header = split_csv_line(line);
    std::unordered_map<std::string, std::size_t> header_index;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string key = normalize_column_name(header[i]);
        if (key.empty()) continue;  // unnamed index column, dropped
        if (header_index.count(key)) {
            throw SchemaError("\"" + path + "\": duplicate column \"" + trim(header[i]) + "\"");
        }
        header_index[key] = i;
    }

    const auto locate = [&](const std::string& name) {
        const auto it = header_index.find(normalize_column_name(name));
        if (it == header_index.end()) {
            throw SchemaError("\"" + path + "\": missing column \"" + name + "\"");
        }
        return it->second;
    };

    std::vector<std::size_t> feature_cells;
    feature_cells.reserve(schema.feature_count());
    for (const auto& f : schema.feature_columns()) feature_cells.push_back(locate(f.name));
    const std::size_t target_cell = locate(schema.target_column());

    Matrix features(0, schema.feature_count());
    std::vector<int> labels;
    std::vector<double> row_buf(schema.feature_count());

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw ParseError("row " + std::to_string(row) + ": expected " +
                             std::to_string(header.size()) + " cells, got " +
                             std::to_string(cells.size()));
        }
        for (std::size_t c = 0; c < feature_cells.size(); ++c) {
            row_buf[c] = parse_cell(cells[feature_cells[c]], row,
                                    schema.feature_columns()[c].name);
        }
        const double y = parse_cell(cells[target_cell], row, schema.target_column());
        if (y != 0.0 && y != 1.0) {
            throw ParseError("row " + std::to_string(row) + ", column \"" +
                             schema.target_column() + "\": label must be 0 or 1, got " +
                             format_double(y));
        }
        features.append_row(row_buf);
        labels.push_back(static_cast<int>(y));
    }

    return Dataset(schema, std::move(features), std::move(labels));
}

void save_dataset(const std::string& path, const Dataset& d) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write \"" + path + "\"");
    }
    const auto& schema = d.schema();
    for (const auto& f : schema.feature_columns()) out << f.name << ',';
    out << schema.target_column() << '\n';
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        const auto row = d.features().row(r);
        for (const double v : row) out << format_double(v) << ',';
        out << d.labels()[r] << '\n';
    }
    if (!out) {
        throw DataError("failed writing \"" + path + "\"");
    }
}

CleanResult clean(const Dataset& d) {
    std::vector<std::size_t> kept;
    kept.reserve(d.n_rows());
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        const auto row = d.features().row(r);
        const bool ok = std::all_of(row.begin(), row.end(),
                                    [](double v) { return std::isfinite(v); });
        if (ok) kept.push_back(r);
    }
    if (kept.empty()) {
        throw DataError("clean removed every row");
    }
    const std::size_t dropped = d.n_rows() - kept.size();
    if (dropped == 0) return {d, 0};
    return {d.select_rows(kept), dropped};
}

NormalizationParams::NormalizationParams(NormalizationMethod method, std::vector<double> offsets,
                                         std::vector<double> scales)
    : method_(method), offsets_(std::move(offsets)), scales_(std::move(scales)) {
    if (offsets_.size() != scales_.size()) {
        throw DimensionError("normalization offsets/scales length mismatch");
    }
    for (const double s : scales_) {
        if (s < 0.0 || !std::isfinite(s)) {
            throw ArgumentError("normalization scale must be finite and >= 0");
        }
    }
}

NormalizationParams fit_normalizer(const Dataset& d, NormalizationMethod method) {
    if (d.n_rows() == 0) {
        throw DataError("cannot fit a normalizer on an empty dataset");
    }
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();
    std::vector<double> offsets(dim), scales(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        if (method == NormalizationMethod::kMinMax) {
            double lo = d.features()(0, c), hi = lo;
            for (std::size_t r = 1; r < n; ++r) {
                const double v = d.features()(r, c);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            offsets[c] = lo;
            scales[c] = hi - lo;
        } else {
            double mean = 0.0;
            for (std::size_t r = 0; r < n; ++r) mean += d.features()(r, c);
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                const double diff = d.features()(r, c) - mean;
                var += diff * diff;
            }
            var /= static_cast<double>(n);  // population variance
            offsets[c] = mean;
            scales[c] = std::sqrt(var);
        }
    }
    return NormalizationParams(method, std::move(offsets), std::move(scales));
}

Dataset apply_normalizer(const Dataset& d, const NormalizationParams& p) {
    if (d.n_features() != p.feature_count()) {
        throw DimensionError("normalizer fitted on " + std::to_string(p.feature_count()) +
                             " features, dataset has " + std::to_string(d.n_features()));
    }
    Matrix out(d.n_rows(), d.n_features());
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        for (std::size_t c = 0; c < d.n_features(); ++c) {
            out(r, c) = p.transform(d.features()(r, c), c);
        }
    }
    return Dataset(d.schema(), std::move(out), d.labels());
}

namespace {

// Test sizes per class chosen by largest remainder so the combined test
// size stays exactly round(fraction * n).
std::vector<std::size_t> stratified_test_counts(const std::vector<std::size_t>& class_sizes,
                                                double fraction, std::size_t target_total) {
    std::vector<std::size_t> counts(class_sizes.size());
    std::vector<std::pair<double, std::size_t>> remainders;  // (-fraction, class)
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < class_sizes.size(); ++c) {
        const double raw = fraction * static_cast<double>(class_sizes[c]);
        counts[c] = static_cast<std::size_t>(raw);
        counts[c] = std::min(counts[c], class_sizes[c]);
        assigned += counts[c];
        remainders.push_back({-(raw - std::floor(raw)), c});
    }
    std::stable_sort(remainders.begin(), remainders.end());
    std::size_t i = 0;
    while (assigned < target_total && i < remainders.size()) {
        const std::size_t c = remainders[i++].second;
        if (counts[c] < class_sizes[c]) {
            ++counts[c];
            ++assigned;
        }
    }
    // In the rare case rounding overshoots, trim from the largest class.
    while (assigned > target_total) {
        const std::size_t c = static_cast<std::size_t>(
            std::max_element(counts.begin(), counts.end()) - counts.begin());
        --counts[c];
        --assigned;
    }
    return counts;
}

}  // namespace

SplitIndices train_test_split(const Dataset& d, double test_fraction, std::uint64_t seed,
                              bool stratified) {
    if (!(test_fraction > 0.0) || !(test_fraction < 1.0)) {
        throw ArgumentError("test_fraction must lie in (0,1)");
    }
    const std::size_t n = d.n_rows();
    if (n < 2) {
        throw ArgumentError("need at least 2 rows to split");
    }
    const std::size_t n_test =
        static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));

    Rng rng(seed);
    SplitIndices split;
    split.seed = seed;
    split.test_fraction = test_fraction;

    if (!stratified) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        rng.shuffle(order);
        split.test_indices.assign(order.begin(), order.begin() + n_test);
        split.train_indices.assign(order.begin() + n_test, order.end());
    } else {
        std::vector<std::size_t> by_class[2];
        for (std::size_t i = 0; i < n; ++i) by_class[d.labels()[i]].push_back(i);
        const std::vector<std::size_t> sizes = {by_class[0].size(), by_class[1].size()};
        const std::vector<std::size_t> test_counts =
            stratified_test_counts(sizes, test_fraction, n_test);
        for (int c = 0; c < 2; ++c) {
            rng.shuffle(by_class[c]);
            const std::size_t take = test_counts[c];
            split.test_indices.insert(split.test_indices.end(), by_class[c].begin(),
                                      by_class[c].begin() + take);
            split.train_indices.insert(split.train_indices.end(), by_class[c].begin() + take,
                                       by_class[c].end());
        }
    }
    std::sort(split.test_indices.begin(), split.test_indices.end());
    std::sort(split.train_indices.begin(), split.train_indices.end());
    return split;
}

std::vector<FeatureCorrelation> feature_target_correlation(const Dataset& d) {
    if (d.n_rows() == 0) {
        throw DataError("cannot correlate an empty dataset");
    }
    const std::size_t n = d.n_rows();
    double label_mean = 0.0;
    for (const int y : d.labels()) label_mean += y;
    label_mean /= static_cast<double>(n);
    double label_var = 0.0;
    for (const int y : d.labels()) {
        const double diff = y - label_mean;
        label_var += diff * diff;
    }

    std::vector<FeatureCorrelation> out;
    out.reserve(d.n_features());
    for (std::size_t c = 0; c < d.n_features(); ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < n; ++r) mean += d.features()(r, c);
        mean /= static_cast<double>(n);
        double var = 0.0, cov = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double dx = d.features()(r, c) - mean;
            var += dx * dx;
            cov += dx * (d.labels()[r] - label_mean);
        }
        const double denom = std::sqrt(var * label_var);
        const double r_val = denom == 0.0 ? 0.0 : cov / denom;
        out.push_back({d.schema().feature_columns()[c].name, r_val});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const FeatureCorrelation& a, const FeatureCorrelation& b) {
                         return std::abs(a.r) > std::abs(b.r);
                     });
    return out;
}

Dataset generate_synthetic(std::size_t n_per_class, double separation, std::uint64_t seed) {
    if (n_per_class < 1) {
        throw ArgumentError("n_per_class must be >= 1");
    }
    const ColumnSchema schema = ColumnSchema::smoke_default();
    const std::size_t n = 2 * n_per_class;

    // Plausible sensor baselines, in schema column order. UTC and CNT are
    // counters and never carry class signal.
    const std::vector<double> base = {50.0, 937.0, 20.0,  0.0,    400.0,  150.0,  20.0,
                                      2.0,  1.8,   1.9,   19500.0, 12500.0, 1000.0, 0.0};
    const auto utc_col = *schema.feature_index("UTC");
    const auto cnt_col = *schema.feature_index("CNT");
    constexpr double kUtcEpoch = 1654712187.0;

    Rng rng(seed);
    std::vector<int> labels(n, 0);
    for (std::size_t i = n_per_class; i < n; ++i) labels[i] = 1;
    rng.shuffle(labels);

    Matrix features(n, schema.feature_count());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < schema.feature_count(); ++c) {
            if (c == utc_col) {
                features(r, c) = kUtcEpoch + static_cast<double>(r);
            } else if (c == cnt_col) {
                features(r, c) = static_cast<double>(r);
            } else {
                features(r, c) = base[c] + separation * labels[r] + rng.gaussian();
            }
        }
    }
    return Dataset(schema, std::move(features), std::move(labels));
}

}  // namespace smokeml
