#include "smokeml/schema.hpp"

#include <algorithm>
#include <unordered_set>

#include "smokeml/errors.hpp"

namespace smokeml {

ColumnSchema::ColumnSchema(std::vector<FeatureColumn> features, std::string target,
                           bool allow_index_column)
    : features_(std::move(features)),
      target_(std::move(target)),
      allow_index_column_(allow_index_column) {
    validate();
}

void ColumnSchema::validate() const {
    if (target_.empty()) {
        throw SchemaError("target column name is empty");
    }
    std::unordered_set<std::string> seen;
    for (const auto& f : features_) {
        if (f.name.empty()) {
            throw SchemaError("feature column with empty name");
        }
        if (!seen.insert(f.name).second) {
            throw SchemaError("duplicate feature column \"" + f.name + "\"");
        }
        if (f.name == target_) {
            throw SchemaError("target column \"" + target_ + "\" also listed as a feature");
        }
    }
}

ColumnSchema ColumnSchema::smoke_default() {
    return ColumnSchema(
        {
            {"Humidity", "%"},
            {"Pressure", "hPa"},
            {"Temperature", "C"},
            {"CNT", "count"},
            {"eCO2", "ppm"},
            {"NC 0.5", "1/cm3"},
            {"NC 1.0", "1/cm3"},
            {"NC 2.5", "1/cm3"},
            {"PM 1.0", "ug/m3"},
            {"PM 2.5", "ug/m3"},
            {"Raw Ethanol", "raw"},
            {"Raw H2", "raw"},
            {"TVOC", "ppb"},
            {"UTC", "s"},
        },
        "Fire Alarm");
}

ColumnSchema ColumnSchema::from_names(const std::vector<std::string>& features,
                                      const std::string& target, bool allow_index_column) {
    std::vector<FeatureColumn> cols;
    cols.reserve(features.size());
    for (const auto& name : features) cols.push_back({name, ""});
    return ColumnSchema(std::move(cols), target, allow_index_column);
}

std::vector<std::string> ColumnSchema::feature_names() const {
    std::vector<std::string> names;
    names.reserve(features_.size());
    for (const auto& f : features_) names.push_back(f.name);
    return names;
}

std::optional<std::size_t> ColumnSchema::feature_index(const std::string& name) const {
    for (std::size_t i = 0; i < features_.size(); ++i) {
        if (features_[i].name == name) return i;
    }
    return std::nullopt;
}

ColumnSchema ColumnSchema::without(const std::vector<std::string>& dropped) const {
    for (const auto& name : dropped) {
        if (!feature_index(name)) {
            throw SchemaError("cannot drop unknown feature \"" + name + "\"");
        }
    }
    std::vector<FeatureColumn> kept;
    for (const auto& f : features_) {
        if (std::find(dropped.begin(), dropped.end(), f.name) == dropped.end()) {
            kept.push_back(f);
        }
    }
    if (kept.empty()) {
        throw SchemaError("dropping all feature columns leaves an empty schema");
    }
    return ColumnSchema(std::move(kept), target_, allow_index_column_);
}

}  // namespace smokeml
