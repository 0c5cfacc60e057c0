#pragma once

#include <optional>
#include <string>
#include <vector>

namespace smokeml {

struct FeatureColumn {
    std::string name;
    std::string unit;  // informational only

    bool operator==(const FeatureColumn&) const = default;
};

// Names and order of the columns a dataset provides. Feature names are
// unique and non-empty, and the target never appears among the features.
class ColumnSchema {
public:
    ColumnSchema(std::vector<FeatureColumn> features, std::string target,
                 bool allow_index_column = true);

    // The 14 smoke-detector sensor columns plus the "Fire Alarm" target.
    static ColumnSchema smoke_default();

    // Build from bare names (units left empty).
    static ColumnSchema from_names(const std::vector<std::string>& features,
                                   const std::string& target,
                                   bool allow_index_column = true);

    const std::vector<FeatureColumn>& feature_columns() const { return features_; }
    const std::string& target_column() const { return target_; }
    bool allow_index_column() const { return allow_index_column_; }
    std::size_t feature_count() const { return features_.size(); }

    std::vector<std::string> feature_names() const;
    std::optional<std::size_t> feature_index(const std::string& name) const;

    // Copy without the listed feature columns; unknown names raise SchemaError.
    ColumnSchema without(const std::vector<std::string>& dropped) const;

    bool operator==(const ColumnSchema&) const = default;

private:
    std::vector<FeatureColumn> features_;
    std::string target_;
    bool allow_index_column_ = true;

    void validate() const;
};

}  // namespace smokeml
