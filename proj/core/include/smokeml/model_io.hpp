#pragma once

#include <memory>
#include <string>

#include "smokeml/classifier.hpp"

namespace smokeml {

// Self-describing portable text form (JSON with a format/version envelope).
// Deserializing the output reproduces the model state exactly, doubles
// included. Supported kinds: lr, nb, knn, dt, rf, adaboost, gbt, svm,
// ensemble.
std::string serialize_model(const Classifier& model);
std::unique_ptr<Classifier> deserialize_model(const std::string& text);

void save_model(const Classifier& model, const std::string& path);
std::unique_ptr<Classifier> load_model(const std::string& path);

}  // namespace smokeml
