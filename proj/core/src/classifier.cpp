#include "smokeml/classifier.hpp"

#include "smokeml/parallel.hpp"

namespace smokeml {

std::vector<double> Classifier::predict_proba_rows(const Matrix& rows) const {
    std::vector<double> out(rows.rows());
    parallel_for(rows.rows(), [&](std::size_t i) { out[i] = predict_proba(rows.row(i)); });
    return out;
}

}  // namespace smokeml
