#include "smokeml/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "smokeml/adaboost.hpp"
#include "smokeml/decision_tree.hpp"
#include "smokeml/density_ensemble.hpp"
#include "smokeml/errors.hpp"
#include "smokeml/gbt.hpp"
#include "smokeml/knn.hpp"
#include "smokeml/linear_svm.hpp"
#include "smokeml/logistic_regression.hpp"
#include "smokeml/naive_bayes.hpp"
#include "smokeml/random_forest.hpp"

namespace smokeml {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "smokeml-model";
constexpr int kVersion = 1;

json matrix_to_json(const Matrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = m.data();
    return j;
}

Matrix matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    auto data = j.at("data").get<std::vector<double>>();
    if (data.size() != rows * cols) {
        throw SchemaError("matrix data length does not match rows x cols");
    }
    return Matrix(rows, cols, std::move(data));
}

json tree_to_json(const Tree& tree) {
    json nodes = json::array();
    for (const TreeNode& n : tree.nodes()) {
        nodes.push_back({{"feature", n.feature},
                         {"threshold", n.threshold},
                         {"left", n.left},
                         {"right", n.right},
                         {"value", n.value}});
    }
    return nodes;
}

Tree tree_from_json(const json& j) {
    std::vector<TreeNode> nodes;
    nodes.reserve(j.size());
    for (const json& jn : j) {
        TreeNode n;
        n.feature = jn.at("feature").get<int>();
        n.threshold = jn.at("threshold").get<double>();
        n.left = jn.at("left").get<int>();
        n.right = jn.at("right").get<int>();
        n.value = jn.at("value").get<double>();
        nodes.push_back(n);
    }
    return Tree(std::move(nodes));
}

json trees_to_json(const std::vector<Tree>& trees) {
    json out = json::array();
    for (const Tree& t : trees) out.push_back(tree_to_json(t));
    return out;
}

std::vector<Tree> trees_from_json(const json& j) {
    std::vector<Tree> trees;
    trees.reserve(j.size());
    for (const json& jt : j) trees.push_back(tree_from_json(jt));
    return trees;
}

json body_for(const Classifier& model);

json ensemble_to_json(const WeightedEnsembleModel& m) {
    json j;
    j["knn"] = body_for(m.knn());
    j["gbt"] = body_for(m.gbt());
    j["profile"] = {{"reference_points", matrix_to_json(m.profile().reference_points)},
                    {"k_density", m.profile().k_density},
                    {"densities", m.profile().densities},
                    {"threshold", m.profile().threshold}};
    j["weights"] = {{"alpha_high", m.weights().alpha_high}, {"alpha_low", m.weights().alpha_low}};
    return j;
}

json body_for(const Classifier& model) {
    json j;
    j["kind"] = model.kind();
    if (const auto* lr = dynamic_cast<const LogisticRegressionClassifier*>(&model)) {
        j["weights"] = lr->weights();
        j["bias"] = lr->bias();
    } else if (const auto* nb = dynamic_cast<const GaussianNbClassifier*>(&model)) {
        j["means"] = {nb->means()[0], nb->means()[1]};
        j["variances"] = {nb->variances()[0], nb->variances()[1]};
        j["priors"] = {nb->priors()[0], nb->priors()[1]};
    } else if (const auto* knn = dynamic_cast<const KnnClassifier*>(&model)) {
        j["k"] = knn->k();
        j["labels"] = knn->labels();
        j["data"] = matrix_to_json(knn->data());
    } else if (const auto* dt = dynamic_cast<const CartClassifier*>(&model)) {
        j["tree"] = tree_to_json(dt->tree());
        j["n_features"] = dt->feature_count();
    } else if (const auto* rf = dynamic_cast<const RandomForestClassifier*>(&model)) {
        j["trees"] = trees_to_json(rf->trees());
        j["n_features"] = rf->feature_count();
    } else if (const auto* ab = dynamic_cast<const AdaBoostClassifier*>(&model)) {
        j["stumps"] = trees_to_json(ab->stumps());
        j["alphas"] = ab->alphas();
        j["n_features"] = ab->feature_count();
    } else if (const auto* gbt = dynamic_cast<const GbtClassifier*>(&model)) {
        j["base_score"] = gbt->base_score();
        j["trees"] = trees_to_json(gbt->trees());
        j["n_features"] = gbt->feature_count();
        j["training_loss"] = gbt->training_loss();
    } else if (const auto* svm = dynamic_cast<const LinearSvmClassifier*>(&model)) {
        j["weights"] = svm->weights();
        j["bias"] = svm->bias();
    } else if (const auto* ens = dynamic_cast<const WeightedEnsembleModel*>(&model)) {
        j.update(ensemble_to_json(*ens));
    } else {
        throw ArgumentError("cannot serialize model of kind '" + model.kind() + "'");
    }
    return j;
}

std::unique_ptr<Classifier> model_from_body(const json& j);

KnnClassifier knn_from_body(const json& j) {
    return KnnClassifier(matrix_from_json(j.at("data")), j.at("labels").get<std::vector<int>>(),
                         j.at("k").get<int>());
}

GbtClassifier gbt_from_body(const json& j) {
    return GbtClassifier(j.at("base_score").get<double>(), trees_from_json(j.at("trees")),
                         j.at("n_features").get<std::size_t>(),
                         j.value("training_loss", std::vector<double>{}));
}

std::unique_ptr<Classifier> model_from_body(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "lr") {
        return std::make_unique<LogisticRegressionClassifier>(
            j.at("weights").get<std::vector<double>>(), j.at("bias").get<double>());
    }
    if (kind == "nb") {
        std::array<std::vector<double>, 2> means{
            j.at("means").at(0).get<std::vector<double>>(),
            j.at("means").at(1).get<std::vector<double>>()};
        std::array<std::vector<double>, 2> variances{
            j.at("variances").at(0).get<std::vector<double>>(),
            j.at("variances").at(1).get<std::vector<double>>()};
        std::array<double, 2> priors{j.at("priors").at(0).get<double>(),
                                     j.at("priors").at(1).get<double>()};
        return std::make_unique<GaussianNbClassifier>(std::move(means), std::move(variances),
                                                      priors);
    }
    if (kind == "knn") {
        return std::make_unique<KnnClassifier>(knn_from_body(j));
    }
    if (kind == "dt") {
        return std::make_unique<CartClassifier>(tree_from_json(j.at("tree")),
                                                j.at("n_features").get<std::size_t>());
    }
    if (kind == "rf") {
        return std::make_unique<RandomForestClassifier>(trees_from_json(j.at("trees")),
                                                        j.at("n_features").get<std::size_t>());
    }
    if (kind == "adaboost") {
        return std::make_unique<AdaBoostClassifier>(trees_from_json(j.at("stumps")),
                                                    j.at("alphas").get<std::vector<double>>(),
                                                    j.at("n_features").get<std::size_t>());
    }
    if (kind == "gbt") {
        return std::make_unique<GbtClassifier>(gbt_from_body(j));
    }
    if (kind == "svm") {
        return std::make_unique<LinearSvmClassifier>(j.at("weights").get<std::vector<double>>(),
                                                     j.at("bias").get<double>());
    }
    if (kind == "ensemble") {
        const json& jp = j.at("profile");
        DensityProfile profile;
        profile.reference_points = matrix_from_json(jp.at("reference_points"));
        profile.k_density = jp.at("k_density").get<int>();
        profile.densities = jp.at("densities").get<std::vector<double>>();
        profile.threshold = jp.at("threshold").get<double>();
        RegionWeights weights{j.at("weights").at("alpha_high").get<double>(),
                              j.at("weights").at("alpha_low").get<double>()};
        return std::make_unique<WeightedEnsembleModel>(knn_from_body(j.at("knn")),
                                                       gbt_from_body(j.at("gbt")),
                                                       std::move(profile), weights);
    }
    throw SchemaError("unknown model kind '" + kind + "'");
}

}  // namespace

std::string serialize_model(const Classifier& model) {
    json j = body_for(model);
    j["format"] = kFormat;
    j["version"] = kVersion;
    return j.dump(2);
}

std::unique_ptr<Classifier> deserialize_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        if (j.value("format", "") != kFormat) {
            throw SchemaError("not a " + std::string(kFormat) + " file");
        }
        if (j.value("version", -1) != kVersion) {
            throw SchemaError("unsupported model format version");
        }
        return model_from_body(j);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed model file: ") + e.what());
    }
}

void save_model(const Classifier& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open '" + path + "' for writing");
    }
    out << serialize_model(model) << '\n';
    if (!out) {
        throw DataError("failed writing model to '" + path + "'");
    }
}

std::unique_ptr<Classifier> load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open model file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return deserialize_model(buffer.str());
}

}  // namespace smokeml
