#include "interference/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "interference/errors.hpp"

namespace interference {

namespace {

using nlohmann::json;

ExposureSpec spec_from_json(const json& j, std::shared_ptr<const Network> net, std::size_t n) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "no-effect") return ExposureSpec::no_effect(n);
    if (family == "own-treatment") return ExposureSpec::own_treatment(n);
    if (family == "stratified" || family == "arbitrary") {
        if (!net) throw DataError("model spec family '" + family + "' requires a network");
        return family == "stratified" ? ExposureSpec::stratified(std::move(net))
                                      : ExposureSpec::arbitrary_neighborhood(std::move(net));
    }
    throw DataError("unknown exposure family '" + family + "'");
}

Model parse_model(const json& j, std::shared_ptr<const Network> net) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lim") {
        if (!net) throw DataError("lim model requires a network");
        std::vector<LimCoeffs> beta;
        for (const auto& row : j.at("beta")) {
            if (!row.is_array() || row.size() != 3)
                throw DataError("lim beta rows must be [b1, b2, b3]");
            beta.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
        }
        try {
            return LimModel(std::move(net), std::move(beta));
        } catch (const UsageError& e) {
            throw DataError(e.what());
        }
    }
    if (kind == "exposure") {
        std::vector<std::vector<double>> coeffs;
        for (const auto& row : j.at("coeffs")) coeffs.push_back(row.get<std::vector<double>>());
        const std::size_t n = net ? net->n() : coeffs.size();
        ExposureSpec spec = spec_from_json(j.at("spec"), std::move(net), n);
        try {
            return ExposureOutcomeModel(std::move(spec), std::move(coeffs));
        } catch (const UsageError& e) {
            throw DataError(e.what());
        }
    }
    throw DataError("unknown model kind '" + kind + "'");
}

}  // namespace

Model load_model_json(const std::string& text, std::shared_ptr<const Network> net) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        return parse_model(j, std::move(net));
    } catch (const json::exception& e) {
        throw DataError(std::string("model file schema error: ") + e.what());
    }
}

Model load_model_file(const std::string& path, std::shared_ptr<const Network> net) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_model_json(buffer.str(), std::move(net));
}

std::string save_model_json(const Model& model) {
    nlohmann::ordered_json j;
    if (const auto* lim = std::get_if<LimModel>(&model)) {
        j["kind"] = "lim";
        auto rows = json::array();
        for (const LimCoeffs& b : lim->beta()) rows.push_back({b.b1, b.b2, b.b3});
        j["beta"] = std::move(rows);
    } else {
        const auto& exposure = std::get<ExposureOutcomeModel>(model);
        if (exposure.spec().family() == ExposureFamily::Tabulated)
            throw DataError("tabulated exposure specs are not serializable");
        j["kind"] = "exposure";
        j["spec"] = {{"family", exposure.spec().family_name()}};
        j["coeffs"] = exposure.coeffs();
    }
    return j.dump();
}

std::vector<double> evaluate_outcomes(const Model& model, const Intervention& z) {
    return std::visit([&](const auto& m) { return evaluate_outcomes(m, z); }, model);
}

}  // namespace interference
