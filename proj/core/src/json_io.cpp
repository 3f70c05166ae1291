#include "ela/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ela {

namespace {

Json matrix3_json(const Eigen::Matrix3d& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

Json to_json(const InvariantVector& v) {
    Json out = Json::array();
    for (const auto& e : v.entries())
        out.push_back(Json{{"name", e.name}, {"value", e.value}, {"degree", e.degree}});
    return out;
}

Json to_json(const HarmonicDecomposition& dec) {
    Json out;
    out["lambda"] = dec.lambda;
    out["mu"] = dec.mu;
    out["d_prime"] = matrix3_json(to_matrix(dec.d_prime.sym()));
    out["v_prime"] = matrix3_json(to_matrix(dec.v_prime.sym()));
    Json h = Json::array();
    for (std::size_t m = 0; m < dec.h.raw().size(); ++m) h.push_back(dec.h.raw()[m]);
    out["h"] = h;
    out["norms"] = Json{{"d_prime", norm(dec.d_prime.raw())},
                        {"v_prime", norm(dec.v_prime.raw())},
                        {"h", norm(dec.h.raw())}};
    return out;
}

Json to_json(const GenericityReport& rep) {
    Json out;
    out["orthotropic_d2"] = rep.orthotropic_d2;
    out["orthotropy_detector"] = rep.orthotropy_detector;
    out["triclinic_pair"] = rep.triclinic_pair;
    out["triclinic_detector_d2"] = rep.triclinic_detector_d2;
    out["triclinic_detector_d3"] = rep.triclinic_detector_d3;
    out["generic"] = rep.generic;
    return out;
}

Json to_json(const CompareResult& res) {
    Json out;
    switch (res.decision) {
        case Decision::Equivalent: out["decision"] = "equivalent"; break;
        case Decision::Distinct: out["decision"] = "distinct"; break;
        case Decision::NonGeneric: out["decision"] = "non_generic"; break;
    }
    out["max_relative_delta"] = res.max_relative_delta;
    out["genericity_1"] = to_json(res.report1);
    out["genericity_2"] = to_json(res.report2);
    Json deltas = Json::array();
    for (const auto& d : res.deltas)
        deltas.push_back(Json{{"name", d.name},
                              {"value_1", d.value1},
                              {"value_2", d.value2},
                              {"delta", d.delta},
                              {"scale", d.scale}});
    out["deltas"] = deltas;
    return out;
}

Json to_json(const BinaryForm& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(Json::array({c.real(), c.imag()}));
    return Json{{"degree", f.degree()}, {"coefficients", coeffs}};
}

Json to_json(const Rotation& g) { return matrix3_json(g.matrix()); }

Json voigt_json(const ElasticityTensor& e) {
    const Voigt6 c = e.to_voigt();
    Json rows = Json::array();
    for (int i = 0; i < 6; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 6; ++j) row.push_back(c(i, j));
        rows.push_back(row);
    }
    return Json{{"voigt", rows}};
}

ElasticityTensor elasticity_from_json(const nlohmann::json& j) {
    if (j.contains("voigt")) {
        const auto& rows = j.at("voigt");
        if (!rows.is_array() || rows.size() != 6)
            throw FormatError("elasticity json: \"voigt\" must be a 6x6 array");
        Voigt6 c;
        for (int i = 0; i < 6; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != 6)
                throw FormatError("elasticity json: \"voigt\" must be a 6x6 array");
            for (int k = 0; k < 6; ++k) c(i, k) = row[static_cast<std::size_t>(k)].get<double>();
        }
        return ElasticityTensor::from_voigt(c);
    }
    if (j.contains("components")) {
        const auto& arr = j.at("components");
        if (!arr.is_array() || arr.size() != 81)
            throw FormatError("elasticity json: \"components\" must hold 81 numbers");
        std::array<double, 81> c{};
        for (std::size_t m = 0; m < 81; ++m) c[m] = arr[m].get<double>();
        return ElasticityTensor::from_components(c);
    }
    throw FormatError("elasticity json: expected \"voigt\" or \"components\"");
}

BinaryForm binary_form_from_json(const nlohmann::json& j) {
    const int degree = j.at("degree").get<int>();
    const auto& arr = j.at("coefficients");
    if (!arr.is_array() || static_cast<int>(arr.size()) != degree + 1)
        throw FormatError("binary form json: coefficient count must be degree+1");
    std::vector<Cplx> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_array() || c.size() != 2)
            throw FormatError("binary form json: coefficients are [re, im] pairs");
        coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return BinaryForm::from_coefficients(std::move(coeffs));
}

ElasticityTensor read_elasticity_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw FormatError("empty input file: " + path);
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& err) {
            throw FormatError("json parse failure in " + path + ": " + err.what());
        }
        return elasticity_from_json(j);
    }
    // plain-text 6x6 matrix
    std::istringstream is(text);
    Voigt6 c;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (!(is >> c(i, j))) throw FormatError("expected 36 numbers in " + path);
    double extra;
    if (is >> extra) throw FormatError("trailing data after 6x6 matrix in " + path);
    return ElasticityTensor::from_voigt(c);
}

}  // namespace ela
