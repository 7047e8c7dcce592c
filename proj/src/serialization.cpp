#include "framespec/serialization.hpp"

#include <string>
#include <utility>
#include <vector>

namespace framespec {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(field + ": expected a [re, im] pair of numbers");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json vector_to_json(const CVector& v) {
    json out = json::array();
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v[k]));
    return out;
}

CVector vector_from_json(const json& j, const std::string& field) {
    if (!j.is_array()) throw ParseError(field + ": expected an array of [re, im] pairs");
    std::vector<cplx> entries;
    entries.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        entries.push_back(complex_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    return CVector(std::move(entries));
}

json matrix_to_json(const CMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json frame_to_json(const Frame& f) {
    json out;
    out["dim"] = f.dim();
    json vectors = json::array();
    for (const CVector& v : f.vectors()) vectors.push_back(vector_to_json(v));
    out["vectors"] = std::move(vectors);
    if (!f.labels().empty()) out["labels"] = f.labels();
    return out;
}

Frame frame_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("frame: expected an object");
    if (!j.contains("dim")) throw ParseError("dim: missing");
    // nlohmann stores 2 and 2u differently; accept any integer >= 0
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw ParseError("dim: expected a nonnegative integer");
    if (!j.contains("vectors")) throw ParseError("vectors: missing");
    if (!j["vectors"].is_array()) throw ParseError("vectors: expected an array");

    const std::size_t dim = j["dim"].get<std::size_t>();
    std::vector<CVector> vectors;
    vectors.reserve(j["vectors"].size());
    for (std::size_t k = 0; k < j["vectors"].size(); ++k) {
        CVector v = vector_from_json(j["vectors"][k], "vectors[" + std::to_string(k) + "]");
        if (v.size() != dim)
            throw ParseError("vectors[" + std::to_string(k) + "]: length " +
                             std::to_string(v.size()) + " does not match dim " +
                             std::to_string(dim));
        vectors.push_back(std::move(v));
    }

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("labels: expected an array of strings");
        for (std::size_t k = 0; k < j["labels"].size(); ++k) {
            if (!j["labels"][k].is_string())
                throw ParseError("labels[" + std::to_string(k) + "]: expected a string");
            labels.push_back(j["labels"][k].get<std::string>());
        }
    }
    return Frame(dim, std::move(vectors), std::move(labels));
}

json hamiltonian_to_json(const Frame& f, const CoefficientSequence& e) {
    json out;
    out["frame"] = frame_to_json(f);
    out["coeffs"] = e.values;
    return out;
}

std::pair<Frame, CoefficientSequence> hamiltonian_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("hamiltonian: expected an object");
    if (!j.contains("frame")) throw ParseError("frame: missing");
    if (!j.contains("coeffs")) throw ParseError("coeffs: missing");
    if (!j["coeffs"].is_array()) throw ParseError("coeffs: expected an array of reals");
    std::vector<double> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (std::size_t k = 0; k < j["coeffs"].size(); ++k) {
        if (!j["coeffs"][k].is_number())
            throw ParseError("coeffs[" + std::to_string(k) + "]: expected a real number");
        coeffs.push_back(j["coeffs"][k].get<double>());
    }
    return {frame_from_json(j["frame"]), CoefficientSequence(std::move(coeffs))};
}

json report_to_json(const FrameReport& r) {
    json out;
    out["count"] = r.count;
    out["dim"] = r.dim;
    out["lower_bound"] = r.lower_bound;
    out["upper_bound"] = r.upper_bound;
    out["potential"] = r.potential;
    out["excess"] = r.excess;
    out["is_parseval"] = r.is_parseval;
    out["tolerance_used"] = r.tolerance_used;
    return out;
}

json report_to_json(const NaimarkDilation& d) {
    json out;
    out["excess"] = d.psi.dim();
    out["psi"] = frame_to_json(d.psi);
    out["psi_gram"] = matrix_to_json(gram(d.psi));
    json onb = json::array();
    for (const CVector& v : d.onb) onb.push_back(vector_to_json(v));
    out["onb"] = std::move(onb);
    out["residual"] = d.residual;
    return out;
}

json report_to_json(const EigenCertificate& c) {
    json out;
    out["mu"] = c.mu;
    out["accepted"] = c.accepted;
    out["coefficient_vector"] = vector_to_json(c.coefficient_vector);
    out["eigenvector"] = vector_to_json(c.eigenvector);
    out["gram_norm"] = c.gram_norm;
    out["b_norm"] = c.b_norm;
    out["tolerance_used"] = c.tolerance_used;
    return out;
}

json report_to_json(const EConnection& e) {
    json out;
    out["tilde_E"] = e.tilde_E;
    json vectors = json::array();
    for (const CVector& v : e.tilde_e) vectors.push_back(vector_to_json(v));
    out["tilde_e"] = std::move(vectors);
    out["reconstruction_residual"] = e.reconstruction_residual;
    return out;
}

json report_to_json(const SecularRoots& r) {
    json out;
    out["roots"] = r.roots;
    out["residuals"] = r.residuals;
    return out;
}

json report_to_json(const SumRuleReport& r) {
    json out;
    json checks = json::array();
    for (const SumRuleCheck& c : r.checks) {
        json entry;
        entry["name"] = c.name;
        entry["residual"] = c.residual;
        entry["pass"] = c.pass;
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    out["tolerance_used"] = r.tolerance_used;
    out["all_pass"] = r.all_pass();
    return out;
}

}  // namespace framespec
