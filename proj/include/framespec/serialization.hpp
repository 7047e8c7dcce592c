#pragma once

#include <utility>

#include <json.hpp>

#include "framespec/frames.hpp"
#include "framespec/hamiltonian.hpp"
#include "framespec/linalg.hpp"
#include "framespec/secular.hpp"

namespace framespec {

using json = nlohmann::json;

// Complex numbers serialize as [re, im]; matrices as row-major arrays of
// rows. Parsing throws ParseError with the offending field named in the
// message. serialize -> parse is the identity on finite doubles (nlohmann
// emits shortest round-trip decimals).

json complex_to_json(const cplx& z);
cplx complex_from_json(const json& j, const std::string& field);

json vector_to_json(const CVector& v);
CVector vector_from_json(const json& j, const std::string& field);

json matrix_to_json(const CMatrix& m);

// Frame schema: {"dim": int, "vectors": [[[re,im],...],...], "labels": [str]?}
json frame_to_json(const Frame& f);
Frame frame_from_json(const json& j);

// Hamiltonian schema: {"frame": <Frame>, "coeffs": [real,...]}
json hamiltonian_to_json(const Frame& f, const CoefficientSequence& e);
std::pair<Frame, CoefficientSequence> hamiltonian_from_json(const json& j);

json report_to_json(const FrameReport& r);
json report_to_json(const NaimarkDilation& d);
json report_to_json(const EigenCertificate& c);
json report_to_json(const EConnection& e);
json report_to_json(const SecularRoots& r);
json report_to_json(const SumRuleReport& r);

}  // namespace framespec
