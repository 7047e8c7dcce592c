#pragma once

#include <string>
#include <vector>

#include "framespec/serialization.hpp"

namespace framespec {

// One verified published value: the reference (with its provenance), what the
// implementation produced, and the worst deviation against the tolerance.
// Provenance vocabulary: "tabulated" (printed numbers), "closed-form"
// (printed formula evaluated), "identity" (mathematical identity checked
// numerically), "oracle" (independent solver).
struct ReproductionCheck {
    std::string name;
    json expected;
    std::string provenance;
    json got;
    double tolerance = 0.0;
    double deviation = 0.0;
    bool pass = false;
};

struct ReproductionReport {
    int example_id = 0;
    std::vector<ReproductionCheck> checks;
    bool all_pass() const;
};

// Rebuild worked example id (1..5) and verify every published value it
// carries. Throws NOutOfRange for any other id.
ReproductionReport reproduce_example(int id);

// All five examples in order.
std::vector<ReproductionReport> reproduce_all();

json report_to_json(const ReproductionReport& r);

}  // namespace framespec
