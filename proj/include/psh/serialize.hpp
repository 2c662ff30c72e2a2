#pragma once

#include <string>

#include "psh/report.hpp"
#include "psh/schur.hpp"
#include "psh/table_algebra.hpp"

namespace psh {

// SchurVector wire format: a JSON list of {"partition":[...],"coeff":"..."}
// records in canonical term order; coefficients as decimal strings so the
// round trip is bit-exact at any magnitude.
std::string schur_to_json(const SchurVector& v);
SchurVector schur_from_json(const std::string& text);

// Module tables embed their algebra so a file stands alone.
std::string module_to_json(const ModuleTable& m);
ModuleTable module_from_json(const std::string& text);

std::string check_to_json(const CheckResult& r);

}  // namespace psh
