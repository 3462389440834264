#pragma once

#include <string>

#include "evdeg/verifier.hpp"

namespace evdeg {

// Serialize a verification report. Output is a pure function of the report
// contents, so identical runs produce identical bytes.
std::string report_json(const Report& rep);
std::string report_csv(const Report& rep);

}  // namespace evdeg
