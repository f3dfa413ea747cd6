#pragma once

#include <string>
#include <vector>

#include "qcf/series.hpp"
#include "qcf/verifier.hpp"

namespace qcf {

// {"coeffs": ["1", "-3/7", ...], "order": n, "scale": s}
std::string series_to_json(const Series<Rat>& s);
std::string series_to_json(const Series<EisRat>& s);
Series<Rat> series_from_json(const std::string& text);

// {id, order, certificate, status, assignments[], first_mismatch?, elapsed_ms, ...}
std::string report_to_json(const VerificationReport& r, int indent = 2);
std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent = 2);

}  // namespace qcf
