#pragma once

#include "json.hpp"
#include "mm/difftest.hpp"
#include "mm/fc.hpp"

namespace mm {

using Json = nlohmann::ordered_json;

Json error_json(const Error& e);
Json error_json(const std::string& code, const std::string& message);

Json to_json(const HilbertTable& T);
/// {"ell":..,"e":{"(k0,..)":v,..},"route":..,"base":..,"window":..}
Json to_json(const MixedReport& R);
Json to_json(const FCSequenceRecord& rec);
Json to_json(const PositivityResult& p);
Json to_json(const Theorem43Report& r);
Json to_json(const HilbertSamuelResult& h);
Json to_json(const std::vector<FreeQuotientStep>& steps);
Json to_json(const DiffOutcome& d);

/// Process exit status for an error: 1 input, 2 finding, 3 inconclusive.
int exit_code_for(ErrorCode code);

}  // namespace mm
