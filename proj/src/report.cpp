#include "mm/report.hpp"

namespace mm {

Json error_json(const std::string& code, const std::string& message) {
  Json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  return j;
}

Json error_json(const Error& e) {
  Json j = error_json(std::string(error_code_name(e.code())), e.what());
  if (auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    j["error"]["line"] = s->line();
    j["error"]["column"] = s->column();
  }
  return j;
}

Json to_json(const HilbertTable& T) {
  Json j;
  j["ell"] = T.ell;
  j["stabilized"] = T.stabilized;
  j["base"] = T.base;
  j["window"] = T.window;
  Json values = Json::array();
  for (std::size_t idx = 0; idx < T.values.size(); ++idx) {
    std::vector<int> n(T.dims);
    std::size_t rest = idx;
    for (int d = T.dims - 1; d >= 0; --d) {
      n[d] = T.base + static_cast<int>(rest % (T.window + 1));
      rest /= T.window + 1;
    }
    values.push_back({{"n", n}, {"H", T.values[idx]}});
  }
  j["values"] = std::move(values);
  return j;
}

Json to_json(const MixedReport& R) {
  Json j;
  j["ell"] = R.ell;
  Json e = Json::object();
  for (const auto& [k, v] : R.entries) e[type_label(k)] = v;
  j["e"] = std::move(e);
  j["route"] = route_name(R.route);
  j["base"] = R.base;
  j["window"] = R.window;
  return j;
}

Json to_json(const FCSequenceRecord& rec) {
  Json j;
  Json elems = Json::array();
  for (const auto& c : rec.elements) {
    Json x;
    x["element"] = c.element.to_string();
    x["direction"] = c.direction;
    x["seed"] = c.seed;
    x["fc1"] = c.checks.fc1;
    x["fc2"] = c.checks.fc2;
    x["fc3"] = c.checks.fc3 ? Json(*c.checks.fc3) : Json("skipped");
    x["reverified"] = c.checks.reverified;
    elems.push_back(std::move(x));
  }
  j["elements"] = std::move(elems);
  j["dims"] = rec.dims;
  j["maximal"] = rec.maximal;
  j["fc_base"] = rec.fc_base;
  j["fc_window"] = rec.fc_window;
  return j;
}

Json to_json(const PositivityResult& p) {
  Json j;
  j["outcome"] = positivity_name(p.outcome);
  j["seeds"] = p.seeds_tried;
  if (p.witness) j["witness"] = to_json(*p.witness);
  return j;
}

Json to_json(const Theorem43Report& r) {
  Json j;
  j["type"] = type_label(r.type);
  j["status"] = verify_status_name(r.status);
  j["ell"] = r.ell;
  j["base"] = r.base;
  j["e_direct"] = r.e_direct;
  if (r.e_reduced) j["e_reduced"] = *r.e_reduced;
  if (r.sequence) {
    j["sequence"] = to_json(*r.sequence);
    j["dimension_equality"] = r.dimension_equality;
  }
  if (r.positivity) j["positivity"] = to_json(*r.positivity);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const HilbertSamuelResult& h) {
  Json j;
  j["dim"] = h.dim;
  j["mult"] = h.mult;
  j["base"] = h.base;
  j["values"] = h.values;
  return j;
}

Json to_json(const std::vector<FreeQuotientStep>& steps) {
  Json j = Json::array();
  for (const auto& s : steps) {
    Json x;
    x["direction"] = s.direction;
    x["t"] = s.t;
    x["dim"] = s.dim;
    if (s.direction > 0) x["unit_drop"] = s.unit_drop;
    j.push_back(std::move(x));
  }
  return j;
}

Json to_json(const DiffOutcome& d) {
  Json j;
  j["instances"] = d.problems.size();
  j["points"] = d.points;
  Json mm = Json::array();
  for (const auto& m : d.mismatches) {
    mm.push_back({{"instance", m.instance}, {"n", m.n}, {"staircase", m.staircase}, {"groebner", m.groebner},
                  {"problem", print_problem(d.problems.at(m.instance))}});
  }
  j["mismatches"] = std::move(mm);
  return j;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStabilization:
    case ErrorCode::kSearchFailure:
    case ErrorCode::kComputationLimit:
      return 3;
    case ErrorCode::kInternalInconsistency:
    case ErrorCode::kInvariantViolation:
      return 2;
    default:
      return 1;
  }
}

}  // namespace mm
