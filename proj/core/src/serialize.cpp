#include "qcf/serialize.hpp"

#include "json.hpp"

namespace qcf {

namespace {

using nlohmann::json;

template <class R>
json series_json(const Series<R>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}, {"order", s.order()}, {"scale", s.scale()}};
}

json report_json(const VerificationReport& r) {
  json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["draws"] = r.draws;
  j["seed"] = r.seed;
  j["certificate"] = r.certificate;
  j["status"] = r.pass ? "pass" : "fail";
  j["assignments"] = r.assignments;
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    j["first_mismatch"] = {{"coefficient", m.coefficient}, {"t_index", m.t_index}, {"scale", m.scale},
                           {"pair", m.pair},               {"lhs", m.lhs},         {"rhs", m.rhs},
                           {"assignment", m.assignment}};
  }
  if (r.error) j["error"] = *r.error;
  j["rings"] = r.rings;
  j["pairs_checked"] = r.pairs_checked;
  j["redraws"] = r.redraws;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string series_to_json(const Series<Rat>& s) { return series_json(s).dump(); }
std::string series_to_json(const Series<EisRat>& s) { return series_json(s).dump(); }

Series<Rat> series_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("scale"))
    throw Error(ErrorKind::Parse, "series JSON needs coeffs and scale");
  std::vector<Rat> c;
  for (const auto& x : j.at("coeffs")) c.push_back(Rat::parse(x.get<std::string>()));
  const int order = j.value("order", static_cast<int>(c.size()) - 1);
  if (order != static_cast<int>(c.size()) - 1) throw Error(ErrorKind::Parse, "order does not match coeffs");
  return Series<Rat>(std::move(c), j.at("scale").get<int>());
}

std::string report_to_json(const VerificationReport& r, int indent) { return report_json(r).dump(indent); }

std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(report_json(r));
  return a.dump(indent);
}

}  // namespace qcf
