#include "berge/certificate_json.hpp"

namespace berge {

Json to_json(const BergeCycle& c) {
  return Json{{"vertices", c.vertices}, {"edges", c.edges}};
}

Json to_json(const SearchStats& s) {
  return Json{{"expanded", s.expanded}, {"matching_checks", s.matching_checks}};
}

Json certificate_to_json(const PancyclicityCertificate& cert) {
  Json cycles = Json::object();
  Json prov = Json::object();
  for (const auto& [len, entry] : cert.cycles) {
    Json c = to_json(entry.cycle);
    c["method"] = entry.method;
    cycles[std::to_string(len)] = std::move(c);
    prov[std::to_string(len)] = entry.method;
  }
  Json trace = Json::array();
  for (const auto& t : cert.trace) {
    trace.push_back(Json{{"stage", t.stage}, {"outcome", t.outcome}, {"detail", t.detail}});
  }
  Json out;
  out["n"] = cert.n;
  out["r"] = cert.r;
  out["complete"] = cert.complete();
  out["cycles"] = std::move(cycles);
  out["missing"] = cert.missing;
  out["unknown"] = cert.unknown;
  out["provenance"] = std::move(prov);
  out["pipeline_trace"] = std::move(trace);
  out["stats"] = to_json(cert.stats);
  out["phi"] = cert.phi ? Json(*cert.phi) : Json(nullptr);
  return out;
}

}  // namespace berge
