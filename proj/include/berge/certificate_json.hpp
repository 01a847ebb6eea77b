#pragma once

#include "berge/berge_search.hpp"
#include "json.hpp"

namespace berge {

using Json = nlohmann::ordered_json;

Json to_json(const BergeCycle& c);
Json to_json(const SearchStats& s);

// {"n","r","complete","cycles":{"3":{vertices,edges,method}},"missing",
//  "unknown","provenance","pipeline_trace","stats","phi"}
Json certificate_to_json(const PancyclicityCertificate& cert);

}  // namespace berge
