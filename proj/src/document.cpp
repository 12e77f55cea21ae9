#include "weilgraph/document.hpp"

#include <cstdint>
#include <cstdio>

namespace weilgraph {
namespace {

using nlohmann::json;

std::size_t as_natural(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> as_natural_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_natural(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

MultiGraph InputDocument::graph() const { return MultiGraph(vertices, edges); }

TwistedCurveModel InputDocument::model() const {
  if (!genera) throw PreconditionError("document has no 'genera' field");
  if (!stabilizers) throw PreconditionError("document has no 'stabilizers' field");
  return TwistedCurveModel(graph(), *genera, *stabilizers);
}

InputDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "vertices" && key != "edges" && key != "genera" && key != "stabilizers")
      throw ParseError("unknown field '" + key + "'");
  }
  if (!j.contains("vertices")) throw ParseError("missing field 'vertices'");
  if (!j.contains("edges")) throw ParseError("missing field 'edges'");

  InputDocument doc;
  doc.vertices = as_natural(j["vertices"], "vertices");
  const json& edges = j["edges"];
  if (!edges.is_array()) throw ParseError("edges: expected a list of [u, v] pairs");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto pair = as_natural_list(edges[i], "edges[" + std::to_string(i) + "]");
    if (pair.size() != 2) throw ParseError("edges[" + std::to_string(i) + "]: expected [u, v]");
    doc.edges.push_back({pair[0], pair[1]});
  }
  if (j.contains("genera")) doc.genera = as_natural_list(j["genera"], "genera");
  if (j.contains("stabilizers")) doc.stabilizers = as_natural_list(j["stabilizers"], "stabilizers");
  return doc;
}

std::string serialize_document(const InputDocument& doc) {
  json j;
  j["vertices"] = doc.vertices;
  j["edges"] = json::array();
  for (const Edge& e : doc.edges) j["edges"].push_back({e.u, e.v});
  if (doc.genera) j["genera"] = *doc.genera;
  if (doc.stabilizers) j["stabilizers"] = *doc.stabilizers;
  return j.dump();
}

std::string document_digest(const InputDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : serialize_document(doc)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json Report::to_json() const {
  return {{"schema_version", kReportSchemaVersion},
          {"command", command},
          {"input_digest", input_digest},
          {"result", result}};
}

std::string Report::serialize() const { return to_json().dump(2); }

Report Report::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid report: ") + e.what());
  }
  if (!j.is_object() || j.value("schema_version", 0) != kReportSchemaVersion)
    throw ParseError("unsupported report schema");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  r.result = j.at("result");
  return r;
}

}  // namespace weilgraph
