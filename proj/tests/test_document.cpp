#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "weilgraph/document.hpp"

using namespace weilgraph;

TEST_CASE("parse full document") {
  const InputDocument doc = parse_document(
      R"({"vertices": 2, "edges": [[0,1],[0,1],[0,1]], "genera": [0,1], "stabilizers": [2,3,2]})");
  CHECK(doc.vertices == 2);
  CHECK(doc.edges.size() == 3);
  CHECK(doc.graph() == oracle::theta());
  REQUIRE(doc.genera);
  CHECK(*doc.genera == std::vector<std::size_t>{0, 1});
  const TwistedCurveModel m = doc.model();
  CHECK(m.arithmetic_genus() == 3);
}

TEST_CASE("graph-only document") {
  const InputDocument doc = parse_document(R"({"vertices": 1, "edges": [[0,0]]})");
  CHECK(doc.graph() == oracle::loop());
  CHECK_FALSE(doc.genera);
  CHECK_THROWS_AS(doc.model(), PreconditionError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document("[]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"vertices": 2})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"vertices": -1, "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"vertices": 2, "edges": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"vertices": 2, "edges": [["a", 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"vertices": 2, "edges": [], "colour": 1})"), ParseError);
}

TEST_CASE("out-of-range endpoints are a precondition failure") {
  const InputDocument doc = parse_document(R"({"vertices": 2, "edges": [[0,5]]})");
  CHECK_THROWS_AS(doc.graph(), PreconditionError);
}

TEST_CASE("serialize round trip and digest") {
  const std::string text = R"({"stabilizers": [2,2,2], "vertices": 2, "genera": [0,0], "edges": [[0,1],[0,1],[0,1]]})";
  const InputDocument doc = parse_document(text);
  const std::string canon = serialize_document(doc);
  CHECK(parse_document(canon) == doc);
  CHECK(serialize_document(parse_document(canon)) == canon);

  const std::string spaced = "{ \"vertices\" : 2,\n \"edges\": [[0,1], [0,1], [0,1]], \"genera\": [0, 0], \"stabilizers\": [2, 2, 2] }";
  CHECK(document_digest(parse_document(spaced)) == document_digest(doc));
  CHECK(document_digest(doc).size() == 16);
  const InputDocument other = parse_document(R"({"vertices": 2, "edges": [[0,1],[0,1]]})");
  CHECK(document_digest(other) != document_digest(doc));
}

TEST_CASE("report round trip") {
  Report r;
  r.command = "homology";
  r.input_digest = "0123456789abcdef";
  r.result = {{"genus", 2}, {"perfect", true}};
  const nlohmann::json j = r.to_json();
  CHECK(j.at("schema_version") == kReportSchemaVersion);
  const Report back = Report::parse(r.serialize());
  CHECK(back.command == r.command);
  CHECK(back.input_digest == r.input_digest);
  CHECK(back.result == r.result);
  CHECK_THROWS_AS(Report::parse("{}"), ParseError);
}
