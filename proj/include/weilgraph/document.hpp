#pragma once

#include "weilgraph/graph.hpp"
#include "weilgraph/twisted_curve.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilgraph {

// Malformed input document (syntax, missing fields, wrong types).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input file shared by every CLI command:
//
//   {"vertices": 2, "edges": [[0,1],[0,1],[0,1]],
//    "genera": [0,0], "stabilizers": [2,2,2]}
//
// genera and stabilizers are optional.
struct InputDocument {
  std::size_t vertices = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<std::size_t>> genera;
  std::optional<std::vector<std::size_t>> stabilizers;

  MultiGraph graph() const;
  // PreconditionError when genera or stabilizers are absent.
  TwistedCurveModel model() const;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

InputDocument parse_document(const std::string& text);
std::string serialize_document(const InputDocument& doc);

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string document_digest(const InputDocument& doc);

inline constexpr int kReportSchemaVersion = 1;

struct Report {
  std::string command;
  std::string input_digest;
  nlohmann::json result;

  nlohmann::json to_json() const;
  std::string serialize() const;
  static Report parse(const std::string& text);
};

}  // namespace weilgraph
