#pragma once

// JSON documents produced by the command-line tool. Tables are rendered
// from the same JSON payload, so both views carry identical numbers.

#include "zariski/cm.hpp"
#include "zariski/moduli.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zariski {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::vector<std::string> invocation;
  std::string command;
  Json payload;

  bool operator==(const ReportDocument&) const = default;
};

void to_json(Json& j, const ReportDocument& doc);
/// Throws std::invalid_argument on a missing or unsupported schema_version.
void from_json(const Json& j, ReportDocument& doc);

std::string render_json(const ReportDocument& doc);
ReportDocument parse_report(const std::string& text);

Json form_json(const BinaryEvenForm& f);
Json classical_json(const ClassicalForm& f);

Json components_payload(const ComponentReport& report);
Json even_forms_payload(std::int64_t determinant, const std::vector<BinaryEvenForm>& forms);
Json classical_forms_payload(const ClassGroup& group);
Json class_group_payload(const ClassGroup& group);
Json embedding_payload(const CMEmbeddingReport& report);
Json hilbert_payload(const HilbertPolynomial& poly);

/// Human-readable table for any ReportDocument, projected from its payload.
std::string render_table(const ReportDocument& doc);

}  // namespace zariski
