#include "zariski/commands.hpp"

namespace zariski {

namespace {

template <class F>
ReportDocument guarded(const char* command, const std::vector<std::string>& invocation, F&& body) {
  try {
    return ReportDocument{kSchemaVersion, invocation, command, body()};
  } catch (const CommandError&) {
    throw;
  } catch (const OutOfScope& e) {
    throw CommandError(kExitComputation, std::string("out of scope: ") + e.what());
  } catch (const PrecisionError& e) {
    throw CommandError(kExitComputation, e.what());
  } catch (const std::invalid_argument& e) {
    throw CommandError(kExitUsage, e.what());
  } catch (const std::exception& e) {
    throw CommandError(kExitComputation, std::string("computation failed: ") + e.what());
  }
}

}  // namespace

ReportDocument cmd_components(const std::string& type, const std::vector<std::string>& invocation) {
  DynkinType parsed;
  try {
    parsed = DynkinType::parse(type);
  } catch (const std::invalid_argument& e) {
    throw CommandError(kExitUsage, std::string("cannot parse Dynkin type: ") + e.what());
  }
  return guarded("components", invocation, [&] { return components_payload(component_report(parsed)); });
}

ReportDocument cmd_forms_det(std::int64_t determinant, const std::vector<std::string>& invocation) {
  return guarded("forms", invocation,
                 [&] { return even_forms_payload(determinant, enumerate_even_classes(determinant)); });
}

ReportDocument cmd_forms_disc(std::int64_t discriminant, const std::vector<std::string>& invocation) {
  return guarded("forms", invocation, [&] { return classical_forms_payload(class_group(discriminant)); });
}

ReportDocument cmd_cm(std::int64_t discriminant, const CmOptions& options,
                      const std::vector<std::string>& invocation) {
  return guarded("cm", invocation, [&] {
    Json payload{{"class_group", class_group_payload(class_group(discriminant))},
                 {"embeddings", embedding_payload(embedding_lattices(discriminant))}};
    if (options.hilbert)
      payload["hilbert"] =
          hilbert_payload(hilbert_class_polynomial(discriminant, options.precision_digits, options.q_terms));
    return payload;
  });
}

}  // namespace zariski
