#include "zariski/report.hpp"

#include <iomanip>
#include <sstream>

namespace zariski {

namespace {

std::string big(const Integer& z) { return z.str(); }

Json int_matrix_json(const Matrix<std::int64_t>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json orbit_report_json(const OrbitReport& r) {
  Json orbits = Json::array();
  for (const auto& o : r.orbits)
    orbits.push_back(Json{{"size", o.size}, {"real", o.real}, {"gluing", o.gluing}, {"sign", o.sign}, {"conjugate", o.conjugate}});
  return Json{{"lattice", lattice_name(r.n)},
              {"form", form_json(r.n)},
              {"sl2_fiber_size", sl2_fiber_size(r.n)},
              {"gluings", r.ls_size},
              {"stabilizer_order", r.stabilizer_order},
              {"orthogonal_group_order", r.orthogonal_order},
              {"orbit_count", r.orbits.size()},
              {"real_orbit_count", r.real_count()},
              {"orbits", std::move(orbits)}};
}

void table_components(std::ostringstream& os, const Json& p) {
  os << "type " << p["type"].get<std::string>() << "  (rank " << p["rank"].get<int>() << ")\n";
  os << "glue orbits examined: " << p["examined_glue_orbits"].get<std::size_t>()
     << "  diagram symmetries: " << p["diagram_symmetries"].get<std::size_t>()
     << "  admissible overlattices: " << p["admissible_overlattices"].get<std::size_t>() << "\n\n";
  os << std::left << std::setw(7) << "class" << std::setw(7) << "index" << std::setw(7) << "orbit" << std::setw(16)
     << "N" << std::setw(8) << "|Ls|" << std::setw(8) << "orbits" << "real flags\n";
  for (const auto& cls : p["classes"]) {
    const std::string id = "M" + std::to_string(cls["class"].get<std::size_t>());
    if (cls["ns"].empty()) {
      os << std::setw(7) << id << std::setw(7) << cls["index"].get<std::string>() << std::setw(7)
         << cls["orbit_size"].get<std::size_t>() << "(no N)\n";
      continue;
    }
    for (const auto& n : cls["ns"]) {
      std::string flags;
      for (const auto& o : n["orbits"]) flags += o["real"].get<bool>() ? "R" : "-";
      os << std::setw(7) << id << std::setw(7) << cls["index"].get<std::string>() << std::setw(7)
         << cls["orbit_size"].get<std::size_t>() << std::setw(16) << n["lattice"].get<std::string>() << std::setw(8)
         << n["gluings"].get<std::size_t>() << std::setw(8) << n["orbit_count"].get<std::size_t>() << flags << "\n";
    }
  }
  os << "\ntotal components: " << p["total_components"].get<std::size_t>()
     << "  (real: " << p["real_components"].get<std::size_t>() << ")\n";
  for (const auto& pair : p["candidate_pairs"])
    os << "candidate arithmetic Zariski pair over M" << pair["class"].get<std::size_t>() << ": "
       << pair["first"].get<std::string>() << " / " << pair["second"].get<std::string>() << "\n";
  os << "note: " << p["note"].get<std::string>() << "\n";
}

void table_even_forms(std::ostringstream& os, const Json& p) {
  os << "determinant " << p["determinant"].get<std::int64_t>() << ": " << p["count"].get<std::size_t>()
     << " GL2 classes\n";
  for (const auto& f : p["forms"])
    os << "  " << std::left << std::setw(18) << f["lattice"].get<std::string>() << "SL2 fiber "
       << f["sl2_fiber_size"].get<int>() << "\n";
}

void table_class_group(std::ostringstream& os, const Json& g) {
  os << "discriminant " << g["discriminant"].get<std::int64_t>() << ": class number " << g["order"].get<std::size_t>();
  os << ", structure";
  if (g["structure"].empty()) os << " trivial";
  for (const auto& k : g["structure"]) os << " Z/" << k.get<std::int64_t>();
  os << "\n";
  for (std::size_t i = 0; i < g["forms"].size(); ++i) {
    const auto& f = g["forms"][i];
    os << "  [" << i << "] " << std::left << std::setw(14) << f["form"].get<std::string>() << "order "
       << g["element_orders"][i].get<std::size_t>() << "\n";
  }
  if (!g["generators"].empty()) {
    os << "  generators:";
    for (const auto& k : g["generators"]) os << ' ' << g["forms"][k.get<std::size_t>()]["form"].get<std::string>();
    os << "\n";
  }
}

void table_embeddings(std::ostringstream& os, const Json& e) {
  os << "embedding lattices\n";
  for (const auto& row : e["rows"])
    os << "  i=" << row["index"].get<std::size_t>() << "  " << std::left << std::setw(14)
       << row["class"]["form"].get<std::string>() << "square " << std::setw(14)
       << row["square"]["form"].get<std::string>() << row["lattice"].get<std::string>() << "\n";
}

void table_hilbert(std::ostringstream& os, const Json& h) {
  os << "Hilbert class polynomial: " << h["polynomial"].get<std::string>() << "\n";
  os << "  rounding error " << h["rounding_error"].get<double>() << " at " << h["precision_digits"].get<unsigned>()
     << " digits, " << h["q_terms"].get<unsigned>() << " q-terms\n";
}

void table_census(std::ostringstream& os, const Json& p) {
  os << std::left << std::setw(24) << "type" << std::setw(10) << "status" << std::setw(8) << "total" << "real\n";
  for (const auto& e : p["entries"]) {
    os << std::setw(24) << e["type"].get<std::string>() << std::setw(10) << e["status"].get<std::string>();
    if (e.contains("total_components"))
      os << std::setw(8) << e["total_components"].get<std::size_t>() << e["real_components"].get<std::size_t>();
    else if (e.contains("error"))
      os << e["error"].get<std::string>();
    os << "\n";
  }
  os << "failures: " << p["failures"].get<std::size_t>() << "\n";
}

}  // namespace

void to_json(Json& j, const ReportDocument& doc) {
  j = Json{{"schema_version", doc.schema_version},
           {"invocation", doc.invocation},
           {"command", doc.command},
           {"payload", doc.payload}};
}

void from_json(const Json& j, ReportDocument& doc) {
  if (!j.contains("schema_version")) throw std::invalid_argument("report: missing schema_version");
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kSchemaVersion)
    throw std::invalid_argument("report: unsupported schema_version " + std::to_string(doc.schema_version));
  doc.invocation = j.at("invocation").get<std::vector<std::string>>();
  doc.command = j.at("command").get<std::string>();
  doc.payload = j.at("payload");
}

std::string render_json(const ReportDocument& doc) { return Json(doc).dump(2) + "\n"; }

ReportDocument parse_report(const std::string& text) { return Json::parse(text).get<ReportDocument>(); }

Json form_json(const BinaryEvenForm& f) { return Json::array({f.a, f.b, f.c}); }

Json classical_json(const ClassicalForm& f) {
  return Json{{"form", to_string(f)}, {"coefficients", Json::array({f.a, f.b, f.c})}};
}

Json components_payload(const ComponentReport& report) {
  const auto& ms = report.ms;
  Json classes = Json::array();
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const auto& cls = report.classes[k];
    const MsEntry& m = ms.entries[cls.entry];
    Json ns = Json::array();
    for (const auto& f : cls.fibers) ns.push_back(orbit_report_json(f));
    classes.push_back(Json{{"class", k},
                           {"index", big(m.lattice.index())},
                           {"orbit_size", m.orbit_size},
                           {"stabilizer_order", m.stabilizer_order},
                           {"glue_hermite_form", int_matrix_json(m.lattice.glue().hnf)},
                           {"discriminant_group", m.discriminant.form().invariant_factors()},
                           {"roots_orthogonal_to_h", m.checks.roots},
                           {"sharp", !cls.ns.empty()},
                           {"ns", std::move(ns)}});
  }
  Json pairs = Json::array();
  for (const auto& p : report.candidate_pairs)
    pairs.push_back(Json{{"class", p.ms_class}, {"first", lattice_name(p.first)}, {"second", lattice_name(p.second)}});
  return Json{{"type", ms.base.dynkin.to_string()},
              {"rank", ms.base.dynkin.rank()},
              {"m0_discriminant_group", ms.m0_discriminant.form().invariant_factors()},
              {"diagram_symmetries", ms.symmetries.order},
              {"examined_glue_orbits", ms.examined_glue_orbits},
              {"admissible_overlattices", ms.entries.size()},
              {"sharp_classes", report.sharp_class_count()},
              {"classes", std::move(classes)},
              {"total_components", report.component_count()},
              {"real_components", report.real_component_count()},
              {"candidate_pairs", std::move(pairs)},
              {"note",
               "lattice invariants only: two N over one class mark a candidate pair; "
               "the topology of the curves is not computed"}};
}

Json even_forms_payload(std::int64_t determinant, const std::vector<BinaryEvenForm>& forms) {
  Json list = Json::array();
  for (const auto& f : forms)
    list.push_back(Json{{"lattice", lattice_name(f)}, {"form", form_json(f)}, {"sl2_fiber_size", sl2_fiber_size(f)}});
  return Json{{"determinant", determinant}, {"count", forms.size()}, {"forms", std::move(list)}};
}

Json classical_forms_payload(const ClassGroup& group) {
  Json list = Json::array();
  for (const auto& f : group.forms) list.push_back(classical_json(f));
  return Json{{"discriminant", group.discriminant}, {"count", group.order()}, {"forms", std::move(list)}};
}

Json class_group_payload(const ClassGroup& group) {
  Json forms = Json::array();
  Json orders = Json::array();
  for (std::size_t i = 0; i < group.order(); ++i) {
    forms.push_back(classical_json(group.forms[i]));
    orders.push_back(group.element_order(i));
  }
  return Json{{"discriminant", group.discriminant},
              {"order", group.order()},
              {"structure", group.structure},
              {"cyclic", group.is_cyclic()},
              {"generators", group.generators},
              {"forms", std::move(forms)},
              {"element_orders", std::move(orders)},
              {"table", group.table}};
}

Json embedding_payload(const CMEmbeddingReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back(Json{{"index", r.index},
                        {"class", classical_json(r.ideal_class)},
                        {"square", classical_json(r.square)},
                        {"lattice", oriented_lattice_name(r.lattice.form)},
                        {"form", form_json(r.lattice.form)},
                        {"determinant", r.lattice.form.determinant()}});
  return Json{{"discriminant", report.discriminant}, {"rows", std::move(rows)}};
}

Json hilbert_payload(const HilbertPolynomial& poly) {
  Json coefficients = Json::array();
  for (const auto& c : poly.coefficients) coefficients.push_back(big(c));
  return Json{{"discriminant", poly.discriminant},
              {"degree", poly.degree()},
              {"coefficients", std::move(coefficients)},
              {"polynomial", render_polynomial(poly.coefficients)},
              {"rounding_error", poly.rounding_error},
              {"precision_digits", poly.precision_digits},
              {"q_terms", poly.q_terms}};
}

std::string render_table(const ReportDocument& doc) {
  std::ostringstream os;
  const Json& p = doc.payload;
  if (doc.command == "components") {
    table_components(os, p);
  } else if (doc.command == "forms") {
    if (p.contains("determinant")) {
      table_even_forms(os, p);
    } else {
      os << "discriminant " << p["discriminant"].get<std::int64_t>() << ": " << p["count"].get<std::size_t>()
         << " reduced forms\n";
      for (const auto& f : p["forms"]) os << "  " << f["form"].get<std::string>() << "\n";
    }
  } else if (doc.command == "cm") {
    table_class_group(os, p["class_group"]);
    table_embeddings(os, p["embeddings"]);
    if (p.contains("hilbert")) table_hilbert(os, p["hilbert"]);
  } else if (doc.command == "census") {
    table_census(os, p);
  } else {
    os << p.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace zariski
