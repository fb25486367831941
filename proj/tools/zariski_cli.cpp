#include "zariski/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace zariski;

void emit(const ReportDocument& doc, bool json, const std::string& out) {
  const std::string text = json ? render_json(doc) : render_table(doc);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw CommandError(kExitUsage, "cannot write " + out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> invocation(argv, argv + argc);

  CLI::App app{"Connected components of moduli of ADE-sextics from lattice data"};
  app.require_subcommand(1);
  bool json = false;
  std::string out;
  app.add_flag("--json", json, "Print the JSON report instead of a table");

  auto* components = app.add_subcommand("components", "Components of the moduli for a rank-19 Dynkin type");
  std::string type;
  components->add_option("type", type, "Dynkin type such as A16+A2+A1")->required();
  components->add_option("--out", out, "Write the report to a file");
  components->add_flag("--json", json, "Print the JSON report instead of a table");

  auto* forms = app.add_subcommand("forms", "Binary forms of a determinant or discriminant");
  std::int64_t det = 0, disc = 0;
  auto* det_opt = forms->add_option("--det", det, "GL2 classes of even positive forms of this determinant");
  auto* disc_opt = forms->add_option("--disc", disc, "Reduced forms of this negative fundamental discriminant");
  det_opt->excludes(disc_opt);
  forms->add_option("--out", out, "Write the report to a file");
  forms->add_flag("--json", json, "Print the JSON report instead of a table");

  auto* cm = app.add_subcommand("cm", "Class group, embedding lattices and Hilbert class polynomial");
  std::int64_t cm_disc = 0;
  CmOptions cm_options;
  cm->add_option("--disc", cm_disc, "Negative fundamental discriminant")->required();
  cm->add_flag("--hilbert", cm_options.hilbert, "Also compute the Hilbert class polynomial");
  cm->add_option("--precision-digits", cm_options.precision_digits, "Decimal digits for evaluating j")
      ->check(CLI::Range(10u, 100000u));
  cm->add_option("--q-terms", cm_options.q_terms, "Terms of the q-expansion of j")->check(CLI::Range(2u, 100000u));
  cm->add_option("--out", out, "Write the report to a file");
  cm->add_flag("--json", json, "Print the JSON report instead of a table");

  auto* census = app.add_subcommand("census", "Run components over a file of types, one JSON per type");
  CensusOptions census_options;
  census->add_option("--input", census_options.input, "One Dynkin type per line, '#' comments")->required();
  census->add_option("--out", census_options.out, "Output directory")->required();
  census->add_flag("--resume", census_options.resume, "Skip types whose report already exists");
  census->add_option("--workers", census_options.workers, "Parallel workers")->check(CLI::Range(1u, 1024u));
  census->add_flag("--json", json, "Print the JSON summary instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (components->parsed()) {
      emit(cmd_components(type, invocation), json, out);
    } else if (forms->parsed()) {
      if (det_opt->count()) {
        emit(cmd_forms_det(det, invocation), json, out);
      } else if (disc_opt->count()) {
        emit(cmd_forms_disc(disc, invocation), json, out);
      } else {
        std::cerr << "forms: one of --det or --disc is required\n";
        return kExitUsage;
      }
    } else if (cm->parsed()) {
      emit(cmd_cm(cm_disc, cm_options, invocation), json, out);
    } else if (census->parsed()) {
      const CensusResult result = cmd_census(census_options, invocation);
      emit(result.summary, json, "");
      return result.exit_code;
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  }
  return kExitOk;
}
