#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

namespace fs = std::filesystem;
using qdsim::ordered_json;

constexpr const char* kOutputDirEnv = "QDSIM_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Sink {
  std::string file;  // empty: stdout, unless the output directory variable is set

  // Writes text to the chosen file, or to stdout when no file applies.
  void write(const std::string& text, const std::string& default_name) const {
    std::optional<fs::path> path;
    if (!file.empty()) {
      path = fs::path(file);
      if (path->is_relative())
        if (const char* dir = std::getenv(kOutputDirEnv)) path = fs::path(dir) / *path;
    } else if (const char* dir = std::getenv(kOutputDirEnv)) {
      path = fs::path(dir) / default_name;
    }
    if (!path) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    if (path->has_parent_path()) {
      std::error_code ec;
      fs::create_directories(path->parent_path(), ec);
    }
    std::ofstream out(*path, std::ios::binary);
    out << text;
    out.close();
    if (!out) throw std::runtime_error("cannot write output file: " + path->string());
  }
};

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int emit_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << ordered_json{{"error", {{"type", kind}, {"message", message}}}}.dump() << "\n";
  return code;
}

std::vector<double> parse_nu_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size() || !(v >= 0.0))
      throw UsageError("invalid nu value: '" + item + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

qd::TemplateVariant parse_variant(const std::string& s) {
  return s == "as_printed" ? qd::TemplateVariant::as_printed : qd::TemplateVariant::corrected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for the quantum double of the quaternion group: modular data, recoupling, "
               "braid-compiled gates and the noisy Shor-15 circuit."};
  app.set_version_flag("--version", std::string("qdsim ") + QD_VERSION);
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + kOutputDirEnv +
             " sets the directory for output files; without it and without --file, output goes to stdout.");

  Sink sink;
  std::string format = "csv";
  std::string variant = "corrected";
  unsigned threads = 0;

  // tables
  auto* tables = app.add_subcommand("tables", "Dump group and anyon data tables");
  tables->require_subcommand(1);
  struct TableCmd {
    const char* name;
    const char* help;
  };
  const TableCmd table_cmds[] = {{"group", "Cayley table, conjugacy classes and centralizers"},
                                 {"smatrix", "Exact S matrix (and discrepancies against the printed table in JSON)"},
                                 {"tmatrix", "Topological spins"},
                                 {"fusion", "Nonzero Verlinde multiplicities as a,b,c,N"},
                                 {"braids", "Braid generator matrices for every pairing"}};
  for (const auto& t : table_cmds) {
    auto* sub = tables->add_subcommand(t.name, t.help);
    sub->add_option("--out", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--file", sink.file, "Output file (relative paths resolve against the output directory)");
    if (std::string(t.name) == "braids")
      sub->add_option("--variant", variant, "sigma3 template variant")->check(CLI::IsMember({"corrected", "as_printed"}));
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites; exits 1 if any check fails");
  verify->require_subcommand(1);
  for (const char* name : {"recoupling", "braids", "gates", "all"}) {
    auto* sub = verify->add_subcommand(name, std::string("Verify ") + name);
    sub->add_option("--file", sink.file, "Output file for the JSON report");
    sub->add_option("--threads", threads, "Worker threads for coherence scans (0: all cores)");
    sub->add_option("--variant", variant, "sigma3 template variant")->check(CLI::IsMember({"corrected", "as_printed"}));
  }

  // shor
  auto* shor_cmd = app.add_subcommand("shor", "Noisy Shor-15 ensembles");
  shor_cmd->require_subcommand(1);
  qd::shor::NoiseConfig cfg;
  cfg.seed = 0;
  std::string backend = "ideal";
  std::string nu_text = "0";
  std::string sweep_text = "0,0.1,0.5,1";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--realizations", cfg.realizations, "Number of noise realizations")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "64-bit seed");
    sub->add_option("--backend", backend, "Gate backend")->check(CLI::IsMember({"ideal", "braided"}));
    sub->add_option("--out", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--file", sink.file, "Output file (relative paths resolve against the output directory)");
    sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  };
  auto* run = shor_cmd->add_subcommand("run", "One ensemble at a single noise level");
  run->add_option("--nu", nu_text, "Noise standard deviation in radians");
  add_common(run);
  auto* sweep = shor_cmd->add_subcommand("sweep", "Ensembles over a comma-separated list of noise levels");
  sweep->add_option("--nu", sweep_text, "Comma-separated noise levels");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), 2);
  }

  try {
    if (tables->parsed()) {
      const CLI::App* sub = tables->get_subcommands().front();
      const std::string which = sub->get_name();
      qdsim::Table t;
      if (which == "group") t = qdsim::group_table();
      if (which == "smatrix") t = qdsim::s_matrix_table();
      if (which == "tmatrix") t = qdsim::t_matrix_table();
      if (which == "fusion") t = qdsim::fusion_table();
      if (which == "braids") t = qdsim::braid_table(parse_variant(variant));
      sink.write(format == "csv" ? t.csv : dump(t.json), which + "." + format);
      return 0;
    }

    if (verify->parsed()) {
      const std::string which = verify->get_subcommands().front()->get_name();
      const auto v = parse_variant(variant);
      ordered_json report{{"version", QD_VERSION}};
      if (which == "recoupling" || which == "all") report["recoupling"] = qdsim::verify_recoupling(threads);
      if (which == "braids" || which == "all") report["braids"] = qdsim::verify_braids(v);
      if (which == "gates" || which == "all") report["gates"] = qdsim::verify_gates(v);
      bool ok = true;
      for (const auto& [key, value] : report.items())
        if (value.is_object()) ok = ok && value["status"] == "pass";
      report["status"] = ok ? "pass" : "fail";
      sink.write(dump(report), "verify_" + which + ".json");
      return ok ? 0 : 1;
    }

    if (shor_cmd->parsed()) {
      cfg.backend = qd::shor::parse_backend(backend);
      const bool is_run = run->parsed();
      const auto nus = parse_nu_list(is_run ? nu_text : sweep_text);
      if (is_run && nus.size() != 1) throw UsageError("shor run takes a single --nu; use shor sweep for a list");
      const auto reports = qd::shor::run_sweep(nus, cfg);
      const std::string text = format == "csv" ? qd::shor::sweep_csv(reports) : dump(qdsim::shor_json(reports));
      sink.write(text, std::string("shor_") + (is_run ? "run" : "sweep") + "." + format);
      return 0;
    }
  } catch (const UsageError& e) {
    return emit_error("usage", e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error("runtime", e.what(), 3);
  }
  return 0;
}
