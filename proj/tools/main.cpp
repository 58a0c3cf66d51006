// eldecomp: command-line front end.
//
// Exit codes: 0 success, 2 validation failure (bad tensor, density, strain,
// direction or usage), 3 I/O or parse failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eldecomp/error.hpp"
#include "eldecomp/io/commands.hpp"
#include "eldecomp/io/material.hpp"
#include "eldecomp/io/report.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw eldecomp::ParseError("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  namespace io = eldecomp::io;

  CLI::App app{"Irreducible decomposition of elasticity stiffness tensors"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = eldecomp::kDefaultClassifyTol;
  std::string json_path;
  bool strict = false;
  unsigned threads = 0;
  app.add_option("--tol", tol, "Relative tolerance for structural zeros")->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "Write the report here instead of stdout");
  app.add_flag("--strict", strict, "Reject unknown fields and crystal-system inconsistencies");
  app.add_option("--threads", threads, "Worker threads for scans (0 = all cores)");

  std::string file;
  auto* decompose = app.add_subcommand("decompose", "S/A split and rotation-irreducible parts");
  decompose->add_option("file", file, "Material JSON")->required();

  auto* classify = app.add_subcommand("classify", "Cauchy-relation tests and A+/A- class");
  classify->add_option("file", file, "Material JSON")->required();

  std::string strain_text;
  auto* energy = app.add_subcommand("energy", "Strain-energy split for one strain state");
  energy->add_option("file", file, "Material JSON")->required();
  energy->add_option("--strain", strain_text, "e11,e22,e33,e23,e13,e12 (tensor components)")->required();

  std::vector<std::string> dir_texts;
  std::size_t scan_n = 0;
  double density = 0.0;
  bool pure_modes = false;
  std::string csv_path;
  auto* acoustics = app.add_subcommand("acoustics", "Christoffel analysis, velocities and pure modes");
  acoustics->add_option("file", file, "Material JSON")->required();
  auto* n_opt = acoustics->add_option("--n", dir_texts, "Propagation direction x,y,z (repeatable)")
                    ->allow_extra_args(false)
                    ->take_all();
  auto* scan_opt = acoustics->add_option("--scan", scan_n, "Fibonacci-lattice scan with N directions");
  auto* density_opt = acoustics->add_option("--density", density, "Density, overriding the file");
  acoustics->add_flag("--pure-modes", pure_modes, "Search for pure longitudinal directions");
  acoustics->add_option("--csv", csv_path, "Write the scan table here")->needs(scan_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    io::LoadOptions lopts;
    lopts.strict = strict;
    lopts.system_tol = tol;
    const io::MaterialRecord rec = io::load_material(file, lopts);
    for (const std::string& w : rec.warnings) std::cerr << "warning: " << w << '\n';

    const io::CommonOptions copts{tol, threads};
    io::Json report;
    if (*decompose) {
      report = io::cmd_decompose(rec, copts);
    } else if (*classify) {
      report = io::cmd_classify(rec, copts);
    } else if (*energy) {
      report = io::cmd_energy(rec, io::parse_strain(strain_text), copts);
    } else {
      io::AcousticsOptions aopts;
      for (const std::string& t : dir_texts) aopts.directions.push_back(io::parse_direction(t));
      if (*scan_opt) aopts.scan = scan_n;
      if (*density_opt) aopts.density = density;
      aopts.pure_modes = pure_modes;
      if (aopts.directions.empty() && !aopts.scan && !aopts.pure_modes && n_opt->count() == 0) {
        throw eldecomp::ValidationError("acoustics needs --n, --scan or --pure-modes");
      }
      const io::AcousticsResult res = io::cmd_acoustics(rec, aopts, copts);
      report = res.report;
      if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        io::write_scan_csv(out, res.scan_directions, res.scan_solutions);
        out.close();
        if (!out) throw eldecomp::ParseError("cannot write '" + csv_path + "'");
      }
      if (const auto& a = report["acoustics"]; a.contains("scan") && a["scan"]["non_causal"].get<std::size_t>() > 0) {
        std::cerr << "warning: " << a["scan"]["non_causal"].get<std::size_t>()
                  << " scanned directions have non-causal modes\n";
      }
    }

    const std::string text = io::dump_report(report);
    if (json_path.empty()) {
      std::cout << text;
    } else {
      write_text(json_path, text);
    }
    return 0;
  } catch (const eldecomp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const eldecomp::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
