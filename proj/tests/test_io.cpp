#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>

#include "eldecomp/error.hpp"
#include "eldecomp/io/commands.hpp"
#include "eldecomp/io/datasets.hpp"
#include "eldecomp/io/material.hpp"
#include "eldecomp/io/report.hpp"
#include "eldecomp/voigt.hpp"
#include "support/oracles.hpp"

using namespace eldecomp;
using namespace eldecomp::io;

namespace {

const std::filesystem::path kData = ELDECOMP_DATA_DIR;

std::string material_text(const std::string& voigt, const std::string& extra = "",
                          const std::string& unit = "GPa") {
  return R"({"schema_version": "1", "name": "t", )" + extra + R"("stiffness": {"unit": ")" + unit +
         R"(", "voigt": )" + voigt + "}}";
}

const std::string kIsoUpper = "[4,2,2,0,0,0, 4,2,0,0,0, 4,0,0,0, 1,0,0, 1,0, 1]";

std::string hexagonal_matrix(double c66) {
  std::ostringstream s;
  s << "[[3,1.1,0.8,0,0,0],[1.1,3,0.8,0,0,0],[0.8,0.8,2.5,0,0,0],"
    << "[0,0,0,0.7,0,0],[0,0,0,0,0.7,0],[0,0,0,0,0," << c66 << "]]";
  return s.str();
}

template <class E>
std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const E& e) {
    return e.what();
  }
  return "<no exception>";
}

}  // namespace

TEST(Material, BundledTungstenRecord) {
  const MaterialRecord rec = load_material(kData / "tungsten.json");
  EXPECT_EQ(rec.name, "W");
  EXPECT_EQ(rec.crystal_system, CrystalSystem::cubic);
  EXPECT_EQ(rec.stiffness_unit, kTableUnit);
  EXPECT_FALSE(rec.density.has_value());
  EXPECT_DOUBLE_EQ(rec.voigt(0, 0), 5.224);
  EXPECT_DOUBLE_EQ(rec.voigt(0, 1), 2.044);
  EXPECT_DOUBLE_EQ(rec.voigt(3, 3), 1.608);
  EXPECT_TRUE(rec.warnings.empty());
}

TEST(Material, UpperTriangleAndFullMatrixAgree) {
  const MaterialRecord a = parse_material(material_text(kIsoUpper));
  const MaterialRecord b = parse_material(material_text(
      "[[4,2,2,0,0,0],[2,4,2,0,0,0],[2,2,4,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]"));
  EXPECT_EQ(a.stiffness, b.stiffness);
  EXPECT_EQ(a.stiffness, isotropic_stiffness(2.0, 1.0));
}

TEST(Material, MalformedJsonReportsLineAndColumn) {
  const std::string msg = message_of<ParseError>([] { (void)parse_material("{\n  \"name\": \"x\",\n  oops\n}"); });
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Material, MissingAndMistypedFieldsNameTheField) {
  EXPECT_NE(message_of<ParseError>([] { (void)parse_material(R"({"name": "x"})"); }).find("'stiffness'"),
            std::string::npos);
  const std::string msg =
      message_of<ParseError>([] { (void)parse_material(material_text("[1,2,3]")); });
  EXPECT_NE(msg.find("stiffness.voigt"), std::string::npos) << msg;
  EXPECT_THROW((void)parse_material(material_text(kIsoUpper, R"("name2": 1, "crystal_system": "cubicc", )")),
               ParseError);
}

TEST(Material, UnknownUnitIsAParseError) {
  const std::string msg = message_of<ParseError>([] { (void)parse_material(material_text(kIsoUpper, "", "psi")); });
  EXPECT_NE(msg.find("psi"), std::string::npos) << msg;
  EXPECT_THROW((void)parse_material(material_text(kIsoUpper, R"("density": {"value": 1, "unit": "lb/ft^3"}, )")),
               ParseError);
}

TEST(Material, NonPositiveDensityIsAValidationError) {
  EXPECT_THROW((void)parse_material(material_text(kIsoUpper, R"("density": {"value": 0, "unit": "g/cm^3"}, )")),
               ValidationError);
}

TEST(Material, UnknownFieldsWarnOrFailInStrictMode) {
  const std::string text = material_text(kIsoUpper, R"("colour": "grey", )");
  const MaterialRecord rec = parse_material(text);
  ASSERT_EQ(rec.warnings.size(), 1u);
  EXPECT_NE(rec.warnings[0].find("colour"), std::string::npos);
  LoadOptions strict;
  strict.strict = true;
  EXPECT_THROW((void)parse_material(text, strict), ParseError);
}

TEST(Material, AsymmetricVoigtNamesTheEntry) {
  const std::string text = material_text(
      "[[4,2.5,2,0,0,0],[2,4,2,0,0,0],[2,2,4,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]");
  try {
    (void)parse_material(text);
    FAIL() << "accepted an asymmetric matrix";
  } catch (const VoigtAsymmetry& e) {
    EXPECT_EQ(e.row(), 1);
    EXPECT_EQ(e.col(), 2);
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
  }
}

TEST(Material, HexagonalConsistencyWarning) {
  const std::string good = material_text(hexagonal_matrix(0.95), R"("crystal_system": "hexagonal", )");
  EXPECT_TRUE(parse_material(good).warnings.empty());

  const std::string bad = material_text(hexagonal_matrix(1.2), R"("crystal_system": "hexagonal", )");
  const MaterialRecord rec = parse_material(bad);
  ASSERT_FALSE(rec.warnings.empty());
  EXPECT_NE(rec.warnings[0].find("hexagonal"), std::string::npos) << rec.warnings[0];
  LoadOptions strict;
  strict.strict = true;
  EXPECT_THROW((void)parse_material(bad, strict), ValidationError);
}

TEST(Material, CrystalSystemChecksAcceptGeneratedTensors) {
  const VoigtMatrix cubic = full_to_voigt(cubic_stiffness(5.224, 2.044, 1.608));
  EXPECT_TRUE(crystal_system_violations(cubic, CrystalSystem::cubic, 1e-9).empty());
  EXPECT_FALSE(crystal_system_violations(cubic, CrystalSystem::isotropic, 1e-9).empty());
  EXPECT_TRUE(crystal_system_violations(cubic, CrystalSystem::tetragonal, 1e-9).empty());
  EXPECT_TRUE(crystal_system_violations(cubic, CrystalSystem::triclinic, 1e-9).empty());
  const VoigtMatrix iso = full_to_voigt(isotropic_stiffness(1.0, 3.0));
  for (CrystalSystem s : {CrystalSystem::isotropic, CrystalSystem::cubic, CrystalSystem::hexagonal,
                          CrystalSystem::trigonal, CrystalSystem::orthorhombic, CrystalSystem::monoclinic})
    EXPECT_TRUE(crystal_system_violations(iso, s, 1e-9).empty()) << to_string(s);
  oracle::Gen g(71);
  const VoigtMatrix generic = full_to_voigt(g.pd_stiffness());
  EXPECT_FALSE(crystal_system_violations(generic, CrystalSystem::monoclinic, 1e-9).empty());
}

TEST(Material, MissingFileIsAParseError) {
  EXPECT_THROW((void)load_material(kData / "does_not_exist.json"), ParseError);
}

TEST(Datasets, BundledFilesMatchTheTableAndSign) {
  ASSERT_EQ(cubic_reference_materials().size(), 10u);
  int positive = 0;
  for (const CubicEntry& e : cubic_reference_materials()) {
    const MaterialRecord rec = load_material(kData / (std::string(e.file) + ".json"));
    EXPECT_EQ(rec.name, e.name);
    EXPECT_DOUBLE_EQ(rec.voigt(0, 0), e.c11);
    EXPECT_DOUBLE_EQ(rec.voigt(0, 1), e.c12);
    EXPECT_DOUBLE_EQ(rec.voigt(3, 3), e.c44);
    EXPECT_EQ(rec.stiffness, reference_record(e).stiffness);
    const Json rep = cmd_classify(rec);
    const double a = rep["classification"]["A"].get<double>();
    EXPECT_NEAR(a, 4.0 * (e.c12 - e.c44), 1e-12) << e.name;
    EXPECT_EQ(a > 0 ? ASign::positive : ASign::negative, e.expected) << e.name;
    positive += e.expected == ASign::positive;
  }
  EXPECT_EQ(positive, 5);
  EXPECT_TRUE(find_cubic_reference("Si").has_value());
  EXPECT_FALSE(find_cubic_reference("Xx").has_value());
}

TEST(Report, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(std::nan("")), "null");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Report, DecomposeSilicon) {
  const Json rep = cmd_decompose(load_material(kData / "silicon.json"));
  EXPECT_EQ(rep["schema_version"], "1");
  EXPECT_NEAR(rep["decomposition"]["A"].get<double>(), -0.628, 1e-12);
  EXPECT_EQ(rep["decomposition"]["Q"]["norm"].get<double>(), 0.0);
  EXPECT_EQ(rep["classification"]["class"], "A-");
  EXPECT_EQ(rep["classification"]["partial_cauchy"], true);
  EXPECT_EQ(rep["classification"]["full_cauchy"], false);
}

TEST(Report, IsotropicLambdaEqualsMuIsFullCauchy) {
  const Json rep = cmd_decompose(make_record("iso", isotropic_stiffness(1.5, 1.5), "GPa"));
  EXPECT_EQ(rep["classification"]["full_cauchy"], true);
  EXPECT_NEAR(rep["decomposition"]["cauchy_factor"].get<double>(), 1.0, 1e-15);
}

TEST(Report, ByteIdenticalForIdenticalInput) {
  const MaterialRecord rec = load_material(kData / "germanium.json");
  EXPECT_EQ(dump_report(cmd_decompose(rec)), dump_report(cmd_decompose(load_material(kData / "germanium.json"))));
  const std::string text = dump_report(cmd_classify(rec));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(Json::parse(text), cmd_classify(rec));
}

TEST(Report, ReconstructionIsAFixedPoint) {
  oracle::Gen g(72);
  for (int t = 0; t < 20; ++t) {
    const Stiffness c = g.any_stiffness();
    const Json first = Json::parse(dump_report(cmd_decompose(make_record("r", c, "GPa"))));
    const Stiffness back = reconstruct_from_report(first);
    EXPECT_LT(oracle::rel_diff(oracle::to_raw(back), oracle::to_raw(c)), 1e-14);
    const Json second = cmd_decompose(make_record("r", back, "GPa"));
    EXPECT_NEAR(second["decomposition"]["S"].get<double>(), first["decomposition"]["S"].get<double>(), 1e-13);
    EXPECT_NEAR(second["decomposition"]["A"].get<double>(), first["decomposition"]["A"].get<double>(), 1e-13);
    EXPECT_LT(oracle::rel_diff(oracle::to_raw(reconstruct_from_report(second)), oracle::to_raw(back)), 1e-14);
  }
  EXPECT_THROW((void)reconstruct_from_report(Json::object()), ParseError);
}

TEST(Commands, EnergyIsotropicHydrostatic) {
  const MaterialRecord rec = load_material(kData / "isotropic_lame_2_1.json");
  const Json rep = cmd_energy(rec, parse_strain("1,1,1,0,0,0"));
  EXPECT_NEAR(rep["energy"]["total"].get<double>(), 12.0, 1e-13);
  EXPECT_NEAR(rep["energy"]["cauchy_total"].get<double>(), 10.0, 1e-13);
  EXPECT_NEAR(rep["energy"]["non_cauchy_total"].get<double>(), 2.0, 1e-13);
}

TEST(Commands, EnergyCubicMixedStrainHasNoMixedTerm) {
  const Json rep = cmd_energy(load_material(kData / "iridium.json"), parse_strain("0.01,-0.02,0.005,0.003,0,0.004"));
  EXPECT_LT(std::abs(rep["energy"]["mixed"]["total"].get<double>()), 1e-18);
  EXPECT_NEAR(rep["energy"]["sum_of_parts"].get<double>(), rep["energy"]["total"].get<double>(), 1e-15);
}

TEST(Commands, ZeroStrainGivesZeroEnergy) {
  const Json rep = cmd_energy(load_material(kData / "iridium.json"), parse_strain("0,0,0,0,0,0"));
  EXPECT_EQ(rep["energy"]["total"].get<double>(), 0.0);
  EXPECT_EQ(rep["energy"]["sum_of_parts"].get<double>(), 0.0);
}

TEST(Commands, StrainParsing) {
  const SymMat3 e = parse_strain("1,2,3,4,5,6");
  EXPECT_EQ(e(0, 0), 1.0);
  EXPECT_EQ(e(1, 2), 4.0);
  EXPECT_EQ(e(0, 2), 5.0);
  EXPECT_EQ(e(0, 1), 6.0);
  for (const char* bad : {"1,2,3", "1,2,3,4,5,6,7", "1,2,x,4,5,6", "", "1,,3,4,5,6", "1,2,3,4,5,nan"})
    EXPECT_THROW((void)parse_strain(bad), ValidationError) << bad;
}

TEST(Commands, DirectionParsing) {
  const UnitVec3 n = parse_direction("0,3,4");
  EXPECT_NEAR(n[1], 0.6, 4e-16);
  EXPECT_NEAR(n[2], 0.8, 4e-16);
  EXPECT_THROW((void)parse_direction("0,0,0"), ValidationError);
  EXPECT_THROW((void)parse_direction("1,2"), ValidationError);
}

TEST(Commands, AcousticsTungstenAlongZ) {
  AcousticsOptions ao;
  ao.directions = {UnitVec3::e3()};
  ao.density = 1.0;
  const AcousticsResult res = cmd_acoustics(load_material(kData / "tungsten.json"), ao);
  const Json& d = res.report["acoustics"]["directions"][0];
  EXPECT_DOUBLE_EQ(d["velocities"][0].get<double>(), std::sqrt(5.224));
  EXPECT_DOUBLE_EQ(d["velocities"][1].get<double>(), std::sqrt(1.608));
  EXPECT_DOUBLE_EQ(d["velocities"][2].get<double>(), std::sqrt(1.608));
  EXPECT_EQ(res.report["acoustics"]["velocity_unit"], "sqrt(paper-units (Kaxiras) / density)");
}

TEST(Commands, AcousticsRequiresDensity) {
  AcousticsOptions ao;
  ao.directions = {UnitVec3::e3()};
  EXPECT_THROW((void)cmd_acoustics(load_material(kData / "tungsten.json"), ao), ValidationError);
  ao.density = -2.0;
  EXPECT_THROW((void)cmd_acoustics(load_material(kData / "tungsten.json"), ao), ValidationError);
}

TEST(Commands, AcousticsPhysicalUnits) {
  const AcousticUnits u = resolve_acoustic_units(load_material(kData / "isotropic_lame_2_1.json"), std::nullopt);
  EXPECT_EQ(u.velocity_unit, "km/s");
  EXPECT_EQ(u.effective_rho, 1.0);
  AcousticsOptions ao;
  ao.directions = {parse_direction("1,1,0")};
  const AcousticsResult res = cmd_acoustics(load_material(kData / "isotropic_lame_2_1.json"), ao);
  EXPECT_NEAR(res.report["acoustics"]["directions"][0]["velocities"][0].get<double>(), 2.0, 1e-14);
}

TEST(Commands, AcousticsPureModesOnCubic) {
  AcousticsOptions ao;
  ao.density = 1.0;
  ao.pure_modes = true;
  const Json rep = cmd_acoustics(load_material(kData / "tungsten.json"), ao).report;
  const Json& hits = rep["acoustics"]["pure_modes"]["hits"];
  EXPECT_EQ(hits.size(), 13u);
  int axes = 0, diagonals = 0;
  for (const Json& h : hits) {
    double m = 0.0;
    for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(h["direction"][k].get<double>()));
    axes += m > 1.0 - 1e-9;
    diagonals += std::abs(m - 1.0 / std::sqrt(3.0)) < 1e-9;
  }
  EXPECT_EQ(axes, 3);
  EXPECT_EQ(diagonals, 4);
}

TEST(Commands, ScanCsvFormat) {
  AcousticsOptions ao;
  ao.density = 1.0;
  ao.scan = 200;
  const AcousticsResult res = cmd_acoustics(load_material(kData / "silicon.json"), ao);
  ASSERT_EQ(res.scan_solutions.size(), 200u);
  std::ostringstream out;
  write_scan_csv(out, res.scan_directions, res.scan_solutions);
  const std::string csv = out.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "nx,ny,nz,v1,v2,v3,purity_L,degenerate_flag");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 201);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  std::istringstream rows(csv);
  std::string line;
  std::getline(rows, line);
  std::getline(rows, line);
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7);
  EXPECT_EQ(res.report["acoustics"]["scan"]["points"], 200);
}

TEST(Commands, ScanCsvNonCausalIsNan) {
  ChristoffelBundle b;
  b.gamma = SymMat3::diag(2.0, 1.0, -0.5);
  const WaveSolution w = wave_solve(b);
  const UnitVec3 n = UnitVec3::e3();
  std::ostringstream out;
  write_scan_csv(out, std::span(&n, 1), std::span(&w, 1));
  EXPECT_NE(out.str().find(",nan,"), std::string::npos) << out.str();
}
