#include "eldecomp/io/datasets.hpp"

#include <array>

#include "eldecomp/voigt.hpp"

namespace eldecomp::io {
namespace {

constexpr std::array<CubicEntry, 10> kCubic{{
    {"AlSb", "aluminium_antimonide", 0.894, 0.443, 0.416, ASign::positive},
    {"InP", "indium_phosphide", 1.022, 0.576, 0.460, ASign::positive},
    {"InAs", "indium_arsenide", 0.83, 0.453, 0.396, ASign::positive},
    {"W", "tungsten", 5.224, 2.044, 1.608, ASign::positive},
    {"Mo", "molybdenum", 4.637, 1.578, 1.092, ASign::positive},
    {"C", "diamond", 10.76, 1.250, 5.760, ASign::negative},
    {"Si", "silicon", 1.658, 0.639, 0.796, ASign::negative},
    {"Ge", "germanium", 1.284, 0.482, 0.667, ASign::negative},
    {"Ir", "iridium", 5.800, 2.420, 2.560, ASign::negative},
    {"Cr", "chromium", 3.398, 0.586, 0.990, ASign::negative},
}};

}  // namespace

std::span<const CubicEntry> cubic_reference_materials() { return kCubic; }

std::optional<CubicEntry> find_cubic_reference(std::string_view name) {
  for (const CubicEntry& e : kCubic)
    if (e.name == name || e.file == name) return e;
  return std::nullopt;
}

MaterialRecord reference_record(const CubicEntry& e) {
  return make_record(std::string(e.name), cubic_stiffness(e.c11, e.c12, e.c44), std::string(kTableUnit),
                     CrystalSystem::cubic);
}

}  // namespace eldecomp::io
