#include "eldecomp/acoustics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "eldecomp/eigen.hpp"
#include "eldecomp/error.hpp"
#include "parallel.hpp"

namespace eldecomp {
namespace {

void require_density(double rho) {
  if (!(rho > 0.0)) throw ValidationError("density must be positive");
}

double velocity_from_sq(double v2) {
  return v2 > 0.0 ? std::sqrt(v2) : std::numeric_limits<double>::quiet_NaN();
}

// Residual of the pure longitudinal condition, with the Cauchy part given
// directly so scans can skip the full bundle. Density cancels.
double purity_residual(const Stiffness& s, const Vec3& n) {
  const SymMat3 sn = contract_nn(s, n);
  const double scale = sn.norm();
  if (scale == 0.0) return 0.0;
  const Vec3 w = sn.apply(n);
  return norm(w - dot(n, w) * n) / scale;
}

// Orthonormal tangent pair at n.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& n) {
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n[i]) < std::abs(n[axis])) axis = i;
  Vec3 e{};
  e[axis] = 1.0;
  Vec3 t1 = cross(n, e);
  t1 = (1.0 / norm(t1)) * t1;
  return {t1, cross(n, t1)};
}

struct Refined {
  Vec3 n;
  double residual;
};

// Nelder-Mead on the squared residual over a tangent-plane chart centred on
// the seed. The chart is regular everywhere, unlike polar angles at the poles.
Refined refine(const Stiffness& s, const Vec3& seed, double step, int max_iter, double conv) {
  const auto [t1, t2] = tangent_basis(seed);
  const auto point = [&](const std::array<double, 2>& x) {
    const Vec3 p = seed + x[0] * t1 + x[1] * t2;
    return (1.0 / norm(p)) * p;
  };
  const auto f = [&](const std::array<double, 2>& x) {
    const double r = purity_residual(s, point(x));
    return r * r;
  };

  std::array<std::array<double, 2>, 3> x{{{0.0, 0.0}, {step, 0.0}, {0.0, step}}};
  std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};
  const double conv2 = conv * conv;

  for (int it = 0; it < max_iter; ++it) {
    std::array<int, 3> o{0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const int lo = o[0], mid = o[1], hi = o[2];
    if (fx[lo] <= conv2) break;
    const double spread = std::max(std::abs(x[hi][0] - x[lo][0]) + std::abs(x[hi][1] - x[lo][1]),
                                   std::abs(x[mid][0] - x[lo][0]) + std::abs(x[mid][1] - x[lo][1]));
    if (spread < 1e-16) break;

    const std::array<double, 2> c{0.5 * (x[lo][0] + x[mid][0]), 0.5 * (x[lo][1] + x[mid][1])};
    const auto along = [&](double t) {
      return std::array<double, 2>{c[0] + t * (x[hi][0] - c[0]), c[1] + t * (x[hi][1] - c[1])};
    };
    const auto xr = along(-1.0);
    const double fr = f(xr);
    if (fr < fx[lo]) {
      const auto xe = along(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        x[hi] = xe, fx[hi] = fe;
      } else {
        x[hi] = xr, fx[hi] = fr;
      }
    } else if (fr < fx[mid]) {
      x[hi] = xr, fx[hi] = fr;
    } else {
      const bool outside = fr < fx[hi];
      const auto xc = along(outside ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : fx[hi])) {
        x[hi] = xc, fx[hi] = fc;
      } else {
        for (int k : {mid, hi}) {
          x[k] = {x[lo][0] + 0.5 * (x[k][0] - x[lo][0]), x[lo][1] + 0.5 * (x[k][1] - x[lo][1])};
          fx[k] = f(x[k]);
        }
      }
    }
  }
  const int best = static_cast<int>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  const Vec3 n = point(x[best]);
  return {n, purity_residual(s, n)};
}

// Representative of {n, -n}: first component that is not rounding noise is
// positive.
Vec3 canonical_sign(const Vec3& n) {
  for (int i = 0; i < 3; ++i) {
    if (n[i] > 1e-9) return n;
    if (n[i] < -1e-9) return -n;
  }
  return n;
}

// Indices of lattice neighbours within chord distance h, via a uniform cell
// grid over [-1, 1]^3 with cells no smaller than h.
class NeighbourGrid {
 public:
  NeighbourGrid(const std::vector<UnitVec3>& pts, double h)
      : pts_(pts), h2_(h * h), m_(std::max(1, static_cast<int>(std::floor(2.0 / h)))) {
    const std::size_t cells = static_cast<std::size_t>(m_) * m_ * m_;
    start_.assign(cells + 1, 0);
    cell_of_.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      cell_of_[i] = cell_index(pts[i]);
      ++start_[cell_of_[i] + 1];
    }
    for (std::size_t c = 0; c < cells; ++c) start_[c + 1] += start_[c];
    members_.resize(pts.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < pts.size(); ++i) members_[fill[cell_of_[i]]++] = i;
  }

  template <class F>
  void for_each_neighbour(std::size_t i, F&& fn) const {
    const auto [cx, cy, cz] = coords(pts_[i]);
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          const int x = cx + dx, y = cy + dy, z = cz + dz;
          if (x < 0 || y < 0 || z < 0 || x >= m_ || y >= m_ || z >= m_) continue;
          const std::size_t c = (static_cast<std::size_t>(x) * m_ + y) * m_ + z;
          for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) {
            const std::size_t j = members_[k];
            if (j == i) continue;
            const Vec3 d = pts_[j].vec() - pts_[i].vec();
            if (dot(d, d) <= h2_) fn(j);
          }
        }
  }

 private:
  std::array<int, 3> coords(const Vec3& p) const {
    std::array<int, 3> c{};
    for (int a = 0; a < 3; ++a)
      c[a] = std::clamp(static_cast<int>(std::floor((p[a] + 1.0) * 0.5 * m_)), 0, m_ - 1);
    return c;
  }
  std::size_t cell_index(const Vec3& p) const {
    const auto [x, y, z] = coords(p);
    return (static_cast<std::size_t>(x) * m_ + y) * m_ + z;
  }

  const std::vector<UnitVec3>& pts_;
  double h2_;
  int m_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> cell_of_;
  std::vector<std::size_t> members_;
};

}  // namespace

ChristoffelBundle christoffel(const Stiffness& c, const UnitVec3& n, double rho) {
  require_density(rho);
  return christoffel(sa_split(c), n, rho);
}

ChristoffelBundle christoffel(const SAParts& parts, const UnitVec3& n, double rho) {
  require_density(rho);
  ChristoffelBundle b;
  b.direction = n;
  b.density = rho;
  b.cauchy = (1.0 / rho) * contract_nn(parts.cauchy, n);
  b.non_cauchy = (1.0 / rho) * contract_nn(parts.non_cauchy, n);
  b.gamma = b.cauchy + b.non_cauchy;
  return b;
}

WaveSolution wave_solve(const ChristoffelBundle& bundle) {
  const Eigen3 es = eig_sym3(bundle.gamma);
  WaveSolution w;
  w.causal = true;
  for (std::size_t k = 0; k < 3; ++k) {
    w.squared_velocities[k] = es.values[k];
    w.mode_causal[k] = es.values[k] > 0.0;
    w.velocities[k] = velocity_from_sq(es.values[k]);
    w.polarizations[k] = es.vectors[k];
    w.longitudinal_purity[k] = std::abs(dot(es.vectors[k], bundle.direction.vec()));
    w.causal = w.causal && w.mode_causal[k];
  }
  w.degenerate_pairs = es.degenerate;
  return w;
}

std::vector<WaveSolution> scan_waves(const Stiffness& c, double rho, std::span<const UnitVec3> dirs,
                                     unsigned threads) {
  require_density(rho);
  const SAParts parts = sa_split(c);
  std::vector<WaveSolution> out(dirs.size());
  detail::parallel_for(dirs.size(), threads,
                       [&](std::size_t i) { out[i] = wave_solve(christoffel(parts, dirs[i], rho)); });
  return out;
}

double sum_squared_velocities(const IrreducibleParts& parts, const UnitVec3& n, double rho) {
  require_density(rho);
  const SymMat3 l = 2.0 * parts.p + parts.q;
  return (2.0 * parts.s_scalar - parts.a_scalar) / (6.0 * rho) + l.quad(n) / (2.0 * rho);
}

CriticalDirections critical_directions(const IrreducibleParts& parts) {
  CriticalDirections out;
  out.l = 2.0 * parts.p + parts.q;
  const Eigen3 es = eig_sym3(out.l);
  // eig_sym3 flags relative to ||L||; a vanishing L is flagged separately
  // against the scale of the parts it came from.
  const double scale = std::max({parts.p_norm(), parts.q_norm(), std::abs(parts.s_scalar),
                                 std::abs(parts.a_scalar), parts.r_norm()});
  out.fully_degenerate = out.l.norm() <= kDegenerateEigenTol * scale;
  const auto& d = es.degenerate;
  for (std::size_t k = 0; k < 3; ++k) {
    out.axes[k].direction = UnitVec3::normalized(es.vectors[k]);
    out.axes[k].eigenvalue = es.values[k];
  }
  if (out.fully_degenerate || (d[0] && d[1])) {
    for (auto& a : out.axes) a.multiplicity = 3;
  } else {
    if (d[0]) out.axes[0].multiplicity = out.axes[1].multiplicity = 2;
    if (d[1]) out.axes[1].multiplicity = out.axes[2].multiplicity = 2;
  }
  return out;
}

double longitudinal_velocity_sq(const ChristoffelBundle& bundle) { return bundle.cauchy.quad(bundle.direction); }

double longitudinal_velocity_sq(const IrreducibleParts& parts, const UnitVec3& n, double rho) {
  require_density(rho);
  return (kLongitudinalScalarCoefficient * parts.s_scalar + 6.0 / 7.0 * parts.p.quad(n) +
          contract_nnnn(parts.r, n)) /
         rho;
}

double shear_sum(const IrreducibleParts& parts, const UnitVec3& n, double rho) {
  require_density(rho);
  const SymMat3 m = 2.0 * parts.p + 7.0 * parts.q;
  return ((4.0 * parts.s_scalar - 5.0 * parts.a_scalar) / 30.0 + m.quad(n) / 14.0 - contract_nnnn(parts.r, n)) /
         rho;
}

double pure_longitudinal_residual(const ChristoffelBundle& bundle) {
  const double scale = bundle.cauchy.norm();
  if (scale == 0.0) return 0.0;
  const Vec3& n = bundle.direction;
  const Vec3 w = bundle.cauchy.apply(n);
  return norm(w - dot(n, w) * n) / scale;
}

std::vector<UnitVec3> fibonacci_sphere(std::size_t n) {
  std::vector<UnitVec3> pts;
  pts.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    pts.push_back(UnitVec3::normalized(Vec3{{r * std::cos(phi), r * std::sin(phi), z}}));
  }
  return pts;
}

PureModeScan find_pure_longitudinal(const Stiffness& c, double rho, const PureModeOptions& opts) {
  require_density(rho);
  if (opts.grid_n < 100) throw ValidationError("pure-mode search needs at least 100 seeds");

  const Stiffness s = sa_split(c).cauchy;
  const std::vector<UnitVec3> seeds = fibonacci_sphere(opts.grid_n);
  const std::size_t n = seeds.size();

  PureModeScan scan;
  scan.seeds = n;

  std::vector<double> r(n);
  detail::parallel_for(n, opts.threads, [&](std::size_t i) { r[i] = purity_residual(s, seeds[i]); });
  if (*std::max_element(r.begin(), r.end()) <= opts.tol) {
    scan.all_directions_pure = true;
    return scan;
  }

  // Lattice-local minima, ties broken by index.
  const double spacing = std::sqrt(4.0 * std::numbers::pi / static_cast<double>(n));
  const NeighbourGrid grid(seeds, 2.5 * spacing);
  std::vector<std::uint8_t> is_min(n, 0);
  detail::parallel_for(n, opts.threads, [&](std::size_t i) {
    bool m = true;
    grid.for_each_neighbour(i, [&](std::size_t j) {
      if (r[j] < r[i] || (r[j] == r[i] && j < i)) m = false;
    });
    is_min[i] = m ? 1 : 0;
  });
  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < n; ++i)
    if (is_min[i]) minima.push_back(i);
  scan.refined = minima.size();

  std::vector<Refined> refined(minima.size());
  detail::parallel_for(minima.size(), opts.threads, [&](std::size_t k) {
    refined[k] = refine(s, seeds[minima[k]], spacing, opts.max_iterations, opts.convergence);
  });

  const double merge_cos = std::cos(opts.dedupe_degrees * std::numbers::pi / 180.0);
  for (std::size_t k = 0; k < minima.size(); ++k) {
    const Refined& cand = refined[k];
    if (!(cand.residual <= opts.tol)) continue;
    const Vec3 dir = canonical_sign(cand.n);
    auto dup = std::find_if(scan.hits.begin(), scan.hits.end(), [&](const PureModeHit& h) {
      return std::abs(dot(h.direction.vec(), dir)) >= merge_cos;
    });
    if (dup != scan.hits.end()) {
      if (cand.residual < dup->residual) {
        dup->direction = UnitVec3::normalized(dir);
        dup->residual = cand.residual;
      }
      continue;
    }
    PureModeHit hit;
    hit.direction = UnitVec3::normalized(dir);
    hit.kind = PureModeKind::longitudinal;
    hit.residual = cand.residual;
    hit.seed_index = minima[k];
    scan.hits.push_back(hit);
  }
  for (auto& h : scan.hits) h.velocity = velocity_from_sq(contract_nn(s, h.direction).quad(h.direction) / rho);
  return scan;
}

ShearPolarization shear_polarization(const ChristoffelBundle& bundle) {
  ShearPolarization out;
  const Vec3& n = bundle.direction;
  const Vec3 u = cross(n, bundle.cauchy.apply(n));
  const double scale = bundle.cauchy.norm();
  const double mag = norm(u);
  out.relative_magnitude = scale > 0.0 ? mag / scale : 0.0;
  if (scale > 0.0 && mag > 1e-10 * scale) {
    // Remove the rounding-level component along n left by the cross product.
    const Vec3 unit = (1.0 / mag) * u;
    out.u = UnitVec3::normalized(unit - dot(unit, n) * n);
  }
  return out;
}

double shear_velocity_sq(const ChristoffelBundle& bundle, const Vec3& u) {
  const double uu = dot(u, u);
  if (!(uu > 0.0)) throw ValidationError("shear polarization must be nonzero");
  return bundle.gamma.quad(u) / uu;
}

Vec3 shear_condition_vector(const ChristoffelBundle& bundle) {
  const Vec3& n = bundle.direction;
  const Vec3 u = cross(n, bundle.cauchy.apply(n));
  if (!(dot(u, u) > 0.0)) return Vec3{};
  const double v2 = shear_velocity_sq(bundle, u);
  return bundle.gamma.apply(u) - v2 * u;
}

double shear_condition_residual(const ChristoffelBundle& bundle) {
  const ShearPolarization pol = shear_polarization(bundle);
  if (pol.degenerate()) return 0.0;
  const double scale = bundle.gamma.norm() * bundle.cauchy.norm();
  return scale > 0.0 ? norm(shear_condition_vector(bundle)) / scale : 0.0;
}

}  // namespace eldecomp
