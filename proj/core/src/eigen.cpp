#include "eldecomp/eigen.hpp"

namespace eldecomp {

Eigen3 eig_sym3(const SymMat3& a) {
  const auto es = jacobi_eigen<3>(a.to_matrix());
  Eigen3 out;
  out.values = es.values;
  for (std::size_t k = 0; k < 3; ++k) out.vectors[k] = Vec3{es.vectors[k]};

  const double gap = kDegenerateEigenTol * a.norm();
  out.degenerate = {std::abs(out.values[0] - out.values[1]) <= gap,
                    std::abs(out.values[1] - out.values[2]) <= gap,
                    std::abs(out.values[0] - out.values[2]) <= gap};
  return out;
}

}  // namespace eldecomp
