#pragma once

#include <cstdint>
#include <vector>

#include "coxstar/diagram.hpp"
#include "coxstar/scalar.hpp"

namespace coxstar {

using RootIndex = std::uint16_t;

/// The finite root system of a diagram in the simple-root basis, with a
/// precomputed reflection permutation per generator.
///
/// Roots are indexed 0..2N-1: positive roots at 0..N-1 (simple root of
/// node i at index i-1), and the negative of root k at k+N.
class RootSystem {
  public:
    /// Closes the simple roots under s_i(v) = v - <pairing> alpha_i.
    /// Rejects diagrams with a general dihedral component.
    static RootSystem build(const CoxeterDiagram& d);

    const CoxeterDiagram& diagram() const { return diag_; }
    int npos() const { return npos_; }
    int nroots() const { return 2 * npos_; }

    /// Coordinates of positive root k (k < npos()).
    const std::vector<Scalar>& positive_root(int k) const { return pos_[k]; }

    RootIndex reflect(int label, RootIndex k) const { return refl_[label - 1][k]; }
    const std::vector<RootIndex>& reflection_table(int label) const { return refl_[label - 1]; }
    RootIndex flip(RootIndex k) const {
        return static_cast<RootIndex>(k < npos_ ? k + npos_ : k - npos_);
    }

    /// Pairing matrix entry c[i][j]: s_i(alpha_j) = alpha_j - c[i][j] alpha_i.
    /// Crystallographic components carry integer Cartan entries (the 4-bond of
    /// B_n is oriented c[n][n-1] = -2, of F4 c[3][2] = -2, the 6-bond of I2(6)
    /// c[2][1] = -3); the 5-bond of H carries -phi on both sides.
    const Scalar& cartan(int i, int j) const {
        return cartan_[static_cast<std::size_t>(i - 1) * diag_.rank() + (j - 1)];
    }

  private:
    CoxeterDiagram diag_;
    int npos_ = 0;
    std::vector<std::vector<Scalar>> pos_;
    std::vector<std::vector<RootIndex>> refl_;
    std::vector<Scalar> cartan_;

    explicit RootSystem(CoxeterDiagram d) : diag_(std::move(d)) {}
};

inline RootSystem build_root_system(const CoxeterDiagram& d) { return RootSystem::build(d); }

}  // namespace coxstar
