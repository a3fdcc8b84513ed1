#pragma once

#include "hedac/fields/scalar_field.hpp"
#include "hedac/geometry/cell_locator.hpp"
#include "hedac/geometry/tet_mesh.hpp"
#include "hedac/types.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/IterativeLinearSolvers>

#include <memory>

namespace hedac {

/// Smoothed attractant field: the solution of
///   k * laplace(psi) - psi + mu = 0   on the domain,
///   d(psi)/dn = 0                     on the boundary,
/// discretized with P1 tetrahedral elements.
using PotentialField = ScalarField;

enum class HelmholtzSolver {
    direct, ///< sparse Cholesky, factored once, triangular solves per step
    cg,     ///< diagonally preconditioned CG warm-started from the last solution
};

/// Assembled FEM operator (k*K + M). The matrix depends only on the mesh
/// and k, so it is built and factored once per scenario and never mutated.
class HelmholtzSystem {
public:
    HelmholtzSystem(const TetMesh& mesh, double k,
                    HelmholtzSolver solver = HelmholtzSolver::direct);

    /// Solves (k*K + M) psi = M*mu for the given source field.
    [[nodiscard]] PotentialField solve(const ScalarField& mu) const;

    [[nodiscard]] double conduction() const { return k_; }
    [[nodiscard]] const TetMesh& mesh() const { return *mesh_; }
    [[nodiscard]] const Eigen::SparseMatrix<double>& stiffness() const { return stiffness_; }
    [[nodiscard]] const Eigen::SparseMatrix<double>& mass() const { return mass_; }

private:
    const TetMesh* mesh_;
    double k_;
    HelmholtzSolver solver_kind_;
    Eigen::SparseMatrix<double> stiffness_;
    Eigen::SparseMatrix<double> mass_;
    Eigen::SparseMatrix<double> system_;
    std::unique_ptr<Eigen::SimplicialLLT<Eigen::SparseMatrix<double>>> llt_;
    std::unique_ptr<Eigen::ConjugateGradient<Eigen::SparseMatrix<double>,
                                             Eigen::Lower | Eigen::Upper>>
        cg_;
    mutable Eigen::VectorXd warm_start_;
    mutable bool warm_valid_ = false;
};

/// Constant-per-cell P1 gradient of psi in the tet containing p.
Vec3 grad_at(const PotentialField& psi, const CellLocator& locator, const Vec3& p);

/// Gradient within a known cell (no point location).
Vec3 cell_gradient(const PotentialField& psi, std::size_t cell);

} // namespace hedac
