#include "hedac/pde/helmholtz.hpp"

#include "hedac/error.hpp"

#include <array>
#include <vector>

namespace hedac {
namespace {

struct ElementMatrices {
    double stiffness[4][4];
    double mass[4][4];
};

// P1 element integrals on a single tet: grad(lambda_i) is constant, and
// int(lambda_i * lambda_j) = V/10 on the diagonal, V/20 off it.
ElementMatrices element_matrices(const TetMesh& mesh, std::size_t c) {
    const Tet& t = mesh.cells[c];
    const Vec3& a = mesh.nodes[t[0]];
    const Vec3 e1 = mesh.nodes[t[1]] - a;
    const Vec3 e2 = mesh.nodes[t[2]] - a;
    const Vec3 e3 = mesh.nodes[t[3]] - a;
    const double vol6 = e1.cross(e2).dot(e3);
    const double volume = vol6 / 6.0;

    std::array<Vec3, 4> grad;
    grad[1] = e2.cross(e3) / vol6;
    grad[2] = e3.cross(e1) / vol6;
    grad[3] = e1.cross(e2) / vol6;
    grad[0] = -(grad[1] + grad[2] + grad[3]);

    ElementMatrices em{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            em.stiffness[i][j] = volume * grad[i].dot(grad[j]);
            em.mass[i][j] = (i == j ? volume / 10.0 : volume / 20.0);
        }
    }
    return em;
}

} // namespace

HelmholtzSystem::HelmholtzSystem(const TetMesh& mesh, double k, HelmholtzSolver solver)
    : mesh_(&mesh), k_(k), solver_kind_(solver) {
    if (k <= 0.0) throw ValidationError("conduction coefficient k must be > 0");

    const auto n = static_cast<Eigen::Index>(mesh.node_count());
    std::vector<Eigen::Triplet<double>> ks, ms;
    ks.reserve(mesh.cells.size() * 16);
    ms.reserve(mesh.cells.size() * 16);
    for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        const auto em = element_matrices(mesh, c);
        const Tet& t = mesh.cells[c];
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                ks.emplace_back(t[i], t[j], em.stiffness[i][j]);
                ms.emplace_back(t[i], t[j], em.mass[i][j]);
            }
        }
    }
    stiffness_.resize(n, n);
    stiffness_.setFromTriplets(ks.begin(), ks.end());
    mass_.resize(n, n);
    mass_.setFromTriplets(ms.begin(), ms.end());
    system_ = k_ * stiffness_ + mass_;
    system_.makeCompressed();

    if (solver_kind_ == HelmholtzSolver::direct) {
        llt_ = std::make_unique<Eigen::SimplicialLLT<Eigen::SparseMatrix<double>>>();
        llt_->compute(system_);
        if (llt_->info() != Eigen::Success)
            throw Error("Helmholtz system factorization failed (mesh is broken?)");
    } else {
        cg_ = std::make_unique<Eigen::ConjugateGradient<Eigen::SparseMatrix<double>,
                                                        Eigen::Lower | Eigen::Upper>>();
        cg_->setTolerance(1e-13);
        cg_->setMaxIterations(10 * n);
        cg_->compute(system_);
        if (cg_->info() != Eigen::Success)
            throw Error("Helmholtz system preconditioner setup failed");
    }
}

PotentialField HelmholtzSystem::solve(const ScalarField& mu) const {
    if (mu.mesh != mesh_ || mu.size() != mesh_->node_count())
        throw ValidationError("source field does not match the system mesh");

    const Eigen::Map<const Eigen::VectorXd> mu_vec(mu.values.data(),
                                                   static_cast<Eigen::Index>(mu.size()));
    const Eigen::VectorXd load = mass_ * mu_vec;

    Eigen::VectorXd psi;
    if (solver_kind_ == HelmholtzSolver::direct) {
        psi = llt_->solve(load);
    } else {
        if (warm_valid_)
            psi = cg_->solveWithGuess(load, warm_start_);
        else
            psi = cg_->solve(load);
        warm_start_ = psi;
        warm_valid_ = true;
    }

    PotentialField out(*mesh_);
    Eigen::Map<Eigen::VectorXd>(out.values.data(), psi.size()) = psi;
    return out;
}

Vec3 cell_gradient(const PotentialField& psi, std::size_t cell) {
    const TetMesh& mesh = *psi.mesh;
    const Tet& t = mesh.cells[cell];
    const Vec3& a = mesh.nodes[t[0]];
    const Vec3 e1 = mesh.nodes[t[1]] - a;
    const Vec3 e2 = mesh.nodes[t[2]] - a;
    const Vec3 e3 = mesh.nodes[t[3]] - a;
    const double vol6 = e1.cross(e2).dot(e3);

    const Vec3 g1 = e2.cross(e3) / vol6;
    const Vec3 g2 = e3.cross(e1) / vol6;
    const Vec3 g3 = e1.cross(e2) / vol6;
    const Vec3 g0 = -(g1 + g2 + g3);
    return psi[t[0]] * g0 + psi[t[1]] * g1 + psi[t[2]] * g2 + psi[t[3]] * g3;
}

Vec3 grad_at(const PotentialField& psi, const CellLocator& locator, const Vec3& p) {
    return cell_gradient(psi, locator.locate(p).cell);
}

} // namespace hedac
