#include "decstab/state_space.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "decstab/errors.hpp"

namespace decstab {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw DimensionMismatch(message);
}

// Inverse with a condition-number gate (2-norm condition from SVD).
Matrix guarded_inverse(const Matrix& m, double cond_limit, const char* what) {
    if (m.rows() == 0) return m;
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0 || smax / smin > cond_limit) {
        throw IllPosedInterconnection(what);
    }
    return svd.solve(Matrix::Identity(m.rows(), m.cols()));
}

}  // namespace

double infinity_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

StateSpace::StateSpace(Matrix a, Matrix b, Matrix c, Matrix d, TimeDomain td)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)), time_domain(td) {
    validate();
}

StateSpace StateSpace::static_gain(const Matrix& gain, TimeDomain td) {
    return StateSpace(Matrix::Zero(0, 0), Matrix::Zero(0, gain.cols()),
                      Matrix::Zero(gain.rows(), 0), gain, td);
}

StateSpace StateSpace::zero_gain(Index n_outputs, Index n_inputs, TimeDomain td) {
    return static_gain(Matrix::Zero(n_outputs, n_inputs), td);
}

void StateSpace::validate() const {
    require(A.rows() == A.cols(), "A must be square");
    require(B.rows() == A.rows(), "B row count must match system order");
    require(C.cols() == A.rows(), "C column count must match system order");
    require(D.rows() == C.rows(), "D row count must match C");
    require(D.cols() == B.cols(), "D column count must match B");
    if (!A.allFinite() || !B.allFinite() || !C.allFinite() || !D.allFinite()) {
        throw ValidationError("state-space matrices must be finite");
    }
}

Eigen::MatrixXcd StateSpace::transfer_at(Complex sigma) const {
    const Index n = order();
    if (n == 0) return D.cast<Complex>();
    Eigen::MatrixXcd resolvent =
        (sigma * Eigen::MatrixXcd::Identity(n, n) - A.cast<Complex>())
            .partialPivLu()
            .solve(B.cast<Complex>());
    return C.cast<Complex>() * resolvent + D.cast<Complex>();
}

double Region::unacceptability(Complex z) const {
    if (kind == Kind::open_left_half_plane) return z.real() + margin;
    return std::abs(z) - (1.0 - margin);
}

namespace {

struct Interconnection {
    Matrix m;  // (I - D_K D_P)^-1
    Matrix n;  // (I - D_P D_K)^-1
};

Interconnection well_posed(const StateSpace& plant, const StateSpace& controller,
                           double cond_limit) {
    if (controller.num_inputs() != plant.num_outputs() ||
        controller.num_outputs() != plant.num_inputs()) {
        throw DimensionMismatch("controller I/O must mirror plant I/O");
    }
    const Index nu = plant.num_inputs();
    const Index ny = plant.num_outputs();
    Interconnection ic;
    ic.m = guarded_inverse(Matrix::Identity(nu, nu) - controller.D * plant.D,
                           cond_limit, "I - D_K D_P is numerically singular");
    ic.n = guarded_inverse(Matrix::Identity(ny, ny) - plant.D * controller.D,
                           cond_limit, "I - D_P D_K is numerically singular");
    return ic;
}

}  // namespace

Matrix closed_loop_a(const StateSpace& plant, const StateSpace& controller,
                     double cond_limit) {
    const auto ic = well_posed(plant, controller, cond_limit);
    const Index n = plant.order();
    const Index nk = controller.order();
    Matrix a(n + nk, n + nk);
    a.topLeftCorner(n, n) = plant.A + plant.B * ic.m * controller.D * plant.C;
    a.topRightCorner(n, nk) = plant.B * ic.m * controller.C;
    a.bottomLeftCorner(nk, n) = controller.B * ic.n * plant.C;
    a.bottomRightCorner(nk, nk) =
        controller.A + controller.B * plant.D * ic.m * controller.C;
    return a;
}

StateSpace lft_close(const StateSpace& plant, const StateSpace& controller,
                     double cond_limit) {
    const auto ic = well_posed(plant, controller, cond_limit);
    const Index n = plant.order();
    const Index nk = controller.order();
    const Index nu = plant.num_inputs();
    const Index ny = plant.num_outputs();

    Matrix a(n + nk, n + nk);
    a.topLeftCorner(n, n) = plant.A + plant.B * ic.m * controller.D * plant.C;
    a.topRightCorner(n, nk) = plant.B * ic.m * controller.C;
    a.bottomLeftCorner(nk, n) = controller.B * ic.n * plant.C;
    a.bottomRightCorner(nk, nk) =
        controller.A + controller.B * plant.D * ic.m * controller.C;

    Matrix b(n + nk, nu);
    b.topRows(n) = plant.B * ic.m;
    b.bottomRows(nk) = controller.B * plant.D * ic.m;

    Matrix c(ny, n + nk);
    c.leftCols(n) = ic.n * plant.C;
    c.rightCols(nk) = plant.D * ic.m * controller.C;

    Matrix d = plant.D * ic.m;
    return StateSpace(std::move(a), std::move(b), std::move(c), std::move(d),
                      plant.time_domain);
}

StateSpace add_controllers(const StateSpace& k1, const StateSpace& k2) {
    if (k1.num_inputs() != k2.num_inputs() ||
        k1.num_outputs() != k2.num_outputs()) {
        throw DimensionMismatch("parallel sum needs identical I/O dimensions");
    }
    if (k1.time_domain != k2.time_domain) {
        throw DimensionMismatch("parallel sum needs matching time domains");
    }
    const Index n1 = k1.order();
    const Index n2 = k2.order();
    Matrix a = Matrix::Zero(n1 + n2, n1 + n2);
    a.topLeftCorner(n1, n1) = k1.A;
    a.bottomRightCorner(n2, n2) = k2.A;
    Matrix b(n1 + n2, k1.num_inputs());
    b.topRows(n1) = k1.B;
    b.bottomRows(n2) = k2.B;
    Matrix c(k1.num_outputs(), n1 + n2);
    c.leftCols(n1) = k1.C;
    c.rightCols(n2) = k2.C;
    return StateSpace(std::move(a), std::move(b), std::move(c), k1.D + k2.D,
                      k1.time_domain);
}

StateSpace embed_siso(const StateSpace& siso, int i, int j, Index n_u, Index n_y) {
    if (siso.num_inputs() != 1 || siso.num_outputs() != 1) {
        throw DimensionMismatch("embed_siso needs a 1x1 system");
    }
    if (i < 1 || i > n_u || j < 1 || j > n_y) {
        throw IndexOutOfRange("embed_siso index outside [1,n_u]x[1,n_y]");
    }
    const Index nk = siso.order();
    Matrix b = Matrix::Zero(nk, n_y);
    b.col(j - 1) = siso.B;
    Matrix c = Matrix::Zero(n_u, nk);
    c.row(i - 1) = siso.C;
    Matrix d = Matrix::Zero(n_u, n_y);
    d(i - 1, j - 1) = siso.D(0, 0);
    return StateSpace(siso.A, std::move(b), std::move(c), std::move(d),
                      siso.time_domain);
}

}  // namespace decstab
