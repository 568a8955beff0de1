#pragma once

#include <complex>

#include <Eigen/Core>

namespace decstab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Complex = std::complex<double>;
using Index = Eigen::Index;

enum class TimeDomain { continuous, discrete };

// Condition-number threshold above which I - D_K * D_P is treated as
// singular and the interconnection rejected as ill-posed.
inline constexpr double kWellPosedCondLimit = 1e12;

// max_i sum_j |A_ij|; zero for empty matrices.
double infinity_norm(const Matrix& m);

// Dense (A, B, C, D) realization of an FDLTI system. A static system is
// represented with order 0 (empty A, B with zero rows, C with zero
// columns), so the feedback formulas below apply uniformly.
struct StateSpace {
    Matrix A;  // n x n
    Matrix B;  // n x n_u
    Matrix C;  // n_y x n
    Matrix D;  // n_y x n_u
    TimeDomain time_domain = TimeDomain::continuous;

    StateSpace() = default;
    StateSpace(Matrix a, Matrix b, Matrix c, Matrix d,
               TimeDomain td = TimeDomain::continuous);

    static StateSpace static_gain(const Matrix& gain,
                                  TimeDomain td = TimeDomain::continuous);
    static StateSpace zero_gain(Index n_outputs, Index n_inputs,
                                TimeDomain td = TimeDomain::continuous);

    Index order() const { return A.rows(); }
    Index num_inputs() const { return D.cols(); }
    Index num_outputs() const { return D.rows(); }
    bool is_static() const { return order() == 0; }

    // Throws DimensionMismatch / ValidationError on inconsistent or
    // non-finite data.
    void validate() const;

    // Transfer matrix C (sigma I - A)^-1 B + D at one complex point.
    Eigen::MatrixXcd transfer_at(Complex sigma) const;
};

// Acceptable-eigenvalue region: the open left half-plane shifted by
// `margin`, or the open unit disk shrunk by `margin`. The complement is
// closed, so boundary eigenvalues count as unacceptable.
struct Region {
    enum class Kind { open_left_half_plane, open_unit_disk };

    Kind kind = Kind::open_left_half_plane;
    double margin = 0.0;

    static Region left_half_plane(double margin = 0.0) {
        return Region{Kind::open_left_half_plane, margin};
    }
    static Region unit_disk(double margin = 0.0) {
        return Region{Kind::open_unit_disk, margin};
    }
    static Region default_for(TimeDomain td) {
        return td == TimeDomain::continuous ? left_half_plane() : unit_disk();
    }

    // Signed distance past the boundary: Re(z) + margin for the half
    // plane, |z| - (1 - margin) for the disk. Negative means acceptable.
    double unacceptability(Complex z) const;
    bool acceptable(Complex z) const { return unacceptability(z) < 0.0; }

    bool matches(TimeDomain td) const {
        return (kind == Kind::open_left_half_plane) ==
               (td == TimeDomain::continuous);
    }
};

// Closed-loop dynamics matrix of K closed around P:
//   [ A_P + B_P M D_K C_P    B_P M C_K              ]
//   [ B_K N C_P              A_K + B_K D_P M C_K    ]
// with M = (I - D_K D_P)^-1 and N = (I - D_P D_K)^-1.
Matrix closed_loop_a(const StateSpace& plant, const StateSpace& controller,
                     double cond_limit = kWellPosedCondLimit);

// Full realization of the map r -> y when K is closed around P; its A
// block equals closed_loop_a(P, K).
StateSpace lft_close(const StateSpace& plant, const StateSpace& controller,
                     double cond_limit = kWellPosedCondLimit);

// Parallel interconnection K1 + K2: block-diagonal A, stacked B,
// concatenated C, summed D.
StateSpace add_controllers(const StateSpace& k1, const StateSpace& k2);

// Lifts a SISO system k to an n_u x n_y MIMO system e_i k e_j^T whose
// only nonzero channel is (i, j). Indices are 1-based.
StateSpace embed_siso(const StateSpace& siso, int i, int j, Index n_u,
                      Index n_y);

}  // namespace decstab
