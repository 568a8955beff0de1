#pragma once

#include <vector>

#include "decstab/state_space.hpp"

namespace decstab {

struct Eigenvalue {
    Complex value;
    int multiplicity = 1;
};

// Eigenvalues clustered into distinct values with algebraic
// multiplicities. Spectra of real matrices are conjugate-closed by
// construction.
struct Spectrum {
    std::vector<Eigenvalue> eigenvalues;

    int total() const;
    bool empty() const { return eigenvalues.empty(); }

    // Distance from z to the nearest eigenvalue (infinity when empty).
    double distance_to(Complex z) const;
    bool contains(Complex z, double tol) const;

    // Flat list with each value repeated `multiplicity` times.
    std::vector<Complex> expanded() const;
};

// Default clustering tolerance: 1e-6 * max(1, ||A||_inf).
double default_delta_eig(const Matrix& m);

// Raw eigenvalues (exact conjugate pairs for real input).
std::vector<Complex> eigenvalues_of(const Matrix& m);

// Eigenvalues of a square matrix grouped into distinct values by
// clustering within delta_eig (pass a non-positive value for the
// default). Throws NumericalFailure if the eigensolver fails.
Spectrum spectrum(const Matrix& m, double delta_eig = -1.0);

// Clusters an explicit eigenvalue list (same rules as spectrum()).
Spectrum cluster_eigenvalues(std::vector<Complex> values, double delta_eig);

// Greedy minimum-distance pairing between two multisets of eigenvalues.
// Returns true when the totals agree and every matched pair lies within
// tol; the worst matched distance is written to max_distance if given.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol,
                   double* max_distance = nullptr);

// Largest unacceptability measure over the eigenvalues of m: spectral
// abscissa + margin for continuous regions, spectral radius - (1-margin)
// for discrete ones. Negative means every eigenvalue is acceptable.
double worst_unacceptability(const Matrix& m, const Region& region);

}  // namespace decstab
