#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace decstab {

// Stateless seed mixing (splitmix64). Used to derive independent
// sub-streams from one user-visible seed so that every randomized
// routine is reproducible and insensitive to call order elsewhere.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Deterministic generator with platform-independent output. All random
// draws in the library go through this class; no global RNG state.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Uniform on [0, 1).
    double unit();

    // Uniform on [-1, 1].
    double symmetric();

    // Matrix with i.i.d. entries uniform on [-1, 1].
    Eigen::MatrixXd symmetric_matrix(Eigen::Index rows, Eigen::Index cols);

   private:
    std::uint64_t state_;
};

}  // namespace decstab
