#include "decstab/rng.hpp"

namespace decstab {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (0x632be59bd9b4e019ULL + salt * 0x9e3779b97f4a7c15ULL);
    splitmix64(x);
    return splitmix64(x);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::unit() {
    // 53 mantissa bits; exact on every IEEE-754 platform.
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::symmetric() { return 2.0 * unit() - 1.0; }

Eigen::MatrixXd Rng::symmetric_matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = symmetric();
        }
    }
    return m;
}

}  // namespace decstab
