#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hpdiv/matrix.hpp"
#include "hpdiv/spectral.hpp"

namespace hpdiv {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// Independent per-trial stream: mixing makes neighboring trial indices
// uncorrelated, so suites stay deterministic under any thread count.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t trial_index) {
    return seed ^ detail::splitmix64(trial_index + 0x51ed2701ULL);
}

// mt19937_64 is fully specified by the standard; distributions are not, so
// uniforms and gaussians are produced by hand for bit-identical output
// across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {  // in [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double gaussian() {  // Box-Muller, one value per call
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    cplx complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx(re, im);
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar-distributed unitary: QR of a complex Ginibre matrix via modified
// Gram-Schmidt. MGS produces R with positive real diagonal, which is the
// phase-fixed convention that makes Q Haar.
inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
    ComplexMatrix q(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) q(i, j) = rng.complex_gaussian();

    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {  // reorthogonalize once
            for (std::size_t k = 0; k < j; ++k) {
                cplx dot(0.0, 0.0);
                for (std::size_t i = 0; i < dim; ++i) dot += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < dim; ++i) q(i, j) -= dot * q(i, k);
            }
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(q(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < dim; ++i) q(i, j) /= nrm;
    }
    return q;
}

inline ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary(dim, rng);
}

struct HpdGenConfig {
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    double log_eig_min = -1.0;  // natural-log scale
    double log_eig_max = 1.0;
    bool unit_trace = false;

    void validate() const {
        if (dim < 1) throw input_error("HpdGenConfig: dim must be >= 1");
        if (!(log_eig_min <= log_eig_max))
            throw input_error("HpdGenConfig: logEigMin must be <= logEigMax");
    }
};

// X = Q diag(lambda) Q* with Haar Q and log-uniform eigenvalues.
// Deterministic in (seed, dim, bounds).
inline HermitianMatrix random_hpd(const HpdGenConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    ComplexMatrix q = random_unitary(cfg.dim, rng);
    std::vector<double> lambda(cfg.dim);
    for (auto& l : lambda) l = std::exp(rng.uniform(cfg.log_eig_min, cfg.log_eig_max));

    ComplexMatrix qd(cfg.dim, cfg.dim);
    for (std::size_t i = 0; i < cfg.dim; ++i)
        for (std::size_t j = 0; j < cfg.dim; ++j) qd(i, j) = q(i, j) * lambda[j];
    HermitianMatrix x = HermitianMatrix::hermitian_part(matmul(qd, adjoint(q)));
    if (cfg.unit_trace) x = (1.0 / x.trace()) * x;
    return x;
}

// Random Hermitian (not necessarily PD) direction, unit Frobenius norm.
inline HermitianMatrix random_hermitian_direction(std::size_t dim, Rng& rng) {
    HermitianMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) h.set(i, j, rng.complex_gaussian());
        h.set(i, i, rng.gaussian());
    }
    const double nrm = frobenius_norm(h);
    return (nrm > 0.0 ? 1.0 / nrm : 1.0) * h;
}

}  // namespace hpdiv
