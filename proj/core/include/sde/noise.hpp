#pragma once

#include <cstdint>

#include "sde/model.hpp"

namespace sde {

// Well-known substream roles. Increments and Levy-area draws live in
// separate substreams so changing the Fourier depth never perturbs the
// underlying Brownian path.
namespace substream {
inline constexpr std::uint64_t increments = 0;
inline constexpr std::uint64_t levy = 1;
inline constexpr std::uint64_t checks = 2;
inline constexpr std::uint64_t initial = 3;
}  // namespace substream

// Counter-based stream: (seed, path_index, substream, counter) fully
// determines every draw, so paths can be regenerated independently and in
// any order. Built on the splitmix64 finalizer.
class NoiseStream {
public:
    NoiseStream(std::uint64_t seed, std::uint64_t path_index = 0, std::uint64_t sub = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t path_index() const { return path_index_; }
    std::uint64_t substream() const { return substream_; }

    NoiseStream with_path(std::uint64_t path_index) const;
    NoiseStream with_substream(std::uint64_t sub) const;
    // Independent child stream, e.g. one per integration step.
    NoiseStream derived(std::uint64_t salt) const;

    std::uint64_t raw(std::uint64_t counter) const;
    double uniform(std::uint64_t counter) const;  // strictly inside (0,1)
    double normal(std::uint64_t counter) const;   // N(0,1) via inverse CDF

private:
    std::uint64_t seed_;
    std::uint64_t path_index_;
    std::uint64_t substream_;
    std::uint64_t key_;
};

// n-by-m table of Brownian increments over [0,T], step h = T/n; entry (k,j)
// is w^j_{t_{k+1}} - w^j_{t_k}.
struct IncrementGrid {
    long n = 0;
    int m = 0;
    double T = 0.0;
    Mat dw;
    double step() const { return T / static_cast<double>(n); }
};

// Randomness consumed by one scheme step: the increment and the iterated
// integral matrix I(j,l) = int_{t_k}^{t_{k+1}} (w^j_s - w^j_{t_k}) dw^l_s.
struct StepRandomness {
    Vec dw;
    Mat iter;
    double h = 0.0;
};

IncrementGrid generate_increments(const NoiseStream& stream, long n, int m, double T);

// Coarse increment k = fixed-order pairwise sum of the fine block
// [k*factor, (k+1)*factor). factor must divide fine.n.
IncrementGrid coarsen(const IncrementGrid& fine, long factor);

enum class IterMode { Auto, Scalar, Commutative, LevyFourier };

struct IterConfig {
    IterMode mode = IterMode::Auto;
    long terms = 0;  // 0 -> default_levy_terms(h)
    bool tail_correction = true;
};

// Resolve IterMode::Auto for a model: scalar when m = 1, commutative when
// the model declares commuting noise, Levy-Fourier otherwise.
IterMode resolve_iter_mode(IterMode mode, const SdeModel& model);

// Fourier depth chosen so the per-step truncation RMS error stays below
// h^{3/2}, preserving strong order 1.0.
long default_levy_terms(double h);

// Antisymmetric Levy-area matrix sampled by a truncated Fourier expansion
// of the Brownian bridge with `terms` terms. With tail_correction the
// truncated remainder is replaced by an independent Gaussian carrying the
// exact conditional tail variance.
Mat levy_area(const Vec& dw, double h, long terms, const NoiseStream& stream,
              bool tail_correction = true);

// Iterated integral matrix for one step. Scalar mode requires m = 1 and is
// exact; commutative mode keeps only the symmetric part (valid when
// Lambda^j sigma^(.,l) = Lambda^l sigma^(.,j)); levy-fourier adds the
// sampled antisymmetric part. In every mode the construction enforces
// I(j,l) + I(l,j) = dw_j dw_l - delta_jl h bitwise.
Mat iterated_integrals(const Vec& dw, double h, const IterConfig& cfg,
                       const NoiseStream& stream);

}  // namespace sde
