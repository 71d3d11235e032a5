#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rbmkit/mask.hpp"
#include "rbmkit/matrix.hpp"
#include "rbmkit/rng.hpp"

namespace rbmkit {

// Visible-unit family of a layer. Hidden units are always Bernoulli.
enum class LayerKind { bernoulli, gaussian, softmax_counts };

const char* layer_kind_name(LayerKind kind);
LayerKind layer_kind_from_name(const std::string& name);

struct RbmParams {
    Vector b;   // visible biases, length J
    Vector c;   // hidden biases, length I
    Matrix W;   // I x J

    std::size_t visible() const { return b.size(); }
    std::size_t hidden() const { return c.size(); }
    void validate() const;
    bool operator==(const RbmParams& o) const { return b == o.b && c == o.c && W == o.W; }
};

RbmParams make_rbm(std::size_t visible, std::size_t hidden);

// b = c = 0, W ~ U(-s, s) with s = 4 sqrt(6 / (I + J)).
void init_uniform(RbmParams& p, RandomSource& rng);

struct TrainConfig {
    int cd_k = 1;
    double learning_rate = 0.1;
    std::size_t minibatch_size = 10;
    int epochs = 10;
    std::uint64_t seed = 0;
    bool shuffle = true;

    void validate() const;
};

struct GibbsChain {
    Vector v;   // 0/1 entries, length J
    Vector h;   // 0/1 entries, length I
};

// --- energies ----------------------------------------------------------------

// E(v, h) = -b.v - c.h - h.W.v (Bernoulli units).
double energy(const RbmParams& p, const Vector& v, const Vector& h);

// F(v) = -b.v - sum_i log(1 + e^{c_i + W_i. v}).
double free_energy(const RbmParams& p, const Vector& v);

// Masked free energy: node masks weight each hidden softplus term by m_i;
// edge masks replace W with m * W. A none/all-ones mask equals the plain form.
double free_energy(const RbmParams& p, const Vector& v, const SampledMask& mask);

// Gaussian-visible (unit variance): F(v) = sum_j (v_j - b_j)^2 / 2 - sum_i log(1 + e^{c_i + W_i. v}).
double free_energy_gaussian(const RbmParams& p, const Vector& v);

// Replicated-softmax over word counts v with document length D = sum_j v_j:
// F(v) = -b.v - sum_i log(1 + e^{D c_i + W_i. v}).
double free_energy_rsm(const RbmParams& p, const Vector& v);

double free_energy_kind(LayerKind kind, const RbmParams& p, const Vector& v);

// --- conditionals --------------------------------------------------------------

Vector cond_h_given_v(const RbmParams& p, const Vector& v);
Vector cond_v_given_h(const RbmParams& p, const Vector& h);
Vector cond_h_given_v(const RbmParams& p, const Vector& v, const SampledMask& mask);
Vector cond_v_given_h(const RbmParams& p, const Vector& h, const SampledMask& mask);

// Kind-aware hidden conditional (softmax_counts scales the hidden bias by the
// document length of v).
Vector cond_h_given_v_kind(LayerKind kind, const RbmParams& p, const Vector& v);
Vector cond_h_given_v_kind(LayerKind kind, const RbmParams& p, const Vector& v,
                           const SampledMask& mask);

// --- Gibbs sampling -------------------------------------------------------------

// Samples h ~ P(h|v) then v ~ P(v|h). Under a node mask, hidden units with
// m_i = 0 stay fixed at zero; under an edge mask both conditionals use m * W.
void gibbs_step(GibbsChain& chain, const RbmParams& p, RandomSource& rng);
void gibbs_step(GibbsChain& chain, const RbmParams& p, const SampledMask& mask,
                RandomSource& rng);

// --- contrastive divergence ------------------------------------------------------

struct RbmGrad {
    Vector db;
    Vector dc;
    Matrix dW;
};

RbmGrad zero_grad(const RbmParams& p);

// Mean over the minibatch of dF(v)/dtheta - dF(v~)/dtheta where v~ is the
// k-step Gibbs reconstruction (sampled hidden states, mean-field final
// visible). Subtracting learning_rate * grad ascends the likelihood.
//
// Mask handling: a node spec is resampled per example (stream derived from
// the example's row id), an edge spec once per call; frozen specs apply their
// stored mask. Chain randomness uses streams disjoint from mask streams, so
// retain probability 1 reproduces the unmasked gradient bit-exactly.
RbmGrad cd_gradient(const RbmParams& p, const Matrix& minibatch, int k,
                    const MaskSpec& mask, const RandomSource& rng);

struct SparsityStats {
    Vector rho;            // mean hidden activation over the batch
    Vector sprime_mean;    // mean of sigma'(input)
    Matrix sprime_v_mean;  // mean of sigma'(input_i) * v_j
};

// Full-control variant used by the training loop: `rows` indexes into `data`,
// and per-example streams derive from those row ids so masks do not depend on
// minibatch iteration order. `batch_id` seeds the per-minibatch edge mask.
RbmGrad cd_gradient_rows(LayerKind kind, const RbmParams& p, const Matrix& data,
                         const std::vector<std::size_t>& rows, int k, const MaskSpec& mask,
                         std::uint64_t batch_id, const RandomSource& epoch_rng,
                         SparsityStats* sparsity = nullptr);

// --- SGD ------------------------------------------------------------------------

// Penalty term over W: returns the gradient and the scalar penalty value.
using PenaltyFn = std::function<std::pair<Matrix, double>(const Matrix& W)>;

struct SparsityPenalty {
    double target = 0.02;
    double coefficient = 0.0;
};

struct EpochOptions {
    MaskSpec mask;                        // resampled per schedule, or frozen
    PenaltyFn penalty;                    // optional weight penalty
    std::optional<SparsityPenalty> sparsity;
    bool freeze_masked_weights = false;   // keep pruned entries at zero
};

// One pass over `rows` of `data` in minibatches. Returns the penalty value at
// the end of the epoch (NaN when no penalty is active). Aborts with a
// diagnostic if any parameter magnitude exceeds 1e6.
double sgd_epoch(LayerKind kind, RbmParams& p, const Matrix& data,
                 const std::vector<std::size_t>& rows, const TrainConfig& cfg,
                 const EpochOptions& opts, int epoch_index, const RandomSource& run_rng);

} // namespace rbmkit
