#pragma once

#include "rbmkit/matrix.hpp"
#include "rbmkit/rng.hpp"

namespace rbmkit {

// Retain-probability specification for node (hidden-unit) and edge (weight)
// masks. A frozen spec holds a literal 0/1 mask that every sample() returns
// unchanged; otherwise entries are independent Bernoulli retain rates.
struct MaskSpec {
    enum class Kind { none, node, edge };

    Kind kind = Kind::none;
    Vector node_retain;   // length I, used when kind == node
    Matrix edge_retain;   // I x J, used when kind == edge
    bool frozen = false;

    static MaskSpec none_mask() { return MaskSpec{}; }
    static MaskSpec node(Vector retain, bool frozen = false);
    static MaskSpec edge(Matrix retain, bool frozen = false);
    static MaskSpec uniform_node(std::size_t hidden, double p, bool frozen = false);
    static MaskSpec uniform_edge(std::size_t hidden, std::size_t visible, double p,
                                 bool frozen = false);

    bool is_none() const { return kind == Kind::none; }
};

// One concrete 0/1 realization of a MaskSpec.
struct SampledMask {
    MaskSpec::Kind kind = MaskSpec::Kind::none;
    Vector node;   // 0/1 per hidden unit
    Matrix edge;   // 0/1 per weight

    bool is_none() const { return kind == MaskSpec::Kind::none; }
};

// Draws a mask; frozen specs return their stored mask without consuming rng.
SampledMask sample_mask(const MaskSpec& spec, RandomSource& rng);

// Per-example node masks for a minibatch (Dropout granularity). Row n is the
// mask for example row_ids[n]; streams are derived from the row id so the
// result is independent of minibatch ordering.
std::vector<SampledMask> dropout_masks(const MaskSpec& spec, const std::vector<std::size_t>& row_ids,
                                       const RandomSource& epoch_rng);

// One edge mask shared by a whole minibatch (DropConnect granularity).
SampledMask dropconnect_mask(const MaskSpec& spec, std::uint64_t batch_id,
                             const RandomSource& epoch_rng);

} // namespace rbmkit
