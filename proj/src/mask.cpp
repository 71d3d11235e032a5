#include "rbmkit/mask.hpp"

#include <stdexcept>

namespace rbmkit {

namespace {

// Stream tags for mask sampling; chain sampling uses different tags so a
// p = 1 mask spec reproduces the unmasked trajectory bit-exactly.
constexpr std::uint64_t kNodeMaskTag = 0x6d61736b6e6f6465ULL;
constexpr std::uint64_t kEdgeMaskTag = 0x6d61736b65646765ULL;

void check_probs(const double* p, std::size_t n, const char* what) {
    for (std::size_t i = 0; i < n; ++i)
        if (!(p[i] >= 0.0 && p[i] <= 1.0))
            throw std::invalid_argument(std::string(what) + ": retain probability outside [0,1]");
}

void check_binary(const double* p, std::size_t n, const char* what) {
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] != 0.0 && p[i] != 1.0)
            throw std::invalid_argument(std::string(what) + ": frozen mask entries must be 0 or 1");
}

} // namespace

MaskSpec MaskSpec::node(Vector retain, bool frozen) {
    check_probs(retain.data(), retain.size(), "MaskSpec::node");
    if (frozen) check_binary(retain.data(), retain.size(), "MaskSpec::node");
    MaskSpec s;
    s.kind = Kind::node;
    s.node_retain = std::move(retain);
    s.frozen = frozen;
    return s;
}

MaskSpec MaskSpec::edge(Matrix retain, bool frozen) {
    check_probs(retain.data(), retain.size(), "MaskSpec::edge");
    if (frozen) check_binary(retain.data(), retain.size(), "MaskSpec::edge");
    MaskSpec s;
    s.kind = Kind::edge;
    s.edge_retain = std::move(retain);
    s.frozen = frozen;
    return s;
}

MaskSpec MaskSpec::uniform_node(std::size_t hidden, double p, bool frozen) {
    return node(Vector(hidden, p), frozen);
}

MaskSpec MaskSpec::uniform_edge(std::size_t hidden, std::size_t visible, double p, bool frozen) {
    return edge(Matrix(hidden, visible, p), frozen);
}

SampledMask sample_mask(const MaskSpec& spec, RandomSource& rng) {
    SampledMask m;
    m.kind = spec.kind;
    switch (spec.kind) {
    case MaskSpec::Kind::none:
        break;
    case MaskSpec::Kind::node:
        m.node = spec.frozen ? spec.node_retain : bernoulli_sample(spec.node_retain, rng);
        break;
    case MaskSpec::Kind::edge:
        m.edge = spec.frozen ? spec.edge_retain : bernoulli_sample(spec.edge_retain, rng);
        break;
    }
    return m;
}

std::vector<SampledMask> dropout_masks(const MaskSpec& spec, const std::vector<std::size_t>& row_ids,
                                       const RandomSource& epoch_rng) {
    std::vector<SampledMask> out;
    out.reserve(row_ids.size());
    for (std::size_t row : row_ids) {
        RandomSource rng = epoch_rng.fork(kNodeMaskTag).fork(row);
        out.push_back(sample_mask(spec, rng));
    }
    return out;
}

SampledMask dropconnect_mask(const MaskSpec& spec, std::uint64_t batch_id,
                             const RandomSource& epoch_rng) {
    RandomSource rng = epoch_rng.fork(kEdgeMaskTag).fork(batch_id);
    return sample_mask(spec, rng);
}

} // namespace rbmkit
