#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "hodos/complex.hpp"
#include "hodos/expanders.hpp"

namespace hodos {

// Seeded bit source with exact accounting: every bit handed out is counted,
// including bits burned by rejection.
class BitStream {
  public:
    explicit BitStream(std::uint64_t seed) : rng_(seed) {}

    int draw_bit();
    std::uint64_t draw_chunk(int r);

    // Uniform over {0,...,m-1} via ceil(log2 m)-bit chunks with rejection;
    // rejected draws are charged too. m = 1 draws nothing.
    long long uniform(long long m);

    // Inverse-CDF sample from a discrete distribution. Uniform supports use
    // chunked rejection; general supports refine a dyadic interval bit by bit
    // until it lands inside one CDF cell.
    int categorical(const Vector& p);

    std::uint64_t bits_used() const { return bits_used_; }

  private:
    std::mt19937_64 rng_;
    std::uint64_t buffer_ = 0;
    int buffered_ = 0;
    std::uint64_t bits_used_ = 0;
};

enum class WalkKind {
    DownUp,
    UpDown,
    SystematicScan,
    ExpanderizedDownUp,
    ExpanderizedUpDown,
};

WalkKind walk_kind_from_string(const std::string& s);
std::string to_string(WalkKind k);

struct WalkSpec {
    WalkKind kind = WalkKind::DownUp;
    int ell = -1;  // -1 means default n-1
    const LabelledRegularGraph* graph = nullptr;

    int effective_ell(int n) const { return ell < 0 ? n - 1 : ell; }
};

struct ChainState {
    Face face;                   // facet, or ell-face for up-down kinds
    long long subset_rank = -1;  // colex type rank, expanderized down-up only
    long long step = 0;
    std::uint64_t bits_used = 0;
};

ChainState initial_state(const Complex& X, const WalkSpec& spec, int facet_idx);
ChainState sampler_step(const Complex& X, const WalkSpec& spec,
                        const ChainState& state, BitStream& rng);

// Bits needed to pick the restriction index for one step of the walk
// (0 for systematic scan; 2*ceil(log2 k) for expanderized down-up).
int index_bits_per_step(const Complex& X, const WalkSpec& spec);

}  // namespace hodos
