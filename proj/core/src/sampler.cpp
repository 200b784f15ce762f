#include "hodos/sampler.hpp"

#include <algorithm>

#include "hodos/operators.hpp"

namespace hodos {

int BitStream::draw_bit() {
    if (buffered_ == 0) {
        buffer_ = rng_();
        buffered_ = 64;
    }
    int b = static_cast<int>(buffer_ & 1u);
    buffer_ >>= 1;
    --buffered_;
    ++bits_used_;
    return b;
}

std::uint64_t BitStream::draw_chunk(int r) {
    std::uint64_t v = 0;
    for (int i = 0; i < r; ++i) v = (v << 1) | static_cast<std::uint64_t>(draw_bit());
    return v;
}

long long BitStream::uniform(long long m) {
    if (m <= 1) return 0;
    const int r = bits_for(m);
    while (true) {
        long long v = static_cast<long long>(draw_chunk(r));
        if (v < m) return v;
    }
}

int BitStream::categorical(const Vector& p) {
    const int m = static_cast<int>(p.size());
    if (m == 1) return 0;
    if (p.maxCoeff() - p.minCoeff() < 1e-12)
        return static_cast<int>(uniform(m));
    std::vector<double> cdf(m);
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    cdf[m - 1] = 1.0;
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 64; ++iter) {
        int cell = static_cast<int>(
            std::upper_bound(cdf.begin(), cdf.end(), lo) - cdf.begin());
        if (cell >= m) cell = m - 1;
        if (hi <= cdf[cell]) return cell;
        double mid = 0.5 * (lo + hi);
        if (draw_bit())
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    return static_cast<int>(
        std::min<std::ptrdiff_t>(m - 1, std::upper_bound(cdf.begin(), cdf.end(), x) -
                                            cdf.begin()));
}

WalkKind walk_kind_from_string(const std::string& s) {
    if (s == "down-up") return WalkKind::DownUp;
    if (s == "up-down") return WalkKind::UpDown;
    if (s == "systematic-scan") return WalkKind::SystematicScan;
    if (s == "expanderized-down-up") return WalkKind::ExpanderizedDownUp;
    if (s == "expanderized-up-down") return WalkKind::ExpanderizedUpDown;
    throw input_error("unknown walk kind: " + s);
}

std::string to_string(WalkKind k) {
    switch (k) {
        case WalkKind::DownUp: return "down-up";
        case WalkKind::UpDown: return "up-down";
        case WalkKind::SystematicScan: return "systematic-scan";
        case WalkKind::ExpanderizedDownUp: return "expanderized-down-up";
        case WalkKind::ExpanderizedUpDown: return "expanderized-up-down";
    }
    return "?";
}

namespace {

const LabelledRegularGraph& need_graph(const WalkSpec& spec) {
    if (!spec.graph)
        throw input_error("sampler_step: expanderized walk needs a graph");
    return *spec.graph;
}

int conditional_facet(const Complex& X, const Face& pinned, BitStream& rng) {
    int j = pinned.size();
    int pi_idx = X.face_index(j, pinned);
    if (pi_idx < 0) throw input_error("sampler_step: state face not in complex");
    const auto& cover = X.facets_containing(j, pi_idx);
    double mass = 0.0;
    for (int fi : cover) mass += X.pi()[fi];
    Vector p(static_cast<Eigen::Index>(cover.size()));
    for (std::size_t i = 0; i < cover.size(); ++i) p[i] = X.pi()[cover[i]] / mass;
    return cover[static_cast<std::size_t>(rng.categorical(p))];
}

Face subset_by_rank(const Face& omega, long long r, int ell) {
    std::vector<int> pos = subset_colex_unrank(r, omega.size(), ell);
    Face out;
    for (int p : pos) out.elements.push_back(omega.elements[p]);
    return out;
}

}  // namespace

ChainState initial_state(const Complex& X, const WalkSpec& spec, int facet_idx) {
    const int n = X.rank();
    const int ell = spec.effective_ell(n);
    const Face& facet = X.level(n)[facet_idx];
    ChainState s;
    switch (spec.kind) {
        case WalkKind::DownUp:
        case WalkKind::SystematicScan:
            s.face = facet;
            break;
        case WalkKind::ExpanderizedDownUp:
            s.face = facet;
            s.subset_rank = 0;
            break;
        case WalkKind::UpDown:
        case WalkKind::ExpanderizedUpDown:
            s.face = Face{std::vector<int>(facet.elements.begin(),
                                           facet.elements.begin() + ell)};
            break;
    }
    return s;
}

ChainState sampler_step(const Complex& X, const WalkSpec& spec,
                        const ChainState& state, BitStream& rng) {
    const int n = X.rank();
    const int ell = spec.effective_ell(n);
    const std::uint64_t before = rng.bits_used();
    ChainState next;
    next.step = state.step + 1;
    next.subset_rank = -1;

    switch (spec.kind) {
        case WalkKind::DownUp: {
            if (state.face.size() != n)
                throw input_error("sampler_step: down-up state must be a facet");
            long long r = rng.uniform(count_subsets(n, ell));
            Face pinned = subset_by_rank(state.face, r, ell);
            next.face = X.level(n)[conditional_facet(X, pinned, rng)];
            break;
        }
        case WalkKind::UpDown: {
            if (state.face.size() != ell)
                throw input_error("sampler_step: up-down state must be an ell-face");
            Face omega = X.level(n)[conditional_facet(X, state.face, rng)];
            long long r = rng.uniform(count_subsets(n, ell));
            next.face = subset_by_rank(omega, r, ell);
            break;
        }
        case WalkKind::SystematicScan: {
            if (!X.partite())
                throw not_partite_error("systematic scan: complex must be partite");
            int side = static_cast<int>(state.step % n);
            Face rest;
            for (int v : state.face.elements)
                if (X.side_of(v) != side) rest.elements.push_back(v);
            next.face = X.level(n)[conditional_facet(X, rest, rng)];
            break;
        }
        case WalkKind::ExpanderizedUpDown: {
            const auto& H = need_graph(spec);
            if (H.num_vertices != count_subsets(n, ell))
                throw input_error("sampler_step: H vertex count != C(n, ell)");
            long long s = type_rank(X, state.face);
            int a = static_cast<int>(rng.uniform(H.degree));
            std::vector<int> T =
                subset_colex_unrank(H.neighbor(static_cast<int>(s), a), n, ell);
            Face omega = X.level(n)[conditional_facet(X, state.face, rng)];
            next.face = restrict_to_type(X, omega, T);
            break;
        }
        case WalkKind::ExpanderizedDownUp: {
            const auto& H = need_graph(spec);
            if (H.num_vertices != count_subsets(n, ell))
                throw input_error("sampler_step: H vertex count != C(n, ell)");
            if (state.subset_rank < 0)
                throw input_error("sampler_step: state is missing its subset");
            int a = static_cast<int>(rng.uniform(H.degree));
            long long t = H.neighbor(static_cast<int>(state.subset_rank), a);
            std::vector<int> T = subset_colex_unrank(t, n, ell);
            Face pinned = restrict_to_type(X, state.face, T);
            int b = static_cast<int>(rng.uniform(H.degree));
            next.subset_rank = H.neighbor(static_cast<int>(t), b);
            next.face = X.level(n)[conditional_facet(X, pinned, rng)];
            break;
        }
    }
    next.bits_used = state.bits_used + (rng.bits_used() - before);
    return next;
}

int index_bits_per_step(const Complex& X, const WalkSpec& spec) {
    const int n = X.rank();
    const int ell = spec.effective_ell(n);
    switch (spec.kind) {
        case WalkKind::DownUp:
        case WalkKind::UpDown:
            return bits_for(count_subsets(n, ell));
        case WalkKind::SystematicScan:
            return 0;
        case WalkKind::ExpanderizedUpDown:
            return bits_for(need_graph(spec).degree);
        case WalkKind::ExpanderizedDownUp:
            return 2 * bits_for(need_graph(spec).degree);
    }
    return 0;
}

}  // namespace hodos
