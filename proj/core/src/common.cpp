#include "hodos/common.hpp"

#include <algorithm>

namespace hodos {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

long long subset_colex_rank(const std::vector<int>& s) {
    long long r = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        r += static_cast<long long>(binomial(s[i], static_cast<int>(i) + 1) + 0.5);
    return r;
}

std::vector<int> subset_colex_unrank(long long r, int n, int k) {
    std::vector<int> s(k);
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < n && static_cast<long long>(binomial(c + 1, i) + 0.5) <= r) ++c;
        s[i - 1] = c;
        r -= static_cast<long long>(binomial(c, i) + 0.5);
    }
    return s;
}

long long count_subsets(int n, int k) {
    return static_cast<long long>(binomial(n, k) + 0.5);
}

std::vector<std::vector<int>> all_subsets_colex(int n, int k) {
    long long m = count_subsets(n, k);
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (long long r = 0; r < m; ++r) out.push_back(subset_colex_unrank(r, n, k));
    return out;
}

int bits_for(long long m) {
    int b = 0;
    long long v = 1;
    while (v < m) {
        v <<= 1;
        ++b;
    }
    return b;
}

}  // namespace hodos
