#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodos {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad file, bad parameter, level out of range).
struct input_error : error {
    using error::error;
};

// Operation requested on a non-partite complex that requires types.
struct not_partite_error : input_error {
    using input_error::input_error;
};

// Numeric assertion failed (theorem check did not hold).
struct check_error : error {
    using error::error;
};

double binomial(int n, int k);

// Colex rank of a strictly increasing k-subset of {0,...,n-1}.
long long subset_colex_rank(const std::vector<int>& s);
std::vector<int> subset_colex_unrank(long long r, int n, int k);
long long count_subsets(int n, int k);

// All k-subsets of {0,...,n-1} in colex order.
std::vector<std::vector<int>> all_subsets_colex(int n, int k);

int bits_for(long long m);  // ceil(log2 m), 0 for m <= 1

}  // namespace hodos
