#pragma once

#include "hodos/complex.hpp"
#include "hodos/expanders.hpp"

namespace hodos {

// Row-stochastic matrix between two indexed state spaces, carried together
// with the measures it transports: mu_in * M = mu_out.
struct WalkOperator {
    Matrix M;
    Vector mu_in;
    Vector mu_out;

    void validate(double tol = 1e-12) const;
};

WalkOperator up_operator(const Complex& X, int ell, int k);
WalkOperator down_operator(const Complex& X, int k, int ell);

// Duw_{n<->ell} = D_{n->ell} * U_{ell->n} on X^(n).
WalkOperator down_up(const Complex& X, int ell);
// Udw_{ell<->n} = U_{ell->n} * D_{n->ell} on X^(ell).
WalkOperator up_down(const Complex& X, int ell);

// Expanderized walks. H lives on the type set C([n],ell), vertices indexed by
// the colex order of ell-subsets of {0,...,n-1}; the vertex count is checked
// here, at walk assembly.
WalkOperator expanderized_up_down(const Complex& X, const LabelledRegularGraph& H,
                                  int ell);
WalkOperator q_down(const Complex& X, const LabelledRegularGraph& H, int ell);
WalkOperator q_up(const Complex& X, const LabelledRegularGraph& H, int ell);
WalkOperator expanderized_down_up(const Complex& X, const LabelledRegularGraph& H,
                                  int ell);

// Collapses the subset coordinate of Paqx: average over the uniform incoming
// subset, sum over the outgoing one. Returns an operator on X^(n).
WalkOperator face_marginal(const Complex& X, const WalkOperator& paqx, int ell);

// Single-site systematic scan: resample the vertex on the given side.
WalkOperator scan_step(const Complex& X, int side);
// One sweep = n scan steps, sides visited in order 0,...,n-1.
WalkOperator scan_sweep(const Complex& X);

long long type_rank(const Complex& X, const Face& f);
Face restrict_to_type(const Complex& X, const Face& f, const std::vector<int>& type);

}  // namespace hodos
