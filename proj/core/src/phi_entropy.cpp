#include "hodos/phi_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace hodos {

double PhiSpec::operator()(double t) const {
    switch (kind) {
        case Kind::Square: return t * t;
        case Kind::XLogX: return t <= 0.0 ? 0.0 : t * std::log(t);
        case Kind::Custom: return fn(t);
    }
    return 0.0;
}

std::string PhiSpec::name() const {
    switch (kind) {
        case Kind::Square: return "square";
        case Kind::XLogX: return "xlogx";
        case Kind::Custom: return "custom";
    }
    return "?";
}

void PhiSpec::check_convexity(double lo, double hi, int steps) const {
    const PhiSpec& phi = *this;
    double h = (hi - lo) / steps;
    for (int i = 0; i + 2 <= steps; ++i) {
        double a = lo + i * h, b = a + 2 * h;
        if (phi(0.5 * (a + b)) > 0.5 * (phi(a) + phi(b)) + 1e-12)
            throw input_error("PhiSpec: midpoint convexity violated");
    }
}

double phi_entropy(const Vector& f, const Vector& mu, const PhiSpec& phi) {
    if (f.size() != mu.size()) throw input_error("phi_entropy: size mismatch");
    if (f.minCoeff() < -1e-12)
        throw input_error("phi_entropy: f must be nonnegative");
    double mean = 0.0, val = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        double t = std::max(0.0, f[i]);
        mean += mu[i] * t;
        val += mu[i] * phi(t);
    }
    return val - phi(mean);
}

namespace {

double variance(const Vector& f, const Vector& mu) {
    double mean = mu.dot(f);
    double v = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i)
        v += mu[i] * (f[i] - mean) * (f[i] - mean);
    return v;
}

// Localization of f on X^(r) to the link of w: values f(w u tau) over the
// (r - |w|)-level of the link, paired with the pinned marginal there.
struct Localized {
    Complex::Pinned pin;
    Vector f;
    Vector mu;
};

Localized localize(const Complex& X, const Face& w, int r, const Vector& f) {
    Localized out{X.pinned(w), {}, {}};
    const Complex& L = out.pin.link;
    const int lr = r - w.size();
    out.mu = L.level_marginal(lr);
    out.f.resize(L.level_size(lr));
    for (int t = 0; t < L.level_size(lr); ++t) {
        Face parent = w;
        for (int v : L.level(lr)[t].elements)
            parent = parent.united(out.pin.parent_vertex[v]);
        out.f[t] = f[X.face_index(r, parent)];
    }
    return out;
}

}  // namespace

ContractionReport quadratic_contraction(const WalkOperator& P) {
    WalkOperator A = adjoint(P);
    WalkOperator G{A.M * P.M, P.mu_out, P.mu_out};
    const Vector& mu = G.mu_in;
    const int m = static_cast<int>(G.M.rows());
    Matrix S(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            S(i, j) = std::sqrt(mu[i] / mu[j]) * G.M(i, j);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (S + S.transpose()));

    ContractionReport r;
    r.mode = ContractionReport::Mode::Exact;
    if (m == 1) {
        r.constant = 1.0;
        r.witness = Vector::Ones(1);
        return r;
    }
    double lambda2 = es.eigenvalues()[m - 2];
    r.constant = 1.0 - lambda2;
    Vector g = es.eigenvectors().col(m - 2);
    for (int i = 0; i < m; ++i) g[i] /= std::sqrt(mu[i]);
    r.witness = g;
    double denom = variance(g, mu);
    double num = variance(P.M * g, P.mu_in);
    r.slack = denom > 1e-14 ? std::abs(num / denom - lambda2) : 0.0;
    return r;
}

namespace {

double xlogx_ratio(const Matrix& U, const Vector& mu_in, const Vector& mu_out,
                   const Vector& g) {
    static const PhiSpec phi = PhiSpec::xlogx();
    double denom = phi_entropy(g, mu_out, phi);
    if (denom < 1e-13) return -1.0;
    return phi_entropy(U * g, mu_in, phi) / denom;
}

}  // namespace

ContractionReport local_contraction(const Complex& X, const Face& w,
                                    const PhiSpec& phi) {
    const int np = X.rank() - w.size();
    if (np < 2) throw input_error("local_contraction: pinning too deep");

    if (phi.kind == PhiSpec::Kind::Square) {
        LinkGraph lg = X.link_graph(w);
        WalkOperator M{lg.M, lg.stationary, lg.stationary};
        double lambda2 = spectrum(M).lambda2;
        ContractionReport r;
        r.mode = ContractionReport::Mode::Exact;
        r.constant = 1.0 / np + (double(np - 1) / np) * lambda2;
        return r;
    }
    if (phi.kind != PhiSpec::Kind::XLogX)
        throw input_error("local_contraction: unsupported Phi");

    // Multi-start coordinate ascent on the defining sup-ratio; every iterate
    // is a valid witness, so the best value found is a lower bound on lc.
    Complex::Pinned pin = X.pinned(w);
    WalkOperator U = up_operator(pin.link, 1, np);
    const int dim = static_cast<int>(U.M.cols());
    double best = 0.0;
    Vector best_g = Vector::Ones(dim);
    std::mt19937_64 rng(0x10cc0de5ull);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    for (int start = 0; start < 64; ++start) {
        Vector g(dim);
        for (int i = 0; i < dim; ++i) g[i] = unif(rng);
        double cur = xlogx_ratio(U.M, U.mu_in, U.mu_out, g);
        for (int sweep = 0; sweep < 100; ++sweep) {
            double prev = cur;
            for (int i = 0; i < dim; ++i) {
                double hi = 3.0 * std::max(1.0, g.maxCoeff());
                double bt = g[i], bv = cur;
                for (int s = 0; s <= 48; ++s) {
                    g[i] = hi * s / 48.0;
                    double v = xlogx_ratio(U.M, U.mu_in, U.mu_out, g);
                    if (v > bv) {
                        bv = v;
                        bt = g[i];
                    }
                }
                double step = hi / 48.0;
                double lo2 = std::max(0.0, bt - step), hi2 = bt + step;
                for (int it = 0; it < 40; ++it) {
                    double m1 = lo2 + (hi2 - lo2) / 3.0;
                    double m2 = hi2 - (hi2 - lo2) / 3.0;
                    g[i] = m1;
                    double v1 = xlogx_ratio(U.M, U.mu_in, U.mu_out, g);
                    g[i] = m2;
                    double v2 = xlogx_ratio(U.M, U.mu_in, U.mu_out, g);
                    if (v1 > v2)
                        hi2 = m2;
                    else
                        lo2 = m1;
                    if (std::max(v1, v2) > bv) {
                        bv = std::max(v1, v2);
                        bt = v1 > v2 ? m1 : m2;
                    }
                }
                g[i] = bt;
                cur = bv;
            }
            if (cur - prev < 1e-10) break;
        }
        if (cur > best) {
            best = cur;
            best_g = g;
        }
    }
    ContractionReport r;
    r.mode = ContractionReport::Mode::EstimatedLowerCertificate;
    r.constant = std::max(0.0, best);
    r.witness = best_g;
    double again = xlogx_ratio(U.M, U.mu_in, U.mu_out, best_g);
    r.slack = again < 0.0 ? 0.0 : std::abs(again - best);
    return r;
}

CertificateReport theorem_4_1_certificate(const Complex& X, int ell,
                                          const PhiSpec& phi) {
    if (ell < 0 || ell > X.rank())
        throw input_error("theorem_4_1_certificate: level out of range");
    const int n = X.rank();
    CertificateReport rep;
    rep.certified = phi.kind == PhiSpec::Kind::Square;

    std::map<std::pair<int, int>, double> lc_memo;
    auto lc_of = [&](const Face& f) {
        std::pair<int, int> key{f.size(), X.face_index(f.size(), f)};
        auto it = lc_memo.find(key);
        if (it != lc_memo.end()) return it->second;
        double v = n - f.size() < 2 ? 1.0 : local_contraction(X, f, phi).constant;
        lc_memo.emplace(key, v);
        return v;
    };

    double best = 2.0;
    std::vector<Face> best_chain;
    X.enumerate_chains(ell, [&](const std::vector<Face>& chain) {
        double prod = 1.0;
        for (int j = 0; j < ell; ++j) prod *= 1.0 - lc_of(chain[j]);
        if (prod < best) {
            best = prod;
            best_chain = chain;
        }
    });
    rep.certificate = ell == 0 ? 1.0 : best;
    rep.worst_chain = best_chain;

    if (rep.certified) {
        rep.exact_cf = quadratic_contraction(up_operator(X, ell, n)).constant;
        rep.cf_slack = rep.exact_cf - rep.certificate;

        rep.cor42_lhs = spectrum(down_up(X, ell)).gap;
        double prod = 1.0;
        if (ell < n) {
            for (int i = 0; i < ell; ++i) {
                double worst = 1.0;
                for (const Face& f : X.level(i)) {
                    LinkGraph lg = X.link_graph(f);
                    WalkOperator M{lg.M, lg.stationary, lg.stationary};
                    worst = std::min(worst, spectrum(M).gap);
                }
                prod *= worst;
            }
        }
        rep.cor42_rhs = ell == n ? 0.0 : (double(n - ell) / n) * prod;
        rep.cor42_slack = rep.cor42_lhs - rep.cor42_rhs;
        rep.ok = rep.cf_slack >= -1e-9 && rep.cor42_slack >= -1e-9;
    } else {
        rep.ok = true;  // diagnostic, not certified
    }
    return rep;
}

double two_point_ls_factor(const Vector& mu) {
    double p = mu.minCoeff();
    // p > 1/2 only for a single atom, where every entropy vanishes
    if (p > 0.5 + 1e-12) return 1.0;
    if (std::abs(1.0 - 2.0 * p) < 1e-12) return 0.5;  // limit at p = 1/2
    return (1.0 - 2.0 * p) / std::log(1.0 / p - 1.0);
}

double log_sobolev_lower_bound(const WalkOperator& P) {
    if (!is_reversible(P, 1e-10))
        throw input_error("log_sobolev_lower_bound: operator is not reversible");
    return spectrum(P).gap * two_point_ls_factor(P.mu_in);
}

std::vector<Vector> test_function_corpus(int dim, const CorpusOptions& opts) {
    std::vector<Vector> out;
    for (int i = 0; i < dim; ++i) {
        Vector e = Vector::Zero(dim);
        e[i] = 1.0;
        out.push_back(e);
    }
    int pairs = 0;
    for (int i = 0; i < dim && pairs < opts.max_pairs; ++i)
        for (int j = 0; j < dim && pairs < opts.max_pairs; ++j) {
            if (i == j) continue;
            Vector f = Vector::Ones(dim);
            f[i] += 1.0;
            f[j] = std::max(0.0, f[j] - 1.0);
            out.push_back(f);
            ++pairs;
        }
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int r = 0; r < opts.n_random; ++r) {
        Vector f(dim);
        for (int i = 0; i < dim; ++i) f[i] = unif(rng);
        out.push_back(f);
    }
    return out;
}

CheckReport ls_lifting_check(const Complex& X, const LabelledRegularGraph& H,
                             int ell, const CorpusOptions& opts) {
    const PhiSpec xlogx = PhiSpec::xlogx();
    double c = log_sobolev_lower_bound(up_down(X, ell)) *
               (1.0 - two_sided_lambda(H));
    WalkOperator papx = expanderized_up_down(X, H, ell);
    CheckReport rep{"ls-lifting (LS(Papx) >= LS(Udw) Gap*(H))", c, 1e300, false};
    for (const Vector& f : test_function_corpus(static_cast<int>(papx.M.rows()),
                                                opts)) {
        Vector pf = papx.M * f;
        double dir = 0.0;
        for (Eigen::Index i = 0; i < f.size(); ++i)
            dir += papx.mu_in[i] * f[i] * (f[i] - pf[i]);
        double ent = phi_entropy(f.cwiseProduct(f), papx.mu_in, xlogx);
        rep.worst_slack = std::min(rep.worst_slack, dir - c * ent);
    }
    rep.ok = rep.worst_slack >= -1e-9;
    return rep;
}

CheckReport entropy_contraction_check(const WalkOperator& P, double c_certified,
                                      const CorpusOptions& opts) {
    const PhiSpec xlogx = PhiSpec::xlogx();
    CheckReport rep{"entropy-contraction (Ent(Pf) <= (1-c) Ent(f))", c_certified,
                    1e300, false};
    for (const Vector& f :
         test_function_corpus(static_cast<int>(P.M.cols()), opts)) {
        double lhs = phi_entropy(P.M * f, P.mu_in, xlogx);
        double rhs = (1.0 - c_certified) * phi_entropy(f, P.mu_out, xlogx);
        rep.worst_slack = std::min(rep.worst_slack, rhs - lhs);
    }
    rep.ok = rep.worst_slack >= -1e-9;
    return rep;
}

CheckReport chain_rule_check(const Complex& X, int ell, int r, const Vector& f,
                             const PhiSpec& phi) {
    if (ell < 0 || r < ell || r > X.rank())
        throw input_error("chain_rule_check: bad levels");
    if (f.size() != X.level_size(r))
        throw input_error("chain_rule_check: dimension mismatch");
    Vector pi_ell = X.level_marginal(ell);
    double lhs = phi_entropy(f, X.level_marginal(r), phi);
    double local = 0.0;
    for (int i = 0; i < X.level_size(ell); ++i) {
        Localized loc = localize(X, X.level(ell)[i], r, f);
        local += pi_ell[i] * phi_entropy(loc.f, loc.mu, phi);
    }
    WalkOperator U = up_operator(X, ell, r);
    double global = phi_entropy(U.M * f, pi_ell, phi);
    CheckReport rep{"chain-rule", 0.0, lhs - (local + global), false};
    rep.ok = std::abs(rep.worst_slack) <= 1e-10;
    return rep;
}

CheckReport garland_identity_check(const Complex& X, int ell, const Vector& f) {
    const int n = X.rank();
    if (ell < 0 || ell > n) throw input_error("garland_identity_check: bad level");
    if (f.size() != X.level_size(n))
        throw input_error("garland_identity_check: dimension mismatch");
    Vector pi_ell = X.level_marginal(ell);
    double worst = 0.0;

    // item 1
    double lhs1 = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) lhs1 += X.pi()[i] * f[i] * f[i];
    double rhs1 = 0.0;
    for (int i = 0; i < X.level_size(ell); ++i) {
        Localized loc = localize(X, X.level(ell)[i], n, f);
        rhs1 += pi_ell[i] * loc.mu.dot(loc.f.cwiseProduct(loc.f));
    }
    worst = std::max(worst, std::abs(lhs1 - rhs1));

    // item 2, all r in [ell, n]
    for (int r = ell; r <= n; ++r) {
        WalkOperator duw = down_up(X, r);
        Vector df = duw.M * f;
        double lhs2 = 0.0;
        for (Eigen::Index i = 0; i < f.size(); ++i)
            lhs2 += X.pi()[i] * f[i] * df[i];
        double rhs2 = 0.0;
        for (int i = 0; i < X.level_size(ell); ++i) {
            Localized loc = localize(X, X.level(ell)[i], n, f);
            WalkOperator local_duw = down_up(loc.pin.link, r - ell);
            Vector ldf = local_duw.M * loc.f;
            rhs2 += pi_ell[i] * loc.mu.dot(loc.f.cwiseProduct(ldf));
        }
        worst = std::max(worst, std::abs(lhs2 - rhs2));
    }

    // item 3, on g = U_{n-1 -> n} f
    if (n >= 2) {
        WalkOperator Un = up_operator(X, n - 1, n);
        Vector g = Un.M * f;
        WalkOperator udw = up_down(X, n - 1);
        Vector ug = udw.M * g;
        double lhs3 = 0.0;
        for (Eigen::Index i = 0; i < g.size(); ++i)
            lhs3 += udw.mu_in[i] * g[i] * ug[i];
        Vector pi_n2 = X.level_marginal(n - 2);
        double rhs3 = 0.0;
        for (int i = 0; i < X.level_size(n - 2); ++i) {
            const Face& w = X.level(n - 2)[i];
            LinkGraph lg = X.link_graph(w);
            const int m = static_cast<int>(lg.vertices.size());
            Vector gl(m);
            for (int t = 0; t < m; ++t)
                gl[t] = g[X.face_index(n - 1, w.united(lg.vertices[t]))];
            Vector act = gl / n + (double(n - 1) / n) * (lg.M * gl);
            rhs3 += pi_n2[i] * lg.stationary.dot(gl.cwiseProduct(act));
        }
        worst = std::max(worst, std::abs(lhs3 - rhs3));
    }

    CheckReport rep{"garland-identities", 0.0, worst, worst <= 1e-10};
    return rep;
}

namespace {

double lemma43_constant(const Vector& pinned_dist) {
    return two_point_ls_factor(pinned_dist);
}

double dirichlet_lsi_worst_slack(const WalkOperator& P, double c,
                                 const CorpusOptions& opts) {
    static const PhiSpec xlogx = PhiSpec::xlogx();
    double worst = 1e300;
    for (const Vector& f :
         test_function_corpus(static_cast<int>(P.M.rows()), opts)) {
        Vector pf = P.M * f;
        double dir = 0.0;
        for (Eigen::Index i = 0; i < f.size(); ++i)
            dir += P.mu_in[i] * f[i] * (f[i] - pf[i]);
        double ent = phi_entropy(f.cwiseProduct(f), P.mu_in, xlogx);
        worst = std::min(worst, dir - c * ent);
    }
    return worst;
}

}  // namespace

CheckReport lemma_4_3_check(const Complex& X, int ell,
                            const CorpusOptions& opts) {
    const int n = X.rank();
    if (ell < 0 || ell > n) throw input_error("lemma_4_3_check: bad level");

    // EC(U_{ell->n}) >= LS(U* U) = LS(Duw_{n<->ell})  (Miclo route)
    WalkOperator duw = down_up(X, ell);
    double ec_lb = log_sobolev_lower_bound(duw);
    double c_const = 1.0;
    for (int i = 0; i < X.level_size(ell); ++i)
        c_const = std::min(
            c_const,
            lemma43_constant(X.pinned(X.level(ell)[i]).link.level_marginal(n - ell)));
    double c1 = c_const * ec_lb;
    double worst = dirichlet_lsi_worst_slack(duw, c1, opts);

    if (n >= 2) {
        WalkOperator U = up_operator(X, n - 2, n - 1);
        WalkOperator D = down_operator(X, n - 1, n - 2);
        WalkOperator duw_small{D.M * U.M, D.mu_in, U.mu_out};
        double ec_small = log_sobolev_lower_bound(duw_small);
        double gap_links = 1.0;
        double c_small = 1.0;
        for (int i = 0; i < X.level_size(n - 2); ++i) {
            const Face& w = X.level(n - 2)[i];
            LinkGraph lg = X.link_graph(w);
            WalkOperator M{lg.M, lg.stationary, lg.stationary};
            gap_links = std::min(gap_links, spectrum(M).gap);
            c_small = std::min(c_small, lemma43_constant(
                                            X.pinned(w).link.level_marginal(1)));
        }
        double c2 = (double(n - 1) / n) * c_small * gap_links * ec_small;
        worst = std::min(worst,
                         dirichlet_lsi_worst_slack(up_down(X, n - 1), c2, opts));
    }

    CheckReport rep{"lemma-4.3 (LSI from EC)", c1, worst, worst >= -1e-9};
    return rep;
}

CheckReport dpi_check(const WalkOperator& P, const PhiSpec& phi,
                      const CorpusOptions& opts) {
    if (((P.M.transpose() * P.mu_in) - P.mu_out).cwiseAbs().maxCoeff() > 1e-10)
        throw input_error("dpi_check: measure mismatch");
    CheckReport rep{"data-processing inequality", 0.0, 1e300, false};
    for (const Vector& f :
         test_function_corpus(static_cast<int>(P.M.cols()), opts)) {
        double lhs = phi_entropy(P.M * f, P.mu_in, phi);
        double rhs = phi_entropy(f, P.mu_out, phi);
        rep.worst_slack = std::min(rep.worst_slack, rhs - lhs);
    }
    rep.ok = rep.worst_slack >= -1e-10;
    return rep;
}

double lee_boosting_bound(double C, int k) {
    if (!(C > 0.0)) throw input_error("lee_boosting_bound: C must be positive");
    return 1.0 / ((k + 1) * (C + 1.0));
}

}  // namespace hodos
