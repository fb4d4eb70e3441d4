#pragma once
// Closed forms for the noisy-verifier analysis: pass rate, false-positive
// probability and its Bayesian expectation, the MLE capability estimate, the
// Bernoulli-KL trust-region bound with its asymptotics, and the digamma-based
// expected bound under a Beta(2, N) posterior.
//
// All logarithms are natural. Each function here is paired with an
// independent numeric oracle in pace/oracle.hpp used by the tests and the
// golden-fixture generator.

#include <cstdint>
#include <functional>

#include "pace/core.hpp"

namespace pace::theory {

// Sufficient statistic of a verification campaign: k passes out of N attempts.
struct PassObservation {
    int64_t k = 0;
    int64_t N = 1;

    void validate() const {
        if (N < 1 || k < 0 || k > N)
            throw ArgumentError("PassObservation requires 0 <= k <= N, N >= 1");
    }
};

struct BetaParams {
    double a = 1.0;
    double b = 1.0;

    void validate() const {
        if (a <= 0.0 || b <= 0.0) throw ArgumentError("BetaParams requires a > 0 and b > 0");
    }
};

// rho = alpha + (1 - alpha) * epsilon: total verifier pass probability when a
// correct path is generated with probability alpha and incorrect ones slip
// through with conditional defect rate epsilon.
double pass_rate(double alpha, double epsilon);

// Psi = (1 - alpha) * epsilon / rho: probability a verifier-accepted sample
// is a false positive. Undefined at alpha = epsilon = 0.
double fp_probability(double alpha, double epsilon);

// Projected MLE of intrinsic capability: max(0, (rho_hat - eps) / (1 - eps)),
// clamped to [0, 1].
double mle_alpha(double rho_hat, double epsilon);

// Binary entropy in nats, endpoints defined by continuity as 0.
double binary_entropy(double eta);

// KL(Ber(eta) || Ber(alpha)): the minimum distributional shift needed to lift
// success probability from alpha to eta. Open-interval domain.
double kl_bernoulli_lb(double eta, double alpha);

// Leading terms of the bound at alpha = 1/N: eta*ln(N) - H(eta). The O(1/N)
// remainder is what the tests measure.
double lb_asymptotic(double eta, int64_t N);

// Uniform-prior posterior over alpha given obs, with likelihood
// rho(alpha)^k (1-rho(alpha))^(N-k). Precomputes the normalizer once.
class PosteriorDensity {
public:
    PosteriorDensity(PassObservation obs, double epsilon);

    double operator()(double alpha) const;

    double normalizer() const { return normalizer_; }

private:
    PassObservation obs_;
    double epsilon_;
    double normalizer_;
};

// Convenience wrapper: density of PosteriorDensity(obs, epsilon) at alpha.
double posterior_density(double alpha, PassObservation obs, double epsilon);

// Expected false-positive probability under the posterior:
// E[Psi(alpha) | obs]. Requires epsilon > 0.
double expected_fp(PassObservation obs, double epsilon);

// Sign of the log-likelihood-ratio derivative between two observations at a
// given pass rate: true iff (k1 - k2) > rho * (N1 - N2). This is the
// monotone-likelihood-ratio condition behind the marginal-FP monotonicity.
bool mlrp_condition(PassObservation obs1, PassObservation obs2, double rho);

// Digamma via the recurrence psi(x+1) = psi(x) + 1/x lifted to x >= 6, then
// the asymptotic series ln x - 1/2x - 1/12x^2 + 1/120x^4 - 1/252x^6.
// Absolute error <= 1e-10 on [0.5, 1e6].
double digamma(double x);

// E[KL lower bound] under alpha ~ Beta(2, N):
// psi(N+2) - eta*psi(2) - (1-eta)*psi(N) - H(eta).
double expected_kl_lb(double eta, int64_t N);

// Adaptive Simpson quadrature on [lo, hi] to relative tolerance rel_tol.
// min_panels forces an initial uniform split; posterior integrals use a
// 10^4-panel floor when the likelihood spikes at a boundary (k = 0 or k = N
// with small epsilon), where coarse grids underresolve the mass.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol, int min_panels = 64);

}  // namespace pace::theory
