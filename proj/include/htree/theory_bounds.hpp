#pragma once

namespace htree {

// Shared inputs for the sample-size evaluators. Not every field matters to
// every bound; each evaluator validates the ones it reads.
//   p      >= 2       vertex count
//   alpha, beta       coupling magnitude range, 0 < alpha <= beta
//   q      in [0,1/2) flip probability (q >= 1/2 yields +infinity)
//   delta  in (0,1)   failure probability
//   eta    > 0        pairwise-TV accuracy target
//   eta_s  > 0        symmetric-KL accuracy target
struct BoundInputs {
    int p = 2;
    double alpha = 0.0;
    double beta = 0.0;
    double q = 0.0;
    double delta = 0.05;
    double eta = 0.0;
    double eta_s = 0.0;
};

// Samples sufficient for exact structure recovery with prob >= 1-delta.
double n_sufficient_structure(const BoundInputs& in);

// Information-theoretic lower bound for structure recovery.
double n_necessary_structure(const BoundInputs& in);

// Samples sufficient for sup pairwise TV <= eta with prob >= 1-delta.
double n_sufficient_predictive(const BoundInputs& in);

// Lower bound for achieving sup pairwise TV <= eta. Only defined when
// tanh(alpha) + 2*eta < tanh(beta); otherwise the inputs are invalid.
double n_necessary_predictive(const BoundInputs& in);

// Samples sufficient for symmetric KL <= eta_s with prob >= 1-delta,
// assuming the true structure is recovered.
double n_sufficient_skl(const BoundInputs& in);

// Simplified upper-bound shapes: larger than the corresponding tight
// evaluators everywhere, with more readable dependence on beta and q.
double loose_n_sufficient_structure(const BoundInputs& in);
double loose_n_sufficient_predictive(const BoundInputs& in);

// Correlation-attenuation factor, in [0,1); 0 at q=0.
double gamma_fn(double beta, double q);

// Variance floor factor, in (0, 10/9); 1 at q=0 and >= exp(-2*beta)
// for q>0.
double k_fn(double beta, double q);

// Combined factor for the predictive middle term; 1 at q=0.
double b_fn(double beta, double q);

// Second-moment proxy, <= 3 - (1-2q)^2.
double s_fn(double beta, double q);

// Depth-d error amplification along a path; d >= 0.
double g_fn(double beta, double q, int d);

// High-probability deviation radius for channel-corrected path products
// at sample size n.
double delta_fn(double beta, double q, int p, double delta, double n);

// Empirical-moment deviation radius at sample size n.
double eps_dagger(int p, double delta, double n);

// Weak-edge decision threshold given a moment deviation radius eps.
double tau_dagger(double beta, double q, double eps);

} // namespace htree
