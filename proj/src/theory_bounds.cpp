#include "htree/theory_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace htree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_beta_q(double beta, double q) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (!(q >= 0.0 && q < 0.5)) throw std::invalid_argument("flip probability must be in [0, 0.5)");
}

void check_common(const BoundInputs& in) {
    if (in.p < 2) throw std::invalid_argument("vertex count must be >= 2");
    if (!(in.alpha > 0.0 && in.alpha <= in.beta))
        throw std::invalid_argument("need 0 < alpha <= beta");
    if (in.q < 0.0) throw std::invalid_argument("flip probability must be nonnegative");
}

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
}

void check_eta(double eta) {
    if (!(eta > 0.0)) throw std::invalid_argument("accuracy target must be positive");
}

double a_fn(double beta, double q) {
    double c2 = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    return c2 * (1.0 - std::tanh(beta) * (1.0 - c2));
}

} // namespace

double gamma_fn(double beta, double q) {
    check_beta_q(beta, q);
    double c2 = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    double c4 = c2 * c2;
    double tb2 = std::tanh(beta) * std::tanh(beta);
    double r = (1.0 - c2) / (1.0 - c4 * tb2);
    return r * r;
}

double k_fn(double beta, double q) {
    check_beta_q(beta, q);
    double c2 = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    double tb2 = std::tanh(beta) * std::tanh(beta);
    return 10.0 * (1.0 - tb2) / (9.0 + c2 - tb2 * c2 * (9.0 * c2 + 1.0));
}

double b_fn(double beta, double q) {
    check_beta_q(beta, q);
    double root = 1.0 + 2.0 * std::exp(beta) * std::sqrt(2.0 * (1.0 - q) * q * std::tanh(beta));
    return std::max(1.0 / k_fn(beta, q), root * root);
}

double s_fn(double beta, double q) {
    check_beta_q(beta, q);
    double c2 = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    double tb2 = std::tanh(beta) * std::tanh(beta);
    return 2.0 + (c2 / 6.0) * (1.0 - c2) * tb2;
}

double g_fn(double beta, double q, int d) {
    check_beta_q(beta, q);
    if (d < 0) throw std::invalid_argument("path length must be nonnegative");
    double c2 = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    double a = a_fn(beta, q);
    return (3.0 / (4.0 * c2)) * (d * (1.0 - a) * std::pow((a + 2.0) / 3.0, d) + 1.0);
}

double delta_fn(double beta, double q, int p, double delta, double n) {
    check_beta_q(beta, q);
    check_delta(delta);
    if (p < 2) throw std::invalid_argument("vertex count must be >= 2");
    if (!(n > 0.0)) throw std::invalid_argument("sample size must be positive");
    double c2 = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    double c4 = c2 * c2;
    double tb = std::tanh(beta);
    double tb2 = tb * tb;
    return (1.0 - c2) / (1.0 - c4 * tb2) *
           std::sqrt(3.0 * std::log(2.0 * p * p * double(p) / delta) / n) * tb2 *
           std::exp(2.0 * beta);
}

double eps_dagger(int p, double delta, double n) {
    if (p < 2) throw std::invalid_argument("vertex count must be >= 2");
    check_delta(delta);
    if (!(n > 0.0)) throw std::invalid_argument("sample size must be positive");
    return std::sqrt(2.0 * std::log(2.0 * p * double(p) / delta) / n);
}

double tau_dagger(double beta, double q, double eps) {
    check_beta_q(beta, q);
    if (!(eps > 0.0)) throw std::invalid_argument("deviation radius must be positive");
    double c2 = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    double c4 = c2 * c2;
    double tb = std::tanh(beta);
    return 4.0 * eps * std::sqrt(1.0 - c4 * tb) / (c2 * (1.0 - tb));
}

double n_sufficient_structure(const BoundInputs& in) {
    check_common(in);
    check_delta(in.delta);
    if (in.q >= 0.5) return kInf;
    double c2 = (1.0 - 2.0 * in.q) * (1.0 - 2.0 * in.q);
    double c4 = c2 * c2;
    double tb = std::tanh(in.beta);
    double ta = std::tanh(in.alpha);
    return 32.0 * (1.0 - c4 * tb) / (c4 * (1.0 - tb) * (1.0 - tb) * ta * ta) *
           std::log(2.0 * in.p * double(in.p) / in.delta);
}

double n_necessary_structure(const BoundInputs& in) {
    check_common(in);
    if (in.q >= 0.5) return kInf;
    double sdpi = 1.0 - std::pow(4.0 * in.q * (1.0 - in.q), in.p);
    return (1.0 / sdpi) / (16.0 * in.alpha * std::tanh(in.alpha)) *
           std::exp(2.0 * in.beta) * std::log(double(in.p));
}

double n_sufficient_predictive(const BoundInputs& in) {
    check_common(in);
    check_delta(in.delta);
    check_eta(in.eta);
    if (in.q >= 0.5) return kInf;
    double c2 = (1.0 - 2.0 * in.q) * (1.0 - 2.0 * in.q);
    double c4 = c2 * c2;
    double e2b = std::exp(2.0 * in.beta);
    double t1 = 512.0 / (in.eta * in.eta * c4);
    double t2 = 1152.0 * e2b * b_fn(in.beta, in.q) / c4;
    double t3 = 48.0 * e2b * e2b * gamma_fn(in.beta, in.q) / (in.eta * in.eta);
    return std::max({t1, t2, t3}) *
           std::log(6.0 * in.p * double(in.p) * in.p / in.delta);
}

double n_necessary_predictive(const BoundInputs& in) {
    check_common(in);
    check_eta(in.eta);
    double ta = std::tanh(in.alpha);
    if (!(ta + 2.0 * in.eta < std::tanh(in.beta)))
        throw std::invalid_argument("requires tanh(alpha) + 2*eta < tanh(beta)");
    if (in.q >= 0.5) return kInf;
    double sdpi = 1.0 - std::pow(4.0 * in.q * (1.0 - in.q), in.p);
    double num = 1.0 - (ta + 2.0 * in.eta) * (ta + 2.0 * in.eta);
    return num / (16.0 * in.eta * in.eta * sdpi) * std::log(double(in.p));
}

double n_sufficient_skl(const BoundInputs& in) {
    check_common(in);
    check_delta(in.delta);
    if (!(in.eta_s > 0.0)) throw std::invalid_argument("accuracy target must be positive");
    if (in.q >= 0.5) return kInf;
    double c2 = (1.0 - 2.0 * in.q) * (1.0 - 2.0 * in.q);
    double c4 = c2 * c2;
    double pm1 = double(in.p - 1);
    return 4.0 * in.beta * in.beta * pm1 * pm1 / (c4 * in.eta_s * in.eta_s) *
           std::log(in.p * double(in.p) / in.delta);
}

double loose_n_sufficient_structure(const BoundInputs& in) {
    check_common(in);
    check_delta(in.delta);
    if (in.q >= 0.5) return kInf;
    double c2 = (1.0 - 2.0 * in.q) * (1.0 - 2.0 * in.q);
    double c4 = c2 * c2;
    double ta = std::tanh(in.alpha);
    double e2b = std::exp(2.0 * in.beta);
    double noise = (in.q == 0.0) ? 1.0 : e2b * (1.0 / c4 - std::tanh(in.beta));
    return 32.0 * (e2b / (ta * ta)) * noise * std::log(2.0 * in.p * double(in.p) / in.delta);
}

double loose_n_sufficient_predictive(const BoundInputs& in) {
    check_common(in);
    check_delta(in.delta);
    check_eta(in.eta);
    if (in.q >= 0.5) return kInf;
    double c2 = (1.0 - 2.0 * in.q) * (1.0 - 2.0 * in.q);
    double c4 = c2 * c2;
    double e2b = std::exp(2.0 * in.beta);
    double t1 = 512.0 / (in.eta * in.eta * c4);
    double mid = 1.0 + 3.0 * std::sqrt(in.q);
    double t2 = 1152.0 * mid * mid * ((in.q == 0.0) ? e2b : e2b * e2b) / c4;
    double t3 = (in.q == 0.0) ? 0.0 : 48.0 * e2b * e2b / (in.eta * in.eta);
    return std::max({t1, t2, t3}) *
           std::log(6.0 * in.p * double(in.p) * in.p / in.delta);
}

} // namespace htree
