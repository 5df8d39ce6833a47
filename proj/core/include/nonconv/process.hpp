#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nonconv/error.hpp"

namespace nonconv {

enum class ModelKind { FiniteMarkov, IID, DyadicMap };

// Bounded-variation observable on [0,1] for the doubling map x -> 2x mod 1.
struct DyadicObservable {
  enum class Kind { Identity, Centered, Indicator, Cos2Pi };
  Kind kind = Kind::Centered;
  double a = 0.0;  // Indicator of [a, b)
  double b = 0.5;

  double operator()(double x) const;
  double min_value() const;
  double max_value() const;
  std::string name() const;
};

// Solves pi P = pi for an irreducible aperiodic row-stochastic P.
// Residual ||pi P - pi||_inf <= 1e-12 guaranteed on return.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& P);

// Stationary process X(n), n >= 1, with X(n) ~ mu for every n and the law of
// (X(n), X(n+m)) depending on m only. Finite-alphabet models carry an
// observable table mapping symbols to points in R^dim; the dyadic map has a
// real-valued observable and Lebesgue invariant law.
class ProcessModel {
 public:
  static ProcessModel finite_markov(Eigen::MatrixXd P,
                                    std::vector<double> observable,
                                    std::uint32_t dim = 1);
  static ProcessModel iid(Eigen::VectorXd probs,
                          std::vector<double> observable,
                          std::uint32_t dim = 1);
  static ProcessModel bernoulli(double p);
  static ProcessModel dyadic(DyadicObservable obs);

  ModelKind kind() const { return kind_; }
  bool finite_alphabet() const { return kind_ != ModelKind::DyadicMap; }
  std::uint32_t alphabet_size() const { return s_; }
  std::uint32_t dim() const { return dim_; }

  const Eigen::VectorXd& pi() const { return pi_; }       // marginal law mu
  const Eigen::MatrixXd& transition() const { return P_; }  // FiniteMarkov
  const DyadicObservable& dyadic_observable() const { return dyadic_obs_; }

  // observable value of a symbol, dim doubles
  std::span<const double> observable(std::uint32_t symbol) const {
    return {obs_.data() + static_cast<std::size_t>(symbol) * dim_, dim_};
  }
  const std::vector<double>& observable_table() const { return obs_; }

  std::string describe() const;  // short id string for provenance records

 private:
  ProcessModel() = default;

  ModelKind kind_ = ModelKind::IID;
  std::uint32_t s_ = 0;
  std::uint32_t dim_ = 1;
  Eigen::MatrixXd P_;
  Eigen::VectorXd pi_;
  std::vector<double> obs_;  // s x dim, row-major
  DyadicObservable dyadic_obs_;
};

// Time-indexed sample path X(1..L). Finite models store symbols plus a copy
// of the observable table, so a trajectory is self-contained.
struct Trajectory {
  ModelKind kind = ModelKind::IID;
  std::uint32_t dim = 1;
  std::uint64_t seed = 0;
  std::string model_id;
  std::vector<std::uint32_t> symbols;  // finite alphabet models
  std::vector<double> reals;           // dyadic map observable values (dim 1)
  std::vector<double> obs_table;       // copy of model observable table

  std::size_t length() const {
    return kind == ModelKind::DyadicMap ? reals.size() : symbols.size();
  }
  std::uint32_t symbol(std::size_t n) const { return symbols[n - 1]; }
  // observable value X(n), 1-based
  std::span<const double> value(std::size_t n) const {
    if (kind == ModelKind::DyadicMap) return {reals.data() + (n - 1), 1};
    return {obs_table.data() + static_cast<std::size_t>(symbols[n - 1]) * dim,
            dim};
  }
};

// Deterministic for fixed (model, length, seed). Finite chains start from pi,
// so every X(n) has marginal mu with no burn-in.
Trajectory sample_trajectory(const ProcessModel& model, std::size_t length,
                             std::uint64_t seed);

// Joint law of (X(n), X(n+m)): first coordinate is the earlier time.
// For finite models cells are alphabet symbols; for the dyadic map they are
// histogram bins with representative values in `support`.
struct PairLaw {
  enum class Provenance { Exact, Empirical };

  std::int64_t lag = 0;
  Provenance provenance = Provenance::Exact;
  Eigen::MatrixXd joint;        // joint(a, b) = P(X(n) = a, X(n+m) = b)
  std::vector<double> support;  // cell observable values, dim-strided
  std::uint32_t dim = 1;

  Eigen::VectorXd left_marginal() const { return joint.rowwise().sum(); }
  Eigen::VectorXd right_marginal() const { return joint.colwise().sum(); }
  double total_mass() const { return joint.sum(); }
};

// Exact pair law; FiniteMarkov uses pi diag * P^m, IID the product law for
// m >= 1. m = 0 is the diagonal coupling for every model. DyadicMap has no
// closed form here (use empirical_pair_law).
PairLaw pair_law(const ProcessModel& model, std::int64_t m);

// Histogram estimate of the law of (X(n), X(n+m)) from one stationary
// trajectory of `sample_count` pairs.
PairLaw empirical_pair_law(const ProcessModel& model, std::int64_t m,
                           std::size_t sample_count, std::uint64_t seed);

// max-norm total variation distance between two pair laws on the same grid
double total_variation(const PairLaw& x, const PairLaw& y);

}  // namespace nonconv
