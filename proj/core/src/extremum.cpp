#include "twistor/extremum.hpp"

#include <cmath>
#include <future>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "twistor/nijenhuis.hpp"
#include "twistor/random.hpp"

namespace twistor {

namespace {

constexpr int kParams = 15;

// Generator k of so(6) is E_ij - E_ji for the k-th pair i < j.
Mat6 skew_from_params(const Eigen::Matrix<Real, kParams, 1>& h) {
  Mat6 k = Mat6::Zero();
  for (int p = 0; p < kParams; ++p) {
    const auto [i, j] = index_pair(p);
    k(i, j) = h(p);
    k(j, i) = -h(p);
  }
  return k;
}

// Right multiplication by exp(t (E_ij - E_ji)), a plane rotation.
Mat6 rotate_plane(const Mat6& q, int i, int j, Real t) {
  Mat6 out = q;
  const Real c = std::cos(t), s = std::sin(t);
  out.col(i) = c * q.col(i) - s * q.col(j);
  out.col(j) = s * q.col(i) + c * q.col(j);
  return out;
}

Mat6 reorthonormalize(const Mat6& q) {
  Eigen::JacobiSVD<Mat6> svd(q, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

struct Run {
  Mat6 structure;
  Real objective = 0.0;  // |N|^2
  int iterations = 0;
  bool converged = false;
};

class Objective {
 public:
  Objective(const Mat6& reference, Real sign) : ref_(reference), sign_(sign) {}

  Mat6 structure(const Mat6& q) const { return q * ref_ * q.transpose(); }

  // Signed so that the search always increases it.
  Real operator()(const Mat6& q) const {
    return sign_ * nijenhuis_norm_squared(ACS::validate(structure(q)));
  }

 private:
  Mat6 ref_;
  Real sign_;
};

Run run_search(const Objective& f, Mat6 q, int restart, const SearchOptions& opts) {
  Real value = f(q);
  Real step = opts.initial_step;
  Run run;
  run.iterations = 0;
  for (; run.iterations < opts.max_iters; ++run.iterations) {
    Eigen::Matrix<Real, kParams, 1> grad;
    for (int p = 0; p < kParams; ++p) {
      const auto [i, j] = index_pair(p);
      grad(p) = (f(rotate_plane(q, i, j, opts.fd_step)) - f(rotate_plane(q, i, j, -opts.fd_step))) /
                (2.0 * opts.fd_step);
    }
    if (grad.norm() < opts.gradient_tol) {
      run.converged = true;
      break;
    }

    const Mat6 trial = reorthonormalize(q * Mat6(skew_from_params(step * grad).exp()));
    const Real trial_value = f(trial);
    if (trial_value > value) {
      if (opts.on_accept) {
        opts.on_accept(Iterate{restart, run.iterations, f.structure(trial), std::sqrt(std::abs(trial_value)),
                               std::sqrt(std::abs(value))});
      }
      q = trial;
      value = trial_value;
      step = std::min(2.0 * step, opts.max_step);
    } else {
      step *= 0.5;
      if (step < opts.min_step) {
        run.converged = true;
        break;
      }
    }
  }
  run.structure = f.structure(q);
  run.objective = std::abs(value);
  return run;
}

SearchReport collect(const std::vector<Run>& runs, Direction dir) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    const bool better = dir == Direction::Maximize ? runs[r].objective > runs[best].objective
                                                   : runs[r].objective < runs[best].objective;
    if (better) best = r;
  }
  bool any = false;
  for (const auto& r : runs) any = any || r.converged;
  SearchReport report{std::sqrt(runs[best].objective), ACS::validate(runs[best].structure), runs[best].iterations,
                      static_cast<int>(runs.size()), any};
  if (!any) throw NoConvergenceError(report);
  return report;
}

SearchReport search(std::uint64_t seed, int restarts, Direction dir, const SearchOptions& opts) {
  if (restarts < 1) throw Error(ErrorKind::DomainError, "restarts must be positive");
  const Objective f(vertex_structure(0).matrix(), dir == Direction::Maximize ? 1.0 : -1.0);
  auto one = [&](int r) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(r));
    return run_search(f, random_rotation<6>(rng), r, opts);
  };

  std::vector<Run> runs;
  runs.reserve(restarts);
  if (opts.parallel && !opts.on_accept && restarts > 1) {
    std::vector<std::future<Run>> jobs;
    for (int r = 0; r < restarts; ++r) jobs.push_back(std::async(std::launch::async, one, r));
    for (auto& j : jobs) runs.push_back(j.get());
  } else {
    for (int r = 0; r < restarts; ++r) runs.push_back(one(r));
  }
  return collect(runs, dir);
}

}  // namespace

SearchReport maximize(std::uint64_t seed, int restarts, const SearchOptions& opts) {
  return search(seed, restarts, Direction::Maximize, opts);
}

SearchReport minimize(std::uint64_t seed, int restarts, const SearchOptions& opts) {
  return search(seed, restarts, Direction::Minimize, opts);
}

SearchReport search_from(const ACS& start, Direction dir, const SearchOptions& opts) {
  const Objective f(start.matrix(), dir == Direction::Maximize ? 1.0 : -1.0);
  return collect({run_search(f, Mat6::Identity(), 0, opts)}, dir);
}

}  // namespace twistor
