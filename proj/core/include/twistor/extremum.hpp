#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "twistor/acs.hpp"
#include "twistor/error.hpp"

namespace twistor {

enum class Direction { Maximize, Minimize };

/// One accepted step of a search, as seen by SearchOptions::on_accept.
struct Iterate {
  int restart = 0;
  int iteration = 0;
  Mat6 structure;  // Q J_ref Q^T after the step
  Real value = 0.0;  // Nijenhuis norm after the step
  Real previous_value = 0.0;
};

struct SearchOptions {
  int max_iters = 2000;
  Real fd_step = 1e-6;
  Real initial_step = 0.1;
  Real max_step = 1.0;
  Real min_step = 1e-10;
  Real gradient_tol = 1e-8;
  /// Run restarts on separate threads. Ignored when on_accept is set.
  bool parallel = true;
  std::function<void(const Iterate&)> on_accept;
};

struct SearchReport {
  Real best_value = 0.0;
  ACS best_acs;
  int iterations = 0;  // of the restart that produced best_acs
  int restarts = 0;
  bool converged = false;
};

/// Raised when no restart met a stopping criterion within max_iters; the
/// best structure found so far is attached.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(SearchReport partial)
      : Error(ErrorKind::NoConvergence, "no restart converged"), partial_(std::move(partial)) {}
  const SearchReport& partial() const { return partial_; }

 private:
  SearchReport partial_;
};

/// Ascent (or descent) of the Nijenhuis norm over Z, parametrised as
/// J = Q J_ref Q^T with Q in SO(6) and J_ref = I0. Each restart starts from a
/// Haar-random Q drawn from (seed, restart index) and moves Q by exp of a
/// skew matrix along the central-difference gradient of |N|^2.
SearchReport maximize(std::uint64_t seed, int restarts, const SearchOptions& opts = {});
SearchReport minimize(std::uint64_t seed, int restarts, const SearchOptions& opts = {});

/// Single run from a given structure (Q = 1, J_ref = start).
SearchReport search_from(const ACS& start, Direction dir, const SearchOptions& opts = {});

}  // namespace twistor
