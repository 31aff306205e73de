#pragma once
#include <stdexcept>
#include <string>

namespace kpde {

// bad user-facing configuration (unknown key, invalid preset, inconsistent options)
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// bad argument to a library routine (non-positive rate, grid too small, ...)
struct param_error : std::runtime_error {
  explicit param_error(const std::string& msg) : std::runtime_error(msg) {}
};

// the time integration produced a non-finite or absurdly large state
struct blow_up_error : std::runtime_error {
  long step;   // completed steps before the failure (-1 if unknown)
  int stage;   // RK stage that produced the bad tendency (0 = post-step check)
  double t;    // simulation time at the start of the failing step
  blow_up_error(const std::string& msg, long step_ = -1, int stage_ = 0, double t_ = 0.0)
      : std::runtime_error(msg), step(step_), stage(stage_), t(t_) {}
};

}  // namespace kpde
