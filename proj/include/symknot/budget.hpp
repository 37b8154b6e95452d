#pragma once

#include <atomic>
#include <cstdint>

#include "symknot/errors.hpp"

namespace symknot {

// Cooperative work budget. Long-running computations charge it at coarse
// checkpoints and abort with ResourceLimit when exhausted. A default
// constructed budget is effectively unlimited. Shared between worker
// threads, hence the atomic counter.
class Budget {
 public:
  Budget() : limit_(UINT64_MAX) {}
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t amount, const char* what) {
    if (used_.fetch_add(amount, std::memory_order_relaxed) + amount > limit_)
      raise(ErrorKind::ResourceLimit, std::string("budget exhausted in ") + what);
  }

  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace symknot
