#pragma once

#include <functional>
#include <vector>

#include "g2/rational.hpp"

namespace g2 {

/// Runs the tasks on up to `threads` workers and returns the results in task
/// order. The first failing task (by index) has its exception rethrown.
std::vector<Rational> run_all(const std::vector<std::function<Rational()>>& tasks, int threads);

}  // namespace g2
