#pragma once

#include <cstddef>
#include <vector>

namespace symdisc {

/// Minimum-cost perfect matching on an n x n cost matrix (row-major),
/// Hungarian algorithm with potentials. Returns sigma with row i matched to
/// column sigma[i].
std::vector<int> min_cost_assignment(const std::vector<double>& cost, std::size_t n);

}  // namespace symdisc
