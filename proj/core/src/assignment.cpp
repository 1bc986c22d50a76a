#include "symdisc/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace symdisc {

std::vector<int> min_cost_assignment(const std::vector<double>& cost, std::size_t n) {
    if (cost.size() != n * n) throw std::invalid_argument("cost matrix size mismatch");
    const double inf = std::numeric_limits<double>::infinity();
    // 1-based potentials; p[j] = row matched to column j
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = int(i);
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0];
            std::size_t j1 = 0;
            double delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = int(j0);
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> sigma(n, -1);
    for (std::size_t j = 1; j <= n; ++j) {
        if (p[j] != 0) sigma[p[j] - 1] = int(j - 1);
    }
    return sigma;
}

}  // namespace symdisc
