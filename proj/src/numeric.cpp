#include "mink/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mink/errors.hpp"

namespace mink::num {

namespace {

void require_grid(const std::vector<double>& s, const std::vector<double>& f,
                  const char* who) {
    if (s.size() != f.size()) {
        throw mink::InputError(std::string(who) +
                               ": grid and values differ in length");
    }
    if (s.size() < 2) {
        throw mink::InputError(std::string(who) +
                               ": need at least two samples");
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i] > s[i - 1])) {
            throw mink::InputError(std::string(who) +
                                   ": grid must be strictly increasing");
        }
    }
}

} // namespace

std::vector<double> make_grid(double a, double b, double step) {
    if (!(b > a)) throw mink::InputError("make_grid: need b > a");
    if (!(step > 0.0)) throw mink::InputError("make_grid: need step > 0");
    const long long n = std::max(2LL, std::llround((b - a) / step) + 1);
    std::vector<double> s(static_cast<std::size_t>(n));
    const double h = (b - a) / static_cast<double>(n - 1);
    for (long long i = 0; i < n; ++i) {
        s[static_cast<std::size_t>(i)] = a + h * static_cast<double>(i);
    }
    s.back() = b;
    return s;
}

std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int deriv_order) {
    const int n = static_cast<int>(nodes.size());
    const int m = deriv_order;
    if (n < m + 1) {
        throw mink::InputError("fd_weights: need at least order+1 nodes");
    }
    // Recursive construction of interpolation-derivative weights that is
    // stable for arbitrary node placement.
    std::vector<std::vector<double>> c(
        static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[static_cast<std::size_t>(i)] -
                              nodes[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                        c1 *
                        (k * c[static_cast<std::size_t>(i - 1)]
                              [static_cast<std::size_t>(k - 1)] -
                         c5 * c[static_cast<std::size_t>(i - 1)]
                               [static_cast<std::size_t>(k)]) /
                        c2;
                }
                c[static_cast<std::size_t>(i)][0] =
                    -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    (c4 * c[static_cast<std::size_t>(j)]
                            [static_cast<std::size_t>(k)] -
                     k * c[static_cast<std::size_t>(j)]
                          [static_cast<std::size_t>(k - 1)]) /
                    c3;
            }
            c[static_cast<std::size_t>(j)][0] =
                c4 * c[static_cast<std::size_t>(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        w[static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
    }
    return w;
}

std::vector<double> derivative(const std::vector<double>& s,
                               const std::vector<double>& f, int order,
                               std::size_t width) {
    require_grid(s, f, "derivative");
    if (order != 1 && order != 2) {
        throw mink::InputError("derivative: order must be 1 or 2");
    }
    const std::size_t n = s.size();
    width = std::min(n, width);
    if (width < static_cast<std::size_t>(order) + 1) {
        throw mink::InputError("derivative: too few samples for this order");
    }
    std::vector<double> out(n, 0.0);
    std::vector<double> nodes(width);
    const std::size_t half = (width - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo =
            std::min(n - width, i >= half ? i - half : static_cast<std::size_t>(0));
        for (std::size_t j = 0; j < width; ++j) nodes[j] = s[lo + j];
        const std::vector<double> w = fd_weights(s[i], nodes, order);
        double acc = 0.0;
        for (std::size_t j = 0; j < width; ++j) acc += w[j] * f[lo + j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> cumulative_integral(const std::vector<double>& s,
                                        const std::vector<double>& f) {
    require_grid(s, f, "cumulative_integral");
    const std::size_t n = s.size();
    const std::size_t width = std::min<std::size_t>(n, 4);
    std::vector<double> F(n, 0.0);
    // Two-point Gauss abscissae on [0, 1].
    const double g1 = 0.5 - 0.5 / std::sqrt(3.0);
    const double g2 = 0.5 + 0.5 / std::sqrt(3.0);
    std::vector<double> nodes(width);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t lo =
            std::min(n - width, i >= 1 ? i - 1 : static_cast<std::size_t>(0));
        for (std::size_t j = 0; j < width; ++j) nodes[j] = s[lo + j];
        const double a = s[i];
        const double b = s[i + 1];
        const double xs[2] = {a + (b - a) * g1, a + (b - a) * g2};
        double quad = 0.0;
        for (const double x : xs) {
            // Lagrange interpolant through the stencil, evaluated at x.
            double px = 0.0;
            for (std::size_t j = 0; j < width; ++j) {
                double lj = 1.0;
                for (std::size_t k = 0; k < width; ++k) {
                    if (k == j) continue;
                    lj *= (x - nodes[k]) / (nodes[j] - nodes[k]);
                }
                px += lj * f[lo + j];
            }
            quad += px;
        }
        F[i + 1] = F[i] + 0.5 * (b - a) * quad;
    }
    return F;
}

Constancy constancy(const std::vector<double>& f, double rel_tol) {
    if (f.empty()) throw mink::InputError("constancy: empty sample set");
    std::vector<double> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median =
        (n % 2 == 1) ? sorted[n / 2]
                     : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double spread = sorted.back() - sorted.front();
    Constancy result;
    result.value = median;
    result.residual = spread / (1.0 + std::fabs(median));
    result.constant = result.residual <= rel_tol;
    return result;
}

} // namespace mink::num
