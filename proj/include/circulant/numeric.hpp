#pragma once

// Floating-point helpers for spectral summaries: power iteration for the
// Perron eigenvalue and Durand-Kerner for full root sets. Everything here is
// advisory; exact claims are made with the integer machinery.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"
#include "circulant/matrix.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

struct PowerIterationResult {
    double value = 0;
    std::vector<double> vec; // scaled to max entry 1
    size_t iterations = 0;
    bool converged = false;
};

// Dominant eigenvalue of a nonnegative matrix from the all-ones start.
inline PowerIterationResult power_iteration(const std::vector<std::vector<double>>& a,
                                            double tol = 1e-12, size_t max_iterations = 50000) {
    size_t n = a.size();
    if (n == 0) throw ConfigError("power_iteration: empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw ConfigError("power_iteration: not square");

    PowerIterationResult res;
    std::vector<double> x(n, 1.0), y(n);
    double lambda = 0;
    for (size_t it = 1; it <= max_iterations; ++it) {
        double norm = 0;
        for (size_t i = 0; i < n; ++i) {
            double acc = 0;
            for (size_t j = 0; j < n; ++j) acc += a[i][j] * x[j];
            y[i] = acc;
            if (std::abs(acc) > norm) norm = std::abs(acc);
        }
        if (norm == 0) {
            res.value = 0;
            res.vec = y;
            res.iterations = it;
            res.converged = true;
            return res;
        }
        double delta = 0;
        for (size_t i = 0; i < n; ++i) {
            y[i] /= norm;
            delta = std::max(delta, std::abs(y[i] - x[i]));
        }
        bool value_settled = std::abs(norm - lambda) <= tol * std::max(1.0, std::abs(norm));
        lambda = norm;
        x = y;
        if (value_settled && delta <= tol) {
            res.value = lambda;
            res.vec = x;
            res.iterations = it;
            res.converged = true;
            return res;
        }
    }
    res.value = lambda;
    res.vec = x;
    res.iterations = max_iterations;
    res.converged = false;
    return res;
}

inline std::vector<std::vector<double>> matrix_to_double(const IntMatrix& m) {
    std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).get_d();
    return out;
}

struct RootSet {
    std::vector<std::complex<double>> roots;
    size_t iterations = 0;
    bool converged = false;
};

// Simultaneous iteration on all roots of a monic polynomial given by
// ascending coefficients (last entry 1). Deterministic start, so repeated
// runs agree bit for bit.
inline RootSet durand_kerner(const std::vector<double>& monic, double tol = 1e-13, size_t max_iterations = 1000) {
    if (monic.empty() || monic.back() != 1.0)
        throw ConfigError("durand_kerner: expected monic ascending coefficients");
    size_t deg = monic.size() - 1;
    RootSet res;
    if (deg == 0) {
        res.converged = true;
        return res;
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (size_t i = monic.size(); i-- > 0;) acc = acc * z + monic[i];
        return acc;
    };
    std::vector<std::complex<double>> w(deg);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> p = 1;
    for (size_t i = 0; i < deg; ++i) {
        p *= seed;
        w[i] = p;
    }
    for (size_t it = 1; it <= max_iterations; ++it) {
        double move = 0;
        for (size_t i = 0; i < deg; ++i) {
            std::complex<double> denom = 1;
            for (size_t j = 0; j < deg; ++j)
                if (j != i) denom *= w[i] - w[j];
            std::complex<double> delta = eval(w[i]) / denom;
            w[i] -= delta;
            move = std::max(move, std::abs(delta) / std::max(1.0, std::abs(w[i])));
        }
        if (move < tol) {
            res.roots = w;
            res.iterations = it;
            res.converged = true;
            std::sort(res.roots.begin(), res.roots.end(), [](auto a, auto b) {
                if (a.real() != b.real()) return a.real() > b.real();
                return a.imag() > b.imag();
            });
            return res;
        }
    }
    res.roots = w;
    res.iterations = max_iterations;
    res.converged = false;
    std::sort(res.roots.begin(), res.roots.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return res;
}

// Ascending double coefficients of p scaled monic; p must be nonzero.
inline std::vector<double> monic_double_coefficients(const IntPoly& p) {
    if (p.is_zero()) throw ConfigError("monic_double_coefficients: zero polynomial");
    double lead = p.lead().get_d();
    std::vector<double> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i].get_d() / lead;
    out.back() = 1.0;
    return out;
}

} // namespace circulant
