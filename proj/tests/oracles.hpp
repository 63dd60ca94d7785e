#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracles {

/// Dense (k+1)-dimensional model of the rank-1 algebra in an orthonormal
/// basis u_0..u_k:  f u_j = sqrt((j+1)(k-j)) u_{j+1},  e = f^T,
/// h u_j = (k-2j) u_j.  Everything is plain numeric linear algebra.
struct Sl2Model {
    int k;
    explicit Sl2Model(int k_) : k(k_) {}

    std::vector<double> highest() const {
        std::vector<double> v(static_cast<std::size_t>(k + 1), 0.0);
        v[0] = 1.0;
        return v;
    }
    std::vector<double> apply_f(const std::vector<double>& v) const {
        std::vector<double> w(v.size(), 0.0);
        for (int j = 0; j < k; ++j)
            w[static_cast<std::size_t>(j + 1)] =
                std::sqrt(static_cast<double>((j + 1) * (k - j))) * v[static_cast<std::size_t>(j)];
        return w;
    }
    std::vector<double> apply_e(const std::vector<double>& v) const {
        std::vector<double> w(v.size(), 0.0);
        for (int j = 1; j <= k; ++j)
            w[static_cast<std::size_t>(j - 1)] =
                std::sqrt(static_cast<double>(j * (k - j + 1))) * v[static_cast<std::size_t>(j)];
        return w;
    }
    static double dot(const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    /// <f^a v, f^b v> for the unit highest weight vector.
    double inner_ff(int a, int b) const {
        auto va = highest();
        for (int i = 0; i < a; ++i) va = apply_f(va);
        auto vb = highest();
        for (int i = 0; i < b; ++i) vb = apply_f(vb);
        return dot(va, vb);
    }

    /// ||(f^2 v)^nu||^2 after removing the components along v and f v.
    double sff_diag_norm_sq() const {
        auto w = highest();
        w = apply_f(apply_f(w));
        auto t0 = highest();
        auto t1 = apply_f(highest());
        for (auto* t : {&t0, &t1}) {
            double tt = dot(*t, *t);
            if (tt == 0.0) continue;
            double c = dot(w, *t) / tt;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * (*t)[i];
        }
        return dot(w, w);
    }
};

/// Strictly upper triangular matrix a_{ij} = r_{theta_i - theta_j} used by
/// the A-family bookkeeping identities.
struct UpperMatrix {
    int n; // matrix is n x n
    std::vector<double> a;
    explicit UpperMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_ * n_), 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

    double norm_sq() const {
        double s = 0.0;
        for (double v : a) s += v * v;
        return s;
    }
    UpperMatrix square() const {
        UpperMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k) s += at(i, k) * at(k, j);
                m.at(i, j) = s;
            }
        return m;
    }

    /// 8 * sum_{i<j<k<l} a_ik a_jl a_il a_jk
    double phi1_sum() const {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l)
                        s += at(i, k) * at(j, l) * at(i, l) * at(j, k);
        return 8.0 * s;
    }
};

} // namespace oracles
