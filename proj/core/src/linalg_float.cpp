#include "exc/linalg_float.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace exc {

MatD inverse(const MatD& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
    const std::size_t n = m.rows();
    MatD a = m;
    MatD inv = MatD::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::fabs(a(i, c)) > std::fabs(a(piv, c))) piv = i;
        if (std::fabs(a(piv, c)) < 1e-14) throw std::domain_error("inverse: singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        double d = 1.0 / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= d;
            inv(c, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0.0) continue;
            double f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

MatD matrix_exp(const MatD& t, double tol, bool check) {
    if (t.rows() != t.cols()) throw std::domain_error("matrix_exp: not square");
    const std::size_t n = t.rows();

    double norm = inf_norm(t);
    int s = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++s;
    }
    MatD a = t;
    if (s > 0) {
        double scale = std::ldexp(1.0, -s);
        for (auto& x : a.data()) x *= scale;
    }

    const int max_order = 40;
    MatD sum = MatD::identity(n);
    MatD term = MatD::identity(n);
    bool converged = false;
    for (int k = 1; k <= max_order; ++k) {
        term = term * a;
        double inv_k = 1.0 / k;
        for (auto& x : term.data()) x *= inv_k;
        sum += term;
        if (inf_norm(term) < tol * 0x1.0p-8) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        std::ostringstream os;
        os << "matrix_exp: series did not converge at order " << max_order
           << " (scaled norm " << inf_norm(a) << ", n = " << n << ", tol = " << tol << ")";
        throw std::runtime_error(os.str());
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;

    if (check) {
        MatD neg = t;
        for (auto& x : neg.data()) x = -x;
        MatD back = matrix_exp(neg, tol, false);
        double resid = inf_norm(sum * back - MatD::identity(n));
        if (resid > tol) {
            std::ostringstream os;
            os << "matrix_exp: inverse check failed, ||exp(T)exp(-T) - id|| = " << resid
               << " > tol = " << tol;
            throw std::runtime_error(os.str());
        }
    }
    return sum;
}

double rel_residual(const MatD& a, const MatD& b) {
    return inf_norm(a - b) / std::max(1.0, inf_norm(b));
}

}  // namespace exc
