#pragma once

// Dense matrices over a scalar backend plus the labeled operator wrapper.
// Operators act on coordinate column vectors; the basis-order label must
// match between operands of any binary operation.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exc/scalars.hpp"

namespace exc {

template <class S>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    const std::vector<S>& data() const { return a_; }
    std::vector<S>& data() { return a_; }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    Mat operator-() const {
        Mat m(r_, c_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }
    friend Mat operator*(const S& s, Mat m) {
        for (auto& x : m.a_) x *= s;
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    // zero-skip multiply; operator matrices here are often very sparse
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw std::logic_error("Mat: shape mismatch in product");
        Mat c(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i) {
            for (std::size_t k = 0; k < a.c_; ++k) {
                const S& aik = a(i, k);
                if (is_zero(aik)) continue;
                const S* brow = &b.a_[k * b.c_];
                S* crow = &c.a_[i * b.c_];
                for (std::size_t j = 0; j < b.c_; ++j) {
                    if (!is_zero(brow[j])) crow[j] += aik * brow[j];
                }
            }
        }
        return c;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != c_) throw std::logic_error("Mat: vector length mismatch");
        std::vector<S> w(r_, S(0));
        for (std::size_t i = 0; i < r_; ++i) {
            S acc = S(0);
            const S* row = &a_[i * c_];
            for (std::size_t j = 0; j < c_; ++j)
                if (!is_zero(row[j])) acc += row[j] * v[j];
            w[i] = std::move(acc);
        }
        return w;
    }

    Mat transposed() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::logic_error("Mat: shape mismatch");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

using MatQ = Mat<Rat>;
using MatD = Mat<double>;

inline MatD to_float(const MatQ& m) {
    MatD f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = to_double(m(i, j));
    return f;
}

inline double max_abs(const MatD& m) {
    double v = 0.0;
    for (double x : m.data()) v = std::max(v, std::fabs(x));
    return v;
}

inline Rat max_abs(const MatQ& m) {
    Rat v(0);
    for (const Rat& x : m.data())
        if (cmp(abs(x), v) > 0) v = abs(x);
    return v;
}

// max row-sum norm
inline double inf_norm(const MatD& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::fabs(m(i, j));
        v = std::max(v, s);
    }
    return v;
}

// build a matrix from its action on the standard basis (columns = images)
template <class S>
Mat<S> mat_from_action(std::size_t n, const std::function<std::vector<S>(std::size_t)>& image_of_basis) {
    Mat<S> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<S> col = image_of_basis(j);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = std::move(col[i]);
    }
    return m;
}

// ------------------------------------------------------------- labeled ops

enum class Basis { J27, JC54, PC112, Generic };

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::J27: return "J27";
        case Basis::JC54: return "JC54";
        case Basis::PC112: return "PC112";
        default: return "generic";
    }
}

inline std::size_t basis_dim(Basis b) {
    switch (b) {
        case Basis::J27: return 27;
        case Basis::JC54: return 54;
        case Basis::PC112: return 112;
        default: return 0;
    }
}

template <class S>
struct Op {
    Mat<S> mat;
    Basis basis = Basis::Generic;

    Op() = default;
    Op(Mat<S> m, Basis b) : mat(std::move(m)), basis(b) {}

    static Op identity(Basis b) { return Op(Mat<S>::identity(basis_dim(b)), b); }

    friend Op operator*(const Op& a, const Op& b) {
        if (a.basis != b.basis) throw std::logic_error("Op: basis-order label mismatch");
        return Op(a.mat * b.mat, a.basis);
    }
    friend Op operator+(const Op& a, const Op& b) {
        if (a.basis != b.basis) throw std::logic_error("Op: basis-order label mismatch");
        return Op(a.mat + b.mat, a.basis);
    }
    friend Op operator-(const Op& a, const Op& b) {
        if (a.basis != b.basis) throw std::logic_error("Op: basis-order label mismatch");
        return Op(a.mat - b.mat, a.basis);
    }
};

using OpQ = Op<Rat>;
using OpD = Op<double>;

inline OpD to_float(const OpQ& op) { return OpD(to_float(op.mat), op.basis); }

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
    return a * b - b * a;
}

}  // namespace exc
