#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hqc {

// Exact complex rational a + b*i.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational inverse() const {
        mpq_class n2 = re * re + im * im;
        return {re / n2, -im / n2};
    }

    bool operator==(const GaussianRational&) const = default;
};

// i^k for k mod 4.
inline GaussianRational gaussian_unit(unsigned k) {
    switch (k & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

inline std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return g.re.get_str();
    if (g.re == 0) return g.im.get_str() + "i";
    return g.re.get_str() + (g.im > 0 ? "+" : "") + g.im.get_str() + "i";
}

class GaussianRationalMatrix {
  public:
    GaussianRationalMatrix() = default;
    GaussianRationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static GaussianRationalMatrix identity(std::size_t n) {
        GaussianRationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    GaussianRational trace() const {
        GaussianRational t;
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    GaussianRationalMatrix conj_transpose() const {
        GaussianRationalMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
        return m;
    }

    GaussianRationalMatrix& operator+=(const GaussianRationalMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    GaussianRationalMatrix& operator-=(const GaussianRationalMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend GaussianRationalMatrix operator+(GaussianRationalMatrix a, const GaussianRationalMatrix& b) {
        return a += b;
    }
    friend GaussianRationalMatrix operator-(GaussianRationalMatrix a, const GaussianRationalMatrix& b) {
        return a -= b;
    }

    GaussianRationalMatrix& scale(const GaussianRational& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend GaussianRationalMatrix operator*(const GaussianRationalMatrix& a,
                                            const GaussianRationalMatrix& b) {
        GaussianRationalMatrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const GaussianRational& v = a.at(r, k);
                if (v.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, c) += v * b.at(k, c);
            }
        return m;
    }

    std::size_t rank() const {
        GaussianRationalMatrix m = *this;
        std::size_t rk = 0;
        for (std::size_t col = 0; col < m.cols_ && rk < m.rows_; ++col) {
            std::size_t sel = rk;
            while (sel < m.rows_ && m.at(sel, col).is_zero()) ++sel;
            if (sel == m.rows_) continue;
            for (std::size_t c = 0; c < m.cols_; ++c) std::swap(m.at(rk, c), m.at(sel, c));
            GaussianRational inv = m.at(rk, col).inverse();
            for (std::size_t c = col; c < m.cols_; ++c) m.at(rk, c) *= inv;
            for (std::size_t r = 0; r < m.rows_; ++r) {
                if (r == rk || m.at(r, col).is_zero()) continue;
                GaussianRational f = m.at(r, col);
                for (std::size_t c = col; c < m.cols_; ++c) m.at(r, c) -= f * m.at(rk, c);
            }
            ++rk;
        }
        return rk;
    }

    bool operator==(const GaussianRationalMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> a_;
};

}  // namespace hqc
