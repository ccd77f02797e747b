/*
   Copyright 2026 The gaglrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GAGLRC_MATRIX_HPP
#define GAGLRC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "finite_field.hpp"

namespace gaglrc {

/// Row-major dense matrix of symbols over a Field.
class Matrix {
   public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(Field f, const std::vector<std::vector<Symbol>>& rows) : field_(std::move(f)), rows_(rows.size()) {
        cols_ = rows.empty() ? 0 : rows.front().size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
            for (Symbol s : r) {
                if (s >= field_.order()) throw std::invalid_argument("matrix entry out of range");
                data_.push_back(s);
            }
        }
    }

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Symbol& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    Symbol operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const Symbol> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<Symbol> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::vector<Symbol> column(std::size_t j) const {
        std::vector<Symbol> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix columns(std::span<const std::size_t> idx) const {
        Matrix out(field_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
        return out;
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.field_ != b.field_) throw std::invalid_argument("matrices over different fields");
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        const Field& f = a.field_;
        Matrix c(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Symbol s = a(i, l);
                if (s == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(s, b(l, j)));
            }
        return c;
    }

    /// Row vector times matrix.
    std::vector<Symbol> left_multiply(std::span<const Symbol> v) const {
        if (v.size() != rows_) throw std::invalid_argument("vector length does not match matrix rows");
        std::vector<Symbol> out(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) out[j] = field_.add(out[j], field_.mul(v[i], (*this)(i, j)));
        }
        return out;
    }

    /// Reduced row echelon form in place; returns the pivot column of each nonzero row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
            const Symbol inv = field_.inv((*this)(r, c));
            for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const Symbol factor = (*this)(i, c);
                if (factor == 0) continue;
                for (std::size_t j = 0; j < cols_; ++j)
                    (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(factor, (*this)(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix t = *this;
        return t.rref().size();
    }

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

/// Solves x * A = b for square invertible A; nullopt when A is singular.
inline std::optional<std::vector<Symbol>> solve_left(const Matrix& a, std::span<const Symbol> b) {
    if (a.rows() != a.cols() || b.size() != a.cols()) throw std::invalid_argument("solve_left needs a square system");
    const std::size_t k = a.rows();
    // Augmented [A^T | b^T]
    Matrix aug(a.field(), k, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(j, i);
        aug(i, k) = b[i];
    }
    const auto piv = aug.rref();
    if (piv.size() < k || piv.back() >= k) return std::nullopt;
    std::vector<Symbol> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = aug(i, k);
    return x;
}

/// Matrix file format: "q rows cols" header, then one line per row of space-separated renderings.
inline std::string format_matrix(const Matrix& m) {
    std::ostringstream os;
    os << m.field().order() << ' ' << m.cols() << ' ' << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.field().render(m(i, j));
        }
        os << '\n';
    }
    return os.str();
}

/// Inverse of format_matrix.
inline Matrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    std::uint64_t q = 0;
    std::size_t n = 0, k = 0;
    if (!(is >> q >> n >> k)) throw std::invalid_argument("matrix header must be 'q n k'");
    const Field f = Field::of_order(q);
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("matrix body is truncated");
            m(i, j) = f.parse(tok);
        }
    std::string extra;
    if (is >> extra) throw std::invalid_argument("trailing data after matrix body");
    return m;
}

}  // namespace gaglrc

#endif  // GAGLRC_MATRIX_HPP
