// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/linalg.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool CoinState::is_finite() const { return finite(h) && finite(v); }

CoinState CoinState::normalized() const {
    double n = std::sqrt(norm_sq());
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite coin state");
    }
    return {h / n, v / n};
}

Complex inner(const CoinState &a, const CoinState &b) { return std::conj(a.h) * b.h + std::conj(a.v) * b.v; }

double fidelity(const CoinState &a, const CoinState &b) { return std::norm(inner(a, b)); }

Mat2 Mat2::outer(const CoinState &u, const CoinState &v) {
    return {u.h * std::conj(v.h), u.h * std::conj(v.v), u.v * std::conj(v.h), u.v * std::conj(v.v)};
}

Mat2 Mat2::from_columns(const CoinState &col_h, const CoinState &col_v) {
    return {col_h.h, col_v.h, col_h.v, col_v.v};
}

Mat2 Mat2::operator*(const Mat2 &o) const {
    const Mat2 &m = *this;
    return {
        m(0, 0) * o(0, 0) + m(0, 1) * o(1, 0),
        m(0, 0) * o(0, 1) + m(0, 1) * o(1, 1),
        m(1, 0) * o(0, 0) + m(1, 1) * o(1, 0),
        m(1, 0) * o(0, 1) + m(1, 1) * o(1, 1),
    };
}

CoinState Mat2::operator*(const CoinState &s) const {
    return {a_[0] * s.h + a_[1] * s.v, a_[2] * s.h + a_[3] * s.v};
}

Mat2 Mat2::operator+(const Mat2 &o) const {
    Mat2 r;
    for (size_t k = 0; k < 4; ++k) {
        r.a_[k] = a_[k] + o.a_[k];
    }
    return r;
}

Mat2 Mat2::operator-(const Mat2 &o) const {
    Mat2 r;
    for (size_t k = 0; k < 4; ++k) {
        r.a_[k] = a_[k] - o.a_[k];
    }
    return r;
}

Mat2 Mat2::operator*(Complex s) const {
    Mat2 r;
    for (size_t k = 0; k < 4; ++k) {
        r.a_[k] = a_[k] * s;
    }
    return r;
}

Mat2 Mat2::adjoint() const {
    return {std::conj(a_[0]), std::conj(a_[2]), std::conj(a_[1]), std::conj(a_[3])};
}

double Mat2::max_abs() const {
    double r = 0.0;
    for (const auto &z : a_) {
        r = std::max(r, std::abs(z));
    }
    return r;
}

bool Mat2::is_finite() const { return std::all_of(a_.begin(), a_.end(), finite); }

bool Mat2::is_unitary(double tol) const {
    return is_finite() && max_abs_diff(adjoint() * *this, identity()) <= tol;
}

bool Mat2::is_hermitian(double tol) const { return is_finite() && max_abs_diff(*this, adjoint()) <= tol; }

double max_abs_diff(const Mat2 &a, const Mat2 &b) { return (a - b).max_abs(); }

HermitianEigenvalues hermitian_eigenvalues(const Mat2 &m) {
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    Complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    double mean = 0.5 * (a + d);
    double radius = std::hypot(0.5 * (a - d), std::abs(off));
    return {mean - radius, mean + radius};
}

std::string to_string(const Mat2 &m, int precision) {
    std::ostringstream out;
    out << std::setprecision(precision);
    out << "[";
    for (int r = 0; r < 2; ++r) {
        out << (r == 0 ? "[" : ", [");
        for (int c = 0; c < 2; ++c) {
            Complex z = m(r, c);
            if (c) out << ", ";
            out << z.real();
            if (z.imag() != 0.0) {
                out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
            }
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace qwalk
