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

#ifndef QWALK_LINALG_H
#define QWALK_LINALG_H

#include <array>
#include <complex>
#include <string>

namespace qwalk {

using Complex = std::complex<double>;

/// Equality tolerance for amplitudes and probabilities.
inline constexpr double kTolerance = 1e-12;
/// Unitarity tolerance for user-supplied coin matrices.
inline constexpr double kUnitaryTolerance = 1e-10;

/// A vector in the two-level coin space, basis {|H>, |V>}.
struct CoinState {
    Complex h{};
    Complex v{};

    static constexpr CoinState horizontal() { return {Complex{1.0, 0.0}, Complex{}}; }
    static constexpr CoinState vertical() { return {Complex{}, Complex{1.0, 0.0}}; }

    double norm_sq() const { return std::norm(h) + std::norm(v); }
    bool is_finite() const;
    /// Throws std::invalid_argument on a zero vector.
    CoinState normalized() const;

    CoinState operator*(Complex s) const { return {h * s, v * s}; }
    CoinState operator+(const CoinState &o) const { return {h + o.h, v + o.v}; }
    CoinState operator-(const CoinState &o) const { return {h - o.h, v - o.v}; }
    bool operator==(const CoinState &) const = default;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const CoinState &a, const CoinState &b);
/// |<a|b>|^2 for normalized arguments.
double fidelity(const CoinState &a, const CoinState &b);

/// Dense 2x2 complex matrix, row-major.
class Mat2 {
  public:
    constexpr Mat2() = default;
    constexpr Mat2(Complex m00, Complex m01, Complex m10, Complex m11) : a_{m00, m01, m10, m11} {}

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {}; }
    /// |u><v|
    static Mat2 outer(const CoinState &u, const CoinState &v);
    /// Columns are the images of |H> and |V>.
    static Mat2 from_columns(const CoinState &col_h, const CoinState &col_v);

    Complex operator()(int row, int col) const { return a_[2 * row + col]; }
    Complex &operator()(int row, int col) { return a_[2 * row + col]; }

    Mat2 operator*(const Mat2 &o) const;
    CoinState operator*(const CoinState &s) const;
    Mat2 operator+(const Mat2 &o) const;
    Mat2 operator-(const Mat2 &o) const;
    Mat2 operator*(Complex s) const;

    Mat2 adjoint() const;
    Complex trace() const { return a_[0] + a_[3]; }
    Complex determinant() const { return a_[0] * a_[3] - a_[1] * a_[2]; }
    CoinState column(int c) const { return {a_[c], a_[2 + c]}; }

    /// Largest componentwise modulus.
    double max_abs() const;
    bool is_finite() const;
    bool is_unitary(double tol = kUnitaryTolerance) const;
    bool is_hermitian(double tol = kTolerance) const;

    bool operator==(const Mat2 &) const = default;

  private:
    std::array<Complex, 4> a_{};
};

double max_abs_diff(const Mat2 &a, const Mat2 &b);

/// Eigenvalues of a Hermitian 2x2 matrix, ascending. Closed form from trace
/// and determinant; only the Hermitian part of the input is used.
struct HermitianEigenvalues {
    double low;
    double high;
};
HermitianEigenvalues hermitian_eigenvalues(const Mat2 &m);

std::string to_string(const Mat2 &m, int precision = 6);

}  // namespace qwalk

#endif
