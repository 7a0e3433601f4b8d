/*
   Copyright 2026 The rootpath Authors

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

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootpath/complex.hpp"
#include "rootpath/error.hpp"

namespace rootpath {

/// Dense complex polynomial, coefficients stored in ascending degree order
/// (coeffs()[k] multiplies z^k).
///
/// Invariants enforced at construction: at least one coefficient, all
/// coefficients finite, leading coefficient nonzero. The zero polynomial is
/// not representable; callers that might produce it must branch first.
class Polynomial {
  public:
    explicit Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty())
            throw std::invalid_argument("Polynomial: need at least one coefficient");
        for (const Complex& a : coeffs_)
            if (!is_finite(a)) throw std::invalid_argument("Polynomial: coefficients must be finite");
        if (std::abs(coeffs_.back()) == 0.0)
            throw std::invalid_argument("Polynomial: leading coefficient must be nonzero");
    }

    Polynomial(std::initializer_list<Complex> coefficients)
        : Polynomial(std::vector<Complex>(coefficients)) {}

    /// Monic polynomial with the given roots, expanded by repeated
    /// multiplication with linear factors (z - r).
    static Polynomial from_roots(std::span<const Complex> roots) {
        if (roots.empty()) throw std::invalid_argument("from_roots: need at least one root");
        std::vector<Complex> c{Complex{1.0, 0.0}};
        for (const Complex& r : roots) {
            std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k + 1] += c[k];
                next[k] -= r * c[k];
            }
            c = std::move(next);
        }
        return Polynomial(std::move(c));
    }

    static Polynomial from_roots(std::initializer_list<Complex> roots) {
        return from_roots(std::span<const Complex>(roots.begin(), roots.size()));
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    Complex coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Complex leading() const noexcept { return coeffs_.back(); }
    bool is_monic() const noexcept { return coeffs_.back() == Complex{1.0, 0.0}; }

    /// Largest coefficient modulus; the magnitude reference for every
    /// relative tolerance in the library.
    double scale() const noexcept {
        double m = 0.0;
        for (const Complex& a : coeffs_) m = std::max(m, std::abs(a));
        return m;
    }

    /// Majorant evaluation: sum of |a_k| r^k. Evaluating P anywhere on the
    /// circle |z| = r carries rounding noise proportional to this, so it is
    /// the reference magnitude for residual tolerances at |z| = r.
    double magnitude_bound(double r) const noexcept {
        double acc = std::abs(coeffs_.back());
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * r + std::abs(coeffs_[k]);
        return acc;
    }

    /// Horner evaluation, single pass from the leading coefficient down.
    /// Overflow to Inf for huge |z| is left to the caller's finiteness check.
    Complex evaluate(Complex z) const noexcept {
        Complex acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
        return acc;
    }

    /// Fused Horner pass returning (P(z), P'(z)); one rounding per term.
    std::pair<Complex, Complex> evaluate_with_derivative(Complex z) const noexcept {
        Complex p = coeffs_.back();
        Complex dp{0.0, 0.0};
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + coeffs_[k];
        }
        return {p, dp};
    }

    /// Formal derivative. Constants have no representable derivative here,
    /// since the zero polynomial does not exist in this type.
    Polynomial derivative() const {
        if (degree() < 1)
            throw Error(Errc::degree_zero, "derivative of a degree-0 polynomial is the zero polynomial");
        std::vector<Complex> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = static_cast<double>(k) * coeffs_[k];
        return Polynomial(std::move(d));
    }

    /// Divide through by the leading coefficient. The result's leading
    /// coefficient is set to exactly 1; the root set is unchanged.
    Polynomial monicize() const {
        if (is_monic()) return *this;
        std::vector<Complex> c(coeffs_);
        const Complex lead = c.back();
        for (Complex& a : c) a /= lead;
        c.back() = Complex{1.0, 0.0};
        return Polynomial(std::move(c));
    }

    /// Cauchy bound: every root of P - c with |c| <= shift has modulus at
    /// most 1 + max(|a0| + shift, |a1|, ..., |a_{n-1}|). Monic input only.
    double root_bound(double shift) const {
        if (!is_monic()) throw Error(Errc::not_monic, "root_bound expects a monic polynomial");
        if (degree() < 1) throw std::invalid_argument("root_bound: degree must be >= 1");
        if (shift < 0.0) throw std::invalid_argument("root_bound: shift must be >= 0");
        double m = std::abs(coeffs_[0]) + shift;
        for (std::size_t k = 1; k + 1 < coeffs_.size(); ++k) m = std::max(m, std::abs(coeffs_[k]));
        return 1.0 + m;
    }

    /// Synthetic division by (z - r): returns (Q, rem) with
    /// P(z) = (z - r) * Q(z) + rem and rem = P(r).
    std::pair<Polynomial, Complex> deflate(Complex r) const {
        if (degree() < 1) throw std::invalid_argument("deflate: degree must be >= 1");
        const std::size_t n = coeffs_.size() - 1;
        std::vector<Complex> q(n);
        q[n - 1] = coeffs_[n];
        for (std::size_t k = n - 1; k > 0; --k) q[k - 1] = coeffs_[k] + r * q[k];
        const Complex rem = coeffs_[0] + r * q[0];
        return {Polynomial(std::move(q)), rem};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<Complex> coeffs_;
};

}  // namespace rootpath
