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

/**
 * @file function_field.hpp
 * @brief The rational function field GF(q)(x): places, L(m P_inf) and residue maps.
 *
 * A finite place of degree r is a monic irreducible polynomial P of degree r;
 * its residue field GF(q)[x]/(P) is identified with GF(q)^r through the basis
 * {1, x, ..., x^(r-1)}. The only divisors needed are m * P_inf, whose
 * Riemann-Roch space is the polynomials of degree <= m.
 */

#ifndef GAGLRC_FUNCTION_FIELD_HPP
#define GAGLRC_FUNCTION_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "finite_field.hpp"
#include "polynomial.hpp"

namespace gaglrc {

class Place {
   public:
    enum class Kind { Finite, Infinity };

    static Place infinity(Field f) { return Place(Kind::Infinity, Polynomial(std::move(f))); }

    /// @throws std::invalid_argument unless poly is monic, irreducible and of degree >= 1.
    static Place finite(Polynomial poly) {
        if (poly.degree() < 1) throw std::invalid_argument("place polynomial must have degree >= 1");
        if (!poly.is_monic()) throw std::invalid_argument("place polynomial " + to_pretty(poly) + " is not monic");
        if (!is_irreducible(poly)) throw std::invalid_argument("place polynomial " + to_pretty(poly) + " is reducible");
        return Place(Kind::Finite, std::move(poly));
    }

    Kind kind() const noexcept { return kind_; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinity; }
    const Polynomial& poly() const noexcept { return poly_; }
    const Field& field() const noexcept { return poly_.field(); }
    int degree() const noexcept { return kind_ == Kind::Infinity ? 1 : poly_.degree(); }

    std::string to_string() const { return is_infinite() ? "P_inf" : to_pretty(poly_); }

    friend bool operator==(const Place& a, const Place& b) noexcept { return a.kind_ == b.kind_ && a.poly_ == b.poly_; }
    friend bool operator!=(const Place& a, const Place& b) noexcept { return !(a == b); }

   private:
    Place(Kind k, Polynomial p) : kind_(k), poly_(std::move(p)) {}
    Kind kind_;
    Polynomial poly_;
};

/// The divisor m * P_inf.
struct Divisor {
    std::uint32_t multiplicity = 0;
    std::uint32_t degree() const noexcept { return multiplicity; }
};

/// Every place of degree r: the monic irreducibles ordered lexicographically on
/// (c_0, ..., c_{r-1}) with c_0 compared first, plus P_inf last when r == 1.
inline std::vector<Place> enumerate_places(const Field& field, unsigned r) {
    if (r < 1) throw std::invalid_argument("place degree must be at least 1");
    const std::uint64_t q = field.order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < r; ++i) {
        count *= q;
        if (count > (std::uint64_t{1} << 26)) throw std::invalid_argument("too many candidate polynomials to enumerate");
    }
    std::vector<Place> out;
    std::vector<Symbol> c(r + 1, 0);
    c[r] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // c_0 is the most significant digit of idx.
        std::uint64_t v = idx;
        for (unsigned i = r; i-- > 0;) {
            c[i] = static_cast<Symbol>(v % q);
            v /= q;
        }
        Polynomial f(field, c);
        if (is_irreducible(f)) out.push_back(Place::finite(std::move(f)));
    }
    if (r == 1) out.push_back(Place::infinity(field));
    return out;
}

/// {1, x, ..., x^m}, a basis of L(m P_inf).
inline std::vector<Polynomial> riemann_roch_basis(const Field& field, std::uint32_t m) {
    std::vector<Polynomial> basis;
    basis.reserve(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) basis.push_back(Polynomial::monomial(field, i));
    return basis;
}

inline std::vector<Polynomial> riemann_roch_basis(const Field& field, const Divisor& g) {
    return riemann_roch_basis(field, g.multiplicity);
}

/// Coordinates of f mod P in the basis {1, x, ..., x^(deg P - 1)}.
inline std::vector<Symbol> residue_at_place(const Polynomial& f, const Place& place) {
    if (place.is_infinite()) throw std::invalid_argument("residue at the infinite place is not supported");
    if (f.field() != place.field()) throw std::invalid_argument("function and place are over different fields");
    const Polynomial r = f % place.poly();
    std::vector<Symbol> v(static_cast<std::size_t>(place.degree()), 0);
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r.coeffs()[i];
    return v;
}

}  // namespace gaglrc

#endif  // GAGLRC_FUNCTION_FIELD_HPP
