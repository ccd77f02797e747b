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
 * @file lrc.hpp
 * @brief Locally recoverable codes from generalized AG codes over GF(q)(x).
 *
 * A code C(P_1, ..., P_s : m P_inf : C_1, ..., C_s) maps f with deg f <= m to
 * (pi_1(f mod P_1), ..., pi_s(f mod P_s)), where pi_i encodes the residue
 * (coordinates in {1, x, ..., x^(k_i - 1)}, k_i = deg P_i) with the inner code
 * C_i of dimension k_i. Each block of n_i symbols depends only on one residue,
 * so any symbol is recoverable from k_i others in its block.
 *
 * Any other choice of residue basis composes pi_i with an invertible k_i x k_i
 * map; the resulting code is equivalent with identical [n, k, d].
 */

#ifndef GAGLRC_LRC_HPP
#define GAGLRC_LRC_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "finite_field.hpp"
#include "function_field.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"

namespace gaglrc {

struct Block {
    std::size_t start = 0;
    std::size_t length = 0;
};

class GagLrcCode {
   public:
    const LinearCode& base() const noexcept { return base_; }
    LinearCode& base() noexcept { return base_; }
    const Field& field() const noexcept { return base_.field(); }
    const std::vector<Place>& places() const noexcept { return places_; }
    std::uint32_t divisor_degree() const noexcept { return divisor_degree_; }
    const std::vector<LinearCode>& inner() const noexcept { return inner_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    int locality() const noexcept { return locality_; }
    std::size_t length() const noexcept { return base_.length(); }
    std::size_t dimension() const noexcept { return base_.dimension(); }

    /// residues()[i][j]: coordinates of x^i mod P_j.
    const std::vector<std::vector<std::vector<Symbol>>>& residues() const noexcept { return residues_; }
    /// Residues flattened over GF(q): k x sum(deg P_j).
    const Matrix& flattened() const noexcept { return flattened_; }

    /// Block index containing coordinate j.
    std::size_t block_of(std::size_t j) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (j >= blocks_[b].start && j < blocks_[b].start + blocks_[b].length) return b;
        throw std::out_of_range("coordinate " + std::to_string(j + 1) + " is outside the code");
    }

   private:
    friend GagLrcCode build_gag_lrc(const Field&, const std::vector<Place>&, std::uint32_t,
                                    const std::vector<LinearCode>&);
    LinearCode base_;
    std::vector<Place> places_;
    std::uint32_t divisor_degree_ = 0;
    std::vector<LinearCode> inner_;
    std::vector<Block> blocks_;
    int locality_ = 0;
    std::vector<std::vector<std::vector<Symbol>>> residues_;
    Matrix flattened_;
};

/**
 * @brief Assembles the generator of C(P_1..P_s : deg_g P_inf : C_1..C_s).
 *
 * Row i is the image of x^i: the residues of x^i at each place, flattened
 * over GF(q), each group of deg(P_j) columns multiplied by the generator of C_j.
 *
 * @throws std::invalid_argument on any violated precondition.
 */
inline GagLrcCode build_gag_lrc(const Field& field, const std::vector<Place>& places, std::uint32_t divisor_degree,
                                const std::vector<LinearCode>& inner) {
    if (places.empty()) throw std::invalid_argument("at least one place is required");
    if (inner.size() != places.size())
        throw std::invalid_argument("expected one inner code per place (" + std::to_string(places.size()) + "), got " +
                                    std::to_string(inner.size()));
    std::size_t total_degree = 0;
    for (std::size_t i = 0; i < places.size(); ++i) {
        const Place& p = places[i];
        if (p.is_infinite()) throw std::invalid_argument("evaluation places must be finite (the divisor sits at P_inf)");
        if (p.field() != field) throw std::invalid_argument("place " + p.to_string() + " is over a different field");
        for (std::size_t j = 0; j < i; ++j)
            if (places[j] == p) throw std::invalid_argument("place " + p.to_string() + " is repeated");
        const auto deg = static_cast<std::size_t>(p.degree());
        if (inner[i].field() != field) throw std::invalid_argument("inner code " + std::to_string(i + 1) + " is over a different field");
        if (inner[i].dimension() != deg)
            throw std::invalid_argument("inner code " + std::to_string(i + 1) + " has dimension " +
                                        std::to_string(inner[i].dimension()) + " but the place has degree " +
                                        std::to_string(deg));
        if (inner[i].length() <= deg)
            throw std::invalid_argument("inner code " + std::to_string(i + 1) + " is too short: length " +
                                        std::to_string(inner[i].length()) + " must exceed the place degree " +
                                        std::to_string(deg));
        total_degree += deg;
    }
    if (divisor_degree >= total_degree)
        throw std::invalid_argument("divisor degree " + std::to_string(divisor_degree) +
                                    " must be below the total place degree " + std::to_string(total_degree));

    GagLrcCode code;
    code.places_ = places;
    code.divisor_degree_ = divisor_degree;
    code.inner_ = inner;
    for (auto& c : code.inner_)
        if (!c.exact_distance()) c.record_exact_distance(min_distance_exhaustive(c));

    const std::size_t k = divisor_degree + 1;
    const auto basis = riemann_roch_basis(field, divisor_degree);
    code.residues_.assign(k, {});
    code.flattened_ = Matrix(field, k, total_degree);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t col = 0;
        for (const Place& p : places) {
            auto res = residue_at_place(basis[i], p);
            for (Symbol s : res) code.flattened_(i, col++) = s;
            code.residues_[i].push_back(std::move(res));
        }
    }

    std::size_t n = 0;
    for (const auto& c : inner) n += c.length();
    Matrix g(field, k, n);
    std::size_t src = 0, dst = 0;
    for (std::size_t b = 0; b < places.size(); ++b) {
        const std::size_t deg = static_cast<std::size_t>(places[b].degree());
        std::vector<std::size_t> cols(deg);
        for (std::size_t t = 0; t < deg; ++t) cols[t] = src + t;
        const Matrix part = code.flattened_.columns(cols) * inner[b].generator();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < part.cols(); ++j) g(i, dst + j) = part(i, j);
        code.blocks_.push_back({dst, part.cols()});
        code.locality_ = std::max(code.locality_, static_cast<int>(deg));
        src += deg;
        dst += part.cols();
    }
    code.base_ = LinearCode(std::move(g));
    return code;
}

/// Convenience overload: the same inner code for every place.
inline GagLrcCode build_gag_lrc(const Field& field, const std::vector<Place>& places, std::uint32_t divisor_degree,
                                const LinearCode& inner) {
    return build_gag_lrc(field, places, divisor_degree, std::vector<LinearCode>(places.size(), inner));
}

struct RepairResult {
    Symbol symbol = 0;
    std::vector<std::size_t> recovery_set;  // 0-indexed global coordinates
};

/// Restores word[erased] from the other symbols of its block.
inline RepairResult repair_symbol(const GagLrcCode& code, std::span<const Symbol> word, std::size_t erased) {
    if (word.size() != code.length()) throw std::invalid_argument("word length does not match code length");
    const std::size_t b = code.block_of(erased);
    const Block& blk = code.blocks()[b];
    const LinearCode& inner = code.inner()[b];
    std::vector<std::optional<Symbol>> local(blk.length);
    for (std::size_t j = 0; j < blk.length; ++j)
        if (blk.start + j != erased) local[j] = word[blk.start + j];
    Recovery rec;
    try {
        rec = information_set_recover(inner, local);
    } catch (const RecoveryImpossible&) {
        throw std::logic_error("block " + std::to_string(b + 1) + " has no information set avoiding coordinate " +
                               std::to_string(erased + 1));
    }
    RepairResult out;
    out.symbol = inner.encode(rec.message)[erased - blk.start];
    for (std::size_t p : rec.positions) out.recovery_set.push_back(blk.start + p);
    return out;
}

namespace detail {

// Is column `target` of g in the span of columns `set`?
inline bool column_in_span(const Matrix& g, std::size_t target, const std::vector<std::size_t>& set) {
    std::vector<std::size_t> with = set;
    with.push_back(target);
    if (set.empty()) return hamming_weight(g.column(target)) == 0;
    return g.columns(set).rank() == g.columns(with).rank();
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::uint64_t{1} << 40)) return r;
    }
    return r;
}

}  // namespace detail

/// Smallest recovery set of every coordinate of a (short) code, 0-indexed.
inline std::vector<std::vector<std::size_t>> local_recovery_sets(const LinearCode& code) {
    constexpr std::uint64_t kSubsetCap = 1'000'000;
    const Matrix& g = code.generator();
    const std::size_t n = code.length(), kb = code.dimension();
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> others;
        for (std::size_t t = 0; t < n; ++t)
            if (t != j) others.push_back(t);
        std::optional<std::vector<std::size_t>> found;
        for (std::size_t size = 0; size <= std::min(kb, others.size()) && !found; ++size) {
            if (detail::binomial(others.size(), size) > kSubsetCap) break;
            std::vector<bool> mask(others.size(), false);
            std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
            do {
                std::vector<std::size_t> set;
                for (std::size_t t = 0; t < others.size(); ++t)
                    if (mask[t]) set.push_back(others[t]);
                if (detail::column_in_span(g, j, set)) {
                    found = set;
                    break;
                }
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
        if (!found) {
            // Too many subsets to scan: fall back to an information set avoiding j.
            std::vector<std::optional<Symbol>> pattern(n, Symbol{0});
            pattern[j].reset();
            try {
                found = information_set_recover(code, pattern).positions;
            } catch (const RecoveryImpossible&) {
                throw std::logic_error("coordinate " + std::to_string(j + 1) + " has no recovery set");
            }
        }
        out[j] = std::move(*found);
    }
    return out;
}

/// Largest smallest-recovery-set size over the coordinates of a code.
inline int code_locality(const LinearCode& code) {
    std::size_t worst = 0;
    for (const auto& s : local_recovery_sets(code)) worst = std::max(worst, s.size());
    return static_cast<int>(worst);
}

/// Smallest block-local recovery set for every coordinate (0-indexed global positions).
inline std::vector<std::vector<std::size_t>> recovery_sets(const GagLrcCode& code) {
    std::vector<std::vector<std::size_t>> out(code.length());
    for (std::size_t b = 0; b < code.blocks().size(); ++b) {
        const Block& blk = code.blocks()[b];
        auto local = local_recovery_sets(code.inner()[b]);
        for (std::size_t j = 0; j < blk.length; ++j) {
            for (auto& p : local[j]) p += blk.start;
            out[blk.start + j] = std::move(local[j]);
        }
    }
    return out;
}

/// Certified locality upper bound: max over coordinates of the smallest block-local recovery set.
inline int verify_locality(const GagLrcCode& code) {
    std::size_t worst = 0;
    for (const auto& s : recovery_sets(code)) worst = std::max(worst, s.size());
    return static_cast<int>(worst);
}

// ------------------------------------------------------------ parameters

struct ParamReport {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t locality = 0;
    std::int64_t d_design = 0;
    std::int64_t d_singleton = 0;
    std::optional<std::int64_t> d_actual;
    std::int64_t defect = 0;
    bool pessimistic = true;  // defect computed from d_design
    Rational rate_bound{0};
    Rational rate_cap{0};
    std::vector<std::string> flags;

    void set_actual(std::int64_t d) {
        d_actual = d;
        defect = d_singleton - d;
        pessimistic = false;
    }
};

inline ParamReport make_report(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d_design) {
    ParamReport rep;
    rep.n = n;
    rep.k = k;
    rep.locality = r;
    rep.d_design = d_design;
    rep.d_singleton = singleton_lrc(n, k, r);
    rep.defect = rep.d_singleton - d_design;
    rep.rate_cap = lrc_rate_cap(r);
    if (d_design > rep.d_singleton) throw std::logic_error("design distance exceeds the Singleton-like bound");
    return rep;
}

/// Number of monic irreducibles of degree r over GF(q): (1/r) sum_{d | r} mu(d) q^(r/d).
inline std::int64_t count_places(std::int64_t q, std::int64_t r) {
    auto mobius = [](std::int64_t n) {
        int sign = 1;
        for (std::int64_t p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            sign = -sign;
        }
        if (n > 1) sign = -sign;
        return sign;
    };
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d <= r; ++d)
        if (r % d == 0) sum += mobius(d) * checked_pow(q, r / d);
    return sum / r;
}

/**
 * @brief Concatenated construction: outer AG code over GF(q^r) with s rational
 * places and genus g, inner [r+1, r, 2] parity code.
 * n = (r+1)s, k = r k0, d >= 2(s - k0 - g + 1).
 */
inline ParamReport construction1_params(std::int64_t q, std::int64_t r, std::int64_t s, std::int64_t g,
                                        std::int64_t k0) {
    require_prime_power(q);
    if (r < 1 || s < 1 || g < 0) throw std::invalid_argument("construction 1 needs r >= 1, s >= 1, g >= 0");
    if (!(g - 1 < k0 && k0 < s - g + 1))
        throw std::invalid_argument("construction 1 needs g - 1 < k0 < s - g + 1 (got k0 = " + std::to_string(k0) + ")");
    if (k0 < 1) throw std::invalid_argument("construction 1 needs k0 >= 1");
    const std::int64_t n = (r + 1) * s, k = r * k0;
    ParamReport rep = make_report(n, k, r, 2 * (s - k0 - g + 1));
    const Rational delta(rep.d_design, n);
    rep.rate_bound = Rational(r, r + 1) - Rational(r, 2) * delta - Rational(r * (g - 1), n);
    if (g == 0 && s > checked_pow(q, r) + 1) rep.flags.push_back("s_exceeds_rational_places_of_projective_line");
    return rep;
}

/**
 * @brief Generalized-AG construction: s places of degree r > 1, genus g, inner
 * [r+1, r, 2] parity code. n = (r+1)s, d >= 2(s - floor((k+g-1)/r)).
 */
inline ParamReport construction2_params(std::int64_t q, std::int64_t r, std::int64_t s, std::int64_t g,
                                        std::int64_t k) {
    require_prime_power(q);
    if (r < 2 || s < 1 || g < 0) throw std::invalid_argument("construction 2 needs r >= 2, s >= 1, g >= 0");
    if (!(g - 1 < k && k < r * s - g + 1))
        throw std::invalid_argument("construction 2 needs g - 1 < k < r s - g + 1 (got k = " + std::to_string(k) + ")");
    if (k < 1) throw std::invalid_argument("construction 2 needs k >= 1");
    const std::int64_t n = (r + 1) * s;
    ParamReport rep = make_report(n, k, r, 2 * (s - (k + g - 1) / r));
    const Rational delta(rep.d_design, n);
    rep.rate_bound = Rational(r, r + 1) - Rational(r, 2) * delta - Rational(g - 1, n);
    if (g == 0 && s > count_places(q, r)) rep.flags.push_back("s_exceeds_degree_r_places_of_projective_line");
    return rep;
}

/**
 * @brief Guaranteed distance of a built code: the larger of
 * sum d_i - deg G - sum_i max(0, d_i - k_i) (valid for any inner codes) and,
 * when all places share a degree r, min d_i * (s - floor(deg G / r)).
 */
inline std::int64_t gag_design_distance(const GagLrcCode& code) {
    std::int64_t sum_d = 0, excess = 0, min_d = INT64_MAX;
    bool uniform = true;
    const int r = code.places().front().degree();
    for (std::size_t i = 0; i < code.places().size(); ++i) {
        const std::int64_t di = *code.inner()[i].exact_distance();
        const std::int64_t ki = code.places()[i].degree();
        sum_d += di;
        excess += std::max<std::int64_t>(0, di - ki);
        min_d = std::min(min_d, di);
        uniform = uniform && code.places()[i].degree() == r;
    }
    std::int64_t best = sum_d - code.divisor_degree() - excess;
    if (uniform) {
        const auto s = static_cast<std::int64_t>(code.places().size());
        best = std::max(best, min_d * (s - static_cast<std::int64_t>(code.divisor_degree()) / r));
    }
    return std::max<std::int64_t>(best, 1);
}

/**
 * @brief Parameter report for a built code. d_actual comes from exhaustive
 * search when q^k fits the budget, otherwise from distance_bounds (claim 3,
 * then 2) with the optional witness. Without a matching witness the defect
 * uses the better of d_design and the certified lower bound, and the report
 * stays pessimistic.
 */
inline ParamReport assess(GagLrcCode& code, std::uint64_t budget = kDefaultSearchBudget,
                          std::optional<std::vector<Symbol>> witness = std::nullopt) {
    const auto n = static_cast<std::int64_t>(code.length());
    const auto k = static_cast<std::int64_t>(code.dimension());
    ParamReport rep = make_report(n, k, code.locality(), gag_design_distance(code));
    rep.rate_bound = Rational(k, n);  // built code: the achieved rate
    try {
        const int d = min_distance_exhaustive(code.base(), budget);
        code.base().record_exact_distance(d);
        rep.set_actual(d);
        return rep;
    } catch (const BudgetExceeded&) {
        rep.flags.push_back("exhaustive_search_over_budget");
    }
    for (int claim : {3, 2}) {
        try {
            const DistanceBounds db = distance_bounds(code.base(), claim, witness);
            code.base().record_distance_bounds(db.lower, db.upper);
            if (db.upper && *db.upper == db.lower) {
                rep.set_actual(db.lower);
                rep.flags.push_back("certified_by_parity_check_and_witness");
                return rep;
            }
            rep.flags.push_back("certified_lower_bound_" + std::to_string(db.lower));
            rep.defect = rep.d_singleton - std::max<std::int64_t>(rep.d_design, db.lower);
            return rep;
        } catch (const CertificationFailure&) {
        }
    }
    rep.flags.push_back("design_distance_only");
    return rep;
}

// ------------------------------------------------------------ optimal family

struct FamilyCode {
    GagLrcCode code;
    std::vector<Symbol> witness;  // message of f = product of all but the last place polynomial
};

/**
 * @brief The [3(q^2-q)/2, q^2-q-1, 3] code over GF(q) with locality 2: every
 * degree-2 place, divisor (q^2-q-2) P_inf, inner RS code of length 3 and
 * dimension 2 at the first three field elements.
 *
 * The witness f = p_1 ... p_{t-1} vanishes at t-1 places and is a nonzero
 * constant modulo p_t, so its codeword has weight exactly 3.
 */
inline FamilyCode build_optimal_q_family(std::uint64_t q) {
    if (q < 3) throw std::invalid_argument("the optimal family needs q >= 3");
    const Field f = Field::of_order(q);
    const auto places = enumerate_places(f, 2);
    const std::uint32_t deg_g = static_cast<std::uint32_t>(q * q - q - 2);
    FamilyCode fam{build_gag_lrc(f, places, deg_g, rs_code(f, 3, 2)), {}};
    Polynomial prod = Polynomial::constant(f, 1);
    for (std::size_t i = 0; i + 1 < places.size(); ++i) prod = prod * places[i].poly();
    fam.witness.assign(fam.code.dimension(), 0);
    for (std::size_t i = 0; i < prod.coeffs().size(); ++i) fam.witness[i] = prod.coeffs()[i];
    return fam;
}

// ------------------------------------------------------------ tables

struct TableRow {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::int64_t defect = 0;
};

/// Every degree-2 place of GF(q)(x) with inner RS code of length 3 and
/// dimension 2; one row per dimension k = s .. 2s - 1 with exhaustive d.
inline std::vector<TableRow> projective_line_table(std::uint64_t q = 3,
                                                   std::uint64_t budget = kDefaultSearchBudget) {
    const Field f = Field::of_order(q);
    const auto places = enumerate_places(f, 2);
    const LinearCode inner = rs_code(f, 3, 2);
    const auto s = static_cast<std::int64_t>(places.size());
    std::vector<TableRow> rows;
    for (std::int64_t k = s; k <= 2 * s - 1; ++k) {
        GagLrcCode code = build_gag_lrc(f, places, static_cast<std::uint32_t>(k - 1), inner);
        const int d = min_distance_exhaustive(code.base(), budget);
        const auto n = static_cast<std::int64_t>(code.length());
        rows.push_back({n, k, d, lrc_defect(n, k, d, code.locality())});
    }
    return rows;
}

// ------------------------------------------------------------ concatenation

/**
 * @brief Concatenation of an outer code over GF(p^r) with an inner [n', r] code
 * over GF(p). Outer symbols are expanded in the polynomial basis {1, x, ...,
 * x^(r-1)} of GF(p^r) and inner-encoded. Rows are ordered (outer row, basis index).
 *
 * @throws std::invalid_argument on a field-tower mismatch.
 */
inline LinearCode build_concatenated(const LinearCode& outer, const LinearCode& inner) {
    const Field& fo = outer.field();
    const Field& fi = inner.field();
    if (!fi.is_prime_field() || fi.characteristic() != fo.characteristic())
        throw std::invalid_argument("field-tower mismatch: inner code must be over GF(" +
                                    std::to_string(fo.characteristic()) + ")");
    const std::size_t r = fo.degree();
    if (inner.dimension() != r)
        throw std::invalid_argument("field-tower mismatch: inner dimension " + std::to_string(inner.dimension()) +
                                    " differs from extension degree " + std::to_string(r));
    const std::size_t n = outer.length(), k = outer.dimension(), ni = inner.length();
    Matrix g(fi, k * r, n * ni);
    Symbol basis = 1;  // x^b has index p^b
    for (std::size_t b = 0; b < r; ++b, basis *= fo.characteristic()) {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t row = i * r + b;
            for (std::size_t j = 0; j < n; ++j) {
                const Symbol sym = fo.mul(basis, outer.generator()(i, j));
                const auto coeffs = fo.coefficients(sym);
                const auto enc = inner.encode(coeffs);
                for (std::size_t t = 0; t < ni; ++t) g(row, j * ni + t) = enc[t];
            }
        }
    }
    LinearCode out(std::move(g));
    if (outer.exact_distance() && inner.exact_distance())
        out.record_distance_bounds(*outer.exact_distance() * *inner.exact_distance(), std::nullopt);
    return out;
}

// ------------------------------------------------------------ golden output

enum class Stage { Residues, Flattened, InnerGenerator, Generator };

/// The residue matrix (entries rendered as coordinate vectors), the flattened
/// residue matrix, the first block's inner generator, or the full generator,
/// in matrix file format.
inline std::string emit_stage(const GagLrcCode& code, Stage which) {
    switch (which) {
        case Stage::Residues: {
            const auto& res = code.residues();
            std::ostringstream os;
            const Field& F = code.field();
            os << F.order() << ' ' << code.places().size() << ' ' << res.size() << '\n';
            for (const auto& row : res) {
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) os << ' ';
                    for (std::size_t t = 0; t < row[j].size(); ++t) {
                        if (t) os << ',';
                        os << F.render(row[j][t]);
                    }
                }
                os << '\n';
            }
            return os.str();
        }
        case Stage::Flattened:
            return format_matrix(code.flattened());
        case Stage::InnerGenerator:
            return format_matrix(code.inner().front().generator());
        case Stage::Generator:
            return format_matrix(code.base().generator());
    }
    throw std::invalid_argument("unknown stage");
}

}  // namespace gaglrc

#endif  // GAGLRC_LRC_HPP
