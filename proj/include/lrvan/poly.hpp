#pragma once

#include "lrvan/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace lrvan {

/// Monomial exponents packed 4 bits per variable slot, slot v at bits
/// [4v, 4v+4).  Keys of polynomials over the same variable universe add like
/// integers as long as no exponent sum exceeds 15, which holds throughout
/// because total degrees here stay below 16.
using MonoKey = unsigned __int128;

struct MonoKeyHash {
    std::size_t operator()(MonoKey k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k) ^
                          static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL;
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 27;
        h *= 0x94d049bb133111ebULL;
        h ^= h >> 31;
        return static_cast<std::size_t>(h);
    }
};

/// Sparse polynomial with exact integer coefficients in variables
/// x_1..x_nx, y_1..y_ny (slots 0..nx-1 then nx..nx+ny-1).
class MultiPoly {
public:
    using TermMap = std::unordered_map<MonoKey, BigInt, MonoKeyHash>;

    MultiPoly() = default;
    MultiPoly(int nx, int ny);

    static MultiPoly constant(int nx, int ny, const BigInt& c);
    static MultiPoly x_var(int nx, int ny, int i);  // x_i, 1-based
    static MultiPoly y_var(int nx, int ny, int j);  // y_j, 1-based

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nvars() const { return nx_ + ny_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(MonoKey key, const BigInt& c);
    BigInt coefficient(MonoKey key) const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly operator*(const MultiPoly& other) const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    /// Same polynomial over a wider universe (nx2 >= nx, ny2 >= ny); the
    /// names x_i and y_j keep their meaning, slots are renumbered.
    MultiPoly embedded(int nx2, int ny2) const;

    /// Sets every y_j to zero; the result lives in (nx, 0).
    MultiPoly specialize_y_zero() const;

    /// Exchanges x_a and x_b (1-based).
    MultiPoly swap_x(int a, int b) const;

    /// Substitutes y_j -> y_j + t for a fresh variable t and reports whether
    /// the result is free of t, i.e. the polynomial only depends on
    /// differences of the y's.
    bool shift_invariant_in_y() const;

    /// Rewrites a polynomial in the y's alone in the differences
    /// b_j = y_{j+1} - y_j.  Requires nx == 0 and shift invariance (throws
    /// std::invalid_argument otherwise).  The result lives in (0, ny-1)
    /// with slot j-1 standing for b_j.
    MultiPoly rewrite_in_beta() const;

    bool all_coefficients_nonnegative() const;

    /// Signed terms in graded lexicographic order, e.g. "+3*y1^2*y2 -1*y3";
    /// the zero polynomial prints as "0".
    std::string to_string(const char* xname = "x", const char* yname = "y") const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    static int exp_of(MonoKey key, int slot) {
        return static_cast<int>((key >> (4 * slot)) & 0xF);
    }
    static MonoKey with_exp(MonoKey key, int slot, int e);
    static int total_degree(MonoKey key, int nvars);
    MonoKey pack(const std::vector<int>& exps) const;  // exps.size() == nvars()

private:
    MultiPoly substitute_shift() const;  // y_j -> y_j + t, t in slot nx+ny

    int nx_ = 0, ny_ = 0;
    TermMap terms_;
};

}  // namespace lrvan
