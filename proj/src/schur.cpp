#include "lrvan/schur.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace lrvan {

namespace {

using Grid = unsigned __int128;

inline Grid grid_bit(int cell) { return static_cast<Grid>(1) << cell; }

std::vector<Grid> move_closure(const Partition& la, int n, int m, const SchurLimits& limits) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative grid dimension");
    if (la.length() > n) throw std::invalid_argument("grid has fewer rows than the partition");
    if (la.part(1) > m) throw std::invalid_argument("grid has fewer columns than the first part");
    if (static_cast<long long>(n) * m > 128)
        throw BudgetExceeded("plus diagram grid exceeds 128 cells");

    Grid init = 0;
    for (int i = 1; i <= la.length(); ++i)
        for (int j = 1; j <= la.part(i); ++j) init |= grid_bit((i - 1) * m + (j - 1));

    std::unordered_set<Grid, MonoKeyHash> seen;
    std::vector<Grid> order{init};
    seen.insert(init);
    for (std::size_t head = 0; head < order.size(); ++head) {
        Grid g = order[head];
        for (int r = 0; r + 1 < n; ++r)
            for (int c = 0; c + 1 < m; ++c) {
                Grid nw = grid_bit(r * m + c);
                if (!(g & nw)) continue;
                Grid others = grid_bit(r * m + c + 1) | grid_bit((r + 1) * m + c) |
                              grid_bit((r + 1) * m + c + 1);
                if (g & others) continue;
                Grid next = (g ^ nw) | grid_bit((r + 1) * m + c + 1);
                if (seen.insert(next).second) {
                    order.push_back(next);
                    if (static_cast<long long>(order.size()) > limits.max_diagrams)
                        throw BudgetExceeded("plus diagram closure exceeds " +
                                             std::to_string(limits.max_diagrams) + " states");
                }
            }
    }
    std::sort(order.begin(), order.end());
    return order;
}

// Open addressing map from packed monomials to 64 bit coefficients; the
// hot path of the expansion.  Zero entries are left in place and skipped
// when reading out.
struct Accum {
    std::vector<MonoKey> keys;
    std::vector<long long> vals;
    std::size_t mask = 0, used = 0;
    long long distinct_limit;

    static constexpr MonoKey kEmpty = ~static_cast<MonoKey>(0);

    explicit Accum(long long limit, std::size_t cap = 1 << 12) : distinct_limit(limit) {
        keys.assign(cap, kEmpty);
        vals.assign(cap, 0);
        mask = cap - 1;
    }

    void add(MonoKey k, long long v) {
        std::size_t i = MonoKeyHash{}(k) & mask;
        while (true) {
            if (keys[i] == kEmpty) {
                keys[i] = k;
                vals[i] = v;
                if (static_cast<long long>(++used) > distinct_limit)
                    throw BudgetExceeded("expansion exceeds the distinct term budget");
                if (used * 10 > keys.size() * 6) grow();
                return;
            }
            if (keys[i] == k) {
                if (__builtin_add_overflow(vals[i], v, &vals[i]))
                    throw std::overflow_error("coefficient overflow in expansion");
                return;
            }
            i = (i + 1) & mask;
        }
    }

    void grow() {
        std::vector<MonoKey> old_keys = std::move(keys);
        std::vector<long long> old_vals = std::move(vals);
        std::size_t cap = old_keys.size() * 2;
        keys.assign(cap, kEmpty);
        vals.assign(cap, 0);
        mask = cap - 1;
        used = 0;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == kEmpty || old_vals[i] == 0) continue;
            std::size_t j = MonoKeyHash{}(old_keys[i]) & mask;
            while (keys[j] != kEmpty) j = (j + 1) & mask;
            keys[j] = old_keys[i];
            vals[j] = old_vals[i];
            ++used;
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i] != kEmpty && vals[i] != 0) f(keys[i], vals[i]);
    }
};

// x exponents weakly decreasing: the canonical representative of an S_n
// orbit of monomials.  A polynomial symmetric in the x's is determined by
// these terms, which cuts the working set of the expansions by roughly the
// orbit size.
bool x_sorted(MonoKey key, int n) {
    for (int v = 0; v + 1 < n; ++v)
        if (MultiPoly::exp_of(key, v) < MultiPoly::exp_of(key, v + 1)) return false;
    return true;
}

// Adds the expanded weights of every diagram in the closure of la to the
// accumulator: per diagram the product over rows of prod_c (x_row - y_col).
// With dominant_only set, terms whose x exponents increase somewhere are
// dropped; the check runs inside the cross product because a violation
// between rows r-1 and r can never be repaired by later rows.
void accumulate_schur(const std::vector<Grid>& grids, int n, int m, bool dominant_only,
                      Accum& acc) {
    std::vector<std::vector<std::pair<MonoKey, int>>> row_terms(n);
    std::vector<int> cols;
    for (Grid g : grids) {
        int nonempty = 0;
        for (int r = 0; r < n; ++r) {
            cols.clear();
            for (int c = 0; c < m; ++c)
                if (g & grid_bit(r * m + c)) cols.push_back(c);
            auto& terms = row_terms[r];
            terms.clear();
            if (cols.empty()) continue;
            if (cols.size() > 15) throw BudgetExceeded("row weight degree exceeds packed range");
            ++nonempty;
            for (unsigned pick = 0; pick < (1u << cols.size()); ++pick) {
                MonoKey key = 0;
                int sign = 1, xdeg = 0;
                for (std::size_t a = 0; a < cols.size(); ++a) {
                    if (pick & (1u << a)) {
                        ++xdeg;  // choose x_row
                    } else {
                        key += static_cast<MonoKey>(1) << (4 * (n + cols[a]));  // choose -y_col
                        sign = -sign;
                    }
                }
                key = MultiPoly::with_exp(key, r, xdeg);
                terms.push_back({key, sign});
            }
        }
        // cross product over the nonempty rows
        std::vector<std::pair<MonoKey, int>> acc_terms{{0, 1}};
        if (nonempty) {
            for (int r = 0; r < n; ++r) {
                if (row_terms[r].empty()) continue;
                std::vector<std::pair<MonoKey, int>> next;
                next.reserve(acc_terms.size() * row_terms[r].size());
                for (const auto& [k1, s1] : acc_terms)
                    for (const auto& [k2, s2] : row_terms[r]) {
                        MonoKey k = k1 + k2;
                        if (dominant_only && r > 0 &&
                            MultiPoly::exp_of(k, r) > MultiPoly::exp_of(k, r - 1))
                            continue;
                        next.push_back({k, s1 * s2});
                    }
                acc_terms = std::move(next);
            }
        }
        for (const auto& [key, sign] : acc_terms) acc.add(key, sign);
    }
}

using TermVec = std::vector<std::pair<MonoKey, long long>>;

std::mutex cache_mutex;
std::map<std::tuple<std::vector<int>, int, bool>, std::shared_ptr<const TermVec>> schur_cache;

// Terms of s_la(x_1..x_n; y), sorted by packed key, coefficients in 64 bits.
// The dominant_only variant keeps just the orbit representatives; full
// expansions of the big shapes run to hundreds of thousands of terms while
// their dominant parts stay small, so the two are cached separately.
std::shared_ptr<const TermVec> schur_terms(const Partition& la, int n, bool dominant_only,
                                           const SchurLimits& limits) {
    std::tuple<std::vector<int>, int, bool> cache_key{la.parts(), n, dominant_only};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = schur_cache.find(cache_key);
        if (it != schur_cache.end()) return it->second;
    }
    if (la.size() > 15)
        throw BudgetExceeded("partition size exceeds the packed degree range");
    int m = std::max(n + la.part(1) - 1, 0);
    std::vector<Grid> grids = move_closure(la, n, m, limits);
    Accum acc(limits.max_terms);
    accumulate_schur(grids, n, m, dominant_only, acc);
    auto terms = std::make_shared<TermVec>();
    terms->reserve(acc.used);
    acc.for_each([&](MonoKey k, long long v) { terms->push_back({k, v}); });
    std::sort(terms->begin(), terms->end());
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = schur_cache.emplace(cache_key, std::move(terms));
    return it->second;
}

int x_degree(MonoKey key, int n) {
    int d = 0;
    for (int v = 0; v < n; ++v) d += MultiPoly::exp_of(key, v);
    return d;
}

MonoKey x_part(MonoKey key, int n) {
    if (n >= 32) return key;
    MonoKey mask = (static_cast<MonoKey>(1) << (4 * n)) - 1;
    return key & mask;
}

// lex order on the exponent vector (x_1 first)
bool x_lex_less(MonoKey a, MonoKey b, int n) {
    for (int v = 0; v < n; ++v) {
        int ea = MultiPoly::exp_of(a, v), eb = MultiPoly::exp_of(b, v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

// Buckets a term list by x-part so the product loop can reject a whole
// bucket pair with one dominance test instead of one test per term pair.
std::vector<std::pair<MonoKey, TermVec>> group_by_x(const TermVec& terms, int n) {
    std::map<MonoKey, TermVec> groups;
    for (const auto& t : terms) groups[x_part(t.first, n)].push_back(t);
    return {groups.begin(), groups.end()};
}

}  // namespace

std::vector<PlusDiagram> enumerate_plus_diagrams(const Partition& la, int n, int m,
                                                 const SchurLimits& limits) {
    std::vector<Grid> grids = move_closure(la, n, m, limits);
    std::vector<PlusDiagram> out;
    out.reserve(grids.size());
    for (Grid g : grids) {
        PlusDiagram d;
        d.n = n;
        d.m = m;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < m; ++c)
                if (g & grid_bit(r * m + c)) d.pluses.push_back({r + 1, c + 1});
        out.push_back(std::move(d));
    }
    return out;
}

MultiPoly weight_x(const PlusDiagram& d) {
    MultiPoly out(d.n, 0);
    std::vector<int> rows(d.n, 0);
    for (const auto& [r, c] : d.pluses) ++rows.at(r - 1);
    MonoKey key = 0;
    for (int r = 0; r < d.n; ++r) key = MultiPoly::with_exp(key, r, rows[r]);
    out.add_term(key, 1);
    return out;
}

MultiPoly weight_xy(const PlusDiagram& d) {
    MultiPoly out = MultiPoly::constant(d.n, d.m, 1);
    for (const auto& [r, c] : d.pluses) {
        MultiPoly factor = MultiPoly::x_var(d.n, d.m, r);
        factor -= MultiPoly::y_var(d.n, d.m, c);
        out = out * factor;
    }
    return out;
}

MultiPoly factorial_schur(const Partition& la, int n, const SchurLimits& limits) {
    auto terms = schur_terms(la, n, false, limits);
    MultiPoly out(n, std::max(n + la.part(1) - 1, 0));
    for (const auto& [key, c] : *terms) out.add_term(key, c);
    return out;
}

std::map<Partition, MultiPoly> expand_product(const Partition& la, const Partition& mu, int n,
                                              const SchurLimits& limits) {
    if (la.length() > n || mu.length() > n)
        throw std::invalid_argument("number of variables is smaller than a partition length");
    if (la.size() + mu.size() > 15)
        throw BudgetExceeded("product degree exceeds the packed range");
    int M = n + la.part(1) + mu.part(1);
    if (n + M > 32) throw BudgetExceeded("variable universe exceeds 32 packed slots");

    // Over a common x count the y slots already agree, so embedding into the
    // (n, M) universe leaves packed keys unchanged.  The product is symmetric
    // in the x's, so only terms with weakly decreasing x exponents are kept;
    // everything the elimination reads off (leading monomials and their y
    // coefficients) lives on those representatives.
    auto ga = group_by_x(*schur_terms(la, n, false, limits), n);
    auto gb = group_by_x(*schur_terms(mu, n, false, limits), n);

    Accum rem(limits.max_terms, 1 << 16);
    for (const auto& [xa, ta] : ga)
        for (const auto& [xb, tb] : gb) {
            if (!x_sorted(xa + xb, n)) continue;
            for (const auto& [k1, c1] : ta)
                for (const auto& [k2, c2] : tb) {
                    long long c;
                    if (__builtin_mul_overflow(c1, c2, &c))
                        throw std::overflow_error("coefficient overflow in product");
                    rem.add(k1 + k2, c);
                }
        }

    std::map<Partition, MultiPoly> result;
    for (long long round = 0;; ++round) {
        if (round > 200'000) throw std::logic_error("basis elimination failed to terminate");
        bool found = false;
        int best_deg = -1;
        MonoKey best_x = 0;
        rem.for_each([&](MonoKey k, long long) {
            int d = x_degree(k, n);
            MonoKey xp = x_part(k, n);
            if (!found || d > best_deg || (d == best_deg && x_lex_less(best_x, xp, n))) {
                found = true;
                best_deg = d;
                best_x = xp;
            }
        });
        if (!found) break;

        std::vector<int> exps(n);
        for (int v = 0; v < n; ++v) exps[v] = MultiPoly::exp_of(best_x, v);
        for (int v = 0; v + 1 < n; ++v)
            if (exps[v] < exps[v + 1])
                throw std::logic_error("leading x monomial is not a partition");
        Partition nu{std::vector<int>(exps.begin(), exps.end())};

        std::vector<std::pair<MonoKey, long long>> cterms;
        rem.for_each([&](MonoKey k, long long v) {
            if (x_part(k, n) == best_x) cterms.push_back({k - best_x, v});
        });

        auto snu = schur_terms(nu, n, true, limits);
        for (const auto& [ky, cy] : cterms)
            for (const auto& [ks, cs] : *snu) {
                long long c;
                if (__builtin_mul_overflow(cy, cs, &c))
                    throw std::overflow_error("coefficient overflow in elimination");
                rem.add(ky + ks, -c);
            }

        MultiPoly cpoly(0, M);
        for (const auto& [ky, cy] : cterms) cpoly.add_term(ky >> (4 * n), cy);
        auto [it, inserted] = result.emplace(std::move(nu), std::move(cpoly));
        if (!inserted) throw std::logic_error("basis elimination revisited a partition");
    }
    return result;
}

bool coefficient_is_zero(const Partition& la, const Partition& mu, const Partition& nu,
                         const SchurLimits& limits) {
    int n = std::max(la.length() + mu.length(), nu.length());
    auto expansion = expand_product(la, mu, n, limits);
    auto it = expansion.find(nu);
    return it == expansion.end();
}

MultiPoly rewrite_in_beta(const MultiPoly& c) { return c.rewrite_in_beta(); }

void clear_schur_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    schur_cache.clear();
}

}  // namespace lrvan
