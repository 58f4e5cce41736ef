#include "lrvan/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrvan {

namespace {

void check_universe(int nx, int ny) {
    if (nx < 0 || ny < 0 || nx + ny > 32)
        throw std::invalid_argument("polynomial universe limited to 32 packed variables");
}

// binomial(n, k) for n <= 15
long long small_binomial(int n, int k) {
    long long r = 1;
    for (int a = 1; a <= k; ++a) r = r * (n - k + a) / a;
    return r;
}

}  // namespace

MultiPoly::MultiPoly(int nx, int ny) : nx_(nx), ny_(ny) { check_universe(nx, ny); }

MultiPoly MultiPoly::constant(int nx, int ny, const BigInt& c) {
    MultiPoly p(nx, ny);
    p.add_term(0, c);
    return p;
}

MultiPoly MultiPoly::x_var(int nx, int ny, int i) {
    MultiPoly p(nx, ny);
    if (i < 1 || i > nx) throw std::invalid_argument("x variable index out of range");
    p.add_term(with_exp(0, i - 1, 1), 1);
    return p;
}

MultiPoly MultiPoly::y_var(int nx, int ny, int j) {
    MultiPoly p(nx, ny);
    if (j < 1 || j > ny) throw std::invalid_argument("y variable index out of range");
    p.add_term(with_exp(0, nx + j - 1, 1), 1);
    return p;
}

MonoKey MultiPoly::with_exp(MonoKey key, int slot, int e) {
    if (e < 0 || e > 15) throw std::invalid_argument("packed exponent out of range");
    MonoKey mask = static_cast<MonoKey>(0xF) << (4 * slot);
    return (key & ~mask) | (static_cast<MonoKey>(e) << (4 * slot));
}

int MultiPoly::total_degree(MonoKey key, int nvars) {
    int d = 0;
    for (int v = 0; v < nvars; ++v) d += exp_of(key, v);
    return d;
}

MonoKey MultiPoly::pack(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != nvars())
        throw std::invalid_argument("exponent vector length does not match universe");
    MonoKey key = 0;
    for (int v = 0; v < nvars(); ++v) key = with_exp(key, v, exps[v]);
    return key;
}

void MultiPoly::add_term(MonoKey key, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt MultiPoly::coefficient(MonoKey key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (nx_ != other.nx_ || ny_ != other.ny_)
        throw std::invalid_argument("polynomial universes differ");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (nx_ != other.nx_ || ny_ != other.ny_)
        throw std::invalid_argument("polynomial universes differ");
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (nx_ != other.nx_ || ny_ != other.ny_)
        throw std::invalid_argument("polynomial universes differ");
    MultiPoly out(nx_, ny_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : other.terms_) {
            for (int v = 0; v < nvars(); ++v)
                if (exp_of(k1, v) + exp_of(k2, v) > 15)
                    throw std::overflow_error("packed exponent overflow in product");
            out.add_term(k1 + k2, c1 * c2);
        }
    return out;
}

MultiPoly MultiPoly::embedded(int nx2, int ny2) const {
    if (nx2 < nx_ || ny2 < ny_)
        throw std::invalid_argument("embedding universe is smaller than the current one");
    MultiPoly out(nx2, ny2);
    for (const auto& [key, c] : terms_) {
        MonoKey k2 = 0;
        for (int v = 0; v < nx_; ++v) k2 = with_exp(k2, v, exp_of(key, v));
        for (int j = 0; j < ny_; ++j) k2 = with_exp(k2, nx2 + j, exp_of(key, nx_ + j));
        out.add_term(k2, c);
    }
    return out;
}

MultiPoly MultiPoly::specialize_y_zero() const {
    MultiPoly out(nx_, 0);
    for (const auto& [key, c] : terms_) {
        bool pure = true;
        for (int j = 0; j < ny_ && pure; ++j)
            if (exp_of(key, nx_ + j) != 0) pure = false;
        if (pure) out.add_term(key, c);
    }
    return out;
}

MultiPoly MultiPoly::swap_x(int a, int b) const {
    if (a < 1 || a > nx_ || b < 1 || b > nx_)
        throw std::invalid_argument("x variable index out of range");
    MultiPoly out(nx_, ny_);
    for (const auto& [key, c] : terms_) {
        MonoKey k2 = with_exp(key, a - 1, exp_of(key, b - 1));
        k2 = with_exp(k2, b - 1, exp_of(key, a - 1));
        out.add_term(k2, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute_shift() const {
    check_universe(nx_, ny_ + 1);
    int tslot = nx_ + ny_;
    MultiPoly out(nx_, ny_ + 1);
    // expand prod_j (y_j + t)^{e_j} one y at a time
    for (const auto& [key, c] : terms_) {
        std::vector<std::pair<MonoKey, BigInt>> acc{{0, c}};
        for (int v = 0; v < nx_; ++v)
            for (auto& t : acc) t.first = with_exp(t.first, v, exp_of(key, v));
        for (int j = 0; j < ny_; ++j) {
            int e = exp_of(key, nx_ + j);
            if (e == 0) continue;
            std::vector<std::pair<MonoKey, BigInt>> next;
            next.reserve(acc.size() * (e + 1));
            for (const auto& [k, coeff] : acc)
                for (int a = 0; a <= e; ++a) {
                    MonoKey k2 = with_exp(k, nx_ + j, a);
                    int te = exp_of(k, tslot) + (e - a);
                    k2 = with_exp(k2, tslot, te);
                    next.push_back({k2, coeff * small_binomial(e, a)});
                }
            acc = std::move(next);
        }
        for (const auto& [k, coeff] : acc) out.add_term(k, coeff);
    }
    return out;
}

bool MultiPoly::shift_invariant_in_y() const {
    return substitute_shift() == embedded(nx_, ny_ + 1);
}

MultiPoly MultiPoly::rewrite_in_beta() const {
    if (nx_ != 0)
        throw std::invalid_argument("difference rewrite applies to polynomials in the y's alone");
    if (!shift_invariant_in_y())
        throw std::invalid_argument(
            "polynomial is not invariant under a common shift of the y's");
    const int nb = std::max(ny_ - 1, 0);
    MultiPoly out(0, nb);
    for (const auto& [key, c] : terms_) {
        if (ny_ > 0 && exp_of(key, 0) != 0) continue;  // y_1 becomes the empty sum
        MultiPoly term = MultiPoly::constant(0, nb, c);
        for (int j = 1; j < ny_; ++j) {
            int e = exp_of(key, j);
            if (e == 0) continue;
            MultiPoly sum(0, nb);  // y_{j+1} = b_1 + ... + b_j
            for (int b = 1; b <= j; ++b) sum += MultiPoly::y_var(0, nb, b);
            for (int rep = 0; rep < e; ++rep) term = term * sum;
        }
        out += term;
    }
    return out;
}

bool MultiPoly::all_coefficients_nonnegative() const {
    for (const auto& [key, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string MultiPoly::to_string(const char* xname, const char* yname) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<MonoKey, BigInt>> sorted(terms_.begin(), terms_.end());
    int nv = nvars();
    auto graded_lex_before = [&](MonoKey a, MonoKey b) {
        int da = total_degree(a, nv), db = total_degree(b, nv);
        if (da != db) return da > db;
        for (int v = 0; v < nv; ++v) {
            int ea = exp_of(a, v), eb = exp_of(b, v);
            if (ea != eb) return ea > eb;
        }
        return false;
    };
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& p, const auto& q) { return graded_lex_before(p.first, q.first); });
    std::string out;
    for (const auto& [key, c] : sorted) {
        if (!out.empty()) out += ' ';
        out += c < 0 ? '-' : '+';
        BigInt mag = boost::multiprecision::abs(c);
        out += mag.str();
        for (int v = 0; v < nv; ++v) {
            int e = exp_of(key, v);
            if (e == 0) continue;
            out += '*';
            out += v < nx_ ? xname : yname;
            out += std::to_string(v < nx_ ? v + 1 : v - nx_ + 1);
            if (e > 1) out += '^' + std::to_string(e);
        }
    }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nx_ != b.nx_ || a.ny_ != b.ny_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [key, c] : a.terms_) {
        auto it = b.terms_.find(key);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

}  // namespace lrvan
