#include "rlie/field.hpp"

#include <map>
#include <mutex>

#include "rlie/error.hpp"

namespace rlie {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<unsigned>;

// Remainder of a modulo the monic polynomial m, coefficients low to high.
Coeffs poly_rem(Coeffs a, const Coeffs& m, unsigned p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i)
                a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        }
        a.pop_back();
    }
    return a;
}

bool is_irreducible(const Coeffs& f, unsigned p) {
    const unsigned k = unsigned(f.size() - 1);
    for (unsigned d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            Coeffs g(d + 1, 0);
            g[d] = 1;
            std::uint64_t t = m;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = unsigned(t % p);
                t /= p;
            }
            Coeffs r = poly_rem(f, g, p);
            bool zero = true;
            for (unsigned c : r)
                if (c) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FieldPtr Field::make(unsigned p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw DomainError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw BoundExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                " exceeds 2^20");
    }
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(p, k));
    cache.emplace(std::make_pair(p, k), f);
    return f;
}

Field::Field(unsigned p, unsigned k) : p_(p), k_(k), q_(1) {
    for (unsigned i = 0; i < k; ++i) q_ *= p;

    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        for (std::uint32_t m = 0; m < q_; ++m) {
            Coeffs f(k + 1, 0);
            f[k] = 1;
            std::uint32_t t = m;
            for (unsigned i = 0; i < k; ++i) {
                f[i] = t % p;
                t /= p;
            }
            if (f[0] != 0 && is_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }

    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        Elem r = 0, scale = 1, t = a;
        for (unsigned i = 0; i < k_; ++i) {
            unsigned d = t % p_;
            t /= p_;
            r += ((p_ - d) % p_) * scale;
            scale *= p_;
        }
        neg_[a] = r;
    }
    if (k_ > 1 && p_ > 2 && q_ <= 256) {
        add_table_.resize(std::size_t(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = add_digits(a, b);
    }

    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };
    const std::uint64_t n = q_ - 1;
    const auto factors = prime_factors(n);
    for (Elem g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto r : factors)
            if (slow_pow(g, n / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen_ = g;
            break;
        }
    }

    exp_.resize(2 * n);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint64_t e = 0; e < n; ++e) {
        exp_[e] = cur;
        exp_[e + n] = cur;
        log_[cur] = std::uint32_t(e);
        cur = mul_slow(cur, gen_);
    }
}

Elem Field::add_digits(Elem a, Elem b) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned d = (a % p_ + b % p_) % p_;
        a /= p_;
        b /= p_;
        r += d * scale;
        scale *= p_;
    }
    return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
    auto ca = coords(a), cb = coords(b);
    Coeffs prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    if (k_ > 1) prod = poly_rem(prod, modulus_, p_);
    prod.resize(k_, 0);
    return from_coords(prod);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    const std::uint32_t n = q_ - 1;
    return exp_[(n - log_[a]) % n];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = q_ - 1;
    return exp_[(std::uint64_t(log_[a]) * (e % n)) % n];
}

Elem Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Elem(r);
}

Elem Field::pth_root(Elem a) const {
    std::uint64_t e = 1;
    for (unsigned i = 1; i < k_; ++i) e *= p_;
    return pow(a, e);
}

std::optional<Elem> Field::nth_root(Elem a, std::uint64_t n) const {
    if (q_ > kMaxScanOrder) throw BoundExceeded("nth_root scans fields of order at most 2^16");
    for (Elem b = 0; b < q_; ++b)
        if (pow(b, n) == a) return b;
    return std::nullopt;
}

bool Field::is_quadratic_residue(Elem a) const {
    if (k_ != 1) throw DomainError("quadratic residue test needs a prime field");
    if (p_ == 2) throw DomainError("quadratic residue test needs odd p");
    if (a == 0) throw DomainError("quadratic residue test of zero");
    return pow(a, (p_ - 1) / 2) == 1;
}

std::optional<Elem> Field::artin_schreier_root(Elem c) const {
    if (q_ > kMaxScanOrder) throw BoundExceeded("artin_schreier_root scans fields of order at most 2^16");
    for (Elem b = 0; b < q_; ++b)
        if (sub(pow(b, p_), b) == c) return b;
    return std::nullopt;
}

std::vector<unsigned> Field::coords(Elem a) const {
    std::vector<unsigned> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coords(const std::vector<unsigned>& c) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += (i < c.size() ? c[i] % p_ : 0) * scale;
        scale *= p_;
    }
    return r;
}

std::string Field::to_string(Elem a) const {
    if (a < p_) return std::to_string(a);
    return "g^" + std::to_string(log_[a]);
}

std::string Field::modulus_string() const {
    std::string s;
    for (int i = int(k_); i >= 0; --i) {
        unsigned c = modulus_[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c);
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

FieldEmbedding::FieldEmbedding(FieldPtr sub, FieldPtr super) : sub_(std::move(sub)), super_(std::move(super)) {
    if (sub_->p() != super_->p() || super_->k() % sub_->k() != 0)
        throw DomainError("no embedding from F_" + std::to_string(sub_->order()) + " into F_" +
                          std::to_string(super_->order()));
    const Field& S = *sub_;
    const Field& T = *super_;
    table_.resize(S.order());
    if (S.k() == 1) {
        for (Elem a = 0; a < S.order(); ++a) table_[a] = a;
        return;
    }
    const auto& m = S.modulus();
    std::optional<Elem> root;
    for (Elem r = 0; r < T.order() && !root; ++r) {
        Elem acc = 0;
        for (int i = int(m.size()) - 1; i >= 0; --i) acc = T.add(T.mul(acc, r), Elem(m[i]));
        if (acc == 0) root = r;
    }
    if (!root) throw Error("modulus has no root in the extension field");
    for (Elem a = 0; a < S.order(); ++a) {
        auto c = S.coords(a);
        Elem acc = 0;
        for (int i = int(c.size()) - 1; i >= 0; --i) acc = T.add(T.mul(acc, *root), Elem(c[i]));
        table_[a] = acc;
    }
}

}  // namespace rlie
