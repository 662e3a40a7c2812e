#include "rankmet/gf.hpp"

#include "rankmet/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rankmet {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<int>; // coefficients low-to-high, values in [0, p)

int mod_inv(int a, int p) {
    // Fermat; p is prime and a != 0 mod p
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic f
    const size_t d = f.size() - 1;
    for (size_t i = r.size(); i-- > d;) {
        int c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (size_t j = 0; j < d; ++j) r[i - d + j] = ((r[i - d + j] - c * f[j]) % p + p) % p;
    }
    r.resize(d);
    poly_trim(r);
    return r;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, int p) {
    Poly r = {1};
    while (exp) {
        if (exp & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, int p) {
    poly_trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int linv = mod_inv(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int c = a.back() * linv % p;
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// f monic of degree d with nonzero constant term; Rabin test.
bool poly_irreducible(const Poly& f, int p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    const Poly x = {0, 1};
    // x^{p^d} mod f, by iterated p-th powers
    Poly h = x;
    for (int i = 0; i < d; ++i) h = poly_powmod(h, p, f, p);
    Poly hx = h;
    // h - x, reduced mod f (matters only when deg f = 1)
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = ((hx[1] - 1) % p + p) % p;
    poly_trim(hx);
    if (!hx.empty()) hx = poly_mod(hx, f, p);
    if (!hx.empty()) return false;
    for (std::uint64_t r : prime_factors(d)) {
        Poly t = x;
        for (std::uint64_t i = 0; i < d / r; ++i) t = poly_powmod(t, p, f, p);
        if (t.size() < 2) t.resize(2, 0);
        t[1] = ((t[1] - 1) % p + p) % p;
        poly_trim(t);
        Poly g = poly_gcd(f, t, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool x_is_primitive(const Poly& f, int p, std::uint32_t order) {
    const Poly x = {0, 1};
    for (std::uint64_t r : prime_factors(order)) {
        Poly t = poly_powmod(x, order / r, f, p);
        if (t.size() == 1 && t[0] == 1) return false;
    }
    return true;
}

} // namespace

std::vector<int> FieldCtx::digits(Elem a) const {
    std::vector<int> d(static_cast<size_t>(e) * m, 0);
    for (size_t i = 0; i < d.size() && a; ++i) {
        d[i] = static_cast<int>(a % p);
        a /= p;
    }
    return d;
}

Elem FieldCtx::from_digits(const std::vector<int>& d) const {
    Elem r = 0;
    for (size_t i = d.size(); i-- > 0;) r = r * p + d[i];
    return r;
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (p == 2) return a ^ b;
    Elem r = 0;
    std::uint32_t place = 1;
    while (a || b) {
        int s = static_cast<int>(a % p) + static_cast<int>(b % p);
        if (s >= p) s -= p;
        r += static_cast<Elem>(s) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

Elem FieldCtx::neg(Elem a) const {
    if (p == 2) return a;
    Elem r = 0;
    std::uint32_t place = 1;
    while (a) {
        int d = static_cast<int>(a % p);
        if (d) r += static_cast<Elem>(p - d) * place;
        a /= p;
        place *= p;
    }
    return r;
}

Elem FieldCtx::inv(Elem a) const {
    check(a != 0, errc::invalid_args, "inverse of zero");
    return exp_[(order - log_[a]) % order];
}

Elem FieldCtx::pow(Elem a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    Elem r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::log(Elem a) const {
    check(a != 0, errc::invalid_args, "log of zero");
    return log_[a];
}

std::vector<Elem> FieldCtx::expand(Elem x) const {
    std::vector<int> d = digits(x);
    std::vector<Elem> coords(m, 0);
    const int em = e * m;
    for (int j = 0; j < m; ++j) {
        Elem c = 0;
        Elem spow = 1;
        for (int i = 0; i < e; ++i) {
            int digit = 0;
            const int row = j * e + i;
            for (int col = 0; col < em; ++col) digit = (digit + expand_inv_[row * em + col] * d[col]) % p;
            if (digit) c = add(c, mul(static_cast<Elem>(digit), spow));
            spow = mul(spow, s_);
        }
        coords[j] = c;
    }
    return coords;
}

Elem FieldCtx::lift(const std::vector<Elem>& coords) const {
    check(static_cast<int>(coords.size()) == m, errc::dimension_mismatch, "lift expects m coordinates");
    Elem r = 0;
    for (int j = 0; j < m; ++j) r = add(r, mul(coords[j], gamma[j]));
    return r;
}

std::string FieldCtx::elem_to_human(Elem a) const {
    if (a == 0) return "0";
    return "g^" + std::to_string(log_[a]);
}

Elem FieldCtx::parse_elem(const std::string& s) const {
    check(!s.empty(), errc::parse_error, "empty element literal");
    if (s == "0") return 0;
    if (s == "g") return g();
    if (s.rfind("g^", 0) == 0) {
        std::uint64_t i = 0;
        for (size_t k = 2; k < s.size(); ++k) {
            check(s[k] >= '0' && s[k] <= '9', errc::parse_error, "bad element literal: " + s);
            i = i * 10 + (s[k] - '0');
        }
        return gpow(i);
    }
    std::uint64_t v = 0;
    for (char ch : s) {
        check(ch >= '0' && ch <= '9', errc::parse_error, "bad element literal: " + s);
        v = v * 10 + (ch - '0');
        check(v < size, errc::parse_error, "element encoding out of range: " + s);
    }
    return static_cast<Elem>(v);
}

Elem FieldCtx::check_elem(std::uint64_t raw) const {
    check(raw < size, errc::parse_error, "element encoding out of range: " + std::to_string(raw));
    return static_cast<Elem>(raw);
}

FieldPtr build_field(int p, int e, int m, const std::optional<std::vector<int>>& modulus,
                     std::uint32_t size_cap, const std::optional<std::vector<Elem>>& custom_gamma) {
    check(p >= 2 && is_prime_u64(static_cast<std::uint64_t>(p)), errc::not_prime,
          "p = " + std::to_string(p) + " is not prime");
    check(e >= 1 && m >= 1, errc::invalid_args, "e and m must be positive");
    const int em = e * m;
    std::uint64_t sz = 1;
    for (int i = 0; i < em; ++i) {
        sz *= static_cast<std::uint64_t>(p);
        if (sz > size_cap)
            throw Error(errc::field_too_large,
                        "p^(e*m) exceeds cap " + std::to_string(size_cap));
    }

    auto ctx = std::make_shared<FieldCtx>();
    ctx->p = p;
    ctx->e = e;
    ctx->m = m;
    ctx->size = static_cast<std::uint32_t>(sz);
    ctx->order = ctx->size - 1;
    ctx->q = 1;
    for (int i = 0; i < e; ++i) ctx->q *= p;

    auto validate = [&](const Poly& f) {
        check(static_cast<int>(f.size()) == em + 1, errc::invalid_args,
              "modulus must have degree e*m = " + std::to_string(em));
        for (int c : f)
            check(c >= 0 && c < p, errc::invalid_args, "modulus coefficients must lie in [0, p)");
        check(f.back() == 1, errc::invalid_args, "modulus must be monic");
        check(f.front() != 0, errc::invalid_args, "modulus must have nonzero constant term");
    };

    Poly f;
    if (modulus) {
        f = *modulus;
        validate(f);
        check(poly_irreducible(f, p), errc::reducible, "supplied modulus factors over F_p");
        check(x_is_primitive(f, p, ctx->order), errc::not_primitive_modulus,
              "class of x is not a primitive element for the supplied modulus");
    } else {
        bool found = false;
        for (std::uint64_t low = 1; low < sz && !found; ++low) {
            Poly cand(em + 1, 0);
            std::uint64_t v = low;
            for (int i = 0; i < em; ++i) {
                cand[i] = static_cast<int>(v % p);
                v /= p;
            }
            cand[em] = 1;
            if (cand[0] == 0) continue;
            if (!poly_irreducible(cand, p)) continue;
            if (!x_is_primitive(cand, p, ctx->order)) continue;
            f = cand;
            found = true;
        }
        check(found, errc::internal_inconsistency, "no primitive polynomial found");
    }
    ctx->modulus = f;

    // log/antilog tables by iterated multiplication with x
    ctx->exp_.assign(ctx->order, 0);
    ctx->log_.assign(ctx->size, 0);
    std::vector<int> cur(em, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < ctx->order; ++i) {
        Elem enc = 0;
        for (int j = em; j-- > 0;) enc = enc * p + cur[j];
        ctx->exp_[i] = enc;
        ctx->log_[enc] = i;
        // cur *= x mod f
        int top = cur[em - 1];
        for (int j = em - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top) {
            for (int j = 0; j < em; ++j) cur[j] = ((cur[j] - top * f[j]) % p + p) % p;
        }
    }
    {
        Elem closing = 0;
        for (int j = em; j-- > 0;) closing = closing * p + cur[j];
        check(closing == 1, errc::internal_inconsistency, "generator cycle did not close");
    }

    ctx->subfield_stride = ctx->order / (ctx->q - 1);
    ctx->s_ = ctx->exp_[ctx->subfield_stride % ctx->order];
    ctx->subfield.push_back(0);
    for (std::uint32_t j = 0; j + 1 < ctx->q; ++j)
        ctx->subfield.push_back(ctx->exp_[(static_cast<std::uint64_t>(j) * ctx->subfield_stride) % ctx->order]);
    std::sort(ctx->subfield.begin(), ctx->subfield.end());

    if (custom_gamma) {
        check(static_cast<int>(custom_gamma->size()) == m, errc::invalid_args,
              "gamma must have m elements");
        for (Elem gj : *custom_gamma) ctx->check_elem(gj);
        ctx->gamma = *custom_gamma;
    } else {
        ctx->gamma.resize(m);
        for (int j = 0; j < m; ++j) ctx->gamma[j] = ctx->exp_[j % ctx->order];
    }

    // change-of-coordinates matrix over F_p: column j*e+i holds gamma_j * s^i
    std::vector<int> M(static_cast<size_t>(em) * em, 0);
    for (int j = 0; j < m; ++j) {
        Elem spow = 1;
        for (int i = 0; i < e; ++i) {
            Elem prod = ctx->mul(ctx->gamma[j], spow);
            std::vector<int> d = ctx->digits(prod);
            for (int row = 0; row < em; ++row) M[static_cast<size_t>(row) * em + j * e + i] = d[row];
            spow = ctx->mul(spow, ctx->s_);
        }
    }
    // invert M over F_p (Gauss-Jordan); singular means gamma is dependent
    std::vector<int> inv(static_cast<size_t>(em) * em, 0);
    for (int i = 0; i < em; ++i) inv[static_cast<size_t>(i) * em + i] = 1;
    {
        std::vector<int> A = M;
        for (int col = 0; col < em; ++col) {
            int piv = -1;
            for (int r = col; r < em; ++r)
                if (A[static_cast<size_t>(r) * em + col]) {
                    piv = r;
                    break;
                }
            check(piv >= 0, errc::invalid_args, "gamma is not F_q-linearly independent");
            if (piv != col) {
                for (int c = 0; c < em; ++c) {
                    std::swap(A[static_cast<size_t>(piv) * em + c], A[static_cast<size_t>(col) * em + c]);
                    std::swap(inv[static_cast<size_t>(piv) * em + c], inv[static_cast<size_t>(col) * em + c]);
                }
            }
            int pinv = mod_inv(A[static_cast<size_t>(col) * em + col], p);
            for (int c = 0; c < em; ++c) {
                A[static_cast<size_t>(col) * em + c] = A[static_cast<size_t>(col) * em + c] * pinv % p;
                inv[static_cast<size_t>(col) * em + c] = inv[static_cast<size_t>(col) * em + c] * pinv % p;
            }
            for (int r = 0; r < em; ++r) {
                if (r == col) continue;
                int factor = A[static_cast<size_t>(r) * em + col];
                if (!factor) continue;
                for (int c = 0; c < em; ++c) {
                    A[static_cast<size_t>(r) * em + c] =
                        ((A[static_cast<size_t>(r) * em + c] - factor * A[static_cast<size_t>(col) * em + c]) % p + p) % p;
                    inv[static_cast<size_t>(r) * em + c] =
                        ((inv[static_cast<size_t>(r) * em + c] - factor * inv[static_cast<size_t>(col) * em + c]) % p + p) % p;
                }
            }
        }
    }
    ctx->expand_inv_ = std::move(inv);

    return ctx;
}

} // namespace rankmet
