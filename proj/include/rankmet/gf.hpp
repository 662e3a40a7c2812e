#ifndef RANKMET_GF_HPP
#define RANKMET_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rankmet {

// Packed encoding of a field element: value = sum c_i * p^i over the
// coefficient vector (c_0, ..., c_{em-1}) of its polynomial representative.
// 0 encodes zero; the encoding is bijective and serialization-stable.
using Elem = std::uint32_t;

// Exact arithmetic in the tower F_p <= F_q = F_{p^e} <= F_{q^m} = F_{p^{em}}.
//
// The full field is realized as F_p[x]/(modulus) with multiplication through
// discrete log/antilog tables of a primitive generator g (the class of x).
// F_q sits inside as {0} together with the powers of g^subfield_stride, and
// gamma is an ordered F_q-basis of F_{q^m} used for coordinate expansion.
class FieldCtx {
  public:
    int p = 0;            // characteristic
    int e = 0;            // q = p^e
    int m = 0;            // extension degree of F_{q^m} over F_q
    std::vector<int> modulus; // c_0..c_{em}, monic, irreducible over F_p

    std::uint32_t size = 0;   // p^{em}
    std::uint32_t q = 0;      // p^e
    std::uint32_t order = 0;  // size - 1
    std::uint32_t subfield_stride = 0; // (q^m-1)/(q-1)

    std::vector<Elem> gamma;      // the m basis elements
    std::vector<Elem> subfield;   // the q elements of the embedded F_q, ascending

    Elem g() const { return exp_[1 % order]; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= order) s -= order;
        return exp_[s];
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t n) const; // repeated squaring
    Elem gpow(std::uint64_t i) const { return exp_[i % order]; }
    std::uint32_t log(Elem a) const; // a != 0

    // x -> x^q, the q-Frobenius of the extension F_{q^m}/F_q
    Elem frobenius(Elem x) const { return pow(x, q); }

    bool in_subfield(Elem a) const { return a == 0 || log_[a] % subfield_stride == 0; }

    // gamma-coordinates of x: the unique (c_1..c_m) in F_q^m with
    // x = sum c_j gamma_j. Entries are embedded-subfield elements.
    std::vector<Elem> expand(Elem x) const;
    Elem lift(const std::vector<Elem>& coords) const;

    std::string elem_to_human(Elem a) const; // "0" or "g^i"
    Elem parse_elem(const std::string& s) const;
    Elem check_elem(std::uint64_t raw) const;

  private:
    friend std::shared_ptr<const FieldCtx> build_field(int, int, int,
                                                       const std::optional<std::vector<int>>&,
                                                       std::uint32_t,
                                                       const std::optional<std::vector<Elem>>&);
    std::vector<std::uint32_t> log_; // index: encoding; log_[0] unused
    std::vector<Elem> exp_;          // g^i, i in [0, order)
    std::vector<int> expand_inv_;    // em x em inverse over F_p, row-major
    Elem s_ = 0;                     // generator of embedded F_q*, g^stride

    std::vector<int> digits(Elem a) const;
    Elem from_digits(const std::vector<int>& d) const;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Builds the tower context. With no modulus, the deterministically first
// primitive polynomial of degree e*m over F_p (lexicographic on the
// coefficient sequence c_0..c_{em-1}) is used. A custom gamma must be an
// F_q-linearly independent m-tuple; default is {1, g, ..., g^{m-1}}.
FieldPtr build_field(int p, int e, int m,
                     const std::optional<std::vector<int>>& modulus = std::nullopt,
                     std::uint32_t size_cap = 1u << 20,
                     const std::optional<std::vector<Elem>>& custom_gamma = std::nullopt);

bool is_prime_u64(std::uint64_t n);

} // namespace rankmet

#endif
