#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "quiverh1/bigint.hpp"
#include "quiverh1/errors.hpp"

namespace qh1 {

inline bool is_prime_u32(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Runtime description of the coefficient field (exact ℚ or 𝔽_p).
struct FieldSpec {
    bool rational = true;
    uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{true, 0}; }
    static FieldSpec prime(uint32_t p) {
        if (!is_prime_u32(p)) throw Error(ErrorKind::NotPrime, "field prime " + std::to_string(p) + ": not a prime");
        return FieldSpec{false, p};
    }
    long long characteristic() const { return rational ? 0 : p; }
    std::string name() const { return rational ? "rational" : "prime " + std::to_string(p); }
    bool operator==(const FieldSpec& o) const { return rational == o.rational && p == o.p; }
};

struct RationalField {
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long long v) const { return Rat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Rat(1) / a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    long long characteristic() const { return 0; }
    std::string to_string(const Elem& a) const { return a.to_string(); }
    FieldSpec spec() const { return FieldSpec::rationals(); }
};

struct PrimeField {
    uint32_t p;
    using Elem = uint32_t;

    explicit PrimeField(uint32_t prime) : p(prime) {
        if (!is_prime_u32(prime)) throw Error(ErrorKind::NotPrime, "PrimeField: modulus must be prime");
    }
    Elem zero() const { return 0; }
    Elem one() const { return p > 1 ? 1 : 0; }
    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
    Elem add(Elem a, Elem b) const { uint64_t s = static_cast<uint64_t>(a) + b; return s >= p ? static_cast<Elem>(s - p) : static_cast<Elem>(s); }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    long long characteristic() const { return p; }
    std::string to_string(Elem a) const { return std::to_string(a); }
    FieldSpec spec() const { return FieldSpec{false, p}; }
};

/// Dispatch a callable on the concrete field type selected by `spec`.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.rational) return fn(RationalField{});
    return fn(PrimeField(spec.p));
}

} // namespace qh1
