#ifndef LEONARD_FIELD_HPP
#define LEONARD_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace leonard {

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field descriptor: the rationals, or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
    enum class Kind { Rational, PrimeField };

    static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }
    static FieldSpec gfp(std::uint32_t p);

    Kind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }

    // 0 for the rationals, p for GF(p).
    std::uint64_t characteristic() const {
        return kind_ == Kind::Rational ? 0 : p_;
    }

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Exact scalar: a reduced fraction over Q, or a residue in [0, p) over GF(p).
/// Immutable value type; all arithmetic is exact.
class FieldElement {
public:
    FieldElement() : spec_(FieldSpec::rational()), value_(std::uint64_t{0}) {}

    static FieldElement zero(const FieldSpec& spec);
    static FieldElement one(const FieldSpec& spec);
    static FieldElement from_integer(long v, const FieldSpec& spec);
    static FieldElement from_mpq(const mpq_class& q, const FieldSpec& spec);

    // Accepts "n", "-n", or "n/m". Over GF(p), "a/b" means a*b^{-1} mod p.
    static FieldElement parse(const std::string& text, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Canonical text: reduced fraction "n" / "n/m" over Q, residue over GF(p).
    std::string to_string() const;

    // Rational value; only valid over Q.
    const mpq_class& rational() const;
    // Residue in [0, p); only valid over GF(p).
    std::uint64_t residue() const;

private:
    FieldElement(const FieldSpec& spec, std::uint64_t r)
        : spec_(spec), value_(r) {}
    FieldElement(const FieldSpec& spec, mpq_class q)
        : spec_(spec), value_(std::move(q)) {}

    void check_same(const FieldElement& o) const;

    FieldSpec spec_;
    std::variant<std::uint64_t, mpq_class> value_;
};

} // namespace leonard

#endif
