#include "leonard/field.hpp"

#include <cctype>

namespace leonard {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p; // residues < 2^31, product < 2^62
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

FieldSpec FieldSpec::gfp(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw field_error("GF(p) modulus must be a prime below 2^31, got " +
                          std::to_string(p));
    return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
    return kind_ == Kind::Rational ? "rational" : "gfp:" + std::to_string(p_);
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
    if (spec.kind() == FieldSpec::Kind::PrimeField)
        return FieldElement(spec, std::uint64_t{0});
    return FieldElement(spec, mpq_class(0));
}

FieldElement FieldElement::one(const FieldSpec& spec) {
    if (spec.kind() == FieldSpec::Kind::PrimeField)
        return FieldElement(spec, std::uint64_t{1 % spec.p()});
    return FieldElement(spec, mpq_class(1));
}

FieldElement FieldElement::from_integer(long v, const FieldSpec& spec) {
    if (spec.kind() == FieldSpec::Kind::PrimeField) {
        std::int64_t r = v % static_cast<std::int64_t>(spec.p());
        if (r < 0) r += spec.p();
        return FieldElement(spec, static_cast<std::uint64_t>(r));
    }
    return FieldElement(spec, mpq_class(v));
}

FieldElement FieldElement::from_mpq(const mpq_class& q, const FieldSpec& spec) {
    if (spec.kind() == FieldSpec::Kind::Rational) {
        mpq_class c = q;
        c.canonicalize();
        return FieldElement(spec, std::move(c));
    }
    mpz_class p(static_cast<unsigned long>(spec.p()));
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    FieldElement n(spec, num.get_ui());
    FieldElement d(spec, den.get_ui());
    return n / d;
}

FieldElement FieldElement::parse(const std::string& text, const FieldSpec& spec) {
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> mpz_class {
        if (s.empty()) throw field_error("empty integer literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw field_error("malformed integer: '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw field_error("malformed integer: '" + s + "'");
        return mpz_class(s);
    };
    mpz_class num = parse_int(slash == std::string::npos ? text : text.substr(0, slash));
    mpz_class den = 1;
    if (slash != std::string::npos) {
        den = parse_int(text.substr(slash + 1));
        if (den == 0) throw field_error("zero denominator in '" + text + "'");
    }
    return from_mpq(mpq_class(num, den), spec);
}

bool FieldElement::is_zero() const {
    if (spec_.kind() == FieldSpec::Kind::PrimeField)
        return std::get<std::uint64_t>(value_) == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const { return *this == one(spec_); }

void FieldElement::check_same(const FieldElement& o) const {
    if (spec_ != o.spec_)
        throw field_error("mixed-field arithmetic: " + spec_.to_string() +
                          " vs " + o.spec_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    if (spec_.kind() == FieldSpec::Kind::PrimeField) {
        std::uint64_t s = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_);
        if (s >= spec_.p()) s -= spec_.p();
        return FieldElement(spec_, s);
    }
    return FieldElement(spec_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    if (spec_.kind() == FieldSpec::Kind::PrimeField) {
        std::uint64_t a = std::get<std::uint64_t>(value_);
        std::uint64_t b = std::get<std::uint64_t>(o.value_);
        return FieldElement(spec_, a >= b ? a - b : a + spec_.p() - b);
    }
    return FieldElement(spec_, mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(o.value_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    if (spec_.kind() == FieldSpec::Kind::PrimeField)
        return FieldElement(spec_, mod_mul(std::get<std::uint64_t>(value_),
                                           std::get<std::uint64_t>(o.value_), spec_.p()));
    return FieldElement(spec_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inv();
}

FieldElement FieldElement::operator-() const {
    if (spec_.kind() == FieldSpec::Kind::PrimeField) {
        std::uint64_t a = std::get<std::uint64_t>(value_);
        return FieldElement(spec_, a == 0 ? 0 : spec_.p() - a);
    }
    return FieldElement(spec_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw field_error("division by zero");
    if (spec_.kind() == FieldSpec::Kind::PrimeField)
        return FieldElement(spec_, mod_pow(std::get<std::uint64_t>(value_),
                                           spec_.p() - 2, spec_.p()));
    return FieldElement(spec_, mpq_class(1 / std::get<mpq_class>(value_)));
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    if (spec_.kind() == FieldSpec::Kind::PrimeField)
        return std::get<std::uint64_t>(value_) == std::get<std::uint64_t>(o.value_);
    return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
}

std::string FieldElement::to_string() const {
    if (spec_.kind() == FieldSpec::Kind::PrimeField)
        return std::to_string(std::get<std::uint64_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

const mpq_class& FieldElement::rational() const {
    if (spec_.kind() != FieldSpec::Kind::Rational)
        throw field_error("rational() on a GF(p) element");
    return std::get<mpq_class>(value_);
}

std::uint64_t FieldElement::residue() const {
    if (spec_.kind() != FieldSpec::Kind::PrimeField)
        throw field_error("residue() on a rational element");
    return std::get<std::uint64_t>(value_);
}

} // namespace leonard
