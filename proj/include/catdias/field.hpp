#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace catdias {

// Integers modulo a prime q, stored in [0, q).
class PrimeField {
public:
    using Element = std::int64_t;

    static constexpr std::int64_t default_modulus = 32003;

    explicit PrimeField(std::int64_t modulus = default_modulus);

    std::int64_t modulus() const { return q_; }
    std::string name() const;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t v) const { return ((v % q_) + q_) % q_; }
    Element add(Element a, Element b) const { return (a + b) % q_; }
    Element sub(Element a, Element b) const { return (a - b + q_) % q_; }
    Element mul(Element a, Element b) const { return (a * b) % q_; }
    Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }
    Element inv(Element a) const;
    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }
    std::string to_string(Element a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

private:
    std::int64_t q_;
};

class RationalField {
public:
    using Element = mpq_class;

    std::string name() const { return "QQ"; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const;
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string to_string(const Element& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }
};

struct FieldConfig {
    enum class Kind { rational, prime };
    Kind kind = Kind::prime;
    std::int64_t modulus = PrimeField::default_modulus;

    std::string name() const;
};

bool is_prime(std::int64_t q);

// Calls f with a PrimeField or RationalField matching the config.
template <class F>
decltype(auto) with_field(const FieldConfig& config, F&& f)
{
    if (config.kind == FieldConfig::Kind::rational)
        return f(RationalField{});
    return f(PrimeField{config.modulus});
}

} // namespace catdias
