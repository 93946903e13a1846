#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "errors.hpp"

namespace homjj {

enum class FieldKind : std::uint8_t { Q, Fp };

// Ground field descriptor. Exact rationals, or a prime field F_p with
// p in {2, 3, 5, 7}.
struct FieldTag {
    FieldKind kind = FieldKind::Q;
    int p = 0;

    static FieldTag rationals() { return FieldTag{FieldKind::Q, 0}; }
    static FieldTag prime_field(int p);
    static FieldTag from_name(const std::string& name);

    int characteristic() const { return kind == FieldKind::Q ? 0 : p; }
    std::string name() const;

    bool operator==(const FieldTag&) const = default;
};

// A single exact field element. Q values are always stored reduced with a
// positive denominator; F_p values as the residue in [0, p). Arithmetic
// between different domains is rejected at call time.
class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {}

    static Scalar zero(FieldTag tag);
    static Scalar one(FieldTag tag);
    static Scalar of_int(long value, FieldTag tag);
    static Scalar rational(const mpq_class& value);

    // Accepts `-?\d+(/\d+)?` for Q and `\d+` for F_p.
    static Scalar parse(const std::string& text, FieldTag tag);

    FieldTag tag() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Canonical text: reduced, denominator omitted when 1; residues as
    // plain decimal digits.
    std::string str() const;

    // Underlying rational; only valid for Q scalars.
    const mpq_class& rat() const;

private:
    struct FpValue {
        std::int32_t p;
        std::int64_t v;  // in [0, p)
    };

    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
    Scalar(std::int32_t p, std::int64_t v) : rep_(FpValue{p, v}) {}

    bool is_q() const { return rep_.index() == 0; }
    const mpq_class& q() const { return std::get<0>(rep_); }
    mpq_class& q() { return std::get<0>(rep_); }
    const FpValue& fp() const { return std::get<1>(rep_); }

    void require_same_domain(const Scalar& rhs) const;

    std::variant<mpq_class, FpValue> rep_;
};

}  // namespace homjj
