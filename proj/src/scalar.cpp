#include "scalar.hpp"

#include <cctype>

namespace homjj {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int32_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t fp_inverse(std::int64_t v, std::int32_t p) {
    // p <= 7, a direct scan is fine.
    for (std::int64_t t = 1; t < p; ++t) {
        if ((v * t) % p == 1) return t;
    }
    throw Error(ErrorCode::domain, "division by zero in F" + std::to_string(p));
}

}  // namespace

FieldTag FieldTag::prime_field(int p) {
    if (p != 2 && p != 3 && p != 5 && p != 7) {
        throw Error(ErrorCode::domain,
                    "unsupported prime field F" + std::to_string(p) +
                        " (supported: F2, F3, F5, F7)");
    }
    return FieldTag{FieldKind::Fp, p};
}

FieldTag FieldTag::from_name(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.size() >= 2 && name[0] == 'F' && all_digits(name.substr(1))) {
        return prime_field(std::stoi(name.substr(1)));
    }
    throw Error(ErrorCode::name, "unknown scalar field '" + name + "'");
}

std::string FieldTag::name() const {
    return kind == FieldKind::Q ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::zero(FieldTag tag) {
    return tag.kind == FieldKind::Q ? Scalar(mpq_class(0))
                                    : Scalar(tag.p, 0);
}

Scalar Scalar::one(FieldTag tag) {
    return tag.kind == FieldKind::Q ? Scalar(mpq_class(1))
                                    : Scalar(tag.p, 1 % tag.p);
}

Scalar Scalar::of_int(long value, FieldTag tag) {
    if (tag.kind == FieldKind::Q) return Scalar(mpq_class(value));
    return Scalar(tag.p, mod_reduce(value, tag.p));
}

Scalar Scalar::rational(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::parse(const std::string& text, FieldTag tag) {
    if (tag.kind == FieldKind::Fp) {
        if (!all_digits(text)) {
            throw Error(ErrorCode::parse,
                        "invalid F" + std::to_string(tag.p) + " scalar '" + text +
                            "': expected unsigned digits");
        }
        mpz_class n(text);
        mpz_class r = n % tag.p;
        return Scalar(tag.p, r.get_si());
    }

    std::string num = text;
    std::string den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string unsigned_num = (!num.empty() && num[0] == '-') ? num.substr(1) : num;
    if (!all_digits(unsigned_num) || !all_digits(den)) {
        throw Error(ErrorCode::parse,
                    "invalid rational '" + text + "': expected -?digits(/digits)?");
    }
    mpz_class d(den);
    if (d == 0) {
        throw Error(ErrorCode::parse, "invalid rational '" + text + "': zero denominator");
    }
    mpq_class v(mpz_class(num), d);
    v.canonicalize();
    return Scalar(std::move(v));
}

FieldTag Scalar::tag() const {
    if (is_q()) return FieldTag::rationals();
    return FieldTag{FieldKind::Fp, fp().p};
}

bool Scalar::is_zero() const {
    return is_q() ? q() == 0 : fp().v == 0;
}

bool Scalar::is_one() const {
    return is_q() ? q() == 1 : fp().v == 1 % fp().p;
}

void Scalar::require_same_domain(const Scalar& rhs) const {
    if (rep_.index() != rhs.rep_.index() ||
        (!is_q() && fp().p != rhs.fp().p)) {
        throw Error(ErrorCode::domain,
                    "scalar domain mismatch: " + tag().name() + " vs " + rhs.tag().name());
    }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_domain(rhs);
    if (is_q()) return Scalar(mpq_class(q() + rhs.q()));
    return Scalar(fp().p, mod_reduce(fp().v + rhs.fp().v, fp().p));
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_domain(rhs);
    if (is_q()) return Scalar(mpq_class(q() - rhs.q()));
    return Scalar(fp().p, mod_reduce(fp().v - rhs.fp().v, fp().p));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_domain(rhs);
    if (is_q()) return Scalar(mpq_class(q() * rhs.q()));
    return Scalar(fp().p, mod_reduce(fp().v * rhs.fp().v, fp().p));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    if (is_q()) return Scalar(mpq_class(-q()));
    return Scalar(fp().p, mod_reduce(-fp().v, fp().p));
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw Error(ErrorCode::domain, "division by zero");
    }
    if (is_q()) return Scalar(mpq_class(1 / q()));
    return Scalar(fp().p, fp_inverse(fp().v, fp().p));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    *this = *this + rhs;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    *this = *this - rhs;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    *this = *this * rhs;
    return *this;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (rep_.index() != rhs.rep_.index()) return false;
    if (is_q()) return q() == rhs.q();
    return fp().p == rhs.fp().p && fp().v == rhs.fp().v;
}

std::string Scalar::str() const {
    if (is_q()) return q().get_str();
    return std::to_string(fp().v);
}

const mpq_class& Scalar::rat() const {
    if (!is_q()) {
        throw Error(ErrorCode::domain, "rat() called on a prime-field scalar");
    }
    return q();
}

}  // namespace homjj
