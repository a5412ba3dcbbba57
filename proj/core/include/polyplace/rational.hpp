#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyplace {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in int64 are stored inline and
// combined with 128-bit intermediates; anything larger spills to a GMP mpq.
// The representation is canonical: a value that fits inline is never stored
// as an mpq, so equality of representations is equality of values.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    // Accepts "n", "-n", "n/d" (d != 0); the result is reduced.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_small() const { return !big_; }
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] double to_double() const;
    // Always "num/den", including integers ("2/1").
    [[nodiscard]] std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    [[nodiscard]] std::size_t hash() const;

private:
    void assign_i128(__int128 num, __int128 den);
    void assign_mpq(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

Rational abs(const Rational& r);
Rational midpoint(const Rational& a, const Rational& b);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polyplace

template <>
struct std::hash<polyplace::Rational> {
    std::size_t operator()(const polyplace::Rational& r) const noexcept { return r.hash(); }
};
