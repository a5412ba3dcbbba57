#include "polyplace/rational.hpp"

#include <limits>
#include <ostream>

#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kInlineMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            auto x = static_cast<std::uint64_t>(a);
            auto y = static_cast<std::uint64_t>(b);
            while (y != 0) {
                const std::uint64_t t = x % y;
                x = y;
                y = t;
            }
            return x;
        }
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(i128 v) {
    const bool negative = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

bool mpz_fits_i64(const mpz_class& z) {
    static const mpz_class lo(static_cast<long>(-std::numeric_limits<std::int64_t>::max()));
    static const mpz_class hi(static_cast<long>(std::numeric_limits<std::int64_t>::max()));
    return z >= lo && z <= hi;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    if (value == std::numeric_limits<std::int64_t>::min()) {
        assign_i128(value, 1);
    } else {
        num_ = value;
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw Error("DivisionByZero", "rational with zero denominator");
    }
    assign_i128(num, den);
}

Rational::Rational(const mpq_class& value) { assign_mpq(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> Error {
        return Error("ParseError", "invalid rational '" + std::string(text) + "'");
    };
    if (text.empty()) {
        throw fail();
    }
    const auto slash = text.find('/');
    const auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    const auto strip_plus = [](std::string_view s) {
        return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    };
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num_text) || !valid_int(den_text)) {
        throw fail();
    }
    mpz_class num(std::string(strip_plus(num_text)), 10);
    mpz_class den(std::string(strip_plus(den_text)), 10);
    if (den == 0) {
        throw Error("DivisionByZero", "rational with zero denominator: '" + std::string(text) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

void Rational::assign_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd_u128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (num <= kInlineMax && num >= -kInlineMax && den <= kInlineMax) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::assign_mpq(mpq_class value) {
    if (mpz_fits_i64(value.get_num()) && mpz_fits_i64(value.get_den())) {
        num_ = value.get_num().get_si();
        den_ = value.get_den().get_si();
        big_.reset();
        return;
    }
    big_ = std::make_unique<mpq_class>(std::move(value));
    num_ = 0;
    den_ = 1;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational out;
    if (big_) {
        out.assign_mpq(-*big_);
    } else {
        out.num_ = -num_;
        out.den_ = den_;
    }
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == rhs.den_) {
            assign_i128(static_cast<i128>(num_) + rhs.num_, den_);
        } else {
            assign_i128(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                        static_cast<i128>(den_) * rhs.den_);
        }
        return *this;
    }
    assign_mpq(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == rhs.den_) {
            assign_i128(static_cast<i128>(num_) - rhs.num_, den_);
        } else {
            assign_i128(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                        static_cast<i128>(den_) * rhs.den_);
        }
        return *this;
    }
    assign_mpq(to_mpq() - rhs.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        // Cross-reduce first so the product is already in lowest terms.
        const std::uint64_t g1 = gcd_u64(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_),
                                         static_cast<std::uint64_t>(rhs.den_));
        const std::uint64_t g2 = gcd_u64(static_cast<std::uint64_t>(rhs.num_ < 0 ? -rhs.num_ : rhs.num_),
                                         static_cast<std::uint64_t>(den_));
        const i128 a = g1 > 1 ? num_ / static_cast<std::int64_t>(g1) : num_;
        const i128 d = g1 > 1 ? rhs.den_ / static_cast<std::int64_t>(g1) : rhs.den_;
        const i128 c = g2 > 1 ? rhs.num_ / static_cast<std::int64_t>(g2) : rhs.num_;
        const i128 b = g2 > 1 ? den_ / static_cast<std::int64_t>(g2) : den_;
        const i128 n = a * c;
        const i128 m = b * d;
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (n <= kInlineMax && n >= -kInlineMax && m <= kInlineMax) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(m);
            return *this;
        }
        assign_i128(n, m);
        return *this;
    }
    assign_mpq(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.sign() == 0) {
        throw Error("DivisionByZero", "division by zero rational");
    }
    if (!big_ && !rhs.big_) {
        assign_i128(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
        return *this;
    }
    assign_mpq(to_mpq() / rhs.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Rational::hash() const {
    if (big_) {
        return std::hash<std::string>{}(to_string());
    }
    const std::size_t h1 = std::hash<std::int64_t>{}(num_);
    const std::size_t h2 = std::hash<std::int64_t>{}(den_);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace polyplace
