#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadgraph {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldError : public Error {
public:
    using Error::Error;
};

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// Element of F_q in canonical form. The value is an index in [0, q) that
/// encodes the polynomial coefficient vector (c_0, ..., c_{e-1}) as
/// c_0 + c_1*p + ... + c_{e-1}*p^{e-1}; two elements are equal iff their
/// indices (equivalently, coefficient vectors) are equal.
class FieldElement {
public:
    FieldElement() : spec_(nullptr), v_(0) {}
    FieldElement(const FieldSpec* spec, std::uint16_t idx) : spec_(spec), v_(idx) {}

    std::uint16_t index() const { return v_; }
    const FieldSpec& spec() const;
    std::vector<int> coeffs() const;
    bool is_zero() const { return v_ == 0; }
    bool is_square() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long m) const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    const FieldSpec* spec_;
    std::uint16_t v_;

    const FieldSpec& checked_spec() const;
    static const FieldSpec& common_spec(const FieldElement& a, const FieldElement& b);
    friend class FieldSpec;
};

/// Immutable description of F_q, q = p^e with p an odd prime. Arithmetic is
/// exact and table-driven; all tables are built once at construction, after
/// which the object is safe for unrestricted concurrent use.
///
/// Elements are enumerated in index order (see FieldElement), which for prime
/// fields is 0, 1, ..., p-1 and in general is lexicographic on the coefficient
/// vector read from the degree-(e-1) coefficient down to the constant term.
/// Enumeration order is part of the contract: find_nonsquare() and every
/// deterministic listing in the library depend on it.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    static constexpr int kDefaultMaxOrder = 81;

    /// Build F_{p^e}. An empty modulus selects the built-in polynomial for
    /// q in {9, 25, 27, 49, 81} and otherwise the lexicographically first
    /// monic irreducible of degree e over F_p. A supplied modulus must be
    /// monic, of degree e, irreducible, coefficients constant-term first.
    static FieldRef make(int p, int e, std::vector<int> modulus = {},
                         int max_order = kDefaultMaxOrder);

    /// Build F_q from the cardinality q = p^e (factored automatically).
    static FieldRef from_order(long long q, std::vector<int> modulus = {},
                               int max_order = kDefaultMaxOrder);

    int characteristic() const { return p_; }
    int degree() const { return e_; }
    int order() const { return q_; }
    /// Monic irreducible modulus, constant term first, length e+1. For e = 1
    /// this is the formal (0, 1) and plays no role in the arithmetic.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }
    FieldElement from_index(int idx) const;
    FieldElement from_int(long long v) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;

    /// All q elements in enumeration order, starting with 0.
    std::vector<FieldElement> elements() const;

    /// First nonsquare in enumeration order. Exists for every odd q.
    FieldElement nonsquare() const { return FieldElement(this, nonsquare_); }

    /// Euler-criterion square test; zero counts as a square (use is_zero to
    /// tell the cases apart).
    bool is_square(const FieldElement& a) const;

    /// Smallest-index b with b*b == a; throws FieldError for nonsquares.
    FieldElement sqrt(const FieldElement& a) const;

    bool same_field(const FieldSpec& o) const;

    std::string name() const;  // "F_q"

    // Raw index arithmetic for hot loops. No compatibility checks.
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[size_t(a) * q_ + b]; }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add_[size_t(a) * q_ + neg_[b]]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[size_t(a) * q_ + b]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t inv(std::uint16_t a) const;
    std::uint16_t pow(std::uint16_t a, long long m) const;
    const std::uint16_t* mul_table() const { return mul_.data(); }
    const std::uint16_t* add_table() const { return add_.data(); }

private:
    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
    std::vector<bool> square_;
    std::vector<std::uint16_t> sqrt_;
    std::uint16_t nonsquare_ = 0;

    FieldSpec() = default;
    void build_tables();
    friend class FieldElement;
};

}  // namespace quadgraph
