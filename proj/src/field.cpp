#include "quadgraph/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace quadgraph {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p, coefficients constant-term first, no trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(std::move(a));
    const int dm = int(m.size()) - 1;
    while (int(a.size()) - 1 >= dm) {
        const int da = int(a.size()) - 1;
        // m is monic, so the quotient coefficient is just the leading term
        const int c = a[da];
        for (int i = 0; i <= dm; ++i) {
            int& t = a[da - dm + i];
            t = ((t - c * m[i]) % p + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(std::move(r));
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
    return poly_mod(a, d, p).empty();
}

// Irreducibility over F_p: degree <= 3 reduces to the absence of roots;
// higher degrees do an exhaustive monic-divisor check up to degree e/2.
bool is_irreducible(const Poly& m, int p) {
    const int e = int(m.size()) - 1;
    if (e < 1 || m[e] != 1) return false;
    if (e == 1) return true;
    for (int r = 0; r < p; ++r) {
        long long v = 0, pw = 1;
        for (int i = 0; i <= e; ++i) {
            v = (v + m[i] * pw) % p;
            pw = (pw * r) % p;
        }
        if (v == 0) return false;
    }
    if (e <= 3) return true;
    for (int d = 2; d <= e / 2; ++d) {
        // all monic polynomials of degree d
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            long long t = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = int(t % p);
                t /= p;
            }
            div[d] = 1;
            if (poly_divides(div, m, p)) return false;
        }
    }
    return true;
}

Poly default_modulus(int p, int e) {
    // Fixed choices for the shipped prime powers; everything else gets the
    // lexicographically first irreducible (by index of the lower coefficients).
    static const std::map<std::pair<int, int>, Poly> builtin = {
        {{3, 2}, {1, 0, 1}},        // t^2 + 1
        {{5, 2}, {2, 0, 1}},        // t^2 + 2
        {{3, 3}, {1, 2, 0, 1}},     // t^3 + 2t + 1
        {{7, 2}, {1, 0, 1}},        // t^2 + 1
        {{3, 4}, {2, 0, 0, 2, 1}},  // t^4 + 2t^3 + 2
    };
    auto it = builtin.find({p, e});
    if (it != builtin.end()) return it->second;
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        Poly m(e + 1, 0);
        long long t = idx;
        for (int i = 0; i < e; ++i) {
            m[i] = int(t % p);
            t /= p;
        }
        m[e] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw FieldError("no irreducible modulus found");  // unreachable for prime p
}

}  // namespace

const FieldSpec& FieldElement::checked_spec() const {
    if (!spec_) throw FieldError("uninitialized field element");
    return *spec_;
}

const FieldSpec& FieldElement::common_spec(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& s = a.checked_spec();
    if (a.spec_ != b.spec_ && !s.same_field(b.checked_spec()))
        throw FieldError("field mismatch");
    return s;
}

const FieldSpec& FieldElement::spec() const { return checked_spec(); }

std::vector<int> FieldElement::coeffs() const {
    const FieldSpec& s = checked_spec();
    std::vector<int> c(s.degree());
    int v = v_;
    for (int i = 0; i < s.degree(); ++i) {
        c[i] = v % s.characteristic();
        v /= s.characteristic();
    }
    return c;
}

bool FieldElement::is_square() const { return checked_spec().is_square(*this); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const FieldSpec& s = common_spec(*this, o);
    return FieldElement(&s, s.add(v_, o.v_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const FieldSpec& s = common_spec(*this, o);
    return FieldElement(&s, s.sub(v_, o.v_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const FieldSpec& s = common_spec(*this, o);
    return FieldElement(&s, s.mul(v_, o.v_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    const FieldSpec& s = common_spec(*this, o);
    return FieldElement(&s, s.mul(v_, s.inv(o.v_)));
}

FieldElement FieldElement::operator-() const {
    const FieldSpec& s = checked_spec();
    return FieldElement(&s, s.neg(v_));
}

FieldElement FieldElement::inverse() const {
    const FieldSpec& s = checked_spec();
    return FieldElement(&s, s.inv(v_));
}

FieldElement FieldElement::pow(long long m) const {
    const FieldSpec& s = checked_spec();
    return FieldElement(&s, s.pow(v_, m));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (spec_ == o.spec_) return v_ == o.v_;
    if (!spec_ || !o.spec_) return false;
    return spec_->same_field(*o.spec_) && v_ == o.v_;
}

std::string FieldElement::to_string() const {
    const FieldSpec& s = checked_spec();
    if (s.degree() == 1) return std::to_string(v_);
    std::ostringstream os;
    os << "(";
    auto c = coeffs();
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

FieldRef FieldSpec::make(int p, int e, std::vector<int> modulus, int max_order) {
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw FieldError("characteristic must be an odd prime, got " + std::to_string(p));
    if (e < 1) throw FieldError("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > max_order)
            throw FieldError("field order " + std::to_string(q) + " exceeds the configured cap " +
                             std::to_string(max_order));
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->e_ = e;
    spec->q_ = int(q);
    if (e == 1) {
        spec->modulus_ = {0, 1};
    } else if (modulus.empty()) {
        spec->modulus_ = default_modulus(p, e);
    } else {
        for (int& c : modulus) c = ((c % p) + p) % p;
        modulus = [&] {
            // keep explicit length e+1
            if (int(modulus.size()) != e + 1)
                throw FieldError("modulus must have degree " + std::to_string(e) + " (" +
                                 std::to_string(e + 1) + " coefficients, constant term first)");
            return modulus;
        }();
        if (modulus[e] != 1) throw FieldError("modulus must be monic");
        if (!is_irreducible(modulus, p)) throw FieldError("modulus is reducible over F_p");
        spec->modulus_ = std::move(modulus);
    }
    spec->build_tables();
    return spec;
}

FieldRef FieldSpec::from_order(long long q, std::vector<int> modulus, int max_order) {
    if (q < 3) throw FieldError("field order must be an odd prime power >= 3");
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    int e = 0;
    long long t = q;
    while (t > 1) {
        if (t % p != 0) throw FieldError(std::to_string(q) + " is not a prime power");
        t /= p;
        ++e;
    }
    if (p % 2 == 0) throw FieldError("even q rejected: the construction needs odd characteristic");
    return make(int(p), e, std::move(modulus), max_order);
}

void FieldSpec::build_tables() {
    const int q = q_, p = p_, e = e_;
    add_.assign(size_t(q) * q, 0);
    mul_.assign(size_t(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    auto to_poly = [&](int idx) {
        Poly c(e);
        for (int i = 0; i < e; ++i) {
            c[i] = idx % p;
            idx /= p;
        }
        return trim(std::move(c));
    };
    auto from_poly = [&](const Poly& c) {
        int idx = 0, pw = 1;
        for (size_t i = 0; i < c.size(); ++i) {
            idx += c[i] * pw;
            pw *= p;
        }
        return std::uint16_t(idx);
    };

    for (int a = 0; a < q; ++a) {
        Poly pa = to_poly(a);
        {
            Poly n = pa;
            for (int& c : n) c = (p - c) % p;
            neg_[a] = from_poly(trim(std::move(n)));
        }
        for (int b = 0; b <= a; ++b) {
            Poly pb = to_poly(b);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < pa.size(); ++i) s[i] = pa[i];
            for (size_t i = 0; i < pb.size(); ++i) s[i] = (s[i] + pb[i]) % p;
            std::uint16_t sum = from_poly(trim(std::move(s)));
            add_[size_t(a) * q + b] = sum;
            add_[size_t(b) * q + a] = sum;

            std::uint16_t prod = from_poly(poly_mod(poly_mul(pa, pb, p), modulus_, p));
            mul_[size_t(a) * q + b] = prod;
            mul_[size_t(b) * q + a] = prod;
        }
    }

    for (int a = 1; a < q; ++a) inv_[a] = pow(std::uint16_t(a), q - 2);

    square_.assign(q, false);
    square_[0] = true;
    for (int a = 1; a < q; ++a) square_[a] = (pow(std::uint16_t(a), (q - 1) / 2) == 1);

    sqrt_.assign(q, 0);
    std::vector<bool> seen(q, false);
    for (int b = 0; b < q; ++b) {
        std::uint16_t s = mul(std::uint16_t(b), std::uint16_t(b));
        if (!seen[s]) {
            seen[s] = true;
            sqrt_[s] = std::uint16_t(b);
        }
    }

    nonsquare_ = 0;
    for (int a = 1; a < q; ++a) {
        if (!square_[a]) {
            nonsquare_ = std::uint16_t(a);
            break;
        }
    }
}

FieldElement FieldSpec::from_index(int idx) const {
    if (idx < 0 || idx >= q_) throw FieldError("element index out of range");
    return FieldElement(this, std::uint16_t(idx));
}

FieldElement FieldSpec::from_int(long long v) const {
    long long r = ((v % p_) + p_) % p_;
    return FieldElement(this, std::uint16_t(r));
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
    if (int(coeffs.size()) > e_) throw FieldError("too many coefficients for this field");
    int idx = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        int c = i < int(coeffs.size()) ? ((coeffs[i] % p_) + p_) % p_ : 0;
        idx += c * pw;
        pw *= p_;
    }
    return FieldElement(this, std::uint16_t(idx));
}

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (int i = 0; i < q_; ++i) out.emplace_back(this, std::uint16_t(i));
    return out;
}

bool FieldSpec::is_square(const FieldElement& a) const {
    if (a.spec_ != this && !same_field(a.checked_spec())) throw FieldError("field mismatch");
    return square_[a.index()];
}

FieldElement FieldSpec::sqrt(const FieldElement& a) const {
    if (!is_square(a)) throw FieldError("sqrt of a nonsquare");
    return FieldElement(this, sqrt_[a.index()]);
}

bool FieldSpec::same_field(const FieldSpec& o) const {
    return this == &o || (p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_);
}

std::string FieldSpec::name() const { return "F_" + std::to_string(q_); }

std::uint16_t FieldSpec::inv(std::uint16_t a) const {
    if (a == 0) throw FieldError("division by zero");
    return inv_[a];
}

std::uint16_t FieldSpec::pow(std::uint16_t a, long long m) const {
    if (m < 0) return pow(inv(a), -m);
    std::uint16_t r = 1, base = a;
    while (m > 0) {
        if (m & 1) r = mul(r, base);
        base = mul(base, base);
        m >>= 1;
    }
    return r;
}

}  // namespace quadgraph
