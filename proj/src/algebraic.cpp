#include "jacobi/algebraic.hpp"

#include <sstream>

namespace jacobi {

namespace {

// Multiply a Gaussian rational by 2^e for (possibly negative) integer e.
GaussianRational scale_pow2(const GaussianRational& c, const Int& e) {
    if (sgn(e) == 0) return c;
    if (!e.fits_slong_p()) throw PreconditionViolated("power-of-2 carry out of range");
    const Rational f = Rational(2).pow_int(e.get_si());
    return GaussianRational(c.re * f, c.im * f);
}

// Dense polynomial helpers over Q(i), coefficients low to high, used only for
// inversion modulo x^D - 2.
using Poly = std::vector<GaussianRational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    Poly q;
    if (b.empty()) throw NonInvertible("polynomial division by zero");
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
    const GaussianRational lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const GaussianRational f = a.back() * lead_inv;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        // The leading entry cancels exactly; drop it and any new zeros.
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

} // namespace

AlgebraicValue::AlgebraicValue(const GaussianRational& c) {
    if (!c.is_zero()) c_.emplace(0, c);
}

AlgebraicValue AlgebraicValue::pow2(const Rational& e) {
    return monomial(GaussianRational(Rational(1)), e);
}

AlgebraicValue AlgebraicValue::monomial(const GaussianRational& c, const Rational& e) {
    AlgebraicValue out;
    if (c.is_zero()) return out;
    const Int d = e.den();
    if (!d.fits_slong_p()) throw PreconditionViolated("extension degree out of range");
    std::map<long, GaussianRational> raw;
    // e = carry + k/D with 0 <= k < D.
    const Int carry = e.floor();
    const Int k = e.num() - carry * e.den();
    raw.emplace(k.get_si(), scale_pow2(c, carry));
    out.reduce(std::move(raw), d.get_si());
    return out;
}

void AlgebraicValue::reduce(std::map<long, GaussianRational>&& raw, long d) {
    std::map<long, GaussianRational> folded;
    for (auto& [k, c] : raw) {
        if (c.is_zero()) continue;
        long q = k / d, r = k % d;
        if (r < 0) { r += d; q -= 1; }
        GaussianRational scaled = scale_pow2(c, Int(q));
        auto [it, fresh] = folded.emplace(r, scaled);
        if (!fresh) {
            it->second += scaled;
            if (it->second.is_zero()) folded.erase(it);
        }
    }
    if (folded.empty()) { d_ = 1; c_.clear(); return; }
    long g = d;
    for (const auto& [k, c] : folded) g = gcd_long(g, k);
    if (g > 1) {
        std::map<long, GaussianRational> shrunk;
        for (auto& [k, c] : folded) shrunk.emplace(k / g, std::move(c));
        folded = std::move(shrunk);
        d /= g;
    }
    d_ = d;
    c_ = std::move(folded);
}

void AlgebraicValue::lift_to(long d) {
    if (d == d_) return;
    const long f = d / d_;
    std::map<long, GaussianRational> lifted;
    for (auto& [k, c] : c_) lifted.emplace(k * f, std::move(c));
    c_ = std::move(lifted);
    d_ = d;
}

std::vector<std::pair<GaussianRational, Rational>> AlgebraicValue::terms() const {
    std::vector<std::pair<GaussianRational, Rational>> out;
    out.reserve(c_.size());
    for (const auto& [k, c] : c_) out.emplace_back(c, Rational(k, d_));
    return out;
}

bool AlgebraicValue::is_rational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

bool AlgebraicValue::is_real() const {
    for (const auto& [k, c] : c_)
        if (!c.is_real()) return false;
    return true;
}

AlgebraicValue AlgebraicValue::conj() const {
    AlgebraicValue out(*this);
    for (auto& [k, c] : out.c_) c = c.conj();
    return out;
}

AlgebraicValue AlgebraicValue::operator-() const {
    AlgebraicValue out(*this);
    for (auto& [k, c] : out.c_) c = -c;
    return out;
}

AlgebraicValue& AlgebraicValue::operator+=(const AlgebraicValue& o) {
    const long d = lcm_long(d_, o.d_);
    lift_to(d);
    AlgebraicValue rhs(o);
    rhs.lift_to(d);
    std::map<long, GaussianRational> merged = std::move(c_);
    for (auto& [k, c] : rhs.c_) {
        auto [it, fresh] = merged.emplace(k, c);
        if (!fresh) it->second += c;
    }
    reduce(std::move(merged), d);
    return *this;
}

AlgebraicValue& AlgebraicValue::operator-=(const AlgebraicValue& o) {
    return *this += -o;
}

AlgebraicValue& AlgebraicValue::operator*=(const AlgebraicValue& o) {
    if (is_zero() || o.is_zero()) { d_ = 1; c_.clear(); return *this; }
    const long d = lcm_long(d_, o.d_);
    lift_to(d);
    AlgebraicValue rhs(o);
    rhs.lift_to(d);
    std::map<long, GaussianRational> prod;
    for (const auto& [ka, ca] : c_) {
        for (const auto& [kb, cb] : rhs.c_) {
            const GaussianRational c = ca * cb;
            auto [it, fresh] = prod.emplace(ka + kb, c);
            if (!fresh) it->second += c;
        }
    }
    reduce(std::move(prod), d);
    return *this;
}

AlgebraicValue AlgebraicValue::inverse() const {
    if (is_zero()) throw NonInvertible("inverse of zero algebraic value");
    if (is_rational()) return AlgebraicValue(c_.begin()->second.inverse());
    // Extended Euclid in Q(i)[x] against the minimal polynomial x^D - 2,
    // which is irreducible (Eisenstein at 2), so the gcd is a unit.
    Poly a(static_cast<std::size_t>(d_) + 1);
    a[0] = GaussianRational(Rational(-2));
    a.back() = GaussianRational(Rational(1));
    Poly b(static_cast<std::size_t>(d_));
    for (const auto& [k, c] : c_) b[k] = c;
    trim(b);
    // Invariants: r0 = s0*m + t0*v, r1 = s1*m + t1*v (m = x^D - 2, v = this),
    // tracking only t since s is never needed.
    Poly r0 = a, r1 = b;
    Poly t0, t1 = {GaussianRational(Rational(1))};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd; v^{-1} = t0 / r0 mod m.
    if (r0.size() != 1) throw NonInvertible("minimal polynomial unexpectedly reducible");
    const GaussianRational scale = r0[0].inverse();
    std::map<long, GaussianRational> inv;
    for (std::size_t k = 0; k < t0.size(); ++k)
        if (!t0[k].is_zero()) inv.emplace(static_cast<long>(k), t0[k] * scale);
    AlgebraicValue out;
    out.reduce(std::move(inv), d_);
    return out;
}

bool operator==(const AlgebraicValue& a, const AlgebraicValue& b) {
    return a.d_ == b.d_ && a.c_ == b.c_;
}

std::string AlgebraicValue::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        std::string cs = c.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        const bool composite = !c.is_real() || (!c.re.is_zero() && !c.im.is_zero());
        if (k == 0) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            os << (composite || cs.find('/') != std::string::npos ? "(" + cs + ")" : cs)
               << "*2^(" << Rational(k, d_).str() << ")";
        }
    }
    return os.str();
}

} // namespace jacobi
