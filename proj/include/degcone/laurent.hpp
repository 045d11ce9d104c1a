#pragma once
#include "rational.hpp"
#include <map>
#include <stdexcept>
#include <sstream>

namespace degcone {

// Laurent polynomial in q with rational coefficients, sparse by exponent.
class Laurent {
public:
    std::map<long, Rat> coeffs;  // exponent -> nonzero coefficient

    Laurent() = default;
    explicit Laurent(const Rat& c) {
        if (c != 0) coeffs[0] = c;
    }
    static Laurent monomial(long exp, const Rat& c = Rat(1)) {
        Laurent p;
        if (c != 0) p.coeffs[exp] = c;
        return p;
    }
    static Laurent q_power(long exp) { return monomial(exp); }

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Laurent& o) const { return coeffs == o.coeffs; }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs) {
            auto it = coeffs.find(e);
            if (it == coeffs.end()) {
                coeffs.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) coeffs.erase(it);
            }
        }
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs) {
            auto it = coeffs.find(e);
            if (it == coeffs.end()) {
                coeffs.emplace(e, -c);
            } else {
                it->second -= c;
                if (it->second == 0) coeffs.erase(it);
            }
        }
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : coeffs) r.coeffs[e] = -c;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.coeffs)
            for (auto& [eb, cb] : b.coeffs) {
                Rat& slot = r.coeffs[ea + eb];
                slot += ca * cb;
            }
        for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
            it = it->second == 0 ? r.coeffs.erase(it) : std::next(it);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    Laurent& operator*=(const Rat& s) {
        if (s == 0) { coeffs.clear(); return *this; }
        for (auto& [e, c] : coeffs) c *= s;
        return *this;
    }

    long min_exp() const { return coeffs.begin()->first; }
    long max_exp() const { return coeffs.rbegin()->first; }

    Rat eval(const Rat& q0) const {
        Rat acc(0);
        for (auto& [e, c] : coeffs) acc += c * pow_rat(q0, e);
        return acc;
    }

    // Shift so the lowest exponent is 0 (turns a Laurent polynomial into an
    // ordinary one); returns the shift applied.
    long normalize_shift() {
        if (coeffs.empty()) return 0;
        long m = min_exp();
        if (m == 0) return 0;
        std::map<long, Rat> shifted;
        for (auto& [e, c] : coeffs) shifted[e - m] = c;
        coeffs.swap(shifted);
        return m;
    }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            Rat c = it->second;
            long e = it->first;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            Rat a = abs(c);
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }
};

// Quotient and remainder of ordinary polynomial division (inputs must have
// nonnegative exponents only).
inline void poly_divmod(const Laurent& a, const Laurent& b, Laurent& quot, Laurent& rem) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
    quot = Laurent();
    rem = a;
    long db = b.max_exp();
    const Rat& lb = b.coeffs.rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long e = rem.max_exp() - db;
        Rat c = rem.coeffs.rbegin()->second / lb;
        Laurent t = Laurent::monomial(e, c);
        quot += t;
        rem -= t * b;
    }
}

inline Laurent poly_gcd(Laurent a, Laurent b) {
    a.normalize_shift();
    b.normalize_shift();
    while (!b.is_zero()) {
        Laurent q, r;
        poly_divmod(a, b, q, r);
        a = b;
        b = r;
        b.normalize_shift();
    }
    if (!a.is_zero()) {
        Rat lead = a.coeffs.rbegin()->second;
        Laurent m = a;
        m *= Rat(1) / lead;
        return m;
    }
    return a;
}

// Field of rational functions in q, represented as a fraction of Laurent
// polynomials. Canonical form: denominator is an ordinary polynomial with
// nonzero constant term, monic in its leading coefficient.
class QFun {
public:
    Laurent num, den;

    QFun() : den(Rat(1)) {}
    explicit QFun(const Rat& c) : num(c), den(Rat(1)) {}
    QFun(Laurent n, Laurent d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    static QFun from_laurent(Laurent p) { QFun f; f.num = std::move(p); return f; }
    static QFun q_power(long e) { return from_laurent(Laurent::q_power(e)); }

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const QFun& o) const { return (num * o.den) == (o.num * den); }

    QFun operator+(const QFun& o) const { return QFun(num * o.den + o.num * den, den * o.den); }
    QFun operator-(const QFun& o) const { return QFun(num * o.den - o.num * den, den * o.den); }
    QFun operator*(const QFun& o) const { return QFun(num * o.num, den * o.den); }
    QFun operator/(const QFun& o) const {
        if (o.is_zero()) throw std::invalid_argument("QFun: division by zero");
        return QFun(num * o.den, den * o.num);
    }
    QFun operator-() const { QFun f = *this; f.num = -f.num; return f; }
    QFun& operator+=(const QFun& o) { *this = *this + o; return *this; }
    QFun& operator-=(const QFun& o) { *this = *this - o; return *this; }
    QFun& operator*=(const QFun& o) { *this = *this * o; return *this; }
    QFun& operator/=(const QFun& o) { *this = *this / o; return *this; }

    Rat eval(const Rat& q0) const {
        Rat d = den.eval(q0);
        if (d == 0) throw std::domain_error("QFun: pole at evaluation point");
        return num.eval(q0) / d;
    }

    // True when the denominator is 1, i.e. the value is a Laurent polynomial.
    bool is_laurent() const { return den.coeffs.size() == 1 && den.coeffs.count(0) && den.coeffs.at(0) == 1; }

    std::string str() const {
        if (is_laurent() || num.is_zero()) return num.str();
        return "(" + num.str() + ")/(" + den.str() + ")";
    }

private:
    void reduce() {
        if (den.is_zero()) throw std::invalid_argument("QFun: zero denominator");
        if (num.is_zero()) { den = Laurent(Rat(1)); return; }
        long sn = num.normalize_shift();
        long sd = den.normalize_shift();
        Laurent g = poly_gcd(num, den);
        if (!(g.coeffs.size() == 1 && g.coeffs.count(0))) {
            Laurent q, r;
            poly_divmod(num, g, q, r);
            num = q;
            poly_divmod(den, g, q, r);
            den = q;
        }
        // re-apply the net q-power on the numerator
        num = num * Laurent::q_power(sn - sd);
        // make denominator have constant term at exponent 0 and lead coeff 1
        long s = den.normalize_shift();
        num = num * Laurent::q_power(s);
        Rat lead = den.coeffs.rbegin()->second;
        if (lead != 1) {
            den *= Rat(1) / lead;
            num *= Rat(1) / lead;
        }
    }
};

// [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}), a symmetric Laurent polynomial.
inline Laurent qint(long n, long d = 1) {
    if (n < 0) throw std::invalid_argument("qint: n must be nonnegative");
    Laurent r;
    // q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
    for (long k = 0; k < n; ++k) r += Laurent::q_power(d * (n - 1 - 2 * k));
    return r;
}

inline Laurent qfactorial(long n, long d = 1) {
    Laurent r(Rat(1));
    for (long k = 2; k <= n; ++k) r *= qint(k, d);
    return r;
}

// Scalar contexts: the quantum engine is templated on the scalar field.
// ExactQ computes with rational functions in q; SpecializedQ evaluates at a
// fixed rational q0.
struct ExactQ {
    using Scalar = QFun;
    static QFun q_pow(long e) { return QFun::q_power(e); }
    static QFun from_rat(const Rat& r) { return QFun(r); }
    static QFun zero() { return QFun(); }
    static QFun one() { return QFun(Rat(1)); }
    static bool is_zero(const QFun& x) { return x.is_zero(); }
    QFun qint_s(long n, long d) const { return QFun::from_laurent(qint(n, d)); }
    QFun qfact_s(long n, long d) const { return QFun::from_laurent(qfactorial(n, d)); }
    // 1/(q^d - q^{-d})
    QFun qdiff_inv(long d) const {
        return QFun(Laurent(Rat(1)), Laurent::q_power(d) - Laurent::q_power(-d));
    }
};

struct SpecializedQ {
    using Scalar = Rat;
    Rat q0;
    explicit SpecializedQ(const Rat& q) : q0(q) {}
    Rat q_pow(long e) const { return pow_rat(q0, e); }
    static Rat from_rat(const Rat& r) { return r; }
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    Rat qint_s(long n, long d) const { return qint(n, d).eval(q0); }
    Rat qfact_s(long n, long d) const { return qfactorial(n, d).eval(q0); }
    Rat qdiff_inv(long d) const { return Rat(1) / (pow_rat(q0, d) - pow_rat(q0, -d)); }
};

}  // namespace degcone
