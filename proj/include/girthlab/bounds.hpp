#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace girthlab::bounds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct BoundQuery {
    int girth = 8;  // one of 8, 10, 12, 14, 16
    int wc = 2;
    long long n = 1;
};

/// Polynomial P(m) obtained from the tree inequality for one girth by the
/// substitution w_r = w_c n / m and clearing of denominators. Coefficients
/// are exact rationals (integral for integer n), ascending by power.
struct GirthPolynomial {
    int girth = 0;
    int degree = 0;          // 3 for girths 10/12, 4 for 14/16
    int clearing_power = 0;  // power of m multiplied in to clear denominators
    std::vector<Rational> coefficients;

    Rational eval_exact(const Rational& m) const {
        Rational acc = 0;
        for (std::size_t i = coefficients.size(); i-- > 0;)
            acc = acc * m + coefficients[i];
        return acc;
    }

    double eval(double m) const {
        double acc = 0;
        for (std::size_t i = coefficients.size(); i-- > 0;)
            acc = acc * m + static_cast<double>(coefficients[i]);
        return acc;
    }
};

struct BoundReport {
    BoundQuery query;
    double m_lower = 0;
    std::optional<double> root;  // largest real root, for girth >= 10
    double residual = 0;         // |P(root)| at the returned root
};

namespace detail {

/// Right-hand side of the check-node counting inequality for a tree of the
/// height matching each girth. T needs +, -, * and integer construction, so
/// the same formula serves integer evaluation and symbolic substitution.
template <typename T>
T step1_rhs(int girth, const T& wc, const T& wr) {
    const T one(1);
    const T q = wc - one;
    switch (girth) {
        case 8:
            return one + wr * q + (wr - one) * q * q;
        case 10:
            return one + wr * q + wr * (wr - one) * q * q;
        case 12:
            return one + wr * q + wr * (wr - one) * q * q +
                   (wr - one) * (wr - one) * q * q * q;
        case 14:
            return one + wr * q + wr * (wr - one) * q * q +
                   wr * (wr - one) * (wr - one) * q * q * q;
        case 16:
            return one + wr * q + wr * (wr - one) * q * q +
                   wr * (wr - one) * (wr - one) * q * q * q +
                   (wr - one) * (wr - one) * (wr - one) * q * q * q * q;
        default:
            throw std::invalid_argument("unsupported girth");
    }
}

/// Laurent polynomial in m with rational coefficients, just enough algebra
/// to push w_r = w_c n / m through the step-1 formulas.
struct LaurentPoly {
    std::map<int, Rational> terms;  // power -> coefficient

    LaurentPoly() = default;
    LaurentPoly(int v) { terms[0] = v; }  // NOLINT: implicit for step1_rhs
    explicit LaurentPoly(Rational c, int power) {
        if (c != 0) terms[power] = std::move(c);
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [p, c] : b.terms) {
            out.terms[p] += c;
            if (out.terms[p] == 0) out.terms.erase(p);
        }
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly neg;
        for (const auto& [p, c] : b.terms) neg.terms[p] = -c;
        return a + neg;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [pa, ca] : a.terms)
            for (const auto& [pb, cb] : b.terms) {
                out.terms[pa + pb] += ca * cb;
                if (out.terms[pa + pb] == 0) out.terms.erase(pa + pb);
            }
        return out;
    }
};

}  // namespace detail

/// Exact value of the step-1 tree inequality's right-hand side.
inline long long tree_inequality_rhs(int girth, long long wc, long long wr) {
    if (wc < 2 || wr < 2) throw std::invalid_argument("parameters out of range");
    BigInt v = detail::step1_rhs<BigInt>(girth, BigInt(wc), BigInt(wr));
    if (v > BigInt(INT64_MAX)) throw std::overflow_error("value exceeds 64 bits");
    return static_cast<long long>(v);
}

/// Closed-form girth-8 lower bound on the check-node count: the positive
/// root of m^2 + wc(wc-2)m - wc^2(wc-1)n = 0.
inline double bound_girth8(int wc, long long n) {
    if (wc < 2 || n < 1) throw std::invalid_argument("parameters out of range");
    double w = wc;
    return (-w * (w - 2) + w * std::sqrt((w - 2) * (w - 2) + 4 * (w - 1) * n)) / 2;
}

/// Assemble P(m) for girth 10..16 with an exact rational n. The substitution
/// w_r = wc n / m is carried out symbolically and the minimal power of m is
/// multiplied in, so the coefficients are derived rather than tabulated.
inline GirthPolynomial assemble_polynomial_rational(int girth, int wc,
                                                    const Rational& n) {
    if (girth != 10 && girth != 12 && girth != 14 && girth != 16)
        throw std::invalid_argument("unsupported girth");
    if (wc < 2 || n <= 0) throw std::invalid_argument("parameters out of range");

    using detail::LaurentPoly;
    LaurentPoly m_sym(Rational(1), 1);
    LaurentPoly wr_sym(Rational(wc) * n, -1);
    LaurentPoly residual =
        m_sym - detail::step1_rhs<LaurentPoly>(girth, LaurentPoly(wc), wr_sym);

    int low = 0;
    for (const auto& [p, c] : residual.terms) low = std::min(low, p);
    const int clearing = -low;
    LaurentPoly p = residual * LaurentPoly(Rational(1), clearing);

    GirthPolynomial out;
    out.girth = girth;
    out.clearing_power = clearing;
    out.degree = p.terms.rbegin()->first;
    out.coefficients.assign(out.degree + 1, Rational(0));
    for (const auto& [power, coeff] : p.terms) {
        if (power < 0) throw std::logic_error("denominator not cleared");
        out.coefficients[power] = coeff;
    }
    return out;
}

inline GirthPolynomial assemble_polynomial(int girth, int wc, long long n) {
    if (n < 1) throw std::invalid_argument("parameters out of range");
    return assemble_polynomial_rational(girth, wc, Rational(n));
}

/// Largest real root of the assembled polynomial, bracketed and bisected to
/// a relative tolerance of 1e-9. P(0) <= 0 and the polynomial is monic, so a
/// sign change exists; "largest" is certified by sampling P > 0 on a
/// geometric grid above the root.
inline BoundReport min_m_root(int girth, int wc, long long n) {
    GirthPolynomial p = assemble_polynomial(girth, wc, n);

    double lo = 1.0;
    double hi = std::max(2.0, static_cast<double>(wc) * static_cast<double>(n));
    int guard = 0;
    while (p.eval(lo) >= 0 && guard++ < 200) lo /= 2;
    guard = 0;
    while (p.eval(hi) <= 0 && guard++ < 200) hi *= 2;
    if (p.eval(lo) >= 0 || p.eval(hi) <= 0)
        throw std::runtime_error("bracketing failure");

    for (int it = 0; it < 200 && (hi - lo) > 1e-9 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (p.eval(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    const double root = 0.5 * (lo + hi);

    for (double x = root * (1 + 1e-6); x < root * 1e6; x *= 2)
        if (p.eval(x) <= 0) throw std::runtime_error("root is not the largest");

    BoundReport report;
    report.query = {girth, wc, n};
    report.m_lower = root;
    report.root = root;
    report.residual = std::abs(p.eval(root));
    return report;
}

/// Lower bound on m for any supported girth; girth 8 uses the closed form.
inline BoundReport bound(const BoundQuery& q) {
    if (q.girth == 8) {
        BoundReport report;
        report.query = q;
        report.m_lower = bound_girth8(q.wc, q.n);
        report.residual = 0;
        return report;
    }
    return min_m_root(q.girth, q.wc, q.n);
}

/// Least-squares slope of log(bound) against log(n) over a grid.
inline double scaling_exponent(int girth, int wc,
                               const std::vector<long long>& n_grid) {
    if (n_grid.size() < 4) throw std::invalid_argument("grid too small");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
        if (n_grid[i] <= n_grid[i - 1])
            throw std::invalid_argument("grid must be strictly increasing");

    std::vector<double> xs, ys;
    for (long long n : n_grid) {
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(bound({girth, wc, n}).m_lower));
    }
    double xbar = 0, ybar = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= xs.size();
    ybar /= ys.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - xbar) * (ys[i] - ybar);
        den += (xs[i] - xbar) * (xs[i] - xbar);
    }
    return num / den;
}

}  // namespace girthlab::bounds
