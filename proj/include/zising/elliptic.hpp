/*
 * Copyright 2026 The zising authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Jacobi elliptic functions with complex arguments on the torus
// TT(k) = C/(4K Z + 4i Re K' Z), for squared modulus ksq in (-inf, 1).
//
// Real arguments are evaluated with the descending Landen (AGM) recursion;
// complex arguments by splitting u = x + iy and combining values at modulus k
// and complementary modulus k'. Negative ksq is routed through the dual
// modulus (k*)^2 = -ksq/(1-ksq) in (0,1); ksq = 0 degenerates to trigonometry.

#ifndef ZISING_ELLIPTIC_HPP
#define ZISING_ELLIPTIC_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "core.hpp"

namespace zising {

enum class Regime { critical, low_temp, high_temp };

enum class JacobiFn : std::uint8_t { sn, cn, dn, sc, cd, dc, nc, ns, sd, ds, nd, cs };

inline const char* to_string(JacobiFn f) {
    static const char* names[] = {"sn", "cn", "dn", "sc", "cd", "dc",
                                  "nc", "ns", "sd", "ds", "nd", "cs"};
    return names[static_cast<int>(f)];
}

inline JacobiFn jacobi_fn_from_string(const std::string& s) {
    for (int i = 0; i < 12; ++i) {
        auto f = static_cast<JacobiFn>(i);
        if (s == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown Jacobi function code: " + s);
}

namespace detail {

struct Agm {
    double big_k, big_e;
};

/// Complete elliptic integrals K(m), E(m) for parameter m = k^2 in [0, 1).
inline Agm complete_integrals(double msq) {
    if (msq == 0.0) return {kPi / 2, kPi / 2};
    double a = 1.0, b = std::sqrt(1.0 - msq), c = std::sqrt(msq);
    double csum = 0.5 * c * c;
    int n = 0;
    while (std::abs(c) > 0.5e-15 * a && n < 30) {
        double an = 0.5 * (a + b), bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        ++n;
        csum += std::ldexp(c * c, n - 1);
    }
    double big_k = kPi / (2 * a);
    return {big_k, big_k * (1.0 - csum)};
}

struct JacobiReal {
    double sn, cn, dn, zeta;
};

/// sn, cn, dn and Jacobi Z at real u, parameter msq in [0,1), by the
/// descending Landen recursion.
inline JacobiReal jacobi_real(double u, double msq) {
    if (msq == 0.0) return {std::sin(u), std::cos(u), 1.0, 0.0};
    std::array<double, 32> a{}, b{}, c{};
    a[0] = 1.0;
    b[0] = std::sqrt(1.0 - msq);
    c[0] = std::sqrt(msq);
    int n = 0;
    while (std::abs(c[n]) > 0.5e-15 * a[n] && n < 30) {
        a[n + 1] = 0.5 * (a[n] + b[n]);
        b[n + 1] = std::sqrt(a[n] * b[n]);
        c[n + 1] = 0.5 * (a[n] - b[n]);
        ++n;
    }
    std::array<double, 32> phi{};
    phi[n] = std::ldexp(a[n] * u, n);
    for (int j = n; j >= 1; --j) {
        double s = std::clamp((c[j] / a[j]) * std::sin(phi[j]), -1.0, 1.0);
        phi[j - 1] = 0.5 * (phi[j] + std::asin(s));
    }
    JacobiReal r;
    r.sn = std::sin(phi[0]);
    r.cn = std::cos(phi[0]);
    r.dn = (n >= 1) ? r.cn / std::cos(phi[1] - phi[0]) : std::sqrt(1.0 - msq * r.sn * r.sn);
    r.zeta = 0.0;
    for (int j = 1; j <= n; ++j) r.zeta += c[j] * std::sin(phi[j]);
    return r;
}

}  // namespace detail

/// Elliptic parameter bundle: everything derived from one ksq < 1.
class Modulus {
public:
    static Modulus from_ksq(double ksq) {
        if (!(ksq < 1.0)) throw std::domain_error("Modulus: require ksq < 1");
        Modulus m;
        m.init(ksq);
        if (ksq != 0.0) {
            auto d = std::make_shared<Modulus>();
            d->init(m.dual_ksq());
            m.dual_ = std::move(d);
        }
        return m;
    }

    double ksq() const { return ksq_; }
    cxd k() const { return k_; }
    double kprime() const { return kprime_; }
    double big_k() const { return big_k_; }
    cxd big_k_prime() const { return big_k_prime_; }
    double re_big_k_prime() const { return big_k_prime_.real(); }
    double big_e() const { return big_e_; }
    cxd big_e_prime() const { return big_e_prime_; }
    double nome() const { return nome_; }
    Regime regime() const { return regime_; }

    /// (k*)^2 = -ksq/(1-ksq); the involutive dual parameter.
    double dual_ksq() const { return -ksq_ / (1.0 - ksq_); }

    Modulus dual() const {
        if (dual_) return *dual_;
        return from_ksq(dual_ksq());
    }

    /// Horizontal and vertical lattice periods of TT(k).
    double period_x() const { return 4 * big_k_; }
    double period_y() const { return 4 * re_big_k_prime(); }

    /// Elliptic version of an angle: theta = theta_bar * 2K/pi.
    double elliptic_angle(double angle_bar) const { return angle_bar * 2 * big_k_ / kPi; }

private:
    void init(double ksq) {
        ksq_ = ksq;
        k_ = std::sqrt(cxd(ksq, 0.0));
        kprime_ = std::sqrt(1.0 - ksq);
        if (ksq == 0.0) {
            regime_ = Regime::critical;
            big_k_ = kPi / 2;
            big_e_ = kPi / 2;
            big_k_prime_ = cxd(std::numeric_limits<double>::infinity(), 0.0);
            big_e_prime_ = cxd(1.0, 0.0);
            nome_ = 0.0;
        } else if (ksq > 0.0) {
            regime_ = Regime::low_temp;
            auto ke = detail::complete_integrals(ksq);
            auto kec = detail::complete_integrals(1.0 - ksq);
            big_k_ = ke.big_k;
            big_e_ = ke.big_e;
            big_k_prime_ = cxd(kec.big_k, 0.0);
            big_e_prime_ = cxd(kec.big_e, 0.0);
            nome_ = std::exp(-kPi * kec.big_k / ke.big_k);
        } else {
            regime_ = Regime::high_temp;
            // Route through the dual parameter d in (0,1):
            //   K(k) = k'_d K(d),  E(k) = E(d)/k'_d,  K'(k) = k'_d (K'(d) + i K(d)).
            double d = -ksq / (1.0 - ksq);
            double kpd = std::sqrt(1.0 - d);
            auto ke = detail::complete_integrals(d);
            auto kec = detail::complete_integrals(1.0 - d);
            big_k_ = kpd * ke.big_k;
            big_e_ = ke.big_e / kpd;
            big_k_prime_ = kpd * cxd(kec.big_k, ke.big_k);
            // E' from Legendre's relation with the complex quarter-period.
            big_e_prime_ = (kPi / 2 + big_k_ * big_k_prime_ - big_e_ * big_k_prime_) / big_k_;
            nome_ = std::exp(-kPi * big_k_prime_.real() / big_k_);
        }
    }

    double ksq_ = 0;
    cxd k_;
    double kprime_ = 1;
    double big_k_ = 0, big_e_ = 0;
    cxd big_k_prime_, big_e_prime_;
    double nome_ = 0;
    Regime regime_ = Regime::critical;
    std::shared_ptr<const Modulus> dual_;
};

/// Landen map tau -> 2tau on squared moduli: ksq -> (2-ksq-2sqrt(1-ksq))/ksq.
inline Modulus landen_ascend(const Modulus& m) {
    if (!(m.ksq() > 0.0 && m.ksq() < 1.0))
        throw std::domain_error("landen_ascend: require ksq in (0,1)");
    double kp = m.kprime();
    return Modulus::from_ksq(zising::sq(1.0 - kp) / m.ksq());
}

/// Point of TT(k), reduced to the fundamental rectangle [0,4K) x [0,4 Re K').
struct TorusPoint {
    cxd u;

    static TorusPoint reduce(cxd u, const Modulus& m) {
        if (m.ksq() == 0.0)
            throw std::domain_error("TorusPoint: torus reduction needs k != 0");
        return TorusPoint{cxd(mod_pos(u.real(), m.period_x()), mod_pos(u.imag(), m.period_y()))};
    }
};

namespace detail {

inline void check_pole(cxd u, double px, double py, cxd base, const char* what) {
    double dx = mod_centered(u.real() - base.real(), px);
    double dy = mod_centered(u.imag() - base.imag(), py);
    if (std::hypot(dx, dy) < pole_tol) throw pole_error(std::string(what) + " pole", u);
}

struct Triple {
    cxd sn, cn, dn;
};

inline Triple sncndn(cxd u, const Modulus& m);

/// A&S 16.21 split for parameter in (0,1).
inline Triple sncndn_pos(cxd u, const Modulus& m) {
    double msq = m.ksq();
    double x = u.real(), y = u.imag();
    auto r = jacobi_real(x, msq);
    auto i = jacobi_real(y, 1.0 - msq);
    double den = i.cn * i.cn + msq * sq(r.sn * i.sn);
    if (std::abs(den) < 1e-18)
        throw pole_error("sn/cn/dn pole", u);
    Triple t;
    t.sn = cxd(r.sn * i.dn, r.cn * r.dn * i.sn * i.cn) / den;
    t.cn = cxd(r.cn * i.cn, -r.sn * r.dn * i.sn * i.dn) / den;
    t.dn = cxd(r.dn * i.cn * i.dn, -msq * r.sn * r.cn * i.sn) / den;
    return t;
}

inline Triple sncndn(cxd u, const Modulus& m) {
    double msq = m.ksq();
    if (msq == 0.0) {
        return {std::sin(u), std::cos(u), cxd(1.0, 0.0)};
    }
    if (msq > 0.0) {
        u = TorusPoint::reduce(u, m).u;
        check_pole(u, 2 * m.big_k(), 2 * m.re_big_k_prime(),
                   cxd(0.0, m.re_big_k_prime()), "sn/cn/dn");
        return sncndn_pos(u, m);
    }
    // ksq < 0: sn(u|k) = sd(k'u|d)/k', cn = cd(k'u|d), dn = nd(k'u|d).
    Modulus d = m.dual();
    double kp = m.kprime();
    Triple td = sncndn(kp * u, d);
    if (std::abs(td.dn) < pole_tol)
        throw pole_error("sn/cn/dn pole (dual dn zero)", u);
    return {td.sn / (kp * td.dn), td.cn / td.dn, 1.0 / td.dn};
}

}  // namespace detail

/// One of the twelve Jacobi functions at complex u. Evaluation at a pole
/// (within pole_tol of the pole lattice) signals pole_error.
inline cxd jacobi(JacobiFn f, cxd u, const Modulus& m) {
    auto t = detail::sncndn(u, m);
    auto div = [&](cxd num, cxd den, const char* name) {
        if (std::abs(den) < pole_tol) throw pole_error(std::string(name) + " pole", u);
        return num / den;
    };
    switch (f) {
        case JacobiFn::sn: return t.sn;
        case JacobiFn::cn: return t.cn;
        case JacobiFn::dn: return t.dn;
        case JacobiFn::sc: return div(t.sn, t.cn, "sc");
        case JacobiFn::cd: return div(t.cn, t.dn, "cd");
        case JacobiFn::dc: return div(t.dn, t.cn, "dc");
        case JacobiFn::nc: return div(cxd(1.0), t.cn, "nc");
        case JacobiFn::ns: return div(cxd(1.0), t.sn, "ns");
        case JacobiFn::sd: return div(t.sn, t.dn, "sd");
        case JacobiFn::ds: return div(t.dn, t.sn, "ds");
        case JacobiFn::nd: return div(cxd(1.0), t.dn, "nd");
        case JacobiFn::cs: return div(t.cn, t.sn, "cs");
    }
    throw std::logic_error("unreachable");
}

inline cxd sn(cxd u, const Modulus& m) { return jacobi(JacobiFn::sn, u, m); }
inline cxd cn(cxd u, const Modulus& m) { return jacobi(JacobiFn::cn, u, m); }
inline cxd dn(cxd u, const Modulus& m) { return jacobi(JacobiFn::dn, u, m); }
inline cxd sc(cxd u, const Modulus& m) { return jacobi(JacobiFn::sc, u, m); }
inline cxd nc(cxd u, const Modulus& m) { return jacobi(JacobiFn::nc, u, m); }
inline cxd dc(cxd u, const Modulus& m) { return jacobi(JacobiFn::dc, u, m); }
inline cxd cd(cxd u, const Modulus& m) { return jacobi(JacobiFn::cd, u, m); }
inline cxd sd(cxd u, const Modulus& m) { return jacobi(JacobiFn::sd, u, m); }
inline cxd ns(cxd u, const Modulus& m) { return jacobi(JacobiFn::ns, u, m); }
inline cxd ds(cxd u, const Modulus& m) { return jacobi(JacobiFn::ds, u, m); }
inline cxd nd(cxd u, const Modulus& m) { return jacobi(JacobiFn::nd, u, m); }
inline cxd cs(cxd u, const Modulus& m) { return jacobi(JacobiFn::cs, u, m); }

/// Jacobi's epsilon function E(u) = int_0^u dn^2(t) dt.
inline cxd jacobi_epsilon(cxd u, const Modulus& m) {
    double msq = m.ksq();
    if (msq == 0.0) return u;
    if (msq < 0.0) {
        // int_0^u nd^2(k't|d) dt routed through the dual modulus.
        Modulus d = m.dual();
        double kp = m.kprime();
        cxd v = kp * u;
        cxd ed = jacobi_epsilon(v, d);
        auto td = detail::sncndn(v, d);
        if (std::abs(td.dn) < pole_tol) throw pole_error("epsilon pole", u);
        return (ed - d.ksq() * td.sn * td.cn / td.dn) / (kp * (1.0 - d.ksq()));
    }
    // Quasi-period reductions: E(u+2K) = E(u) + 2E,
    // E(u+2iK') = E(u) + 2i(K'-E').
    double px = 2 * m.big_k(), py = 2 * m.re_big_k_prime();
    double nx = std::floor(u.real() / px), ny = std::floor(u.imag() / py);
    double x = u.real() - nx * px, y = u.imag() - ny * py;
    cxd shift = nx * 2 * m.big_e() +
                ny * cxd(0.0, 2 * (m.re_big_k_prime() - m.big_e_prime().real()));
    auto rx = detail::jacobi_real(x, msq);
    cxd ex = rx.zeta + m.big_e() / m.big_k() * x;
    if (y == 0.0) return ex + shift;
    // E(iy) = i (y - E(y|k'^2) + dn(y|k'^2) sc(y|k'^2)), then the addition
    // theorem E(a+b) = E(a) + E(b) - ksq sn(a) sn(b) sn(a+b).
    double mc = 1.0 - msq;
    auto ry = detail::jacobi_real(y, mc);
    if (std::abs(ry.cn) < pole_tol) throw pole_error("epsilon pole", u);
    double ecy = ry.zeta + detail::complete_integrals(mc).big_e / m.re_big_k_prime() * y;
    cxd eiy = cxd(0.0, y - ecy + ry.dn * ry.sn / ry.cn);
    cxd sa = cxd(rx.sn, 0.0);
    cxd sb = detail::sncndn(cxd(0.0, y), m).sn;
    cxd sab = detail::sncndn(cxd(x, y), m).sn;
    return ex + eiy - msq * sa * sb * sab + shift;
}

/// Jacobi's zeta function Z(u) = E(u) - (E/K) u.
inline cxd jacobi_zeta(cxd u, const Modulus& m) {
    if (m.ksq() == 0.0) return 0.0;
    return jacobi_epsilon(u, m) - m.big_e() / m.big_k() * u;
}

/// Hh: quasiperiodic primitive with unit jump per horizontal period 4K and a
/// simple pole at 2i Re K' (residue 2 Re K'/pi).
inline cxd Hh(cxd u, const Modulus& m) {
    double msq = m.ksq();
    if (msq == 0.0) return u / (2 * kPi);
    if (msq < 0.0) return Hh(m.kprime() * u, m.dual());
    detail::check_pole(u, 4 * m.big_k(), 4 * m.re_big_k_prime(),
                       cxd(0.0, 2 * m.re_big_k_prime()), "Hh");
    return m.re_big_k_prime() / kPi * jacobi_zeta(0.5 * u, m) + u / (4 * m.big_k());
}

/// Hv: the vertical counterpart (unit jump per 4i Re K').
inline cxd Hv(cxd u, const Modulus& m) {
    double msq = m.ksq();
    if (msq == 0.0) return 0.0;
    if (msq < 0.0) return Hv(m.kprime() * u, m.dual());
    detail::check_pole(u, 4 * m.big_k(), 4 * m.re_big_k_prime(),
                       cxd(0.0, 2 * m.re_big_k_prime()), "Hv");
    return cxd(0.0, m.big_k() / kPi) * jacobi_zeta(0.5 * u, m);
}

/// Hh'(u) = (K'/2pi) dn^2(u/2) + (E'-K')/(2pi)  (ksq in (0,1); duals chained).
inline cxd Hh_prime(cxd u, const Modulus& m) {
    double msq = m.ksq();
    if (msq == 0.0) return 1.0 / (2 * kPi);
    if (msq < 0.0) return m.kprime() * Hh_prime(m.kprime() * u, m.dual());
    detail::check_pole(u, 4 * m.big_k(), 4 * m.re_big_k_prime(),
                       cxd(0.0, 2 * m.re_big_k_prime()), "Hh'");
    cxd d = dn(0.5 * u, m);
    double kp = m.re_big_k_prime(), ep = m.big_e_prime().real();
    return kp / (2 * kPi) * d * d + (ep - kp) / (2 * kPi);
}

/// Dc(u) = int_0^u dc^2 = u - E(u) + sn(u) dc(u).
inline cxd Dc(cxd u, const Modulus& m) {
    return u - jacobi_epsilon(u, m) + sn(u, m) * dc(u, m);
}

/// A(u|k) = (1/k')(Dc(u|k) + ((E-K)/K) u); odd, 2K-periodic, enters masses.
inline double Arm(double u, const Modulus& m) {
    if (m.ksq() == 0.0) return std::tan(u);
    cxd v = Dc(cxd(u, 0.0), m) + (m.big_e() - m.big_k()) / m.big_k() * u;
    return v.real() / m.kprime();
}

}  // namespace zising

#endif  // ZISING_ELLIPTIC_HPP
