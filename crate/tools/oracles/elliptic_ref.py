#!/usr/bin/env python3
"""Reference values for the elliptic layer, computed with mpmath at 40 digits.

Emits Rust-ready constant tables used by crates/frustrix/tests/elliptic_frozen.rs.
Conventions:
  theta_mn(z, tau) for (m,n) in {(0,0),(0,1),(1,0),(1,1)} with
    theta_11(z) = -jtheta(1, pi z, q),  theta_10 = jtheta(2, pi z, q),
    theta_00 = jtheta(3, pi z, q),      theta_01 = jtheta(4, pi z, q),
    q = exp(i pi tau).
  k  = theta_10(0)^2 / theta_00(0)^2,  kp = theta_01(0)^2 / theta_00(0)^2
  K  = (pi/2) theta_00(0)^2,           Kp = -i tau K   (tau purely imaginary)
  Jacobi functions take the "hatted" argument u = 2 K alpha.
"""

import mpmath as mp

mp.mp.dps = 40

I = mp.mpc(0, 1)


def q_of(tau):
    return mp.exp(I * mp.pi * tau)


def theta(m, n, z, tau):
    q = q_of(tau)
    x = mp.pi * z
    if (m, n) == (1, 1):
        return -mp.jtheta(1, x, q)
    if (m, n) == (1, 0):
        return mp.jtheta(2, x, q)
    if (m, n) == (0, 0):
        return mp.jtheta(3, x, q)
    if (m, n) == (0, 1):
        return mp.jtheta(4, x, q)
    raise ValueError((m, n))


def modulus(tau):
    t00 = theta(0, 0, 0, tau)
    t10 = theta(1, 0, 0, tau)
    t01 = theta(0, 1, 0, tau)
    k = (t10 / t00) ** 2
    kp = (t01 / t00) ** 2
    K = mp.pi / 2 * t00 ** 2
    return k, kp, K


def fmt(x):
    x = mp.mpc(x)
    return f"c({mp.nstr(x.real, 22)}, {mp.nstr(x.imag, 22)})"


def emit_theta_table():
    taus = [mp.mpc(0, 0.8), mp.mpc(0, 1.3), mp.mpc(0, 2.5),
            mp.mpc(0.5, 0.9), mp.mpc(0.5, 1.7)]
    zs = [mp.mpc(0.17, 0.0), mp.mpc(-0.33, 0.21), mp.mpc(0.45, -0.12),
          mp.mpc(2.3, 1.9), mp.mpc(-1.7, -2.4), mp.mpc(0.08, 3.1)]
    print("// (m, n, z, tau, expected) rows; z and tau as (re, im) pairs")
    print("pub const THETA_REF: &[(usize, usize, C, C, C)] = &[")
    for tau in taus:
        for z in zs:
            for (m, n) in [(0, 0), (0, 1), (1, 0), (1, 1)]:
                v = theta(m, n, z, tau)
                print(f"    ({m}, {n}, {fmt(z)}, {fmt(tau)}, {fmt(v)}),")
    print("];")


def emit_modulus_table():
    print("\n// (tau, k, kp, K) with tau on the positive imaginary axis")
    print("pub const MODULUS_REF: &[(C, C, C, C)] = &[")
    for y in ["0.5", "0.8", "1.0", "1.3", "2.0", "3.5"]:
        tau = mp.mpc(0, mp.mpf(y))
        k, kp, K = modulus(tau)
        print(f"    ({fmt(tau)}, {fmt(k)}, {fmt(kp)}, {fmt(K)}),")
    print("];")
    # spot checks of classical identities
    for y in ["0.8", "1.3"]:
        tau = mp.mpc(0, mp.mpf(y))
        k, kp, K = modulus(tau)
        assert mp.almosteq(k ** 2 + kp ** 2, 1, abs_eps=mp.mpf(10) ** -35)
        assert mp.almosteq(K, mp.ellipk((k ** 2).real), abs_eps=mp.mpf(10) ** -30)
        Kp = mp.pi / 2 * theta(0, 0, 0, -1 / tau) ** 2
        assert mp.almosteq(tau, I * Kp / K, abs_eps=mp.mpf(10) ** -30)


def jacobi_fns(u, tau):
    k, kp, K = modulus(tau)
    m = k ** 2
    sn = mp.ellipfun('sn', u, m)
    cn = mp.ellipfun('cn', u, m)
    dn = mp.ellipfun('dn', u, m)
    return sn, cn, dn


def emit_jacobi_table():
    # tau values whose k is a convenient benchmark; u real and complex
    print("\n// (tau, u, sn, cn, dn) at the hatted argument u")
    print("pub const JACOBI_REF: &[(C, C, C, C, C)] = &[")
    for y in ["0.7", "1.0", "1.6"]:
        tau = mp.mpc(0, mp.mpf(y))
        k, kp, K = modulus(tau)
        us = [mp.mpf("0.37") * K, mp.mpf("1.41") * K, -mp.mpf("0.62") * K,
              mp.mpc(0.3, 0.4) * K, K / 2, K / 3, 2 * K / 3]
        for u in us:
            sn, cn, dn = jacobi_fns(u, tau)
            print(f"    ({fmt(tau)}, {fmt(u)}, {fmt(sn)}, {fmt(cn)}, {fmt(dn)}),")
    print("];")
    # frozen identity samples: sc(K/2) = 1/sqrt(kp), nc(K/2)^2 = (1+kp)/kp
    for y in ["0.7", "1.6"]:
        tau = mp.mpc(0, mp.mpf(y))
        k, kp, K = modulus(tau)
        sn, cn, dn = jacobi_fns(K / 2, tau)
        assert mp.almosteq(sn / cn, 1 / mp.sqrt(kp), abs_eps=mp.mpf(10) ** -30)
        assert mp.almosteq((1 / cn) ** 2, (1 + kp) / kp, abs_eps=mp.mpf(10) ** -30)


def emit_inverse_table():
    # argsc / argds on the principal branch: u in (0, K)
    print("\n// (tau, s, argsc(s), argds(s)) for s > 0")
    print("pub const INVERSE_REF: &[(C, f64, C, C)] = &[")
    for y in ["0.7", "1.0", "1.6"]:
        tau = mp.mpc(0, mp.mpf(y))
        k, kp, K = modulus(tau)
        m = k ** 2
        for s in ["0.3", "0.9", "1.7", "4.2"]:
            s = mp.mpf(s)
            # sc(u) = s  <=>  sn(u)^2 = s^2/(1+s^2)
            sn2 = s ** 2 / (1 + s ** 2)
            u_sc = mp.ellipf(mp.asin(mp.sqrt(sn2)), m)
            sn, cn, dn = jacobi_fns(u_sc, tau)
            assert mp.almosteq(sn / cn, s, abs_eps=mp.mpf(10) ** -30)
            # ds(u) = s  <=>  sn(u)^2 = 1/(s^2 + k^2)
            sn2 = 1 / (s ** 2 + k ** 2)
            u_ds = mp.ellipf(mp.asin(mp.sqrt(sn2)), m)
            sn, cn, dn = jacobi_fns(u_ds, tau)
            assert mp.almosteq(dn / sn, s, abs_eps=mp.mpf(10) ** -30)
            print(f"    ({fmt(tau)}, {mp.nstr(s, 22)}, {fmt(u_sc)}, {fmt(u_ds)}),")
    print("];")


def emit_landen_table():
    # tau -> 2tau and tau -> 2tau - 1 moduli, plus the sc cross-relation:
    #   sc(2 K(k) g | k) = (1 + k1) kp2 * sc(2 K(k2) g | k2) * dn(2 K(k2) g | k2)
    # with k1 = k(2 tau), k2 = k(2 tau - 1), kp2 = k'(2 tau - 1).
    print("\n// (tau, k, k1, k2, kp2, g, lhs, rhs) for the doubled-parameter relation")
    print("pub const LANDEN_REF: &[(C, C, C, C, C, f64, C, C)] = &[")
    for y in ["0.6", "0.9", "1.4"]:
        tau = mp.mpc(0, mp.mpf(y))
        k, kp, K = modulus(tau)
        k1, kp1, K1 = modulus(2 * tau)
        k2, kp2, K2 = modulus(2 * tau - 1)
        assert mp.almosteq(K, (1 + k1) * K1, abs_eps=mp.mpf(10) ** -30)
        assert mp.almosteq(K2, K1 / kp2, abs_eps=mp.mpf(10) ** -25)
        for g in ["0.11", "0.23"]:
            g = mp.mpf(g)
            snA, cnA, dnA = jacobi_fns(2 * K * g, tau)
            lhs = snA / cnA
            snB, cnB, dnB = jacobi_fns(2 * K2 * g, 2 * tau - 1)
            rhs = (1 + k1) * kp2 * (snB / cnB) * dnB
            assert mp.almosteq(lhs, rhs, abs_eps=mp.mpf(10) ** -25)
            print(f"    ({fmt(tau)}, {fmt(k)}, {fmt(k1)}, {fmt(k2)}, {fmt(kp2)}, "
                  f"{mp.nstr(g, 22)}, {fmt(lhs)}, {fmt(rhs)}),")
    print("];")


def emit_lattice_couplings():
    # triangular benchmark couplings and the square-lattice pair
    print("\n// (tau, s_iso, s1_aniso, s23_aniso, s_square_frustrated, s_square_ferro)")
    print("pub const COUPLING_REF: &[(C, f64, f64, f64, f64, f64)] = &[")
    for y in ["0.8", "1.2", "2.0"]:
        tau = mp.mpc(0, mp.mpf(y))
        k, kp, K = modulus(tau)
        # isotropic triangular: s = ds(2K/3)/k
        sn, cn, dn = jacobi_fns(2 * K / 3, tau)
        s_iso = dn / sn / k
        # anisotropic benchmark: (sc(K/3), sc(2K/3), sc(2K/3))
        sn1, cn1, dn1 = jacobi_fns(K / 3, tau)
        s1 = sn1 / cn1
        s23 = sn / cn
        # frustrated square: s = sqrt(kp (1 + kp)) / k
        s_sqf = mp.sqrt(kp * (1 + kp)) / k
        # ferro square partner lives at the halved parameter: s = 1/sqrt(k'(tau/2))
        kh, kph, Kh = modulus(tau / 2)
        s_ferro = 1 / mp.sqrt(kph)
        # Landen consistency: k'(tau/2) = (1 - k)/(1 + k)
        assert mp.almosteq(kph, (1 - k) / (1 + k), abs_eps=mp.mpf(10) ** -30)
        assert mp.almosteq(s_ferro, mp.sqrt((1 + k) / (1 - k)), abs_eps=mp.mpf(10) ** -30)
        print(f"    ({fmt(tau)}, {mp.nstr(s_iso.real, 22)}, {mp.nstr(s1.real, 22)}, "
              f"{mp.nstr(s23.real, 22)}, {mp.nstr(s_sqf.real, 22)}, {mp.nstr(s_ferro.real, 22)}),")
    print("];")


if __name__ == "__main__":
    print("// Generated by tools/oracles/elliptic_ref.py; do not edit by hand.")
    print("#[allow(unused)]")
    print("use num_complex::Complex64 as C;")
    print("const fn c(re: f64, im: f64) -> C { C::new(re, im) }")
    emit_theta_table()
    emit_modulus_table()
    emit_jacobi_table()
    emit_inverse_table()
    emit_landen_table()
    emit_lattice_couplings()
