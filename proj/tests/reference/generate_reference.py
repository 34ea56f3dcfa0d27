#!/usr/bin/env python3
"""Independent high-precision reference values for the unit tests.

Evaluates the printed closed forms (decay rates, propagator, second moments)
directly with mpmath at 120 digits. Exactly degenerate points are evaluated
by displacing gamma by 1e-40, far below double resolution. The output is
pasted into reference_values.hpp; rerun only when adding cases.
"""
import mpmath as mp

mp.mp.dps = 120


def setup(kappa, gamma, omega, theta, gain):
    kappa, gamma, omega, theta, gain = map(mp.mpf, (kappa, gamma, omega, theta, gain))
    z = omega / gamma
    zp = omega
    chi = gamma
    b = (4 + z * z) * (1 + zp * z)
    e = mp.e ** (-theta)
    disc = zp**2 * (1 + z * zp) ** 2 + 4 * (zp**2 + chi) ** 2 - ((2 - zp * z) * e) ** 2
    root = mp.sqrt(mp.mpc(disc))
    mup = kappa / 2 + gain / (2 * b) * ((2 * zp + z) * e + root)
    mum = kappa / 2 + gain / (2 * b) * ((2 * zp + z) * e - root)
    p = 2 * (zp**2 + chi) / root
    qp = (-zp * (1 + zp * z) + (2 - zp * z) * e) / root
    qm = (-zp * (1 + zp * z) - (2 - zp * z) * e) / root
    big_l = 2 * zp**2 + 2 * chi - (2 * zp + z) * e
    big_m = zp * (1 + zp * z) + (2 - zp * z) * e
    return dict(A=gain, B=b, disc=disc, mup=mup, mum=mum, p=p, qp=qp, qm=qm, L=big_l, M=big_m)


def moments(s, t):
    A, B, L, M = s["A"], s["B"], s["L"], s["M"]
    mup, mum, p, qp, qm = s["mup"], s["mum"], s["p"], s["qp"], s["qm"]
    S = mup + mum
    if t == mp.inf:
        ep = em = es = 1
    else:
        t = mp.mpf(t)
        ep, em, es = 1 - mp.exp(-2 * mup * t), 1 - mp.exp(-2 * mum * t), 1 - mp.exp(-S * t)
    na = (A * (L * (1 - p) ** 2 + M * qp * (1 - p)) / (8 * B * mup) * ep
          + A * (L * (1 + p) ** 2 - M * qp * (1 + p)) / (8 * B * mum) * em
          + A * (L * (1 - p * p) + M * qp * p) / (2 * B * S) * es)
    nb = (A * (L * qm**2 + M * qm * (1 + p)) / (8 * B * mup) * ep
          + A * (L * qm**2 - M * qm * (1 - p)) / (8 * B * mum) * em
          - A * (L * qm**2 + M * qm * p) / (2 * B * S) * es)
    cab = (A * (2 * L * qm * (1 - p) + M * (1 - p * p + qm * qp)) / (16 * B * mup) * ep
           - A * (2 * L * qm * (1 + p) - M * (1 - p * p + qm * qp)) / (16 * B * mum) * em
           + A * (2 * L * qm * p + M * (1 + p * p - qm * qp)) / (4 * B * S) * es)
    return mp.re(na), mp.re(nb), mp.re(cab)


def vs(na, nb, cab):
    m, n, c = 1 + 2 * na, 1 + 2 * nb, 2 * cab
    xi = m * m + n * n + 2 * c * c
    det = (m * n - c * c) ** 2
    # rationalized so the 1e60-scale driven cases keep their digits
    return mp.sqrt(2 * det / (xi + mp.sqrt(xi * xi - 4 * det)))


def propagator(s, t):
    t = mp.mpf(t)
    mup, mum, p, qp, qm = s["mup"], s["mum"], s["p"], s["qp"], s["qm"]
    cp = ((1 + p) * mp.exp(-mum * t) + (1 - p) * mp.exp(-mup * t)) / 2
    cm = ((1 - p) * mp.exp(-mum * t) + (1 + p) * mp.exp(-mup * t)) / 2
    dp = qp / 2 * (mp.exp(-mup * t) - mp.exp(-mum * t))
    dm = qm / 2 * (mp.exp(-mup * t) - mp.exp(-mum * t))
    return [mp.re(x) for x in (cp, cm, dp, dm)]


def fmt(x):
    return mp.nstr(x, 20, min_fixed=-6, max_fixed=6)


DEG = mp.mpf(1) + mp.mpf("1e-40")

MOMENT_CASES = [
    ("oscillatory_fig3_t3", (0.5, 0.75, 0, 0.25, 10), 3),
    ("generic_t2", (0.7, 0.6, 3, 0.4, 20), 2),
    ("baseline_t1", (0.5, DEG, 0, 0, 10), 1),
    ("baseline_t10", (0.5, DEG, 0, 0, 10), 10),
    ("baseline_t50", (0.5, DEG, 0, 0, 10), 50),
    ("baseline_steady", (0.5, DEG, 0, 0, 10), mp.inf),
    ("driven_fig5_t50", (0.5, 1, 10, 0, 10), 50),
    ("driven_fig8_a100_t30", (0.5, 0.75, 10, 0.25, 100), 30),
    ("driven_fig10_t50", (0.5, 0.75, 10, 0.25, 25), 50),
    ("weak_drive_steady", (0.8, 0.5, 0.4, 0.1, 6), mp.inf),
]

if __name__ == "__main__":
    s = setup(0.5, 0.75, 0, 0.25, 10)
    print("// spectral: kappa=0.5 gamma=0.75 omega=0 theta=0.25 A=10")
    print(f"disc = {fmt(s['disc'])}; mu_plus = {fmt(mp.re(s['mup']))} + {fmt(mp.im(s['mup']))}i")
    print(f"B(omega=10,gamma=1) = {fmt(setup(0.5, 1, 10, 0, 10)['B'])}")
    print(f"L,M(theta=0.25,chi=0.75) = {fmt(s['L'])}, {fmt(s['M'])}")
    print("// propagator at the degenerate baseline, t = 1")
    print([fmt(x) for x in propagator(setup(0.5, DEG, 0, 0, 10), 1)])
    print("// propagator oscillatory fig3, t = 2.5")
    print([fmt(x) for x in propagator(s, 2.5)])
    for name, par, t in MOMENT_CASES:
        st = setup(*par)
        na, nb, cab = moments(st, t)
        print(f'{{"{name}", {{{", ".join(fmt(mp.mpf(v)) for v in par)}}}, {fmt(t) if t != mp.inf else "kInf"}, '
              f"{fmt(na)}, {fmt(nb)}, {fmt(cab)}, {fmt(na * nb - cab * cab)}, {fmt(vs(na, nb, cab))}}},")
