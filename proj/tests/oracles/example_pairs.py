"""Symbolic reference values for the two built-in example pairs.

Each pair is C* (closed form) and C = C* + 20 B*. Everything is differentiated
symbolically in the raw parameter t and evaluated with 30 significant digits,
independent of the C++ jets. Writes tests/oracle_constants.hpp.

    python3 tests/oracles/example_pairs.py > tests/oracle_constants.hpp
"""

import sympy as sp

t = sp.symbols("t", real=True)
LAMBDA = 20
GRID = 11
DIGITS = 30


def ip(u, v):
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def wedge(u, v):
    return sp.Matrix([u[1] * v[2] - u[2] * v[1],
                      u[0] * v[2] - u[2] * v[0],
                      u[1] * v[0] - u[0] * v[1]])


def scalar(e):
    """Scalars are simplified as they appear; vectors are left alone."""
    return sp.simplify(sp.expand(sp.expand(e).rewrite(sp.exp)))


def lnorm(u):
    return sp.sqrt(sp.Abs(scalar(ip(u, u))))


def nlnorm(u):
    return sp.sqrt(sp.Abs(ip(u, u)))


def frenet(alpha):
    """Frame, curvature, torsion and speed in terms of t for any regular,
    non-null curve. B = T ^ N and tau = <N', B> / <B, B> cover every kind."""
    d = alpha.diff(t)
    v = lnorm(d)
    T = d / v
    Tp = T.diff(t) / v
    k = lnorm(Tp)
    N = Tp / k
    B = wedge(T, N)
    Np = N.diff(t) / v
    tau = scalar(ip(Np, B) / ip(B, B))
    Bp = B.diff(t) / v
    return dict(T=T, N=N, B=B, kappa=k, tau=tau, speed=v, rate_n=lnorm(Np), rate_b=lnorm(Bp))


def theta_projection(ptype, T, Ts, Ns):
    a = ip(T, Ts) / ip(Ts, Ts)
    b = ip(T, Ns) / ip(Ns, Ns)
    sinh_first = ptype in (1, 4)
    sh, ch = (a, b) if sinh_first else (b, a)
    if ch < 0:
        sh, ch = -sh, -ch
    return sp.asinh(sh)


def square_combination(ptype, k, tau):
    if ptype in (1, 4):
        return k**2 - tau**2
    if ptype in (2, 3):
        return tau**2 - k**2
    return k**2 + tau**2


def residuals(ptype, c, s_, th, dth):
    k, tau, ks, ts = c["kappa"], c["tau"], s_["kappa"], s_["tau"]
    rhs = k / (LAMBDA * tau)
    torsion = sp.Abs(ts - (-rhs if ptype in (1, 4) else rhs))
    mu = LAMBDA * sp.tanh(th)
    lin = sp.Abs(mu * tau + (-1 if ptype in (3, 4) else 1) * LAMBDA * k - 1)
    ch, sh = sp.cosh(th), sp.sinh(th)
    if ptype == 1:
        frame = [ks + dth, ts - (k * ch + tau * sh), k - ts * ch, tau + ts * sh]
        coeff = (ch, -sh)
    elif ptype == 3:
        frame = [ks + dth, ts - (-k * sh + tau * ch), k - ts * sh, tau - ts * ch]
        coeff = (-sh, -ch)
    else:
        raise ValueError("only the example types are needed")
    q = square_combination(ptype, k, tau)
    ind = []
    for sign in (1, -1):
        ind.append(max(sp.Abs(k / c["rate_n"] - sign * coeff[0] * ts / s_["rate_b"]),
                       sp.Abs(tau / c["rate_n"] - sign * coeff[1] * ts / s_["rate_b"])))
    ratio = (1 - LAMBDA * k) * sp.sqrt(sp.Abs(LAMBDA**2 * ks**2 - 1))
    return dict(torsion=torsion, linear=lin, mu=mu,
                frame=max(sp.Abs(x) for x in frame),
                square=sp.Abs(ts**2 - q), literal=sp.Abs(ts - q),
                indicatrix_plus=ind[0], indicatrix_minus=ind[1], ratio=ratio)


def example(star, ptype):
    fs = frenet(star)
    c = star + LAMBDA * fs["B"]
    fc = frenet(c)
    # both curves have constant speed; C's arc length s = speed_c * t
    length = fc["speed"]
    assert length.is_constant(t)
    theta_t = None
    rows = []
    for i in range(GRID):
        s = length * sp.Rational(i, GRID - 1)
        tv = s / length
        at = {key: val.evalf(DIGITS, subs={t: tv}) for key, val in fc.items()}
        ats = {key: val.evalf(DIGITS, subs={t: tv}) for key, val in fs.items()}
        rho = nlnorm(wedge(at["N"], ats["B"])) / (nlnorm(at["N"]) * nlnorm(ats["B"]))
        th = theta_projection(ptype, at["T"], ats["T"], ats["N"])
        # theta along the pair: d(theta)/ds* with s* = speed_star * t
        if theta_t is None:
            a = ip(fc["T"], fs["T"]) / ip(fs["T"], fs["T"])
            b = ip(fc["T"], fs["N"]) / ip(fs["N"], fs["N"])
            theta_t = scalar(sp.diff(a if ptype in (1, 4) else b, t))
        dth = (theta_t / fs["speed"]).evalf(DIGITS, subs={t: tv})
        r = residuals(ptype, at, ats, th, dth)
        row = dict(s=sp.N(s, DIGITS), rho=sp.N(rho, DIGITS), theta=sp.N(th, DIGITS),
                   kappa=at["kappa"], tau=at["tau"], kappa_star=ats["kappa"], tau_star=ats["tau"])
        row.update({k: sp.N(v, DIGITS) for k, v in r.items()})
        rows.append(row)
    return rows


def emit(name, rows):
    keys = list(rows[0].keys())
    out = [f"inline const OracleTable {name} = {{"]
    for k in keys:
        vals = ", ".join(sp.sstr(sp.N(r[k], 20), full_prec=False) for r in rows)
        out.append(f"    {{\"{k}\", {{{vals}}}}},")
    out.append("};")
    return "\n".join(out)


def main():
    s5 = sp.sqrt(5)
    s3 = sp.sqrt(3)
    one = sp.Matrix([-sp.sinh(t) / 2, sp.cosh(t) / 2, s5 / 2 * t])
    two = sp.Matrix([2 * sp.sinh(t), 2 * sp.cosh(t), s3 * t])
    print("#pragma once")
    print()
    print("// Generated by tests/oracles/example_pairs.py; do not edit.")
    print()
    print("#include <map>")
    print("#include <string>")
    print("#include <vector>")
    print()
    print("namespace oracle {")
    print()
    print("using OracleTable = std::map<std::string, std::vector<double>>;")
    print()
    print(f"inline constexpr int kGrid = {GRID};")
    print(f"inline constexpr double kLambda = {LAMBDA};")
    print()
    print(emit("kExample1", example(one, 3)))
    print()
    print(emit("kExample2", example(two, 1)))
    print()
    print("}  // namespace oracle")


if __name__ == "__main__":
    main()
