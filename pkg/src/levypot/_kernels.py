"""Scalar quadrature kernels behind the analytic formulas.

Everything here compiles under numba's nopython mode and also runs unchanged
as plain Python/numpy when the fallback backend is active.  Public modules
wrap these with validation and model dispatch; nothing here validates.

The adaptive Gauss-Kronrod core appears twice (leaf/outer) because outer
integrands (Laplace transforms and heat-kernel time integrals of the exact
potential density) themselves contain an inner adaptive integral, and the
compiler cannot type mutual recursion through function-valued arguments.
The two bodies are textual mirrors; keep them in sync.

Integrands are selected by small integer ids rather than callables so the
whole dispatch stays inside one compiled unit.  Parameter vectors ``p`` are
flat float64 arrays; each id documents its layout.

Status codes returned by the adaptive cores:
0 converged, 1 subdivision budget exhausted, 2 NaN from the integrand.
"""

import math

import numpy as np

from ._backend import njit_maybe
from .numerics import GAUSS_WEIGHTS7, GK_NODES15, GK_WEIGHTS15

PANEL_DIRECT = 0
PANEL_TAIL = 1
PANEL_POWER = 2
# quadratic tail map t = knot/(1-v)^2: flattens t^{-q} decay for q >= 3/2,
# which the plain 1/(1-v) map turns into an endpoint singularity
PANEL_TAIL2 = 3

# leaf integrands (no nested quadrature)
F_TSS_POT_INNER = 0   # p = [x, alpha, theta^a*cos(pi a), (theta^a*sin(pi a))^2]
F_LK_TSS = 1          # p = [s, alpha, theta, c]
F_LK_IG = 2           # p = [s, delta, lam]
F_JUMP_TSS = 3        # p = [r, alpha, theta, c, d/2, shift]
F_JUMP_IG = 4         # p = [r, delta, lam, d/2, shift]
F_TSS_POT_INNER_Y = 5  # same p; variable is y = x*v so the e^{-xv} cutoff
#                        sits at y ~ 1 no matter how small x gets

# outer integrands (contain the exact potential density)
# shared head: p[0]=model (0 tss / 1 ig), p[1]=m1, p[2]=m2,
#              p[3]=inner abs_tol, p[4]=inner rel_tol, p[5]=inner max_sub,
#              p[6]=inner tail_knot, p[7:]=extra
F_LAPLACE_U = 10      # extra: [s]
F_GREEN_U = 11        # extra: [r, d/2]
F_PLAIN_U = 12        # extra: none

MODEL_TSS = 0
MODEL_IG = 1

_LOG4PI = math.log(4.0 * math.pi)
_EPS50 = 50.0 * 2.220446049250313e-16


@njit_maybe(cache=True)
def _branch_cut_weight(va, a2, b2):
    """va / ((va - a2)^2 + b2), rationalized so huge va cannot overflow."""
    if va > 1.0:
        q = a2 / va
        return 1.0 / (va * ((1.0 - q) * (1.0 - q) + b2 / (va * va)))
    d1 = va - a2
    return va / (d1 * d1 + b2)


@njit_maybe(cache=True)
def _eval_leaf(fid, t, p):
    if fid == F_TSS_POT_INNER:
        return math.exp(-p[0] * t) * _branch_cut_weight(t ** p[1], p[2], p[3])
    elif fid == F_TSS_POT_INNER_Y:
        v = t / p[0]
        return math.exp(-t) * _branch_cut_weight(v ** p[1], p[2], p[3]) / p[0]
    elif fid == F_LK_TSS:
        return -math.expm1(-p[0] * t) * p[3] * math.exp(-p[2] * t) * t ** (-p[1] - 1.0)
    elif fid == F_LK_IG:
        return -math.expm1(-p[0] * t) * p[1] / math.sqrt(2.0 * math.pi * t * t * t) * math.exp(-0.5 * p[2] * p[2] * t)
    elif fid == F_JUMP_TSS:
        expo = p[5] - p[0] * p[0] / (4.0 * t) - p[2] * t
        if expo <= -600.0:
            # far below the peak; assemble in log space so the power
            # prefactor cannot overflow against a vanishing exponential
            logf = math.log(p[3]) - p[4] * (_LOG4PI + math.log(t)) + (-p[1] - 1.0) * math.log(t) + expo
            return math.exp(logf) if logf > -745.0 else 0.0
        return p[3] * (4.0 * math.pi * t) ** (-p[4]) * t ** (-p[1] - 1.0) * math.exp(expo)
    else:
        expo = p[4] - p[0] * p[0] / (4.0 * t) - 0.5 * p[2] * p[2] * t
        if expo <= -600.0:
            logf = math.log(p[1]) - 0.5 * math.log(2.0 * math.pi * t * t * t) - p[3] * (_LOG4PI + math.log(t)) + expo
            return math.exp(logf) if logf > -745.0 else 0.0
        return p[1] / math.sqrt(2.0 * math.pi * t * t * t) * (4.0 * math.pi * t) ** (-p[3]) * math.exp(expo)


@njit_maybe(cache=True)
def _panel_leaf(fid, p, a, b, kind, tpar):
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    fv = np.empty(15)
    hasnan = False
    for i in range(15):
        z = c + h * GK_NODES15[i]
        if kind == PANEL_DIRECT:
            fi = _eval_leaf(fid, z, p)
        elif kind == PANEL_TAIL:
            om = 1.0 - z
            fi = 0.0 if om <= 0.0 else _eval_leaf(fid, tpar / om, p) * tpar / (om * om)
        elif kind == PANEL_TAIL2:
            om = 1.0 - z
            fi = 0.0 if om <= 0.0 else (_eval_leaf(fid, tpar / (om * om), p)
                                        * 2.0 * tpar / (om * om * om))
        else:
            t = z ** tpar
            if t <= 0.0:
                fi = 0.0
            else:
                fi = _eval_leaf(fid, t, p) * tpar * z ** (tpar - 1.0)
        if math.isnan(fi):
            hasnan = True
            fi = 0.0
        fv[i] = fi
    fk = 0.0
    for i in range(15):
        fk += GK_WEIGHTS15[i] * fv[i]
    fg = 0.0
    for j in range(7):
        fg += GAUSS_WEIGHTS7[j] * fv[2 * j + 1]
    mean = 0.5 * fk
    resasc = 0.0
    resabs = 0.0
    for i in range(15):
        resasc += GK_WEIGHTS15[i] * abs(fv[i] - mean)
        resabs += GK_WEIGHTS15[i] * abs(fv[i])
    value = fk * h
    err = abs(fk - fg) * h
    resasc *= h
    resabs *= h
    if resasc != 0.0 and err != 0.0:
        sc = (200.0 * err / resasc) ** 1.5
        err = resasc * sc if sc < 1.0 else resasc
    if err < _EPS50 * resabs:
        err = _EPS50 * resabs
    return value, err, hasnan


@njit_maybe(cache=True)
def _adapt_leaf(fid, p, a0, b0, k0, t0, abs_tol, rel_tol, max_sub, n_min):
    n0 = a0.shape[0]
    cap = n0 + max_sub + 1
    pa = np.empty(cap)
    pb = np.empty(cap)
    pk = np.empty(cap, np.int64)
    pt = np.empty(cap)
    pv = np.empty(cap)
    pe = np.empty(cap)
    for i in range(n0):
        pa[i] = a0[i]
        pb[i] = b0[i]
        pk[i] = k0[i]
        pt[i] = t0[i]
        v, e, bad = _panel_leaf(fid, p, pa[i], pb[i], pk[i], pt[i])
        if bad:
            return 0.0, 0.0, 0, 2
        pv[i] = v
        pe[i] = e
    n = n0
    used = 0
    while True:
        total = 0.0
        toterr = 0.0
        for i in range(n):
            total += pv[i]
            toterr += pe[i]
        bound = rel_tol * abs(total)
        if bound < abs_tol:
            bound = abs_tol
        # n_min forced rounds: a spike no wider than a seeded panel can fool
        # the first error estimates, one bisection pass makes them honest
        if toterr <= bound and used >= n_min:
            return total, toterr, used, 0
        if used >= max_sub:
            if toterr <= bound:
                return total, toterr, used, 0
            return total, toterr, used, 1
        wi = 0
        we = pe[0]
        for i in range(1, n):
            if pe[i] > we:
                we = pe[i]
                wi = i
        mid = 0.5 * (pa[wi] + pb[wi])
        v1, e1, bad1 = _panel_leaf(fid, p, pa[wi], mid, pk[wi], pt[wi])
        v2, e2, bad2 = _panel_leaf(fid, p, mid, pb[wi], pk[wi], pt[wi])
        if bad1 or bad2:
            return total, toterr, used, 2
        pa[n] = mid
        pb[n] = pb[wi]
        pk[n] = pk[wi]
        pt[n] = pt[wi]
        pv[n] = v2
        pe[n] = e2
        pb[wi] = mid
        pv[wi] = v1
        pe[wi] = e1
        n += 1
        used += 1


@njit_maybe(cache=True)
def _u_tss_core(x, alpha, theta, abs_tol, rel_tol, max_sub, knot):
    """Exact TSS potential density u(x) with full quadrature diagnostics.

    u(x) = theta^{1-a}/a + e^{-theta x} (sin pi a / pi) * I(x) where I is a
    Laplace-type integral along the branch cut; the constant term is the
    residue of 1/phi at the origin and carries the x -> inf limit.
    """
    if theta * x > 745.0:
        # branch-cut term carries e^{-theta x}: below double underflow
        return theta ** (1.0 - alpha) / alpha, 0.0, 0, 0
    ta = theta ** alpha
    sa = math.sin(math.pi * alpha)
    p = np.empty(4)
    p[0] = x
    p[1] = alpha
    p[2] = ta * math.cos(math.pi * alpha)
    p[3] = (ta * sa) ** 2
    # region 1, v in [0, knot]: head flattened by v = w^{1/alpha}
    a0 = np.empty(1)
    b0 = np.empty(1)
    k0 = np.empty(1, np.int64)
    t0 = np.empty(1)
    a0[0] = 0.0
    b0[0] = knot ** alpha
    k0[0] = PANEL_POWER
    t0[0] = 1.0 / alpha
    v1, e1, u1, s1 = _adapt_leaf(F_TSS_POT_INNER, p, a0, b0, k0, t0,
                                 0.5 * abs_tol, 0.5 * rel_tol, max_sub, 0)
    # region 2, v in [knot, inf), walked in y = x v: the integrand decays
    # like v^{-alpha} until the cutoff at v ~ 1/x, and in y that whole
    # stretch is the fixed window [x knot, 1] under one power map.  The
    # deviation of the weight from pure v^{-alpha} decays on a z scale
    # that shrinks with x, so a geometric ladder of seed edges above the
    # lower limit keeps that layer visible to the panel nodes.
    yk = x * knot
    if yk < 1.0:
        g2 = 1.0 / (1.0 - alpha)
        zlo = yk ** (1.0 - alpha)
        a2 = np.empty(14)
        b2 = np.empty(14)
        k2 = np.empty(14, np.int64)
        t2 = np.empty(14)
        n2 = 0
        zprev = zlo
        znext = 4.0 * zlo
        while znext < 0.05 and n2 < 11:
            a2[n2] = zprev
            b2[n2] = znext
            k2[n2] = PANEL_POWER
            t2[n2] = g2
            n2 += 1
            zprev = znext
            znext *= 4.0
        a2[n2] = zprev
        b2[n2] = 1.0
        k2[n2] = PANEL_POWER
        t2[n2] = g2
        n2 += 1
        a2[n2] = 0.0
        b2[n2] = 1.0
        k2[n2] = PANEL_TAIL
        t2[n2] = 1.0
        n2 += 1
        v2, e2, u2, s2 = _adapt_leaf(F_TSS_POT_INNER_Y, p, a2[:n2], b2[:n2],
                                     k2[:n2], t2[:n2],
                                     0.5 * abs_tol, 0.5 * rel_tol, max_sub, 0)
    else:
        a2 = np.empty(1)
        b2 = np.empty(1)
        k2 = np.empty(1, np.int64)
        t2 = np.empty(1)
        a2[0] = 0.0
        b2[0] = 1.0
        k2[0] = PANEL_TAIL
        t2[0] = yk
        v2, e2, u2, s2 = _adapt_leaf(F_TSS_POT_INNER_Y, p, a2, b2, k2, t2,
                                     0.5 * abs_tol, 0.5 * rel_tol, max_sub, 0)
    val = v1 + v2
    err = e1 + e2
    used = u1 + u2
    status = s1 if s1 > s2 else s2
    u = theta ** (1.0 - alpha) / alpha + math.exp(-theta * x) * (sa / math.pi) * val
    return u, err * sa / math.pi, used, status


@njit_maybe(cache=True)
def _u_ig(x, delta, lam):
    """Exact IG potential density, closed form via erfc."""
    s2 = math.sqrt(2.0)
    return (math.exp(-0.5 * lam * lam * x) / math.sqrt(math.pi * x)
            + (lam / s2) * math.erfc(-lam * math.sqrt(x) / s2)) / (s2 * delta)


@njit_maybe(cache=True)
def _u_tss(x, alpha, theta, abs_tol, rel_tol, max_sub, knot):
    u, err, used, status = _u_tss_core(x, alpha, theta, abs_tol, rel_tol, max_sub, knot)
    if status != 0:
        return math.nan
    return u


@njit_maybe(cache=True)
def _eval_outer(fid, t, p):
    # cheap zero-exits first: u itself is an adaptive integral for TSS
    if fid == F_LAPLACE_U and p[7] * t > 745.0:
        return 0.0
    if fid == F_GREEN_U:
        expo = -p[7] * p[7] / (4.0 * t)
        # u grows at most like t^{alpha-1} toward 0, so once the Gaussian
        # factor beats the power prefactors the product is a true zero
        guard = expo
        if t < 1.0:
            guard -= (p[8] + 1.0) * math.log(t)
        if guard < -745.0:
            return 0.0
    if int(p[0]) == MODEL_TSS:
        u = _u_tss(t, p[1], p[2], p[3], p[4], int(p[5]), p[6])
    else:
        u = _u_ig(t, p[1], p[2])
    if fid == F_LAPLACE_U:
        return math.exp(-p[7] * t) * u
    elif fid == F_GREEN_U:
        return (4.0 * math.pi * t) ** (-p[8]) * math.exp(-p[7] * p[7] / (4.0 * t)) * u
    else:
        return u


@njit_maybe(cache=True)
def _panel_outer(fid, p, a, b, kind, tpar):
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    fv = np.empty(15)
    hasnan = False
    for i in range(15):
        z = c + h * GK_NODES15[i]
        if kind == PANEL_DIRECT:
            fi = _eval_outer(fid, z, p)
        elif kind == PANEL_TAIL:
            om = 1.0 - z
            fi = 0.0 if om <= 0.0 else _eval_outer(fid, tpar / om, p) * tpar / (om * om)
        elif kind == PANEL_TAIL2:
            om = 1.0 - z
            fi = 0.0 if om <= 0.0 else (_eval_outer(fid, tpar / (om * om), p)
                                        * 2.0 * tpar / (om * om * om))
        else:
            t = z ** tpar
            if t <= 0.0:
                fi = 0.0
            else:
                fi = _eval_outer(fid, t, p) * tpar * z ** (tpar - 1.0)
        if math.isnan(fi):
            hasnan = True
            fi = 0.0
        fv[i] = fi
    fk = 0.0
    for i in range(15):
        fk += GK_WEIGHTS15[i] * fv[i]
    fg = 0.0
    for j in range(7):
        fg += GAUSS_WEIGHTS7[j] * fv[2 * j + 1]
    mean = 0.5 * fk
    resasc = 0.0
    resabs = 0.0
    for i in range(15):
        resasc += GK_WEIGHTS15[i] * abs(fv[i] - mean)
        resabs += GK_WEIGHTS15[i] * abs(fv[i])
    value = fk * h
    err = abs(fk - fg) * h
    resasc *= h
    resabs *= h
    if resasc != 0.0 and err != 0.0:
        sc = (200.0 * err / resasc) ** 1.5
        err = resasc * sc if sc < 1.0 else resasc
    if err < _EPS50 * resabs:
        err = _EPS50 * resabs
    return value, err, hasnan


@njit_maybe(cache=True)
def _adapt_outer(fid, p, a0, b0, k0, t0, abs_tol, rel_tol, max_sub):
    n0 = a0.shape[0]
    cap = n0 + max_sub + 1
    pa = np.empty(cap)
    pb = np.empty(cap)
    pk = np.empty(cap, np.int64)
    pt = np.empty(cap)
    pv = np.empty(cap)
    pe = np.empty(cap)
    for i in range(n0):
        pa[i] = a0[i]
        pb[i] = b0[i]
        pk[i] = k0[i]
        pt[i] = t0[i]
        v, e, bad = _panel_outer(fid, p, pa[i], pb[i], pk[i], pt[i])
        if bad:
            return 0.0, 0.0, 0, 2
        pv[i] = v
        pe[i] = e
    n = n0
    used = 0
    while True:
        total = 0.0
        toterr = 0.0
        for i in range(n):
            total += pv[i]
            toterr += pe[i]
        bound = rel_tol * abs(total)
        if bound < abs_tol:
            bound = abs_tol
        if toterr <= bound:
            return total, toterr, used, 0
        if used >= max_sub:
            return total, toterr, used, 1
        wi = 0
        we = pe[0]
        for i in range(1, n):
            if pe[i] > we:
                we = pe[i]
                wi = i
        mid = 0.5 * (pa[wi] + pb[wi])
        v1, e1, bad1 = _panel_outer(fid, p, pa[wi], mid, pk[wi], pt[wi])
        v2, e2, bad2 = _panel_outer(fid, p, mid, pb[wi], pk[wi], pt[wi])
        if bad1 or bad2:
            return total, toterr, used, 2
        pa[n] = mid
        pb[n] = pb[wi]
        pk[n] = pk[wi]
        pt[n] = pt[wi]
        pv[n] = v2
        pe[n] = e2
        pb[wi] = mid
        pv[wi] = v1
        pe[wi] = e1
        n += 1
        used += 1


@njit_maybe(cache=True)
def _outer_params(model, m1, m2, abs_tol, rel_tol, max_sub, knot, n_extra):
    p = np.empty(7 + n_extra)
    p[0] = model
    p[1] = m1
    p[2] = m2
    # the inner density integral runs one order tighter than the outer
    # target so its noise never masquerades as outer convergence
    it = abs_tol * 0.01
    if it < 1e-290:
        it = 1e-290
    p[3] = it
    ir = rel_tol * 0.1
    if ir < 5e-15:
        ir = 5e-15
    p[4] = ir
    p[5] = max_sub
    p[6] = knot
    return p


@njit_maybe(cache=True)
def _u_power_head(model, m1, a0, b0, k0, t0, knot):
    """Seed [0, knot] with the substitution flattening u's t -> 0 power."""
    g = 1.0 / m1 if model == MODEL_TSS else 2.0
    a0[0] = 0.0
    b0[0] = knot ** (1.0 / g)
    k0[0] = PANEL_POWER
    t0[0] = g


@njit_maybe(cache=True)
def laplace_of_potential(model, m1, m2, s, abs_tol, rel_tol, max_sub, knot):
    """integral e^{-s t} u(t) dt over (0, inf); equals 1/phi(s)."""
    p = _outer_params(model, m1, m2, abs_tol, rel_tol, max_sub, knot, 1)
    p[7] = s
    a0 = np.empty(2)
    b0 = np.empty(2)
    k0 = np.empty(2, np.int64)
    t0 = np.empty(2)
    _u_power_head(model, m1, a0, b0, k0, t0, knot)
    a0[1] = 0.0
    b0[1] = 1.0
    k0[1] = PANEL_TAIL
    t0[1] = knot
    return _adapt_outer(F_LAPLACE_U, p, a0, b0, k0, t0, abs_tol, rel_tol, max_sub)


@njit_maybe(cache=True)
def potential_measure_value(model, m1, m2, a, b, abs_tol, rel_tol, max_sub, knot):
    """integral of u over the finite interval [a, b]."""
    p = _outer_params(model, m1, m2, abs_tol, rel_tol, max_sub, knot, 0)
    if a == 0.0:
        g = 1.0 / m1 if model == MODEL_TSS else 2.0
        a0 = np.empty(1)
        b0 = np.empty(1)
        k0 = np.empty(1, np.int64)
        t0 = np.empty(1)
        a0[0] = 0.0
        b0[0] = b ** (1.0 / g)
        k0[0] = PANEL_POWER
        t0[0] = g
    else:
        a0 = np.empty(1)
        b0 = np.empty(1)
        k0 = np.empty(1, np.int64)
        t0 = np.empty(1)
        a0[0] = a
        b0[0] = b
        k0[0] = PANEL_DIRECT
        t0[0] = 0.0
    return _adapt_outer(F_PLAIN_U, p, a0, b0, k0, t0, abs_tol, rel_tol, max_sub)


@njit_maybe(cache=True)
def green_value(model, m1, m2, r, halfd, abs_tol, rel_tol, max_sub, knot):
    """integral of (4 pi t)^{-d/2} e^{-r^2/4t} u(t) dt over (0, inf)."""
    p = _outer_params(model, m1, m2, abs_tol, rel_tol, max_sub, knot, 2)
    p[7] = r
    p[8] = halfd
    m = 0.25 * r * r
    if m < knot:
        # breakpoint at the heat-kernel turnover keeps the first panels
        # from straddling the dead zone below it
        a0 = np.empty(3)
        b0 = np.empty(3)
        k0 = np.empty(3, np.int64)
        t0 = np.empty(3)
        a0[0] = 0.0
        b0[0] = m
        k0[0] = PANEL_DIRECT
        t0[0] = 0.0
        a0[1] = m
        b0[1] = knot
        k0[1] = PANEL_DIRECT
        t0[1] = 0.0
        a0[2] = 0.0
        b0[2] = 1.0
        k0[2] = PANEL_TAIL2
        t0[2] = knot
    else:
        # u -> const and the kernel ~ t^{-d/2}, so the quadratic tail map is
        # the one that stays analytic at v = 1; breakpoint where t = m
        vstar = 1.0 - math.sqrt(knot / m)
        a0 = np.empty(3)
        b0 = np.empty(3)
        k0 = np.empty(3, np.int64)
        t0 = np.empty(3)
        a0[0] = 0.0
        b0[0] = knot
        k0[0] = PANEL_DIRECT
        t0[0] = 0.0
        a0[1] = 0.0
        b0[1] = vstar
        k0[1] = PANEL_TAIL2
        t0[1] = knot
        a0[2] = vstar
        b0[2] = 1.0
        k0[2] = PANEL_TAIL2
        t0[2] = knot
    return _adapt_outer(F_GREEN_U, p, a0, b0, k0, t0, abs_tol, rel_tol, max_sub)


@njit_maybe(cache=True)
def jump_value(model, m1, m2, c_tss, r, halfd, abs_tol, rel_tol, max_sub, knot):
    """Shifted jump-density time integral.

    Returns (value, err, used, status, shift): the true integral is
    value * e^{-shift}.  The shift is the minimum of the integrand's
    exponent, so the computed value stays O(prefactor) and relative error
    control survives far-field magnitudes ~ 1e-300.
    """
    if model == MODEL_TSS:
        shift = r * math.sqrt(m2)
        saddle = 0.5 * r / math.sqrt(m2)
        p = np.empty(6)
        p[0] = r
        p[1] = m1
        p[2] = m2
        p[3] = c_tss
        p[4] = halfd
        p[5] = shift
        fid = F_JUMP_TSS
    else:
        shift = r * m2 / math.sqrt(2.0)
        saddle = r / (m2 * math.sqrt(2.0))
        p = np.empty(5)
        p[0] = r
        p[1] = m1
        p[2] = m2
        p[3] = halfd
        p[4] = shift
        fid = F_JUMP_IG
    # characteristic times: the Gaussian turnover r^2/4 rules small r, the
    # tempering saddle rules large r.  In the far field the shifted mass is
    # a peak of relative width ~ shift^{-1/2} at the saddle; a geometric
    # ladder of edges around it keeps every live flank inside a panel small
    # enough for its nodes to notice, otherwise whole slivers of mass slip
    # between coarse nodes and the sum looks converged short of its value.
    m = 0.25 * r * r
    cand = np.empty(13)
    cand[0] = 0.125 * m
    cand[1] = 0.25 * m
    cand[2] = 0.5 * m
    cand[3] = m
    if shift > 4.0:
        cand[4] = 0.125 * saddle
        cand[5] = 0.25 * saddle
        cand[6] = 0.5 * saddle
        cand[7] = 0.75 * saddle
        cand[8] = saddle
        cand[9] = 1.5 * saddle
        cand[10] = 2.0 * saddle
        cand[11] = 4.0 * saddle
        cand[12] = 8.0 * saddle
    else:
        for i in range(4, 13):
            cand[i] = saddle
    for i in range(1, 13):
        key = cand[i]
        j = i - 1
        while j >= 0 and cand[j] > key:
            cand[j + 1] = cand[j]
            j -= 1
        cand[j + 1] = key
    a0 = np.empty(15)
    b0 = np.empty(15)
    k0 = np.empty(15, np.int64)
    t0 = np.empty(15)
    n = 0
    prev = 0.0
    for i in range(13):
        edge = cand[i]
        if edge > prev * (1.0 + 1e-12) and prev < edge < knot:
            a0[n] = prev
            b0[n] = edge
            k0[n] = PANEL_DIRECT
            t0[n] = 0.0
            n += 1
            prev = edge
    a0[n] = prev
    b0[n] = knot
    k0[n] = PANEL_DIRECT
    t0[n] = 0.0
    n += 1
    vprev = 0.0
    for i in range(13):
        edge = cand[i]
        if edge > knot:
            vedge = 1.0 - knot / edge
            if vedge > vprev + 1e-12:
                a0[n] = vprev
                b0[n] = vedge
                k0[n] = PANEL_TAIL
                t0[n] = knot
                n += 1
                vprev = vedge
    a0[n] = vprev
    b0[n] = 1.0
    k0[n] = PANEL_TAIL
    t0[n] = knot
    n += 1
    # boundary-layer and spike panels flatter the Kronrod error estimate by
    # a couple of orders; the integrand is cheap, so buy the margin back
    abs_eff = abs_tol * 0.01
    if abs_eff < 1e-290:
        abs_eff = 1e-290
    rel_eff = rel_tol * 0.01
    if rel_eff < 5e-15:
        rel_eff = 5e-15
    val, err, used, status = _adapt_leaf(fid, p, a0[:n], b0[:n], k0[:n], t0[:n],
                                         abs_eff, rel_eff, max_sub, n)
    return val, err, used, status, shift


@njit_maybe(cache=True)
def levy_khintchine_value(model, m1, m2, c_tss, s, abs_tol, rel_tol, max_sub, knot):
    """integral (1 - e^{-s x}) levy(x) dx over (0, inf)."""
    if model == MODEL_TSS:
        p = np.empty(4)
        p[0] = s
        p[1] = m1
        p[2] = m2
        p[3] = c_tss
        fid = F_LK_TSS
        g = 1.0 / (1.0 - m1)  # integrand ~ x^{-alpha} at 0
    else:
        p = np.empty(3)
        p[0] = s
        p[1] = m1
        p[2] = m2
        fid = F_LK_IG
        g = 2.0
    a0 = np.empty(2)
    b0 = np.empty(2)
    k0 = np.empty(2, np.int64)
    t0 = np.empty(2)
    a0[0] = 0.0
    b0[0] = knot ** (1.0 / g)
    k0[0] = PANEL_POWER
    t0[0] = g
    a0[1] = 0.0
    b0[1] = 1.0
    k0[1] = PANEL_TAIL
    t0[1] = knot
    return _adapt_leaf(fid, p, a0, b0, k0, t0, abs_tol, rel_tol, max_sub, 0)
