"""Bimodules, representations of paired operator systems, duals, and the
induced module structures (semidirect products, End(M), hat actions).

Right actions are stored as matrices applied to column vectors, with the
composition convention m.r(ab) = (m.r(a)).r(b) encoded as r(b) @ r(a); the
convention is fixed here once and exercised by the bimodule axioms.
"""

from __future__ import annotations

from collections import namedtuple

from .errors import PayloadError, PreconditionError
from .kernel import Matrix, block_diag, bv, kron, leg_apply, vneg, vsub
from .identities import Ctx, identity, run_identities
from .report import Violation, make_report
from .systems import OperatorSystem, check_operator_system
from .structures import Algebra


class Bimodule:
    """Module data: ell(e_i) and r(e_i) as matrices on an mdim-dim space."""

    def __init__(self, mdim, left, right, labels=None):
        self.mdim = mdim
        self.left = tuple(left)
        self.right = tuple(right)
        if len(self.left) != len(self.right):
            raise PayloadError("left/right action lists differ in length")
        for m in self.left + self.right:
            if m.rows != mdim or m.cols != mdim:
                raise PayloadError("action matrix does not match the module dimension")
        self.adim = len(self.left)
        self.labels = tuple(labels) if labels else tuple(f"m{i}" for i in range(mdim))

    def act_left(self, avec, m):
        out = [self.left[0].field.zero()] * self.mdim
        for i, c in enumerate(avec):
            if c:
                img = self.left[i].apply(m)
                out = [a + c * b for a, b in zip(out, img)]
        return tuple(out)

    def act_right(self, avec, m):
        out = [self.right[0].field.zero()] * self.mdim
        for i, c in enumerate(avec):
            if c:
                img = self.right[i].apply(m)
                out = [a + c * b for a, b in zip(out, img)]
        return tuple(out)


class Representation:
    def __init__(self, bimodule: Bimodule, alpha: Matrix, beta: Matrix):
        for m in (alpha, beta):
            if m.rows != bimodule.mdim or m.cols != bimodule.mdim:
                raise PayloadError("structure map does not match the module dimension")
        self.bimodule = bimodule
        self.alpha = alpha
        self.beta = beta


def adjoint_bimodule(A) -> Bimodule:
    left = [A.left_mult_basis(i) for i in range(A.dim)]
    right = [A.right_mult_basis(i) for i in range(A.dim)]
    return Bimodule(A.dim, left, right, labels=A.basis)


def dual_bimodule(M: Bimodule) -> Bimodule:
    """Dual module: the left action is the transposed right action and
    conversely."""
    left = [m.transpose() for m in M.right]
    right = [m.transpose() for m in M.left]
    return Bimodule(M.mdim, left, right, labels=tuple(f"{x}*" for x in M.labels))


# ---------------------------------------------------------------------------
# identity catalog: bimodule and representation conditions

def _ev(ctx, i):
    return ctx.A.basis_vector(i)


def _mv(ctx, u):
    return bv(ctx.M.left[0].field, ctx.M.mdim, u)


@identity("eq:cb#1", ("A", "A", "M"))
def _cb1(ctx, idx):
    i, j, u = idx
    M = ctx.M
    m = _mv(ctx, u)
    return [M.left[i].apply(M.left[j].apply(m)),
            vneg(M.act_left(ctx.A.product(i, j), m))]


@identity("eq:cb#2", ("A", "A", "M"))
def _cb2(ctx, idx):
    i, j, u = idx
    M = ctx.M
    m = _mv(ctx, u)
    return [M.act_right(ctx.A.product(i, j), m),
            vneg(M.right[j].apply(M.right[i].apply(m)))]


@identity("eq:cb1", ("A", "A", "M"))
def _cb_mixed(ctx, idx):
    i, j, u = idx
    M = ctx.M
    m = _mv(ctx, u)
    return [M.left[i].apply(M.right[j].apply(m)),
            vneg(M.right[j].apply(M.left[i].apply(m)))]


@identity("eq:cf#1", ("A", "M"))
def _cf_1(ctx, idx):
    i, u = idx
    M, R, al, be = ctx.M, ctx.R, ctx.alpha, ctx.beta
    m = _mv(ctx, u)
    return [M.act_left(R.col(i), al.col(u)),
            vneg(al.apply(M.act_left(R.col(i), m))),
            vneg(al.apply(M.left[i].apply(be.col(u))))]


@identity("eq:cf#2", ("A", "M"))
def _cf_2(ctx, idx):
    i, u = idx
    M, R, S, al = ctx.M, ctx.R, ctx.S, ctx.alpha
    m = _mv(ctx, u)
    return [M.act_left(R.col(i), al.col(u)),
            vneg(al.apply(M.act_left(S.col(i), m))),
            vneg(al.apply(M.left[i].apply(al.col(u))))]


@identity("eq:cf2#1", ("A", "M"))
def _cf2_1(ctx, idx):
    i, u = idx
    M, R, al, be = ctx.M, ctx.R, ctx.alpha, ctx.beta
    m = _mv(ctx, u)
    return [M.act_right(R.col(i), al.col(u)),
            vneg(al.apply(M.act_right(R.col(i), m))),
            vneg(al.apply(M.right[i].apply(be.col(u))))]


@identity("eq:cf2#2", ("A", "M"))
def _cf2_2(ctx, idx):
    i, u = idx
    M, R, S, al = ctx.M, ctx.R, ctx.S, ctx.alpha
    m = _mv(ctx, u)
    return [M.act_right(R.col(i), al.col(u)),
            vneg(al.apply(M.act_right(S.col(i), m))),
            vneg(al.apply(M.right[i].apply(al.col(u))))]


@identity("eq:cf1#1", ("A", "M"))
def _cf1_1(ctx, idx):
    i, u = idx
    M, R, S, be = ctx.M, ctx.R, ctx.S, ctx.beta
    m = _mv(ctx, u)
    return [M.act_left(S.col(i), be.col(u)),
            vneg(be.apply(M.act_left(R.col(i), m))),
            vneg(be.apply(M.left[i].apply(be.col(u))))]


@identity("eq:cf1#2", ("A", "M"))
def _cf1_2(ctx, idx):
    i, u = idx
    M, S, al, be = ctx.M, ctx.S, ctx.alpha, ctx.beta
    m = _mv(ctx, u)
    return [M.act_left(S.col(i), be.col(u)),
            vneg(be.apply(M.act_left(S.col(i), m))),
            vneg(be.apply(M.left[i].apply(al.col(u))))]


@identity("eq:cf3#1", ("A", "M"))
def _cf3_1(ctx, idx):
    i, u = idx
    M, R, S, be = ctx.M, ctx.R, ctx.S, ctx.beta
    m = _mv(ctx, u)
    return [M.act_right(S.col(i), be.col(u)),
            vneg(be.apply(M.act_right(R.col(i), m))),
            vneg(be.apply(M.right[i].apply(be.col(u))))]


@identity("eq:cf3#2", ("A", "M"))
def _cf3_2(ctx, idx):
    i, u = idx
    M, S, al, be = ctx.M, ctx.S, ctx.alpha, ctx.beta
    m = _mv(ctx, u)
    return [M.act_right(S.col(i), be.col(u)),
            vneg(be.apply(M.act_right(S.col(i), m))),
            vneg(be.apply(M.right[i].apply(al.col(u))))]


_CF_TAGS = ("eq:cf#1", "eq:cf#2", "eq:cf2#1", "eq:cf2#2",
            "eq:cf1#1", "eq:cf1#2", "eq:cf3#1", "eq:cf3#2")


@identity("eq:cj#1", ("A", "M"))
def _cj_1(ctx, idx):
    i, u = idx
    M, R, S, xi = ctx.M, ctx.R, ctx.S, ctx.xi
    m = _mv(ctx, u)
    return [xi.apply(M.act_left(R.col(i), m)),
            vneg(xi.apply(M.left[i].apply(xi.col(u)))),
            vneg(M.act_left(S.col(i), xi.col(u)))]


@identity("eq:cj#2", ("A", "M"))
def _cj_2(ctx, idx):
    i, u = idx
    M, R, xi, ze = ctx.M, ctx.R, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [xi.apply(M.act_left(R.col(i), m)),
            vneg(M.act_left(R.col(i), xi.col(u))),
            vneg(ze.apply(M.left[i].apply(xi.col(u))))]


@identity("eq:cj1#1", ("A", "M"))
def _cj1_1(ctx, idx):
    i, u = idx
    M, R, S, xi = ctx.M, ctx.R, ctx.S, ctx.xi
    m = _mv(ctx, u)
    return [xi.apply(M.act_right(R.col(i), m)),
            vneg(xi.apply(M.right[i].apply(xi.col(u)))),
            vneg(M.act_right(S.col(i), xi.col(u)))]


@identity("eq:cj1#2", ("A", "M"))
def _cj1_2(ctx, idx):
    i, u = idx
    M, R, xi, ze = ctx.M, ctx.R, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [xi.apply(M.act_right(R.col(i), m)),
            vneg(M.act_right(R.col(i), xi.col(u))),
            vneg(ze.apply(M.right[i].apply(xi.col(u))))]


@identity("eq:cj2#1", ("A", "M"))
def _cj2_1(ctx, idx):
    i, u = idx
    M, S, xi, ze = ctx.M, ctx.S, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.act_left(S.col(i), m)),
            vneg(xi.apply(M.left[i].apply(ze.col(u)))),
            vneg(M.act_left(S.col(i), ze.col(u)))]


@identity("eq:cj2#2", ("A", "M"))
def _cj2_2(ctx, idx):
    i, u = idx
    M, R, S, ze = ctx.M, ctx.R, ctx.S, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.act_left(S.col(i), m)),
            vneg(M.act_left(R.col(i), ze.col(u))),
            vneg(ze.apply(M.left[i].apply(ze.col(u))))]


@identity("eq:cj3#1", ("A", "M"))
def _cj3_1(ctx, idx):
    i, u = idx
    M, S, xi, ze = ctx.M, ctx.S, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.act_right(S.col(i), m)),
            vneg(xi.apply(M.right[i].apply(ze.col(u)))),
            vneg(M.act_right(S.col(i), ze.col(u)))]


@identity("eq:cj3#2", ("A", "M"))
def _cj3_2(ctx, idx):
    i, u = idx
    M, R, S, ze = ctx.M, ctx.R, ctx.S, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.act_right(S.col(i), m)),
            vneg(M.act_right(R.col(i), ze.col(u))),
            vneg(ze.apply(M.right[i].apply(ze.col(u))))]


_CJ_TAGS = ("eq:cj#1", "eq:cj#2", "eq:cj1#1", "eq:cj1#2",
            "eq:cj2#1", "eq:cj2#2", "eq:cj3#1", "eq:cj3#2")


@identity("eq:ck#1", ("A", "A"))
def _ck_1(ctx, idx):
    i, j = idx
    A, R, S, Q = ctx.A, ctx.R, ctx.S, ctx.Q
    return [Q.apply(A.mul(R.col(i), _ev(ctx, j))),
            vneg(Q.apply(A.mul(_ev(ctx, i), Q.col(j)))),
            vneg(A.mul(S.col(i), Q.col(j)))]


@identity("eq:ck#2", ("A", "A"))
def _ck_2(ctx, idx):
    i, j = idx
    A, R, Q, T = ctx.A, ctx.R, ctx.Q, ctx.T
    return [Q.apply(A.mul(R.col(i), _ev(ctx, j))),
            vneg(A.mul(R.col(i), Q.col(j))),
            vneg(T.apply(A.mul(_ev(ctx, i), Q.col(j))))]


@identity("eq:ck1#1", ("A", "A"))
def _ck1_1(ctx, idx):
    i, j = idx
    A, R, S, Q = ctx.A, ctx.R, ctx.S, ctx.Q
    return [Q.apply(A.mul(_ev(ctx, i), R.col(j))),
            vneg(Q.apply(A.mul(Q.col(i), _ev(ctx, j)))),
            vneg(A.mul(Q.col(i), S.col(j)))]


@identity("eq:ck1#2", ("A", "A"))
def _ck1_2(ctx, idx):
    i, j = idx
    A, R, Q, T = ctx.A, ctx.R, ctx.Q, ctx.T
    return [Q.apply(A.mul(_ev(ctx, i), R.col(j))),
            vneg(A.mul(Q.col(i), R.col(j))),
            vneg(T.apply(A.mul(Q.col(i), _ev(ctx, j))))]


@identity("eq:ck2#1", ("A", "A"))
def _ck2_1(ctx, idx):
    i, j = idx
    A, S, Q, T = ctx.A, ctx.S, ctx.Q, ctx.T
    return [T.apply(A.mul(S.col(i), _ev(ctx, j))),
            vneg(Q.apply(A.mul(_ev(ctx, i), T.col(j)))),
            vneg(A.mul(S.col(i), T.col(j)))]


@identity("eq:ck2#2", ("A", "A"))
def _ck2_2(ctx, idx):
    i, j = idx
    A, R, S, T = ctx.A, ctx.R, ctx.S, ctx.T
    return [T.apply(A.mul(S.col(i), _ev(ctx, j))),
            vneg(T.apply(A.mul(_ev(ctx, i), T.col(j)))),
            vneg(A.mul(R.col(i), T.col(j)))]


@identity("eq:ck3#1", ("A", "A"))
def _ck3_1(ctx, idx):
    i, j = idx
    A, S, Q, T = ctx.A, ctx.S, ctx.Q, ctx.T
    return [T.apply(A.mul(_ev(ctx, i), S.col(j))),
            vneg(Q.apply(A.mul(T.col(i), _ev(ctx, j)))),
            vneg(A.mul(T.col(i), S.col(j)))]


@identity("eq:ck3#2", ("A", "A"))
def _ck3_2(ctx, idx):
    i, j = idx
    A, R, S, T = ctx.A, ctx.R, ctx.S, ctx.T
    return [T.apply(A.mul(_ev(ctx, i), S.col(j))),
            vneg(T.apply(A.mul(T.col(i), _ev(ctx, j)))),
            vneg(A.mul(T.col(i), R.col(j)))]


_CK_TAGS = ("eq:ck#1", "eq:ck#2", "eq:ck1#1", "eq:ck1#2",
            "eq:ck2#1", "eq:ck2#2", "eq:ck3#1", "eq:ck3#2")


@identity("eq:ck5#1", ("A",))
def _ck5_1(ctx, idx):
    (i,) = idx
    C, R, Q, T = ctx.C, ctx.R, ctx.Q, ctx.T
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 1), -leg_apply(drx, R, 2),
            -leg_apply(leg_apply(dx, T, 1), R, 2)]


@identity("eq:ck5#2", ("A",))
def _ck5_2(ctx, idx):
    (i,) = idx
    C, R, S, Q = ctx.C, ctx.R, ctx.S, ctx.Q
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 1), -leg_apply(C.delta(S.col(i)), R, 2),
            -leg_apply(leg_apply(dx, Q, 1), R, 2)]


@identity("eq:ck6#1", ("A",))
def _ck6_1(ctx, idx):
    (i,) = idx
    C, R, S, Q = ctx.C, ctx.R, ctx.S, ctx.Q
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 2), -leg_apply(C.delta(S.col(i)), R, 1),
            -leg_apply(leg_apply(dx, R, 1), Q, 2)]


@identity("eq:ck6#2", ("A",))
def _ck6_2(ctx, idx):
    (i,) = idx
    C, R, Q, T = ctx.C, ctx.R, ctx.Q, ctx.T
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 2), -leg_apply(drx, R, 1),
            -leg_apply(leg_apply(dx, R, 1), T, 2)]


@identity("eq:ck7#1", ("A",))
def _ck7_1(ctx, idx):
    (i,) = idx
    C, R, S, T = ctx.C, ctx.R, ctx.S, ctx.T
    dsx = C.delta(S.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(dsx, T, 1), -leg_apply(C.delta(R.col(i)), S, 2),
            -leg_apply(leg_apply(dx, T, 1), S, 2)]


@identity("eq:ck7#2", ("A",))
def _ck7_2(ctx, idx):
    (i,) = idx
    C, S, Q, T = ctx.C, ctx.S, ctx.Q, ctx.T
    dsx = C.delta(S.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(dsx, T, 1), -leg_apply(dsx, S, 2),
            -leg_apply(leg_apply(dx, Q, 1), S, 2)]


@identity("eq:ck8#1", ("A",))
def _ck8_1(ctx, idx):
    (i,) = idx
    C, S, Q, T = ctx.C, ctx.S, ctx.Q, ctx.T
    dsx = C.delta(S.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(dsx, T, 2), -leg_apply(dsx, S, 1),
            -leg_apply(leg_apply(dx, S, 1), Q, 2)]


@identity("eq:ck8#2", ("A",))
def _ck8_2(ctx, idx):
    (i,) = idx
    C, R, S, T = ctx.C, ctx.R, ctx.S, ctx.T
    dsx = C.delta(S.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(dsx, T, 2), -leg_apply(C.delta(R.col(i)), S, 1),
            -leg_apply(leg_apply(dx, S, 1), T, 2)]


_CK5_TAGS = ("eq:ck5#1", "eq:ck5#2", "eq:ck6#1", "eq:ck6#2",
             "eq:ck7#1", "eq:ck7#2", "eq:ck8#1", "eq:ck8#2")


@identity("eq:dn#1", ("A", "M"))
def _dn_1(ctx, idx):
    i, u = idx
    M, Q, al, be, xi = ctx.M, ctx.Q, ctx.alpha, ctx.beta, ctx.xi
    m = _mv(ctx, u)
    return [xi.apply(M.right[i].apply(al.col(u))),
            vneg(xi.apply(M.act_right(Q.col(i), m))),
            vneg(M.act_right(Q.col(i), be.col(u)))]


@identity("eq:dn#2", ("A", "M"))
def _dn_2(ctx, idx):
    i, u = idx
    M, Q, al, xi, ze = ctx.M, ctx.Q, ctx.alpha, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [xi.apply(M.right[i].apply(al.col(u))),
            vneg(ze.apply(M.act_right(Q.col(i), m))),
            vneg(M.act_right(Q.col(i), al.col(u)))]


@identity("eq:dn1#1", ("A", "M"))
def _dn1_1(ctx, idx):
    i, u = idx
    M, Q, al, xi, ze = ctx.M, ctx.Q, ctx.alpha, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [xi.apply(M.left[i].apply(al.col(u))),
            vneg(ze.apply(M.act_left(Q.col(i), m))),
            vneg(M.act_left(Q.col(i), al.col(u)))]


@identity("eq:dn1#2", ("A", "M"))
def _dn1_2(ctx, idx):
    i, u = idx
    M, Q, al, be, xi = ctx.M, ctx.Q, ctx.alpha, ctx.beta, ctx.xi
    m = _mv(ctx, u)
    return [xi.apply(M.left[i].apply(al.col(u))),
            vneg(xi.apply(M.act_left(Q.col(i), m))),
            vneg(M.act_left(Q.col(i), be.col(u)))]


@identity("eq:dn2#1", ("A", "M"))
def _dn2_1(ctx, idx):
    i, u = idx
    M, T, be, xi, ze = ctx.M, ctx.T, ctx.beta, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.right[i].apply(be.col(u))),
            vneg(xi.apply(M.act_right(T.col(i), m))),
            vneg(M.act_right(T.col(i), be.col(u)))]


@identity("eq:dn2#2", ("A", "M"))
def _dn2_2(ctx, idx):
    i, u = idx
    M, T, al, be, ze = ctx.M, ctx.T, ctx.alpha, ctx.beta, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.right[i].apply(be.col(u))),
            vneg(ze.apply(M.act_right(T.col(i), m))),
            vneg(M.act_right(T.col(i), al.col(u)))]


@identity("eq:dn3#1", ("A", "M"))
def _dn3_1(ctx, idx):
    i, u = idx
    M, T, al, be, ze = ctx.M, ctx.T, ctx.alpha, ctx.beta, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.left[i].apply(be.col(u))),
            vneg(ze.apply(M.act_left(T.col(i), m))),
            vneg(M.act_left(T.col(i), al.col(u)))]


@identity("eq:dn3#2", ("A", "M"))
def _dn3_2(ctx, idx):
    i, u = idx
    M, T, be, xi, ze = ctx.M, ctx.T, ctx.beta, ctx.xi, ctx.zeta
    m = _mv(ctx, u)
    return [ze.apply(M.left[i].apply(be.col(u))),
            vneg(xi.apply(M.act_left(T.col(i), m))),
            vneg(M.act_left(T.col(i), be.col(u)))]


_DN_TAGS = ("eq:dn#1", "eq:dn#2", "eq:dn1#1", "eq:dn1#2",
            "eq:dn2#1", "eq:dn2#2", "eq:dn3#1", "eq:dn3#2")


@identity("weighted-rep#1", ("A", "M"))
def _wrep_1(ctx, idx):
    i, u = idx
    M, R, al, lam = ctx.M, ctx.R, ctx.alpha, ctx.lam
    m = _mv(ctx, u)
    return [M.act_left(R.col(i), al.col(u)),
            vneg(al.apply(M.act_left(R.col(i), m))),
            vneg(al.apply(M.left[i].apply(al.col(u)))),
            vneg(tuple(lam * x for x in al.apply(M.left[i].apply(m))))]


@identity("weighted-rep#2", ("A", "M"))
def _wrep_2(ctx, idx):
    i, u = idx
    M, R, al, lam = ctx.M, ctx.R, ctx.alpha, ctx.lam
    m = _mv(ctx, u)
    return [M.act_right(R.col(i), al.col(u)),
            vneg(al.apply(M.right[i].apply(al.col(u)))),
            vneg(al.apply(M.act_right(R.col(i), m))),
            vneg(tuple(lam * x for x in al.apply(M.right[i].apply(m))))]


@identity("eq:reppreliealg1", ("A", "A", "M"))
def _prelie_rep1(ctx, idx):
    i, j, u = idx
    P, rho = ctx.P, ctx.rho
    m = bv(rho[0].field, rho[0].rows, u)
    comm = vsub(P.product(i, j), P.product(j, i))
    acted = [rho[0].field.zero()] * rho[0].rows
    for k, c in enumerate(comm):
        if c:
            img = rho[k].apply(m)
            acted = [a + c * b for a, b in zip(acted, img)]
    return [tuple(acted),
            vneg(rho[i].apply(rho[j].apply(m))),
            rho[j].apply(rho[i].apply(m))]


@identity("eq:reppreliealg2", ("A", "A", "M"))
def _prelie_rep2(ctx, idx):
    i, j, u = idx
    P, rho, phi = ctx.P, ctx.rho, ctx.phi
    m = bv(rho[0].field, rho[0].rows, u)
    prod = P.product(i, j)
    acted = [rho[0].field.zero()] * rho[0].rows
    for k, c in enumerate(prod):
        if c:
            img = phi[k].apply(m)
            acted = [a + c * b for a, b in zip(acted, img)]
    return [tuple(acted),
            vneg(rho[i].apply(phi[j].apply(m))),
            phi[j].apply(rho[i].apply(m)),
            vneg(phi[j].apply(phi[i].apply(m)))]


# ---------------------------------------------------------------------------
# checkers

def _module_ctx(A, M, **maps):
    return Ctx({"A": A.basis, "M": M.labels}, A=A, M=M, **maps)


def check_bimodule(A, M: Bimodule) -> "Report":
    if M.adim != A.dim:
        raise PayloadError("action list length does not match the algebra dimension")
    ctx = _module_ctx(A, M)
    return run_identities("bimodule", ("eq:cb#1", "eq:cb#2", "eq:cb1"), ctx)


def check_representation(sys: OperatorSystem, rep: Representation) -> "Report":
    M = rep.bimodule
    bi = check_bimodule(sys.carrier, M)
    ctx = _module_ctx(sys.carrier, M, R=sys.R, S=sys.S, alpha=rep.alpha, beta=rep.beta)
    own = run_identities("representation", _CF_TAGS, ctx)
    return make_report("representation", own.violations, subreports=(bi,))


def check_module_admissible(sys: OperatorSystem, M: Bimodule, xi: Matrix,
                            zeta: Matrix) -> "Report":
    """Conditions making the transposed pair a representation on the dual module."""
    ctx = _module_ctx(sys.carrier, M, R=sys.R, S=sys.S, xi=xi, zeta=zeta)
    return run_identities("module-admissible", _CJ_TAGS, ctx)


def adjoint_admissible_report(A, R, S, Q, T) -> "Report":
    ctx = Ctx({"A": A.basis}, A=A, R=R, S=S, Q=Q, T=T)
    return run_identities("adjoint-admissible", _CK_TAGS, ctx)


def check_adjoint_admissible(A, R, S, Q, T) -> "Report":
    base = check_operator_system("symmetric_rbs", OperatorSystem(A, R, S))
    if not base.passed:
        raise PreconditionError("carrier maps are not a symmetric paired system", base)
    return adjoint_admissible_report(A, R, S, Q, T)


def coadjoint_admissible_report(A, C, R, S, Q, T) -> "Report":
    ctx = Ctx({"A": A.basis}, A=A, C=C, R=R, S=S, Q=Q, T=T)
    return run_identities("coadjoint-admissible", _CK5_TAGS, ctx)


def check_dn_conditions(M: Bimodule, A, Q, T, alpha, beta, xi, zeta) -> "Report":
    ctx = _module_ctx(A, M, Q=Q, T=T, alpha=alpha, beta=beta, xi=xi, zeta=zeta)
    return run_identities("mixed-module-compat", _DN_TAGS, ctx)


def check_prelie_representation(P, rho, phi) -> "Report":
    """P is a product with symmetric associator; rho/phi are per-basis matrices."""
    labels = tuple(f"m{i}" for i in range(rho[0].rows))
    ctx = Ctx({"A": P.basis, "M": labels}, P=P, rho=tuple(rho), phi=tuple(phi))
    return run_identities("prelie-representation",
                          ("eq:reppreliealg1", "eq:reppreliealg2"), ctx)


def check_rep_homomorphism(sys, rep1: Representation, rep2: Representation,
                           f: Matrix) -> "Report":
    """f intertwines actions and structure maps of two representations."""
    M1, M2 = rep1.bimodule, rep2.bimodule
    violations = []
    for i in range(sys.carrier.dim):
        pairs = (("left", f @ M1.left[i], M2.left[i] @ f),
                 ("right", f @ M1.right[i], M2.right[i] @ f))
        for name, lhs, rhs in pairs:
            if lhs != rhs:
                violations.append(Violation("rep-homomorphism",
                                            (name, sys.carrier.basis[i]),
                                            tuple(str(x) for x in (lhs - rhs).entries)))
    for name, lhs, rhs in (("alpha", f @ rep1.alpha, rep2.alpha @ f),
                           ("beta", f @ rep1.beta, rep2.beta @ f)):
        if lhs != rhs:
            violations.append(Violation("rep-homomorphism", (name,),
                                        tuple(str(x) for x in (lhs - rhs).entries)))
    return make_report("rep-homomorphism", violations)


# ---------------------------------------------------------------------------
# constructions

def semidirect_algebra(A, M: Bimodule) -> Algebra:
    """Product (a+m)(b+n) = ab + ell(a)n + m r(b) on A + M, as a raw algebra."""
    n, md = A.dim, M.mdim
    dim = n + md
    z = A.field.zero()
    zero = (z,) * dim

    def embed_a(vec):
        return tuple(vec) + (z,) * md

    def embed_m(vec):
        return (z,) * n + tuple(vec)

    table = [[zero] * dim for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            table[i][j] = embed_a(A.product(i, j))
        for v in range(md):
            table[i][n + v] = embed_m(M.left[i].col(v))
    for u in range(md):
        for j in range(n):
            table[n + u][j] = embed_m(M.right[j].col(u))
    basis = A.basis + M.labels
    return Algebra(A.field, table, basis=basis, raw=True)


def semidirect(sys: OperatorSystem, rep: Representation) -> OperatorSystem:
    """Paired system on A + M with block maps R+alpha, S+beta."""
    carrier = semidirect_algebra(sys.carrier, rep.bimodule)
    R = block_diag(sys.R, rep.alpha)
    S = block_diag(sys.S, rep.beta)
    return OperatorSystem(carrier, R, S)


def dual_representation(sys: OperatorSystem, M: Bimodule, xi: Matrix, zeta: Matrix):
    """Transposed data on the dual module, plus the report of the conditions
    under which it is a representation."""
    rep = Representation(dual_bimodule(M), xi.transpose(), zeta.transpose())
    return rep, check_module_admissible(sys, M, xi, zeta)


def endo_representation(sys: OperatorSystem, rep: Representation) -> Representation:
    """Induced representation on End(M) by postcomposition."""
    base = check_representation(sys, rep)
    if not base.passed:
        raise PreconditionError("input is not a representation", base)
    M = rep.bimodule
    eye = Matrix.identity(sys.carrier.field, M.mdim)
    left = [kron(M.left[i], eye) for i in range(M.adim)]
    right = [kron(M.right[i], eye) for i in range(M.adim)]
    endo = Bimodule(M.mdim ** 2, left, right,
                    labels=tuple(f"E{p}{q}" for p in range(M.mdim) for q in range(M.mdim)))
    return Representation(endo, kron(rep.alpha, eye), kron(rep.beta, eye))


HatStructures = namedtuple("HatStructures",
                           "star star_module starp starp_module "
                           "bullet bullet_rho bullet_phi bulletp bulletp_rho bulletp_phi")


def hat_structures(sys: OperatorSystem, rep: Representation) -> HatStructures:
    """Module structures over the derived products.

    Over R(a)b + aS(b): ell^(a)m = ell(R(a))m + ell(a)beta(m) and
    m r^(a) = m r(S(a)) + alpha(m) r(a); over the primed product the roles
    of (R, alpha) and (S, beta) swap.  Over R(a)b - bS(a) the pair
    rho(a)m = ell(R(a))m - m r(S(a)), phi(a)m = alpha(m) r(a) - ell(a)beta(m)
    and its primed mirror.
    """
    base = check_representation(sys, rep)
    if not base.passed:
        raise PreconditionError("input is not a representation", base)
    from .systems import derived_products
    A, R, S = sys.carrier, sys.R, sys.S
    M, al, be = rep.bimodule, rep.alpha, rep.beta
    star, starp, bullet, bulletp = derived_products(A, R, S)

    def act_combo(mats, col):
        out = Matrix.zero(A.field, M.mdim)
        for k, c in enumerate(col):
            if c:
                out = out + mats[k].scale(c)
        return out

    left1 = [act_combo(M.left, R.col(i)) + M.left[i] @ be for i in range(A.dim)]
    right1 = [act_combo(M.right, S.col(i)) + M.right[i] @ al for i in range(A.dim)]
    left2 = [act_combo(M.left, S.col(i)) + M.left[i] @ al for i in range(A.dim)]
    right2 = [act_combo(M.right, R.col(i)) + M.right[i] @ be for i in range(A.dim)]
    rho1 = [act_combo(M.left, R.col(i)) - act_combo(M.right, S.col(i)) for i in range(A.dim)]
    phi1 = [M.right[i] @ al - M.left[i] @ be for i in range(A.dim)]
    rho2 = [act_combo(M.left, S.col(i)) - act_combo(M.right, R.col(i)) for i in range(A.dim)]
    phi2 = [M.right[i] @ be - M.left[i] @ al for i in range(A.dim)]
    return HatStructures(
        star, Bimodule(M.mdim, left1, right1, labels=M.labels),
        starp, Bimodule(M.mdim, left2, right2, labels=M.labels),
        bullet, tuple(rho1), tuple(phi1),
        bulletp, tuple(rho2), tuple(phi2))


def weight_rep_embed(A, R: Matrix, lam, M: Bimodule, alpha: Matrix):
    """Representation (alpha, alpha + lam*id) of the weight-embedded system."""
    lam = A.field.coerce(lam)
    ctx = _module_ctx(A, M, R=R, alpha=alpha, lam=lam)
    pre = run_identities("weighted-representation",
                         ("weighted-rep#1", "weighted-rep#2"), ctx)
    if not pre.passed:
        raise PreconditionError("weighted representation conditions failed", pre)
    from .systems import weight_embed
    beta = alpha + Matrix.identity(A.field, M.mdim).scale(lam)
    return weight_embed(A, R, lam), Representation(M, alpha, beta)
