"""Bridge checkers and constructions: weighted and averaging compatible
bialgebras (associative and Lie), Lie bisystems, special apre-perm
bialgebras, and covariant bialgebras from Yang-Baxter pairs.

Each bridge has a direct checker; the equivalences with the corresponding
(co)system checkers are asserted as properties in the test suite.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass

from .errors import PreconditionError
from .kernel import Matrix, block_diag, bv, leg_apply, vneg, vscale
from .identities import Ctx, identity, run_identities
from .report import Violation, make_report
from .structures import (Algebra, Coalgebra, LieAlgebra, LieCoalgebra,
                         check_axioms, commutator, cocommutator, dualize)
from .systems import (CoOperatorSystem, OperatorSystem, check_cosystem,
                      check_operator_system, check_ybpair)
from .bisystems import ASIBisystem, check_bisystem


# ---------------------------------------------------------------------------
# identity catalog: weighted and averaging compatibility

@identity("eq:er1", ("A", "A"))
def _er1(ctx, idx):
    i, j = idx
    A, R, Q, lam = ctx.A, ctx.R, ctx.Q, ctx.lam
    a, b = A.basis_vector(i), A.basis_vector(j)
    return [Q.apply(A.mul(a, R.col(j))),
            vneg(A.mul(Q.col(i), R.col(j))),
            vneg(Q.apply(A.mul(Q.col(i), b))),
            vneg(vscale(lam, A.mul(Q.col(i), b)))]


@identity("eq:er2", ("A", "A"))
def _er2(ctx, idx):
    i, j = idx
    A, R, Q, lam = ctx.A, ctx.R, ctx.Q, ctx.lam
    a, b = A.basis_vector(i), A.basis_vector(j)
    return [Q.apply(A.mul(R.col(i), b)),
            vneg(A.mul(R.col(i), Q.col(j))),
            vneg(Q.apply(A.mul(a, Q.col(j)))),
            vneg(vscale(lam, A.mul(a, Q.col(j))))]


@identity("eq:er3", ("A",))
def _er3(ctx, idx):
    (i,) = idx
    C, R, Q, lam = ctx.C, ctx.R, ctx.Q, ctx.lam
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 2),
            -leg_apply(leg_apply(dx, R, 1), Q, 2),
            -leg_apply(drx, R, 1),
            -leg_apply(dx, R, 1).scale(lam)]


@identity("eq:er4", ("A",))
def _er4(ctx, idx):
    (i,) = idx
    C, R, Q, lam = ctx.C, ctx.R, ctx.Q, ctx.lam
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 1),
            -leg_apply(leg_apply(dx, Q, 1), R, 2),
            -leg_apply(drx, R, 2),
            -leg_apply(dx, R, 2).scale(lam)]


@identity("eq:et3#1", ("A", "A"))
def _et3a(ctx, idx):
    i, j = idx
    A, R, Q = ctx.A, ctx.R, ctx.Q
    return [A.mul(R.col(i), Q.col(j)),
            vneg(Q.apply(A.mul(R.col(i), A.basis_vector(j))))]


@identity("eq:et3#2", ("A", "A"))
def _et3b(ctx, idx):
    i, j = idx
    A, R, Q = ctx.A, ctx.R, ctx.Q
    return [A.mul(R.col(i), Q.col(j)),
            vneg(Q.apply(A.mul(A.basis_vector(i), Q.col(j))))]


@identity("eq:et4#1", ("A", "A"))
def _et4a(ctx, idx):
    i, j = idx
    A, R, Q = ctx.A, ctx.R, ctx.Q
    return [A.mul(Q.col(i), R.col(j)),
            vneg(Q.apply(A.mul(A.basis_vector(i), R.col(j))))]


@identity("eq:et4#2", ("A", "A"))
def _et4b(ctx, idx):
    i, j = idx
    A, R, Q = ctx.A, ctx.R, ctx.Q
    return [A.mul(Q.col(i), R.col(j)),
            vneg(Q.apply(A.mul(Q.col(i), A.basis_vector(j))))]


@identity("eq:et5#1", ("A",))
def _et5a(ctx, idx):
    (i,) = idx
    C, R, Q = ctx.C, ctx.R, ctx.Q
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, Q, 1), R, 2), -leg_apply(C.delta(R.col(i)), Q, 1)]


@identity("eq:et5#2", ("A",))
def _et5b(ctx, idx):
    (i,) = idx
    C, R, Q = ctx.C, ctx.R, ctx.Q
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, Q, 1), R, 2), -leg_apply(C.delta(R.col(i)), R, 2)]


@identity("eq:et6#1", ("A",))
def _et6a(ctx, idx):
    (i,) = idx
    C, R, Q = ctx.C, ctx.R, ctx.Q
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, R, 1), Q, 2), -leg_apply(C.delta(R.col(i)), R, 1)]


@identity("eq:et6#2", ("A",))
def _et6b(ctx, idx):
    (i,) = idx
    C, R, Q = ctx.C, ctx.R, ctx.Q
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, R, 1), Q, 2), -leg_apply(C.delta(R.col(i)), Q, 2)]


@identity("eq:cxx3", ("A",))
def _cxx3(ctx, idx):
    (i,) = idx
    C, R, S = ctx.C, ctx.R, ctx.S
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, R, 1), S, 2),
            -leg_apply(C.delta(S.col(i)), R, 1),
            -leg_apply(C.delta(R.col(i)), S, 2)]


@identity("eq:cxx4", ("A",))
def _cxx4(ctx, idx):
    (i,) = idx
    C, R, S = ctx.C, ctx.R, ctx.S
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, S, 1), R, 2),
            -leg_apply(C.delta(R.col(i)), S, 1),
            -leg_apply(C.delta(S.col(i)), R, 2)]


# Lie bisystem compatibility

@identity("eq:emm1#1", ("A", "A"))
def _emm1a(ctx, idx):
    i, j = idx
    g, R, Q, T = ctx.A, ctx.R, ctx.Q, ctx.T
    x, y = g.basis_vector(i), g.basis_vector(j)
    return [Q.apply(g.mul(R.col(i), y)),
            vneg(g.mul(R.col(i), Q.col(j))),
            vneg(T.apply(g.mul(x, Q.col(j))))]


@identity("eq:emm1#2", ("A", "A"))
def _emm1b(ctx, idx):
    i, j = idx
    g, R, S, Q = ctx.A, ctx.R, ctx.S, ctx.Q
    x, y = g.basis_vector(i), g.basis_vector(j)
    return [Q.apply(g.mul(R.col(i), y)),
            vneg(g.mul(S.col(i), Q.col(j))),
            vneg(Q.apply(g.mul(x, Q.col(j))))]


@identity("eq:emm2#1", ("A", "A"))
def _emm2a(ctx, idx):
    i, j = idx
    g, R, S, T = ctx.A, ctx.R, ctx.S, ctx.T
    x, y = g.basis_vector(i), g.basis_vector(j)
    return [T.apply(g.mul(S.col(i), y)),
            vneg(g.mul(R.col(i), T.col(j))),
            vneg(T.apply(g.mul(x, T.col(j))))]


@identity("eq:emm2#2", ("A", "A"))
def _emm2b(ctx, idx):
    i, j = idx
    g, S, Q, T = ctx.A, ctx.S, ctx.Q, ctx.T
    x, y = g.basis_vector(i), g.basis_vector(j)
    return [T.apply(g.mul(S.col(i), y)),
            vneg(g.mul(S.col(i), T.col(j))),
            vneg(Q.apply(g.mul(x, T.col(j))))]


@identity("eq:emm3#1", ("A",))
def _emm3a(ctx, idx):
    (i,) = idx
    C, R, Q, T = ctx.C, ctx.R, ctx.Q, ctx.T
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 1), -leg_apply(drx, R, 2),
            -leg_apply(leg_apply(dx, T, 1), R, 2)]


@identity("eq:emm3#2", ("A",))
def _emm3b(ctx, idx):
    (i,) = idx
    C, R, S, Q = ctx.C, ctx.R, ctx.S, ctx.Q
    drx = C.delta(R.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(drx, Q, 1), -leg_apply(C.delta(S.col(i)), R, 2),
            -leg_apply(leg_apply(dx, Q, 1), R, 2)]


@identity("eq:emm4#1", ("A",))
def _emm4a(ctx, idx):
    (i,) = idx
    C, R, S, T = ctx.C, ctx.R, ctx.S, ctx.T
    dsx = C.delta(S.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(dsx, T, 1), -leg_apply(C.delta(R.col(i)), S, 2),
            -leg_apply(leg_apply(dx, T, 1), S, 2)]


@identity("eq:emm4#2", ("A",))
def _emm4b(ctx, idx):
    (i,) = idx
    C, S, Q, T = ctx.C, ctx.S, ctx.Q, ctx.T
    dsx = C.delta(S.col(i))
    dx = C.delta_basis(i)
    return [leg_apply(dsx, T, 1), -leg_apply(dsx, S, 2),
            -leg_apply(leg_apply(dx, Q, 1), S, 2)]


# averaging / weighted Lie bialgebra displays

@identity("de:ev#2a", ("A", "A"))
def _ev2a(ctx, idx):
    i, j = idx
    g, R = ctx.A, ctx.R
    return [g.mul(R.col(i), R.col(j)),
            vneg(R.apply(g.mul(R.col(i), g.basis_vector(j))))]


@identity("de:ev#2b", ("A", "A"))
def _ev2b(ctx, idx):
    i, j = idx
    g, R, Q = ctx.A, ctx.R, ctx.Q
    return [g.mul(R.col(i), Q.col(j)),
            vneg(Q.apply(g.mul(R.col(i), g.basis_vector(j))))]


@identity("de:ev#2c", ("A", "A"))
def _ev2c(ctx, idx):
    i, j = idx
    g, R, Q = ctx.A, ctx.R, ctx.Q
    return [g.mul(R.col(i), Q.col(j)),
            vneg(Q.apply(g.mul(g.basis_vector(i), Q.col(j))))]


@identity("de:ev#3a", ("A",))
def _ev3a(ctx, idx):
    (i,) = idx
    C, Q = ctx.C, ctx.Q
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, Q, 1), Q, 2), -leg_apply(C.delta(Q.col(i)), Q, 1)]


@identity("de:ev#3b", ("A",))
def _ev3b(ctx, idx):
    (i,) = idx
    C, R, Q = ctx.C, ctx.R, ctx.Q
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, Q, 1), R, 2), -leg_apply(C.delta(R.col(i)), Q, 1)]


@identity("de:ev#3c", ("A",))
def _ev3c(ctx, idx):
    (i,) = idx
    C, R, Q = ctx.C, ctx.R, ctx.Q
    dx = C.delta_basis(i)
    return [leg_apply(leg_apply(dx, Q, 1), R, 2), -leg_apply(C.delta(R.col(i)), R, 2)]


@identity("de:he#2", ("A", "A"))
def _he2(ctx, idx):
    i, j = idx
    g, R, lam = ctx.A, ctx.R, ctx.lam
    x, y = g.basis_vector(i), g.basis_vector(j)
    return [g.mul(R.col(i), R.col(j)),
            vneg(R.apply(g.mul(R.col(i), y))),
            vneg(R.apply(g.mul(x, R.col(j)))),
            vneg(R.apply(vscale(lam, g.product(i, j))))]


@identity("de:he#3", ("A",))
def _he3(ctx, idx):
    (i,) = idx
    C, Q, lam = ctx.C, ctx.Q, ctx.lam
    dx = C.delta_basis(i)
    dq = C.delta(Q.col(i))
    return [leg_apply(leg_apply(dx, Q, 1), Q, 2),
            -leg_apply(dq, Q, 1), -leg_apply(dq, Q, 2), -dq.scale(lam)]


@identity("de:he#4a", ("A", "A"))
def _he4a(ctx, idx):
    i, j = idx
    g, R, Q, lam = ctx.A, ctx.R, ctx.Q, ctx.lam
    x, y = g.basis_vector(i), g.basis_vector(j)
    return [Q.apply(g.mul(R.col(i), y)),
            vneg(g.mul(R.col(i), Q.col(j))),
            vneg(Q.apply(g.mul(x, Q.col(j)))),
            vneg(vscale(lam, g.mul(x, Q.col(j))))]


@identity("de:he#4b", ("A",))
def _he4b(ctx, idx):
    (i,) = idx
    C, R, Q, lam = ctx.C, ctx.R, ctx.Q, ctx.lam
    dx = C.delta_basis(i)
    drx = C.delta(R.col(i))
    return [leg_apply(leg_apply(dx, R, 1), Q, 2),
            leg_apply(drx, R, 1), -leg_apply(drx, Q, 2),
            leg_apply(dx, R, 1).scale(lam)]


# Lie-system representation displays (used by the matched-pair property)

def _rho_act(rho, avec, m):
    out = [rho[0].field.zero()] * rho[0].rows
    for k, c in enumerate(avec):
        if c:
            img = rho[k].apply(m)
            out = [a + c * b for a, b in zip(out, img)]
    return tuple(out)


@identity("de:eo#1a", ("A", "M"))
def _eo1a(ctx, idx):
    i, u = idx
    rho, R, al, be = ctx.rho, ctx.R, ctx.alpha, ctx.beta
    m = bv(rho[0].field, rho[0].rows, u)
    return [_rho_act(rho, R.col(i), al.col(u)),
            vneg(al.apply(_rho_act(rho, R.col(i), m))),
            vneg(al.apply(rho[i].apply(be.col(u))))]


@identity("de:eo#1b", ("A", "M"))
def _eo1b(ctx, idx):
    i, u = idx
    rho, R, S, al = ctx.rho, ctx.R, ctx.S, ctx.alpha
    m = bv(rho[0].field, rho[0].rows, u)
    return [_rho_act(rho, R.col(i), al.col(u)),
            vneg(al.apply(_rho_act(rho, S.col(i), m))),
            vneg(al.apply(rho[i].apply(al.col(u))))]


@identity("de:eo#2a", ("A", "M"))
def _eo2a(ctx, idx):
    i, u = idx
    rho, R, S, be = ctx.rho, ctx.R, ctx.S, ctx.beta
    m = bv(rho[0].field, rho[0].rows, u)
    return [_rho_act(rho, S.col(i), be.col(u)),
            vneg(be.apply(_rho_act(rho, R.col(i), m))),
            vneg(be.apply(rho[i].apply(be.col(u))))]


@identity("de:eo#2b", ("A", "M"))
def _eo2b(ctx, idx):
    i, u = idx
    rho, S, al, be = ctx.rho, ctx.S, ctx.alpha, ctx.beta
    m = bv(rho[0].field, rho[0].rows, u)
    return [_rho_act(rho, S.col(i), be.col(u)),
            vneg(be.apply(_rho_act(rho, S.col(i), m))),
            vneg(be.apply(rho[i].apply(al.col(u))))]


# ---------------------------------------------------------------------------
# checkers

def check_weighted_rb_asi(A, C, R: Matrix, Q: Matrix, lam):
    """Weighted compatible bialgebra: bialgebra axioms, weight-lam operator
    and co-operator, and the four mixed displays."""
    lam = A.field.coerce(lam)
    sub = [
        make_report("asi-bialgebra", check_axioms("asi_bialgebra", (A, C)).violations),
        make_report("rb-algebra",
                    check_operator_system(
                        "rb_weight", OperatorSystem(A, R, weight=lam)).violations),
        make_report("rb-coalgebra",
                    check_cosystem(
                        "rb_coalgebra_weight",
                        CoOperatorSystem(C, Q, weight=lam)).violations),
        make_report("compat",
                    run_identities(
                        "compat", ("eq:er1", "eq:er2", "eq:er3", "eq:er4"),
                        Ctx({"A": A.basis}, A=A, C=C, R=R, Q=Q, lam=lam)).violations),
    ]
    return make_report("weighted-rb-asi", subreports=sub)


def check_averaging_asi(A, C, R: Matrix, Q: Matrix):
    """Averaging compatible bialgebra: bialgebra axioms, averaging operator
    and co-operator, and the four mixed displays."""
    sub = [
        make_report("asi-bialgebra", check_axioms("asi_bialgebra", (A, C)).violations),
        make_report("averaging-algebra",
                    check_operator_system("averaging", OperatorSystem(A, R)).violations),
        make_report("averaging-coalgebra",
                    check_cosystem("coaveraging", CoOperatorSystem(C, Q)).violations),
        make_report("compat",
                    run_identities(
                        "compat",
                        ("eq:et3#1", "eq:et3#2", "eq:et4#1", "eq:et4#2",
                         "eq:et5#1", "eq:et5#2", "eq:et6#1", "eq:et6#2"),
                        Ctx({"A": A.basis}, A=A, C=C, R=R, Q=Q)).violations),
    ]
    return make_report("averaging-asi", subreports=sub)


def check_crossed_coproducts(C, R: Matrix, S: Matrix):
    """(R (x) S)Delta = (R (x) id)Delta S + (id (x) S)Delta R and its mirror."""
    ctx = Ctx({"A": C.basis}, C=C, R=R, S=S)
    return run_identities("crossed-coproducts", ("eq:cxx3", "eq:cxx4"), ctx)


def averaging_from_bisystem(bi: ASIBisystem):
    """For a bisystem whose co-maps are the negated maps, the difference
    P = R - S is a single averaging map on both sides."""
    violations = []
    if bi.Q != -bi.S:
        violations.append(Violation("map-equality", ("Q", "-S"), ("mismatch",)))
    if bi.T != -bi.R:
        violations.append(Violation("map-equality", ("T", "-R"), ("mismatch",)))
    if violations:
        raise PreconditionError("co-maps are not the negated maps",
                                make_report("negated-maps", violations))
    base = check_bisystem(bi)
    if not base.passed:
        raise PreconditionError("input is not a valid bisystem", base)
    P = bi.R - bi.S
    return bi.algebra, bi.coalgebra, P


@dataclass
class LieBisystem:
    lie: LieAlgebra
    colie: LieCoalgebra
    R: Matrix
    S: Matrix
    Q: Matrix
    T: Matrix


def check_lie_bisystem(lb: LieBisystem):
    """Five parts: Lie bialgebra, the two paired operator conditions, and
    the two mixed compatibility groups."""
    g, C = lb.lie, lb.colie
    sub = [
        make_report("lie-bialgebra",
                    check_axioms("lie_bialgebra", (g, C)).violations),
        make_report("lie-system",
                    check_operator_system(
                        "lie_rbs", OperatorSystem(g, lb.R, lb.S)).violations),
        make_report("lie-cosystem",
                    check_cosystem(
                        "lie_rb_cosystem", CoOperatorSystem(C, lb.Q, lb.T)).violations),
        make_report("operator-compat",
                    run_identities(
                        "operator-compat",
                        ("eq:emm1#1", "eq:emm1#2", "eq:emm2#1", "eq:emm2#2"),
                        Ctx({"A": g.basis}, A=g, R=lb.R, S=lb.S,
                            Q=lb.Q, T=lb.T)).violations),
        make_report("cooperator-compat",
                    run_identities(
                        "cooperator-compat",
                        ("eq:emm3#1", "eq:emm3#2", "eq:emm4#1", "eq:emm4#2"),
                        Ctx({"A": g.basis}, C=C, R=lb.R, S=lb.S,
                            Q=lb.Q, T=lb.T)).violations),
    ]
    return make_report("lie-bisystem", subreports=sub)


def lie_bisystem_from_asi(bi: ASIBisystem) -> LieBisystem:
    """Commutator bracket and cocommutator cobracket with the same maps."""
    base = check_bisystem(bi)
    if not base.passed:
        raise PreconditionError("input is not a valid bisystem", base)
    return LieBisystem(commutator(bi.algebra), cocommutator(bi.coalgebra),
                       bi.R, bi.S, bi.Q, bi.T)


def check_averaging_lie_bialgebra(g, dl, R: Matrix, Q: Matrix):
    sub = [
        make_report("lie-bialgebra",
                    check_axioms("lie_bialgebra", (g, dl)).violations),
        make_report("averaging-lie-algebra",
                    run_identities(
                        "averaging-lie-algebra",
                        ("de:ev#2a", "de:ev#2b", "de:ev#2c"),
                        Ctx({"A": g.basis}, A=g, R=R, Q=Q)).violations),
        make_report("averaging-lie-coalgebra",
                    run_identities(
                        "averaging-lie-coalgebra",
                        ("de:ev#3a", "de:ev#3b", "de:ev#3c"),
                        Ctx({"A": g.basis}, C=dl, R=R, Q=Q)).violations),
    ]
    return make_report("averaging-lie-bialgebra", subreports=sub)


def check_weighted_rb_lie_bialgebra(g, dl, R: Matrix, Q: Matrix, lam):
    lam = g.field.coerce(lam)
    sub = [
        make_report("lie-bialgebra",
                    check_axioms("lie_bialgebra", (g, dl)).violations),
        make_report("rb-lie-algebra",
                    run_identities("rb-lie-algebra", ("de:he#2",),
                                   Ctx({"A": g.basis}, A=g, R=R, lam=lam)).violations),
        make_report("rb-lie-coalgebra",
                    run_identities("rb-lie-coalgebra", ("de:he#3",),
                                   Ctx({"A": g.basis}, C=dl, Q=Q, lam=lam)).violations),
        make_report("compat",
                    run_identities(
                        "compat", ("de:he#4a", "de:he#4b"),
                        Ctx({"A": g.basis}, A=g, C=dl, R=R, Q=Q, lam=lam)).violations),
    ]
    return make_report("weighted-rb-lie-bialgebra", subreports=sub)


def check_lie_representation(sys: OperatorSystem, rho, alpha: Matrix, beta: Matrix):
    """Module conditions of a Lie-side paired system; rho is a per-basis
    action matrix list."""
    labels = tuple(f"m{i}" for i in range(rho[0].rows))
    ctx = Ctx({"A": sys.carrier.basis, "M": labels},
              rho=tuple(rho), R=sys.R, S=sys.S, alpha=alpha, beta=beta)
    return run_identities("lie-representation",
                          ("de:eo#1a", "de:eo#1b", "de:eo#2a", "de:eo#2b"), ctx)


def coadjoint_actions(g) -> tuple[Matrix, ...]:
    """rho(x) = -ad(x)^t, acting on the dual space."""
    return tuple(-g.left_mult_basis(i).transpose() for i in range(g.dim))


def lie_matched_pair_report(lb: LieBisystem):
    """Matched pair of the Lie system with its dual under coadjoint actions:
    the two module conditions plus the combined bracket being a Lie bracket."""
    g, C = lb.lie, lb.colie
    gd = dualize(C)
    rho_g = coadjoint_actions(g)
    rho_gd = coadjoint_actions(gd)
    sub = [
        make_report("action-on-dual",
                    check_lie_representation(
                        OperatorSystem(g, lb.R, lb.S), rho_g,
                        lb.Q.transpose(), lb.T.transpose()).violations),
        make_report("action-on-primal",
                    check_lie_representation(
                        OperatorSystem(gd, lb.Q.transpose(), lb.T.transpose()),
                        rho_gd, lb.R, lb.S).violations),
    ]
    n = g.dim
    dim = 2 * n
    z = g.field.zero()
    table = [[(z,) * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            table[i][j] = tuple(g.product(i, j)) + (z,) * n
            table[n + i][n + j] = (z,) * n + tuple(gd.product(i, j))
    for i in range(n):
        for u in range(n):
            # [x, xi] = coad(x) xi - coad(xi) x
            table[i][n + u] = tuple(vneg(rho_gd[u].col(i))) + tuple(rho_g[i].col(u))
            table[n + u][i] = tuple(rho_gd[u].col(i)) + tuple(vneg(rho_g[i].col(u)))
    big = LieAlgebra(g.field, table, basis=g.basis + gd.basis, raw=True)
    sub.append(make_report("sum-lie", check_axioms("lie", big).violations))
    big_sys = OperatorSystem(big,
                             block_diag(lb.R, lb.Q.transpose()),
                             block_diag(lb.S, lb.T.transpose()))
    sub.append(make_report("sum-system",
                           check_operator_system("lie_rbs", big_sys).violations))
    return make_report("lie-matched-pair", subreports=sub)


# ---------------------------------------------------------------------------
# apre-perm and covariant constructions

@dataclass
class AprePermData:
    tri_gt: Algebra        # x > y, raw product
    tri_lt: Algebra        # x < y, raw product
    co_vartheta: Coalgebra
    co_theta: Coalgebra

    def check(self):
        return check_axioms("apreperm_bialgebra",
                            (self.tri_gt, self.tri_lt, self.co_vartheta, self.co_theta))


def apreperm_from_averaging(A, C, R: Matrix, Q: Matrix) -> AprePermData:
    """Split products x > y = R(x)y + Q(xy), x < y = -Q(xy) with the matching
    coproduct split; requires an averaging pair on a commutative carrier
    with cocommutative coproduct."""
    violations = []
    if not A.is_commutative():
        violations.append(Violation("commutative-carrier", (), ("product not commutative",)))
    if not C.is_cocommutative():
        violations.append(Violation("cocommutative-carrier", (), ("coproduct not cocommutative",)))
    avg = check_averaging_asi(A, C, R, Q)
    gate = make_report("apre-perm-hypotheses", violations,
                       subreports=(make_report("averaging", avg.all_violations()),))
    if not gate.passed:
        raise PreconditionError("apre-perm hypotheses failed", gate)
    n = A.dim
    gt_table = [[None] * n for _ in range(n)]
    lt_table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = A.product(i, j)
            qprod = Q.apply(prod)
            gt_table[i][j] = tuple(a + b for a, b in
                                   zip(A.mul(R.col(i), A.basis_vector(j)), qprod))
            lt_table[i][j] = vneg(qprod)
    gt = Algebra(A.field, gt_table, basis=A.basis, raw=True)
    lt = Algebra(A.field, lt_table, basis=A.basis, raw=True)
    var_table = []
    th_table = []
    for i in range(n):
        drx = C.delta(R.col(i))
        var = leg_apply(C.delta_basis(i), Q, 1) + drx
        var_table.append([[var[j, k] for k in range(n)] for j in range(n)])
        th_table.append([[-drx[j, k] for k in range(n)] for j in range(n)])
    vartheta = Coalgebra(A.field, var_table, basis=C.basis, raw=True)
    theta = Coalgebra(A.field, th_table, basis=C.basis, raw=True)
    return AprePermData(gt, lt, vartheta, theta)


CovariantData = namedtuple("CovariantData", "delta1 delta2 comult")


def covariant_from_ybpair(A, r, s):
    """Two derivation comultiplications a.r1 (x) r2 - r1 (x) r2.a and the
    mixed comultiplication a.r1 (x) r2 - s1 (x) s2.a from a Yang-Baxter
    pair; returns the data and its covariant-bialgebra report."""
    pre = check_ybpair(A, r, s)
    if not pre.passed:
        raise PreconditionError("tensor pair fails the Yang-Baxter pair condition", pre)

    def tensor_rows(t):
        return [[t[j, k] for k in range(A.dim)] for j in range(A.dim)]

    d1_t, d2_t, dt_t = [], [], []
    for i in range(A.dim):
        L = A.left_mult_basis(i)
        Rm = A.right_mult_basis(i)
        d1_t.append(tensor_rows(leg_apply(r, L, 1) - leg_apply(r, Rm, 2)))
        d2_t.append(tensor_rows(leg_apply(s, L, 1) - leg_apply(s, Rm, 2)))
        dt_t.append(tensor_rows(leg_apply(r, L, 1) - leg_apply(s, Rm, 2)))
    d1 = Coalgebra(A.field, d1_t, basis=A.basis, raw=True)
    d2 = Coalgebra(A.field, d2_t, basis=A.basis, raw=True)
    dt = Coalgebra(A.field, dt_t, basis=A.basis, raw=True)
    data = CovariantData(d1, d2, dt)
    return data, check_axioms("covariant_bialgebra", (A, d1, d2, dt))
