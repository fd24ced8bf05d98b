import itertools
import random

from rbx import fixtures as fx
from rbx.kernel import Matrix, block_diag
from rbx.structures import (Algebra, BilinearForm, check_axioms, dualize,
                            form_adjoint, pairing_form)
from rbx.systems import OperatorSystem, check_operator_system
from rbx.representations import adjoint_admissible_report
from rbx.bisystems import (ASIBisystem, MatchedPairData, bisystem_matched_pair,
                           bowtie, check_bisystem, check_frobenius_srbs,
                           check_matched_pair_srbs, double_construction,
                           dual_actions_pair, projection_srbs)


def _trivial_pair(A, B, maps_a=None, maps_b=None):
    zb = Matrix.zero(A.field, B.dim)
    za = Matrix.zero(A.field, A.dim)
    return MatchedPairData(A, B, [zb] * A.dim, [zb] * A.dim,
                           [za] * B.dim, [za] * B.dim,
                           maps_a=maps_a, maps_b=maps_b)


def test_bowtie_trivial_actions_direct_product(QQ):
    A = fx.fix_a(QQ)
    B = fx.dual_numbers(QQ)
    big = bowtie(_trivial_pair(A, B))
    assert check_axioms("associative", big).passed
    # blocks multiply independently
    assert big.product(0, 1)[:2] == A.product(0, 1)
    assert big.product(2, 3)[2:] == B.product(0, 1)


def test_bowtie_trivial_one_dim(QQ):
    A = fx.zero_algebra(QQ, 1)
    big = bowtie(_trivial_pair(A, A))
    assert check_axioms("associative", big).passed


def test_bowtie_dual_actions_associative(QQ):
    # compatible bialgebra carrier pair assembles to an associative product
    mp = dual_actions_pair(fx.fix_a(QQ), fx.fix_c(QQ))
    assert check_axioms("associative", bowtie(mp)).passed


def test_matched_pair_zero_actions(QQ):
    A = fx.fix_a(QQ)
    R, S = fx.fix_rs(QQ)
    B = fx.dual_numbers(QQ)
    zb = Matrix.zero(QQ, 2)
    mp = _trivial_pair(A, B, maps_a=(R, S), maps_b=(zb, zb))
    rep = check_matched_pair_srbs(mp)
    assert rep.passed


def test_matched_pair_of_fixture_bisystem(QQ):
    rep = check_matched_pair_srbs(bisystem_matched_pair(fx.fix_bi(QQ)))
    assert rep.passed
    assert {s.check for s in rep.subreports} == {
        "system-a", "system-b", "action-on-b", "action-on-a",
        "sum-associative", "sum-system"}


def test_matched_pair_corrupt_action_fails(QQ):
    mp = bisystem_matched_pair(fx.fix_bi(QQ))
    corrupt = list(mp.left_a)
    corrupt[0] = corrupt[0] + Matrix.identity(QQ, 2)
    bad = MatchedPairData(mp.A, mp.B, corrupt, mp.right_a, mp.left_b, mp.right_b,
                          maps_a=mp.maps_a, maps_b=mp.maps_b)
    assert not check_matched_pair_srbs(bad).passed


def test_bisystem_fixture(QQ):
    assert check_bisystem(fx.fix_bi(QQ)).passed


def test_bisystem_zero_maps(QQ):
    Z = Matrix.zero(QQ, 2)
    bi = ASIBisystem(fx.fix_a(QQ), fx.fix_c(QQ), Z, Z, Z, Z)
    assert check_bisystem(bi).passed


def test_bisystem_swap(QQ):
    assert check_bisystem(fx.fix_bi(QQ).swap()).passed


def test_double_construction_fixture(QQ):
    bi = fx.fix_bi(QQ)
    dc = double_construction(bi.algebra, bi.coalgebra, bi.R, bi.S, bi.Q, bi.T)
    assert dc.report.passed
    assert dc.system.carrier.dim == 4


def test_double_construction_zero_maps(QQ):
    Z = Matrix.zero(QQ, 2)
    dc = double_construction(fx.fix_a(QQ), fx.fix_c(QQ), Z, Z, Z, Z)
    assert dc.report.passed


def test_double_equivalence_on_corruptions(QQ):
    # corrupting one co-map flips both verdicts identically
    bi = fx.fix_bi(QQ)
    rng = random.Random(7)
    for _ in range(12):
        delta = Matrix(QQ, 2, 2,
                       [QQ.of(rng.randint(-1, 1)) for _ in range(4)])
        Q = bi.Q + delta
        left = check_bisystem(ASIBisystem(bi.algebra, bi.coalgebra,
                                          bi.R, bi.S, Q, bi.T)).passed
        dc = double_construction(bi.algebra, bi.coalgebra, bi.R, bi.S, Q, bi.T)
        mid = dc.report.passed
        right = check_matched_pair_srbs(dual_actions_pair(
            bi.algebra, bi.coalgebra, maps_a=(bi.R, bi.S),
            maps_b=(Q.transpose(), bi.T.transpose()))).passed
        assert left == mid == right


def test_frobenius_srbs_on_double(QQ):
    bi = fx.fix_bi(QQ)
    dc = double_construction(bi.algebra, bi.coalgebra, bi.R, bi.S, bi.Q, bi.T)
    rep, adjoints = check_frobenius_srbs(dc.system.carrier, dc.system.R,
                                         dc.system.S, dc.form)
    assert rep.passed
    # the adjoint of R+Q^t is Q+R^t, and likewise for the second map
    assert adjoints[0] == block_diag(bi.Q, bi.R.transpose())
    assert adjoints[1] == block_diag(bi.T, bi.S.transpose())


def test_frobenius_srbs_zero_maps(QQ):
    A = fx.dual_numbers(QQ)
    form = BilinearForm(QQ, Matrix.from_rows(QQ, [[0, 1], [1, 0]]))
    Z = Matrix.zero(QQ, 2)
    rep, _ = check_frobenius_srbs(A, Z, Z, form)
    assert rep.passed


def test_frobenius_srbs_nonsymmetric_form_na(QQ):
    A = fx.zero_algebra(QQ, 2)
    form = BilinearForm(QQ, Matrix.from_rows(QQ, [[0, 1], [-1, 0]]))
    Z = Matrix.zero(QQ, 2)
    rep, adjoints = check_frobenius_srbs(A, Z, Z, form)
    assert rep.sub("adjoint-admissible").status == "n/a"
    assert adjoints is None
    assert rep.passed  # n/a does not fail the report


def test_lem_ct_implications(QQ):
    # a passing double makes (Q,T) admissible on the primal side and
    # (R^t, S^t) admissible on the dual side
    bi = fx.fix_bi(QQ)
    dc = double_construction(bi.algebra, bi.coalgebra, bi.R, bi.S, bi.Q, bi.T)
    assert dc.report.passed
    assert adjoint_admissible_report(bi.algebra, bi.R, bi.S, bi.Q, bi.T).passed
    dual = dualize(bi.coalgebra)
    assert adjoint_admissible_report(
        dual, bi.Q.transpose(), bi.T.transpose(),
        bi.R.transpose(), bi.S.transpose()).passed


def test_projection_fixture(QQ):
    proj = projection_srbs(bisystem_matched_pair(fx.fix_bi(QQ)))
    assert check_operator_system("symmetric_rbs", proj).passed


def test_projection_adjoints_fixture(QQ):
    bi = fx.fix_bi(QQ)
    proj = projection_srbs(bisystem_matched_pair(bi))
    form = pairing_form(QQ, 2)
    assert form_adjoint(form, proj.R) == -proj.S
    assert form_adjoint(form, proj.S) == -proj.R


def test_projection_zero_b_side(QQ):
    A = fx.fix_a(QQ)
    B = fx.zero_algebra(QQ, 0)
    mp = MatchedPairData(A, B, [Matrix.zero(QQ, 0)] * 2, [Matrix.zero(QQ, 0)] * 2,
                         [], [])
    proj = projection_srbs(mp)
    assert proj.R == Matrix.identity(QQ, 2)
    assert proj.S.is_zero()
    assert check_operator_system("symmetric_rbs", proj).passed


def test_projection_exhaustive_one_dim_gf2(F2):
    # every associative 1+1-dimensional assembled product gives a passing
    # projection pair
    found = 0
    for ca, cb, la, ra, lb, rb in itertools.product(range(2), repeat=6):
        A = Algebra(F2, [[(F2.of(ca),)]], raw=True)
        B = Algebra(F2, [[(F2.of(cb),)]], raw=True)
        mp = MatchedPairData(
            A, B,
            [Matrix(F2, 1, 1, [F2.of(la)])], [Matrix(F2, 1, 1, [F2.of(ra)])],
            [Matrix(F2, 1, 1, [F2.of(lb)])], [Matrix(F2, 1, 1, [F2.of(rb)])])
        if not check_axioms("associative", bowtie(mp)).passed:
            continue
        proj = projection_srbs(mp)
        assert check_operator_system("symmetric_rbs", proj).passed
        found += 1
    assert found


def test_thm_cp_parity_one_dim_gf2(F2):
    # matched pair of systems <=> assembled pair identities, over every
    # 1+1-dimensional instance whose constituent systems are symmetric pairs
    checked = 0
    scalars = [F2.zero(), F2.one()]
    for ca, cb in itertools.product(scalars, repeat=2):
        A = Algebra(F2, [[(ca,)]], raw=True)
        B = Algebra(F2, [[(cb,)]], raw=True)
        for ra_, sa_, rb_, sb_ in itertools.product(scalars, repeat=4):
            RA = Matrix(F2, 1, 1, [ra_])
            SA = Matrix(F2, 1, 1, [sa_])
            RB = Matrix(F2, 1, 1, [rb_])
            SB = Matrix(F2, 1, 1, [sb_])
            if not check_operator_system(
                    "symmetric_rbs", OperatorSystem(A, RA, SA)).passed:
                continue
            if not check_operator_system(
                    "symmetric_rbs", OperatorSystem(B, RB, SB)).passed:
                continue
            for la, raa, lb, rbb in itertools.product(scalars, repeat=4):
                mp = MatchedPairData(
                    A, B,
                    [Matrix(F2, 1, 1, [la])], [Matrix(F2, 1, 1, [raa])],
                    [Matrix(F2, 1, 1, [lb])], [Matrix(F2, 1, 1, [rbb])],
                    maps_a=(RA, SA), maps_b=(RB, SB))
                rep = check_matched_pair_srbs(mp)
                de_co = (rep.sub("action-on-b").passed
                         and rep.sub("action-on-a").passed
                         and rep.sub("sum-associative").passed)
                assembled = (rep.sub("sum-associative").passed
                             and rep.sub("sum-system").passed)
                assert de_co == assembled
                checked += 1
    assert checked > 100
