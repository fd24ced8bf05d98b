import json

import pytest

from rbx import fixtures as fx
from rbx.cli import main, parse, print_workspace, run_check
from rbx.errors import ParseError
from rbx.identities import known_tags
from rbx.kernel import PrimeField, Rationals

FIX_A_SOURCE = """\
field Q
algebra A dim 2 basis e f
mul f e = 1 e
mul f f = 1 f
"""

FIX_BI_SOURCE = """\
field Q

algebra A dim 2 basis e f
mul f e = 1 e
mul f f = 1 f

coalgebra C dim 2 basis e f
comul e = -1 (e,e)
comul f = -1 (e,f)

map R on A
R e = 1 e + -1 f
R f = 2 e + -2 f

map S on A
S e = 2 e + -1 f
S f = 2 e + -1 f

map Q on A
Q e = -2 e + 1 f
Q f = -2 e + 1 f

map T on A
T e = -1 e + 1 f
T f = -2 e + 2 f
"""


def test_parse_fixture_algebra():
    ws = parse(FIX_A_SOURCE)
    A = ws.get("A")
    assert A.dim == 2
    assert A == fx.fix_a(Rationals())


def test_parse_error_unknown_basis_id():
    bad = FIX_A_SOURCE + "mul f g = 1 e\n"
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert err.value.line == 5
    assert err.value.col == 7


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse("field Q\nalgebra A dim 2 basis e f\nmul e e = oops e\n")
    assert err.value.line == 3


def test_parse_duplicate_name_rejected():
    with pytest.raises(ParseError):
        parse(FIX_A_SOURCE + "map A on A\n")


def test_parse_requires_field_first():
    with pytest.raises(ParseError):
        parse("algebra A dim 1 basis e\n")


def test_parse_gf_field():
    ws = parse("field GF 3\nalgebra A dim 1 basis e\nmul e e = 2 e\n")
    assert ws.field == PrimeField(3)


def test_roundtrip_fixture_workspace():
    ws = parse(FIX_BI_SOURCE)
    text = print_workspace(ws)
    again = parse(text)
    assert again == ws
    assert print_workspace(again) == text


def test_roundtrip_builtin_workspace():
    ws = parse(fx.WORKSPACE_SOURCE)
    text = print_workspace(ws)
    assert parse(text) == ws


def test_run_check_bisystem_passes():
    ws = parse(FIX_BI_SOURCE)
    rep = run_check(ws, "bisystem", ["A", "C", "R", "S", "Q", "T"])
    assert rep.passed


def test_run_check_witness_pair():
    # corrupting the partner map yields a violation at the (f, f) pair
    src = FIX_A_SOURCE + """\
map R on A
R f = 1 e
map Rbad on A
Rbad f = 1 f
"""
    ws = parse(src)
    rep = run_check(ws, "symmetric-rbs", ["A", "R", "Rbad"])
    assert not rep.passed
    assert ("f", "f") in {v.inputs for v in rep.violations}


def test_cli_exit_codes(capsys):
    code = main(["check", "symmetric-rbs", "A", "R", "S", "--builtin"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "pass"
    assert doc["violations"] == []

    code = main(["check", "symmetric-rbs", "A", "R0", "S", "--builtin"])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "fail"
    assert doc["violations"]
    # without --witness the residuals are suppressed but the schema holds
    assert all(v["residual"] == [] for v in doc["violations"])
    assert all(v["identity"] in known_tags() for v in doc["violations"])


def test_cli_witness_flag(capsys):
    code = main(["check", "symmetric-rbs", "A", "R0", "S", "--builtin",
                 "--witness"])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert any(v["residual"] for v in doc["violations"])


def test_cli_weight_flag(capsys):
    code = main(["check", "rb-weight", "A", "R0", "--weight", "0", "--builtin"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_cli_lie_kinds(capsys):
    assert main(["check", "lie-rbs", "L", "R", "S", "--builtin"]) == 0
    capsys.readouterr()
    assert main(["check", "lie-bisystem", "L", "D", "R", "S", "Q", "T",
                 "--builtin"]) == 0


def test_cli_unknown_kind(capsys):
    assert main(["check", "nonsense", "A", "--builtin"]) == 2
    assert "error:" in capsys.readouterr().err


def test_derive_dendriform_roundtrips(capsys):
    code = main(["derive", "dendriform", "A", "R0", "S0", "--builtin"])
    assert code == 0
    text = capsys.readouterr().out
    derived = parse(text)
    # f < f = f.S(f) = 2e
    prec = derived.get("prec")
    assert prec.product(1, 1) == (Rationals().of(2), Rationals().zero())


def test_derive_coboundary(capsys):
    code = main(["derive", "coboundary", "A", "r2", "--builtin"])
    assert code == 0
    derived = parse(capsys.readouterr().out)
    C = derived.get("Delta")
    assert C.delta_basis(1)[0, 1] == Rationals().one()


def test_derive_double(capsys):
    code = main(["derive", "double", "A", "C", "R", "S", "Q", "T", "--builtin"])
    assert code == 0
    derived = parse(capsys.readouterr().out)
    assert derived.get("AA").dim == 4
    assert derived.get("Bd").is_nondegenerate()


def test_cli_search_and_export(tmp_path, capsys):
    out = tmp_path / "hits.rbx"
    code = main(["search", "symmetric-rbs", "--carrier", "A", "--field", "GF2",
                 "--builtin", "--shards", "2", "--export", str(out)])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["hits"] == 18
    assert doc["space"] == 256
    exported = parse(out.read_text())
    maps = [n for n in exported.order if exported.items[n][0] == "map"]
    assert len(maps) == 36  # two maps per hit


def test_cli_verify_family(capsys):
    code = main(["verify-family", "cee-d", "--samples", "4", "--seed", "9"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["check"] == "family:cee-d"
    assert doc["seed"] == 9


def test_cli_verify_family_unknown(capsys):
    assert main(["verify-family", "nope"]) == 2


def test_all_report_tags_known():
    ws = parse(fx.WORKSPACE_SOURCE)
    for kind, names in [
        ("symmetric-rbs", ["A", "R0", "S"]),
        ("bisystem", ["A", "C", "R0", "S", "Q", "T"]),
        ("asi-bialgebra", ["A", "C"]),
    ]:
        rep = run_check(ws, kind, names)
        for v in rep.all_violations():
            assert v.identity in known_tags()
