import json

import pytest

from cdalg import GF, catalog
from cdalg.cli import AlgebraFileError, dumps, load, loads, main


B61_TEXT = """field Q
dim 6
1 2 -> 1*4
1 3 -> 1*5
2 3 -> 1*6
4 5 -> 1*6
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# the algebra text format -----------------------------------------------------

def test_loads_parses_table():
    A = loads(B61_TEXT)
    assert A.dim == 6 and A.products()[(4, 5)] == {6: 1}


@pytest.mark.parametrize("A", [catalog.b61(1), catalog.sl2(), catalog.b61(-1, GF(7)),
                               catalog.malcev7(), catalog.free_anticommutative(2, 3), catalog.abelian(0)])
def test_round_trip_is_byte_identical(A):
    text = dumps(A)
    assert dumps(loads(text)) == text
    assert loads(text).same_table(A)


def test_comments_fractions_and_combined_terms():
    A = loads("# header\nfield Q\ndim 3\n1 2 -> 1/2*3 - 2*1  # tail\n\n1 3 -> 1*3 + 1*3\n")
    assert A.products()[(1, 2)] == {1: -2, 3: A.field("1/2")}
    assert A.products()[(1, 3)] == {3: 2}


@pytest.mark.parametrize("text,lineno", [
    ("field Q\ndim 3\n2 1 -> 1*3\n", 3),
    ("field Q\ndim 3\n1 2 -> 1*3\n1 2 -> 1*3\n", 4),
    ("field Q\ndim 3\n1 4 -> 1*3\n", 3),
    ("field Q\ndim 3\n1 2 -> 1*9\n", 3),
    ("field GF(3)\ndim 3\n", 1),
    ("field Q\ndim 3\n1 2 => 1*3\n", 3),
    ("field Q\ndim 3\n1 2 -> x*3\n", 3),
    ("dim 3\nfield Q\n", 1),
])
def test_file_errors_carry_line_numbers(text, lineno):
    with pytest.raises(AlgebraFileError) as info:
        loads(text)
    assert info.value.lineno == lineno


def test_missing_header():
    with pytest.raises(AlgebraFileError):
        loads("")


# commands ---------------------------------------------------------------------

def test_check_b61(capsys):
    code, out, _ = run(capsys, "check", "b61", "--alpha", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["varieties"]["CD"] and not doc["varieties"]["Malcev"]


def test_json_output_is_stable(capsys):
    first = run(capsys, "ops", "b61", "--alpha", "-1", "--json")
    second = run(capsys, "ops", "b61", "--alpha", "-1", "--json")
    assert first == second and first[0] == 0


def test_cohomology_heisenberg(capsys):
    code, out, _ = run(capsys, "cohomology", "heisenberg3")
    assert code == 0 and "C=3 Z=3 B=1 H=2" in out


def test_consequence(capsys):
    code, out, _ = run(capsys, "consequence", "--assume", "binary-lie,almost-lie", "--target", "cd")
    assert code == 0 and out.startswith("derivable")
    code, out, _ = run(capsys, "consequence", "--assume", "almost-lie", "--target", "cd", "--json")
    assert code == 0 and json.loads(out)["derivable"] is False


def test_algebra_from_file(capsys, tmp_path):
    path = tmp_path / "b.alg"
    path.write_text(B61_TEXT)
    code, out, _ = run(capsys, "check", str(path), "--json")
    assert code == 0 and json.loads(out)["varieties"]["AlmostLie"]


def test_extend_writes_extension(capsys, tmp_path):
    coc = tmp_path / "phi.txt"
    coc.write_text("1 2 1\n")
    out_path = tmp_path / "ext.alg"
    code, _, _ = run(capsys, "extend", "heisenberg3", "--cocycle", str(coc), "--out", str(out_path))
    assert code == 0
    E = load(out_path)
    assert E.dim == 4


def test_free_command(capsys):
    code, out, _ = run(capsys, "free", "--generators", "2", "--class", "3")
    assert code == 0 and loads(out).dim == catalog.free_anticommutative(2, 3).dim


@pytest.mark.parametrize("argv,code", [
    (["check", "nosuch"], 2),
    (["check", "sl2", "--field", "GF(4)"], 2),
    (["frobnicate"], 2),
    ([], 2),
    (["cohomology", "b61", "--theory", "ce"], 1),
    (["consequence", "--assume", "malcev", "--target", "lie"], 1),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err


def test_bad_file_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.alg"
    path.write_text("field Q\ndim 3\n2 1 -> 1*3\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 1 and "line 3" in err


def test_bad_cocycle_exit_code(capsys, tmp_path):
    coc = tmp_path / "phi.txt"
    coc.write_text("1 2 1\n1 2 2\n")
    code, _, err = run(capsys, "extend", "sl2", "--cocycle", str(coc))
    assert code == 1 and "line 2" in err
