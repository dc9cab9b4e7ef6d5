import io

import pytest

from conftest import X_1113, Y_113
from treecover.cli import InputError, parse_filter, run
from treecover.maps import parse
from treecover.walk import canonical_form, conjugate, to_involution, to_walk


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def keyvals(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


def test_invariants_x_tree():
    code, out = call("invariants", "--format", "walk", X_1113)
    assert code == 0
    assert keyvals(out) == {"n": "6", "o": "4", "genus": "1", "d_c": "2", "d_s": "2", "order": "3"}


def test_invariants_from_file_and_stdin(tmp_path, monkeypatch):
    f = tmp_path / "x.rot"
    f.write_text("3: 0 1 2 5\n0: 3\n1: 3\n2: 3\n5: 3 6\n6: 5 7\n7: 6\n")
    code, out = call("invariants", "--format", "rotation", str(f))
    assert code == 0 and keyvals(out)["order"] == "3"
    monkeypatch.setattr("sys.stdin", io.StringIO(Y_113 + "\n"))
    code, out = call("invariants", "-")
    assert code == 0 and keyvals(out)["order"] == "5"


def test_invariants_rejects_genus_one(capsys):
    code, _ = call("invariants", "--format", "involution", "2 3 0 1")
    assert code == 2
    assert "plane tree" in capsys.readouterr().err


def test_covers_chain_expect():
    code, out = call("covers", "--target", "chain", "--d", "2", "--expect", "yes", X_1113)
    assert code == 0
    kv = keyvals(out)
    assert kv["covers"] == "true" and kv["quotient"] == "1 0 3 2"
    code, out = call("covers", "--target", "chain", "--d", "3", "--expect", "yes", X_1113)
    assert code == 1 and keyvals(out)["covers"] == "false"
    code, _ = call("covers", "--target", "chain", "--d", "3", "--expect", "no", X_1113)
    assert code == 0


def test_covers_tree_and_star_targets():
    code, out = call("covers", "--target", "tree", "--d", "3", X_1113)
    assert code == 0
    assert keyvals(out)["covers"] == "false" and keyvals(out)["reason"] == "periodicity"
    code, out = call("covers", "--target", "star", "--d", "3", "()" * 6)
    assert keyvals(out)["covers"] == "true"


def test_covers_genus_one_input():
    code, out = call("covers", "--target", "tree", "--d", "1", "2 3 0 1")
    assert keyvals(out)["covers"] == "false"
    code, out = call("covers", "--target", "chain", "--d", "2", "2 3 0 1")
    assert keyvals(out)["covers"] == "false"


def test_phi_and_canonical_is_rotation_independent():
    code, out = call("phi", "((()))")
    assert out.strip() == "5 4 3 2 1 0"
    phi = to_involution(parse(X_1113))
    outputs = set()
    for k in range(len(phi)):
        code, out = call("phi", "--canonical", "--format", "involution", str(conjugate(phi, k)))
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1
    assert outputs.pop().strip() == str(canonical_form(phi))


def test_quotient_round_trip():
    for fmt in ("involution", "walk", "rotation"):
        code, out = call("quotient", "--d", "2", "--out-format", fmt, X_1113)
        assert code == 0
        body = out.split("d=2\n", 1)[1]
        text = body.split("=", 1)[1] if fmt != "rotation" else body
        q = to_involution(parse(text, fmt))
        assert canonical_form(q).phi == (1, 0, 3, 2)


def test_quotient_failure():
    code, out = call("quotient", "--d", "3", X_1113)
    assert code == 1
    assert keyvals(out) == {"covers": "false", "reason": "periodicity"}
    code, _ = call("quotient", "--d", "1", "--out-format", "walk", "2 3 0 1")
    assert code == 1  # fixed block


def test_enumerate():
    assert call("enumerate", "--edges", "3", "--mode", "rooted", "--count-only") == (0, "count=5\n")
    code, out = call("enumerate", "--edges", "3")
    assert out.splitlines() == ["tree=()(())", "tree=()()()", "count=2"]


def test_enumerate_filter():
    code, out = call("enumerate", "--edges", "6", "--filter", "genus=1,order=3")
    trees = [line[5:] for line in out.splitlines() if line.startswith("tree=")]
    assert keyvals(out)["count"] == str(len(trees))
    canon_x = to_walk(canonical_form(to_involution(parse(X_1113))))
    assert canon_x in trees
    for w in trees:
        kv = keyvals(call("invariants", w)[1])
        assert (kv["genus"], kv["order"]) == ("1", "3")


def test_enumerate_filter_errors(capsys):
    code, _ = call("enumerate", "--edges", "3", "--filter", "colour=2")
    assert code == 2
    with pytest.raises(InputError):
        parse_filter("genus==1")
    assert len(parse_filter("genus=1, order<=3,d_c!=2")) == 3


def test_search():
    code, out = call("search", "--genus", "1", "--order", "3")
    kv = keyvals(out)
    assert code == 0 and kv["found"] == "true"
    assert (kv["genus"], kv["order"]) == ("1", "3")
    code, out = call("search", "--genus", "2", "--order", "3", "--max-edges", "5")
    assert code == 1 and keyvals(out) == {"found": "false"}


def test_verify():
    code, out = call("verify", "--max-edges", "6")
    kv = keyvals(out)
    assert code == 0
    assert kv["discrepancies"] == "0"
    assert kv["trees_6"] == "14"
    assert int(kv["leafless_star_congruences"]) > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["invariants", "(("],
        ["invariants", "--format", "walk", "1 0"],
        ["covers", "--target", "ring", "--d", "2", "()"],
        ["covers", "--target", "chain", "--d", "0", "()"],
        ["enumerate", "--edges", "0"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    assert run(argv, out=io.StringIO()) == 2
    assert capsys.readouterr().err


def test_output_is_deterministic():
    a = call("enumerate", "--edges", "5")
    b = call("enumerate", "--edges", "5")
    assert a == b
