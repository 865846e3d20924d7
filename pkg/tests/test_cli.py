import json

import pytest

from gausscircuits.cli import main

U1 = "(v1 v4 v2 v1^-1 v2 v3 v4 v3)"
FIVE = "(a b^-1 a c d^G e^-1 d^G b^-1 c^-1 e)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse(capsys):
    code, out, _ = run(capsys, "parse", "(b a b a)")
    assert code == 0
    assert "canonical: (v1 v2 v1 v2)" in out
    assert "a 0" in out


def test_parse_syntax_error(capsys):
    code, _, err = run(capsys, "parse", "(a b a]")
    assert code == 2
    assert "error" in err


def test_adj_five_chord(capsys):
    code, out, _ = run(capsys, "adj", FIVE)
    assert code == 0
    assert out.splitlines()[0] == "letters: a b c d e"
    assert out.splitlines()[1] == "5"
    assert out.splitlines()[2] == "0 1 0 0 0"
    assert out.splitlines()[5] == "0 0 0 G 1"


def test_adj_sorted_order(capsys):
    code, out, _ = run(capsys, "adj", U1, "--order", "sorted")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "letters: v1 v2 v3 v4"
    assert lines[2:] == ["1 1 0 1", "1 0 0 0", "0 0 0 1", "1 0 1 0"]


def test_gauss_golden(capsys):
    code, out, _ = run(capsys, "gauss", U1, "--order", "sorted")
    assert code == 0
    assert "G 0 1 1" in out
    assert "consistent: yes" in out
    assert "word: (v1^G" in out


def test_gauss_negative_is_exit_3(capsys):
    code, _, err = run(capsys, "gauss", "(a b a b)")
    assert code == 3
    assert "error" in err


def test_gauss_exists_verdicts_exit_zero(capsys):
    code, out, _ = run(capsys, "gauss-exists", U1)
    assert code == 0 and "gauss circuit: yes" in out and "corank: 0" in out
    code, out, _ = run(capsys, "gauss-exists", "(a b a b)")
    assert code == 0 and "gauss circuit: no" in out and "corank: 1" in out


def test_rotating(capsys):
    code, out, _ = run(capsys, "rotating", "(v^G v^G)")
    assert code == 0 and out.strip() == "(v v)"


def test_star(capsys):
    code, out, _ = run(capsys, "star", "(a^G b a^G b)", "a")
    assert code == 0 and out.strip() == "(a b^-1 a b)"


def test_star_unknown_letter(capsys):
    code, _, _ = run(capsys, "star", "(a a)", "z")
    assert code == 3


def test_pivot_word(capsys):
    code, out, _ = run(capsys, "pivot-word", "(a b a^-1 b^-1)", "a", "b")
    assert code == 0 and out.strip() == "(a^G b^G a^G b^G)"


def test_pivot_word_not_interlaced(capsys):
    code, _, _ = run(capsys, "pivot-word", "(a a b b)", "a", "b")
    assert code == 3


def test_surgery_prints_both_counts(capsys):
    code, out, _ = run(capsys, "surgery", "(v v)")
    assert code == 0
    assert "components (simulation): 2" in out
    assert "components (corank + 1): 2" in out


def test_ddiagram(capsys):
    code, out, _ = run(capsys, "ddiagram", "(a b a b)")
    assert code == 0 and "d-diagram: yes" in out
    code, out, _ = run(capsys, "ddiagram", "(a b c a b c)")
    assert code == 0 and "d-diagram: no" in out


def test_tours(capsys):
    code, out, _ = run(capsys, "tours", "(v v)")
    assert code == 0
    assert out.splitlines()[0] == "tours: 2"
    assert "(v1 v1)" in out and "(v1^G v1^G)" in out


def test_tours_bound(capsys):
    code, _, _ = run(capsys, "tours", "(a b a b)", "--max-n", "1")
    assert code == 4


def test_word_from_file(tmp_path, capsys):
    f = tmp_path / "word.txt"
    f.write_text(U1)
    code, out, _ = run(capsys, "gauss-exists", f"@{f}")
    assert code == 0 and "yes" in out


def test_matrix_commands(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2\n1 1\n1 0\n")
    code, out, _ = run(capsys, "loc", str(f), "1")
    assert code == 0
    assert out == "2\n1 1\n1 1\n"

    f.write_text("3\n0 1 0\n1 0 1\n0 1 0\n")
    code, out, _ = run(capsys, "pivot", str(f), "1", "2")
    assert code == 0
    assert out == "3\n0 1 1\n1 0 0\n1 0 0\n"

    code, _, _ = run(capsys, "pivot", str(f), "1", "3")
    assert code == 3  # not adjacent

    f.write_text("1\n0\n")
    code, out, _ = run(capsys, "chi", str(f))
    assert code == 0 and out == "1\n0\n"
    code, out, _ = run(capsys, "chi-inv", str(f))
    assert code == 0 and out == "1\n0\n"


def test_matrix_format_error(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2\n0 1\n1 2\n")
    code, _, _ = run(capsys, "chi", str(f))
    assert code == 2


def test_asymmetric_matrix_rejected(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2\n0 1\n0 0\n")
    code, _, _ = run(capsys, "loc", str(f), "1")
    assert code == 2


def test_orbit(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2\n0 0\n0 0\n")
    code, out, _ = run(capsys, "orbit", str(f))
    assert code == 0
    assert "orbit size: 1" in out


def test_orbit_bound(tmp_path, capsys):
    f = tmp_path / "m.txt"
    n = 9
    f.write_text(f"{n}\n" + "\n".join(" ".join("0" for _ in range(n)) for _ in range(n)) + "\n")
    code, _, _ = run(capsys, "orbit", str(f))
    assert code == 4


def test_realize(tmp_path, capsys):
    f = tmp_path / "adj.txt"
    f.write_text("2\n0 1\n1 0\n")
    code, out, _ = run(capsys, "realize", str(f))
    assert code == 0 and "realizable: yes" in out and "(v1 v2 v1 v2)" in out


def test_realize_negative(tmp_path, capsys):
    from gausscircuits.verify import wheel_interlacement
    from gausscircuits.words import adjacency_to_text

    f = tmp_path / "adj.txt"
    f.write_text(adjacency_to_text(wheel_interlacement()))
    code, out, _ = run(capsys, "realize", str(f))
    assert code == 0 and "realizable: no" in out


def test_random_deterministic(capsys):
    code, out1, _ = run(capsys, "random", "--n", "5", "--seed", "3", "--mode", "gaussian_only")
    code2, out2, _ = run(capsys, "random", "--n", "5", "--seed", "3", "--mode", "gaussian_only")
    assert code == code2 == 0 and out1 == out2
    assert "^G" in out1


def test_verify_list_and_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "golden-adjacency" in out
    code, out, _ = run(capsys, "verify", "--suite", "golden-adjacency")
    assert code == 0 and "PASS" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "(a b a b)")
    assert code == 0
    assert out.startswith("graph interlacement {")
    assert '"a" [framing="0"];' in out
    assert '"a" -- "b";' in out


def test_export_json(capsys):
    code, out, _ = run(capsys, "export-dot", FIVE, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 5
    by_name = {e["name"]: e for e in payload["letters"]}
    assert by_name["d"]["framing"] == "G"
    assert by_name["a"]["positions"] == [1, 3]
    assert all(1 <= p <= 10 for e in payload["letters"] for p in e["positions"])


def test_output_is_byte_deterministic(capsys):
    seen = set()
    for _ in range(3):
        _, out, _ = run(capsys, "tours", U1)
        seen.add(out)
    assert len(seen) == 1
