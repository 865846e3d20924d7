import pytest
from hypothesis import given, settings

from gausscircuits.errors import (
    LetterCountError,
    MarkMismatchError,
    NotInterlacedError,
    UnknownLetterError,
    WordSyntaxError,
)
from gausscircuits.words import (
    FramedAdjacency,
    FramedWord,
    Framing,
    Mark,
    adjacency,
    adjacency_from_text,
    adjacency_to_text,
    canonical,
    framed_star,
    interlaced,
    mirror_bar,
    parse,
    rotate,
    star_pivot,
    to_text,
)

from conftest import framed_words

FIVE_CHORD = "(a b^-1 a c d^G e^-1 d^G b^-1 c^-1 e)"


def test_parse_rotating_word():
    w = parse("(v1 v4 v2 v1^-1 v2 v3 v4 v3)")
    assert w.n == 4
    assert w.names == ("v1", "v4", "v2", "v3")
    assert w.framings["v1"] is Framing.ONE
    assert w.framings["v2"] is Framing.ZERO


def test_parse_single_gaussian():
    w = parse("(v^G v^G)")
    assert w.framings["v"] is Framing.GAUSS


def test_parse_compact_tex_style():
    assert parse("(ab^{-1}acd^Ge^{-1}d^Gb^{-1}c^{-1}e)") == parse(FIVE_CHORD)


def test_parse_errors():
    with pytest.raises(LetterCountError):
        parse("(a b a)")
    with pytest.raises(MarkMismatchError):
        parse("(a^G b a b)")
    with pytest.raises(WordSyntaxError):
        parse("a b a b")
    with pytest.raises(WordSyntaxError):
        parse("(a^2 b a^2 b)")


def test_empty_word():
    w = parse("()")
    assert w.n == 0
    assert to_text(w) == "()"
    assert canonical(w) == w


def test_framings_of_five_chord_word():
    w = parse(FIVE_CHORD)
    assert {a: f.value for a, f in w.framings.items()} == {
        "a": "0",
        "b": "0",
        "c": "1",
        "d": "G",
        "e": "1",
    }


def test_interlacement_examples():
    w = parse(FIVE_CHORD)
    assert interlaced(w, "a", "b")
    assert not interlaced(w, "a", "c")
    assert interlaced(parse("(a b a b)"), "a", "b")
    with pytest.raises(UnknownLetterError):
        interlaced(w, "a", "z")


def test_adjacency_five_chord_golden():
    adj = adjacency(parse(FIVE_CHORD))
    assert adj.letters == ("a", "b", "c", "d", "e")
    assert [f.value for f in adj.diag] == ["0", "0", "1", "G", "1"]
    assert adj.offdiag_matrix().to_lists() == [
        [0, 1, 0, 0, 0],
        [1, 0, 1, 0, 1],
        [0, 1, 0, 0, 1],
        [0, 0, 0, 0, 1],
        [0, 1, 1, 1, 0],
    ]


def test_adjacency_rotating_word_golden():
    adj = adjacency(parse("(v1 v4 v2 v1^-1 v2 v3 v4 v3)"), order=["v1", "v2", "v3", "v4"])
    assert adj.with_bit_diag().to_lists() == [
        [1, 1, 0, 1],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [1, 0, 1, 0],
    ]


def test_adjacency_single_gaussian():
    adj = adjacency(parse("(v^G v^G)"))
    assert adj.n == 1 and adj.diag == (Framing.GAUSS,)


def test_adjacency_text_round_trip():
    adj = adjacency(parse(FIVE_CHORD))
    again = adjacency_from_text(adjacency_to_text(adj), letters=adj.letters)
    assert again == adj


def test_canonical_identifies_rotations():
    assert canonical(parse("(b a b a)")) == canonical(parse("(a b a b)"))
    assert to_text(canonical(parse("(b a b a)"))) == "(v1 v2 v1 v2)"


@given(framed_words())
@settings(max_examples=150, deadline=None)
def test_class_equality_under_symmetries(w):
    for k in range(len(w.letters)):
        assert rotate(w, k) == w
        assert canonical(rotate(w, k)) == canonical(w)
    assert mirror_bar(w) == w
    assert canonical(mirror_bar(w)) == canonical(w)


@given(framed_words())
@settings(max_examples=150, deadline=None)
def test_parse_text_round_trip(w):
    assert parse(to_text(w)) == w


@given(framed_words(max_n=4))
@settings(max_examples=100, deadline=None)
def test_canonical_adjacency_is_permutation_of_original(w):
    import itertools

    adj = adjacency(w)
    cadj = adjacency(canonical(w))
    n = adj.n
    for perm in itertools.permutations(range(n)):
        if all(adj.diag[perm[i]] is cadj.diag[i] for i in range(n)) and all(
            adj.entry(perm[i], perm[j]) == cadj.entry(i, j)
            for i in range(n)
            for j in range(n)
        ):
            return
    assert False, "no index permutation matches the canonical adjacency"


def test_star_golden_pair():
    w = parse("(a^G b a^G b)")
    assert framed_star(w, "a") == parse("(a b^-1 a b)")
    assert framed_star(parse("(a b^-1 a b)"), "a") == w


def test_star_unknown_letter():
    with pytest.raises(UnknownLetterError):
        framed_star(parse("(a a)"), "b")


@given(framed_words())
@settings(max_examples=150, deadline=None)
def test_star_is_involution(w):
    for name in w.names:
        assert framed_star(framed_star(w, name), name) == w


@given(framed_words(max_n=4))
@settings(max_examples=100, deadline=None)
def test_star_framing_transitions(w):
    for a in w.names:
        out = framed_star(w, a)
        fa, fo = w.framings[a], out.framings[a]
        assert {Framing.GAUSS: Framing.ZERO, Framing.ZERO: Framing.GAUSS, Framing.ONE: Framing.ONE}[fa] is fo
        for b in w.names:
            if b == a:
                continue
            fb, fb2 = w.framings[b], out.framings[b]
            if fb is Framing.GAUSS:
                assert fb2 is Framing.GAUSS
            elif interlaced(w, a, b):
                assert fb2 is not fb
            else:
                assert fb2 is fb


@given(framed_words(max_n=4))
@settings(max_examples=100, deadline=None)
def test_star_complements_interlacement_around_letter(w):
    from gausscircuits.symmat import SymMatrix, loc_unchecked

    for a in w.names:
        order = w.names
        before = adjacency(w, order=order)
        after = adjacency(framed_star(w, a), order=order)
        k = order.index(a)
        shadow = loc_unchecked(SymMatrix(before.rows), k)
        assert after.rows == shadow.zero_diag().rows


def test_star_pivot_turns_framing_one_pair_gaussian():
    out = star_pivot(parse("(a b a^-1 b^-1)"), "a", "b")
    assert out == parse("(a^G b^G a^G b^G)")
    assert out.framings["a"] is Framing.GAUSS and out.framings["b"] is Framing.GAUSS


def test_star_pivot_requires_interlacement():
    with pytest.raises(NotInterlacedError):
        star_pivot(parse("(a a b b)"), "a", "b")


@given(framed_words(max_n=4))
@settings(max_examples=100, deadline=None)
def test_star_pivot_involution_and_sibling(w):
    for a in w.names:
        for b in w.names:
            if a >= b or not interlaced(w, a, b):
                continue
            once = star_pivot(w, a, b)
            assert star_pivot(once, a, b) == w
            # the mirrored composition agrees except on the framings of a, b
            other = star_pivot(w, b, a)
            oa, ob = adjacency(once, order=w.names), adjacency(other, order=w.names)
            assert oa.rows == ob.rows
            for name, f1, f2 in zip(w.names, oa.diag, ob.diag):
                if name not in (a, b):
                    assert f1 is f2


def test_adjacency_rejects_asymmetric_rows():
    with pytest.raises(Exception):
        FramedAdjacency(("a", "b"), (Framing.ZERO, Framing.ZERO), (2, 0))
