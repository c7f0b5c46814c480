from fractions import Fraction

import pytest
from hypothesis import given

from majority_closure.core import IntegerProfile, dual, empty_function
from majority_closure.errors import CyclicNeedsOddN, ParseError
from majority_closure.fileio import (format_profile, format_rational, format_tournament,
                                     format_trace, parse_profile, parse_tournament)
from majority_closure.generators import cyclic, generate_family, linear, random_tournament
from majority_closure.synthesis import synthesize
from majority_closure.valency import valencies

from conftest import choice_functions


def test_parse_tournament(T3):
    text = "# transitive\nn 3\n0 1\n1 2\n\n0 2\n"
    assert parse_tournament(text) == T3
    assert format_tournament(T3) == "n 3\n0 1\n0 2\n1 2\n"


def test_parse_empty():
    assert parse_tournament("n 4\n") == empty_function(4)


@pytest.mark.parametrize("text,line", [
    ("n 3\n0 0\n", 2),
    ("n 3\n0 1\n1 0\n", 3),
    ("n 3\n0 5\n", 2),
    ("n 3\n0 x\n", 2),
    ("n 3\n0 1 2\n", 2),
    ("size 3\n", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_tournament(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_profile_round_trip(C3):
    p = IntegerProfile(3, ((C3, 3), (dual(C3), 2)))
    text = format_profile(p)
    assert text == "n 3\nvoter 3\n0 1\n1 2\n2 0\n\nvoter 2\n0 2\n1 0\n2 1\n\n"
    again = parse_profile(text)
    assert set(again.voters) == set(p.voters)
    assert format_profile(again) == text


def test_profile_errors():
    with pytest.raises(ParseError):
        parse_profile("n 3\n0 1\n")
    with pytest.raises(ParseError):
        parse_profile("n 3\nvoter 0\n0 1\n")
    with pytest.raises(ParseError):
        parse_profile("n 3\n")


def test_rationals():
    assert format_rational(Fraction(2, 4)) == "1/2"
    assert format_rational(Fraction(3)) == "3"


def test_trace_format(T3, C3):
    text = format_trace(synthesize(T3, C3).stages)
    lines = text.splitlines()
    assert lines[0] == "stage bias 0->1"
    assert "matrix" in lines and "0 1 1" in lines
    assert all(line.isascii() for line in lines)


def test_generators(C3, L4):
    assert generate_family("cyclic", 3) == C3
    r5 = cyclic(5)
    assert valencies(r5) == (2, 2, 2, 2, 2)
    assert valencies(linear(4)) == (3, 2, 1, 0) and linear(4) == L4
    assert random_tournament(5, 7) == random_tournament(5, 7) and random_tournament(5, 7).is_full
    with pytest.raises(CyclicNeedsOddN):
        cyclic(4)
    with pytest.raises(ValueError):
        generate_family("star", 3)


@given(choice_functions())
def test_tournament_round_trip(c):
    text = format_tournament(c)
    assert parse_tournament(text) == c
    assert format_tournament(parse_tournament(text)) == text
