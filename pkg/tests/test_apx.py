from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from afkit.core import AF, ApxError, parse_apx, serialize_apx

from conftest import make_af6

AF6_TEXT = """\
% six arguments, one mutual attack
arg(a). arg(b). arg(c).
arg(d).
arg(e). arg(f).

defeat(a,b).
defeat(b,d). defeat(c,b).
defeat(c,d).
defeat(c,e).
defeat(d,c). defeat(d,e).
defeat(e,f).   % trailing comment
"""


def test_parse_demo_text():
    af = parse_apx(AF6_TEXT)
    assert af == make_af6()


def test_serialize_round_trip():
    af = make_af6()
    assert parse_apx(serialize_apx(af)) == af


def test_serialize_is_sorted():
    af = AF(["b_1", "a"], [("b_1", "a"), ("a", "b_1"), ("a", "a")])
    assert serialize_apx(af) == (
        "arg(b_1).\narg(a).\ndefeat(b_1,a).\ndefeat(a,b_1).\ndefeat(a,a).\n"
    )


def test_att_predicate_accepted():
    af = parse_apx("arg(x). arg(y). att(x,y).")
    assert af.has_attack("x", "y")


def test_attack_before_declaration_is_fine():
    af = parse_apx("defeat(x,y). arg(x). arg(y).")
    assert af.has_attack("x", "y")


def test_empty_input():
    af = parse_apx("")
    assert af.n == 0 and af.attacks == ()
    assert serialize_apx(af) == ""


def test_duplicate_attacks_collapse():
    af = parse_apx("arg(x). arg(y). defeat(x,y). defeat(x,y).")
    assert af.attacks == ((0, 1),)


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("arg(a)\narg(b).", 1, "malformed"),
        ("arg(a). arg(a).", 1, "duplicate"),
        ("arg(a).\ndefeat(a,zz).", 2, "not declared"),
        ("arg(a).\narg(b).\ndefeat(a).", 3, "defeat/2"),
        ("arg(a,b).", 1, "arg/1"),
        ("foo(a).", 1, "unexpected predicate"),
        ("arg(A).", 1, "malformed"),
        ("arg(a). junk", 1, "malformed"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(ApxError) as exc:
        parse_apx(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_error_message_carries_line_number():
    with pytest.raises(ApxError, match="line 2"):
        parse_apx("arg(a).\n???")


names_st = st.lists(
    st.from_regex(r"[a-z][a-z0-9_]{0,5}", fullmatch=True),
    min_size=0,
    max_size=8,
    unique=True,
)


@given(names=names_st, data=st.data())
def test_round_trip_random(names, data):
    if names:
        attacks = data.draw(
            st.lists(
                st.tuples(st.sampled_from(names), st.sampled_from(names)),
                max_size=20,
            )
        )
    else:
        attacks = []
    af = AF(names, attacks)
    assert parse_apx(serialize_apx(af)) == af
