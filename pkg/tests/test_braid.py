import pytest
from hypothesis import given, strategies as st

from mmr.braid import BraidWord, closure_info, parity_check, parse_braid, require_knot
from mmr.errors import BraidParseError, NotAKnotError


def test_parse_examples():
    b = parse_braid("1,1,1")
    assert b.strands == 2 and b.letters == (1, 1, 1)
    b = parse_braid("1,-2,1,-2")
    assert b.strands == 3 and b.letters == (1, -2, 1, -2)
    assert parse_braid(" 1  -2 ,1").letters == (1, -2, 1)


@pytest.mark.parametrize("text", ["0", "1,x", ""])
def test_parse_errors(text):
    with pytest.raises(BraidParseError):
        parse_braid(text)


def test_parse_reports_position():
    with pytest.raises(BraidParseError) as err:
        parse_braid("1,2,0")
    assert err.value.position == 2
    with pytest.raises(BraidParseError):
        parse_braid("1,3", strands=3)


def test_empty_word_with_strands():
    b = parse_braid("", strands=1)
    assert b.strands == 1 and b.letters == ()


def test_closure_examples():
    i = closure_info(parse_braid("1,1,1"))
    assert i.is_knot and i.exponent_sum == 3 and i.cycles == ((1, 2),)
    i = closure_info(parse_braid("1,-1"))
    assert not i.is_knot and i.permutation == (1, 2)
    i = closure_info(parse_braid("1,-2,1,-2"))
    assert i.is_knot and i.exponent_sum == 0 and len(i.cycles) == 1


def test_parity_examples():
    assert parity_check(parse_braid("1,1,1"))
    assert parity_check(parse_braid("1,-2,1,-2"))
    assert parity_check(parse_braid("", 1))


def test_require_knot_lists_cycles():
    with pytest.raises(NotAKnotError) as err:
        require_knot(parse_braid("1,-1,2"))
    assert len(err.value.cycles) == 2


def test_stabilized_word_is_still_a_knot():
    b = parse_braid("1,1,1").stabilized(1)
    assert b.strands == 3 and closure_info(b).is_knot
    assert not closure_info(BraidWord(3, (1, 1, 1))).is_knot


words = st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=12),
    )
)


@given(words)
def test_knot_closures_have_even_parity(nw):
    n, w = nw
    b = BraidWord(n, tuple(w))
    if closure_info(b).is_knot:
        assert parity_check(b)


@given(words)
def test_word_times_inverse_is_trivial(nw):
    n, w = nw
    b = BraidWord(n, tuple(w))
    bb = BraidWord(n, b.letters + b.inverse().letters)
    info = closure_info(bb)
    assert info.permutation == tuple(range(1, n + 1)) and info.exponent_sum == 0
