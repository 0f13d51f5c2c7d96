from hypothesis import given
from hypothesis import strategies as st

from matroidbench.infinite.words import EdgeSetExpr, UPWord, edge_name, parse_edge_name, single, words_up_to

bits = st.lists(st.integers(0, 1), max_size=6)
words = st.builds(lambda pre, per: UPWord(tuple(pre), tuple(per)), bits, st.lists(st.integers(0, 1), min_size=1, max_size=5))
N = 40


def explicit(w):
    return [w[i] for i in range(N)]


@given(words, words)
def test_boolean_ops_are_pointwise(a, b):
    for op, f in [("|", lambda x, y: x | y), ("&", lambda x, y: x & y), ("-", lambda x, y: x & (1 - y)), ("^", lambda x, y: x ^ y)]:
        got = {"|": a | b, "&": a & b, "-": a - b, "^": a ^ b}[op]
        assert explicit(got) == [f(x, y) for x, y in zip(explicit(a), explicit(b))]


@given(words, words)
def test_canonical_form_decides_equality(a, b):
    same = all(a[i] == b[i] for i in range(max(a.preperiod, b.preperiod) + a.period * b.period))
    assert (a == b) == same


@given(words)
def test_complement_and_double_complement(w):
    assert ~~w == w
    assert (w | ~w) == UPWord.ones()
    assert (w & ~w).is_empty()


@given(words, st.integers(-5, 5))
def test_shift(w, k):
    s = w.shift(k)
    assert all(s[i] == w[i - k] for i in range(max(0, k), N))


@given(words, st.integers(0, 10), st.integers(0, 1))
def test_with_bit(w, i, v):
    x = w.with_bit(i, v)
    assert x[i] == v
    assert all(x[j] == w[j] for j in range(N) if j != i)


def test_residue_words():
    w = UPWord.residues(3, 4, [1, 2])
    assert [i for i in range(20) if w[i]] == [i for i in range(3, 20) if i % 4 in (1, 2)]
    assert UPWord.finite([1, 4]).cardinality() == 2
    assert UPWord.ones().cardinality() is None


def test_words_up_to_is_canonical_and_complete():
    ws = words_up_to(2, 2)
    assert len(ws) == len(set(ws))
    assert all(w.preperiod <= 2 and w.period <= 2 for w in ws)
    assert UPWord((1, 0), (1,)) in ws


exprs = st.builds(
    lambda f, a, b: EdgeSetExpr(frozenset(f), {"rail:a": a, "cross:0": b}),
    st.sets(st.sampled_from(["x", "y", "z"])), words, words,
)


@given(exprs, exprs, exprs)
def test_expr_boolean_algebra(a, b, c):
    assert (a | b) == (b | a)
    assert (a & (b | c)) == ((a & b) | (a & c))
    assert ((a - b) | (a & b)) == a
    assert (a - b) <= a
    assert ((a & b) <= b)


@given(exprs)
def test_add_remove_single(a):
    e = ("rail:a", 3)
    assert a.add(e).contains(e)
    assert not a.remove(e).contains(e)
    assert single(e).cardinality() == 1


def test_edge_names_round_trip():
    for e in ["up", ("rail:t", 4), ("cross:0", 0), ("coretail:2", 11)]:
        assert parse_edge_name(edge_name(e)) == e
