import pytest
from hypothesis import given, settings

from strategies import words
from transwords.extendability import Status, StructuredInfiniteWord, force_recurrent_letter, right_extendable
from transwords.gamma import (
    GammaWitness,
    build_gamma,
    build_gamma_reversed,
    check_gamma,
    splice,
)
from transwords.generators import base_word_avoiding, relabel, thue_morse
from transwords.repetition import is_power_free, naive_is_power_free
from transwords.words import PowerBound, Undecided, WordError, reverse

P = PowerBound.parse
PLUS = P("2+")


def _tm_ubar():
    return StructuredInfiniteWord((), 1, relabel(thue_morse(), {0: 0, 1: 2}))


def test_check_gamma_example_valid():
    rep = check_gamma(GammaWitness((), (), 2, (), thue_morse()), 3, PLUS)
    assert rep.valid and rep.y == 0 and not rep.strict_count


def test_check_gamma_alphabet_conflict():
    rep = check_gamma(GammaWitness((), (), 0, (), thue_morse()), 3, PLUS)
    assert rep.properties[4] is False


def test_check_gamma_count_property():
    rep = check_gamma(GammaWitness((2,), (), 2, (), thue_morse()), 3, PLUS)
    assert rep.properties[7] is False
    assert rep.properties[:7] == (True,) * 7


def test_check_gamma_g_not_prefix():
    rep = check_gamma(GammaWitness((), (), 2, (1,), thue_morse()), 3, PLUS)
    assert rep.properties[5] is False


def test_check_gamma_uniqueness_property():
    # x g y = 20 occurs inside w2 as well
    rep = check_gamma(GammaWitness((), (2, 0, 1), 2, (), thue_morse()), 3, PLUS)
    assert rep.properties[6] is False


def test_report_lines():
    lines = check_gamma(GammaWitness((), (), 2, (), thue_morse()), 3, PLUS).lines()
    assert len(lines) == 8 and lines[0].startswith("property 1: true")


def test_splice_example():
    s = splice(GammaWitness((), (), 2, (), thue_morse()), 3, PLUS)
    pre = s.prefix(20)
    assert pre == (2,) + thue_morse().prefix(19) and is_power_free(pre, PLUS)
    assert s.prefix(0) == ()
    with pytest.raises(WordError):
        splice(GammaWitness((2,), (), 2, (), thue_morse()), 3, PLUS)


def test_build_gamma_tm_example():
    w = build_gamma((), _tm_ubar(), 2, thue_morse(), 3, PLUS)
    assert check_gamma(w, 3, PLUS).valid
    assert is_power_free(w.w1 + w.w2 + (2,) + thue_morse().prefix(512), PLUS)


def test_build_gamma_covers_target():
    ub = force_recurrent_letter((0,), 2, 3, PLUS)
    w = build_gamma((0,), ub, 2, thue_morse(), 3, PLUS)
    assert w.finite_part[:1] == (0,)


def test_build_gamma_rejects_x_in_t():
    with pytest.raises(WordError):
        build_gamma((), _tm_ubar(), 0, thue_morse(), 3, PLUS)


def test_build_gamma_rejects_non_prefix_target():
    with pytest.raises(WordError):
        build_gamma((2,), _tm_ubar(), 2, thue_morse(), 3, PLUS)


def test_build_gamma_reversed_symmetry():
    ub = force_recurrent_letter((0, 1), 2, 3, PLUS)
    t = thue_morse()
    fwd = build_gamma((0, 1), ub, 2, t, 3, PLUS)
    bwd = build_gamma_reversed(reverse((0, 1)), ub.reversed(), 2, t.reversed(), 3, PLUS)
    assert (bwd.w1, bwd.w2, bwd.g) == (fwd.w1, fwd.w2, fwd.g)
    left = bwd.left_form()
    assert (left["g"] + (2,) + left["w2"] + left["w1"])[-2:] == (1, 0)


def test_windowed_construction_small_cap_undecided():
    from transwords.extendability import extension_stream
    from transwords.gamma import build_gamma_windowed
    stream = extension_stream((0, 1), 3, PLUS)
    t = base_word_avoiding(3, PLUS, avoid=2)
    with pytest.raises(Undecided):
        build_gamma_windowed((0, 1), stream, 2, t, 3, PLUS, window_start=4, window_cap=8)


@pytest.mark.parametrize("k, bound", [(3, "2+"), (3, "5/2"), (4, "2"), (5, "3")])
def test_witnesses_satisfy_all_properties(k, bound):
    b = P(bound)
    for x in range(k):
        t = base_word_avoiding(k, b, avoid=x)
        for u in [(), ((x + 1) % k,), ((x + 1) % k, x)]:
            ub = force_recurrent_letter(u, x, k, b)
            for wit in (ub.gamma, build_gamma(u, ub, x, t, k, b)):
                assert check_gamma(wit, k, b).valid
                assert naive_is_power_free(wit.w1 + wit.w2 + (wit.x,) + wit.t.prefix(200), b)


@settings(max_examples=20)
@given(words(3, 7))
def test_random_targets_plus(u):
    if not is_power_free(u, PLUS) or right_extendable(u, 3, PLUS, 64).status is not Status.EXTENDABLE:
        return
    ub = force_recurrent_letter(u, 2, 3, PLUS)
    wit = build_gamma(u, ub, 2, thue_morse(), 3, PLUS)
    assert wit.finite_part[: len(u)] == u
    assert is_power_free(wit.w1 + wit.w2 + (2,) + thue_morse().prefix(512), PLUS)
