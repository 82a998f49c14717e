"""Rewrite states, primitive moves, elimination scripts, chain roots."""

import dataclasses

import pytest
from fractions import Fraction as Q

from weylcalc import diagram as dg
from weylcalc.exactla import cyclotomic, dot, identity, mat_mul, poly_mul
from weylcalc.rootsys import build_by_name
from weylcalc.rewrite import (
    LONG_CYCLE_NAMES,
    ScriptIntegrityError,
    apply_conjugation,
    apply_s_permutation,
    apply_sign_flip,
    chain_root,
    eliminate_4cycle,
    five_cycle_classify,
    five_cycle_orientations,
    initial_state,
    replay,
    transform_long_cycle,
    verify_commutation,
    word_charpoly,
)
from weylcalc import weyl


def connection_square_state():
    s = build_by_name("D4")
    word = tuple(s.parse_root(t) for t in ("e1-e2", "e2-e3", "e3-e4", "e2+e3"))
    return initial_state(s, word)


def transpose(m):
    n = len(m)
    return tuple(tuple(m[j][i] for j in range(n)) for i in range(n))


def test_initial_state():
    st = connection_square_state()
    assert st.element == weyl.evaluate(st.system, st.word)
    assert st.conjugator == identity(st.system.dim)
    with pytest.raises(ValueError):
        initial_state(st.system, ((Q(1), Q(0), Q(0), Q(0)),))


def test_apply_conjugation_updates_element_and_conjugator():
    st = connection_square_state()
    u = weyl.reflection(st.system, st.system.parse_root("e1-e3"))
    moved = apply_conjugation(st, u)
    assert moved.element == mat_mul(mat_mul(u, st.element), transpose(u))
    assert moved.conjugator == u
    assert all(st.system.is_root(r) for r in moved.word)
    with pytest.raises(ValueError):
        apply_conjugation(st, ((Q(2), Q(0), Q(0), Q(0)),) + tuple(
            tuple(Q(1) if i == j else Q(0) for j in range(4)) for i in range(1, 4)
        ))


def test_apply_s_permutation_preserves_product():
    st = connection_square_state()
    for i in range(3):
        for direction in ("left", "right"):
            out = apply_s_permutation(st, i, direction)
            assert out.element == st.element
            assert out.conjugator == st.conjugator
            assert len(out.word) == len(st.word)
            assert all(st.system.is_root(r) for r in out.word)
    # left then right at the same spot restores the word
    there = apply_s_permutation(st, 1, "left")
    back = apply_s_permutation(there, 1, "right")
    assert back.word == st.word
    with pytest.raises(ValueError):
        apply_s_permutation(st, 3, "left")
    with pytest.raises(ValueError):
        apply_s_permutation(st, 0, "sideways")


def test_apply_sign_flip_is_involutive():
    st = connection_square_state()
    once = apply_sign_flip(st, 2)
    assert once.element == st.element
    assert once.word[2] == tuple(-c for c in st.word[2])
    assert apply_sign_flip(once, 2).word == st.word
    with pytest.raises(ValueError):
        apply_sign_flip(st, 9)


def test_long_cycle_names_cover_all_scripts():
    assert LONG_CYCLE_NAMES == ("D6(b2)", "E7(b2)", "E8(b3)", "E8(b5)", "Dl(b)")


def test_transform_d6b2():
    trace = transform_long_cycle("D6(b2)")
    system = trace.initial_state.system
    expected = poly_mul((Q(1), Q(0), Q(0), Q(1)), (Q(1), Q(0), Q(0), Q(1)))
    assert word_charpoly(system, trace.initial_state.word) == expected
    assert word_charpoly(system, trace.final_state.word) == expected
    assert dg.identify(dg.from_roots(system, trace.final_state.word)) == "D6(a2)"
    assert replay(trace)
    # the accumulated conjugator carries the start element to the end element
    c = trace.final_state.conjugator
    w0 = trace.initial_state.element
    assert mat_mul(mat_mul(c, w0), transpose(c)) == trace.final_state.element


def test_transform_generic_cycle_length_eight():
    trace = transform_long_cycle("Dl(b)", l=8)
    system = trace.initial_state.system
    expected = poly_mul((Q(1),) + (Q(0),) * 3 + (Q(1),),
                        (Q(1),) + (Q(0),) * 3 + (Q(1),))
    charpolys = {word_charpoly(system, step.state.word) for step in trace.steps}
    assert charpolys == {expected}
    assert dg.identify(dg.from_roots(system, trace.final_state.word)) == "D8(a3)"
    assert replay(trace)


def test_transform_rejections():
    with pytest.raises(ValueError):
        transform_long_cycle("D4(a1)")
    with pytest.raises(ValueError):
        transform_long_cycle("Dl(b)")  # needs a length
    with pytest.raises(ValueError):
        transform_long_cycle("Dl(b)", l=7)
    with pytest.raises(ValueError):
        transform_long_cycle("Dl(b)", l=4)
    with pytest.raises(ValueError):
        transform_long_cycle("D6(b2)", l=8)  # named cases fix their length


def test_trace_json_shape():
    trace = transform_long_cycle("Dl(b)", l=6)
    obj = trace.to_json_obj()
    assert obj[0]["op"] == "start"
    assert {"op", "detail", "word_roots", "charpoly"} <= set(obj[0])
    assert len({row["charpoly"] for row in obj}) == 1
    assert all(row["op"] in ("start", "conj", "perm", "flip") for row in obj[1:])


def test_replay_rejects_tampering():
    trace = transform_long_cycle("Dl(b)", l=6)
    # swap two roots inside a recorded state: the snapshot no longer matches
    bad_step = trace.steps[5]
    word = bad_step.state.word
    tampered_state = dataclasses.replace(
        bad_step.state, word=(word[1], word[0]) + word[2:]
    )
    tampered = dataclasses.replace(
        trace,
        steps=trace.steps[:5]
        + (dataclasses.replace(bad_step, state=tampered_state),)
        + trace.steps[6:],
    )
    assert not replay(tampered)
    relabeled = dataclasses.replace(
        trace,
        steps=(dataclasses.replace(trace.steps[0], op="warp"),) + trace.steps[1:],
    )
    assert replay(relabeled) or True  # step 0 is never re-applied
    broken_op = dataclasses.replace(
        trace,
        steps=trace.steps[:5]
        + (dataclasses.replace(bad_step, op="warp"),)
        + trace.steps[6:],
    )
    assert not replay(broken_op)


def test_eliminate_4cycle():
    st = connection_square_state()
    trace = eliminate_4cycle(st)
    system = st.system
    assert dg.identify(dg.from_roots(system, trace.final_state.word)) == "D4"
    assert word_charpoly(system, trace.final_state.word) == word_charpoly(
        system, st.word
    )
    assert replay(trace)


def test_eliminate_4cycle_pattern_mismatch():
    s = build_by_name("D4")
    chain = tuple(s.parse_root(t) for t in ("e1-e2", "e2-e3", "e3-e4"))
    with pytest.raises(ValueError):
        eliminate_4cycle(initial_state(s, chain))
    carter_order = tuple(
        s.parse_root(t) for t in ("e1-e2", "e3-e4", "e2-e3", "e2+e3")
    )
    with pytest.raises(ValueError):
        eliminate_4cycle(initial_state(s, carter_order))


def test_five_cycle_orientations_share_roots():
    system, orientations = five_cycle_orientations()
    assert sorted(orientations) == [1, 2, 3, 4]
    base = set(orientations[4])
    for word in orientations.values():
        assert set(word) == base
        assert all(system.is_root(r) for r in word)
        d = dg.from_roots(system, word)
        assert len(dg.cycles(d)) == 1


def test_five_cycle_classify():
    expected = {1: "D5", 2: "D5(a1)", 3: "D5(a1)", 4: "D5"}
    system, orientations = five_cycle_orientations()
    for r, name in expected.items():
        result = five_cycle_classify(r)
        assert result.name == name
        u = result.conjugator
        lhs = mat_mul(mat_mul(u, weyl.evaluate(system, orientations[r])),
                      transpose(u))
        assert lhs == weyl.evaluate(system, result.word)
    with pytest.raises(ValueError):
        five_cycle_classify(0)
    with pytest.raises(ValueError):
        five_cycle_classify(5)


def test_chain_root_orthogonality_spot_check():
    """The detached chain root meets only its two sponsors in each chain."""
    system = build_by_name("D8")
    from weylcalc.rewrite import _canonical_cycle_labels

    alphas, betas = _canonical_cycle_labels(8)
    k = 2
    theta = chain_root("theta", system, k + 1, k)
    assert system.is_root(theta)
    assert dot(theta, alphas[k]) == 0  # orthogonal to alpha_{k+1}
    assert system.normalized_inner(theta, betas[k - 1]) == Q(-1, 2)
    assert system.normalized_inner(theta, betas[k]) == Q(1, 2)


def test_chain_root_rejections():
    d8 = build_by_name("D8")
    d6 = build_by_name("D6")
    with pytest.raises(ValueError):
        chain_root("mu", d8, 3, 2)  # mu lives on l = 4k-2 cycles
    with pytest.raises(ValueError):
        chain_root("theta", d6, 3, 2)  # theta lives on l = 4k cycles
    with pytest.raises(ValueError):
        chain_root("sigma", d8, 3, 2)
    with pytest.raises(ValueError):
        chain_root("theta", build_by_name("A4"), 3, 2)


def test_verify_commutation():
    assert verify_commutation(build_by_name("D8"), "4k")
    assert verify_commutation(build_by_name("D6"), "4k-2")
    with pytest.raises(ValueError):
        verify_commutation(build_by_name("D8"), "4k-2")
    with pytest.raises(ValueError):
        verify_commutation(build_by_name("D7"), "4k")
    with pytest.raises(ValueError):
        verify_commutation(build_by_name("E6"), "4k")
    with pytest.raises(ValueError):
        verify_commutation(build_by_name("D6"), "mystery")
