from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halinrep import decompose_tuc, gen_halin, gen_tuc, is_halin


def test_single_internal_vertex_is_a_wheel():
    d = decompose_tuc(gen_halin(1, 1))
    assert len(d.internal) == 1


def test_seed7_is_halin():
    d = decompose_tuc(gen_halin(7, 5))
    assert is_halin(d)
    assert len(d.internal) == 5


def test_deterministic():
    assert gen_halin(42, 9).edges() == gen_halin(42, 9).edges()
    assert gen_tuc(42, 9, 3).edges() == gen_tuc(42, 9, 3).edges()


def test_rejects_non_positive_target():
    with pytest.raises(ValueError):
        gen_halin(0, 0)
    with pytest.raises(ValueError):
        gen_tuc(0, 0, 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 40))
def test_halin_outputs(seed, target):
    d = decompose_tuc(gen_halin(seed, target))
    assert is_halin(d)
    assert (len(d.internal) == 1) == (target == 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 30), st.integers(1, 6))
def test_tuc_outputs(seed, target, extra):
    d = decompose_tuc(gen_tuc(seed, target, extra))
    assert not is_halin(d)
    assert len(d.internal) == target + extra
