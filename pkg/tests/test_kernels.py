"""Both kernel backends must return identical arrays and witnesses."""

import os
import subprocess
import sys

import numpy as np
import pytest

from ordchoquet import _kernels_numpy as np_k
from ordchoquet import generators as gen
from ordchoquet import kernels

nb_k = pytest.importorskip("ordchoquet._kernels_numba")


def _instances(rng, count=60):
    for _ in range(count):
        s = gen.random_system(rng, rng.choice(gen.KINDS), 6, 40)
        yield s.mask_array, np.ascontiguousarray(s.leq)


def _same(a, b):
    assert np.array_equal(np.asarray(a), np.asarray(b))


def test_kernel_names_cover_dispatch():
    for name in kernels.KERNEL_NAMES:
        assert callable(getattr(kernels, name))


def test_backends_agree(rng):
    for masks, leq in _instances(rng):
        m = len(masks)
        rel = leq & ~np.eye(m, dtype=bool)
        _same(np_k.closure(rel), nb_k.closure(rel))
        z = leq.astype(np.int64)
        _same(np_k.unit_lower_inverse(z), nb_k.unit_lower_inverse(z))
        _same(np_k.containment_matrix(masks), nb_k.containment_matrix(masks))
        for x in (0, int(masks[0]), int(masks[-1]) | 1, int(np.bitwise_or.reduce(masks))):
            _same(np_k.subset_of(masks, x), nb_k.subset_of(masks, x))
            _same(np_k.maximal_in(masks, x), nb_k.maximal_in(masks, x))
        for flag in (True, False):
            _same(np_k.union_witness(masks, flag), nb_k.union_witness(masks, flag))
        _same(np_k.consecutive_witness(masks, leq), nb_k.consecutive_witness(masks, leq))
        _same(np_k.is0_witness(masks, leq), nb_k.is0_witness(masks, leq))
        _same(np_k.is1_witness(masks, leq), nb_k.is1_witness(masks, leq))
        _same(np_k.co_intersecting(masks), nb_k.co_intersecting(masks))


def test_env_flag_selects_numpy():
    env = dict(os.environ, ORDCHOQUET_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from ordchoquet import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
