"""
Small helpers shared across the package.
"""
from __future__ import unicode_literals
from contextlib import contextmanager
import hashlib
import os
import tempfile

import numpy as np
import six

__all__ = (
    'popcount',
    'popcount_array',
    'parity_array',
    'stable_hash',
    'atomic_write',
    'make_rng',
)


def popcount(value):
    " Number of set bits of a non-negative integer. "
    return bin(value).count('1')


def popcount_array(values):
    """
    Vectorized popcount for a numpy array of non-negative integers below
    2**32.
    """
    v = np.asarray(values, dtype=np.int64)
    v = v - ((v >> 1) & 0x55555555)
    v = (v & 0x33333333) + ((v >> 2) & 0x33333333)
    v = (v + (v >> 4)) & 0x0F0F0F0F
    return ((v * 0x01010101) & 0xFFFFFFFF) >> 24


def parity_array(values):
    " Popcount modulo two, vectorized. "
    return popcount_array(values) & 1


def stable_hash(*parts):
    """
    Hex digest that only depends on the text of `parts`. Used for
    generator-set hashes and census sharding, so it must not depend on
    Python's randomized `hash()`.
    """
    h = hashlib.sha1()
    for p in parts:
        if not isinstance(p, six.text_type):
            p = six.text_type(p)
        h.update(p.encode('utf-8'))
        h.update(b'\0')
    return h.hexdigest()[:16]


@contextmanager
def atomic_write(path):
    """
    Context manager yielding a text file object. The data only replaces
    `path` when the block finishes without an exception.
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(prefix='.tmp-', dir=directory)
    try:
        with os.fdopen(fd, 'w') as f:
            yield f
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def make_rng(seed):
    " Seeded numpy random generator. "
    return np.random.default_rng(seed)
