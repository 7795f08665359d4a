# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernel: products of small integer matrices stored as flat tuples.

Only matrices whose entries provably fit machine arithmetic are handled here;
anything larger raises OverflowError so the caller can fall back to the exact
pure-Python path. Exactness is never traded away.
"""


def mat_mul_flat(a, b, Py_ssize_t n):
    """Return the flat row-major product of two n*n integer matrices.

    ``a`` and ``b`` are flat sequences of Python ints of length n*n.
    Raises OverflowError when n > 16 or when an intermediate value could
    exceed the signed 64-bit range.
    """
    cdef Py_ssize_t nn = n * n
    cdef Py_ssize_t i, j, k
    cdef long long abuf[256]
    cdef long long bbuf[256]
    cdef long long x, amax = 0, bmax = 0, acc

    if n <= 0 or n > 16:
        raise OverflowError("kernel handles sizes 1..16 only")
    if len(a) != nn or len(b) != nn:
        raise ValueError("flat length does not match matrix size")

    for i in range(nn):
        x = a[i]          # PyLong -> long long; huge ints raise OverflowError
        abuf[i] = x
        if x < 0:
            x = -x
        if x > amax:
            amax = x
    for i in range(nn):
        x = b[i]
        bbuf[i] = x
        if x < 0:
            x = -x
        if x > bmax:
            bmax = x

    # Each dot product is a sum of n terms bounded by amax*bmax; insist on
    # a comfortable margin below 2^63. The bound check runs in Python-int
    # arithmetic so it cannot itself overflow.
    if amax > 0 and bmax > 0:
        if int(amax) * int(bmax) * int(n) >= (1 << 62):
            raise OverflowError("entries too large for the compiled kernel")

    out = [0] * nn
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc += abuf[i * n + k] * bbuf[k * n + j]
            out[i * n + j] = acc
    return tuple(out)
