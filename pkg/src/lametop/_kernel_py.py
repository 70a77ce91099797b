"""Pure-Python fallback for the term-map multiplication kernel.

Term maps are dicts from exponent tuples (one entry per variable, all
non-negative ints) to integer coefficients.  Exponent tuples are packed into
single integers before the convolution so the inner loop does one integer
addition per monomial product instead of a tuple construction.
"""

from __future__ import annotations

IMPL = "python"


def _exponent_bounds(terms, nvars):
    bound = [0] * nvars
    for exps in terms:
        for i in range(nvars):
            e = exps[i]
            if e > bound[i]:
                bound[i] = e
    return bound


def _pack(terms, shifts):
    packed = {}
    for exps, c in terms.items():
        key = 0
        for e, sh in zip(exps, shifts):
            key |= e << sh
        packed[key] = c
    return packed


def mul_terms(a, b, nvars):
    """Multiply two integer-coefficient term maps over `nvars` variables."""
    if not a or not b:
        return {}
    if nvars == 0:
        return {(): a[()] * b[()]}

    amax = _exponent_bounds(a, nvars)
    bmax = _exponent_bounds(b, nvars)
    widths = [max(1, (amax[i] + bmax[i]).bit_length()) for i in range(nvars)]
    shifts = [0] * nvars
    for i in range(1, nvars):
        shifts[i] = shifts[i - 1] + widths[i - 1]

    pa = _pack(a, shifts)
    pb = _pack(b, shifts)
    if len(pa) < len(pb):  # fewer outer iterations on the larger side
        pa, pb = pb, pa
    items_b = list(pb.items())

    out = {}
    get = out.get
    for ka, ca in pa.items():
        for kb, cb in items_b:
            k = ka + kb
            v = get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb

    masks = [(1 << w) - 1 for w in widths]
    pairs = tuple(zip(shifts, masks))
    result = {}
    for key, c in out.items():
        if c:
            result[tuple((key >> sh) & m for sh, m in pairs)] = c
    return result
