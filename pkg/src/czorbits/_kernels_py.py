"""Pure-Python matrix kernels over packed encodings.

Fallback for the compiled extension; same contracts, same results. Matrices
are the packed byte encodings described in `encoding`, entries (a,b,c,d,k)
meaning (a + bω + cω² + dω³)/√2^k with ω⁴ = −1. All outputs are reduced.
"""

from __future__ import annotations

import struct

from .encoding import BIAS

BACKEND = "pure-python"

_STRUCTS = {
    20: struct.Struct(">20I"),
    80: struct.Struct(">80I"),
}


def _unpack(data: bytes) -> list[int]:
    st = _STRUCTS.get(len(data) // 4)
    if st is None or st.size != len(data):
        raise ValueError(f"bad matrix encoding length {len(data)}")
    vals = list(st.unpack(data))
    for i in range(0, len(vals), 5):
        vals[i] -= BIAS
        vals[i + 1] -= BIAS
        vals[i + 2] -= BIAS
        vals[i + 3] -= BIAS
    return vals


def _pack(vals: list[int]) -> bytes:
    for i in range(0, len(vals), 5):
        vals[i] += BIAS
        vals[i + 1] += BIAS
        vals[i + 2] += BIAS
        vals[i + 3] += BIAS
    try:
        return _STRUCTS[len(vals)].pack(*vals)
    except (struct.error, KeyError):
        raise AssertionError("coefficient exceeds the 32-bit range") from None


def mat_mul(x: bytes, y: bytes, dim: int) -> bytes:
    if len(x) != dim * dim * 20 or len(y) != dim * dim * 20:
        raise ValueError("matrix encoding does not match dimension")
    a = _unpack(x)
    b = _unpack(y)
    out = [0] * (dim * dim * 5)
    stride = dim * 5
    for i in range(dim):
        arow = i * stride
        for j in range(dim):
            sa = sb = sc = sd = 0
            sk = 0
            for t in range(dim):
                pa = arow + t * 5
                pb = t * stride + j * 5
                a1 = a[pa]
                b1 = a[pa + 1]
                c1 = a[pa + 2]
                d1 = a[pa + 3]
                a2 = b[pb]
                b2 = b[pb + 1]
                c2 = b[pb + 2]
                d2 = b[pb + 3]
                e = a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2
                f = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
                g = a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2
                h = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
                if e | f | g | h == 0:
                    continue
                kk = a[pa + 4] + b[pb + 4]
                # align denominators via the push-down map (×√2 on numerators)
                while kk < sk:
                    e, f, g, h = f - h, e + g, f + h, g - e
                    kk += 1
                if sk < kk:
                    if sa | sb | sc | sd == 0:
                        sk = kk
                    else:
                        while sk < kk:
                            sa, sb, sc, sd = sb - sd, sa + sc, sb + sd, sc - sa
                            sk += 1
                sa += e
                sb += f
                sc += g
                sd += h
            if sa | sb | sc | sd == 0:
                sk = 0
            else:
                while sk > 0 and (sa ^ sc) & 1 == 0 and (sb ^ sd) & 1 == 0:
                    sa, sb, sc, sd = (
                        (sb - sd) // 2,
                        (sa + sc) // 2,
                        (sb + sd) // 2,
                        (sc - sa) // 2,
                    )
                    sk -= 1
            o = (i * dim + j) * 5
            out[o] = sa
            out[o + 1] = sb
            out[o + 2] = sc
            out[o + 3] = sd
            out[o + 4] = sk
    return _pack(out)


def mat_tensor(x: bytes, y: bytes) -> bytes:
    if len(x) != 80 or len(y) != 80:
        raise ValueError("tensor expects two 2x2 encodings")
    a = _unpack(x)
    b = _unpack(y)
    out = [0] * 80
    for i1 in range(2):
        for j1 in range(2):
            pa = (i1 * 2 + j1) * 5
            a1 = a[pa]
            b1 = a[pa + 1]
            c1 = a[pa + 2]
            d1 = a[pa + 3]
            k1 = a[pa + 4]
            for i2 in range(2):
                for j2 in range(2):
                    pb = (i2 * 2 + j2) * 5
                    a2 = b[pb]
                    b2 = b[pb + 1]
                    c2 = b[pb + 2]
                    d2 = b[pb + 3]
                    e = a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2
                    f = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
                    g = a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2
                    h = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
                    kk = k1 + b[pb + 4]
                    if e | f | g | h == 0:
                        kk = 0
                    else:
                        while kk > 0 and (e ^ g) & 1 == 0 and (f ^ h) & 1 == 0:
                            e, f, g, h = (
                                (f - h) // 2,
                                (e + g) // 2,
                                (f + h) // 2,
                                (g - e) // 2,
                            )
                            kk -= 1
                    o = ((i1 * 2 + i2) * 4 + (j1 * 2 + j2)) * 5
                    out[o] = e
                    out[o + 1] = f
                    out[o + 2] = g
                    out[o + 3] = h
                    out[o + 4] = kk
    return _pack(out)


def mat_dagger(x: bytes, dim: int) -> bytes:
    if len(x) != dim * dim * 20:
        raise ValueError("matrix encoding does not match dimension")
    a = _unpack(x)
    out = [0] * (dim * dim * 5)
    for i in range(dim):
        for j in range(dim):
            p = (j * dim + i) * 5
            o = (i * dim + j) * 5
            # conjugation (a,b,c,d) -> (a,−d,−c,−b) preserves reducedness
            out[o] = a[p]
            out[o + 1] = -a[p + 3]
            out[o + 2] = -a[p + 2]
            out[o + 3] = -a[p + 1]
            out[o + 4] = a[p + 4]
    return _pack(out)
