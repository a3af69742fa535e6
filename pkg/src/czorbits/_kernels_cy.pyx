# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix kernels over packed encodings.

Same contracts as the pure-Python fallback: matrices are packed big-endian
encodings of (a + bω + cω² + dω³)/√2^k entries with ω⁴ = −1, biased
coefficients, raw k. All arithmetic runs in 64-bit registers; outputs are
reduced and re-checked against the 32-bit coefficient range.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdint cimport int64_t, uint8_t, uint32_t

BACKEND = "cython"

cdef int64_t _BIAS = 2147483648LL


cdef inline int64_t _load_coeff(const uint8_t *p) noexcept:
    cdef uint32_t v = ((<uint32_t> p[0]) << 24) | ((<uint32_t> p[1]) << 16) \
        | ((<uint32_t> p[2]) << 8) | (<uint32_t> p[3])
    return <int64_t> v - _BIAS


cdef inline int64_t _load_raw(const uint8_t *p) noexcept:
    cdef uint32_t v = ((<uint32_t> p[0]) << 24) | ((<uint32_t> p[1]) << 16) \
        | ((<uint32_t> p[2]) << 8) | (<uint32_t> p[3])
    return <int64_t> v


cdef inline void _store_word(uint8_t *p, uint32_t u) noexcept:
    p[0] = <uint8_t> (u >> 24)
    p[1] = <uint8_t> ((u >> 16) & 0xFF)
    p[2] = <uint8_t> ((u >> 8) & 0xFF)
    p[3] = <uint8_t> (u & 0xFF)


cdef int _store_entry(uint8_t *p, int64_t a, int64_t b, int64_t c,
                      int64_t d, int64_t k) except -1:
    if (a < -_BIAS or a >= _BIAS or b < -_BIAS or b >= _BIAS
            or c < -_BIAS or c >= _BIAS or d < -_BIAS or d >= _BIAS):
        raise AssertionError("coefficient exceeds the 32-bit range")
    _store_word(p, <uint32_t> (a + _BIAS))
    _store_word(p + 4, <uint32_t> (b + _BIAS))
    _store_word(p + 8, <uint32_t> (c + _BIAS))
    _store_word(p + 12, <uint32_t> (d + _BIAS))
    _store_word(p + 16, <uint32_t> k)
    return 0


cdef void _unpack(const uint8_t *src, int64_t *dst, int n_entries) noexcept:
    cdef int i
    for i in range(n_entries):
        dst[5 * i] = _load_coeff(src + 20 * i)
        dst[5 * i + 1] = _load_coeff(src + 20 * i + 4)
        dst[5 * i + 2] = _load_coeff(src + 20 * i + 8)
        dst[5 * i + 3] = _load_coeff(src + 20 * i + 12)
        dst[5 * i + 4] = _load_raw(src + 20 * i + 16)


def mat_mul(bytes x, bytes y, int dim):
    if dim != 2 and dim != 4:
        raise ValueError("matrix dimension must be 2 or 4")
    cdef Py_ssize_t size = dim * dim * 20
    if len(x) != size or len(y) != size:
        raise ValueError("matrix encoding does not match dimension")

    cdef int64_t a[80]
    cdef int64_t b[80]
    _unpack(<const uint8_t *> PyBytes_AS_STRING(x), a, dim * dim)
    _unpack(<const uint8_t *> PyBytes_AS_STRING(y), b, dim * dim)

    out = PyBytes_FromStringAndSize(NULL, size)
    cdef uint8_t *op = <uint8_t *> PyBytes_AS_STRING(out)

    cdef int i, j, t, pa, pb, stride = dim * 5
    cdef int64_t a1, b1, c1, d1, a2, b2, c2, d2
    cdef int64_t e, f, g, h, kk, t1, t2, t3, t4
    cdef int64_t sa, sb, sc, sd, sk
    for i in range(dim):
        for j in range(dim):
            sa = sb = sc = sd = 0
            sk = 0
            for t in range(dim):
                pa = i * stride + t * 5
                pb = t * stride + j * 5
                a1 = a[pa]; b1 = a[pa + 1]; c1 = a[pa + 2]; d1 = a[pa + 3]
                a2 = b[pb]; b2 = b[pb + 1]; c2 = b[pb + 2]; d2 = b[pb + 3]
                e = a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2
                f = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
                g = a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2
                h = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
                if (e | f | g | h) == 0:
                    continue
                kk = a[pa + 4] + b[pb + 4]
                # align denominators via the push-down map (×√2 on numerators)
                while kk < sk:
                    t1 = f - h; t2 = e + g; t3 = f + h; t4 = g - e
                    e = t1; f = t2; g = t3; h = t4
                    kk += 1
                if sk < kk:
                    if (sa | sb | sc | sd) == 0:
                        sk = kk
                    else:
                        while sk < kk:
                            t1 = sb - sd; t2 = sa + sc; t3 = sb + sd; t4 = sc - sa
                            sa = t1; sb = t2; sc = t3; sd = t4
                            sk += 1
                sa += e
                sb += f
                sc += g
                sd += h
            if (sa | sb | sc | sd) == 0:
                sk = 0
            else:
                while sk > 0 and ((sa ^ sc) & 1) == 0 and ((sb ^ sd) & 1) == 0:
                    t1 = (sb - sd) >> 1
                    t2 = (sa + sc) >> 1
                    t3 = (sb + sd) >> 1
                    t4 = (sc - sa) >> 1
                    sa = t1; sb = t2; sc = t3; sd = t4
                    sk -= 1
            _store_entry(op + (i * dim + j) * 20, sa, sb, sc, sd, sk)
    return out


def mat_tensor(bytes x, bytes y):
    if len(x) != 80 or len(y) != 80:
        raise ValueError("tensor expects two 2x2 encodings")

    cdef int64_t a[20]
    cdef int64_t b[20]
    _unpack(<const uint8_t *> PyBytes_AS_STRING(x), a, 4)
    _unpack(<const uint8_t *> PyBytes_AS_STRING(y), b, 4)

    out = PyBytes_FromStringAndSize(NULL, 320)
    cdef uint8_t *op = <uint8_t *> PyBytes_AS_STRING(out)

    cdef int i1, j1, i2, j2, pa, pb
    cdef int64_t a1, b1, c1, d1, a2, b2, c2, d2
    cdef int64_t e, f, g, h, kk, t1, t2, t3, t4
    for i1 in range(2):
        for j1 in range(2):
            pa = (i1 * 2 + j1) * 5
            a1 = a[pa]; b1 = a[pa + 1]; c1 = a[pa + 2]; d1 = a[pa + 3]
            for i2 in range(2):
                for j2 in range(2):
                    pb = (i2 * 2 + j2) * 5
                    a2 = b[pb]; b2 = b[pb + 1]; c2 = b[pb + 2]; d2 = b[pb + 3]
                    e = a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2
                    f = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
                    g = a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2
                    h = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
                    if (e | f | g | h) == 0:
                        kk = 0
                    else:
                        kk = a[pa + 4] + b[pb + 4]
                        while kk > 0 and ((e ^ g) & 1) == 0 and ((f ^ h) & 1) == 0:
                            t1 = (f - h) >> 1
                            t2 = (e + g) >> 1
                            t3 = (f + h) >> 1
                            t4 = (g - e) >> 1
                            e = t1; f = t2; g = t3; h = t4
                            kk -= 1
                    _store_entry(op + ((i1 * 2 + i2) * 4 + (j1 * 2 + j2)) * 20,
                                 e, f, g, h, kk)
    return out


def mat_dagger(bytes x, int dim):
    if dim != 2 and dim != 4:
        raise ValueError("matrix dimension must be 2 or 4")
    cdef Py_ssize_t size = dim * dim * 20
    if len(x) != size:
        raise ValueError("matrix encoding does not match dimension")

    cdef int64_t a[80]
    _unpack(<const uint8_t *> PyBytes_AS_STRING(x), a, dim * dim)

    out = PyBytes_FromStringAndSize(NULL, size)
    cdef uint8_t *op = <uint8_t *> PyBytes_AS_STRING(out)

    cdef int i, j, p
    for i in range(dim):
        for j in range(dim):
            p = (j * dim + i) * 5
            # conjugation (a,b,c,d) -> (a,−d,−c,−b) preserves reducedness
            _store_entry(op + (i * dim + j) * 20,
                         a[p], -a[p + 3], -a[p + 2], -a[p + 1], a[p + 4])
    return out
