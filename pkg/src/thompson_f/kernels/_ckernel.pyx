# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for tree pair arithmetic.

Same API and conventions as the pure-Python reference ``pykernel``; the two
backends are differentially tested against each other.  Bitstrings cross the
boundary as ``str`` and are processed as ASCII bytes internally.
"""

from libc.stdlib cimport free, malloc

X0, X0_INV, X1, X1_INV = 0, 1, 2, 3

GENERATOR_DIAGRAMS = (
    ("10100", "11000"),
    ("11000", "10100"),
    ("1010100", "1011000"),
    ("1011000", "1010100"),
)

L0, LL, I0, IR, RI, R0, RNI = 0, 1, 2, 3, 4, 5, 6

WEIGHT_TABLE = (
    (0, -1, -1, -1, -1, -1, -1),
    (-1, 2, 2, 2, 1, 1, 1),
    (-1, 2, 2, 4, 3, 1, 1),
    (-1, 2, 4, 4, 3, 3, 3),
    (-1, 1, 3, 3, 2, 2, 2),
    (-1, 1, 1, 3, 2, 0, 2),
    (-1, 1, 1, 3, 2, 2, 2),
)

cdef int _WEIGHTS[7][7]
for _a in range(7):
    for _b in range(7):
        _WEIGHTS[_a][_b] = WEIGHT_TABLE[_a][_b]


cdef inline Py_ssize_t _tree_end(const unsigned char *s, Py_ssize_t i) noexcept:
    cdef int depth = 0
    while True:
        if s[i] == b'1':
            depth += 1
        else:
            depth -= 1
        i += 1
        if depth < 0:
            return i


def tree_end(s, i):
    """End index (exclusive) of the subtree starting at position ``i``."""
    cdef bytes b = s.encode("ascii")
    return _tree_end(<const unsigned char *> b, i)


def validate_tree(s):
    """True iff ``s`` is a well-formed preorder tree encoding."""
    cdef bytes b
    try:
        b = s.encode("ascii")
    except (UnicodeEncodeError, AttributeError):
        return False
    cdef const unsigned char *p = <const unsigned char *> b
    cdef Py_ssize_t n = len(b), i
    cdef int depth = 0
    if n == 0:
        return False
    for i in range(n):
        if p[i] != b'0' and p[i] != b'1':
            return False
        depth += 1 if p[i] == b'1' else -1
        if depth < 0:
            return i == n - 1
    return False


cdef Py_ssize_t _union_rec(const unsigned char *a, const unsigned char *b,
                           Py_ssize_t ia, Py_ssize_t ib,
                           unsigned char *out, Py_ssize_t *k,
                           Py_ssize_t *ib_out) noexcept:
    """Writes the union subtree; returns new ia, stores new ib in ib_out."""
    cdef Py_ssize_t e
    if a[ia] == b'0' and b[ib] == b'0':
        out[k[0]] = b'0'
        k[0] += 1
        ib_out[0] = ib + 1
        return ia + 1
    if a[ia] == b'0':
        e = _tree_end(b, ib)
        while ib < e:
            out[k[0]] = b[ib]
            k[0] += 1
            ib += 1
        ib_out[0] = e
        return ia + 1
    if b[ib] == b'0':
        e = _tree_end(a, ia)
        while ia < e:
            out[k[0]] = a[ia]
            k[0] += 1
            ia += 1
        ib_out[0] = ib + 1
        return e
    out[k[0]] = b'1'
    k[0] += 1
    ia = _union_rec(a, b, ia + 1, ib + 1, out, k, ib_out)
    return _union_rec(a, b, ia, ib_out[0], out, k, ib_out)


def union_trees(a, b):
    """Smallest tree containing both ``a`` and ``b`` as root-anchored subtrees."""
    cdef bytes ba = a.encode("ascii")
    cdef bytes bb = b.encode("ascii")
    cdef Py_ssize_t cap = len(ba) + len(bb)
    cdef unsigned char *out = <unsigned char *> malloc(cap)
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t k = 0, ib_out = 0
    try:
        _union_rec(<const unsigned char *> ba, <const unsigned char *> bb,
                   0, 0, out, &k, &ib_out)
        return out[:k].decode("ascii")
    finally:
        free(out)


def _additions(small, big):
    """Subtree of ``big`` hanging at each leaf of ``small``, in leaf order."""
    cdef bytes bs = small.encode("ascii")
    cdef bytes bg = big.encode("ascii")
    cdef const unsigned char *ps = <const unsigned char *> bs
    cdef const unsigned char *pg = <const unsigned char *> bg
    cdef Py_ssize_t i = 0, j = 0, e, n = len(bs)
    cdef int depth
    subs = []
    while i < n:
        if ps[i] == b'1':
            i += 1
            j += 1
            continue
        # a leaf of small: take the whole subtree of big starting at j
        e = _tree_end(pg, j)
        subs.append(bg[j:e].decode("ascii"))
        i += 1
        j = e
    return subs


def _attach(base, subs):
    """Replace the k-th leaf of ``base`` with ``subs[k]``."""
    out = []
    cdef Py_ssize_t k = 0
    for ch in base:
        if ch == "1":
            out.append("1")
        else:
            out.append(subs[k])
            k += 1
    return "".join(out)


cdef bytes _reduce_pair_b(bytes neg, bytes pos):
    """Reduce; returns neg + b':' + pos."""
    cdef unsigned char *bn
    cdef unsigned char *bp
    cdef Py_ssize_t nn = len(neg), np = len(pos)
    cdef Py_ssize_t i, j, wn, wp, leaf_n, leaf_p
    cdef bint changed = True
    bn = <unsigned char *> malloc(nn + np + 2)
    if bn == NULL:
        raise MemoryError()
    bp = bn + nn + 1
    cdef const unsigned char *src = <const unsigned char *> neg
    for i in range(nn):
        bn[i] = src[i]
    src = <const unsigned char *> pos
    for i in range(np):
        bp[i] = src[i]
    try:
        while changed:
            changed = False
            # walk both trees in parallel over leaf numbers; find a caret
            # with two exposed leaves at the same leaf index in both
            i = 0
            j = 0
            leaf_n = 0
            while i < nn - 2:
                if bn[i] == b'1' and bn[i + 1] == b'0' and bn[i + 2] == b'0':
                    # exposed caret in neg at left-leaf-index leaf_n; scan pos
                    leaf_p = 0
                    j = 0
                    while j < np - 2:
                        if bp[j] == b'0':
                            leaf_p += 1
                            if leaf_p > leaf_n:
                                break
                        elif (leaf_p == leaf_n and bp[j] == b'1'
                              and bp[j + 1] == b'0' and bp[j + 2] == b'0'):
                            # replace each '100' with '0' in place
                            bn[i] = b'0'
                            for wn in range(i + 1, nn - 2):
                                bn[wn] = bn[wn + 2]
                            bp[j] = b'0'
                            for wp in range(j + 1, np - 2):
                                bp[wp] = bp[wp + 2]
                            nn -= 2
                            np -= 2
                            changed = True
                            break
                        j += 1
                    if changed:
                        break
                if bn[i] == b'0':
                    leaf_n += 1
                i += 1
        bn[nn] = b':'
        for i in range(np):
            bn[nn + 1 + i] = bp[i]
        return bn[:nn + 1 + np]
    finally:
        free(bn)


def reduce_pair(neg, pos):
    """Remove carets exposed at the same leaf positions in both trees, to fixpoint."""
    cdef bytes merged = _reduce_pair_b(neg.encode("ascii"), pos.encode("ascii"))
    n, _, p = merged.partition(b":")
    return n.decode("ascii"), p.decode("ascii")


def is_reduced(neg, pos):
    cdef bytes bn = neg.encode("ascii")
    cdef bytes bp = pos.encode("ascii")
    cdef const unsigned char *pn = <const unsigned char *> bn
    cdef const unsigned char *pp = <const unsigned char *> bp
    cdef Py_ssize_t nn = len(bn), np = len(bp)
    cdef Py_ssize_t i, j, leaf_n, leaf_p
    i = 0
    leaf_n = 0
    while i < nn - 2:
        if pn[i] == b'1' and pn[i + 1] == b'0' and pn[i + 2] == b'0':
            leaf_p = 0
            j = 0
            while j < np - 2:
                if pp[j] == b'0':
                    leaf_p += 1
                    if leaf_p > leaf_n:
                        break
                elif (leaf_p == leaf_n and pp[j] == b'1'
                      and pp[j + 1] == b'0' and pp[j + 2] == b'0'):
                    return False
                j += 1
        if pn[i] == b'0':
            leaf_n += 1
        i += 1
    return True


def multiply(neg1, pos1, neg2, pos2):
    """Reduced product of the elements (neg1, pos1) and (neg2, pos2)."""
    u = union_trees(neg1, pos2)
    res_neg = _attach(neg2, _additions(pos2, u))
    res_pos = _attach(pos1, _additions(neg1, u))
    return reduce_pair(res_neg, res_pos)


cdef inline bint _condition(const unsigned char *p, int gen) except -1:
    cdef Py_ssize_t e
    if p[0] == b'0':
        return False
    if gen == 0:
        return p[1] == b'1'
    e = _tree_end(p, 1)
    if gen == 1:
        return p[e] == b'1'
    if gen == 2:
        return p[e] == b'1' and p[e + 1] == b'1'
    if gen == 3:
        return p[e] == b'1' and p[_tree_end(p, e + 1)] == b'1'
    raise ValueError(f"unknown generator code {gen!r}")


def condition_holds(neg, gen):
    """Fordham's shape condition on the negative tree for generator ``gen``."""
    cdef bytes b = neg.encode("ascii")
    return bool(_condition(<const unsigned char *> b, gen))


def rotate(neg, gen):
    """Negative-tree rearrangement for ``gen``; requires condition_holds(neg, gen)."""
    cdef bytes b = neg.encode("ascii")
    cdef const unsigned char *p = <const unsigned char *> b
    cdef Py_ssize_t ea, eb
    if gen == 0:
        ea = _tree_end(p, 2)
        return "1" + neg[2:ea] + "1" + neg[ea:]
    if gen == 1:
        ea = _tree_end(p, 1)
        return "11" + neg[1:ea] + neg[ea + 1:]
    ea = _tree_end(p, 1)
    if gen == 2:
        eb = _tree_end(p, ea + 2)
        return neg[:ea] + "1" + neg[ea + 2:eb] + "1" + neg[eb:]
    if gen == 3:
        eb = _tree_end(p, ea + 1)
        return neg[:ea] + "11" + neg[ea + 1:eb] + neg[eb + 1:]
    raise ValueError(f"unknown generator code {gen!r}")


def right_multiply(neg, pos, gen):
    """Reduced product of (neg, pos) with the generator diagram for ``gen``."""
    cdef bytes b = neg.encode("ascii")
    if _condition(<const unsigned char *> b, gen):
        return reduce_pair(rotate(neg, gen), pos)
    gn, gp = GENERATOR_DIAGRAMS[gen]
    return multiply(neg, pos, gn, gp)


cdef Py_ssize_t _classify_rec(const unsigned char *s, Py_ssize_t i,
                              bint left_spine, bint right_spine,
                              char *is_left, char *on_right, char *has_right,
                              Py_ssize_t *counter) noexcept:
    cdef Py_ssize_t il = i + 1, el, er, my
    cdef bint hr
    if s[il] == b'1':
        el = _classify_rec(s, il, left_spine, False,
                           is_left, on_right, has_right, counter)
    else:
        el = il + 1
    my = counter[0]
    counter[0] += 1
    hr = s[el] == b'1'
    if hr:
        er = _classify_rec(s, el, False, right_spine,
                           is_left, on_right, has_right, counter)
    else:
        er = el + 1
    is_left[my] = left_spine
    on_right[my] = right_spine
    has_right[my] = hr
    return er


cdef int _classify_codes(const unsigned char *p, Py_ssize_t nbits,
                         char *types) except -1:
    """Fill ``types`` with the caret type codes; returns the caret count."""
    cdef Py_ssize_t n = 0, i, k
    for i in range(nbits):
        if p[i] == b'1':
            n += 1
    if n == 0:
        return 0
    cdef char *buf = <char *> malloc(3 * n + 1)
    if buf == NULL:
        raise MemoryError()
    cdef char *is_left = buf
    cdef char *on_right = buf + n
    cdef char *has_right = buf + 2 * n
    cdef Py_ssize_t counter = 0
    cdef bint interior_follows, is_int, next_int
    try:
        _classify_rec(p, 0, True, True, is_left, on_right, has_right, &counter)
        interior_follows = False
        # walk backwards so the interior_follows suffix flag is available
        for k in range(n - 1, -1, -1):
            is_int = not is_left[k] and not on_right[k]
            if is_left[k]:
                types[k] = L0 if k == 0 else LL
            elif is_int:
                types[k] = IR if has_right[k] else I0
            else:
                next_int = (k + 1 < n and not is_left[k + 1]
                            and not on_right[k + 1])
                if next_int:
                    types[k] = RI
                elif not interior_follows:
                    types[k] = R0
                else:
                    types[k] = RNI
            interior_follows = interior_follows or is_int
        return <int> n
    finally:
        free(buf)


def classify(s):
    """Caret type codes of ``s`` indexed by infix caret number."""
    cdef bytes b = s.encode("ascii")
    cdef Py_ssize_t nbits = len(b)
    cdef char *types = <char *> malloc(nbits if nbits else 1)
    if types == NULL:
        raise MemoryError()
    cdef int n, k
    try:
        n = _classify_codes(<const unsigned char *> b, nbits, types)
        return tuple(types[k] for k in range(n))
    finally:
        free(types)


def fordham_length(neg, pos):
    """Word length over {x0, x1} of the reduced pair (neg, pos)."""
    cdef bytes bn = neg.encode("ascii")
    cdef bytes bp = pos.encode("ascii")
    cdef Py_ssize_t nbits = len(bn)
    cdef char *buf = <char *> malloc(2 * nbits if nbits else 1)
    if buf == NULL:
        raise MemoryError()
    cdef int n, m, k, total = 0
    try:
        n = _classify_codes(<const unsigned char *> bn, nbits, buf)
        m = _classify_codes(<const unsigned char *> bp, len(bp), buf + nbits)
        if n != m:
            raise ValueError("caret counts differ")
        for k in range(n):
            total += _WEIGHTS[<int> buf[k]][<int> buf[nbits + k]]
        return total
    finally:
        free(buf)
