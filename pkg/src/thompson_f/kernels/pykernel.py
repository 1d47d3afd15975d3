"""Pure-Python kernels for tree pair arithmetic.

All functions work directly on the preorder bitstring encoding of rooted
binary trees (``'1' left right`` for a caret, ``'0'`` for a leaf).  A group
element is an ordered pair of such strings ``(neg, pos)`` with equal leaf
counts; the kernels keep pairs reduced.

The compiled extension ``_ckernel`` implements the same API; the test suite
checks the two backends against each other.

Generator codes: 0 = x0, 1 = x0^-1, 2 = x1, 3 = x1^-1.

Conventions (pinned by the relator, conjugation and seesaw test suites):

* x0 = (neg "10100", pos "11000"), x1 = (neg "1010100", pos "1011000"),
  inverses swap the two trees.
* ``multiply(w, v)`` builds the common refinement of ``w.neg`` and ``v.pos``,
  grafts the added subtrees onto ``v.neg`` and ``w.pos`` by leaf index, and
  reduces.  Under this convention right multiplication by a generator leaves
  the positive tree untouched whenever the generator's shape condition on the
  negative tree holds, and acts there as a local subtree rotation.
"""

X0, X0_INV, X1, X1_INV = 0, 1, 2, 3

# (neg, pos) diagrams for generator codes 0..3.
GENERATOR_DIAGRAMS = (
    ("10100", "11000"),
    ("11000", "10100"),
    ("1010100", "1011000"),
    ("1011000", "1010100"),
)

# Caret type codes.
L0, LL, I0, IR, RI, R0, RNI = 0, 1, 2, 3, 4, 5, 6

# Pair weights, indexed by type code; -1 marks pairs that cannot occur
# (caret 0 of both trees is always L0, so L0 only ever meets L0).
_ = -1
WEIGHT_TABLE = (
    # L0  LL  I0  IR  RI  R0  RNI
    (0,   _,  _,  _,  _,  _,  _),   # L0
    (_,   2,  2,  2,  1,  1,  1),   # LL
    (_,   2,  2,  4,  3,  1,  1),   # I0
    (_,   2,  4,  4,  3,  3,  3),   # IR
    (_,   1,  3,  3,  2,  2,  2),   # RI
    (_,   1,  1,  3,  2,  0,  2),   # R0
    (_,   1,  1,  3,  2,  2,  2),   # RNI
)
del _


def tree_end(s, i):
    """End index (exclusive) of the subtree starting at position ``i``."""
    depth = 0
    while True:
        if s[i] == "1":
            depth += 1
        else:
            depth -= 1
        i += 1
        if depth < 0:
            return i


def validate_tree(s):
    """True iff ``s`` is a well-formed preorder tree encoding."""
    if not s or set(s) - {"0", "1"}:
        return False
    depth = 0
    for i, ch in enumerate(s):
        depth += 1 if ch == "1" else -1
        if depth < 0:
            return i == len(s) - 1
    return False


def union_trees(a, b):
    """Smallest tree containing both ``a`` and ``b`` as root-anchored subtrees."""
    out = []

    def rec(ia, ib):
        if a[ia] == "0" and b[ib] == "0":
            out.append("0")
            return ia + 1, ib + 1
        if a[ia] == "0":
            e = tree_end(b, ib)
            out.append(b[ib:e])
            return ia + 1, e
        if b[ib] == "0":
            e = tree_end(a, ia)
            out.append(a[ia:e])
            return e, ib + 1
        out.append("1")
        ia, ib = rec(ia + 1, ib + 1)
        return rec(ia, ib)

    rec(0, 0)
    return "".join(out)


def _additions(small, big):
    """Subtree of ``big`` hanging at each leaf of ``small``, in leaf order.

    Requires ``small`` to embed in ``big`` at the root.
    """
    subs = []

    def rec(i, j):
        if small[i] == "0":
            e = tree_end(big, j)
            subs.append(big[j:e])
            return i + 1, e
        i, j = rec(i + 1, j + 1)
        return rec(i, j)

    rec(0, 0)
    return subs


def _attach(base, subs):
    """Replace the k-th leaf of ``base`` with ``subs[k]``."""
    out = []
    k = 0
    for ch in base:
        if ch == "1":
            out.append("1")
        else:
            out.append(subs[k])
            k += 1
    return "".join(out)


def _exposed(s):
    """Map left-leaf-index -> string position for carets with two exposed leaves."""
    res = {}
    leaf = 0
    n = len(s)
    for i in range(n - 2):
        ch = s[i]
        if ch == "1" and s[i + 1] == "0" and s[i + 2] == "0":
            res[leaf] = i
        if ch == "0":
            leaf += 1
    return res


def reduce_pair(neg, pos):
    """Remove carets exposed at the same leaf positions in both trees, to fixpoint."""
    while True:
        en = _exposed(neg)
        if not en:
            return neg, pos
        ep = _exposed(pos)
        common = set(en) & set(ep)
        if not common:
            return neg, pos
        for n in sorted(common, reverse=True):
            i = en[n]
            neg = neg[:i] + "0" + neg[i + 3:]
            i = ep[n]
            pos = pos[:i] + "0" + pos[i + 3:]


def is_reduced(neg, pos):
    en = _exposed(neg)
    return not en or not (set(en) & set(_exposed(pos)))


def multiply(neg1, pos1, neg2, pos2):
    """Reduced product of the elements (neg1, pos1) and (neg2, pos2)."""
    u = union_trees(neg1, pos2)
    res_neg = _attach(neg2, _additions(pos2, u))
    res_pos = _attach(pos1, _additions(neg1, u))
    return reduce_pair(res_neg, res_pos)


def condition_holds(neg, gen):
    """Fordham's shape condition on the negative tree for generator ``gen``.

    Equivalent to: the positive tree of the generator's diagram embeds in
    ``neg`` at the root, so that right multiplication is a pure rotation.
    """
    if neg[0] == "0":
        return False
    if gen == X0:
        return neg[1] == "1"
    e = tree_end(neg, 1)
    if gen == X0_INV:
        return neg[e] == "1"
    if gen == X1:
        return neg[e] == "1" and neg[e + 1] == "1"
    if gen == X1_INV:
        return neg[e] == "1" and neg[tree_end(neg, e + 1)] == "1"
    raise ValueError(f"unknown generator code {gen!r}")


def rotate(neg, gen):
    """Negative-tree rearrangement for ``gen``; requires condition_holds(neg, gen)."""
    if gen == X0:
        # 1 (1 A B) C  ->  1 A (1 B C)
        ea = tree_end(neg, 2)
        return "1" + neg[2:ea] + "1" + neg[ea:]
    if gen == X0_INV:
        # 1 A (1 B C)  ->  1 (1 A B) C
        ea = tree_end(neg, 1)
        return "11" + neg[1:ea] + neg[ea + 1:]
    ea = tree_end(neg, 1)
    if gen == X1:
        # 1 A (1 (1 B C) D)  ->  1 A (1 B (1 C D))
        eb = tree_end(neg, ea + 2)
        return neg[:ea] + "1" + neg[ea + 2:eb] + "1" + neg[eb:]
    if gen == X1_INV:
        # 1 A (1 B (1 C D))  ->  1 A (1 (1 B C) D)
        eb = tree_end(neg, ea + 1)
        return neg[:ea] + "11" + neg[ea + 1:eb] + neg[eb + 1:]
    raise ValueError(f"unknown generator code {gen!r}")


def right_multiply(neg, pos, gen):
    """Reduced product of (neg, pos) with the generator diagram for ``gen``."""
    if condition_holds(neg, gen):
        return reduce_pair(rotate(neg, gen), pos)
    gn, gp = GENERATOR_DIAGRAMS[gen]
    return multiply(neg, pos, gn, gp)


def classify(s):
    """Caret type codes of ``s`` indexed by infix caret number.

    The left (right) side of the tree is the maximal path of left (right)
    edges from the root; the root always counts as a left caret.  Interior
    carets are I0/IR according to the absence/presence of a right child;
    right carets split into RI (next caret is interior), R0 (no interior
    caret follows) and RNI (the rest).
    """
    if s == "0":
        return ()
    n = s.count("1")
    is_left = [False] * n
    on_right = [False] * n
    has_right = [False] * n
    counter = [0]

    def rec(i, left_spine, right_spine):
        il = i + 1
        if s[il] == "1":
            el = rec(il, left_spine, False)
        else:
            el = il + 1
        my = counter[0]
        counter[0] += 1
        hr = s[el] == "1"
        er = rec(el, False, right_spine) if hr else el + 1
        is_left[my] = left_spine
        on_right[my] = right_spine
        has_right[my] = hr
        return er

    rec(0, True, True)

    is_interior = [not is_left[k] and not on_right[k] for k in range(n)]
    interior_follows = [False] * (n + 1)
    for k in range(n - 1, -1, -1):
        interior_follows[k] = interior_follows[k + 1] or is_interior[k]

    types = [0] * n
    for k in range(n):
        if is_left[k]:
            types[k] = L0 if k == 0 else LL
        elif is_interior[k]:
            types[k] = IR if has_right[k] else I0
        elif k + 1 < n and is_interior[k + 1]:
            types[k] = RI
        elif not interior_follows[k + 1]:
            types[k] = R0
        else:
            types[k] = RNI
    return tuple(types)


def fordham_length(neg, pos):
    """Word length over {x0, x1} of the reduced pair (neg, pos)."""
    tn = classify(neg)
    tp = classify(pos)
    table = WEIGHT_TABLE
    return sum(table[a][b] for a, b in zip(tn, tp))
