# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels.

Function-for-function mirror of softtopo._kernels_py with identical
results and iteration orders; only the inner loops are C. Masks must fit
in 62 bits, which the package-wide lattice bit cap guarantees.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef inline int _popcount(u64 x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef u64* _as_array(list masks) except NULL:
    cdef Py_ssize_t k = len(masks)
    cdef u64* arr = <u64*> malloc((k if k else 1) * sizeof(u64))
    cdef Py_ssize_t i
    if arr == NULL:
        raise MemoryError()
    for i in range(k):
        arr[i] = <u64> masks[i]
    return arr


cdef inline u64 _interior(u64 g, u64* opens, Py_ssize_t k) noexcept nogil:
    cdef u64 acc = 0
    cdef Py_ssize_t i
    for i in range(k):
        if opens[i] & ~g == 0:
            acc |= opens[i]
    return acc


cdef inline u64 _closure(u64 g, u64* opens, Py_ssize_t k, u64 full) noexcept nogil:
    cdef u64 acc = full
    cdef u64 c
    cdef Py_ssize_t i
    for i in range(k):
        c = full ^ opens[i]
        if g & ~c == 0:
            acc &= c
    return acc


def submasks(full):
    """All submasks of `full` in ascending order (0 first, `full` last)."""
    cdef u64 f = <u64> full
    cdef u64 s = 0
    out = []
    while True:
        out.append(s)
        if s == f:
            return out
        s = (s - f) & f


def interior_mask(g, opens):
    """Union of the open masks contained in g."""
    cdef u64* arr = _as_array(opens)
    cdef u64 r = _interior(<u64> g, arr, len(opens))
    free(arr)
    return r


def closure_mask(g, opens, full):
    """Intersection of the closed masks (complements of opens) containing g."""
    cdef u64* arr = _as_array(opens)
    cdef u64 r = _closure(<u64> g, arr, len(opens), <u64> full)
    free(arr)
    return r


def is_semiopen_mask(g, opens, full):
    """Fast path: g is inside the closure of its interior."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 gg = <u64> g
    cdef u64 c = _closure(_interior(gg, arr, k), arr, k, <u64> full)
    free(arr)
    return gg & ~c == 0


def is_semiclosed_mask(g, opens, full):
    """Fast path: the interior of the closure of g is inside g."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 gg = <u64> g
    cdef u64 i = _interior(_closure(gg, arr, k, <u64> full), arr, k)
    free(arr)
    return i & ~gg == 0


def ssint_mask(g, opens, full):
    """Fast path for the semi-interior: g ∩ closure(interior(g))."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 gg = <u64> g
    cdef u64 r = gg & _closure(_interior(gg, arr, k), arr, k, <u64> full)
    free(arr)
    return r


def sscl_mask(g, opens, full):
    """Fast path for the semi-closure: g ∪ interior(closure(g))."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 gg = <u64> g
    cdef u64 r = gg | _interior(_closure(gg, arr, k, <u64> full), arr, k)
    free(arr)
    return r


def semiopen_masks(opens, full):
    """All semiopen masks of the lattice under `full`, ascending."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 f = <u64> full
    cdef u64 s = 0
    cdef u64 c
    out = []
    while True:
        c = _closure(_interior(s, arr, k), arr, k, f)
        if s & ~c == 0:
            out.append(s)
        if s == f:
            free(arr)
            return out
        s = (s - f) & f


def semiclosed_masks(opens, full):
    """All semiclosed masks of the lattice under `full`, ascending."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 f = <u64> full
    cdef u64 s = 0
    cdef u64 i
    out = []
    while True:
        i = _interior(_closure(s, arr, k, f), arr, k)
        if i & ~s == 0:
            out.append(s)
        if s == f:
            free(arr)
            return out
        s = (s - f) & f


def ssint_table(opens, full):
    """Semi-interior of every submask of `full`."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 f = <u64> full
    cdef u64 s = 0
    table = {}
    while True:
        table[s] = s & _closure(_interior(s, arr, k), arr, k, f)
        if s == f:
            free(arr)
            return table
        s = (s - f) & f


def sscl_table(opens, full):
    """Semi-closure of every submask of `full`."""
    cdef u64* arr = _as_array(opens)
    cdef Py_ssize_t k = len(opens)
    cdef u64 f = <u64> full
    cdef u64 s = 0
    table = {}
    while True:
        table[s] = s | _interior(_closure(s, arr, k, f), arr, k)
        if s == f:
            free(arr)
            return table
        s = (s - f) & f


def check_family(masks, full):
    """First axiom violation of a candidate open family, or None."""
    members = sorted(set(masks))
    cdef u64 f = <u64> full
    cdef u64* arr = _as_array(members)
    cdef Py_ssize_t k = len(members)
    cdef Py_ssize_t i, j
    cdef u64 a, b
    try:
        for i in range(k):
            if arr[i] & ~f:
                return ("carrier", members[i], -1)
        present = set(members)
        if 0 not in present:
            return ("missing-null", -1, -1)
        if full not in present:
            return ("missing-absolute", -1, -1)
        for i in range(k):
            a = arr[i]
            for j in range(i + 1, k):
                b = arr[j]
                if (a | b) not in present:
                    return ("union", members[i], members[j])
                if (a & b) not in present:
                    return ("intersection", members[i], members[j])
        return None
    finally:
        free(arr)


def enumerate_topology_families(bits):
    """Every valid open family on a lattice of `bits` bits, ascending."""
    if not 1 <= bits <= 4:
        raise ValueError("exhaustive enumeration needs 1 <= bits <= 4")
    cdef int lattice = 1 << bits
    cdef int full = lattice - 1
    cdef int middle = lattice - 2
    cdef unsigned int famask
    cdef int members[18]
    cdef bint present[16]
    cdef int count, v, i, j, a, b
    cdef bint ok
    out = []
    for famask in range(<unsigned int> (1 << middle)):
        count = 0
        members[count] = 0
        count += 1
        for v in range(1, full):
            if famask & (1 << (v - 1)):
                members[count] = v
                count += 1
        members[count] = full
        count += 1
        for v in range(lattice):
            present[v] = False
        for i in range(count):
            present[members[i]] = True
        ok = True
        for i in range(count):
            if not ok:
                break
            a = members[i]
            for j in range(i + 1, count):
                b = members[j]
                if not (present[a | b] and present[a & b]):
                    ok = False
                    break
        if ok:
            out.append(tuple([members[i] for i in range(count)]))
    return out


cdef void _branch(u64 uncov, list chosen, list best_box, u64* arr,
                  Py_ssize_t nm, Py_ssize_t* order, list masks):
    cdef u64 cell, probe, bbit
    cdef int maxg, g2, cnt, cell_count, need
    cdef Py_ssize_t ii, oj, idx
    if uncov == 0:
        if len(chosen) < <Py_ssize_t> best_box[1]:
            best_box[0] = sorted(chosen)
            best_box[1] = len(chosen)
        return
    if len(chosen) + 1 >= <Py_ssize_t> best_box[1]:
        return
    maxg = 0
    for ii in range(nm):
        oj = order[ii]
        g2 = _popcount(arr[oj] & uncov)
        if g2 > maxg:
            maxg = g2
    if maxg == 0:
        return
    need = -(-_popcount(uncov) // maxg)
    if len(chosen) + need >= <Py_ssize_t> best_box[1]:
        return
    cell = 0
    cell_count = <int> nm + 1
    probe = uncov
    while probe:
        bbit = probe & (~probe + 1)
        cnt = 0
        for ii in range(nm):
            if arr[ii] & bbit:
                cnt += 1
        if cnt < cell_count:
            cell_count = cnt
            cell = bbit
        probe ^= bbit
    cands = []
    for ii in range(nm):
        oj = order[ii]
        if arr[oj] & cell:
            cands.append((-_popcount(arr[oj] & uncov), masks[oj], oj))
    cands.sort()
    for item in cands:
        idx = <Py_ssize_t> item[2]
        chosen.append(idx)
        _branch(uncov & ~arr[idx], chosen, best_box, arr, nm, order, masks)
        chosen.pop()


def min_cover(universe, masks):
    """Exact minimum-cardinality subcover; mirrors the pure backend exactly."""
    cdef u64 uni = <u64> universe
    if uni == 0:
        return ()
    cdef Py_ssize_t nm = len(masks)
    cdef u64* arr = _as_array(masks)
    cdef u64 total = 0
    cdef Py_ssize_t i
    for i in range(nm):
        total |= arr[i]
    if uni & ~total:
        free(arr)
        return None

    order_py = sorted(range(nm), key=lambda idx: (masks[idx], idx))
    cdef Py_ssize_t* order = <Py_ssize_t*> malloc((nm if nm else 1) * sizeof(Py_ssize_t))
    if order == NULL:
        free(arr)
        raise MemoryError()
    for i in range(nm):
        order[i] = <Py_ssize_t> order_py[i]

    greedy = []
    cdef u64 uncovered = uni
    cdef int best_gain, gain
    cdef Py_ssize_t best_i, oi
    while uncovered:
        best_i = -1
        best_gain = 0
        for i in range(nm):
            oi = order[i]
            gain = _popcount(arr[oi] & uncovered)
            if gain > best_gain:
                best_gain = gain
                best_i = oi
        greedy.append(best_i)
        uncovered &= ~arr[best_i]

    best_box = [sorted(greedy), len(greedy)]
    _branch(uni, [], best_box, arr, nm, order, masks)
    free(arr)
    free(order)
    return tuple(best_box[0])
