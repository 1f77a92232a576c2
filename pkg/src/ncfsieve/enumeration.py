"""Exhaustive generation of non-crossing forests and their rotation-fixed
subsets.

The core is a backtracking walk over the chord list in lexicographic order:
a chord may join the current selection only if it crosses none of the chords
already chosen (precomputed crossing bitmasks) and does not close a cycle
(union-find with an undo stack). Branches that can no longer reach the
required edge count are cut. Forests stream out one at a time in
lexicographic order of the sorted edge list; nothing is materialized unless
the caller collects.

Rotation-fixed forests can additionally be generated directly by the same
backtracking over whole chord orbits of the rotation subgroup, which stays
cheap at sizes where filtering the full stream is hopeless. The test suite
pins the orbit route, the filter route, and the route through the structural
bijections to one another.
"""

from __future__ import annotations

from functools import lru_cache

from .forest import Chord, NonCrossingForest, chord, crosses, rotate_label


def _check_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k!r}, n={n}")


def _check_divisor(n: int, d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 1 or n % d:
        raise ValueError(f"d = {d!r} must be a positive divisor of n = {n}")


def divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def chord_table(n: int) -> tuple[Chord, ...]:
    """All chords of the n-circle in lexicographic order."""
    return tuple((u, v) for u in range(1, n) for v in range(u + 1, n + 1))


@lru_cache(maxsize=None)
def _chord_index(n: int) -> dict:
    return {c: i for i, c in enumerate(chord_table(n))}


@lru_cache(maxsize=None)
def _cross_masks(n: int) -> tuple[int, ...]:
    chords = chord_table(n)
    m = len(chords)
    masks = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if crosses(chords[i], chords[j], n):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


@lru_cache(maxsize=None)
def rotation_perm(n: int, s: int) -> tuple[int, ...]:
    """Permutation of chord indices induced by rotating s steps."""
    idx = _chord_index(n)
    return tuple(
        idx[chord(rotate_label(u, s, n), rotate_label(v, s, n))]
        for (u, v) in chord_table(n)
    )


def _iter_index_sets(n: int, k: int):
    """Yield the chord-index tuples of every forest in F(n, k), in strictly
    increasing lexicographic order. Iterative to keep the per-leaf cost flat."""
    need = n - k
    if need == 0:
        yield ()
        return
    chords = chord_table(n)
    cross = _cross_masks(n)
    m = len(chords)
    parent = list(range(n + 1))
    size = [1] * (n + 1)
    chosen: list[int] = []
    undo: list[tuple[int, int]] = []
    # frame: [next candidate index, banned mask, owns a union record]
    stack: list[list] = [[0, 0, False]]
    while stack:
        frame = stack[-1]
        i, banned = frame[0], frame[1]
        pushed = False
        while i < m and m - i >= need - len(chosen):
            if banned >> i & 1:
                i += 1
                continue
            u, v = chords[i]
            ru = u
            while parent[ru] != ru:
                ru = parent[ru]
            rv = v
            while parent[rv] != rv:
                rv = parent[rv]
            if ru == rv:
                i += 1
                continue
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(i)
            if len(chosen) == need:
                yield tuple(chosen)
                size[ru] -= size[rv]
                parent[rv] = rv
                chosen.pop()
                i += 1
                continue
            undo.append((rv, ru))
            frame[0] = i + 1
            stack.append([i + 1, banned | cross[i], True])
            pushed = True
            break
        if pushed:
            continue
        stack.pop()
        if frame[2]:
            rv, ru = undo.pop()
            size[ru] -= size[rv]
            parent[rv] = rv
            chosen.pop()


def enumerate_forests(n: int, k: int):
    """Stream every non-crossing forest on n vertices with k components.

    Deterministic: lexicographic in the canonical sorted edge list, no
    duplicates, nothing materialized.
    """
    _check_nk(n, k)
    chords = chord_table(n)
    for idxs in _iter_index_sets(n, k):
        yield NonCrossingForest._unchecked(n, tuple(chords[i] for i in idxs))


def count_forests(n: int, k: int) -> int:
    """len() of the stream above, skipping object construction."""
    _check_nk(n, k)
    return sum(1 for _ in _iter_index_sets(n, k))


def count_invariant(n: int, k: int, d: int) -> int:
    """Brute-force count of the forests in F(n, k) fixed by the rotation of
    order d: filter the full enumeration, checking each emitted forest under
    the induced chord-index permutation."""
    _check_nk(n, k)
    _check_divisor(n, d)
    if d == 1:
        return count_forests(n, k)
    perm = rotation_perm(n, n // d)
    total = 0
    for t in _iter_index_sets(n, k):
        ts = set(t)
        for i in t:
            if perm[i] not in ts:
                break
        else:
            total += 1
    return total


def invariant_counts(n: int, k: int) -> dict[int, int]:
    """Fixed-forest counts for every d | n in one enumeration pass.

    Same filter route as count_invariant, batched so a full sieving report
    costs a single walk of F(n, k).
    """
    _check_nk(n, k)
    perms = {d: rotation_perm(n, n // d) for d in divisors(n) if d >= 2}
    counts = dict.fromkeys(divisors(n), 0)
    for t in _iter_index_sets(n, k):
        counts[1] += 1
        if not perms:
            continue
        ts = set(t)
        for d, perm in perms.items():
            for i in t:
                if perm[i] not in ts:
                    break
            else:
                counts[d] += 1
    return counts


@lru_cache(maxsize=None)
def _orbit_table(n: int, d: int):
    """Chord orbits under rotation by n/d steps, dropping orbits whose own
    members cross each other (no invariant forest can use them). Each entry
    is (member indices, edge count, union of crossing masks, member mask),
    sorted by minimal member."""
    perm = rotation_perm(n, n // d)
    cross = _cross_masks(n)
    m = len(perm)
    seen = [False] * m
    orbits = []
    for i in range(m):
        if seen[i]:
            continue
        orb = [i]
        j = perm[i]
        while j != i:
            orb.append(j)
            j = perm[j]
        omask = 0
        cmask = 0
        for j in orb:
            seen[j] = True
            omask |= 1 << j
            cmask |= cross[j]
        if cmask & omask:
            continue
        orbits.append((tuple(sorted(orb)), len(orb), cmask, omask))
    orbits.sort()
    return tuple(orbits)


def _iter_invariant_index_sets(n: int, k: int, d: int):
    """Chord-index tuples of every d-invariant forest in F(n, k), generated
    orbit by orbit. Emission order is by orbit choice, not lexicographic."""
    need = n - k
    if need == 0:
        yield ()
        return
    orbits = _orbit_table(n, d)
    t = len(orbits)
    suffix = [0] * (t + 1)
    for j in range(t - 1, -1, -1):
        suffix[j] = suffix[j + 1] + orbits[j][1]
    chords = chord_table(n)
    parent = list(range(n + 1))
    size = [1] * (n + 1)
    taken: list[tuple[int, ...]] = []
    edges_in = 0
    undo: list[tuple[int, int]] = []
    # frame: [next orbit, banned mask, unions owned, edges owned]
    stack: list[list] = [[0, 0, 0, 0]]
    while stack:
        frame = stack[-1]
        j, banned = frame[0], frame[1]
        pushed = False
        while j < t and suffix[j] >= need - edges_in:
            members, sz, cmask, omask = orbits[j]
            if sz > need - edges_in or banned & omask:
                j += 1
                continue
            made = 0
            ok = True
            for idx in members:
                u, v = chords[idx]
                ru = u
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru == rv:
                    ok = False
                    break
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                undo.append((rv, ru))
                made += 1
            if not ok:
                for _ in range(made):
                    rv, ru = undo.pop()
                    size[ru] -= size[rv]
                    parent[rv] = rv
                j += 1
                continue
            taken.append(members)
            edges_in += sz
            if edges_in == need:
                out: list[int] = []
                for mem in taken:
                    out.extend(mem)
                yield tuple(sorted(out))
                for _ in range(made):
                    rv, ru = undo.pop()
                    size[ru] -= size[rv]
                    parent[rv] = rv
                taken.pop()
                edges_in -= sz
                j += 1
                continue
            frame[0] = j + 1
            stack.append([j + 1, banned | cmask, made, sz])
            pushed = True
            break
        if pushed:
            continue
        stack.pop()
        if frame[2]:
            for _ in range(frame[2]):
                rv, ru = undo.pop()
                size[ru] -= size[rv]
                parent[rv] = rv
            taken.pop()
            edges_in -= frame[3]


def enumerate_invariant(n: int, k: int, d: int, method: str = "orbit"):
    """Stream the d-invariant forests in F(n, k), sorted canonically.

    Three interchangeable routes, kept separate on purpose so they can be
    played against each other:

    * "orbit": direct generation over chord orbits (the default; fast).
    * "filter": filter the full enumerate_forests stream by is_d_invariant.
    * "bijection": build the set from the small side through the structural
      bijections, with duplicate detection.
    """
    _check_nk(n, k)
    _check_divisor(n, d)
    if method == "orbit":
        if d == 1:
            yield from enumerate_forests(n, k)
            return
        chords = chord_table(n)
        sets = sorted(
            tuple(chords[i] for i in t) for t in _iter_invariant_index_sets(n, k, d)
        )
        for es in sets:
            yield NonCrossingForest._unchecked(n, es)
    elif method == "filter":
        for f in enumerate_forests(n, k):
            if f.is_d_invariant(d):
                yield f
    elif method == "bijection":
        yield from _invariant_by_bijection(n, k, d)
    else:
        raise ValueError(f"unknown method {method!r}")


def _invariant_by_bijection(n: int, k: int, d: int):
    from . import bijections

    if d == 1:
        yield from enumerate_forests(n, k)
        return
    out = []
    if k % d == 0:
        small_n, small_k = n // d, k // d
        for phi in enumerate_forests(small_n, small_k):
            for v in sorted(bijections.classify_vertices(phi).good):
                out.append(bijections.construct_periodic(phi, v, d))
    elif d == 2 and k % 2 == 1:
        small_n, small_k = n // 2, (k + 1) // 2
        for phi in enumerate_forests(small_n, small_k):
            for mark in bijections.all_marks(phi):
                out.append(bijections.construct_diameter(phi, mark))
    out.sort(key=lambda f: f.edges)
    for a, b in zip(out, out[1:]):
        if a.edges == b.edges:
            raise bijections.BijectionError(
                f"bijection route hit a duplicate image at n={n}, k={k}, d={d}"
            )
    yield from out
