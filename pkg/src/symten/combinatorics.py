"""Permutations, partitions, tableaux and column systems on {1..n}.

Conventions fixed here, once:

- Permutations are tuples in one-line notation with 1-based entries:
  the entry at position i-1 is sigma(i).
- Composition is (sigma tau)(i) = sigma(tau(i)), so that the
  place-permutation action on tensors is a genuine right action.
- Tableaux are tuples of row tuples; entries are exactly {1..n}.
- A column system is the multiset of column sets of a tableau, stored
  canonically: each column sorted increasing, columns sorted by
  (size descending, content lexicographic).
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Perm = tuple[int, ...]
Part = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]
ColumnSystem = tuple[tuple[int, ...], ...]

#: Factorial enumerations refuse to run above this degree unless overridden.
DEFAULT_MAX_N = 8


class SizeLimitError(Exception):
    """Raised when a factorial-scale enumeration exceeds the size guard."""


def check_limit(n: int, max_n: int = DEFAULT_MAX_N) -> None:
    if n > max_n:
        raise SizeLimitError(f"degree {n} exceeds the size limit {max_n}")


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(1, len(images) + 1))


def compose(sigma: Perm, tau: Perm) -> Perm:
    """Return sigma tau, acting as (sigma tau)(i) = sigma(tau(i))."""
    if len(sigma) != len(tau):
        raise ValueError(f"degree mismatch: {len(sigma)} != {len(tau)}")
    return tuple(sigma[t - 1] for t in tau)


def inverse(sigma: Perm) -> Perm:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def cycles(sigma: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition including fixed points, each cycle led by its minimum."""
    seen = [False] * len(sigma)
    result = []
    for start in range(1, len(sigma) + 1):
        if seen[start - 1]:
            continue
        cycle = []
        i = start
        while not seen[i - 1]:
            seen[i - 1] = True
            cycle.append(i)
            i = sigma[i - 1]
        result.append(tuple(cycle))
    return result


def cycle_type(sigma: Perm) -> Part:
    return tuple(sorted((len(c) for c in cycles(sigma)), reverse=True))


def sign(sigma: Perm) -> int:
    return -1 if (len(sigma) - len(cycles(sigma))) % 2 else 1


def enumerate_permutations(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Perm]:
    """All of S_n in lexicographic one-line order."""
    check_limit(n, max_n)
    return iter(itertools.permutations(range(1, n + 1)))


# ---------------------------------------------------------------------------
# partitions

def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def enumerate_partitions(n: int) -> list[Part]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    result: list[Part] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for p in range(min(max_part, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return result


def conjugate(lam: Part) -> Part:
    """Column lengths of the Young diagram of lam."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


# ---------------------------------------------------------------------------
# tableaux

def tableau_shape(rows: Rows) -> Part:
    return tuple(len(r) for r in rows)


def is_filling(rows: Rows) -> bool:
    shape = tableau_shape(rows)
    entries = [x for r in rows for x in r]
    return is_partition(shape) and sorted(entries) == list(range(1, len(entries) + 1))


def _rows_from_flat(lam: Part, flat: Sequence[int]) -> Rows:
    rows = []
    pos = 0
    for part in lam:
        rows.append(tuple(flat[pos:pos + part]))
        pos += part
    return tuple(rows)


def enumerate_fillings(lam: Part, max_n: int = DEFAULT_MAX_N) -> Iterator[Rows]:
    """All n! fillings of lam, in lexicographic order of the row-major word."""
    n = sum(lam)
    check_limit(n, max_n)
    for flat in itertools.permutations(range(1, n + 1)):
        yield _rows_from_flat(lam, flat)


def enumerate_standard(lam: Part) -> list[Rows]:
    """All standard tableaux of shape lam (rows and columns increase)."""
    n = sum(lam)
    result: list[Rows] = []
    filled = [0] * len(lam)
    grid = [[0] * part for part in lam]

    def place(value: int) -> None:
        if value > n:
            result.append(tuple(tuple(row) for row in grid))
            return
        for i in range(len(lam)):
            if filled[i] < lam[i] and (i == 0 or filled[i - 1] > filled[i]):
                grid[i][filled[i]] = value
                filled[i] += 1
                place(value + 1)
                filled[i] -= 1

    place(1)
    return result


def column_superstandard(lam: Part) -> Rows:
    """The filling with 1..n placed down successive columns, left to right."""
    conj = conjugate(lam)
    grid = [[0] * part for part in lam]
    value = 1
    for j, height in enumerate(conj):
        for i in range(height):
            grid[i][j] = value
            value += 1
    return tuple(tuple(row) for row in grid)


def tableau_columns(rows: Rows) -> list[tuple[int, ...]]:
    """Column sets of a tableau, each sorted increasing, in column order."""
    shape = tableau_shape(rows)
    conj = conjugate(shape)
    return [
        tuple(sorted(rows[i][j] for i in range(conj[j])))
        for j in range(len(conj))
    ]


def canonical_system(columns: Sequence[Sequence[int]]) -> ColumnSystem:
    cols = [tuple(sorted(c)) for c in columns]
    return tuple(sorted(cols, key=lambda c: (-len(c), c)))


def column_system_of(rows: Rows) -> ColumnSystem:
    return canonical_system(tableau_columns(rows))


def enumerate_column_systems(lam: Part, max_n: int = DEFAULT_MAX_N) -> list[ColumnSystem]:
    """Every multiset of column sets arising from a filling of lam, once each.

    Columns of equal size are generated in increasing lexicographic order,
    which dedupes their permutations; output is already canonical.
    """
    n = sum(lam)
    check_limit(n, max_n)
    sizes = conjugate(lam)
    result: list[ColumnSystem] = []

    def rec(remaining: frozenset[int], j: int, acc: list[tuple[int, ...]]) -> None:
        if j == len(sizes):
            result.append(tuple(acc))
            return
        for comb in itertools.combinations(sorted(remaining), sizes[j]):
            if j > 0 and sizes[j - 1] == sizes[j] and comb <= acc[-1]:
                continue
            acc.append(comb)
            rec(remaining - set(comb), j + 1, acc)
            acc.pop()

    rec(frozenset(range(1, n + 1)), 0, [])
    return result


def _setwise_stabilizer(blocks: list[tuple[int, ...]], n: int) -> list[Perm]:
    perms = []
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = list(range(1, n + 1))
        for block, permuted in zip(blocks, parts):
            for src, dst in zip(block, permuted):
                images[src - 1] = dst
        perms.append(tuple(images))
    return perms


def row_group(rows: Rows, max_n: int = DEFAULT_MAX_N) -> list[Perm]:
    """All permutations stabilizing each row of the tableau setwise."""
    n = sum(tableau_shape(rows))
    check_limit(n, max_n)
    return _setwise_stabilizer([tuple(r) for r in rows], n)


def col_group(rows: Rows, max_n: int = DEFAULT_MAX_N) -> list[Perm]:
    """All permutations stabilizing each column of the tableau setwise."""
    n = sum(tableau_shape(rows))
    check_limit(n, max_n)
    return _setwise_stabilizer(tableau_columns(rows), n)
