"""Orlik-Solomon algebra with its no-broken-circuit basis and Aomoto maps.

The algebra of an arrangement is the exterior algebra on one generator per
hyperplane modulo two families of relations: boundaries of circuits, and
(in the affine case) monomials indexed by sets with empty intersection.
Monomials over sets that are independent, central, and free of broken
circuits form the NBC basis; degree counts match the Whitney numbers of
the intersection lattice.

Hyperplane order for broken circuits is the input order.  For an affine
arrangement a set is excluded from the basis when removing nothing at all
already kills it: supersets of minimal non-central sets reduce to zero,
exactly like dependent sets.

Multiplication by the degree-one element with coefficient vector y gives
the Aomoto boundary maps; their entries are integer linear forms in
y_1..y_n and are assembled here once per degree, then evaluated at
rational or modular weight vectors by the cohomology layer.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

__all__ = ["circuits", "nbc_basis", "reduce_to_nbc", "aomoto_matrix", "AomotoMatrix"]


def circuits(arr) -> list[tuple]:
    """Circuits among the hyperplanes (minimal central dependent sets)."""
    return arr.central_circuits()


def _os_tables(arr):
    """Precompute mask tables driving NBC membership and rewriting."""
    if "os_tables" in arr._cache:
        return arr._cache["os_tables"]
    dep_masks = []
    rewrites = []  # (broken_mask, broken_tuple, circuit_tuple) sorted for determinism
    for c in arr.central_circuits():
        dep_masks.append(_mask(c))
        rewrites.append((_mask(c[1:]), c[1:], c))
    nc_masks = [_mask(c) for c in arr.minimal_noncentral()]
    rewrites.sort(key=lambda t: (t[1], t[2]))
    tables = (tuple(dep_masks), tuple(nc_masks), tuple(rewrites))
    arr._cache["os_tables"] = tables
    return tables


def _mask(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def nbc_basis(arr, q: int) -> list[tuple]:
    """NBC monomials of degree q, as sorted index tuples in input order."""
    if not 0 <= q <= arr.rank:
        raise ValueError(f"degree must be in 0..{arr.rank}")
    key = ("nbc", q)
    if key not in arr._cache:
        dep_masks, nc_masks, rewrites = _os_tables(arr)
        bad = list(dep_masks) + list(nc_masks) + [r[0] for r in rewrites]
        bad = [b for b in bad if b.bit_count() <= q]  # larger sets can't embed
        out = []
        for s in combinations(range(arr.n), q):
            sm = _mask(s)
            if not any(b & ~sm == 0 for b in bad):
                out.append(s)
        arr._cache[key] = out
    return list(arr._cache[key])


def _merge_sign(a: tuple, b: tuple):
    """Sign and result of e_a ^ e_b for disjoint sorted tuples."""
    inv = 0
    for x in a:
        for y in b:
            if y < x:
                inv += 1
    merged = tuple(sorted(a + b))
    return (-1 if inv & 1 else 1), merged


def reduce_to_nbc(arr, s) -> dict[tuple, int]:
    """Express the monomial e_s in the NBC basis.

    Returns a map from NBC tuples to integer coefficients; dependent or
    non-central index sets give {}.  The input may be any iterable of
    distinct indices in sorted order of the wedge.
    """
    s = tuple(sorted(s))
    if len(set(s)) != len(s):
        raise ValueError("repeated index in monomial")
    return dict(_reduce(arr, s))


def _reduce(arr, s: tuple):
    memo = arr._cache.setdefault("reduce_memo", {})
    hit = memo.get(s)
    if hit is not None:
        return hit
    dep_masks, nc_masks, rewrites = _os_tables(arr)
    sm = _mask(s)
    if any(b & ~sm == 0 for b in dep_masks) or any(b & ~sm == 0 for b in nc_masks):
        memo[s] = {}
        return {}
    # first broken circuit occurrence in lexicographic order, if any
    chosen = None
    for bmask, btup, ctup in rewrites:
        if bmask & ~sm == 0:
            chosen = (btup, ctup)
            break
    if chosen is None:
        memo[s] = {s: 1}
        return {s: 1}
    btup, ctup = chosen
    rest = tuple(x for x in s if x not in btup)
    eps, _ = _merge_sign(btup, rest)
    # boundary of the circuit: sum_i (-1)^i e_{C \ c_i} = 0, c_0 = min C
    out: dict[tuple, int] = {}
    for i in range(1, len(ctup)):
        coef = eps * (1 if (i + 1) & 1 == 0 else -1)  # (-1)^(i+1)
        term = tuple(x for k, x in enumerate(ctup) if k != i)
        sgn, merged = _merge_sign(term, rest)
        for mono, c in _reduce(arr, merged).items():
            out[mono] = out.get(mono, 0) + coef * sgn * c
    out = {m: c for m, c in out.items() if c}
    memo[s] = out
    return out


class AomotoMatrix:
    """Matrix of left multiplication a_y ^ - : A^q -> A^(q+1).

    Rows are indexed by the NBC basis in degree q, columns by degree q+1.
    Entries are integer linear forms in the weight variables, stored
    sparsely as {variable index: coefficient}.
    """

    def __init__(self, degree: int, row_monomials, col_monomials, entries):
        self.degree = degree
        self.row_monomials = row_monomials
        self.col_monomials = col_monomials
        self.entries = entries  # dict[(i, j)] -> dict[var] -> int

    @property
    def shape(self):
        return (len(self.row_monomials), len(self.col_monomials))

    def entry_vector(self, i: int, j: int, n: int) -> tuple:
        form = self.entries.get((i, j), {})
        return tuple(form.get(v, 0) for v in range(n))

    def evaluate(self, k: Sequence) -> list[list]:
        """Dense matrix of the form evaluated at the weight vector k."""
        nr, nc = self.shape
        zero = k[0] * 0 if len(k) else 0
        rows = [[zero] * nc for _ in range(nr)]
        for (i, j), form in self.entries.items():
            acc = zero
            for v, c in form.items():
                acc += c * k[v]
            rows[i][j] = acc
        return rows

    def compose_entries(self, other: "AomotoMatrix") -> dict:
        """Symbolic product entries as quadratic forms {(v1<=v2): coeff}."""
        if self.col_monomials != other.row_monomials:
            raise ValueError("degree mismatch in composition")
        by_row: dict[int, list] = {}
        for (t, j), form in other.entries.items():
            by_row.setdefault(t, []).append((j, form))
        prod: dict[tuple, dict] = {}
        for (i, t), f1 in self.entries.items():
            for j, f2 in by_row.get(t, []):
                acc = prod.setdefault((i, j), {})
                for v1, c1 in f1.items():
                    for v2, c2 in f2.items():
                        key = (v1, v2) if v1 <= v2 else (v2, v1)
                        acc[key] = acc.get(key, 0) + c1 * c2
        return {
            pos: {k: c for k, c in form.items() if c}
            for pos, form in prod.items()
        }

    def composes_to_zero(self, other: "AomotoMatrix") -> bool:
        return all(not form for form in self.compose_entries(other).values())

    def entry_str(self, i: int, j: int) -> str:
        """Entry as a sparse sum of c*y_j terms, variables 1-based."""
        form = self.entries.get((i, j))
        if not form:
            return "0"
        parts = []
        for v in sorted(form):
            c = form[v]
            var = f"y_{v + 1}"
            if c == 1:
                term = var
            elif c == -1:
                term = f"-{var}"
            else:
                term = f"{c}*{var}"
            if parts and not term.startswith("-"):
                parts.append(f"+ {term}")
            elif parts:
                parts.append(f"- {term[1:]}")
            else:
                parts.append(term)
        return " ".join(parts)

    def render_text(self) -> str:
        """One line per row: bracketed comma-separated sparse linear forms."""
        nr, nc = self.shape
        lines = []
        for i in range(nr):
            cells = ", ".join(self.entry_str(i, j) for j in range(nc))
            lines.append(f"[{cells}]")
        return "\n".join(lines)


def aomoto_matrix(arr, q: int) -> AomotoMatrix:
    """Boundary matrix in degree q with symbolic integer-linear entries."""
    key = ("aomoto", q)
    if key in arr._cache:
        return arr._cache[key]
    rows = nbc_basis(arr, q)
    cols = nbc_basis(arr, q + 1) if q < arr.rank else []
    if not cols:
        mat = AomotoMatrix(q, rows, [], {})
        arr._cache[key] = mat
        return mat
    col_index = {m: j for j, m in enumerate(cols)}
    entries: dict[tuple, dict] = {}
    for i, s in enumerate(rows):
        for v in range(arr.n):
            if v in s:
                continue
            smaller = sum(1 for x in s if x < v)
            sign = -1 if smaller & 1 else 1
            merged = tuple(sorted(s + (v,)))
            for mono, c in _reduce(arr, merged).items():
                j = col_index[mono]
                form = entries.setdefault((i, j), {})
                form[v] = form.get(v, 0) + sign * c
    entries = {
        pos: {v: c for v, c in form.items() if c}
        for pos, form in entries.items()
    }
    entries = {pos: form for pos, form in entries.items() if form}
    mat = AomotoMatrix(q, rows, cols, entries)
    arr._cache[key] = mat
    return mat
