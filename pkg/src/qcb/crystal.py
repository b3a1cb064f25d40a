"""Kashiwara crystal operators for types B and D.

The vector-representation crystal is a labeled chain for B (with the double
edge n -> 0 -> n-bar both labeled n) and a chain with a four-vertex diamond
at the middle for D.  Words are tensor products read left to right; an
optional spin column acts as a single leading tensor factor.  epsilon/phi of
a word are computed by folding the two-factor rules

    eps(u (x) v) = eps(u) + max(0, eps(v) - phi(u))
    phi(u (x) v) = phi(v) + max(0, phi(u) - eps(v))

and the operators act at the position the same recursion selects (the
signature rule).
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import AlgebraKind, Letter, check_letter, letter_key, letter_weight2, weight2_add, weight2_zero


def _f_edges(kind: AlgebraKind, i: int) -> tuple[tuple[Letter, Letter], ...]:
    """The f_i-labeled edges of the vector-representation crystal."""
    n = kind.rank
    if kind.family == "B":
        if i < n:
            return ((i, i + 1), (-(i + 1), -i))
        return ((n, 0), (0, -n))
    if i < n - 1:
        return ((i, i + 1), (-(i + 1), -i))
    if i == n - 1:
        return ((n - 1, n), (-n, -(n - 1)))
    return ((n - 1, -n), (n, -(n - 1)))


def vec_edge(x: Letter, i: int, direction: str, kind: AlgebraKind) -> Letter | None:
    """Follow the i-labeled crystal edge from x (direction 'f' or 'e')."""
    edges = _f_edges(kind, i)
    if direction == "f":
        for a, b in edges:
            if a == x:
                return b
    elif direction == "e":
        for a, b in edges:
            if b == x:
                return a
    else:
        raise ValueError("direction must be 'f' or 'e'")
    return None


def letter_eps_phi(x: Letter, i: int, kind: AlgebraKind) -> tuple[int, int]:
    eps = 0
    y = x
    while True:
        y = vec_edge(y, i, "e", kind)
        if y is None:
            break
        eps += 1
    phi = 0
    y = x
    while True:
        y = vec_edge(y, i, "f", kind)
        if y is None:
            break
        phi += 1
    return eps, phi


@dataclass(frozen=True)
class SpinColumn:
    """A height-n spin column: one letter from each pair {k, -k}.

    ``barred`` is the set of indices chosen barred.  For type D the parity
    of |barred| fixes the class: even = plus, odd = minus.
    """

    kind: AlgebraKind
    barred: frozenset[int]

    def __post_init__(self):
        if not all(1 <= k <= self.kind.rank for k in self.barred):
            raise ValueError("barred indices out of range")

    @staticmethod
    def highest(kind: AlgebraKind) -> "SpinColumn":
        return SpinColumn(kind, frozenset())

    @staticmethod
    def highest_minus(kind: AlgebraKind) -> "SpinColumn":
        """The D spin column with only n barred (highest in the minus class)."""
        return SpinColumn(kind, frozenset({kind.rank}))

    def letters(self) -> tuple[Letter, ...]:
        n = self.kind.rank
        sel = [(-k if k in self.barred else k) for k in range(1, n + 1)]
        return tuple(sorted(sel, key=lambda x: letter_key(x, n)))

    def sign_class(self) -> str:
        """'+' or '-' for type D (parity of barred letters); 'B' for type B."""
        if self.kind.family == "B":
            return "B"
        return "+" if len(self.barred) % 2 == 0 else "-"

    def weight2(self) -> tuple[int, ...]:
        return tuple(-1 if k in self.barred else 1 for k in range(1, self.kind.rank + 1))

    def __str__(self) -> str:
        # one letter per pair, in index order
        sel = ((-k if k in self.barred else k) for k in range(1, self.kind.rank + 1))
        return "s:" + ",".join(str(x) for x in sel)


def spin_apply(s: SpinColumn, i: int, direction: str) -> SpinColumn | None:
    """Kashiwara operator on a spin column, or None when it vanishes."""
    n = s.kind.rank
    barred = s.barred
    if direction == "f":
        if i < n:
            if i not in barred and (i + 1) in barred:
                return SpinColumn(s.kind, barred - {i + 1} | {i})
            return None
        if s.kind.family == "B":
            if n not in barred:
                return SpinColumn(s.kind, barred | {n})
            return None
        if n not in barred and (n - 1) not in barred:
            return SpinColumn(s.kind, barred | {n - 1, n})
        return None
    if direction == "e":
        if i < n:
            if (i + 1) not in barred and i in barred:
                return SpinColumn(s.kind, barred - {i} | {i + 1})
            return None
        if s.kind.family == "B":
            if n in barred:
                return SpinColumn(s.kind, barred - {n})
            return None
        if n in barred and (n - 1) in barred:
            return SpinColumn(s.kind, barred - {n - 1, n})
        return None
    raise ValueError("direction must be 'f' or 'e'")


def spin_eps_phi(s: SpinColumn, i: int) -> tuple[int, int]:
    return (
        1 if spin_apply(s, i, "e") is not None else 0,
        1 if spin_apply(s, i, "f") is not None else 0,
    )


@dataclass(frozen=True)
class Word:
    """A vertex of the tensor crystal: letters, optionally led by a spin column."""

    kind: AlgebraKind
    letters: tuple[Letter, ...]
    spin: SpinColumn | None = None

    def __post_init__(self):
        for x in self.letters:
            check_letter(self.kind, x)
        if self.spin is not None and self.spin.kind != self.kind:
            raise ValueError("spin column kind mismatch")

    def factors(self) -> tuple:
        if self.spin is None:
            return self.letters
        return (self.spin,) + self.letters

    def weight2(self) -> tuple[int, ...]:
        n = self.kind.rank
        w = weight2_zero(n) if self.spin is None else self.spin.weight2()
        for x in self.letters:
            w = weight2_add(w, letter_weight2(x, n))
        return w

    def __str__(self) -> str:
        body = ",".join(str(x) for x in self.letters)
        if self.spin is None:
            return body
        return f"{self.spin}/{body}" if body else str(self.spin)


def _factor_eps_phi(f, i: int, kind: AlgebraKind) -> tuple[int, int]:
    if isinstance(f, SpinColumn):
        return spin_eps_phi(f, i)
    return letter_eps_phi(f, i, kind)


def word_eps_phi(w: Word, i: int) -> tuple[int, int]:
    """(eps_i, phi_i) of a word via the two-factor fold."""
    eps, phi = 0, 0
    for f in w.factors():
        fe, fp = _factor_eps_phi(f, i, w.kind)
        eps = eps + max(0, fe - phi)
        phi = fp + max(0, phi - fe)
    return eps, phi


def _apply_factor(f, i: int, direction: str, kind: AlgebraKind):
    if isinstance(f, SpinColumn):
        return spin_apply(f, i, direction)
    return vec_edge(f, i, direction, kind)


def word_apply(w: Word, i: int, direction: str) -> Word | None:
    """Apply the Kashiwara operator to the factor the signature rule selects."""
    factors = w.factors()
    if not factors:
        return None
    # prefix folds of (eps, phi) over factors[:j]
    prefix = [(0, 0)]
    for f in factors:
        fe, fp = _factor_eps_phi(f, i, w.kind)
        eps, phi = prefix[-1]
        prefix.append((eps + max(0, fe - phi), fp + max(0, phi - fe)))
    total_eps, total_phi = prefix[-1]
    if direction == "f" and total_phi == 0:
        return None
    if direction == "e" and total_eps == 0:
        return None
    pos = 0
    for j in range(len(factors) - 1, 0, -1):
        fe, _fp = _factor_eps_phi(factors[j], i, w.kind)
        phi_left = prefix[j][1]
        if direction == "f":
            if phi_left <= fe:
                pos = j
                break
        else:
            if phi_left < fe:
                pos = j
                break
    new = _apply_factor(factors[pos], i, direction, w.kind)
    assert new is not None, "signature rule selected a dead factor"
    if w.spin is None:
        letters = list(w.letters)
        letters[pos] = new
        return Word(w.kind, tuple(letters), None)
    if pos == 0:
        return Word(w.kind, w.letters, new)
    letters = list(w.letters)
    letters[pos - 1] = new
    return Word(w.kind, tuple(letters), w.spin)


def raise_to_highest(w: Word) -> tuple[Word, list[tuple[int, int]]]:
    """Apply raising operators (smallest index first) until none applies.

    Returns the highest-weight word and the applied path as (i, count) runs.
    The result does not depend on the schedule; smallest-first makes it
    deterministic.
    """
    n = w.kind.rank
    path: list[tuple[int, int]] = []
    while True:
        for i in range(1, n + 1):
            nxt = word_apply(w, i, "e")
            if nxt is not None:
                w = nxt
                if path and path[-1][0] == i:
                    path[-1] = (i, path[-1][1] + 1)
                else:
                    path.append((i, 1))
                break
        else:
            return w, path


def component_bfs(w0: Word) -> set[Word]:
    """All words reachable from w0 by lowering operators (w0 included)."""
    n = w0.kind.rank
    seen = {w0}
    frontier = [w0]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, n + 1):
                v = word_apply(w, i, "f")
                if v is not None and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def word_sort_key(w: Word) -> tuple:
    """Lexicographic key on the reading: the spin block (compared through its
    height-n column) first, then the letters, mirroring the reading order."""
    n = w.kind.rank
    head = () if w.spin is None else tuple(letter_key(x, n) for x in w.spin.letters())
    return head + tuple(letter_key(x, n) for x in w.letters)


def enumerate_spin_columns(kind: AlgebraKind, sign: str | None = None) -> list[SpinColumn]:
    """All spin columns, optionally restricted to a D class ('+' or '-')."""
    n = kind.rank
    out = []
    for mask in range(1 << n):
        barred = frozenset(k for k in range(1, n + 1) if mask & (1 << (k - 1)))
        s = SpinColumn(kind, barred)
        if sign is not None and kind.family == "D" and s.sign_class() != sign:
            continue
        out.append(s)
    out.sort(key=lambda s: tuple(letter_key(x, n) for x in s.letters()))
    return out
