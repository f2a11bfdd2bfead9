"""Boundary-word abaci, n-runners, n-cores and n-quotients.

An abacus is a function ``h : Z -> {0, 1}`` that is 1 far to the left
and 0 far to the right.  A partition corresponds to the abacus with
beads (1s) at the positions ``lam_t - t`` for ``t = 1, 2, ...``; reading
the window from the first 0 to the last 1 gives the boundary word of
the diagram (0 per horizontal edge step, 1 per vertical edge step).
Partitions correspond to abaci up to translation; the charge (beads at
nonnegative positions minus gaps at negative positions) is 0 exactly
for the alignment above, and is tracked so that translates remain
distinguishable.

Splitting the window into ``n`` interleaved subsequences ("runners",
runner ``i`` holding the window positions congruent to ``i`` mod ``n``)
reads off the n-quotient; pushing every bead of each runner as far left
as it goes and reading the array back gives the n-core.  Together these
satisfy ``|lam| = |core| + n * sum(|quotient parts|)``.

Because the window starts at the first 0, which sits at position
``-(number of parts)``, the runner labels depend on the number of parts
mod ``n``.  The quotient therefore records this alignment; without it a
core/quotient pair can have several preimages (for n = 3, the pair
(empty core, ((1), {}, {})) is produced by (3), (2,1) and (1,1,1)
alike) and reconstruction refuses to guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousQuotientError, InvariantViolationError, NotNCoreError, PreconditionError
from .partitions import Partition


@dataclass(frozen=True)
class Abacus:
    """A 0/1 word placed on Z: position ``offset + p`` holds ``word[p]``.

    Positions left of the word are 1, positions right of it are 0.  The
    canonical form starts at the first 0 and ends at the last 1.
    """

    word: tuple[int, ...] = ()
    offset: int = 0

    def __post_init__(self):
        if any(x not in (0, 1) for x in self.word):
            raise PreconditionError("abacus words contain only 0s and 1s")

    def beads(self) -> frozenset[int]:
        """Bead positions inside the window (everything below the window is a bead)."""
        return frozenset(self.offset + p for p, x in enumerate(self.word) if x)

    def charge(self) -> int:
        """Beads at nonnegative positions minus gaps at negative positions."""
        # with all of (-inf, offset) beaded this telescopes to a closed form
        return self.offset + sum(self.word)

    def canonical(self) -> "Abacus":
        """Trim to the window from the first 0 to the last 1."""
        word = list(self.word)
        offset = self.offset
        while word and word[0] == 1:
            word.pop(0)
            offset += 1
        while word and word[-1] == 0:
            word.pop()
        if not word:
            return Abacus((), offset)
        return Abacus(tuple(word), offset)

    def __str__(self) -> str:
        return "...11|" + "".join(str(x) for x in self.word) + "|00..."


def _partition_from_beads(fin: frozenset[int], floor: int) -> Partition:
    """Partition of the abacus with finite beads ``fin`` above ``floor``.

    Every position below ``floor`` is a bead; at or above it, exactly the
    members of ``fin`` are.  The reading is translation-normalized (the
    charge ``len(fin) + floor`` is shifted away first).
    """
    c = len(fin) + floor
    rows = []
    for t, b in enumerate(sorted(fin, reverse=True), start=1):
        part = b - c + t
        if part <= 0:
            break
        rows.append(part)
    return Partition(rows)


def to_abacus(lam: Partition) -> Abacus:
    """Canonical (charge-0) abacus of a partition."""
    m = len(lam.rows)
    if m == 0:
        return Abacus((), 0)
    beads = {lam.rows[t] - (t + 1) for t in range(m)}
    floor = -m  # first gap: every position below -m is a bead, -m never is
    top = max(beads)
    word = tuple(1 if z in beads else 0 for z in range(floor, top + 1))
    return Abacus(word, floor)


def from_abacus(ab: Abacus) -> Partition:
    """Partition of an abacus; translates of the same word give the same one."""
    return _partition_from_beads(ab.beads(), ab.offset)


@dataclass(frozen=True)
class MultiPartition:
    """An n-tuple of partitions, as produced by runner decomposition.

    ``alignment`` is the residue mod ``n`` of the abacus window start of
    the decomposed partition (equivalently of minus its number of
    parts).  It records which absolute runner was read as runner 0 and
    is what makes the core/quotient correspondence invertible.
    """

    parts: tuple[Partition, ...]
    alignment: int | None = None

    def __post_init__(self):
        if len(self.parts) < 1:
            raise PreconditionError("a multipartition has at least one component")

    def total(self) -> int:
        return sum(p.size for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


def runners(lam: Partition, n: int) -> tuple[MultiPartition, Partition]:
    """Runner decomposition: the n-quotient and the n-core.

    Runner ``i`` collects the window positions congruent to ``i`` mod
    ``n``, counted from the window start (the first 0); each runner is
    an abacus in its own right and its partition is component ``i`` of
    the quotient.  Sorting every runner into ...111000... and reading
    the array back vertically yields the core.
    """
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    ab = to_abacus(lam)
    first0 = ab.offset
    beads = ab.beads()
    top = first0 + len(ab.word) - 1
    parts = []
    charges = []
    for i in range(n):
        span = (top - first0 - i) // n + 1
        rfin = frozenset(t for t in range(max(span, 0)) if (first0 + i + n * t) in beads)
        parts.append(_partition_from_beads(rfin, 0))
        charges.append(len(rfin))  # runner charge relative to the window start
    core_fin = frozenset(
        first0 + i + n * t for i in range(n) for t in range(charges[i])
    )
    core = _partition_from_beads(core_fin, first0)
    size_check = core.size + n * sum(p.size for p in parts)
    if size_check != lam.size:
        raise InvariantViolationError(
            f"size identity failed for {lam} at n={n}: {lam.size} != {size_check}"
        )
    return MultiPartition(tuple(parts), alignment=first0 % n), core


def _core_class_charges(core: Partition, n: int) -> list[int]:
    """Per-absolute-residue charges of a core's abacus; rejects non-cores."""
    ab = to_abacus(core)
    beads = ab.beads()
    floor = ab.offset
    top = floor + len(ab.word) - 1
    charges = []
    for s in range(n):
        t0 = -((s - floor) // n)  # smallest t with s + n*t >= floor
        hits = [t for t in range(t0, (top - s) // n + 1) if (s + n * t) in beads]
        if hits != list(range(t0, t0 + len(hits))):
            raise NotNCoreError(f"{core} is not an {n}-core")
        charges.append(t0 + len(hits))
    return charges


def _assemble(core_charges: list[int], abs_parts: list[Partition], n: int) -> Partition:
    """Partition whose absolute runner ``s`` carries ``abs_parts[s]`` at the given charge."""
    shift = max(1, max(len(p.rows) - c for p, c in zip(abs_parts, core_charges)) + 1)
    floor = (n - 1) - n * shift  # below this every position is a bead
    fin = set()
    for s in range(n):
        c = core_charges[s]
        part = abs_parts[s]
        m = len(part.rows)
        t0 = -((floor - s) // -n)  # ceil((floor - s) / n)
        for t in range(t0, c - m):
            fin.add(s + n * t)
        for t in range(m):
            fin.add(s + n * (part.rows[t] - (t + 1) + c))
    return _partition_from_beads(frozenset(fin), floor)


def from_core_quotient(core: Partition, quot: MultiPartition) -> Partition:
    """The partition with the given n-core and n-quotient.

    When ``quot`` carries its alignment (every value produced by
    :func:`runners` does), the preimage is unique and this inverts the
    decomposition.  A bare tuple without alignment is reconstructed only
    if exactly one alignment is consistent; otherwise the call raises
    ``AmbiguousQuotientError`` listing the candidates.
    """
    n = len(quot.parts)
    charges = _core_class_charges(core, n)
    rotations = range(n) if quot.alignment is None else (quot.alignment % n,)
    matches = []
    for rho in rotations:
        abs_parts = [Partition()] * n
        for i, p in enumerate(quot.parts):
            abs_parts[(rho + i) % n] = p
        candidate = _assemble(charges, abs_parts, n)
        got_quot, got_core = runners(candidate, n)
        if got_core == core and got_quot.parts == quot.parts:
            matches.append(candidate)
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise PreconditionError(
            f"no partition has core {core} and quotient {quot} with the given alignment"
        )
    raise AmbiguousQuotientError(
        f"quotient {quot} with core {core} has {len(matches)} preimages "
        f"({', '.join(str(m) for m in sorted(matches))}); pass the alignment "
        "recorded by runners() to pick one"
    )


def has_empty_core(lam: Partition, n: int) -> bool:
    """True when the n-core vanishes, i.e. the diagram is (1,-1;n)-balanced."""
    return runners(lam, n)[1].size == 0
