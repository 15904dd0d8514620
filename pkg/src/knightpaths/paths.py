"""Step alphabet and path words for chess-knight lattice paths.

A path word is a sequence of right-moves of a chess knight, starting at the
origin and never dipping below the x-axis.  The four moves and their text
encoding (one case-sensitive character per step) are:

    N -> (1, 2)     n -> (1, -2)     E -> (2, 1)     e -> (2, -1)

Every word with nonnegative prefix heights is a *partial* path: from any
reachable configuration a descent back to the axis exists, so completability
never needs checking (the test suite certifies this exhaustively rather than
assuming it).

Two measures index all counting downstream: SIZE, the abscissa of the final
point (sum of x-increments), and LENGTH, the number of steps.  The ZIGZAG
class additionally requires consecutive steps to alternate vertical
direction.  Enumeration order is everywhere lexicographic in the fixed step
order N < n < E < e; the order is arbitrary but pinned so listings are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class WordError(ValueError):
    """Base class for malformed or out-of-class path words."""


class UnknownSymbol(WordError):
    def __init__(self, position, char):
        super().__init__(f"unknown step symbol {char!r} at position {position}")
        self.position = position
        self.char = char


class NegativePrefix(WordError):
    def __init__(self, position):
        super().__init__(f"prefix of length {position} dips below the x-axis")
        self.position = position


class NotZigzag(WordError):
    def __init__(self, position):
        super().__init__(
            f"steps {position} and {position + 1} move in the same vertical direction"
        )
        self.position = position


class NotOnAxis(WordError):
    def __init__(self, height):
        super().__init__(f"word ends at height {height}, not on the x-axis")
        self.height = height


class PathClass(Enum):
    KNIGHT = "knight"
    ZIGZAG = "zigzag"


class Measure(Enum):
    SIZE = "size"
    LENGTH = "length"


@dataclass(frozen=True)
class Step:
    tag: str
    dx: int
    dy: int

    @property
    def up(self):
        return self.dy > 0

    def __repr__(self):
        return self.tag


N = Step("N", 1, 2)
NBAR = Step("NBAR", 1, -2)
E = Step("E", 2, 1)
EBAR = Step("EBAR", 2, -1)

#: Canonical enumeration order; listings are lexicographic in this order.
STEPS = (N, NBAR, E, EBAR)

CHAR_TO_STEP = {"N": N, "n": NBAR, "E": E, "e": EBAR}
STEP_TO_CHAR = {N: "N", NBAR: "n", E: "E", EBAR: "e"}


@dataclass(frozen=True)
class PathWord:
    """An immutable step sequence with nonnegative prefix heights."""

    steps: tuple

    def __post_init__(self):
        height = 0
        for i, step in enumerate(self.steps):
            height += step.dy
            if height < 0:
                raise NegativePrefix(i + 1)

    @property
    def size(self):
        return sum(step.dx for step in self.steps)

    @property
    def length(self):
        return len(self.steps)

    @property
    def final_height(self):
        return sum(step.dy for step in self.steps)

    def heights(self):
        """Prefix heights, including the starting 0 (length + 1 values)."""
        out = [0]
        for step in self.steps:
            out.append(out[-1] + step.dy)
        return out

    def __str__(self):
        return render_word(self)

    def __add__(self, other):
        return PathWord(self.steps + other.steps)


EMPTY_WORD = PathWord(())


def parse_word(text):
    """Parse a text word over {N, n, E, e} into a PathWord.

    Raises UnknownSymbol for a character outside the alphabet and
    NegativePrefix when a prefix dips below the x-axis; positions in both
    errors are 1-based.
    """
    steps = []
    height = 0
    for i, char in enumerate(text):
        step = CHAR_TO_STEP.get(char)
        if step is None:
            raise UnknownSymbol(i + 1, char)
        height += step.dy
        if height < 0:
            raise NegativePrefix(i + 1)
        steps.append(step)
    return PathWord(tuple(steps))


def render_word(word):
    """Inverse of parse_word."""
    return "".join(STEP_TO_CHAR[step] for step in word.steps)


def is_member(word, path_class):
    """Class membership: every word is a KNIGHT partial path; ZIGZAG also
    requires consecutive steps to alternate vertical direction."""
    if path_class is PathClass.ZIGZAG:
        for a, b in zip(word.steps, word.steps[1:]):
            if a.up == b.up:
                return False
    return True


def _measure_weight(step, measure):
    return step.dx if measure is Measure.SIZE else 1


def enumerate_partial(path_class, measure, value, height):
    """All partial paths of the class with the given measure value and final
    height, in lexicographic step order.

    Returns an empty list when no such path exists.  A step may raise or
    lower the height by at most 2 per unit of either measure, which gives
    the pruning bound below.
    """
    if value < 0 or height < 0:
        return []
    zigzag = path_class is PathClass.ZIGZAG
    words = []
    prefix = []

    def extend(measured, h, last_up):
        if measured == value:
            if h == height:
                words.append(PathWord(tuple(prefix)))
            return
        for step in STEPS:
            if zigzag and last_up is not None and step.up == last_up:
                continue
            weight = _measure_weight(step, measure)
            if measured + weight > value:
                continue
            h2 = h + step.dy
            if h2 < 0:
                continue
            if abs(height - h2) > 2 * (value - measured - weight):
                continue
            prefix.append(step)
            extend(measured + weight, h2, step.up)
            prefix.pop()

    extend(0, 0, None)
    return words


def exhaustive_counts(path_class, measure, max_value):
    """Count every valid prefix with measure value <= max_value, keyed by
    (value, final height), via a direct walk of the prefix tree.

    This is the brute-force oracle: it shares nothing with the counting
    tables beyond the step alphabet, so agreement between the two is a real
    cross-check.  Missing keys mean zero.
    """
    zigzag = path_class is PathClass.ZIGZAG
    size = measure is Measure.SIZE
    counts = {}
    # Plain int triples (weight, dy, up) keep the hot loop allocation-free.
    moves = tuple(
        (step.dx if size else 1, step.dy, step.up) for step in STEPS
    )

    def walk(n, k, last_up):
        key = (n, k)
        counts[key] = counts.get(key, 0) + 1
        for weight, dy, up in moves:
            if zigzag and up == last_up:
                continue
            n2 = n + weight
            if n2 > max_value:
                continue
            k2 = k + dy
            if k2 < 0:
                continue
            walk(n2, k2, up)

    walk(0, 0, None)
    return counts


class DecompForm(Enum):
    EMPTY = "empty"
    NN = "nn"  # N n . beta
    EE = "ee"  # E e . beta
    NE = "ne"  # N e . beta . E n . gamma


@dataclass(frozen=True)
class Decomposition:
    """Unique grammar decomposition of a zigzag word ending on the axis.

    Reassembling (``reassemble``) reproduces the input exactly; beta and
    gamma are themselves zigzag words ending on their own baseline.
    """

    form: DecompForm
    beta: PathWord = None
    gamma: PathWord = None

    def reassemble(self):
        if self.form is DecompForm.EMPTY:
            return EMPTY_WORD
        if self.form is DecompForm.NN:
            return PathWord((N, NBAR) + self.beta.steps)
        if self.form is DecompForm.EE:
            return PathWord((E, EBAR) + self.beta.steps)
        return PathWord(
            (N, EBAR) + self.beta.steps + (E, NBAR) + self.gamma.steps
        )


def decompose_zigzag(word):
    """Split a zigzag word on the axis by its first two steps.

    The NE form is located by the first return to height 0: the body between
    the opening (N, e) and closing (E, n) frame stays at height >= 1, so the
    two steps immediately before the first return close the frame.
    """
    if not is_member(word, PathClass.ZIGZAG):
        for i, (a, b) in enumerate(zip(word.steps, word.steps[1:])):
            if a.up == b.up:
                raise NotZigzag(i + 1)
    if word.final_height != 0:
        raise NotOnAxis(word.final_height)
    if not word.steps:
        return Decomposition(DecompForm.EMPTY)

    first, second = word.steps[0], word.steps[1]
    rest = word.steps[2:]
    if first is N and second is NBAR:
        return Decomposition(DecompForm.NN, beta=PathWord(rest))
    if first is E and second is EBAR:
        return Decomposition(DecompForm.EE, beta=PathWord(rest))

    # The only remaining nonnegative opening is (N, e); find the first
    # return to height 0 and check the closing frame.
    height = 0
    split = None
    for i, step in enumerate(word.steps):
        height += step.dy
        if height == 0:
            split = i + 1
            break
    if (
        first is not N
        or second is not EBAR
        or split < 4
        or word.steps[split - 2] is not E
        or word.steps[split - 1] is not NBAR
    ):
        raise WordError(f"word {render_word(word)!r} has no grammar decomposition")
    beta = PathWord(word.steps[2 : split - 2])
    gamma = PathWord(word.steps[split:])
    return Decomposition(DecompForm.NE, beta=beta, gamma=gamma)
