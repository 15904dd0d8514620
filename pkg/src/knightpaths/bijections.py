"""Constructive bijections from zigzag words on the axis to lattice words.

Two maps, both driven by the unique grammar decomposition of a zigzag word
(see paths.decompose_zigzag), with the empty word as the base case:

  size map (image over U/D/F, no UD factor anywhere):
      empty -> F
      E e . beta          -> U <image of beta> D
      N n . beta          -> F <image of beta>
      N e . beta E n . gamma -> U <image of beta> D <image of gamma>

  length map (image over U/D):
      empty -> UD
      E e . beta          -> U <image of beta> D
      N n . beta          -> UD <image of beta>
      N e . beta E n . gamma -> U <image of beta> D <image of gamma>

A zigzag word of size 2n maps to a peakless Motzkin word of length n + 1; a
zigzag word of length 2n maps to a Dyck word of length 2(n + 1).  The
inverses are case analyses on the first letter, locating the matching D of
an initial U by first return to level 0.  Note the base case: the empty
word's image under the size map is F, not the empty Motzkin word, which is
exactly what keeps U<image>D frames peakless when beta is empty.

Both directions run on an explicit work stack rather than recursing, since
nesting depth grows with the word.
"""

from __future__ import annotations

from .paths import DecompForm, decompose_zigzag, parse_word


class LatticeWordError(ValueError):
    pass


class NotMotzkin(LatticeWordError):
    pass


class NotPeakless(LatticeWordError):
    pass


class NotDyck(LatticeWordError):
    pass


class EmptyInput(LatticeWordError):
    pass


class OddLength(LatticeWordError):
    pass


_MOTZKIN_DELTA = {"U": 1, "D": -1, "F": 0}
_DYCK_DELTA = {"U": 1, "D": -1}


def _is_lattice_word(word, delta):
    level = 0
    for char in word:
        step = delta.get(char)
        if step is None:
            return False
        level += step
        if level < 0:
            return False
    return level == 0


def is_peakless_motzkin(word):
    return _is_lattice_word(word, _MOTZKIN_DELTA) and "UD" not in word


def is_dyck(word):
    return _is_lattice_word(word, _DYCK_DELTA)


def _matching_d(word, start):
    """Index of the D closing the U at `start` (first return to its level)."""
    level = 0
    for i in range(start, len(word)):
        level += _MOTZKIN_DELTA[word[i]]
        if level == 0:
            return i
    raise LatticeWordError(f"unbalanced U at position {start} in {word!r}")


def psi(word):
    """Image of a zigzag word on the axis under the size map."""
    out = []
    stack = [word]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        dec = decompose_zigzag(item)
        if dec.form is DecompForm.EMPTY:
            out.append("F")
        elif dec.form is DecompForm.NN:
            out.append("F")
            stack.append(dec.beta)
        elif dec.form is DecompForm.EE:
            out.append("U")
            stack.append("D")
            stack.append(dec.beta)
        else:
            out.append("U")
            stack.append(dec.gamma)
            stack.append("D")
            stack.append(dec.beta)
    return "".join(out)


def psi_inv(motzkin):
    """Preimage of a nonempty peakless Motzkin word under the size map."""
    if motzkin == "":
        raise EmptyInput("the size map never produces the empty word")
    if not _is_lattice_word(motzkin, _MOTZKIN_DELTA):
        raise NotMotzkin(f"{motzkin!r} is not a Motzkin word")
    if "UD" in motzkin:
        raise NotPeakless(f"{motzkin!r} contains the factor UD")

    letters = []
    stack = [motzkin]
    while stack:
        item = stack.pop()
        if isinstance(item, tuple):
            letters.append(item[0])
            continue
        m = item
        if m == "F":
            continue  # maps back to the empty word
        if m[0] == "F":
            letters.append("Nn")
            stack.append(m[1:])
            continue
        j = _matching_d(m, 0)
        enclosed = m[1:j]
        suffix = m[j + 1 :]
        if not enclosed:
            raise NotPeakless(f"{m!r} starts with the peak UD")
        if suffix:
            letters.append("Ne")
            stack.append(suffix)
            stack.append(("En",))
            stack.append(enclosed)
        else:
            letters.append("Ee")
            stack.append(enclosed)
    return parse_word("".join(letters))


def phi(word):
    """Image of a zigzag word on the axis under the length map."""
    out = []
    stack = [word]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        dec = decompose_zigzag(item)
        if dec.form is DecompForm.EMPTY:
            out.append("UD")
        elif dec.form is DecompForm.NN:
            out.append("UD")
            stack.append(dec.beta)
        elif dec.form is DecompForm.EE:
            out.append("U")
            stack.append("D")
            stack.append(dec.beta)
        else:
            out.append("U")
            stack.append(dec.gamma)
            stack.append("D")
            stack.append(dec.beta)
    return "".join(out)


def phi_inv(dyck):
    """Preimage of a Dyck word of length >= 2 under the length map."""
    if len(dyck) % 2:
        raise OddLength(f"{dyck!r} has odd length")
    if not _is_lattice_word(dyck, _DYCK_DELTA):
        raise NotDyck(f"{dyck!r} is not a Dyck word")
    if not dyck:
        raise NotDyck("the length map never produces the empty word")

    letters = []
    stack = [dyck]
    while stack:
        item = stack.pop()
        if isinstance(item, tuple):
            letters.append(item[0])
            continue
        d = item
        if d == "UD":
            continue  # maps back to the empty word
        if d.startswith("UD"):
            letters.append("Nn")
            stack.append(d[2:])
            continue
        j = _matching_d(d, 0)
        enclosed = d[1:j]
        suffix = d[j + 1 :]
        if suffix:
            letters.append("Ne")
            stack.append(suffix)
            stack.append(("En",))
            stack.append(enclosed)
        else:
            letters.append("Ee")
            stack.append(enclosed)
    return parse_word("".join(letters))


def peakless_motzkin_words(length):
    """All peakless Motzkin words of the given length, by direct search."""
    words = []
    prefix = []

    def extend(level, remaining):
        if remaining == 0:
            if level == 0:
                words.append("".join(prefix))
            return
        if level > remaining:
            return
        prev = prefix[-1] if prefix else ""
        for char in "UDF":
            if char == "D" and (level == 0 or prev == "U"):
                continue
            prefix.append(char)
            extend(level + _MOTZKIN_DELTA[char], remaining - 1)
            prefix.pop()

    extend(0, length)
    return words


def dyck_words(length):
    """All Dyck words of the given (even) length, by direct search."""
    if length % 2:
        return []
    words = []
    prefix = []

    def extend(level, remaining):
        if remaining == 0:
            if level == 0:
                words.append("".join(prefix))
            return
        if level > remaining:
            return
        for char in "UD":
            if char == "D" and level == 0:
                continue
            prefix.append(char)
            extend(level + _DYCK_DELTA[char], remaining - 1)
            prefix.pop()

    extend(0, length)
    return words
