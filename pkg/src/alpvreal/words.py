"""Length-then-lexicographic enumeration of words over the alphabet {1..D}.

Words are plain tuples of integer symbols; the empty word is ``()``.  The
enumeration is 1-based: position 1 is the empty word, shorter words come
first, and words of equal length are ordered by the usual integer order on
the leftmost differing symbol.  For D = 2 the sequence starts

    eps, 1, 2, 11, 12, 21, 22, 111, ...

This is the ordering that indexes Hankel block rows and columns, and the
closed-form index below is what makes the shifted-column lookup in the
realization algorithm O(1).
"""

from __future__ import annotations

import itertools

from .errors import InvalidAlphabet, InvalidWord

Word = tuple
EPSILON: Word = ()


def check_alphabet(D: int) -> int:
    if int(D) != D or D < 1:
        raise InvalidAlphabet(f"alphabet size must be a positive integer, got {D}")
    return int(D)


def check_word(w, D: int) -> Word:
    """Validate symbols against 1..D and return the word as a tuple."""
    check_alphabet(D)
    out = []
    for q in w:
        qi = int(q)
        if qi != q or not 1 <= qi <= D:
            raise InvalidWord(f"symbol {q!r} outside alphabet 1..{D}")
        out.append(qi)
    return tuple(out)


def word_count(L: int, D: int) -> int:
    """N(L) = number of words of length at most L, i.e. sum_{j=0..L} D^j."""
    check_alphabet(D)
    if L < 0:
        return 0
    if D == 1:
        return L + 1
    return (D ** (L + 1) - 1) // (D - 1)


def index_to_word(i: int, D: int) -> Word:
    """The word at 1-based position ``i`` of the enumeration."""
    check_alphabet(D)
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    k = 0
    while word_count(k, D) < i:
        k += 1
    offset = i - word_count(k - 1, D) - 1
    digits = []
    for _ in range(k):
        digits.append(offset % D + 1)
        offset //= D
    return tuple(reversed(digits))


def word_to_index(w, D: int) -> int:
    """Inverse of index_to_word, via the closed form.

    For w = q_1 ... q_k the position is
    N(k-1) + sum_i (q_i - 1) * D^(k-i) + 1, and 1 for the empty word.
    """
    w = check_word(w, D)
    k = len(w)
    offset = 0
    for q in w:
        offset = offset * D + (q - 1)
    return word_count(k - 1, D) + offset + 1


def words_up_to(L: int, D: int) -> list:
    """All words of length <= L, in enumeration order."""
    check_alphabet(D)
    out = []
    for length in range(L + 1):
        out.extend(itertools.product(range(1, D + 1), repeat=length))
    return out


def word_to_str(w, D: int) -> str:
    """Text form: digit string for D <= 9, space-separated otherwise; eps for ()."""
    w = check_word(w, D)
    if not w:
        return "eps"
    if D <= 9:
        return "".join(str(q) for q in w)
    return " ".join(str(q) for q in w)


def word_from_str(s: str, D: int) -> Word:
    """Parse the textual form produced by word_to_str."""
    check_alphabet(D)
    s = s.strip()
    if s == "eps":
        return EPSILON
    if D <= 9:
        symbols = [int(ch) for ch in s]
    else:
        symbols = [int(part) for part in s.split()]
    return check_word(symbols, D)
