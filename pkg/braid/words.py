"""
Braid words: signed generator sequences representing elements of B_∞.

Letter +k stands for b_k and −k for b_k⁻¹.
"""

from dataclasses import dataclass
from typing import Tuple, Iterable

import numpy as np


class BraidWordError(ValueError):
    """Raised for malformed braid words."""


class StrandCountError(ValueError):
    """Raised when a word is evaluated on too few strands."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators b_1, b_2, …"""
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(l) for l in self.letters)
        if any(l == 0 for l in letters):
            raise BraidWordError("braid words may not contain the letter 0")
        object.__setattr__(self, "letters", letters)

    @property
    def strands(self) -> int:
        """Smallest n with the word in B_n."""
        if not self.letters:
            return 1
        return max(abs(l) for l in self.letters) + 1

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __str__(self):
        return " ".join(str(l) for l in self.letters)


def word(*letters: int) -> BraidWord:
    return BraidWord(tuple(letters))


def parse_word(text: str) -> BraidWord:
    """
    Parse whitespace-separated signed integers, e.g. "1 2 -1".

    Raises:
        BraidWordError: on non-integer tokens or a zero letter
    """
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError as e:
        raise BraidWordError(f"cannot parse braid word {text!r}: {e}") from e
    return BraidWord(letters)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs (±k, ∓k) until none remain."""
    stack = []
    for letter in w.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(tuple(stack))


def shift_word(w: BraidWord, n: int) -> BraidWord:
    """s^n(w): every generator index raised by n, signs kept."""
    if n < 0:
        raise BraidWordError(f"shift must be non-negative, got {n}")
    return BraidWord(tuple(l + n if l > 0 else l - n for l in w.letters))


def inverse_word(w: BraidWord) -> BraidWord:
    """w*, the reversed word with every letter inverted."""
    return BraidWord(tuple(-l for l in reversed(w.letters)))


def generator_letters(strands: int) -> Tuple[int, ...]:
    """Letters of B_strands in the order 1, −1, 2, −2, …"""
    letters = []
    for k in range(1, strands):
        letters.extend((k, -k))
    return tuple(letters)


def random_word(rng: np.random.Generator, strands: int, max_length: int = 8) -> BraidWord:
    """Uniform length in 0..max_length, uniform letters in {±1, …, ±(strands−1)}."""
    if strands < 2:
        return BraidWord()
    letters = generator_letters(strands)
    length = int(rng.integers(0, max_length + 1))
    picks = rng.integers(0, len(letters), size=length)
    return BraidWord(tuple(letters[i] for i in picks))


def random_words(rng: np.random.Generator, count: int, strands: int, max_length: int = 8) -> Iterable[BraidWord]:
    return [random_word(rng, strands, max_length) for _ in range(count)]
