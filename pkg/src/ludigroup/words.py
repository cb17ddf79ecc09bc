"""Words over a generator alphabet.

A word stores its letters in application order: ``letters[0]`` acts first.
Read as a group product that is the reversed order (the product s_n···s_1
applied to a configuration acts with s_1 first); keeping application order in
the data structure avoids reversing at every call site.

A letter is a (label, exponent) pair with exponent +1 or -1; exponent -1
means the inverse of the named generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownLabelError

Letter = tuple[str, int]


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for label, exp in self.letters:
            if exp not in (1, -1):
                raise ValueError(f"letter exponent must be ±1, got {exp}")
            if not isinstance(label, str):
                raise ValueError("letter labels must be strings")

    @staticmethod
    def of(*labels: str) -> "Word":
        """Word of plain generators, given in application order.

        A trailing apostrophe marks an inverse letter: ``Word.of("a", "b'")``.
        """
        letters = []
        for lab in labels:
            if lab.endswith("'"):
                letters.append((lab[:-1], -1))
            else:
                letters.append((lab, 1))
        return Word(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        """Formal inverse: reversed letters with flipped exponents."""
        return Word(tuple((lab, -exp) for lab, exp in reversed(self.letters)))

    def free_reduce(self) -> "Word":
        """Delete adjacent s·s⁻¹ pairs until none remain."""
        out: list[Letter] = []
        for letter in self.letters:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return Word(tuple(out))

    def __str__(self) -> str:
        if not self.letters:
            return "ε"
        return " ".join(lab + ("'" if exp < 0 else "") for lab, exp in self.letters)


def parse_word(text: str) -> Word:
    """Parse the space-separated format produced by ``str(word)``."""
    text = text.strip()
    if not text or text == "ε":
        return Word()
    return Word.of(*text.split())


def evaluate_word(word: Word, table, inverses=None):
    """Evaluate a word in a multiplication table.

    ``table`` is a GroupTable (or anything with .product/.inverse/.identity).
    Returns the element label.  Empty word evaluates to the identity.
    """
    result = table.identity
    for label, exp in word.letters:
        if label not in table.labels:
            raise UnknownLabelError(label)
        el = label if exp == 1 else table.inverse_of(label)
        # applying `el` after what came before: el · result
        result = table.product_of(el, result)
    return result
