"""
Element input and output syntax.

Accepted element spellings (all normalized to the ShortLex element):
- "e" or "" for the identity
- whitespace- or comma-separated 1-based labels: "1 2 1", "1,2,1"
- run-together labels or s-prefixed labels: "121", "s1s2s1"
- the letters s, t, u for s1, s2, s3: "sts"
- in type A, one-line permutation notation: "3412"
"""

import re
from typing import List, Sequence

from src.coxeter.system import CoxeterError, CoxeterSystem, GroupElement

LETTER_LABELS = {"s": 1, "t": 2, "u": 3}


class WordParseError(CoxeterError):
    """Raised for element text that cannot be read as a word or permutation."""


def one_line(x: GroupElement) -> List[int]:
    """One-line notation w(1) ... w(n+1) of a type-A element."""
    if x.system.type_label != "A":
        raise CoxeterError("one-line notation is only defined in type A")
    perm = list(range(1, x.system.rank + 2))
    for i in x.word:
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def from_one_line(system: CoxeterSystem, perm: Sequence[int]) -> GroupElement:
    """
    Type-A element with the given one-line notation.

    Sorts the permutation by adjacent swaps at its leftmost descent; the swaps
    read backwards form a reduced word.
    """
    if system.type_label != "A":
        raise CoxeterError("one-line notation is only defined in type A")
    perm = list(perm)
    if sorted(perm) != list(range(1, system.rank + 2)):
        raise WordParseError(f"{perm} is not a permutation of 1..{system.rank + 1}")
    letters = []
    while True:
        descent = next((i for i in range(len(perm) - 1) if perm[i] > perm[i + 1]), None)
        if descent is None:
            break
        letters.append(descent)
        perm[descent], perm[descent + 1] = perm[descent + 1], perm[descent]
    return system.from_word(reversed(letters))


def parse_element(system: CoxeterSystem, text: str) -> GroupElement:
    """
    Parse element text in any accepted spelling.

    Raises:
        WordParseError: if the text is neither a word nor a permutation
    """
    cleaned = text.strip()
    if cleaned in ("", "e", "1_W", "id"):
        return system.identity

    if re.fullmatch(r"[stu]+", cleaned) and system.rank <= 3:
        labels = [LETTER_LABELS[c] for c in cleaned]
    elif re.fullmatch(r"(s\d+)+", cleaned):
        labels = [int(tok) for tok in re.findall(r"s(\d+)", cleaned)]
    elif re.fullmatch(r"\d+([\s,]+\d+)+", cleaned):
        labels = [int(tok) for tok in re.split(r"[\s,]+", cleaned)]
    elif re.fullmatch(r"\d+", cleaned):
        digits = [int(c) for c in cleaned]
        if system.type_label == "A" and sorted(digits) == list(range(1, system.rank + 2)):
            return from_one_line(system, digits)
        labels = digits
    else:
        raise WordParseError(f"cannot read {text!r} as a word or a one-line permutation")

    bad = [label for label in labels if not 1 <= label <= system.rank]
    if bad:
        raise WordParseError(f"labels {bad} out of range 1..{system.rank} in {text!r}")
    return system.from_labels(labels)


def format_element(x: GroupElement, style: str = "word") -> str:
    """Render an element as "s1s2", as labels "1 2", or (type A) in one-line notation."""
    if style == "oneline" and x.system.type_label == "A":
        return "".join(str(v) for v in one_line(x))
    if style == "labels":
        return " ".join(str(v) for v in x.labels()) or "e"
    return str(x)
