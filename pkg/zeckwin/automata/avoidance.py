"""Aho-Corasick avoidance automaton for binary forbidden factors.

The automaton reads words over {0, 1, #}. A pattern occurrence may not span
``#``, so reading ``#`` sends every live state back to the start. Reaching a
state whose trie path ends with some pattern means the word contains a
forbidden factor; all such states collapse into one absorbing dead state.

Patterns are matched as written against the LSD-first stream.
"""
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from zeckwin.errors import DomainError, FormatError

ALPHABET = ("0", "1", "#")


@dataclass(frozen=True)
class ForbiddenFamily:
    patterns: Tuple[str, ...]

    def __post_init__(self):
        if not self.patterns:
            raise DomainError("forbidden family must contain at least one pattern")
        for p in self.patterns:
            if not p:
                raise DomainError("forbidden patterns must be non-empty")
            if set(p) - {"0", "1"}:
                raise FormatError(f"forbidden pattern must be binary: {p!r}")
        object.__setattr__(self, "patterns", tuple(sorted(set(self.patterns))))

    @property
    def max_len(self) -> int:
        return max(len(p) for p in self.patterns)

    def __str__(self) -> str:
        return ",".join(self.patterns)


def parse_family(text: str) -> ForbiddenFamily:
    """Parse ``"11,101"``."""
    return ForbiddenFamily(tuple(part.strip() for part in text.split(",")))


@dataclass(frozen=True)
class AvoidanceDFA:
    """Total DFA over {0,1,#}; states are 0..n-1, ``dead`` is absorbing."""

    family: ForbiddenFamily
    transitions: Tuple[Tuple[int, int, int], ...]
    labels: Tuple[str, ...]
    start: int = 0
    dead: int = -1
    _index: Dict[str, int] = field(default_factory=lambda: {s: i for i, s in enumerate(ALPHABET)}, repr=False, compare=False)

    @property
    def states(self) -> range:
        return range(len(self.transitions))

    def step(self, state: int, symbol: str) -> int:
        try:
            return self.transitions[state][self._index[symbol]]
        except KeyError:
            raise FormatError(f"symbol {symbol!r} is not in the alphabet {{0,1,#}}")

    def run(self, word: str) -> int:
        state = self.start
        for symbol in word:
            state = self.step(state, symbol)
            if state == self.dead:
                # still validate the rest of the word
                for rest in word:
                    if rest not in self._index:
                        raise FormatError(f"symbol {rest!r} is not in the alphabet {{0,1,#}}")
                return state
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) != self.dead


@lru_cache(maxsize=256)
def build_avoidance_dfa(family: ForbiddenFamily) -> AvoidanceDFA:
    # goto trie over {0,1}
    children: List[Dict[str, int]] = [{}]
    paths: List[str] = [""]
    terminal: List[bool] = [False]
    for pattern in family.patterns:
        node = 0
        for ch in pattern:
            nxt = children[node].get(ch)
            if nxt is None:
                nxt = len(children)
                children[node][ch] = nxt
                children.append({})
                paths.append(paths[node] + ch)
                terminal.append(False)
            node = nxt
        terminal[node] = True

    # failure links in BFS order; a node is terminal if its fail chain is
    fail = [0] * len(children)
    goto: List[Dict[str, int]] = [dict() for _ in children]
    order: List[int] = []
    queue = deque([0])
    while queue:
        node = queue.popleft()
        order.append(node)
        for ch in "01":
            child = children[node].get(ch)
            if child is not None:
                if node == 0:
                    fail[child] = 0
                else:
                    fail[child] = goto[fail[node]][ch]
                    terminal[child] = terminal[child] or terminal[fail[child]]
                goto[node][ch] = child
                queue.append(child)
            else:
                goto[node][ch] = goto[fail[node]][ch] if node != 0 else 0

    live = [n for n in order if not terminal[n]]
    number = {n: i for i, n in enumerate(live)}
    dead = len(live)

    transitions = []
    for n in live:
        row = []
        for ch in "01":
            target = goto[n][ch]
            row.append(dead if terminal[target] else number[target])
        row.append(number[0])
        transitions.append(tuple(row))
    transitions.append((dead, dead, dead))

    labels = tuple(paths[n] or "ε" for n in live) + ("dead",)
    return AvoidanceDFA(
        family=family,
        transitions=tuple(transitions),
        labels=labels,
        start=number[0],
        dead=dead,
    )


def avoids(word: str, family: ForbiddenFamily) -> bool:
    """True iff no pattern occurs inside a #-free segment of word."""
    return build_avoidance_dfa(family).accepts(word)


def naive_avoids(word: str, family: ForbiddenFamily) -> bool:
    """Reference check by plain substring search per #-free segment."""
    bad = set(word) - set(ALPHABET)
    if bad:
        raise FormatError(f"word {word!r} uses symbols outside {{0,1,#}}: {sorted(bad)}")
    segments = word.split("#")
    return not any(p in seg for seg in segments for p in family.patterns)

