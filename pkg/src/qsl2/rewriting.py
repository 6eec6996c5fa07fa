"""Naive word rewriting for the two presentations.

This is deliberately independent of the closed-form monomial products in
``uqsl2``/``oqsl2``: it applies one defining relation at a time, at the
leftmost or rightmost redex, and is used to test confluence and to
cross-check the fast multiplication.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .linear import _accumulate
from .qscalar import ONE, Q, QScalar

Word = tuple[str, ...]
Rules = Mapping[tuple[str, str], Sequence[tuple[QScalar, Word]]]


class RewriteSystem:
    def __init__(self, rules: Rules):
        self.rules = dict(rules)

    def _redexes(self, w: Word) -> list[int]:
        return [i for i in range(len(w) - 1) if (w[i], w[i + 1]) in self.rules]

    def reduce(self, word: Word, strategy: str = "left", max_steps: int = 100000) -> dict[Word, QScalar]:
        if strategy not in ("left", "right"):
            raise ValueError("strategy must be 'left' or 'right'")
        pending: dict[Word, QScalar] = {tuple(word): ONE}
        done: dict[Word, QScalar] = {}
        steps = 0
        while pending:
            w, c = pending.popitem()
            red = self._redexes(w)
            if not red:
                _accumulate(done, w, c)
                continue
            i = red[0] if strategy == "left" else red[-1]
            for c2, rhs in self.rules[w[i], w[i + 1]]:
                _accumulate(pending, w[:i] + tuple(rhs) + w[i + 2:], c * c2)
            steps += 1
            if steps > max_steps:
                raise RuntimeError("rewriting did not terminate")
        return done


_QI = Q.inverse()
_INV_QQ = (Q - _QI).inverse()

# U_q(sl2): letters E, F, K, k (= K^-1)
U_RULES: Rules = {
    ("K", "k"): [(ONE, ())],
    ("k", "K"): [(ONE, ())],
    ("E", "K"): [(Q ** -2, ("K", "E"))],
    ("E", "k"): [(Q ** 2, ("k", "E"))],
    ("K", "F"): [(Q ** -2, ("F", "K"))],
    ("k", "F"): [(Q ** 2, ("F", "k"))],
    ("E", "F"): [(ONE, ("F", "E")), (_INV_QQ, ("K",)), (-_INV_QQ, ("k",))],
}

# O_q(SL2): letters X11, X12, X21, X22
O_RULES: Rules = {
    ("X11", "X12"): [(Q, ("X12", "X11"))],
    ("X11", "X21"): [(Q, ("X21", "X11"))],
    ("X22", "X12"): [(_QI, ("X12", "X22"))],
    ("X22", "X21"): [(_QI, ("X21", "X22"))],
    ("X21", "X12"): [(ONE, ("X12", "X21"))],
    ("X11", "X22"): [(ONE, ()), (Q, ("X12", "X21"))],
    ("X22", "X11"): [(ONE, ()), (_QI, ("X12", "X21"))],
}

U_SYSTEM = RewriteSystem(U_RULES)
O_SYSTEM = RewriteSystem(O_RULES)


def u_word_to_element(reduced: Mapping[Word, QScalar]):
    from .uqsl2 import PBW, UElement

    acc: dict = {}
    for w, c in reduced.items():
        a = w.count("F")
        c_ = w.count("E")
        b = w.count("K") - w.count("k")
        _accumulate(acc, PBW(a, b, c_), c)
    return UElement(acc)


def o_word_to_element(reduced: Mapping[Word, QScalar]):
    from .oqsl2 import OElement, OMono

    acc: dict = {}
    for w, c in reduced.items():
        _accumulate(acc, OMono(w.count("X11"), w.count("X12"), w.count("X21"), w.count("X22")), c)
    return OElement(acc)


def is_u_normal_word(w: Word) -> bool:
    order = {"F": 0, "K": 1, "k": 1, "E": 2}
    ranks = [order[x] for x in w]
    return ranks == sorted(ranks) and not ("K" in w and "k" in w)


def is_o_normal_word(w: Word) -> bool:
    order = {"X12": 0, "X21": 1, "X11": 2, "X22": 2}
    ranks = [order[x] for x in w]
    return ranks == sorted(ranks) and not ("X11" in w and "X22" in w)
