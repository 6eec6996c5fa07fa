"""Kashiwara crystals: axioms, constructors, tensor products, morphisms.

Weights are integer vectors in the fundamental-weight basis, so the coroot
pairing (alpha_i^vee, wt) is simply ``wt[i]`` and the simple root alpha_j
has coordinates given by column j of the Cartan matrix.  Root indices are
0-based internally and printed 1-based.

Tensor products use Kashiwara's convention:

    eps(b1 x b2) = max(eps(b1), eps(b2) - <h, wt b1>)
    phi(b1 x b2) = max(phi(b2), phi(b1) + <h, wt b2>)
    F(b1 x b2)   = F b1 x b2  if phi(b1) >  eps(b2)  else b1 x F b2
    E(b1 x b2)   = E b1 x b2  if phi(b1) >= eps(b2)  else b1 x E b2
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Mapping, Optional, Sequence

from .report import Report
from .uqsl2 import CartanMatrix

__all__ = [
    "NEG_INF",
    "NegInf",
    "cmax",
    "CartanDatum",
    "SL2",
    "Crystal",
    "ZERO_VERTEX",
    "validate_crystal",
    "b_n",
    "t_lambda",
    "dual",
    "tensor",
    "is_crystal_morphism",
    "is_crystal_isomorphism",
    "components",
    "highest_weights",
    "disjoint_union",
    "b_infinity_truncated",
    "crystal_of_invariants",
    "to_dot",
    "to_json",
    "from_json",
    "parse_crystal",
    "CrystalSyntaxError",
]


class NegInf:
    """The value -infinity: absorbing under +, neutral for max."""

    _inst: Optional["NegInf"] = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "-inf"

    __str__ = __repr__

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __rsub__(self, other):
        raise ArithmeticError("n - (-inf) is not representable")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __reduce__(self):
        return (NegInf, ())


NEG_INF = NegInf()


def cmax(a, b):
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return max(a, b)


def _fin(x) -> bool:
    return x is not NEG_INF


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CartanDatum:
    matrix: CartanMatrix

    @property
    def rank(self) -> int:
        return self.matrix.rank

    def coroot_pairing(self, i: int, wt: Sequence[int]) -> int:
        """(alpha_i^vee, wt) for a weight in fundamental-weight coordinates."""
        return wt[i]

    def root(self, j: int) -> tuple[int, ...]:
        a = self.matrix.entries
        return tuple(a[i][j] for i in range(self.rank))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.matrix.entries]


SL2 = CartanDatum(CartanMatrix(((2,),)))


def _sub(w, v):
    return tuple(x - y for x, y in zip(w, v))


def _add(w, v):
    return tuple(x + y for x, y in zip(w, v))


# ---------------------------------------------------------------------------
# Crystal
# ---------------------------------------------------------------------------

ZERO_VERTEX = None  # the "0" target of Kashiwara operators and morphisms

_NORMALITY = ("none", "upper", "normal")


def _id_key(x):
    """Total order on vertex ids (ints, strings, nested tuples)."""
    if isinstance(x, tuple):
        return (2, tuple(_id_key(y) for y in x))
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    return (1, str(x))


@dataclass(frozen=True, eq=False)
class Crystal:
    """A finite crystal.

    ``f`` maps (vertex, root index) to the target of F~; E~ is the inverse
    partial map.  ``normality`` records what string-length identities the
    constructor promises ("normal": eps and phi are string lengths; "upper":
    only eps is, and F~ is total away from ``boundary``; "none").
    """

    datum: CartanDatum
    vertices: tuple
    labels: Mapping[Hashable, str]
    wt: Mapping[Hashable, tuple]
    eps: Mapping[Hashable, tuple]
    phi: Mapping[Hashable, tuple]
    f: Mapping[tuple, Hashable]
    boundary: frozenset = frozenset()
    normality: str = "normal"
    _e: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        e = self._e
        e.clear()
        for (b, i), b2 in self.f.items():
            e.setdefault((b2, i), b)

    @property
    def rank(self) -> int:
        return self.datum.rank

    def __len__(self) -> int:
        return len(self.vertices)

    def f_op(self, b, i: int = 0):
        return self.f.get((b, i), ZERO_VERTEX)

    def e_op(self, b, i: int = 0):
        return self._e.get((b, i), ZERO_VERTEX)

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=_id_key)

    def edges(self) -> list[tuple]:
        """(source, target, root) triples in deterministic order."""
        return sorted(((b, b2, i) for (b, i), b2 in self.f.items()),
                      key=lambda t: (_id_key(t[0]), t[2], _id_key(t[1])))

    def highest_vertices(self) -> list:
        return [b for b in self.sorted_vertices()
                if all(self.e_op(b, i) is ZERO_VERTEX for i in range(self.rank))]

    def _structure(self):
        vs = frozenset(self.vertices)
        return (self.datum, vs, {b: self.labels[b] for b in vs}, dict(self.wt), dict(self.eps),
                dict(self.phi), dict(self.f), self.boundary)

    def __eq__(self, other):
        if not isinstance(other, Crystal):
            return NotImplemented
        return self._structure() == other._structure()

    def __hash__(self):
        return hash((len(self.vertices), len(self.f)))

    def restrict(self, keep: Iterable) -> "Crystal":
        ks = set(keep)
        vs = tuple(b for b in self.vertices if b in ks)
        return Crystal(self.datum, vs, {b: self.labels[b] for b in vs}, {b: self.wt[b] for b in vs},
                       {b: self.eps[b] for b in vs}, {b: self.phi[b] for b in vs},
                       {k: v for k, v in self.f.items() if k[0] in ks and v in ks},
                       frozenset(b for b in self.boundary if b in ks), self.normality)


def _render_val(x) -> str:
    return "-inf" if x is NEG_INF else str(x)


def _render_wt(w: tuple) -> str:
    return str(w[0]) if len(w) == 1 else "(" + ",".join(map(str, w)) + ")"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _string_len(c: Crystal, b, i: int, step: Callable) -> int:
    n = 0
    seen = {b}
    while True:
        b = step(b, i)
        if b is ZERO_VERTEX:
            return n
        if b in seen:
            return -1  # cycle: no finite string
        seen.add(b)
        n += 1


def validate_crystal(c: Crystal, normality: str | None = None) -> Report:
    """Check the crystal axioms on every vertex and edge.

    ``normality`` overrides the constructor's promise: "normal" also checks
    eps/phi against E~/F~ string lengths, "upper" checks eps strings and that
    F~ is defined except at boundary vertices, "none" checks the axioms only.
    """
    mode = c.normality if normality is None else normality
    if mode not in _NORMALITY:
        raise ValueError(f"normality must be one of {_NORMALITY}")
    rep = Report("crystal axioms")
    vs = set(c.vertices)

    def fail(name, witness, detail=None):
        rep.add(name, False, witness, detail)

    bad = False
    if len(vs) != len(c.vertices):
        fail("distinct vertices", "duplicate vertex id")
        bad = True
    for b in c.vertices:
        for m, what in ((c.wt, "wt"), (c.eps, "eps"), (c.phi, "phi")):
            if b not in m or len(m[b]) != c.rank:
                fail("data present", repr(b), f"{what} missing or wrong length")
                bad = True
    for (b, i), b2 in c.f.items():
        if b not in vs or b2 not in vs or not 0 <= i < c.rank:
            fail("edges within vertex set", f"{b!r} -{i + 1}-> {b2!r}")
            bad = True
    if bad:
        return rep

    # F~ injective per root, so E~ is a well-defined inverse
    seen: dict = {}
    for (b, i), b2 in c.f.items():
        if (b2, i) in seen:
            fail("E~ inverse of F~", f"{seen[b2, i]!r} and {b!r} both map to {b2!r} under F~_{i + 1}")
        seen[b2, i] = b

    for b in c.sorted_vertices():
        w = c.wt[b]
        for i in range(c.rank):
            e, p = c.eps[b][i], c.phi[b][i]
            if _fin(e) != _fin(p):
                fail("eps = -inf iff phi = -inf", repr(b), f"eps={_render_val(e)} phi={_render_val(p)}")
                continue
            if _fin(p) and p != e + c.datum.coroot_pairing(i, w):
                fail("phi = eps + <h, wt>", repr(b), f"root {i + 1}: eps={e} phi={p} wt={_render_wt(w)}")
            if not _fin(p) and (c.f_op(b, i) is not ZERO_VERTEX or c.e_op(b, i) is not ZERO_VERTEX):
                fail("-inf vertices have no edges", repr(b), f"root {i + 1}")
            b2 = c.f_op(b, i)
            if b2 is not ZERO_VERTEX:
                if c.wt[b2] != _sub(w, c.datum.root(i)):
                    fail("wt(F b) = wt(b) - alpha", f"{b!r} -> {b2!r}")
                if c.eps[b2][i] != c.eps[b][i] + 1:
                    fail("eps(F b) = eps(b) + 1", f"{b!r} -> {b2!r}")
                if c.phi[b2][i] != c.phi[b][i] - 1:
                    fail("phi(F b) = phi(b) - 1", f"{b!r} -> {b2!r}")
            if mode == "none" or not _fin(e):
                continue
            el = _string_len(c, b, i, c.e_op)
            if el != e:
                fail("eps = length of E~ string", repr(b), f"root {i + 1}: eps={e}, string={el}")
            if mode == "normal":
                fl = _string_len(c, b, i, c.f_op)
                if fl != p:
                    fail("phi = length of F~ string", repr(b), f"root {i + 1}: phi={p}, string={fl}")
            elif b not in c.boundary and b2 is ZERO_VERTEX:
                fail("F~ defined off the boundary", repr(b), f"root {i + 1}")
    if not rep.checks:
        rep.add("all axioms", True)
    rep.note(f"{len(c.vertices)} vertices, {len(c.f)} edges, normality={mode}")
    return rep


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def bn_label(k: int) -> str:
    """Display label of F^(k)u in B(n)."""
    return "u" if k == 0 else ("Fu" if k == 1 else f"F^({k})u")


def b_n(n: int) -> Crystal:
    """The rank-1 crystal B(n): vertices 0..n (vertex k is F^(k)u)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    vs = tuple(range(n + 1))
    return Crystal(SL2, vs, {k: bn_label(k) for k in vs}, {k: (n - 2 * k,) for k in vs},
                   {k: (k,) for k in vs}, {k: (n - k,) for k in vs}, {(k, 0): k + 1 for k in range(n)})


def t_lambda(lam, datum: CartanDatum = SL2) -> Crystal:
    w = (lam,) if isinstance(lam, int) else tuple(lam)
    if len(w) != datum.rank:
        raise ValueError("weight length must equal the rank")
    t = "t"
    ninf = (NEG_INF,) * datum.rank
    return Crystal(datum, (t,), {t: f"t_{_render_wt(w)}"}, {t: w}, {t: ninf}, {t: ninf}, {}, normality="none")


def dual(c: Crystal) -> Crystal:
    """Reverse arrows, negate weights, swap eps and phi."""
    f = {(b2, i): b for (b, i), b2 in c.f.items()}
    mode = "normal" if c.normality == "normal" else "none"
    return Crystal(c.datum, c.vertices, {b: f"{c.labels[b]}^∨" for b in c.vertices},
                   {b: tuple(-x for x in c.wt[b]) for b in c.vertices}, dict(c.phi), dict(c.eps), f,
                   c.boundary, mode)


def tensor(c1: Crystal, c2: Crystal) -> Crystal:
    if c1.datum != c2.datum:
        raise ValueError("tensor product of crystals over different Cartan data")
    d = c1.datum
    r = d.rank
    vs = tuple((b1, b2) for b1 in c1.vertices for b2 in c2.vertices)
    labels, wt, eps, phi, f = {}, {}, {}, {}, {}
    for b1, b2 in vs:
        b = (b1, b2)
        w1, w2 = c1.wt[b1], c2.wt[b2]
        labels[b] = f"{c1.labels[b1]} ⊗ {c2.labels[b2]}"
        wt[b] = _add(w1, w2)
        eps[b] = tuple(cmax(c1.eps[b1][i], c2.eps[b2][i] - d.coroot_pairing(i, w1)) for i in range(r))
        phi[b] = tuple(cmax(c2.phi[b2][i], c1.phi[b1][i] + d.coroot_pairing(i, w2)) for i in range(r))
        for i in range(r):
            if c1.phi[b1][i] > c2.eps[b2][i]:
                t = c1.f_op(b1, i)
                if t is not ZERO_VERTEX:
                    f[b, i] = (t, b2)
            else:
                t = c2.f_op(b2, i)
                if t is not ZERO_VERTEX:
                    f[b, i] = (b1, t)
    bnd = frozenset(b for b in vs if b[0] in c1.boundary or b[1] in c2.boundary)
    mode = _NORMALITY[min(_NORMALITY.index(c1.normality), _NORMALITY.index(c2.normality))]
    return Crystal(d, vs, labels, wt, eps, phi, f, bnd, mode)


def disjoint_union(cs: Sequence[Crystal], datum: CartanDatum | None = None) -> Crystal:
    """Tagged union: vertex b of the j-th crystal becomes (j, b)."""
    cs = list(cs)
    if datum is None:
        datum = cs[0].datum if cs else SL2
    if any(c.datum != datum for c in cs):
        raise ValueError("disjoint union of crystals over different Cartan data")
    vs, labels, wt, eps, phi, f, bnd = [], {}, {}, {}, {}, {}, set()
    for j, c in enumerate(cs):
        for b in c.vertices:
            t = (j, b)
            vs.append(t)
            labels[t], wt[t], eps[t], phi[t] = c.labels[b], c.wt[b], c.eps[b], c.phi[b]
            if b in c.boundary:
                bnd.add(t)
        for (b, i), b2 in c.f.items():
            f[(j, b), i] = (j, b2)
    mode = _NORMALITY[min((_NORMALITY.index(c.normality) for c in cs), default=2)]
    return Crystal(datum, tuple(vs), labels, wt, eps, phi, f, frozenset(bnd), mode)


def b_infinity_truncated(depth: int, datum: CartanDatum = SL2) -> Crystal:
    """First depth+1 elements b_k = F~^k 1 of B(infinity), rank 1 only.

    wt(b_k) = -k alpha, eps(b_k) = k, phi(b_k) = eps + <h, wt> = -k.  The
    last vertex is flagged as the truncation boundary."""
    if datum.rank != 1:
        raise ValueError("truncated B(infinity) is only provided in rank 1")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    a = datum.root(0)[0]
    vs = tuple(range(depth + 1))
    return Crystal(datum, vs, {k: f"b_{k}" for k in vs}, {k: (-k * a,) for k in vs},
                   {k: (k,) for k in vs}, {k: (k - k * a,) for k in vs},
                   {(k, 0): k + 1 for k in range(depth)}, frozenset({depth}), "upper")


def crystal_of_invariants(lams: Iterable[int]) -> Crystal:
    return disjoint_union([b_n(n) for n in lams])


# ---------------------------------------------------------------------------
# morphisms and components
# ---------------------------------------------------------------------------


def is_crystal_morphism(psi: Mapping, c1: Crystal, c2: Crystal) -> Report:
    """Check a map psi: c1 -> c2 (missing keys or None mean 0) pointwise."""
    rep = Report("crystal morphism")
    vs2 = set(c2.vertices)
    for b in c1.sorted_vertices():
        t = psi.get(b, ZERO_VERTEX)
        if t is ZERO_VERTEX:
            continue
        if t not in vs2:
            rep.add("image in target", False, f"{b!r} -> {t!r}")
            continue
        if c1.wt[b] != c2.wt[t]:
            rep.add("wt preserved", False, f"{b!r} -> {t!r}")
        if c1.eps[b] != c2.eps[t]:
            rep.add("eps preserved", False, f"{b!r} -> {t!r}")
        if c1.phi[b] != c2.phi[t]:
            rep.add("phi preserved", False, f"{b!r} -> {t!r}")
        for i in range(c1.rank):
            for name, op1, op2 in (("E", c1.e_op, c2.e_op), ("F", c1.f_op, c2.f_op)):
                b2 = op1(b, i)
                if b2 is ZERO_VERTEX:
                    continue
                t2 = psi.get(b2, ZERO_VERTEX)
                if t2 is ZERO_VERTEX:
                    continue
                if op2(t, i) != t2:
                    rep.add(f"commutes with {name}~", False, f"{b!r}, root {i + 1}")
    if not rep.checks:
        rep.add("all conditions", True)
    return rep


def is_crystal_isomorphism(psi: Mapping, c1: Crystal, c2: Crystal) -> Report:
    rep = is_crystal_morphism(psi, c1, c2)
    img = [psi.get(b) for b in c1.vertices]
    bij = None not in img and len(set(img)) == len(img) == len(c2.vertices) and set(img) == set(c2.vertices)
    rep.add("bijective", bij)
    if bij:
        inv = {v: k for k, v in psi.items()}
        rep.extend(is_crystal_morphism(inv, c2, c1), prefix="inverse: ")
    return rep


def _chain_shape(c: Crystal) -> int | None:
    """If c (rank 1) is isomorphic to some B(m), return m."""
    tops = c.highest_vertices()
    if len(tops) != 1:
        return None
    m = c.wt[tops[0]][0]
    if m < 0 or len(c.vertices) != m + 1:
        return None
    b = tops[0]
    for k in range(m + 1):
        if b is ZERO_VERTEX or c.wt[b] != (m - 2 * k,) or c.eps[b] != (k,) or c.phi[b] != (m - k,):
            return None
        b = c.f_op(b, 0)
    return m if b is ZERO_VERTEX else None


def components(c: Crystal) -> list[Crystal]:
    """Connected components, sorted by decreasing highest weight.

    In rank 1 each component must be isomorphic to some B(m)."""
    adj: dict = {b: [] for b in c.vertices}
    for (b, _), b2 in c.f.items():
        adj[b].append(b2)
        adj[b2].append(b)
    seen: set = set()
    comps = []
    for b in c.sorted_vertices():
        if b in seen:
            continue
        stack, part = [b], []
        seen.add(b)
        while stack:
            x = stack.pop()
            part.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(c.restrict(part))
    if c.rank == 1 and c.normality == "normal":
        for comp in comps:
            if _chain_shape(comp) is None:
                raise AssertionError(f"component at {comp.sorted_vertices()[0]!r} is not a B(m)")

    def key(comp):
        tops = comp.highest_vertices() or comp.sorted_vertices()
        return (tuple(-x for x in comp.wt[tops[0]]), _id_key(comp.sorted_vertices()[0]))

    return sorted(comps, key=key)


def highest_weights(c: Crystal) -> list:
    """Highest weights of the components (rank 1: plain integers)."""
    out = []
    for comp in components(c):
        w = comp.wt[comp.highest_vertices()[0]]
        out.append(w[0] if c.rank == 1 else w)
    return out


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(c: Crystal, name: str = "crystal") -> str:
    order = c.sorted_vertices()
    idx = {b: n for n, b in enumerate(order)}
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for b in order:
        lab = _dot_escape(c.labels[b]) + "\\nwt=" + _render_wt(c.wt[b])
        lines.append(f'  v{idx[b]} [label="{lab}"];')
    for b, b2, i in c.edges():
        lines.append(f'  v{idx[b]} -> v{idx[b2]} [label="α{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _id_to_json(x):
    if isinstance(x, tuple):
        return [_id_to_json(y) for y in x]
    return x


def _id_from_json(x):
    if isinstance(x, list):
        return tuple(_id_from_json(y) for y in x)
    return x


def _val_to_json(x):
    return "-inf" if x is NEG_INF else x


def _val_from_json(x):
    return NEG_INF if x == "-inf" else int(x)


def to_json(c: Crystal, indent: int | None = 2) -> str:
    doc: dict[str, Any] = {
        "datum": c.datum.to_json(),
        "vertices": [
            {"id": _id_to_json(b), "label": c.labels[b], "wt": list(c.wt[b]),
             "eps": [_val_to_json(x) for x in c.eps[b]], "phi": [_val_to_json(x) for x in c.phi[b]]}
            for b in c.vertices
        ],
        "edges": [{"from": _id_to_json(b), "to": _id_to_json(b2), "root": i + 1} for b, b2, i in c.edges()],
        "boundary": [_id_to_json(b) for b in sorted(c.boundary, key=_id_key)],
        "normality": c.normality,
    }
    return json.dumps(doc, indent=indent, ensure_ascii=False)


def from_json(text: str) -> Crystal:
    doc = json.loads(text)
    datum = CartanDatum(CartanMatrix(tuple(tuple(r) for r in doc["datum"])))
    vs, labels, wt, eps, phi = [], {}, {}, {}, {}
    for v in doc["vertices"]:
        b = _id_from_json(v["id"])
        vs.append(b)
        labels[b] = v["label"]
        wt[b] = tuple(v["wt"])
        eps[b] = tuple(_val_from_json(x) for x in v["eps"])
        phi[b] = tuple(_val_from_json(x) for x in v["phi"])
    f = {(_id_from_json(e["from"]), e["root"] - 1): _id_from_json(e["to"]) for e in doc["edges"]}
    bnd = frozenset(_id_from_json(b) for b in doc.get("boundary", []))
    return Crystal(datum, tuple(vs), labels, wt, eps, phi, f, bnd, doc.get("normality", "normal"))


# ---------------------------------------------------------------------------
# expression syntax:  B(n) | T(n) | Binf(n) | dual(X) | X (x) Y | X (+) Y | (X)
# ---------------------------------------------------------------------------


class CrystalSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class _CParser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def at(self, tok: str) -> bool:
        self.ws()
        return self.s.startswith(tok, self.i)

    def expect(self, tok: str):
        if not self.at(tok):
            raise CrystalSyntaxError(f"expected {tok!r}", self.i)
        self.i += len(tok)

    def integer(self) -> int:
        self.ws()
        j = self.i
        if j < len(self.s) and self.s[j] in "+-":
            j += 1
        k = j
        while k < len(self.s) and self.s[k].isdigit():
            k += 1
        if k == j:
            raise CrystalSyntaxError("expected integer", self.i)
        v = int(self.s[self.i:k])
        self.i = k
        return v

    def parse(self) -> Crystal:
        c = self.union()
        self.ws()
        if self.i != len(self.s):
            raise CrystalSyntaxError(f"unexpected {self.s[self.i]!r}", self.i)
        return c

    def union(self) -> Crystal:
        parts = [self.product()]
        while self.at("(+)"):
            self.i += 3
            parts.append(self.product())
        return parts[0] if len(parts) == 1 else disjoint_union(parts)

    def product(self) -> Crystal:
        c = self.atom()
        while self.at("(x)"):
            self.i += 3
            c = tensor(c, self.atom())
        return c

    def atom(self) -> Crystal:
        self.ws()
        start = self.i
        for name in ("Binf", "B", "T", "dual"):
            if self.at(name + "("):
                self.i += len(name) + 1
                if name == "dual":
                    c = dual(self.union())
                else:
                    n = self.integer()
                    if name == "B":
                        if n < 0:
                            raise CrystalSyntaxError("B(n) needs n >= 0", start)
                        c = b_n(n)
                    elif name == "Binf":
                        if n < 0:
                            raise CrystalSyntaxError("Binf(n) needs n >= 0", start)
                        c = b_infinity_truncated(n)
                    else:
                        c = t_lambda(n)
                self.expect(")")
                return c
        if self.at("(") and not self.at("(x)") and not self.at("(+)"):
            self.i += 1
            c = self.union()
            self.expect(")")
            return c
        raise CrystalSyntaxError("expected B(n), T(n), Binf(n), dual(...) or '('", self.i)


def parse_crystal(text: str) -> Crystal:
    return _CParser(text).parse()
