"""Combinatorial diagrams: Brauer diagrams, braid words, ribbon words.

A Brauer diagram on r strands is a perfect matching of 2r points, numbered
0..r-1 along the bottom and r..2r-1 along the top (top point r+i sits
above bottom point i).  Composition stacks `upper` on top of `lower`,
removes closed loops and reports their count; the matrix model multiplies
in the same order, nu(upper) @ nu(lower).

Ribbon graphs are layered words of generator tokens read bottom to top.
Directed tokens: I+ I- X+ X- Om+ Om- U+ U- with signed source/target
sequences (+ is the module V, - its dual); non-directed tokens: I X+ X-
Om U with arities.  Words validate by matching each layer's target to the
next layer's source.  Equality of words is not decided; words are only
compared through their functor images.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .scalar import RatFunc, qpow

__all__ = [
    "BrauerDiagram", "compose_brauer", "brauer_basis", "identity_diagram",
    "transposition_diagram", "cupcap_diagram", "permutation_diagram",
    "diagram_factor", "perm_word",
    "BraidWord", "parse_braid", "braid_to_ribbon", "closure",
    "RibbonWord", "Relation", "quotient_relations",
    "DIRECTED_TOKENS", "NONDIRECTED_TOKENS",
]


# ---------------------------------------------------------------------------
# Brauer diagrams.

@dataclass(frozen=True)
class BrauerDiagram:
    """Perfect matching on 2r points; match[match[i]] == i, no fixed points."""

    match: tuple[int, ...]

    def __post_init__(self):
        n = len(self.match)
        if n % 2:
            raise ValueError("a Brauer diagram needs an even number of points")
        for i, j in enumerate(self.match):
            if not 0 <= j < n or j == i or self.match[j] != i:
                raise ValueError("not a fixed-point-free involution")

    @property
    def strands(self) -> int:
        return len(self.match) // 2

    def bottom_arcs(self):
        r = self.strands
        return [(i, self.match[i]) for i in range(r)
                if i < self.match[i] < r]

    def top_arcs(self):
        r = self.strands
        return [(i - r, self.match[i] - r) for i in range(r, 2 * r)
                if r <= self.match[i] and i < self.match[i]]

    def through_pairs(self):
        r = self.strands
        return [(i, self.match[i] - r) for i in range(r) if self.match[i] >= r]


def identity_diagram(r: int) -> BrauerDiagram:
    return BrauerDiagram(tuple(list(range(r, 2 * r)) + list(range(r))))


def permutation_diagram(perm) -> BrauerDiagram:
    """Bottom i joined to top perm[i] (perm is a 0-based image tuple)."""
    r = len(perm)
    match = [0] * (2 * r)
    for i, p in enumerate(perm):
        match[i] = r + p
        match[r + p] = i
    return BrauerDiagram(tuple(match))


def transposition_diagram(r: int, i: int) -> BrauerDiagram:
    """s_i as a diagram, 1 <= i <= r-1."""
    perm = list(range(r))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return permutation_diagram(tuple(perm))


def cupcap_diagram(r: int, i: int) -> BrauerDiagram:
    """e_i as a diagram: bottom (i-1,i) and top (i-1,i) joined, rest through."""
    match = [0] * (2 * r)
    for j in range(r):
        match[j] = r + j
        match[r + j] = j
    a, b = i - 1, i
    match[a], match[b] = b, a
    match[r + a], match[r + b] = r + b, r + a
    return BrauerDiagram(tuple(match))


def compose_brauer(upper: BrauerDiagram, lower: BrauerDiagram, delta):
    """Stack upper on top of lower; returns (diagram, delta**loops).

    Matches the matrix model: nu(result) * delta**loops == nu(upper) @ nu(lower).
    """
    r = upper.strands
    if lower.strands != r:
        raise ValueError("strand-count mismatch in Brauer composition")
    # Node ids: result bottom ("b", i) = lower bottom, result top ("t", i) =
    # upper top; middles ("m", j) glue lower top j to upper bottom j.
    adj: dict[tuple, list] = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for i in range(r):
        j = lower.match[i]
        link(("b", i), ("m", j - r) if j >= r else ("b", j))
    for i in range(r, 2 * r):
        j = lower.match[i]
        if j >= r and i < j:
            link(("m", i - r), ("m", j - r))
    for i in range(r):
        j = upper.match[i]
        link(("m", i), ("t", j - r) if j >= r else ("m", j))
    for i in range(r, 2 * r):
        j = upper.match[i]
        if j >= r and i < j:
            link(("t", i - r), ("t", j - r))
    # each endpoint occurs in exactly one edge pair; walk to its partner
    ends = [("b", i) for i in range(r)] + [("t", i) for i in range(r)]
    seen = set()
    pairing = {}
    for start in ends:
        if start in seen:
            continue
        seen.add(start)
        prev, cur = start, adj[start][0]
        while cur[0] == "m":
            seen.add(cur)
            nxt = [x for x in adj[cur] if x != prev]
            prev, cur = cur, nxt[0]
        seen.add(cur)
        pairing[start] = cur
        pairing[cur] = start
    # untouched middles form closed loops; each contributes one delta factor
    loops = 0
    for i in range(r):
        node = ("m", i)
        if node in seen:
            continue
        loops += 1
        stack = [node]
        seen.add(node)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    match = [0] * (2 * r)
    for a, b in pairing.items():
        ia = a[1] if a[0] == "b" else r + a[1]
        ib = b[1] if b[0] == "b" else r + b[1]
        match[ia] = ib
    return BrauerDiagram(tuple(match)), delta ** loops


def brauer_basis(r: int) -> list[BrauerDiagram]:
    """All (2r-1)!! diagrams on r strands."""
    if r > 6:
        raise ValueError("diagram enumeration capped at r = 6")
    out = []

    def extend(matched, pairs):
        free = [i for i in range(2 * r) if i not in matched]
        if not free:
            match = [0] * (2 * r)
            for a, b in pairs:
                match[a], match[b] = b, a
            out.append(BrauerDiagram(tuple(match)))
            return
        a = free[0]
        for b in free[1:]:
            extend(matched | {a, b}, pairs + [(a, b)])

    extend(frozenset(), [])
    return out


def perm_word(perm) -> list[int]:
    """Reduced word [i_1..i_k] with s_{i_k} o ... o s_{i_1} = perm.

    Bubble sort records right-multiplications p o t_1 o ... o t_k = id, so
    p = t_k o ... o t_1 with t_1 applied first; the recorded order is
    already the apply-first order used by the diagram and matrix builders.
    """
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return word


def diagram_factor(d: BrauerDiagram):
    """Factor d as alpha o M_k o beta with permutations alpha, beta.

    Returns (alpha, k, beta) where M_k has bottom and top arcs at positions
    (1,2), ..., (2k-1,2k) and straight strands elsewhere; certified by
    recomposition inside this function.
    """
    r = d.strands
    bots = sorted(d.bottom_arcs())
    tops = sorted(d.top_arcs())
    through = d.through_pairs()
    k = len(bots)
    # beta: route bottom arcs to (2t-2, 2t-1), through bottoms to 2k..r-1
    beta_inv = [0] * r
    slot = 2 * k
    bmap = {}
    for t, (a, b) in enumerate(bots):
        beta_inv[2 * t] = a
        beta_inv[2 * t + 1] = b
    for u, _ in through:
        beta_inv[slot] = u
        bmap[u] = slot
        slot += 1
    beta = [0] * r
    for pos, src in enumerate(beta_inv):
        beta[src] = pos
    # alpha: send (2t-2, 2t-1) to the t-th top arc, slot 2k+j to through top
    alpha = [0] * r
    for t, (a, b) in enumerate(tops):
        alpha[2 * t] = a
        alpha[2 * t + 1] = b
    for u, v in through:
        alpha[bmap[u]] = v
    mid = identity_diagram(r).match
    mk = list(mid)
    for t in range(k):
        a, b = 2 * t, 2 * t + 1
        mk[a], mk[b] = b, a
        mk[r + a], mk[r + b] = r + b, r + a
    mkd = BrauerDiagram(tuple(mk))
    alpha_t, beta_t = tuple(alpha), tuple(beta)
    rebuilt, loops = compose_brauer(permutation_diagram(alpha_t), mkd, 1)
    rebuilt, loops2 = compose_brauer(rebuilt, permutation_diagram(beta_t), 1)
    if rebuilt != d or loops != 1 or loops2 != 1:
        raise AssertionError("Brauer factorisation failed to recompose")
    return alpha_t, k, beta_t


# ---------------------------------------------------------------------------
# Braid words.

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...]  # (generator index 1..r-1, +-1)

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"braid letter s{i} out of range")
            if s not in (1, -1):
                raise ValueError("braid letter sign must be +-1")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands,
                         tuple((i, -s) for i, s in reversed(self.letters)))


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse words like "s1 s2^-1 s1"; strands defaults to max index + 1."""
    letters = []
    for tok in text.split():
        if not tok.startswith("s"):
            raise ValueError(f"bad braid letter {tok!r}")
        body = tok[1:]
        sign = 1
        if "^" in body:
            body, exp = body.split("^", 1)
            if exp not in ("-1", "1", "+1"):
                raise ValueError(f"bad braid exponent in {tok!r}")
            sign = -1 if exp == "-1" else 1
        letters.append((int(body), sign))
    need = max((i for i, _ in letters), default=0) + 1
    strands = strands if strands is not None else max(need, 1)
    if strands < need:
        raise ValueError(f"braid word needs at least {need} strands")
    return BraidWord(strands, tuple(letters))


# ---------------------------------------------------------------------------
# Ribbon words.

#: token -> (source signs, target signs); read bottom to top.
DIRECTED_TOKENS = {
    "I+": (("+",), ("+",)),
    "I-": (("-",), ("-",)),
    "X+": (("+", "+"), ("+", "+")),
    "X-": (("+", "+"), ("+", "+")),
    "Om+": (("-", "+"), ()),
    "Om-": (("+", "-"), ()),
    "U+": ((), ("+", "-")),
    "U-": ((), ("-", "+")),
}

#: token -> (arity in, arity out).
NONDIRECTED_TOKENS = {
    "I": (1, 1),
    "X+": (2, 2),
    "X-": (2, 2),
    "Om": (2, 0),
    "U": (0, 2),
}


@dataclass(frozen=True)
class RibbonWord:
    mode: str  # "directed" or "nondirected"
    layers: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.mode not in ("directed", "nondirected"):
            raise ValueError(f"unknown ribbon mode {self.mode!r}")
        if not self.layers:
            raise ValueError("a ribbon word needs at least one layer")
        self.validate()

    def _token_table(self):
        return DIRECTED_TOKENS if self.mode == "directed" else NONDIRECTED_TOKENS

    def layer_signature(self, layer):
        """(source, target) of one layer: sign tuples or arities."""
        table = self._token_table()
        if self.mode == "directed":
            src: tuple = ()
            dst: tuple = ()
            for tok in layer:
                if tok not in table:
                    raise ValueError(f"unknown directed token {tok!r}")
                s, t = table[tok]
                src += s
                dst += t
            return src, dst
        s = sum(table[tok][0] for tok in layer)
        t = sum(table[tok][1] for tok in layer)
        return s, t

    def validate(self):
        prev_target = None
        for layer in self.layers:
            src, dst = self.layer_signature(layer)
            if prev_target is not None and src != prev_target:
                raise ValueError(
                    f"layer source {src} does not match previous target {prev_target}")
            prev_target = dst

    @property
    def source(self):
        return self.layer_signature(self.layers[0])[0]

    @property
    def target(self):
        return self.layer_signature(self.layers[-1])[1]

    def stack(self, upper: "RibbonWord") -> "RibbonWord":
        """upper composed after self (self at the bottom)."""
        if self.mode != upper.mode:
            raise ValueError("mode mismatch in stacking")
        return RibbonWord(self.mode, self.layers + upper.layers)

    def juxtapose(self, right: "RibbonWord") -> "RibbonWord":
        """Side-by-side tensor; shorter word padded with identity layers."""
        if self.mode != right.mode:
            raise ValueError("mode mismatch in juxtaposition")
        a, b = list(self.layers), list(right.layers)

        def pad(layers, word):
            sig = word.layer_signature(layers[-1])[1]
            if word.mode == "directed":
                return tuple("I+" if s == "+" else "I-" for s in sig)
            return ("I",) * sig

        while len(a) < len(b):
            a.append(pad(a, self))
        while len(b) < len(a):
            b.append(pad(b, right))
        return RibbonWord(self.mode, tuple(x + y for x, y in zip(a, b)))

    def to_json(self) -> str:
        return json.dumps({"mode": self.mode,
                           "layers": [list(l) for l in self.layers]})

    @classmethod
    def from_json(cls, text: str) -> "RibbonWord":
        data = json.loads(text)
        return cls(data["mode"], tuple(tuple(l) for l in data["layers"]))


def braid_to_ribbon(w: BraidWord, mode: str = "directed") -> RibbonWord:
    """One layer per braid letter; identities elsewhere.  Empty word -> id layer."""
    ident = "I+" if mode == "directed" else "I"
    r = w.strands
    layers = []
    for i, s in w.letters:
        tok = "X+" if s > 0 else "X-"
        layers.append((ident,) * (i - 1) + (tok,) + (ident,) * (r - i - 1))
    if not layers:
        layers.append((ident,) * r)
    return RibbonWord(mode, tuple(layers))


def closure(w: BraidWord) -> RibbonWord:
    """Trace closure to the right as a closed directed ribbon word.

    Nested U+ cups feed the braid block from below on (+^r, -^r); nested
    Om- caps close it from above, outermost last.  The empty 1-strand
    braid closes to Om- o U+, the unknot.
    """
    r = w.strands
    layers: list[tuple[str, ...]] = []
    for k in range(r):
        layers.append(("I+",) * k + ("U+",) + ("I-",) * k)
    body = braid_to_ribbon(w)
    for layer in body.layers:
        layers.append(layer + ("I-",) * r)
    for k in range(r - 1, -1, -1):
        layers.append(("I+",) * k + ("Om-",) + ("I-",) * k)
    word = RibbonWord("directed", tuple(layers))
    if word.source != () or word.target != ():
        raise AssertionError("closure failed to produce a closed graph")
    return word


# ---------------------------------------------------------------------------
# Quotient relations, as formal records to be pushed through the functor.

@dataclass(frozen=True)
class Relation:
    """Formal linear combination of small ribbon words (or a named spectral
    identity when model == "spectral")."""

    name: str
    model: str  # "word", "scalar" or "spectral"
    terms: tuple = ()  # (coefficient, RibbonWord) pairs for word/scalar models


def quotient_relations(kind: str, params: dict | None = None) -> list[Relation]:
    params = dict(params or {})
    if kind == "hecke":
        coeff = qpow(1) - qpow(-1)
        return [Relation(
            "X+ - X- - (q - q^-1) I", "word",
            ((RatFunc(1), RibbonWord("directed", (("X+",),))),
             (RatFunc(-1), RibbonWord("directed", (("X-",),))),
             (-coeff, RibbonWord("directed", (("I+", "I+"),)))))]
    if kind == "walledbmw":
        z = params.get("z")
        if z is None:
            raise ValueError("walledbmw relations need the loop parameter z")
        coeff = qpow(1) - qpow(-1)
        loop_plus = RibbonWord("directed", (("U+",), ("Om-",)))
        loop_minus = RibbonWord("directed", (("U-",), ("Om+",)))
        return [
            Relation("X+ - X- - (q - q^-1) I", "word",
                     ((RatFunc(1), RibbonWord("directed", (("X+",),))),
                      (RatFunc(-1), RibbonWord("directed", (("X-",),))),
                      (-coeff, RibbonWord("directed", (("I+", "I+"),))))),
            Relation("Om- U+ - z", "scalar", ((RatFunc(1), loop_plus), (-z, None))),
            Relation("Om+ U- - z", "scalar", ((RatFunc(1), loop_minus), (-z, None))),
        ]
    if kind == "bmw":
        names = ["g*ginv = 1", "g from eliminated form", "ginv from eliminated form",
                 "skein g - ginv = (q-q^-1)(1-e)", "e^2 = sdim e",
                 "e g = q^{-omega} e", "g e = q^{-omega} e",
                 "(g-q)(g+q^-1)(g-q^{chi_0}) = 0", "y = q^{-omega_V}",
                 "chi_0 = -m+2n+1"]
        return [Relation(nm, "spectral") for nm in names]
    raise ValueError(f"unknown relation family {kind!r}")
