"""Finite groups as indexed element sets with multiplication tables.

Element listings are frozen per family (code constructions depend on
them): cyclic groups list 1, x, ..., x^(n-1) and dihedral groups list
1, a, ..., a^(n-1), b, ab, ..., a^(n-1)b.  Words over the generators use
the grammar ``a^2*b`` (``*``-separated factors, optional integer
exponents, ``1`` for the empty word).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import HomomorphismRejected

# a word is a sequence of (generator name, +1 | -1) letters
Word = Tuple[Tuple[str, int], ...]

_FACTOR_RE = re.compile(r"([A-Za-z_]\w*)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    """Parse ``a^2*b`` style words; ``1`` is the empty word."""
    text = text.strip()
    if text in ("1", "e", ""):
        return ()
    letters: List[Tuple[str, int]] = []
    for factor in text.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"bad word factor {factor!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        sign = 1 if exp >= 0 else -1
        letters.extend([(name, sign)] * abs(exp))
    return tuple(letters)


def word_str(word: Word) -> str:
    if not word:
        return "1"
    parts: List[str] = []
    i = 0
    while i < len(word):
        name, sign = word[i]
        j = i
        while j < len(word) and word[j] == (name, sign):
            j += 1
        exp = (j - i) * sign
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "*".join(parts)


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    def __init__(self, names: Sequence[str], mul: Sequence[Sequence[int]],
                 generators: Sequence[Tuple[str, int]], family: str,
                 relators: Optional[Sequence[Word]] = None,
                 family_params=None, check: bool = True):
        self.order = len(names)
        self.names = list(names)
        self.mul = [list(row) for row in mul]
        self.family = family
        self.family_params = family_params
        self.generators = list(generators)
        self.relators = None if relators is None else [tuple(w) for w in relators]
        self.identity = self._find_identity()
        self.inv = self._build_inverses()
        if check:
            self._check_associativity()
        self.normal_forms = self.words_over(self.generators)
        self._index_of_name = {name: i for i, name in enumerate(self.names)}
        self._check_relators()

    # -- construction checks ----------------------------------------------

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.mul[e][g] == g and self.mul[g][e] == g for g in range(n)):
                return e
        raise ValueError("multiplication table has no identity")

    def _build_inverses(self) -> List[int]:
        n = self.order
        inv = [-1] * n
        for g in range(n):
            for h in range(n):
                if self.mul[g][h] == self.identity and self.mul[h][g] == self.identity:
                    inv[g] = h
                    break
            if inv[g] < 0:
                raise ValueError(f"element {self.names[g]} has no inverse")
        return inv

    def _check_associativity(self):
        n = self.order
        if n <= 24:
            triples = product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(4000))
        for a, b, c in triples:
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise ValueError(
                    f"table not associative at ({self.names[a]}, {self.names[b]}, {self.names[c]})")

    def _check_relators(self):
        if self.relators is None:
            return
        for rel in self.relators:
            if self.eval_word(rel) != self.identity:
                raise ValueError(f"relator {word_str(rel)} does not hold in the table")

    # -- basic operations ---------------------------------------------------

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def index_of(self, name: str) -> int:
        return self._index_of_name[name]

    def generator_index(self, name: str) -> int:
        for gname, idx in self.generators:
            if gname == name:
                return idx
        raise KeyError(f"unknown generator {name!r}")

    def eval_word(self, word: Word) -> int:
        g = self.identity
        for name, sign in word:
            x = self.generator_index(name)
            g = self.mul[g][x if sign > 0 else self.inv[x]]
        return g

    def eval_word_of(self, word: Word, elems: Dict[str, int]) -> int:
        """Evaluate a word with each letter name bound to a given element."""
        g = self.identity
        for name, sign in word:
            x = elems[name]
            g = self.mul[g][x if sign > 0 else self.inv[x]]
        return g

    def words_over(self, named: Sequence[Tuple[str, int]]) -> List[Word]:
        """BFS words for every element over the given named elements.

        Moves are ordered by declaration order, plain letter before its
        inverse, so the words are deterministic.
        """
        moves: List[Tuple[Tuple[str, int], int]] = []
        for name, idx in named:
            moves.append(((name, 1), idx))
            moves.append(((name, -1), self.inv[idx]))
        words: List[Optional[Word]] = [None] * self.order
        words[self.identity] = ()
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                base = words[g]
                for letter, idx in moves:
                    h = self.mul[g][idx]
                    if words[h] is None:
                        words[h] = base + (letter,)
                        nxt.append(h)
            frontier = nxt
        missing = [self.names[i] for i, w in enumerate(words) if w is None]
        if missing:
            raise ValueError(f"given elements do not generate the group; missed {missing}")
        return words  # type: ignore[return-value]

    def element_order(self, g: int) -> int:
        k, acc = 1, g
        while acc != self.identity:
            acc = self.mul[acc][g]
            k += 1
        if self.order % k:
            raise AssertionError("element order does not divide the group order")
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(n))

    def describe(self) -> str:
        if self.family == "cyclic":
            return f"cyclic({self.family_params})"
        if self.family == "dihedral":
            return f"dihedral({self.family_params})"
        if self.family == "abelian":
            return f"abelian({list(self.family_params)})"
        return f"table(order {self.order})"

    def __repr__(self):
        return f"FiniteGroup({self.describe()})"


def element_order(group: FiniteGroup, g: int) -> int:
    return group.element_order(g)


# -- built-in families ----------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    names = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, n)]
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(names, mul, [("x", 1 % n)], "cyclic",
                       relators=[parse_word(f"x^{n}")], family_params=n)


def dihedral_group(n: int) -> FiniteGroup:
    """Order-2n dihedral group listed 1, a, ..., a^(n-1), b, ab, ..."""
    if n < 3:
        raise ValueError("dihedral group needs rotation order n >= 3")

    def idx(i: int, j: int) -> int:
        return (j % 2) * n + (i % n)

    names = []
    for j in (0, 1):
        for i in range(n):
            rot = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            ref = "b" if j else ""
            names.append("1" if not rot and not ref else
                         rot if not ref else ref if not rot else f"{rot}*{ref}")
    mul = [[0] * (2 * n) for _ in range(2 * n)]
    for i1, j1, i2, j2 in product(range(n), (0, 1), range(n), (0, 1)):
        i = i1 + (i2 if j1 == 0 else -i2)
        mul[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2)
    relators = [parse_word(f"a^{n}"), parse_word("b^2"), parse_word("a*b*a*b")]
    return FiniteGroup(names, mul, [("a", 1), ("b", n)], "dihedral",
                       relators=relators, family_params=n)


def abelian_group(factors: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups, one generator x1, x2, ... each."""
    factors = list(factors)
    if not factors or any(f < 1 for f in factors):
        raise ValueError("abelian factors must be positive")
    k = len(factors)
    tuples = list(product(*[range(f) for f in factors]))
    index = {t: i for i, t in enumerate(tuples)}

    def name_of(t):
        parts = [f"x{i+1}" if c == 1 else f"x{i+1}^{c}"
                 for i, c in enumerate(t) if c]
        return "*".join(parts) if parts else "1"

    names = [name_of(t) for t in tuples]
    mul = [[index[tuple((a + b) % f for a, b, f in zip(t1, t2, factors))]
            for t2 in tuples] for t1 in tuples]
    gens = []
    for i in range(k):
        t = tuple(1 if j == i else 0 for j in range(k))
        gens.append((f"x{i+1}", index[tuple(c % f for c, f in zip(t, factors))]))
    relators = [parse_word(f"x{i+1}^{factors[i]}") for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            relators.append(parse_word(f"x{i+1}^-1*x{j+1}^-1*x{i+1}*x{j+1}"))
    return FiniteGroup(names, mul, gens, "abelian",
                       relators=relators, family_params=tuple(factors))


def table_group(mul: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                generators: Optional[Sequence[str]] = None) -> FiniteGroup:
    """Group from a raw multiplication table; generators picked greedily if absent."""
    n = len(mul)
    if names is None:
        names = [f"g{i}" for i in range(n)]
    if generators is not None:
        gens = [(name, list(names).index(name)) for name in generators]
    else:
        gens = _greedy_generators(mul, names)
    return FiniteGroup(names, mul, gens, "table")


def _greedy_generators(mul, names) -> List[Tuple[str, int]]:
    n = len(mul)
    identity = next(e for e in range(n)
                    if all(mul[e][g] == g == mul[g][e] for g in range(n)))
    chosen: List[int] = []
    closure = {identity}
    for g in range(n):
        if g in closure:
            continue
        chosen.append(g)
        frontier = [identity]
        closure = {identity}
        while frontier:
            nxt = []
            for h in frontier:
                for x in chosen:
                    for y in (mul[h][x],):
                        if y not in closure:
                            closure.add(y)
                            nxt.append(y)
            frontier = nxt
        # inverses are powers in a finite group, so one-sided closure suffices
        if len(closure) == n:
            break
    return [(names[g], g) for g in chosen]


def make_group(spec) -> FiniteGroup:
    """Build a group from a spec dict like {'family': 'dihedral', 'n': 6}."""
    if isinstance(spec, FiniteGroup):
        return spec
    family = spec["family"]
    if family == "cyclic":
        return cyclic_group(int(spec["n"]))
    if family == "dihedral":
        return dihedral_group(int(spec["n"]))
    if family == "abelian":
        return abelian_group([int(f) for f in spec["factors"]])
    if family == "table":
        return table_group(spec["table"], spec.get("names"), spec.get("generators"))
    raise ValueError(f"unknown group family {family!r}")


# -- endomorphisms ----------------------------------------------------------

DIHEDRAL_FAMILIES = ("sigma-1", "sigma0", "sigma1", "sigma2", "sigma3", "sigma4", "sigma5")


class Endomorphism:
    """A verified group endomorphism stored as a full image table."""

    __slots__ = ("group", "images", "generator_images", "family", "s", "t", "is_identity")

    def __init__(self, group: FiniteGroup, images: Sequence[int],
                 generator_images: Optional[Dict[str, Word]] = None,
                 family: str = "none", s: Optional[int] = None, t: Optional[int] = None,
                 check: bool = True):
        self.group = group
        self.images = tuple(images)
        self.generator_images = generator_images
        self.family = family
        self.s = s
        self.t = t
        self.is_identity = all(self.images[g] == g for g in range(group.order))
        if check:
            bad = self.violating_pair()
            if bad is not None:
                g, h = bad
                raise HomomorphismRejected(
                    f"map is not multiplicative at ({group.names[g]}, {group.names[h]})",
                    pair=bad)
            if self.images[group.identity] != group.identity:
                raise HomomorphismRejected("map does not fix the identity")

    def violating_pair(self) -> Optional[Tuple[int, int]]:
        G, im = self.group, self.images
        mul = G.mul
        for g in range(G.order):
            img_g = im[g]
            row = mul[g]
            for h in range(G.order):
                if im[row[h]] != mul[img_g][im[h]]:
                    return (g, h)
        return None

    def __call__(self, g: int) -> int:
        return self.images[g]

    def __eq__(self, other):
        return (isinstance(other, Endomorphism) and other.group is self.group
                and other.images == self.images)

    def __hash__(self):
        return hash(self.images)

    def describe(self) -> str:
        if self.generator_images:
            ims = ", ".join(f"{k} -> {word_str(w)}" for k, w in self.generator_images.items())
        else:
            ims = "table"
        tag = self.family if self.family != "none" else ("id" if self.is_identity else "endo")
        return f"{tag}({ims})"

    def __repr__(self):
        return f"Endomorphism({self.describe()})"


def identity_endomorphism(group: FiniteGroup) -> Endomorphism:
    gen_images = {name: ((name, 1),) for name, _ in group.generators}
    family = "none"
    s = t = None
    if group.family == "dihedral":
        family, s, t = "sigma0" if group.family_params % 2 else "sigma1", 1, 0
    return Endomorphism(group, list(range(group.order)), gen_images,
                        family=family, s=s, t=t, check=False)


def endo_from_images(group: FiniteGroup, images: Dict[str, "str | Word"]) -> Endomorphism:
    """Extend generator images to an endomorphism, or reject.

    The extension is computed along normal forms; a failing relator is
    reported first when the group carries a relator list, otherwise the
    first violating pair from the full multiplicativity check.
    """
    gen_words: Dict[str, Word] = {}
    for name, _ in group.generators:
        if name not in images:
            raise ValueError(f"missing image for generator {name!r}")
        w = images[name]
        gen_words[name] = parse_word(w) if isinstance(w, str) else tuple(w)
    extra = set(images) - set(gen_words)
    if extra:
        raise ValueError(f"unknown generators in image map: {sorted(extra)}")
    gen_elems = {name: group.eval_word(w) for name, w in gen_words.items()}
    table = [group.eval_word_of(group.normal_forms[g], gen_elems)
             for g in range(group.order)]
    if group.relators is not None:
        for rel in group.relators:
            img = group.eval_word_of(rel, gen_elems)
            if img != group.identity:
                raise HomomorphismRejected(
                    f"relator {word_str(rel)} maps to {group.names[img]} instead of 1",
                    relator=rel)
    endo = Endomorphism(group, table, gen_words, check=True)
    if group.family == "dihedral":
        endo = _tag_dihedral(endo)
    return endo


def compose(outer: Endomorphism, inner: Endomorphism) -> Endomorphism:
    if outer.group is not inner.group:
        raise ValueError("endomorphisms live on different groups")
    images = [outer.images[inner.images[g]] for g in range(outer.group.order)]
    endo = Endomorphism(outer.group, images, None, check=True)
    if outer.group.family == "dihedral":
        endo = _tag_dihedral(endo)
    return endo


def brute_force_endomorphisms(group: FiniteGroup) -> List[Endomorphism]:
    """All endomorphisms by exhausting generator images; order <= 12 only."""
    if group.order > 12:
        raise ValueError("brute-force enumeration is limited to groups of order <= 12")
    gens = group.generators
    found = []
    for choice in product(range(group.order), repeat=len(gens)):
        gen_elems = {name: g for (name, _), g in zip(gens, choice)}
        table = [group.eval_word_of(group.normal_forms[g], gen_elems)
                 for g in range(group.order)]
        try:
            endo = Endomorphism(group, table, None, check=True)
        except HomomorphismRejected:
            continue
        if group.family == "dihedral":
            endo = _tag_dihedral(endo)
        found.append(endo)
    return found


# -- dihedral endomorphism inventory ---------------------------------------

def _dihedral_images(group: FiniteGroup, a_img: int, b_img: int) -> List[int]:
    n = group.family_params
    images = [group.identity] * (2 * n)
    for i in range(n):
        ai = _power(group, a_img, i)
        images[i] = ai
        images[n + i] = group.mul[ai][b_img]
    return images


def _power(group: FiniteGroup, g: int, k: int) -> int:
    acc = group.identity
    for _ in range(k):
        acc = group.mul[acc][g]
    return acc


def enumerate_endomorphisms(group: FiniteGroup) -> List[Endomorphism]:
    """The complete tagged endomorphism inventory of a dihedral group."""
    if group.family != "dihedral":
        raise ValueError("complete enumeration is only available for dihedral groups; "
                         "use brute_force_endomorphisms for small groups")
    n = group.family_params
    rot = lambda k: k % n                 # index of a^k
    ref = lambda k: n + (k % n)           # index of a^k b
    out: List[Endomorphism] = []

    def add(family, s, t, a_img, b_img, gen_images):
        images = _dihedral_images(group, a_img, b_img)
        out.append(Endomorphism(group, images, gen_images, family=family,
                                s=s, t=t, check=True))

    if n % 2:
        add("sigma-1", None, None, rot(0), rot(0), {"a": (), "b": ()})
        for s in range(1, n):
            for t in range(n):
                add("sigma0", s, t, rot(s), ref(t),
                    {"a": parse_word(f"a^{s}"), "b": parse_word(f"a^{t}*b" if t else "b")})
        for t in range(n):
            # a collapses to the identity; no closed-form layer applies
            add("sigma3", 0, t, rot(0), ref(t),
                {"a": (), "b": parse_word(f"a^{t}*b" if t else "b")})
    else:
        half = n // 2
        for s in range(1, n):
            if s == half:
                continue
            for t in range(n):
                add("sigma1", s, t, rot(s), ref(t),
                    {"a": parse_word(f"a^{s}"), "b": parse_word(f"a^{t}*b" if t else "b")})
        for s in (0, half):
            for t in (0, half):
                add("sigma2", s, t, rot(s), rot(t),
                    {"a": parse_word(f"a^{s}") if s else (),
                     "b": parse_word(f"a^{t}") if t else ()})
        for s in (0, half):
            for t in range(n):
                add("sigma3", s, t, rot(s), ref(t),
                    {"a": parse_word(f"a^{s}") if s else (),
                     "b": parse_word(f"a^{t}*b" if t else "b")})
        for s in range(n):
            for t in (s, s + half):
                add("sigma4", s, t % n, ref(s), ref(t),
                    {"a": parse_word(f"a^{s}*b" if s else "b"),
                     "b": parse_word(f"a^{t % n}*b" if t % n else "b")})
        for s in range(n):
            for t in (0, half):
                add("sigma5", s, t, ref(s), rot(t),
                    {"a": parse_word(f"a^{s}*b" if s else "b"),
                     "b": parse_word(f"a^{t}") if t else ()})
    expected = n * n + 1 if n % 2 else (n + 2) ** 2
    if len(out) != expected:
        raise AssertionError(f"endomorphism inventory has {len(out)} maps, expected {expected}")
    return out


def _tag_dihedral(endo: Endomorphism) -> Endomorphism:
    """Re-tag a dihedral endomorphism with its family and (s, t) parameters."""
    G = endo.group
    n = G.family_params
    a_img, b_img = endo.images[1 % G.order], endo.images[G.generator_index("b")]
    a_rot, b_rot = a_img < n, b_img < n
    family, s, t = "none", None, None
    if a_rot and b_rot:
        s, t = a_img, b_img
        family = "sigma-1" if (n % 2 and s == 0 and t == 0) else "sigma2"
    elif a_rot:
        s, t = a_img, b_img - n
        if n % 2:
            family = "sigma0" if s else "sigma3"
        else:
            family = "sigma3" if s in (0, n // 2) else "sigma1"
    elif b_rot:
        family, s, t = "sigma5", a_img - n, b_img
    else:
        family, s, t = "sigma4", a_img - n, b_img - n
    return Endomorphism(G, endo.images, endo.generator_images,
                        family=family, s=s, t=t, check=False)


@dataclass(frozen=True)
class DihedralEndoParams:
    """Derived parameters of a sigma0/sigma1 dihedral endomorphism."""

    n: int
    s: int
    t: int
    m: int   # order of the rotation image a^s
    d: int   # n / m
    j0: int  # t mod s

    @classmethod
    def from_endo(cls, endo: Endomorphism) -> "DihedralEndoParams":
        if endo.family not in ("sigma0", "sigma1"):
            raise ValueError(f"no derived parameters for family {endo.family}")
        G = endo.group
        n = G.family_params
        s, t = endo.s, endo.t
        m = G.element_order(s % n)
        d = n // m
        j0 = t % s
        params = cls(n=n, s=s, t=t, m=m, d=d, j0=j0)
        if params.m * params.d != n:
            raise AssertionError("m*d != n")
        return params
