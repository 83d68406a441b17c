"""Construction, verification and classification of twisted derivations.

A (sigma, tau)-derivation D of FG satisfies
``D(gh) = D(g) tau(h) + sigma(g) D(h)`` and is stored as the full table
of images of the listed group elements.  Generator images extend to a
derivation exactly when the induced free-word evaluation kills every
relator; that criterion is linear in the images, which is what
``derivation_space`` solves.  A second, independent solver treats all
group images as unknowns constrained by every product pair and is kept
as an oracle against the word-evaluation route.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import DerivationRejected
from .groups import Endomorphism, FiniteGroup, Word, word_str
from .groupring import GroupRingElement
from .linalg import Field, Matrix, sparse_rank


class AlgebraEndo:
    """A unital algebra endomorphism of FG given by its basis images.

    Verified multiplicative on every basis pair; used where arguments
    beyond group-induced maps are allowed (the averaging construction).
    """

    __slots__ = ("group", "field", "ring_images")

    def __init__(self, group: FiniteGroup, field: Field,
                 ring_images: Sequence[GroupRingElement], check: bool = True):
        if len(ring_images) != group.order:
            raise ValueError("need one image per group element")
        self.group = group
        self.field = field
        self.ring_images = list(ring_images)
        if check:
            if not self.ring_images[group.identity] == GroupRingElement.one(group, field):
                raise ValueError("algebra endomorphism must fix the identity")
            for g in range(group.order):
                for h in range(group.order):
                    lhs = self.ring_images[group.mul[g][h]]
                    rhs = self.ring_images[g] * self.ring_images[h]
                    if lhs != rhs:
                        raise ValueError(
                            f"images are not multiplicative at "
                            f"({group.names[g]}, {group.names[h]})")

    @classmethod
    def from_matrix(cls, group: FiniteGroup, field: Field, matrix: Matrix) -> "AlgebraEndo":
        if matrix.rows != group.order or matrix.cols != group.order:
            raise ValueError("matrix must be |G| x |G|")
        cols = matrix.transpose().data
        images = [GroupRingElement(group, field, col) for col in cols]
        return cls(group, field, images)

    @classmethod
    def from_group_endo(cls, endo: Endomorphism, field: Field) -> "AlgebraEndo":
        G = endo.group
        images = [GroupRingElement.basis(G, field, endo.images[g]) for g in range(G.order)]
        return cls(G, field, images, check=False)


EndoLike = Union[Endomorphism, AlgebraEndo]


def _is_group_endo(sig: EndoLike) -> bool:
    return isinstance(sig, Endomorphism)


class GeneratorMap:
    """A map from named group elements into FG (images of generators).

    ``support`` defaults to the group's own generators; other generating
    sets can be supplied, which the commutative basis construction uses.
    """

    __slots__ = ("group", "field", "images", "support")

    def __init__(self, group: FiniteGroup, field: Field,
                 images: Dict[str, GroupRingElement],
                 support: Optional[Dict[str, int]] = None):
        self.group = group
        self.field = field
        self.images = dict(images)
        self.support = dict(support) if support is not None else {
            name: idx for name, idx in group.generators}
        missing = set(self.support) - set(self.images)
        if missing:
            raise ValueError(f"missing images for {sorted(missing)}")

    @classmethod
    def zero(cls, group: FiniteGroup, field: Field) -> "GeneratorMap":
        return cls(group, field,
                   {name: GroupRingElement.zero(group, field) for name, _ in group.generators})


class TwistedDerivation:
    """A (sigma, tau)-derivation stored as its full table of group images."""

    __slots__ = ("group", "field", "sigma", "tau", "table", "provenance", "witness")

    def __init__(self, group: FiniteGroup, field: Field, sigma: EndoLike, tau: EndoLike,
                 table: Sequence[GroupRingElement], provenance: str = "table",
                 witness: Optional[GroupRingElement] = None):
        if len(table) != group.order:
            raise ValueError("derivation table must cover every group element")
        self.group = group
        self.field = field
        self.sigma = sigma
        self.tau = tau
        self.table = list(table)
        self.provenance = provenance
        self.witness = witness

    @classmethod
    def zero(cls, group: FiniteGroup, field: Field, sigma: EndoLike, tau: EndoLike):
        z = GroupRingElement.zero(group, field)
        return cls(group, field, sigma, tau, [z] * group.order, provenance="zero")

    def image_of(self, g: int) -> GroupRingElement:
        return self.table[g]

    def __call__(self, alpha: GroupRingElement) -> GroupRingElement:
        out = GroupRingElement.zero(self.group, self.field)
        for g, a in enumerate(alpha.coeffs):
            if a != 0:
                out = out + self.table[g].scale(a)
        return out

    def flat(self) -> List:
        return [c for elem in self.table for c in elem.coeffs]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.table)

    def __eq__(self, other):
        return (isinstance(other, TwistedDerivation) and other.group is self.group
                and other.field == self.field
                and all(a == b for a, b in zip(other.table, self.table)))

    def __repr__(self):
        return f"TwistedDerivation({self.group.describe()}, {self.field}, {self.provenance})"


# -- free-word evaluation ----------------------------------------------------

def free_eval(f: GeneratorMap, sigma: Endomorphism, tau: Endomorphism,
              word: Word) -> GroupRingElement:
    """Evaluate the unique product-rule extension of f on a free word.

    Letters may be inverses; the image of an inverse letter x^-1 is
    ``-sigma(x^-1) f(x) tau(x^-1)``, and a length-m word contributes one
    term per letter, sandwiched between sigma of its prefix and tau of
    its suffix.  The empty word evaluates to 0.
    """
    G, F = f.group, f.field
    letters = list(word)
    m = len(letters)
    out = GroupRingElement.zero(G, F)
    if m == 0:
        return out
    elems = []
    for name, sign in letters:
        x = f.support[name]
        elems.append(x if sign > 0 else G.inv[x])
    # sigma of prefixes and tau of suffixes as group elements
    pre = [G.identity] * (m + 1)
    for i in range(m):
        pre[i + 1] = G.mul[pre[i]][sigma.images[elems[i]]]
    suf = [G.identity] * (m + 1)
    for i in range(m - 1, -1, -1):
        suf[i] = G.mul[tau.images[elems[i]]][suf[i + 1]]
    for i, (name, sign) in enumerate(letters):
        img = f.images[name]
        if img.is_zero():
            continue
        if sign > 0:
            term = img.left_mul_elem(pre[i]).right_mul_elem(suf[i + 1])
        else:
            term = -(img.left_mul_elem(pre[i + 1]).right_mul_elem(suf[i]))
        out = out + term
    return out


def extend_from_generators(f: GeneratorMap, sigma: Endomorphism,
                           tau: Optional[Endomorphism] = None) -> TwistedDerivation:
    """Extend generator images to a derivation when every relator image vanishes.

    Raises DerivationRejected carrying the first failing relator and its
    nonzero value.  Groups without a relator list are handled by building
    the table along normal forms and running the full product-rule check.
    """
    if tau is None:
        tau = sigma
    G, F = f.group, f.field
    if G.relators is not None:
        for rel in G.relators:
            value = free_eval(f, sigma, tau, rel)
            if not value.is_zero():
                raise DerivationRejected(
                    f"relator {word_str(rel)} maps to a nonzero element",
                    relator=rel, value=value)
    table = [free_eval(f, sigma, tau, G.normal_forms[g]) for g in range(G.order)]
    D = TwistedDerivation(G, F, sigma, tau, table, provenance="extended")
    if G.relators is None:
        bad = product_rule_violation(D)
        if bad is not None:
            raise DerivationRejected(
                f"images do not extend: product rule fails at "
                f"({G.names[bad[0]]}, {G.names[bad[1]]})", pair=bad)
    return D


def product_rule_violation(D: TwistedDerivation) -> Optional[Tuple[int, int]]:
    """First pair (g, h) violating the twisted product rule, or None."""
    G, F = D.group, D.field
    sigma, tau = D.sigma, D.tau
    group_sigma = _is_group_endo(sigma)
    group_tau = _is_group_endo(tau)
    for g in range(G.order):
        Dg = D.table[g]
        for h in range(G.order):
            lhs = D.table[G.mul[g][h]]
            if group_tau:
                rhs = Dg.right_mul_elem(tau.images[h])
            else:
                rhs = Dg * tau.ring_images[h]
            if group_sigma:
                rhs = rhs + D.table[h].left_mul_elem(sigma.images[g])
            else:
                rhs = rhs + sigma.ring_images[g] * D.table[h]
            if lhs != rhs:
                return (g, h)
    return None


def verify_derivation(D: TwistedDerivation) -> Optional[Tuple[int, int]]:
    """None when D satisfies the product rule on all pairs, else the pair."""
    return product_rule_violation(D)


# -- inner derivations -------------------------------------------------------

def inner_derivation(beta: GroupRingElement, sigma: EndoLike, tau: EndoLike) -> TwistedDerivation:
    """The derivation g -> beta tau(g) - sigma(g) beta."""
    G, F = beta.group, beta.field
    table = []
    for g in range(G.order):
        if _is_group_endo(tau):
            left = beta.right_mul_elem(tau.images[g])
        else:
            left = beta * tau.ring_images[g]
        if _is_group_endo(sigma):
            right = beta.left_mul_elem(sigma.images[g])
        else:
            right = sigma.ring_images[g] * beta
        table.append(left - right)
    return TwistedDerivation(G, F, sigma, tau, table, provenance="inner", witness=beta)


def is_inner(D: TwistedDerivation) -> Optional[GroupRingElement]:
    """A witness beta with D = D_beta, or None when D is not inner.

    Solves the linear system beta tau(g) - sigma(g) beta = D(g) over the
    coefficient vector of beta; the witness is unique only up to the
    twisted center.
    """
    G, F = D.group, D.field
    n = G.order
    sigma, tau = D.sigma, D.tau
    rows: List[List] = []
    rhs: List = []
    cols = []
    for c in range(n):
        e = GroupRingElement.basis(G, F, c)
        images = []
        for g in range(n):
            if _is_group_endo(tau):
                left = e.right_mul_elem(tau.images[g])
            else:
                left = e * tau.ring_images[g]
            if _is_group_endo(sigma):
                right = e.left_mul_elem(sigma.images[g])
            else:
                right = sigma.ring_images[g] * e
            images.append(left - right)
        cols.append(images)
    for g in range(n):
        for t in range(n):
            rows.append([cols[c][g].coeffs[t] for c in range(n)])
            rhs.append(D.table[g].coeffs[t])
    solution = Matrix(F, rows, coerce=False).solve(rhs)
    if solution is None:
        return None
    return GroupRingElement(G, F, solution, coerce=False)


def averaging_witness(D: TwistedDerivation) -> GroupRingElement:
    """The averaged inner witness (1/|G|) sum of D(g^-1) tau(g).

    Only needs tau to be a verified unital algebra endomorphism; requires
    |G| to be invertible in the field.
    """
    G, F = D.group, D.field
    n = G.order
    if F.p and n % F.p == 0:
        raise DerivationRejected(
            f"averaging needs |G| = {n} invertible, but the characteristic "
            f"{F.p} divides it")
    acc = GroupRingElement.zero(G, F)
    tau = D.tau
    for g in range(n):
        term_src = D.table[G.inv[g]]
        if _is_group_endo(tau):
            acc = acc + term_src.right_mul_elem(tau.images[g])
        else:
            acc = acc + term_src * tau.ring_images[g]
    return acc.scale(F.inv(F.coerce(n)))


# -- solution spaces ---------------------------------------------------------

def derivation_space(field: Field, sigma: Endomorphism,
                     tau: Optional[Endomorphism] = None,
                     basis: bool = True) -> Tuple[int, Optional[List[TwistedDerivation]]]:
    """Dimension (and optionally a basis) of all (sigma, tau)-derivations.

    Unknowns are the generator images; each relator contributes |G|
    linear constraints through free-word evaluation.  Groups without a
    relator list fall back to the full pair-constraint solver.
    """
    if tau is None:
        tau = sigma
    G = sigma.group
    if G.relators is None:
        return derivation_space_full(field, sigma, tau, basis=basis)
    n = G.order
    gens = G.generators
    columns = []
    for name, _ in gens:
        zero_images = {gname: GroupRingElement.zero(G, field) for gname, _ in gens}
        for e in range(n):
            images = dict(zero_images)
            images[name] = GroupRingElement.basis(G, field, e)
            f = GeneratorMap(G, field, images)
            col: List = []
            for rel in G.relators:
                col.extend(free_eval(f, sigma, tau, rel).coeffs)
            columns.append(col)
    m = Matrix.from_cols(field, columns)
    kernel = m.kernel_basis()
    dim = len(kernel)
    if not basis:
        return dim, None
    out = []
    for vec in kernel:
        images = {}
        for k, (name, _) in enumerate(gens):
            images[name] = GroupRingElement(G, field, vec[k * n:(k + 1) * n], coerce=False)
        out.append(extend_from_generators(GeneratorMap(G, field, images), sigma, tau))
    return dim, out


def _pair_constraint_rows(field: Field, sigma: Endomorphism, tau: Endomorphism):
    """Sparse rows of the full product-rule system, three entries each."""
    G = sigma.group
    n = G.order
    mul, inv = G.mul, G.inv
    simg, timg = sigma.images, tau.images
    for g in range(n):
        for h in range(n):
            gh = mul[g][h]
            w = timg[h]
            v = simg[g]
            for t in range(n):
                row: Dict[int, int] = {}
                key = gh * n + t
                row[key] = row.get(key, 0) + 1
                key = g * n + mul[t][inv[w]]
                row[key] = row.get(key, 0) - 1
                key = h * n + mul[inv[v]][t]
                row[key] = row.get(key, 0) - 1
                yield row


def derivation_space_full(field: Field, sigma: Endomorphism,
                          tau: Optional[Endomorphism] = None,
                          basis: bool = True) -> Tuple[int, Optional[List[TwistedDerivation]]]:
    """Independent solver: all |G| images unknown, all product pairs constrained."""
    if tau is None:
        tau = sigma
    G = sigma.group
    n = G.order
    if not basis:
        rank = sparse_rank(field, _pair_constraint_rows(field, sigma, tau))
        return n * n - rank, None
    rows = []
    for sparse_row in _pair_constraint_rows(field, sigma, tau):
        dense = [field.zero()] * (n * n)
        for c, v in sparse_row.items():
            dense[c] = field.coerce(v)
        rows.append(dense)
    kernel = Matrix(field, rows, coerce=False).kernel_basis()
    out = []
    for vec in kernel:
        table = [GroupRingElement(G, field, vec[g * n:(g + 1) * n], coerce=False)
                 for g in range(n)]
        out.append(TwistedDerivation(G, field, sigma, tau, table, provenance="solver"))
    return len(kernel), out


# -- commutative constructions -------------------------------------------------

def _abelian_char_parts(group: FiniteGroup, p: int):
    """Split each cyclic factor into its p-part and p-regular part."""
    if group.family == "cyclic":
        factors = [group.family_params]
    elif group.family == "abelian":
        factors = list(group.family_params)
    else:
        raise ValueError("p-part decomposition needs a built-in commutative family")
    p_gens: List[Tuple[str, int]] = []
    reg_gens: List[Tuple[str, int]] = []
    for i, (name, idx) in enumerate(group.generators):
        size = factors[i]
        v = 1
        while size % p == 0:
            size //= p
            v *= p
        # generator^size has order v (the p-part), generator^v the rest
        if v > 1:
            p_gens.append((f"k{len(p_gens) + 1}", _pow_index(group, idx, size)))
        if size > 1:
            reg_gens.append((f"h{len(reg_gens) + 1}", _pow_index(group, idx, v)))
    return p_gens, reg_gens


def _pow_index(group: FiniteGroup, g: int, k: int) -> int:
    acc = group.identity
    for _ in range(k):
        acc = group.mul[acc][g]
    return acc


def abelian_basis(group: FiniteGroup, sigma: Endomorphism, field: Field) -> List[TwistedDerivation]:
    """Basis g*D_i of the sigma-derivations of a commutative group algebra.

    Over GF(p) the group splits into a p-part with generators k_1..k_r and
    a p-regular part; D_i sends k_j to delta_ij and the p-regular
    generators to 0.  Every returned derivation is verified; the list has
    r*|G| members.
    """
    if not field.p:
        raise ValueError("the commutative basis construction is stated over GF(p)")
    if not group.is_abelian():
        raise ValueError("group must be abelian")
    p_gens, reg_gens = _abelian_char_parts(group, field.p)
    if not p_gens:
        return []
    support = {name: idx for name, idx in p_gens + reg_gens}
    words = group.words_over(p_gens + reg_gens)
    zero = GroupRingElement.zero(group, field)
    seeds = []
    for i, (iname, _) in enumerate(p_gens):
        images = {name: zero for name, _ in p_gens + reg_gens}
        images[iname] = GroupRingElement.one(group, field)
        f = GeneratorMap(group, field, images, support=support)
        table = [free_eval(f, sigma, sigma, words[g]) for g in range(group.order)]
        D = TwistedDerivation(group, field, sigma, sigma, table, provenance="extended")
        bad = product_rule_violation(D)
        if bad is not None:
            raise DerivationRejected(
                f"basis construction fails the product rule at pair {bad} "
                f"for this endomorphism", pair=bad)
        seeds.append(D)
    out = []
    for g in range(group.order):
        for D in seeds:
            table = [D.table[h].left_mul_elem(g) for h in range(group.order)]
            out.append(TwistedDerivation(group, field, sigma, sigma, table,
                                         provenance="extended"))
    return out


def cyclic_power_derivation(group: FiniteGroup, sigma: Endomorphism,
                            value: GroupRingElement) -> TwistedDerivation:
    """Derivation of a cyclic group algebra from D(x) = value.

    The table is D(x^k) = k sigma(x)^(k-1) value; the candidate is
    accepted only when the full product-rule check passes (it fails
    exactly when n*value is nonzero).
    """
    if group.family != "cyclic":
        raise ValueError("power-formula derivations need a cyclic group")
    x = group.generator_index("x")
    sx = sigma.images[x]
    F = value.field
    table = [GroupRingElement.zero(group, F)]
    power = group.identity  # sigma(x)^(k-1) for k = 1
    for k in range(1, group.order):
        term = value.left_mul_elem(power).scale(F.coerce(k))
        table.append(term)
        power = group.mul[power][sx]
    D = TwistedDerivation(group, F, sigma, sigma, table, provenance="power-formula")
    bad = product_rule_violation(D)
    if bad is not None:
        g, h = bad
        raise DerivationRejected(
            f"power formula does not close: product rule fails at "
            f"({group.names[g]}, {group.names[h]})", pair=bad)
    return D
