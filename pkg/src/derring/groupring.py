"""The group algebra FG: coefficient vectors indexed by the group listing.

Elements are dense coefficient vectors over an exact field.  The grammar
for element literals is ``+``/``-`` separated terms, each ``coef*word``,
a bare ``word`` (coefficient 1) or a bare coefficient (identity term),
e.g. ``1 + a + 2*a^3*b`` or ``2*x^5 + x``.
"""

from __future__ import annotations

from typing import List, Sequence

from .groups import FiniteGroup, parse_word
from .linalg import Field, Matrix


class GroupRingElement:
    __slots__ = ("group", "field", "coeffs")

    def __init__(self, group: FiniteGroup, field: Field, coeffs: Sequence, coerce: bool = True):
        if len(coeffs) != group.order:
            raise ValueError("coefficient vector length must equal the group order")
        self.group = group
        self.field = field
        self.coeffs = [field.coerce(c) for c in coeffs] if coerce else list(coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, group: FiniteGroup, field: Field) -> "GroupRingElement":
        return cls(group, field, [field.zero()] * group.order, coerce=False)

    @classmethod
    def one(cls, group: FiniteGroup, field: Field) -> "GroupRingElement":
        return cls.basis(group, field, group.identity)

    @classmethod
    def basis(cls, group: FiniteGroup, field: Field, index: int) -> "GroupRingElement":
        coeffs = [field.zero()] * group.order
        coeffs[index] = field.one()
        return cls(group, field, coeffs, coerce=False)

    def copy(self) -> "GroupRingElement":
        return GroupRingElement(self.group, self.field, list(self.coeffs), coerce=False)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        zero = self.field.zero()
        return all(c == zero for c in self.coeffs)

    def support(self) -> List[int]:
        zero = self.field.zero()
        return [i for i, c in enumerate(self.coeffs) if c != zero]

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement) and other.group is self.group
                and other.field == self.field and other.coeffs == self.coeffs)

    def _check_compatible(self, other: "GroupRingElement"):
        if other.group is not self.group or other.field != self.field:
            raise ValueError("operands live in different group rings")

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        F = self.field
        return GroupRingElement(self.group, F,
                                [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)],
                                coerce=False)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        F = self.field
        return GroupRingElement(self.group, F,
                                [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)],
                                coerce=False)

    def __neg__(self) -> "GroupRingElement":
        F = self.field
        return GroupRingElement(self.group, F, [F.neg(a) for a in self.coeffs], coerce=False)

    def scale(self, scalar) -> "GroupRingElement":
        F = self.field
        c = F.coerce(scalar)
        return GroupRingElement(self.group, F, [F.mul(c, a) for a in self.coeffs], coerce=False)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        """Convolution product over the group."""
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_compatible(other)
        F, G = self.field, self.group
        mul = G.mul
        zero = F.zero()
        out = [zero] * G.order
        p = F.p
        for g, a in enumerate(self.coeffs):
            if a == zero:
                continue
            row = mul[g]
            for h, b in enumerate(other.coeffs):
                if b == zero:
                    continue
                k = row[h]
                out[k] = (out[k] + a * b) % p if p else out[k] + a * b
        return GroupRingElement(G, F, out, coerce=False)

    def left_mul_elem(self, g: int) -> "GroupRingElement":
        """g * self for a group basis element g (index shift)."""
        G = self.group
        out = [self.field.zero()] * G.order
        row = G.mul[g]
        for c, a in enumerate(self.coeffs):
            out[row[c]] = a
        return GroupRingElement(G, self.field, out, coerce=False)

    def right_mul_elem(self, g: int) -> "GroupRingElement":
        G = self.group
        out = [self.field.zero()] * G.order
        mul = G.mul
        for c, a in enumerate(self.coeffs):
            out[mul[c][g]] = a
        return GroupRingElement(G, self.field, out, coerce=False)

    def __repr__(self):
        return f"<{format_element(self)}>"


def add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def scalar_mul(c, a: GroupRingElement) -> GroupRingElement:
    return a.scale(c)


def mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def apply_endo(sigma, alpha: GroupRingElement) -> GroupRingElement:
    """Linear extension of an endomorphism: sum of a_g sigma(g).

    Accepts a group Endomorphism or any object exposing per-basis ring
    images through a ``ring_images`` attribute (verified algebra
    endomorphisms use this).
    """
    G, F = alpha.group, alpha.field
    ring_images = getattr(sigma, "ring_images", None)
    if ring_images is not None:
        out = GroupRingElement.zero(G, F)
        for g, a in enumerate(alpha.coeffs):
            if a != 0:
                out = out + ring_images[g].scale(a)
        return out
    images = sigma.images
    zero = F.zero()
    out = [zero] * G.order
    for g, a in enumerate(alpha.coeffs):
        if a != zero:
            k = images[g]
            out[k] = F.add(out[k], a)
    return GroupRingElement(G, F, out, coerce=False)


# -- centralizers -------------------------------------------------------------

def _commutator_map_columns(beta: GroupRingElement, sign: int) -> Matrix:
    """Matrix of alpha -> alpha*beta - sign*(beta*alpha) in the group basis."""
    G, F = beta.group, beta.field
    cols = []
    for g in range(G.order):
        e = GroupRingElement.basis(G, F, g)
        image = e * beta - (beta * e).scale(sign)
        cols.append(image.coeffs)
    return Matrix.from_cols(F, cols)


def centralizer_basis(beta: GroupRingElement) -> List[GroupRingElement]:
    """Basis of {alpha : alpha*beta = beta*alpha}, in echelon order."""
    m = _commutator_map_columns(beta, 1)
    return [GroupRingElement(beta.group, beta.field, v, coerce=False)
            for v in m.kernel_basis()]


def anticentralizer_basis(beta: GroupRingElement) -> List[GroupRingElement]:
    """Basis of {alpha : alpha*beta = -beta*alpha}."""
    m = _commutator_map_columns(beta, -1)
    return [GroupRingElement(beta.group, beta.field, v, coerce=False)
            for v in m.kernel_basis()]


# -- parsing and formatting ---------------------------------------------------

def _split_terms(text: str) -> List[tuple]:
    terms = []
    sign, token = 1, ""
    for ch in text:
        if ch == "+":
            if token.strip():
                terms.append((sign, token.strip()))
            sign, token = 1, ""
        elif ch == "-" and not token.rstrip().endswith("^"):
            # a minus right after ^ is a negative exponent, not a term break
            if token.strip():
                terms.append((sign, token.strip()))
            sign, token = -1, ""
        else:
            token += ch
    if token.strip():
        terms.append((sign, token.strip()))
    return terms


def parse_element(group: FiniteGroup, field: Field, text: str) -> GroupRingElement:
    """Parse an element literal like ``1 + a + 2*a^3*b``."""
    out = GroupRingElement.zero(group, field)
    coeffs = out.coeffs
    for sign, term in _split_terms(text):
        parts = term.split("*")
        coef = field.one()
        start = 0
        head = parts[0].strip()
        if head and (head[0].isdigit() or "/" in head):
            coef = field.coerce(head)
            start = 1
        word_text = "*".join(parts[start:]) if start < len(parts) else "1"
        idx = group.eval_word(parse_word(word_text or "1"))
        if sign < 0:
            coef = field.neg(coef)
        coeffs[idx] = field.add(coeffs[idx], coef)
    return out


def format_element(alpha: GroupRingElement) -> str:
    F = alpha.field
    parts = []
    for i, c in enumerate(alpha.coeffs):
        if c == F.zero():
            continue
        name = alpha.group.names[i]
        if c == F.one():
            parts.append(name if name != "1" else "1")
        elif name == "1":
            parts.append(str(c))
        else:
            parts.append(f"{c}*{name}")
    return " + ".join(parts) if parts else "0"
