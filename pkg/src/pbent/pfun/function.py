"""Truth-table p-ary functions on a field or on a pair of fields.

A *domain* is what the Walsh machinery needs to know about the inputs:
``p``, ``size``, ``dim`` (dimension over Z_p), ``digits`` (the Z_p
coordinates of every point), ``encode``, the pairing ``<a, x>`` and its
Gram matrix.  :class:`~pbent.galois.Field` implements this protocol for a
single field; :class:`PairDomain` implements it for F_q x F_q with the
pairing Tr(a1 x + a2 y).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from ..galois import Field, FieldElement


class PairDomain:
    """F_q x F_q for a field F_q; point (x, y) has index ``x + q * y``."""

    def __init__(self, field: Field):
        self.field = field
        self.p = field.p
        self.dim = 2 * field.n
        self.size = field.order**2
        q = field.order
        idx = np.arange(self.size, dtype=np.int64)
        self.digits = np.concatenate([field.digits[idx % q], field.digits[idx // q]], axis=1)
        self.place = self.p ** np.arange(self.dim, dtype=np.int64)
        z = np.zeros_like(field.gram)
        self.gram = np.block([[field.gram, z], [z, field.gram]])

    def __eq__(self, other):
        return isinstance(other, PairDomain) and other.field == self.field

    def __hash__(self):
        return hash(("pair", self.field.key()))

    def __repr__(self):
        return f"PairDomain({self.field!r})"

    def index(self, x, y) -> int:
        return int(_idx(x)) + self.field.order * int(_idx(y))

    def split(self, i):
        q = self.field.order
        i = np.asarray(i, dtype=np.int64)
        return i % q, i // q

    def encode(self, digits):
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self.place

    def add(self, a, b):
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.place

    def sub(self, a, b):
        return ((self.digits[a] - self.digits[b]) % self.p) @ self.place

    def neg(self, a):
        return ((-self.digits[a]) % self.p) @ self.place

    def elements(self):
        return np.arange(self.size, dtype=np.int64)

    def pairing(self, a, x):
        """Tr(a1 x1 + a2 x2), computed with field products (not the Gram matrix)."""
        a1, a2 = self.split(a)
        x1, x2 = self.split(x)
        f = self.field
        return (f.pairing(a1, x1) + f.pairing(a2, x2)) % self.p

    def format_element(self, i: int, annotate: bool = True) -> str:
        x, y = self.split(i)
        f = self.field
        return f"({f.format_element(int(x), annotate)}, {f.format_element(int(y), annotate)})"


def _idx(x):
    return x.index if isinstance(x, FieldElement) else x


def domain_kind(domain) -> str:
    return "pair" if isinstance(domain, PairDomain) else "single"


@dataclass(frozen=True, eq=False)
class PAryFunction:
    """A total map domain -> Z_p stored as a table indexed like the domain."""

    domain: object
    table: np.ndarray
    name: str = dc_field(default="", compare=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (self.domain.size,):
            raise ValueError(f"table has shape {t.shape}, domain has {self.domain.size} points")
        if t.size and (t.min() < 0 or t.max() >= self.domain.p):
            t = t % self.domain.p
        t = t.copy()
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def p(self):
        return self.domain.p

    @property
    def kind(self):
        return domain_kind(self.domain)

    def __call__(self, x):
        return int(self.table[int(_idx(x))])

    def __add__(self, other):
        if isinstance(other, PAryFunction):
            return PAryFunction(self.domain, (self.table + other.table) % self.p)
        return PAryFunction(self.domain, (self.table + int(other)) % self.p)

    def __sub__(self, other):
        if isinstance(other, PAryFunction):
            return PAryFunction(self.domain, (self.table - other.table) % self.p)
        return PAryFunction(self.domain, (self.table - int(other)) % self.p)

    def scale(self, c: int):
        return PAryFunction(self.domain, (self.table * int(c)) % self.p)

    def precompose(self, perm) -> "PAryFunction":
        """x -> f(perm[x]) for an index permutation array."""
        return PAryFunction(self.domain, self.table[np.asarray(perm, dtype=np.int64)])

    def __eq__(self, other):
        return (
            isinstance(other, PAryFunction)
            and other.domain == self.domain
            and np.array_equal(other.table, self.table)
        )

    def __hash__(self):
        return hash((self.domain, self.table.tobytes()))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<PAryFunction{label} on {self.domain!r}>"


def zero_function(domain) -> PAryFunction:
    return PAryFunction(domain, np.zeros(domain.size, dtype=np.int64), name="zero")


def random_function(domain, rng: np.random.Generator) -> PAryFunction:
    return PAryFunction(domain, rng.integers(0, domain.p, size=domain.size))


def linear_form(domain, u) -> np.ndarray:
    """Table of x -> <u, x> (Tr(ux) on a field, Tr(u1 x + u2 y) on a pair)."""
    return domain.pairing(int(_idx(u)), domain.elements())
