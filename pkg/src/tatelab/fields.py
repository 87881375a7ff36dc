"""Exact coefficient fields: the rationals and prime fields F_p.

All arithmetic is exact -- no floats anywhere in the engine.  Field
elements are plain Python values (``Fraction`` for Q, ``int`` in
``range(p)`` for F_p); the field object supplies the operations, so the
linear algebra and ring layers stay field-agnostic.
"""

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Rationals:
    """Arbitrary-precision rationals, normalized by Fraction."""

    kind = "Q"
    p = None
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return str(a)

    def spec(self):
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(("field", "Q"))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p for prime p; elements are ints reduced to range(p)."""

    kind = "Fp"

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError("field characteristic must be prime, got %r" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def to_str(self, a):
        return str(a % self.p)

    def spec(self):
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field", "Fp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()


def field_from_spec(spec):
    """Build a field from its JSON spec: {"type": "Q"} or {"type": "Fp", "p": 5}."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise FieldError("field spec must be an object with a 'type' key")
    kind = spec["type"]
    if kind == "Q":
        return QQ
    if kind == "Fp":
        if "p" not in spec:
            raise FieldError("field spec of type Fp needs a key 'p'")
        return PrimeField(spec["p"])
    raise FieldError("unknown field type %r (expected 'Q' or 'Fp')" % (kind,))
