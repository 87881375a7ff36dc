"""Graded presentations: weighted polynomial rings and homogeneous quotients.

A presentation is a coefficient field, an ordered list of weighted
variables, and homogeneous relators of internal degree >= 2 (so the
kernel sits inside the square of the maximal ideal).  An optional base
presentation over the same variables, whose relators form a prefix of
ours, encodes a surjection base ->> quotient.

Everything is finite linear algebra per internal degree: the degree-d
monomials of the quotient are the complement of the relator-multiple
span, selected by reduced row echelon pivoting under the fixed monomial
order (graded lexicographic for the declared variable order; within one
degree that is descending lex on exponent tuples).  Per-degree data is
cached idempotently, so instances are safe for concurrent read-only use.
"""

import re

from .fields import field_from_spec


class PresentationError(ValueError):
    pass


_TOKEN = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-|\S")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def parse_polynomial(text, names):
    """Parse '3*x^2*y - y^3' into {exponent tuple: int coefficient}.

    Grammar: signed terms joined by + or -; a term is integer and
    variable-power factors joined by *; exponents are positive integers.
    """
    if not isinstance(text, str) or not text.strip():
        raise PresentationError("empty polynomial")
    index = {nm: i for i, nm in enumerate(names)}
    toks = _TOKEN.findall(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def fail(msg):
        raise PresentationError("cannot parse %r: %s" % (text, msg))

    poly = {}
    sign = 1
    first = True
    while pos < len(toks):
        # optional leading sign / mandatory separator between terms
        t = peek()
        if t == "+" or t == "-":
            sign = -1 if t == "-" else 1
            pos += 1
        elif not first:
            fail("expected '+' or '-' before %r" % t)
        else:
            sign = 1
        first = False
        # one term: factors joined by '*'
        coeff = sign
        expo = [0] * len(names)
        nfactors = 0
        while True:
            t = peek()
            if t is None:
                break
            if t.isdigit():
                coeff *= int(t)
                pos += 1
            elif _NAME.match(t):
                if t not in index:
                    fail("unknown variable %r" % t)
                pos += 1
                e = 1
                if peek() == "^":
                    pos += 1
                    u = peek()
                    if u is None or not u.isdigit():
                        fail("expected integer exponent after '^'")
                    e = int(u)
                    if e < 1:
                        fail("exponent must be >= 1")
                    pos += 1
                expo[index[t]] += e
            else:
                fail("unexpected token %r" % t)
            nfactors += 1
            if peek() == "*":
                pos += 1
                if peek() is None or peek() in ("+", "-", "*", "^"):
                    fail("dangling '*'")
                continue
            break
        if nfactors == 0:
            fail("empty term")
        mono = tuple(expo)
        c = poly.get(mono, 0) + coeff
        if c:
            poly[mono] = c
        else:
            poly.pop(mono, None)
    return poly


def _monomials(weights, d):
    # descending lex within fixed weighted degree d
    if not weights:
        return [()] if d == 0 else []
    out = []
    w0 = weights[0]
    rest = weights[1:]
    for e in range(d // w0, -1, -1):
        for tail in _monomials(rest, d - e * w0):
            out.append((e,) + tail)
    return out


class GradedPiece:
    """One internal degree of a graded vector space: an ordered monomial basis."""

    __slots__ = ("degree", "monomials")

    def __init__(self, degree, monomials):
        self.degree = degree
        self.monomials = tuple(monomials)

    @property
    def dimension(self):
        return len(self.monomials)

    def __repr__(self):
        return "GradedPiece(d=%d, dim=%d)" % (self.degree, len(self.monomials))


class Presentation:
    """Weighted graded quotient ring, presented by homogeneous relators."""

    def __init__(self, field, variables, relators, base=None):
        names = [v[0] for v in variables]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate variable names")
        for nm, w in variables:
            if not _NAME.match(nm or ""):
                raise PresentationError("bad variable name %r" % (nm,))
            if not isinstance(w, int) or w < 1:
                raise PresentationError("variable %s needs integer degree >= 1" % nm)
        self.field = field
        self.variables = tuple((nm, w) for nm, w in variables)
        self.names = tuple(names)
        self.weights = tuple(w for _, w in variables)
        rels = []
        for f in relators:
            if not isinstance(f, dict):
                f = parse_polynomial(f, self.names)
            if not f:
                raise PresentationError("zero relator")
            degs = {self.degree_of(m) for m in f}
            if len(degs) != 1:
                raise PresentationError("relator is not homogeneous")
            d = degs.pop()
            if d < 2:
                raise PresentationError(
                    "relator of internal degree %d: kernel must lie inside "
                    "the square of the maximal ideal" % d)
            if any(sum(m) < 2 for m in f):
                raise PresentationError(
                    "relator with a linear term: kernel must lie inside "
                    "the square of the maximal ideal")
            rels.append(dict(f))
        self.relators = tuple(rels)
        if base is not None:
            if base.field != field:
                raise PresentationError("base has a different coefficient field")
            if base.variables != self.variables:
                raise PresentationError("base has different variables")
            if tuple(base.relators) != self.relators[:len(base.relators)]:
                raise PresentationError("base relators are not a prefix of relators")
        self.base = base
        self._cache = {}

    # -- construction -------------------------------------------------

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise PresentationError("presentation must be a JSON object")
        for key in ("field", "variables", "relators"):
            if key not in doc:
                raise PresentationError("presentation is missing %r" % key)
        field = field_from_spec(doc["field"])
        variables = []
        for v in doc["variables"]:
            if not isinstance(v, dict) or "name" not in v or "degree" not in v:
                raise PresentationError("variable entries need 'name' and 'degree'")
            variables.append((v["name"], v["degree"]))
        base = None
        if doc.get("base_relators") is not None:
            base = cls(field, variables, doc["base_relators"])
            n = len(base.relators)
            rel_polys = [parse_polynomial(r, tuple(v[0] for v in variables))
                         if isinstance(r, str) else dict(r)
                         for r in doc["relators"]]
            if tuple(base.relators) != tuple(rel_polys[:n]):
                raise PresentationError("base_relators must be a prefix of relators")
            return cls(field, variables, rel_polys, base=base)
        return cls(field, variables, doc["relators"], base=base)

    def to_json(self):
        doc = {
            "field": self.field.spec(),
            "variables": [{"name": nm, "degree": w} for nm, w in self.variables],
            "relators": [self.poly_str(f) for f in self.relators],
        }
        if self.base is not None:
            doc["base_relators"] = [self.poly_str(f) for f in self.base.relators]
        return doc

    def free_base(self):
        """The declared base, or the free polynomial ring on the same variables."""
        if self.base is not None:
            return self.base
        key = ("free",)
        if key not in self._cache:
            self._cache[key] = Presentation(self.field, self.variables, ())
        return self._cache[key]

    # -- monomial bookkeeping ------------------------------------------

    def degree_of(self, mono):
        return sum(e * w for e, w in zip(mono, self.weights))

    def monomials(self, d):
        """All monomials of weighted degree d in descending lex order."""
        key = ("monos", d)
        if key not in self._cache:
            if d < 0:
                self._cache[key] = ()
            else:
                self._cache[key] = tuple(_monomials(self.weights, d))
        return self._cache[key]

    def mono_str(self, mono):
        parts = []
        for nm, e in zip(self.names, mono):
            if e == 1:
                parts.append(nm)
            elif e > 1:
                parts.append("%s^%d" % (nm, e))
        return "*".join(parts) if parts else "1"

    def poly_str(self, poly):
        """Deterministic string form of {mono: coeff} (field or int coeffs)."""
        if not poly:
            return "0"
        out = []
        for mono in sorted(poly, key=lambda m: (self.degree_of(m),) + tuple(-e for e in m)):
            c = poly[mono]
            cs = c if isinstance(c, str) else str(c)
            ms = self.mono_str(mono)
            if ms == "1":
                term = cs
            elif cs == "1":
                term = ms
            elif cs == "-1":
                term = "-" + ms
            else:
                term = "%s*%s" % (cs, ms)
            if out and not term.startswith("-"):
                out.append("+ " + term)
            elif out:
                out.append("- " + term[1:])
            else:
                out.append(term)
        return " ".join(out)

    # -- per-degree quotient structure ---------------------------------

    def _degree_data(self, d):
        """(index map, replacement dict, standard index tuple) in degree d.

        replacement maps a pivot monomial of the relator-multiple span to
        the equivalent combination of standard monomials.
        """
        key = ("deg", d)
        if key in self._cache:
            return self._cache[key]
        from . import linalg

        monos = self.monomials(d)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for f in self.relators:
            e = self.degree_of(next(iter(f)))
            if e > d:
                continue
            for m in self.monomials(d - e):
                row = {}
                for fm, c in f.items():
                    prod = tuple(a + b for a, b in zip(m, fm))
                    x = self.field.add(row.get(index[prod], self.field.zero),
                                       self.field.from_int(c))
                    if self.field.is_zero(x):
                        row.pop(index[prod], None)
                    else:
                        row[index[prod]] = x
                if row:
                    rows.append(row)
        pivots, red = linalg.rref(rows, self.field)
        pivset = set(pivots)
        std = tuple(i for i in range(len(monos)) if i not in pivset)
        repl = {}
        for p in pivots:
            row = red[p]
            repl[monos[p]] = {monos[j]: self.field.neg(c)
                              for j, c in row.items() if j != p}
        data = (index, repl, std)
        self._cache[key] = data
        return data

    def quotient_basis(self, d):
        """Standard monomials of degree d as a GradedPiece."""
        key = ("qb", d)
        if key not in self._cache:
            monos = self.monomials(d)
            _, _, std = self._degree_data(d)
            self._cache[key] = GradedPiece(d, tuple(monos[i] for i in std))
        return self._cache[key]

    def basis_index(self, d):
        key = ("qbi", d)
        if key not in self._cache:
            self._cache[key] = {m: i for i, m in
                                enumerate(self.quotient_basis(d).monomials)}
        return self._cache[key]

    def hilbert(self, D):
        """Quotient dimensions in internal degrees 0..D."""
        return [self.quotient_basis(d).dimension for d in range(D + 1)]

    def reduce_monomial(self, mono):
        """Normal form of a (not necessarily standard) monomial: {std mono: scalar}."""
        key = ("red", mono)
        if key in self._cache:
            return self._cache[key]
        d = self.degree_of(mono)
        _, repl, _ = self._degree_data(d)
        if mono in repl:
            out = dict(repl[mono])
        else:
            out = {mono: self.field.one}
        self._cache[key] = out
        return out

    def normal_form(self, poly):
        """Reduce {mono: field scalar} to standard monomials (any degrees mixed)."""
        out = {}
        for mono, c in poly.items():
            for sm, r in self.reduce_monomial(mono).items():
                x = self.field.add(out.get(sm, self.field.zero), self.field.mul(c, r))
                if self.field.is_zero(x):
                    out.pop(sm, None)
                else:
                    out[sm] = x
        return out

    def from_int_poly(self, poly):
        """Integer-coefficient polynomial -> reduced quotient element."""
        return self.normal_form({m: self.field.from_int(c) for m, c in poly.items()})

    def multiply(self, a, b):
        """Product of two reduced quotient elements, reduced again."""
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = self.field.mul(c1, c2)
                prod = tuple(x + y for x, y in zip(m1, m2))
                for sm, r in self.reduce_monomial(prod).items():
                    x = self.field.add(out.get(sm, self.field.zero), self.field.mul(c, r))
                    if self.field.is_zero(x):
                        out.pop(sm, None)
                    else:
                        out[sm] = x
        return out

    def coords(self, elem, d):
        """Sparse coordinates of a reduced degree-d element in the quotient basis."""
        index = self.basis_index(d)
        out = {}
        for m, c in elem.items():
            if m not in index:
                raise PresentationError("element has a term of the wrong degree")
            out[index[m]] = c
        return out

    def element(self, coords, d):
        basis = self.quotient_basis(d).monomials
        return {basis[i]: c for i, c in coords.items()}

    def __repr__(self):
        return "Presentation(%r, vars=%s, relators=%d%s)" % (
            self.field, ",".join(self.names), len(self.relators),
            ", base" if self.base is not None else "")


def parse_presentation(doc):
    """JSON object -> validated Presentation (the CLI input format)."""
    return Presentation.from_json(doc)
