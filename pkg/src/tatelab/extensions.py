"""Strictly graded-commutative extension towers over a graded ground ring.

A tower adjoins homologically graded variables to a ground presentation.
Odd-degree variables are exterior: they square to zero in every
characteristic, including 2.  Even-degree variables are ordinary
polynomial generators in a *plain* tower (the minimal-model flavor) and
divided-power generators in a *gamma* tower (the acyclic-closure
flavor), with basis {v^(e)} and

    v^(i) * v^(j) = binom(i+j, i) * v^(i+j)
    d(v^(e))      = d(v) * v^(e-1)            (gamma)
    d(v^e)        = e * d(v) * v^(e-1)        (plain)

Conventions fixed once and for all:

  * the differential follows the left Leibniz rule
        d(a*b) = d(a)*b + (-1)^{|a|} a*d(b);
  * a word is a canonical product  (base monomial) * v1^{e1} * v2^{e2} ...
    with the variables in adjunction order; reordering while multiplying
    picks up the usual Koszul sign, one -1 per odd-odd transposition;
  * piece bases pair every admissible exponent pattern with the standard
    monomials of the ground ring in the leftover internal degree, in a
    fixed enumeration order, so all matrices are reproducible.

Words are pairs (mono, ext) with mono a standard ground monomial and ext
a tuple of (variable index, exponent) pairs sorted by index.
"""

from math import comb

from . import linalg


class TowerError(ValueError):
    pass


EXTERIOR = "exterior"
POLYNOMIAL = "polynomial"
DIVIDED = "divided-power"


class ExtensionVariable:
    __slots__ = ("name", "hdeg", "ideg", "flavor", "dval", "index")

    def __init__(self, name, hdeg, ideg, flavor, dval, index):
        self.name = name
        self.hdeg = hdeg
        self.ideg = ideg
        self.flavor = flavor
        self.dval = dval
        self.index = index

    @property
    def odd(self):
        return self.hdeg % 2 == 1

    def __repr__(self):
        return "%s(%d,%d)" % (self.name, self.hdeg, self.ideg)


class Element:
    """Finite scalar combination of words of one tower."""

    __slots__ = ("tower", "terms")

    def __init__(self, tower, terms):
        self.tower = tower
        self.terms = terms

    @classmethod
    def zero(cls, tower):
        return cls(tower, {})

    @classmethod
    def from_word(cls, tower, word, coeff=None):
        c = tower.field.one if coeff is None else coeff
        if tower.field.is_zero(c):
            return cls(tower, {})
        return cls(tower, {word: c})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.tower is not other.tower:
            raise TowerError("elements belong to different towers")

    def __add__(self, other):
        self._check(other)
        f = self.tower.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = f.add(out.get(w, f.zero), c)
            if f.is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
        return Element(self.tower, out)

    def __neg__(self):
        f = self.tower.field
        return Element(self.tower, {w: f.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.tower.field
        if f.is_zero(c):
            return Element(self.tower, {})
        return Element(self.tower, {w: f.mul(c, x) for w, x in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        t = self.tower
        f = t.field
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = f.mul(c1, c2)
                for w, x in t._mul_words(w1, w2):
                    s = f.add(out.get(w, f.zero), f.mul(c, x))
                    if f.is_zero(s):
                        out.pop(w, None)
                    else:
                        out[w] = s
        return Element(t, out)

    def differential(self):
        t = self.tower
        out = Element.zero(t)
        for w, c in self.terms.items():
            out = out + t.word_differential(w).scale(c)
        return out

    def bidegree(self):
        """(homological, internal) bidegree; None for zero, error if mixed."""
        degs = {self.tower.word_bidegree(w) for w in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise TowerError("element is not bihomogeneous: %s" % sorted(degs))
        return degs.pop()

    def __eq__(self, other):
        return (isinstance(other, Element) and other.tower is self.tower
                and other.terms == self.terms)

    def __hash__(self):
        raise TypeError("Element is unhashable")

    def __str__(self):
        return self.tower.element_str(self)

    def __repr__(self):
        return "<Element %s>" % self


class ExtensionTower:
    """Ground presentation plus adjoined variables, with cached piece data.

    Towers are frozen once their builder returns them; ``adjoin`` is the
    builders' constructor step and drops exactly the cached pieces a new
    variable can touch.
    """

    def __init__(self, ground, flavor, nmax=None, dmax=None):
        if flavor not in ("plain", "gamma"):
            raise TowerError("flavor must be 'plain' or 'gamma'")
        self.ground = ground
        self.field = ground.field
        self.flavor = flavor
        self.nmax = nmax
        self.dmax = dmax
        self.variables = []
        self._cache = {}
        self._dwords = {}

    # -- construction ---------------------------------------------------

    def adjoin(self, name, hdeg, ideg, dval):
        if hdeg < 1 or ideg < 1:
            raise TowerError("adjoined variables need positive bidegree")
        if self.variables and hdeg < self.variables[-1].hdeg:
            raise TowerError("adjoin variables in weakly increasing homological degree")
        if hdeg % 2 == 1:
            flavor = EXTERIOR
        else:
            flavor = DIVIDED if self.flavor == "gamma" else POLYNOMIAL
        if dval is None:
            dval = Element.zero(self)
        if dval.tower is not self:
            raise TowerError("differential value belongs to a different tower")
        for w in dval.terms:
            for idx, _ in w[1]:
                if idx >= len(self.variables):
                    raise TowerError("differential value uses later variables")
        bid = dval.bidegree()
        if bid is not None and bid != (hdeg - 1, ideg):
            raise TowerError("differential value has bidegree %s, expected %s"
                             % (bid, (hdeg - 1, ideg)))
        if not dval.differential().is_zero():
            raise TowerError("differential value of %s is not a cycle" % name)
        var = ExtensionVariable(name, hdeg, ideg, flavor, dval, len(self.variables))
        self.variables.append(var)
        # a variable of homological degree h changes pieces at h and above,
        # and boundary data one step below
        cut = hdeg - 1
        for key in [k for k in self._cache if k[1] >= cut]:
            del self._cache[key]
        return var

    def variable_element(self, var):
        unit = (0,) * len(self.ground.names)
        return Element.from_word(self, (unit, ((var.index, 1),)))

    def unit_word(self):
        return ((0,) * len(self.ground.names), ())

    def ground_element(self, elem):
        """Reduced ground element {mono: scalar} -> degree-zero tower element."""
        return Element(self, {(m, ()): c for m, c in elem.items()})

    # -- word structure ---------------------------------------------------

    def word_bidegree(self, word):
        mono, ext = word
        h = 0
        d = self.ground.degree_of(mono)
        for idx, e in ext:
            v = self.variables[idx]
            h += e * v.hdeg
            d += e * v.ideg
        return (h, d)

    def _mul_words(self, w1, w2):
        """Product of two canonical words: list of (word, scalar)."""
        m1, e1 = w1
        m2, e2 = w2
        f = self.field
        # merge extension parts with Koszul signs and power coefficients
        suffix_odd = [0] * (len(e1) + 1)
        for i in range(len(e1) - 1, -1, -1):
            suffix_odd[i] = suffix_odd[i + 1] + (1 if self.variables[e1[i][0]].odd else 0)
        out = []
        coeff = 1
        crossings = 0
        i = j = 0
        while i < len(e1) and j < len(e2):
            idx1 = e1[i][0]
            idx2, ex2 = e2[j]
            if idx1 < idx2:
                out.append(e1[i])
                i += 1
            elif idx1 > idx2:
                if self.variables[idx2].odd:
                    crossings += suffix_odd[i]
                out.append(e2[j])
                j += 1
            else:
                v = self.variables[idx1]
                if v.odd:
                    return []  # odd square is zero in every characteristic
                a = e1[i][1]
                if v.flavor == DIVIDED:
                    coeff *= comb(a + ex2, a)
                out.append((idx1, a + ex2))
                i += 1
                j += 1
        out.extend(e1[i:])
        while j < len(e2):
            idx2, ex2 = e2[j]
            if self.variables[idx2].odd:
                crossings += suffix_odd[len(e1)]
            out.append(e2[j])
            j += 1
        if crossings % 2:
            coeff = -coeff
        c = f.from_int(coeff)
        if f.is_zero(c):
            return []
        ext = tuple(out)
        # base monomials multiply in the ground ring and reduce to normal form
        prod = tuple(a + b for a, b in zip(m1, m2))
        combo = self.ground.reduce_monomial(prod)
        return [((sm, ext), f.mul(c, r)) for sm, r in combo.items()]

    def word_differential(self, word):
        """d(word) via the left Leibniz rule; cached per word."""
        cached = self._dwords.get(word)
        if cached is not None:
            return cached
        mono, ext = word
        f = self.field
        result = Element.zero(self)
        parity = 0  # homological degree of the factors left of position t
        for t, (idx, e) in enumerate(ext):
            v = self.variables[idx]
            left = Element.from_word(self, (mono, ext[:t]))
            if v.flavor == EXTERIOR:
                middle = v.dval
                rest = ext[t + 1:]
            elif v.flavor == POLYNOMIAL:
                middle = v.dval.scale(f.from_int(e))
                rest = (((idx, e - 1),) if e > 1 else ()) + ext[t + 1:]
            else:  # divided power
                middle = v.dval
                rest = (((idx, e - 1),) if e > 1 else ()) + ext[t + 1:]
            if not middle.is_zero():
                term = left * middle * Element.from_word(self, (self.unit_word()[0], rest))
                if parity % 2:
                    term = -term
                result = result + term
            parity += e * v.hdeg
        self._dwords[word] = result
        return result

    # -- piece bases and matrices ------------------------------------------

    def _check_bounds(self, n, d):
        if self.nmax is not None and n > self.nmax + 1:
            raise TowerError("homological bound exceeded: %d > %d" % (n, self.nmax + 1))
        if self.dmax is not None and d > self.dmax:
            raise TowerError("internal bound exceeded: %d > %d" % (d, self.dmax))

    def piece(self, n, d):
        """Ordered word basis of the bidegree-(n, d) piece."""
        if n < 0 or d < 0:
            return ()
        self._check_bounds(n, d)
        key = ("piece", n, d)
        if key in self._cache:
            return self._cache[key]
        words = []
        nvars = len(self.variables)

        def rec(i, h, dd, acc):
            if h == 0:
                for mono in self.ground.quotient_basis(dd).monomials:
                    words.append((mono, tuple(acc)))
                return
            if i == nvars:
                return
            v = self.variables[i]
            cap = h // v.hdeg
            if v.flavor == EXTERIOR:
                cap = min(cap, 1)
            cap = min(cap, dd // v.ideg)
            rec(i + 1, h, dd, acc)
            for e in range(1, cap + 1):
                acc.append((i, e))
                rec(i + 1, h - e * v.hdeg, dd - e * v.ideg, acc)
                acc.pop()

        rec(0, n, d, [])
        words = tuple(words)
        self._cache[key] = words
        return words

    def piece_index(self, n, d):
        key = ("pidx", n, d)
        if key in self._cache:
            return self._cache[key]
        idx = {w: i for i, w in enumerate(self.piece(n, d))}
        self._cache[key] = idx
        return idx

    def coords(self, elem, n, d):
        index = self.piece_index(n, d)
        out = {}
        for w, c in elem.terms.items():
            if w not in index:
                raise TowerError("element does not lie in piece (%d, %d)" % (n, d))
            out[index[w]] = c
        return out

    def element(self, coords, n, d):
        basis = self.piece(n, d)
        return Element(self, {basis[i]: c for i, c in coords.items()})

    def matrix(self, n, d):
        """Differential piece (n, d) -> (n-1, d) as (sparse columns, nrows)."""
        key = ("matrix", n, d)
        if key in self._cache:
            return self._cache[key]
        src = self.piece(n, d)
        tgt_index = self.piece_index(n - 1, d)
        cols = []
        for w in src:
            dv = self.word_differential(w)
            col = {}
            for ww, c in dv.terms.items():
                col[tgt_index[ww]] = c
            cols.append(col)
        result = (cols, len(self.piece(n - 1, d)))
        self._cache[key] = result
        return result

    def solved(self, n, d):
        """Cached kernel/image/rank data for the differential out of (n, d)."""
        key = ("solved", n, d)
        if key in self._cache:
            return self._cache[key]
        cols, nrows = self.matrix(n, d)
        res = linalg.solve_cols(cols, nrows, self.field)
        self._cache[key] = res
        return res

    # -- printing ---------------------------------------------------------

    def word_str(self, word):
        mono, ext = word
        parts = []
        ms = self.ground.mono_str(mono)
        if ms != "1":
            parts.append(ms)
        for idx, e in ext:
            v = self.variables[idx]
            if e == 1:
                parts.append(v.name)
            elif v.flavor == DIVIDED:
                parts.append("%s^(%d)" % (v.name, e))
            else:
                parts.append("%s^%d" % (v.name, e))
        return "*".join(parts) if parts else "1"

    def element_str(self, elem):
        if not elem.terms:
            return "0"
        f = self.field
        out = []
        for word in sorted(elem.terms, key=self._word_sort_key):
            c = elem.terms[word]
            cs = f.to_str(c)
            ws = self.word_str(word)
            if ws == "1":
                term = cs
            elif cs == "1":
                term = ws
            elif cs == "-1":
                term = "-" + ws
            else:
                term = "%s*%s" % (cs, ws)
            if out and not term.startswith("-"):
                out.append("+ " + term)
            elif out:
                out.append("- " + term[1:])
            else:
                out.append(term)
        return " ".join(out)

    def _word_sort_key(self, word):
        mono, ext = word
        return (ext, tuple(-e for e in mono))

    def dump(self):
        """Tower as a JSON-ready list: one entry per adjoined variable."""
        return [{"name": v.name, "hdeg": v.hdeg, "idim": v.ideg,
                 "flavor": v.flavor, "differential": self.element_str(v.dval)}
                for v in self.variables]

    def variables_of_hdeg(self, n):
        return [v for v in self.variables if v.hdeg == n]

    def __repr__(self):
        return "ExtensionTower(%s, %d variables over %r)" % (
            self.flavor, len(self.variables), self.ground)
