"""Theorem audits: structured pass/fail reports on concrete instances.

Each audit states exactly what it checked, on which instance, through
which bounds.  Failures are reported, never silently repaired.  The
growth probe is non-certifying: it reports a diagnostic and never fails.
"""

from . import linalg
from .fields import field_from_spec
from .invariants import (aq_ranks, characteristic_window, ci_check, deviations,
                         with_free_base)
from .presentations import Presentation, PresentationError, parse_polynomial
from .resolution import build_minimal_model, kernel_generators


class AuditError(ValueError):
    pass


class AuditReport:
    def __init__(self, theorem, instance, bounds, checks, notes=None):
        self.theorem = theorem
        self.instance = instance
        self.bounds = dict(bounds)
        self.checks = list(checks)
        self.notes = list(notes or [])

    @property
    def passed(self):
        return all(c["ok"] for c in self.checks)

    def to_json(self):
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "bounds": self.bounds,
            "checks": [dict(c) for c in self.checks],
            "notes": self.notes,
            "passed": self.passed,
        }

    def __repr__(self):
        return "AuditReport(%s, passed=%s)" % (self.theorem, self.passed)


def _check(assertion, observed, ok):
    return {"assertion": assertion, "observed": observed, "ok": bool(ok)}


def _instance_label(pres):
    rels = ", ".join(pres.poly_str(f) for f in pres.relators)
    base = ""
    if pres.base is not None and pres.base.relators:
        base = " over quotient base (%s)" % ", ".join(
            pres.poly_str(f) for f in pres.base.relators)
    elif pres.base is not None:
        base = " over polynomial base"
    return "%s[%s]/(%s)%s" % (pres.field, ",".join(pres.names), rels, base)


def rigidity_audit(pres, N, D):
    """One vanishing deviation in degree >= 4 forces complete intersection
    (finite flat dimension is automatic over a polynomial base).  Audited
    as the contrapositive: a non-c.i. instance must have eps_n > 0 for
    every 4 <= n <= N, and a c.i. instance eps_n = 0 for 3 <= n <= N."""
    based = with_free_base(pres)
    verdict = ci_check(based, D)
    dev = deviations(based, N, D, "minimal-model")
    checks = [_check("ci verdict is decisive", verdict.is_ci,
                     verdict.is_ci in ("yes", "no"))]
    if verdict.is_ci == "no":
        for n in range(4, N + 1):
            checks.append(_check(
                "eps_%d > 0 (non-c.i. forbids vanishing)" % n,
                dev[n], dev[n] > 0))
    elif verdict.is_ci == "yes":
        for n in range(3, N + 1):
            checks.append(_check(
                "eps_%d = 0 (c.i. deviations vanish from 3 on)" % n,
                dev[n], dev[n] == 0))
    return AuditReport("rigidity-of-deviations", _instance_label(based),
                       {"N": N, "D": D}, checks)


def growth_probe(pres, N, D):
    """Non-certifying diagnostic: for non-c.i. instances the deviations are
    expected to grow exponentially; reports max eps_n^(1/n) over the
    window and flags when it exceeds 1.  Never fails."""
    based = with_free_base(pres)
    notes = []
    checks = []
    if N < 4:
        notes.append("window too small (N < 4): nothing to probe")
        return AuditReport("deviation-growth-probe", _instance_label(based),
                           {"N": N, "D": D}, checks, notes)
    verdict = ci_check(based, D)
    if verdict.is_ci == "yes":
        notes.append("not applicable (complete intersection)")
        return AuditReport("deviation-growth-probe", _instance_label(based),
                           {"N": N, "D": D}, checks, notes)
    dev = deviations(based, N, D, "acyclic-closure")
    eps = {n: dev[n] for n in range(1, N + 1)}
    # eps_n^(1/n) > 1 exactly when eps_n >= 2; the float is display only
    flagged = any(c >= 2 for c in eps.values())
    max_root = max(c ** (1.0 / n) for n, c in eps.items())
    notes.append("eps(1..%d) = %s" % (N, [eps[n] for n in range(1, N + 1)]))
    notes.append("max eps_n^(1/n) = %.6f" % max_root)
    if flagged:
        notes.append("consistent with exponential growth (max root > 1); "
                     "this probe certifies nothing")
    else:
        notes.append("no growth detected in the window; this probe certifies nothing")
    return AuditReport("deviation-growth-probe", _instance_label(based),
                       {"N": N, "D": D}, checks, notes)


def _layer_chain(layers):
    """[Presentation] with each the base of the next; returns (Q, R, S)."""
    if len(layers) != 3:
        raise AuditError("expected a tower of exactly three presentation layers")
    q, r, s = layers
    if r.base is not q or s.base is not r:
        raise AuditError("tower layers must be chained base-to-quotient")
    return q, r, s


def build_layer_chain(docs):
    """Three presentation JSON layers (same field and variables, each
    relator list extending the previous) -> chained Presentations."""
    if not isinstance(docs, list) or len(docs) != 3:
        raise AuditError("'tower' must list exactly three presentation layers")
    pres = []
    prev = None
    for doc in docs:
        if not isinstance(doc, dict):
            raise AuditError("each tower layer must be a presentation object")
        field = field_from_spec(doc.get("field"))
        vars_ = [(v["name"], v["degree"]) for v in doc.get("variables", [])]
        try:
            p = Presentation(field, vars_, doc.get("relators", []), base=prev)
        except PresentationError as exc:
            raise AuditError("bad tower layer: %s" % exc)
        pres.append(p)
        prev = p
    return tuple(pres)


def _ideal_span_ranks(ground, gens_a, gens_b, D):
    """Per-degree ranks of span(a), span(b), span(a+b) inside the ground ring."""
    field = ground.field

    def spans(gens):
        rows = {d: [] for d in range(D + 1)}
        for g in gens:
            e = ground.degree_of(next(iter(g)))
            for d in range(e, D + 1):
                for s in ground.quotient_basis(d - e).monomials:
                    prod = ground.multiply({s: field.one}, g)
                    if prod:
                        rows[d].append(ground.coords(prod, d))
        return rows

    ra, rb = spans(gens_a), spans(gens_b)
    out = []
    for d in range(D + 1):
        ea = linalg.Echelon(field)
        for v in ra[d]:
            ea.add(v)
        eb = linalg.Echelon(field)
        for v in rb[d]:
            eb.add(v)
        eab = linalg.Echelon(field)
        for v in ra[d] + rb[d]:
            eab.add(v)
        out.append((ea.rank, eb.rank, eab.rank))
    return out


def verify_regular_witness(r_pres, s_pres, witness_polys, D):
    """Check a declared regular sequence generating ker(R ->> S).

    (a) the witness elements generate the same ideal as the kernel
        through every internal degree <= D, and
    (b) hilb(S) == hilb(R) * prod(1 - t^{deg w_i}) through D, which is
        the Hilbert-series certificate of regularity.
    Raises AuditError when verification fails.
    """
    if not witness_polys:
        raise AuditError("witness verification failed: empty witness")
    wits = []
    for text in witness_polys:
        poly = parse_polynomial(text, r_pres.names) if isinstance(text, str) else text
        g = r_pres.from_int_poly(poly)
        if not g:
            raise AuditError("witness verification failed: %r is zero in the base"
                             % (text,))
        degs = {r_pres.degree_of(m) for m in g}
        if len(degs) != 1:
            raise AuditError("witness verification failed: %r is not homogeneous"
                             % (text,))
        wits.append(g)
    kernel = [g for _, g in kernel_generators(s_pres)]
    for d, (ra, rb, rab) in enumerate(_ideal_span_ranks(r_pres, wits, kernel, D)):
        if not (ra == rb == rab):
            raise AuditError(
                "witness verification failed: witness ideal and kernel ideal "
                "differ in internal degree %d" % d)
    from .invariants import _series_mul
    prod = r_pres.hilbert(D)
    for g in wits:
        e = r_pres.degree_of(next(iter(g)))
        factor = [0] * (D + 1)
        factor[0] = 1
        if e <= D:
            factor[e] = -1
        prod = _series_mul(prod, factor, D)
    if prod != s_pres.hilbert(D):
        raise AuditError(
            "witness verification failed: Hilbert series of the quotient does "
            "not match the regular-sequence product through degree %d" % D)
    return wits


def jacobi_zariski_audit(layers, witness, i_max, D):
    """For a tower Q ->> R ->> S with a verified witness that the second
    map has finite flat dimension (a regular sequence generating its
    kernel), even cotangent ranks cannot grow when the base is shrunk:
    rank_{2i}(S over R) <= rank_{2i}(S over Q), inside the
    characteristic window 2i <= 2p-1 (all i in characteristic zero)."""
    q, r, s = _layer_chain(layers)
    if i_max < 1:
        raise AuditError("i_max must be >= 1")
    verify_regular_witness(r, s, witness, D)
    s_over_q = Presentation(s.field, s.variables, s.relators, base=q)
    limit = characteristic_window(s.field)
    checks = []
    in_window = [i for i in range(1, i_max + 1)
                 if limit is None or 2 * i <= limit]
    n_top = max((2 * i for i in in_window), default=0)
    if in_window:
        rk_sr = aq_ranks(s, n_top, D)
        rk_sq = aq_ranks(s_over_q, n_top, D)
    for i in range(1, i_max + 1):
        n = 2 * i
        if limit is not None and n > limit:
            checks.append(_check(
                "rank D_%d comparison (i=%d)" % (n, i),
                "outside-window (characteristic window caps n at %d)" % limit,
                True))
            continue
        a = rk_sr[n]["rank"]
        b = rk_sq[n]["rank"]
        checks.append(_check(
            "rank D_%d(S|R) <= rank D_%d(S|Q)" % (n, n),
            "%d <= %d" % (a, b), a <= b))
    return AuditReport(
        "jacobi-zariski-descent", _instance_label(s),
        {"i_max": i_max, "D": D},
        checks,
        ["witness regular sequence verified through internal degree %d" % D])


def ci_vanishing_audit(layers, N, D):
    """When both R and S are complete intersections over the polynomial
    layer Q, the cotangent homology of S over R vanishes in degrees >= 3:
    audited as eps_{n+1}(R ->> S) = 0, i.e. the minimal model of S over R
    has no stage-n variables, for 3 <= n <= N."""
    q, r, s = _layer_chain(layers)
    s_over_q = Presentation(s.field, s.variables, s.relators, base=q)
    ci_r = ci_check(r, D)
    ci_s = ci_check(s_over_q, D)
    if ci_r.is_ci != "yes" or ci_s.is_ci != "yes":
        raise AuditError(
            "precondition failed: both layers must be complete intersections "
            "over the polynomial base (got %s and %s)" % (ci_r.is_ci, ci_s.is_ci))
    if N < 3:
        raise AuditError("N must be >= 3 to audit vanishing")
    model = build_minimal_model(s, N, D)
    checks = []
    for n in range(3, N + 1):
        count = len(model.variables_of_hdeg(n))
        checks.append(_check(
            "rank D_%d(S|R) = 0, i.e. no stage-%d model variables" % (n, n),
            count, count == 0))
    return AuditReport(
        "ci-vanishing-of-cotangent-homology", _instance_label(s),
        {"N": N, "D": D}, checks,
        ["preconditions: both layers certified c.i. through degree %d" % D])
