"""Seifert fibered spaces: presentations, homology, and torsion certificates.

A space is described by its base genus g (negative = non-orientable base of
genus |g|), the number n of boundary tori, and exceptional fibers (beta,
alpha). From that data this module builds the standard fundamental group
presentation, computes H1 by Smith normal form, decides which essential
vertical torus (if any) the case analysis provides, constructs an exact
SL2 representation over a cyclotomic field, and certifies torsion in the
skein module through an exact trace inequality that is re-verified along
an independent evaluation path.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from math import gcd, lcm

from .cyclotomic import CycNum, root_of_unity, root_of_unity_with_trace
from .linalg import smith_normal_form
from .mat2 import (
    Mat2,
    _eigenvector,
    algebra_closure,
    is_irreducible,
    separating_witness,
    sl2_sqrt,
    standardize_pair,
    trace_triple_realize,
)


class SeifertData:
    """Base genus, boundary count, and exceptional fibers of a fibered space.

    fibers is a sequence of (beta, alpha) with alpha >= 2 and gcd = 1; g < 0
    means a non-orientable base of genus |g|.
    """

    __slots__ = ("g", "n", "fibers")

    def __init__(self, g, n, fibers=()):
        if not isinstance(g, int) or not isinstance(n, int):
            raise TypeError("genus and boundary count must be integers")
        if n < 0:
            raise ValueError("boundary count must be nonnegative")
        clean = []
        for beta, alpha in fibers:
            beta, alpha = int(beta), int(alpha)
            if alpha < 2:
                raise ValueError(f"fiber ({beta},{alpha}) needs alpha >= 2")
            if gcd(alpha, beta) != 1:
                raise ValueError(f"fiber ({beta},{alpha}) is not coprime")
            clean.append((beta, alpha))
        self.g = g
        self.n = n
        self.fibers = tuple(clean)

    def __eq__(self, other):
        if not isinstance(other, SeifertData):
            return NotImplemented
        return (self.g, self.n, self.fibers) == (other.g, other.n, other.fibers)

    __hash__ = None

    def __repr__(self):
        return f"SeifertData(g={self.g}, n={self.n}, fibers={list(self.fibers)})"


Presentation = namedtuple("Presentation", "generators relators")


class BuildError(Exception):
    """Representation construction failed: either a parameter schedule ran
    out, or a relator check failed (which signals a bug, never bad input)."""


def word_inverse(word):
    return tuple((sym, -e) for sym, e in reversed(word))


def word_mul(*words):
    """Concatenate words with free reduction at the seams."""
    out = []
    for w in words:
        for sym, e in w:
            if out and out[-1][0] == sym:
                psym, pe = out.pop()
                if pe + e:
                    out.append((psym, pe + e))
            else:
                out.append((sym, e))
    return tuple(out)


def format_word(word):
    if not word:
        return "1"
    return " ".join(sym if e == 1 else f"{sym}^{e}" for sym, e in word)


def _commutator(x, y):
    return ((x, 1), (y, 1), (x, -1), (y, -1))


def presentation(data):
    """Standard presentation of the fundamental group.

    Orientable base (g >= 0): surface pairs a_i, b_i, fiber loops q_l,
    boundary loops c_j, central fiber h; relators make h central, pin each
    q_l^alpha h^beta, and close up the long product ending in commutators.
    Non-orientable base (g < 0): |g| crosscap loops a_i with a h a^-1 = h^-1,
    and the long product ends in the squares a_i^2.
    """
    k = len(data.fibers)
    qs = [f"q{l + 1}" for l in range(k)]
    cs = [f"c{j + 1}" for j in range(data.n)]
    rel = []
    if data.g >= 0:
        surf = []
        for i in range(data.g):
            surf += [f"a{i + 1}", f"b{i + 1}"]
        gens = surf + qs + cs + ["h"]
        for s in surf:
            rel.append(_commutator("h", s))
        for s in cs:
            rel.append(_commutator("h", s))
        for s in qs:
            rel.append(_commutator("h", s))
        for q, (beta, alpha) in zip(qs, data.fibers):
            rel.append(((q, alpha), ("h", beta)))
        long = tuple((q, 1) for q in qs) + tuple((c, 1) for c in cs)
        for i in range(data.g):
            long += _commutator(f"a{i + 1}", f"b{i + 1}")
        rel.append(long)
    else:
        crosscaps = [f"a{i + 1}" for i in range(-data.g)]
        gens = crosscaps + qs + cs + ["h"]
        for s in crosscaps:
            rel.append(((s, 1), ("h", 1), (s, -1), ("h", 1)))
        for s in cs:
            rel.append(_commutator("h", s))
        for s in qs:
            rel.append(_commutator("h", s))
        for q, (beta, alpha) in zip(qs, data.fibers):
            rel.append(((q, alpha), ("h", beta)))
        long = tuple((q, 1) for q in qs) + tuple((c, 1) for c in cs)
        long += tuple((s, 2) for s in crosscaps)
        rel.append(long)
    return Presentation(tuple(gens), tuple(rel))


def _abelianized_rows(pres):
    idx = {s: i for i, s in enumerate(pres.generators)}
    rows = []
    for rel in pres.relators:
        row = [0] * len(pres.generators)
        for sym, e in rel:
            row[idx[sym]] += e
        if any(row):
            rows.append(row)
    return rows


def homology(data):
    """Invariant factors of H1: torsion entries (each > 1) then zeros for
    the free rank."""
    pres = presentation(data)
    rows = _abelianized_rows(pres)
    ncols = len(pres.generators)
    if not rows:
        return [0] * ncols
    diag = smith_normal_form(rows)
    rank = sum(1 for d in diag if d)
    return [d for d in diag if d > 1] + [0] * (ncols - rank)


def _doubled_class_nonzero(data, word):
    # is 2*[word] nonzero in H1? the doubled row lies in the relator lattice
    # exactly when adjoining it changes neither rank nor invariant factors
    pres = presentation(data)
    idx = {s: i for i, s in enumerate(pres.generators)}
    rows = _abelianized_rows(pres)
    v = [0] * len(pres.generators)
    for sym, e in word:
        v[idx[sym]] += 2 * e
    if not any(v):
        return False
    if not rows:
        return True
    before = [d for d in smith_normal_form(rows) if d]
    after = [d for d in smith_normal_form(rows + [v]) if d]
    return before != after


def classify(data):
    """Case tag for the essential-vertical-torus analysis.

    no_essential_torus covers the small bases (disk with <= 2 exceptional
    fibers and their relatives); the two noneffective labels mark cases
    whose torsion argument has no computable witness.
    """
    k = len(data.fibers)
    if data.g > 0 or data.g < -1:
        return "positive_genus"
    if data.g == 0:
        return "sphere_base" if data.n + k >= 4 else "no_essential_torus"
    if data.n + k >= 3:
        return "rp2_base"
    if data.n + k == 2:
        return "closed_haken_noneffective" if data.n == 0 else "rp2_small"
    return "no_essential_torus"


class Representation:
    """Generator images in SL2 over one cyclotomic field.

    All entries are lifted to a common order on construction (at least 4,
    so that i is always available downstream).
    """

    __slots__ = ("images", "order")

    def __init__(self, images):
        order = 4
        for m in images.values():
            order = lcm(order, m.order)
        self.images = {
            sym: Mat2(*(e.lift(order) for e in m.entries)) for sym, m in images.items()
        }
        self.order = order

    def image(self, sym):
        return self.images[sym]

    def word_image(self, word):
        acc = Mat2.identity()
        for sym, e in word:
            acc = acc * (self.images[sym] ** e)
        return acc

    def word_image_alt(self, word):
        """Same value as word_image, computed right-to-left one letter at a
        time; kept separate so certificates can be re-verified on a path
        that shares no intermediate results with the forward evaluation."""
        acc = Mat2.identity()
        for sym, e in reversed(word):
            m = self.images[sym]
            if e < 0:
                m = m.inverse()
                e = -e
            for _ in range(e):
                acc = m * acc
        return acc

    def satisfies(self, relators, evaluator=None):
        ev = evaluator if evaluator is not None else self.word_image
        ident = Mat2.identity()
        return all(ev(rel) == ident for rel in relators)

    def conjugated(self, p):
        return Representation({sym: m.conjugate_by(p) for sym, m in self.images.items()})

    def as_dict(self):
        return {
            "order": self.order,
            "images": {
                sym: [
                    [[c.numerator, c.denominator] for c in entry.coords]
                    for entry in m.entries
                ]
                for sym, m in self.images.items()
            },
        }


def _cyc_dict(x):
    return {"order": x.order, "coords": [[c.numerator, c.denominator] for c in x.coords]}


class TorsionCertificate:
    """Verified witness that the skein module has torsion.

    kind is one of separating_torus, nonseparating_torus, noneffective_closed,
    noneffective_boundary. Effective kinds carry a representation and a
    witness with two unequal exact traces; noneffective kinds carry only the
    criterion label and checkable side conditions.
    """

    __slots__ = ("kind", "representation", "witness", "criterion_ref", "side_conditions", "verified")

    def __init__(self, kind, representation, witness, criterion_ref, side_conditions, verified=False):
        self.kind = kind
        self.representation = representation
        self.witness = witness
        self.criterion_ref = criterion_ref
        self.side_conditions = side_conditions
        self.verified = verified

    def as_dict(self):
        out = {
            "kind": self.kind,
            "criterion_ref": self.criterion_ref,
            "side_conditions": self.side_conditions,
            "verified": self.verified,
        }
        if self.representation is not None:
            out["representation"] = self.representation.as_dict()
        if self.witness is not None:
            w = {}
            for key, val in self.witness.items():
                if key.startswith("trace"):
                    w[key] = _cyc_dict(val)
                else:
                    w[key] = {"letters": [[s, e] for s, e in val], "text": format_word(val)}
            out["witness"] = w
        return out

    def __repr__(self):
        return f"TorsionCertificate(kind={self.kind!r}, verified={self.verified})"


class NoTorsionResult:
    """Outcome for bases too small to carry an essential vertical torus."""

    __slots__ = ("classification", "message")

    def __init__(self, classification, message):
        self.classification = classification
        self.message = message

    def as_dict(self):
        return {
            "kind": "no_certificate",
            "classification": self.classification,
            "message": self.message,
        }

    def __repr__(self):
        return f"NoTorsionResult({self.classification!r})"


def psi_evaluate(word_list, rep):
    """Product over the words of minus the trace of the image."""
    acc = CycNum.one()
    for w in word_list:
        acc = acc * (-rep.word_image(w).trace())
    return acc


# ---------------------------------------------------------------------------
# representation constructions

_SQRT_TAUS = (-1, 0, 1, -3, 2)  # traces t with t+2 a square of a known cyclotomic


def _exponent_schedule(order):
    # exponents e with zeta^e != +-1; the quarter turn first since a trace of
    # zero is the friendliest value downstream
    cands = [order // 4, 1, 2, 3, 4, 5]
    out = []
    seen = set()
    for e in cands:
        r = e % order
        if r in (0, order // 2) or r in seen:
            continue
        seen.add(r)
        out.append(e)
    return out


def _fiber_orders(data):
    # q_l must have eigenvalue order alpha (beta even) or 2*alpha (beta odd)
    # so that q^alpha equals h^-beta = (-1)^beta
    return [alpha if beta % 2 == 0 else 2 * alpha for beta, alpha in data.fibers]


def _trace_of_order(d):
    return root_of_unity(d, 1) + root_of_unity(d, d - 1)


def _root(order, e):
    # zeta_order^e in its minimal cyclotomic field, to keep coordinate
    # vectors short when e shares a factor with the order
    e %= order
    if e == 0:
        return CycNum.one()
    d = gcd(e, order)
    return root_of_unity(order // d, e // d)


class _Skip(Exception):
    """Internal: this parameter choice cannot complete, try the next one."""


def _recognized_eigenvalue(trace):
    hit = root_of_unity_with_trace(trace)
    if hit is None:
        raise _Skip
    m, kk = hit
    mu = root_of_unity(m, kk)
    if mu == 1 or mu == -1:
        raise _Skip
    return mu


def _extend_chain(p_prev, mu, letter_trace, target_trace):
    """Next chain letter: trace letter_trace, and product trace with the
    running partial product equal to target_trace. mu must be an eigenvalue
    of the partial product with mu != mu^-1."""
    muinv = mu.inverse()
    denom = mu - muinv
    a = (target_trace - muinv * letter_trace) / denom
    d = (mu * letter_trace - target_trace) / denom
    local = Mat2(a, 1, a * d - 1, d)
    v1 = _eigenvector(p_prev, mu)
    v2 = _eigenvector(p_prev, muinv)
    e = Mat2.from_columns(v1, v2)
    return e * local * e.inverse()


def _chain_layout(data, case):
    k = len(data.fibers)
    qs = [f"q{l + 1}" for l in range(k)]
    cs = [f"c{j + 1}" for j in range(data.n)]
    if case == "rp2_small":
        return qs + cs  # relator order; no torus pair to front-load
    if data.n:
        return cs + qs  # rotate the boundary loops to the front
    return qs


def _chain_candidates(data, case, params=None):
    """Representations for the sphere_base / rp2_base / rp2_small chains.

    Yields (rep, meta) for every parameter choice that completes and passes
    the build-level checks; the schedule is deterministic and capped.
    """
    params = params or {}
    pres = presentation(data)
    chain = _chain_layout(data, case)
    m = len(chain)
    d_orders = _fiber_orders(data)
    d_by_sym = {f"q{l + 1}": d for l, d in enumerate(d_orders)}
    field_order = lcm(4, *d_orders) if d_orders else 4
    exps = _exponent_schedule(field_order)

    # schedule slots; the rightmost slot cycles fastest under product()
    slots = []
    for sym in chain:
        if sym not in d_by_sym:
            slots.append((f"trace_{sym}", exps))
    if case == "sphere_base":
        sched_range = range(3, m - 1)  # the step at m-1 is forced to t_m
    elif case == "rp2_base":
        sched_range = range(3, m)  # the step at m takes the sqrt-friendly slot
    else:
        sched_range = range(0)
    for j in sched_range:
        slots.append((f"tau_{j}", exps))
    if case == "rp2_base":
        taus = [params["final_tau"]] if "final_tau" in params else list(_SQRT_TAUS)
        slots.append(("final_tau", taus))
    if "s" in params:
        s_cands = [("raw", params["s"])]
    elif case == "rp2_small":
        s_cands = [("raw", 1), ("raw", 2)] + [("target_tau", t) for t in _SQRT_TAUS]
    else:
        s_cands = [("raw", 1), ("raw", 2)] + [("target_exp", e) for e in exps]
    slots.append(("s", s_cands))

    names = [name for name, _ in slots]
    spaces = [cands for _, cands in slots]
    cap = params.get("max_candidates", 512)

    for combo in itertools.islice(itertools.product(*spaces), cap):
        assign = dict(zip(names, combo))
        try:
            rep, meta = _attempt_chain(data, case, pres, chain, d_by_sym, field_order, assign)
        except _Skip:
            continue
        yield rep, meta


def _attempt_chain(data, case, pres, chain, d_by_sym, field_order, assign):
    m = len(chain)
    traces = []
    for sym in chain:
        if sym in d_by_sym:
            traces.append(_trace_of_order(d_by_sym[sym]))
        else:
            e = assign[f"trace_{sym}"]
            nu = _root(field_order, e)
            traces.append(nu + nu.inverse())

    # first two letters through the shared two-generator realization
    eta1 = _recognized_eigenvalue(traces[0])
    eta2 = _recognized_eigenvalue(traces[1])
    prod = eta1 * eta2
    base = prod + prod.inverse()
    s_kind, s_val = assign["s"]
    if s_kind == "raw":
        s = CycNum.rational(s_val) if not isinstance(s_val, CycNum) else s_val
    elif s_kind == "target_tau":
        s = CycNum.rational(s_val) - base
    else:  # target_exp: aim the product trace at a scheduled root of unity
        nu = _root(field_order, s_val)
        s = nu + nu.inverse() - base
    p1, p2 = trace_triple_realize(traces[0], traces[1], s)
    letters = [p1, p2]
    partial = p1 * p2

    for j in range(3, m + 1):
        letter_trace = traces[j - 1]
        if case == "sphere_base" and j == m:
            last = partial.inverse()
            if not (last.trace() == letter_trace):
                raise _Skip
            letters.append(last)
            partial = partial * last
            break
        if case == "sphere_base" and j == m - 1:
            target = traces[m - 1]  # force the product trace to the last letter's
        elif case == "rp2_base" and j == m:
            target = CycNum.rational(assign["final_tau"])
        else:
            e = assign[f"tau_{j}"]
            nu = _root(field_order, e)
            target = nu + nu.inverse()
        mu = _recognized_eigenvalue(partial.trace())
        nxt = _extend_chain(partial, mu, letter_trace, target)
        letters.append(nxt)
        partial = partial * nxt

    images = {sym: mat for sym, mat in zip(chain, letters)}
    images["h"] = -Mat2.identity()

    if case in ("rp2_base", "rp2_small"):
        try:
            root = sl2_sqrt(partial.inverse())
        except ValueError:
            raise _Skip from None
        if case == "rp2_base" and data.n:
            # the chain was rotated: conjugate the square root back
            u = Mat2.identity()
            for l in range(len(data.fibers)):
                u = u * images[f"q{l + 1}"]
            root = u * root * u.inverse()
        images["a1"] = root

    rep = Representation(images)
    if not rep.satisfies(pres.relators):
        raise BuildError(
            f"relation verification failed for {case} with assignment {assign!r}"
        )

    meta = {"case": case, "chain": list(chain), "s": s}
    if case != "rp2_small":
        delta = ((chain[0], 1), (chain[1], 1))
        if rep.word_image(delta).is_central_sl2():
            raise _Skip
        side1 = list(chain[:2])
        side2 = list(chain[2:]) + (["a1"] if case == "rp2_base" else [])
        pair = _irreducible_pair(rep, side1 + side2)
        if pair is None:
            raise _Skip
        meta.update(delta=delta, side1=side1, side2=side2, irreducible_pair=pair)
    return rep, meta


def _irreducible_pair(rep, syms):
    mats = [rep.image(s) for s in syms]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if is_irreducible(mats[i], mats[j]):
                return [syms[i], syms[j]]
    return None


def _abelian_candidates(data, params=None):
    """Diagonal representations for positive_genus: every generator maps to
    diag(lambda^e, lambda^-e) for an exponent vector orthogonal to the
    abelianized relators."""
    params = params or {}
    pres = presentation(data)
    exponents = {sym: 0 for sym in pres.generators}
    if data.g > 0:
        exponents["a1"] = 1
        exponents["b1"] = 1
        gammas = [(("a1", 1),)]
        delta = (("b1", 1),)
    else:  # g < -1
        exponents["a1"] = 1
        exponents["a2"] = -1
        gammas = [(("a1", 1), ("a2", -1)), (("a1", 1), ("a2", 1))]
        delta = (("a1", 1),)
    idx = {s: i for i, s in enumerate(pres.generators)}
    for row in _abelianized_rows(pres):
        if sum(row[idx[s]] * e for s, e in exponents.items()):
            raise BuildError("exponent vector misses the abelianized relators")
    orders = [params["lambda_order"]] if "lambda_order" in params else [5, 7, 9, 11, 13]
    for order in orders:
        lam = root_of_unity(order, 1)
        images = {
            sym: Mat2.diagonal(lam ** exponents[sym], lam ** (-exponents[sym]))
            for sym in pres.generators
        }
        rep = Representation(images)
        if not rep.satisfies(pres.relators):
            raise BuildError("relation verification failed for the diagonal construction")
        yield rep, {
            "case": "positive_genus",
            "gamma_candidates": gammas,
            "delta": delta,
            "lambda_order": order,
        }


def _representation_candidates(data, case, params=None):
    if case == "positive_genus":
        return _abelian_candidates(data, params)
    if case in ("sphere_base", "rp2_base", "rp2_small"):
        return _chain_candidates(data, case, params)
    raise ValueError(f"no representation construction for case {case!r}")


def build_representation(data, case, params=None):
    """First representation in the deterministic schedule for the case.

    params can pin choices instead of scheduling: lambda_order for the
    diagonal construction; s, final_tau, max_candidates for the chains.
    Raises BuildError when the schedule is exhausted, and also when a
    relator check fails (that one indicates a bug, not bad input).
    """
    for rep, _meta in _representation_candidates(data, case, params):
        return rep
    raise BuildError(f"parameter schedule exhausted for case {case!r}")


# ---------------------------------------------------------------------------
# certification

def _loop_words(syms):
    singles = []
    for s in syms:
        singles.append(((s, 1),))
        singles.append(((s, -1),))
    words = list(singles)
    for w1 in singles:
        for w2 in singles:
            w = word_mul(w1, w2)
            if w and w not in words:
                words.append(w)
    return words


def _word_witness(rep, side1, side2, delta_word):
    h = (("h", 1),)
    gammas = [
        delta_word,
        word_inverse(delta_word),
        word_mul(delta_word, h),
        word_mul(word_inverse(delta_word), h),
    ]
    gamma_mats = [rep.word_image(g) for g in gammas]
    for x1 in _loop_words(side1):
        m1 = rep.word_image(x1)
        for x2 in _loop_words(side2):
            m2 = rep.word_image(x2)
            for gw, mg in zip(gammas, gamma_mats):
                fwd = (m1 * m2 * mg).trace()
                swp = (m1 * mg * m2).trace()
                if not (fwd == swp):
                    return x1, x2, gw, fwd, swp
    return None


def reverify_certificate(cert, data):
    """Re-check a certificate from scratch: every image has det 1, every
    relator holds under the alternate evaluation order, and the witness
    traces are reproduced exactly and really differ."""
    rep = cert.representation
    if rep is not None:
        pres = presentation(data)
        for m in rep.images.values():
            if not (m.det() == 1):
                return False
        if not rep.satisfies(pres.relators, evaluator=rep.word_image_alt):
            return False
    w = cert.witness
    if w is None:
        return cert.kind in ("noneffective_closed", "noneffective_boundary")
    if cert.kind == "separating_torus":
        fwd = rep.word_image_alt(word_mul(w["x1"], w["x2"], w["gamma"])).trace()
        swp = rep.word_image_alt(word_mul(w["x1"], w["gamma"], w["x2"])).trace()
    elif cert.kind == "nonseparating_torus":
        fwd = rep.word_image_alt(word_mul(w["gamma"], w["delta"])).trace()
        swp = rep.word_image_alt(word_mul(word_inverse(w["gamma"]), w["delta"])).trace()
    else:
        return False
    if fwd == swp:
        return False
    return fwd == w["trace_fwd"] and swp == w["trace_swapped"]


def _separating_certificate(data, case):
    for rep0, meta in _representation_candidates(data, case):
        delta_word = meta["delta"]
        torus_img = rep0.word_image(delta_word)
        conj = standardize_pair(torus_img)
        rep = rep0.conjugated(conj)
        alg_t = algebra_closure([rep.word_image(delta_word)])
        if alg_t.tag not in ("D", "J"):
            continue
        alg1 = algebra_closure([rep.image(s) for s in meta["side1"]])
        alg2 = algebra_closure([rep.image(s) for s in meta["side2"]])
        if alg1.dim < 3 or alg2.dim < 3:
            continue
        if separating_witness(alg1, alg2, alg_t) is None:
            continue
        hit = _word_witness(rep, meta["side1"], meta["side2"], delta_word)
        if hit is None:
            continue
        x1, x2, gamma, fwd, swp = hit
        cert = TorsionCertificate(
            kind="separating_torus",
            representation=rep,
            witness={"x1": x1, "x2": x2, "gamma": gamma, "trace_fwd": fwd, "trace_swapped": swp},
            criterion_ref="separating vertical torus trace criterion",
            side_conditions={
                "classification": case,
                "irreducible_pair": meta["irreducible_pair"],
                "side_algebra_dims": [alg1.dim, alg2.dim],
                "torus_algebra": alg_t.tag,
                "torus_image_noncentral": True,
            },
        )
        if reverify_certificate(cert, data):
            cert.verified = True
            return cert
    raise BuildError(f"parameter schedule exhausted for case {case!r}")


def _nonseparating_certificate(data):
    for rep, meta in _representation_candidates(data, "positive_genus"):
        delta = meta["delta"]
        for gamma in meta["gamma_candidates"]:
            if not _doubled_class_nonzero(data, gamma):
                continue
            fwd = rep.word_image(word_mul(gamma, delta)).trace()
            swp = rep.word_image(word_mul(word_inverse(gamma), delta)).trace()
            if fwd == swp:
                continue
            cert = TorsionCertificate(
                kind="nonseparating_torus",
                representation=rep,
                witness={"gamma": gamma, "delta": delta, "trace_fwd": fwd, "trace_swapped": swp},
                criterion_ref="nonseparating vertical torus trace criterion",
                side_conditions={
                    "classification": "positive_genus",
                    "torus_curve_doubled_class_nonzero": True,
                    "crossing_trace": str(rep.word_image(delta).trace()),
                },
            )
            if reverify_certificate(cert, data):
                cert.verified = True
                return cert
    raise BuildError("parameter schedule exhausted for the nonseparating search")


def certify(data):
    """Torsion certificate for the space, or NoTorsionResult when the case
    analysis provides no essential vertical torus."""
    case = classify(data)
    if case == "no_essential_torus":
        return NoTorsionResult(case, "no torsion claimed by these criteria")
    if case == "closed_haken_noneffective":
        return TorsionCertificate(
            kind="noneffective_closed",
            representation=None,
            witness=None,
            criterion_ref="closed Haken double-branched criterion (non-constructive)",
            side_conditions={"classification": case, "homology": homology(data)},
            verified=True,
        )
    if case == "rp2_small":
        rep = build_representation(data, case)
        chain = _chain_layout(data, case)
        cert = TorsionCertificate(
            kind="noneffective_boundary",
            representation=rep,
            witness=None,
            criterion_ref="independent boundary trace functions criterion (non-constructive)",
            side_conditions={
                "classification": case,
                "homology": homology(data),
                "independent_trace_loops": chain,
            },
        )
        cert.verified = reverify_certificate(cert, data)
        return cert
    if case == "positive_genus":
        return _nonseparating_certificate(data)
    return _separating_certificate(data, case)
