"""A small Buchberger engine over Q in the degrevlex order.

Deliberately minimal: dense-exponent monomials, the product criterion for
pair pruning, content-stripped intermediates, full interreduction at the end.
Callers guard problem size; correctness over performance.
"""

from __future__ import annotations

from .multipoly import (
    MultiPoly,
    grevlex_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


def normal_form(p, basis):
    """Remainder of p on division by a list of polynomials."""
    if not basis:
        return p
    heads = [(g.leading_monomial(), g.leading_coeff(), g) for g in basis]
    work = dict(p.terms)
    rem = {}
    while work:
        m = max(work, key=grevlex_key)
        c = work.pop(m)
        for lm, lc, g in heads:
            if mono_divides(lm, m):
                factor = c / lc
                shift = mono_div(m, lm)
                for gm, gc in g.terms.items():
                    mm = mono_mul(shift, gm)
                    if mm == m:
                        continue  # cancels the popped leading term
                    s = work.get(mm, 0) - factor * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[m] = c
    return MultiPoly(rem, p.ring)


def s_polynomial(f, g):
    lf, cf = f.leading_monomial(), f.leading_coeff()
    lg, cg = g.leading_monomial(), g.leading_coeff()
    lcm = mono_lcm(lf, lg)
    mf = MultiPoly({mono_div(lcm, lf): 1 / cf}, f.ring)
    mg = MultiPoly({mono_div(lcm, lg): 1 / cg}, g.ring)
    return mf * f - mg * g


def interreduce(polys):
    """Mutually reduce a generating set until stable; drops zeros."""
    polys = [p.primitive() for p in polys if p]
    changed = True
    while changed:
        changed = False
        out = []
        for i, p in enumerate(polys):
            others = out + polys[i + 1 :]
            r = normal_form(p, others) if others else p
            if r.is_zero():
                changed = True
                continue
            r = r.primitive()
            if r != p:
                changed = True
            out.append(r)
        polys = out
    return polys


def buchberger(gens):
    """A (non-reduced) Groebner basis of the given generators."""
    basis = interreduce(list(gens))
    if not basis:
        return []
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_rank(pair):
        i, j = pair
        lcm = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        return (sum(lcm), grevlex_key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        lf = basis[i].leading_monomial()
        lg = basis[j].leading_monomial()
        if mono_lcm(lf, lg) == mono_mul(lf, lg):
            continue  # product criterion: coprime leading terms
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r.is_zero():
            continue
        r = r.primitive()
        basis.append(r)
        k = len(basis) - 1
        pairs.update((i2, k) for i2 in range(k))
    return basis


def reduced_basis(gens):
    """The reduced Groebner basis: minimal, fully reduced, monic, sorted."""
    basis = buchberger(gens)
    # minimalize: processed in ascending order, any proper divisor of a
    # leading monomial is already kept, so a greedy scan suffices
    minimal = []
    for p in sorted(basis, key=lambda q: grevlex_key(q.leading_monomial())):
        lm = p.leading_monomial()
        if any(mono_divides(q.leading_monomial(), lm) for q in minimal):
            continue
        minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = [q for j, q in enumerate(minimal) if j != i]
        r = normal_form(p, others) if others else p
        reduced.append(r.monic())
    reduced.sort(key=lambda p: grevlex_key(p.leading_monomial()), reverse=True)
    return reduced
