'''
Buchberger's algorithm for homogeneous ideals in degrevlex order.

Pairs are pruned with the Gebauer-Moeller criteria and selected with the normal strategy
(smallest lcm of lead monomials first).
'''

from typing import List

from mintk.arith import monomial as mono
from mintk.arith import Polynomial
from mintk.errors import NonHomogeneousError


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    '''
    S-polynomial of two monic polynomials.
    '''
    lmf, lmg = f.lead_monomial, g.lead_monomial
    lcm = mono.lcm(lmf, lmg)
    return f.mul_monomial(mono.quotient(lcm, lmf)) - g.mul_monomial(mono.quotient(lcm, lmg))


def reduce(f: Polynomial, G: List[Polynomial]) -> Polynomial:
    '''
    Remainder of full division of `f` by the polynomials `G`.

    Every term of the remainder is divisible by no lead monomial of `G`.
    '''
    field = f.field
    leads = [(g.lead_monomial, field.inv(g.lead_coefficient), g) for g in G if not g.is_zero()]
    p = dict(f.terms)
    remainder = {}
    while p:
        m = max(p, key=mono.degrevlex_key)
        c = p[m]
        for lm, lc_inv, g in leads:
            if mono.divides(lm, m):
                q = mono.quotient(m, lm)
                factor = field.mul(c, lc_inv)
                for gm, gc in g.terms.items():
                    t = mono.mul(q, gm)
                    v = field.sub(p.get(t, field.zero), field.mul(factor, gc))
                    if field.is_zero(v):
                        p.pop(t, None)
                    else:
                        p[t] = v
                break
        else:
            remainder[m] = c
            del p[m]
    return Polynomial._raw(field, f.nvars, remainder)


def select(G, P):
    '''
    Select the pair with the smallest lcm of lead monomials, ties broken by indices.
    '''

    def key(pair):
        lcm = mono.lcm(G[pair[0]].lead_monomial, G[pair[1]].lead_monomial)
        return mono.degrevlex_key(lcm), pair

    return min(P, key=key)


def update(G, P, f):
    '''
    Add `f` to the basis and return the new basis and pair set after Gebauer-Moeller pruning.
    '''
    lmf = f.lead_monomial
    lmG = [g.lead_monomial for g in G]
    lcm = mono.lcm

    P = {p for p in P if (not mono.divides(lmf, lcm(lmG[p[0]], lmG[p[1]])) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))}

    lcm_dict = {}
    for i in range(len(G)):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal_lcms = []
    for L in sorted(lcm_dict.keys(), key=mono.degrevlex_key):
        if all(not mono.divides(L_, L) for L_ in minimal_lcms):
            minimal_lcms.append(L)
    P_new = set()
    for L in minimal_lcms:
        if not any(mono.is_coprime(lmG[i], lmf) for i in lcm_dict[L]):
            P_new.add((min(lcm_dict[L]), len(G)))
    return G + [f], P | P_new


def minimalize(G):
    '''
    Drop basis elements whose lead monomial is divisible by another lead monomial.
    '''
    G_min = []
    for f in sorted(G, key=lambda h: mono.degrevlex_key(h.lead_monomial)):
        if all(not mono.divides(g.lead_monomial, f.lead_monomial) for g in G_min):
            G_min.append(f)
    return G_min


def interreduce(G):
    '''
    Reduced Groebner basis from a minimal one.
    '''
    G_red = []
    for i in range(len(G)):
        g = reduce(G[i], G[:i] + G[i + 1:])
        G_red.append(g.monic())
    return G_red


def buchberger(F: List[Polynomial]) -> List[Polynomial]:
    '''
    Reduced Groebner basis of the ideal generated by homogeneous polynomials.

    Parameters
    ----------
    F : list of Polynomial

    Returns
    -------
    G : list of Polynomial
        Monic, reduced, sorted by ascending lead monomial

    Raises
    ------
    NonHomogeneousError
    '''
    G = []
    P = set()
    for f in F:
        if f.is_zero():
            continue
        if not f.is_homogeneous():
            raise NonHomogeneousError('Relation is not homogeneous: %s' % f)
        G, P = update(G, P, f.monic())
    while P:
        i, j = select(G, P)
        P.remove((i, j))
        r = reduce(spoly(G[i], G[j]), G)
        if not r.is_zero():
            G, P = update(G, P, r.monic())
    G = interreduce(minimalize(G))
    return sorted(G, key=lambda g: mono.degrevlex_key(g.lead_monomial))
