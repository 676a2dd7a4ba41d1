import bisect
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from mintk import logger
from mintk.errors import BadEmbeddingError, DepthTooLowError
from mintk.minors import check_tensor_embedding
from mintk.resolution import GradedFreeModule, GradedMatrix, ModulePresentation, Resolution, minimal_resolution
from mintk.resolution import DEFAULT_DEGREE_SLACK
from .lift import lift_complex
from .ring import FiberProductRing

#: A summand of the Moore complex: (a, ((b_1, c_1), ..., (b_k, c_k)), d) stands for
#: F_a (x) (E_b1 (x) F_c1) (x) ... (x) (E_bk (x) F_ck) (x) P_d, with F_0 dropped from the front
Word = Tuple[int, Tuple[Tuple[int, int], ...], int]


def word_degree(word: Word) -> int:
    a, pairs, d = word
    return a + sum(b + c for b, c in pairs) + d


def word_text(word: Word) -> str:
    a, pairs, d = word
    parts = ['F%i' % a] if a else []
    parts.extend('(E%i F%i)' % p for p in pairs)
    parts.append('P%i' % d)
    return ' '.join(parts)


def word_key(word: Word):
    '''
    Block order inside G_n: by number of tensor factors, then by the homological degrees of the factors
    from left to right.
    '''
    a, pairs, d = word
    degrees = ([a] if a else []) + [h for p in pairs for h in p] + [d]
    return len(degrees), tuple(degrees)


def tensor_degrees(factors: List[Tuple[int, ...]]) -> List[int]:
    '''
    Basis degrees of a tensor product of free modules, with the basis running fastest through the leftmost factor.
    '''
    result = [0]
    for degrees in reversed(factors):
        result = [df + dr for dr in result for df in degrees]
    return result


@dataclass
class FocusBlock:
    '''
    A block d_1 (x) id_ell of the Moore differential coming from the first differential of E or F.

    Attributes
    ----------
    kind : str
        'F' for the resolution of k over the other ring, 'E' for the one over the ring of M
    n : int
    word : Word
        The source summand of G_n
    copies : int
        The multiplicity ell
    literal : bool
        Whether the block appears verbatim as a submatrix of d_n
    '''
    kind: str
    n: int
    word: Word
    copies: int
    literal: bool

    def format(self):
        return 'n = %i: d1^%s (x) id_%i at %s%s' % (self.n, self.kind, self.copies, word_text(self.word),
                                                    '' if self.literal else ' NOT LITERAL')


class MooreResolution(Resolution):
    '''
    The resolution F (x) T(E_{>=1} (x) F_{>=1}) (x) P over a fiber product R of a module M over one of its factors.

    E resolves k over the ring of M, F resolves k over the other factor and P resolves M.
    The differential acts on the leftmost tensor factor: d^F on F_a for a >= 1, otherwise d^E on the
    first pair, where E_0 (x) F_c is read as F_c, and d^P once no pairs are left.
    Because m_S * m_T = 0 in R, no signs are needed for d^2 = 0.

    Attributes
    ----------
    words : list of list of Word
        words[n] lists the summands of G_n in block order
    components : dict of str -> Resolution
        The resolutions 'E', 'F' and 'P' over the factor rings
    lifted : dict of str -> list of GradedMatrix
        Their differentials read over R
    '''

    def __init__(self, module, differentials, words, components, lifted, certified, complete_through, terminated):
        super().__init__(module, differentials, certified, complete_through, terminated)
        self.words = words
        self.components = components
        self.lifted = lifted
        self._offsets = []
        self._starts = []
        for n, ws in enumerate(words):
            offsets, pos = {}, 0
            for w in ws:
                offsets[w] = pos
                pos += _Builder.rank_of(self.components, w)
            self._offsets.append(offsets)
            self._starts.append([offsets[w] for w in ws])

    def offset(self, n, word: Word) -> int:
        return self._offsets[n][word]

    def word_rank(self, word: Word) -> int:
        return _Builder.rank_of(self.components, word)

    def word_of_index(self, n, index) -> Word:
        return self.words[n][bisect.bisect_right(self._starts[n], index) - 1]

    def block_audit(self) -> List[str]:
        '''
        Check the block shape of every differential: one nonzero block in every block column,
        and in every block row one nonzero block per source summand mapping there, which is at most two.

        Returns
        -------
        problems : list of str
            Empty if the audit passed
        '''
        problems = []
        for n in range(1, self.length + 1):
            A = self.differential(n)
            nonzero: Dict[Word, set] = {}
            for (i, j) in A.entries:
                nonzero.setdefault(self.word_of_index(n, j), set()).add(self.word_of_index(n - 1, i))
            partners: Dict[Word, int] = Counter(_Builder.boundary(w)[0] for w in self.words[n])
            for w in self.words[n]:
                rows = nonzero.get(w, set())
                if len(rows) != 1:
                    problems.append('n = %i: block column %s has %i nonzero blocks' % (n, word_text(w), len(rows)))
            row_counts = Counter(t for rows in nonzero.values() for t in rows)
            for t in self.words[n - 1]:
                count = row_counts.get(t, 0)
                if count != partners.get(t, 0) or count > 2:
                    problems.append('n = %i: block row %s has %i nonzero blocks, expected %i'
                                    % (n, word_text(t), count, partners.get(t, 0)))
        return problems

    def focus_blocks(self, n) -> List[FocusBlock]:
        '''
        The blocks d_1^F (x) id_ell and d_1^E (x) id_ell of d_n with the largest multiplicity ell.
        '''
        if not 1 <= n <= self.length:
            raise ValueError('Differential %i is not computed' % n)
        A = self.differential(n)
        out = []
        for kind in ('F', 'E'):
            if kind == 'F':
                candidates = [w for w in self.words[n] if w[0] == 1]
            else:
                candidates = [w for w in self.words[n] if w[0] == 0 and w[1] and w[1][0][0] == 1]
            candidates = [w for w in candidates if self.word_rank(w) > 0]
            if not candidates or not self.lifted[kind]:
                continue
            d1 = self.lifted[kind][0]
            best = max(candidates, key=lambda w: (self.word_rank(w) // d1.ncols, [-k for k in word_key(w)[1]]))
            ell = self.word_rank(best) // d1.ncols
            target = _Builder.boundary(best)[0]
            rows = list(range(self.offset(n - 1, target), self.offset(n - 1, target) + ell * d1.nrows))
            cols = list(range(self.offset(n, best), self.offset(n, best) + ell * d1.ncols))
            try:
                check_tensor_embedding(d1, ell, A, rows, cols)
                literal = True
            except BadEmbeddingError as e:
                logger.warning('Focus block %s at n = %i is not literal: %s' % (kind, n, e))
                literal = False
            out.append(FocusBlock(kind, n, best, ell, literal))
        return out


class _Builder:
    '''
    Enumerates the summands of the Moore complex and assembles its differentials.
    '''

    def __init__(self, components: Dict[str, Resolution], lifted: Dict[str, List[GradedMatrix]]):
        self.components = components
        self.lifted = lifted

        @lru_cache(maxsize=None)
        def pair_sequences(total):
            if total == 0:
                return [()]
            out = []
            for b in range(1, total):
                if self.rank('E', b) == 0:
                    continue
                for c in range(1, total - b + 1):
                    if self.rank('F', c) == 0:
                        continue
                    out.extend(((b, c),) + rest for rest in pair_sequences(total - b - c))
            return out

        self._pair_sequences = pair_sequences

    def rank(self, name, h) -> int:
        return self.components[name].free(h).rank

    @staticmethod
    def rank_of(components, word: Word) -> int:
        a, pairs, d = word
        rank = components['F'].free(a).rank if a else 1
        for b, c in pairs:
            rank *= components['E'].free(b).rank * components['F'].free(c).rank
        return rank * components['P'].free(d).rank

    def factors(self, word: Word) -> List[Tuple[int, ...]]:
        a, pairs, d = word
        out = [self.components['F'].free(a).degrees] if a else []
        for b, c in pairs:
            out.append(self.components['E'].free(b).degrees)
            out.append(self.components['F'].free(c).degrees)
        out.append(self.components['P'].free(d).degrees)
        return out

    def words(self, n) -> List[Word]:
        out = []
        for a in range(n + 1):
            if a and self.rank('F', a) == 0:
                continue
            for d in range(n - a + 1):
                if self.rank('P', d) == 0:
                    continue
                out.extend((a, pairs, d) for pairs in self._pair_sequences(n - a - d))
        return sorted(out, key=word_key)

    @staticmethod
    def boundary(word: Word) -> Tuple[Word, str, int]:
        '''
        Target summand, acting complex and homological degree of the leftmost factor.
        '''
        a, pairs, d = word
        if a:
            return (a - 1, pairs, d), 'F', a
        if pairs:
            (b, c), rest = pairs[0], pairs[1:]
            if b >= 2:
                return (0, ((b - 1, c),) + rest, d), 'E', b
            return (c, rest, d), 'E', b
        return (0, (), d - 1), 'P', d

    def module(self, R, words) -> GradedFreeModule:
        degrees = []
        for w in words:
            degrees.extend(tensor_degrees(self.factors(w)))
        return GradedFreeModule(R, degrees)

    def differential(self, source_words, target_words, source, target) -> GradedMatrix:
        toff, pos = {}, 0
        for w in target_words:
            toff[w] = pos
            pos += self.rank_of(self.components, w)
        entries = {}
        col = 0
        for w in source_words:
            t, name, h = self.boundary(w)
            D = self.lifted[name][h - 1]
            rest = tensor_degrees(self.factors(w)[1:])
            block = D.tensor_identity(rest)
            for (i, j), poly in block.entries.items():
                entries[(toff[t] + i, col + j)] = poly
            col += block.ncols
        return GradedMatrix(source, target, entries, normalize=False)


def _resolve_to_depth(M, n, name, supplied, degree_cap, degree_slack) -> Resolution:
    if supplied is None:
        return minimal_resolution(M, n, degree_cap=degree_cap, degree_slack=degree_slack)
    if supplied.length < n and not supplied.terminated:
        raise DepthTooLowError('Resolution %s has length %i, need %i' % (name, supplied.length, n))
    return supplied


def moore_resolution(M: ModulePresentation, R: FiberProductRing, n_max, E: Optional[Resolution] = None,
                     F: Optional[Resolution] = None, P: Optional[Resolution] = None, degree_cap=None,
                     degree_slack=DEFAULT_DEGREE_SLACK) -> MooreResolution:
    '''
    Assemble the minimal resolution of M over the fiber product R from resolutions over its factors.

    Parameters
    ----------
    M : ModulePresentation
        A module over one factor of R
    R : FiberProductRing
    n_max : int
    E : Resolution, optional
        Resolution of k over the ring of M, computed if not given
    F : Resolution, optional
        Resolution of k over the other factor, computed if not given
    P : Resolution, optional
        Resolution of M, computed if not given

    Returns
    -------
    resolution : MooreResolution

    Raises
    ------
    DepthTooLowError
        If a supplied resolution stops before the depth needed for n_max
    NotMinimalError
    '''
    if M.ring is R.left:
        side, other = 'left', 'right'
    elif M.ring is R.right:
        side, other = 'right', 'left'
    else:
        raise ValueError('The module must be over one of the factors of %s' % R)
    own, far = R.side(side), R.side(other)
    E = _resolve_to_depth(ModulePresentation.residue_field(own), max(n_max - 1, 0), 'E', E, degree_cap, degree_slack)
    F = _resolve_to_depth(ModulePresentation.residue_field(far), n_max, 'F', F, degree_cap, degree_slack)
    P = _resolve_to_depth(M, n_max, 'P', P, degree_cap, degree_slack)
    components = {'E': E, 'F': F, 'P': P}
    lifted = {'E': lift_complex(E, R, side), 'F': lift_complex(F, R, other), 'P': lift_complex(P, R, side)}
    builder = _Builder(components, lifted)

    words = [builder.words(0)]
    modules = [builder.module(R, words[0])]
    diffs = []
    for n in range(1, n_max + 1):
        ws = builder.words(n)
        if not ws:
            break
        G = builder.module(R, ws)
        diffs.append(builder.differential(ws, words[-1], G, modules[-1]))
        words.append(ws)
        modules.append(G)
        logger.info('Moore G_%i: %i summands, rank %i' % (n, len(ws), G.rank))

    length = len(diffs)
    certified, complete = [], []
    for n in range(length + 1):
        parts = [(res, min(n, res.length)) for res in components.values()]
        cert = all(res.certified(k) for res, k in parts)
        certified.append(cert)
        complete.append(math.inf if cert else min(res.complete_through(k) for res, k in parts))
    terminated = length < n_max or (not builder.words(n_max + 1) and all(r.terminated for r in components.values()))
    if not diffs:
        presentation = ModulePresentation(GradedMatrix(GradedFreeModule(R, []), modules[0], {}), name=M.name)
    else:
        presentation = ModulePresentation(diffs[0], name=M.name)
    return MooreResolution(presentation, diffs, words, components, lifted, certified, complete, terminated)


def compare_with_direct(moore: Resolution, direct: Resolution) -> List[dict]:
    '''
    Ranks and graded Betti numbers of two resolutions of the same module, step by step.
    '''
    out = []
    for n in range(min(moore.length, direct.length) + 1):
        out.append({
            'n'      : n,
            'moore'  : moore.free(n).rank,
            'direct' : direct.free(n).rank,
            'graded' : moore.graded_betti(n) == direct.graded_betti(n),
            'certified': direct.certified(n),
        })
    return out
