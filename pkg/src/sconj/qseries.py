"""Exact polynomials in q, R, C and the generating functions of the r_s/c_s statistics.

Everything is integer arithmetic on sparse ``{exponents: coefficient}`` maps.
``Q`` always denotes ``q**s``.  Series-valued functions take an explicit
``max_degree`` and are exact for every q-exponent up to it.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .partitions import DomainError, InvariantError, check_remainder_vector, wmaj

DEFAULT_VARS = ("q", "R", "C")


class MultiPoly:
    """Sparse Laurent polynomial with integer coefficients.

    ``terms`` maps exponent tuples (ordered like ``variables``) to non-zero
    integer coefficients.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, terms=None, variables=DEFAULT_VARS):
        self.variables = tuple(variables)
        self.terms = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent {exps} does not match variables {self.variables}")
            if coef:
                self.terms[exps] = self.terms.get(exps, 0) + coef
                if not self.terms[exps]:
                    del self.terms[exps]

    @classmethod
    def constant(cls, c, variables=DEFAULT_VARS):
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, coef=1, variables=DEFAULT_VARS, **exps):
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        return cls({tuple(exps.get(v, 0) for v in variables): coef}, variables)

    @classmethod
    def from_coefficients(cls, coeffs, var="q", variables=None):
        """Univariate polynomial from a dense coefficient list (index = exponent)."""
        variables = tuple(variables or (var,))
        idx = variables.index(var)
        terms = {}
        for e, c in enumerate(coeffs):
            if c:
                exps = [0] * len(variables)
                exps[idx] = e
                terms[tuple(exps)] = c
        return cls(terms, variables)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(terms, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other, max_degree=None, var="q"):
        """Product, optionally dropping terms whose ``var`` exponent exceeds ``max_degree``."""
        if isinstance(other, int):
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.variables)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        idx = self.variables.index(var) if max_degree is not None else None
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if idx is not None and e[idx] > max_degree:
                    continue
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(terms, self.variables)

    def __pow__(self, n):
        out = MultiPoly.constant(1, self.variables)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def truncate(self, max_degree, var="q"):
        idx = self.variables.index(var)
        return MultiPoly({e: c for e, c in self.terms.items() if e[idx] <= max_degree}, self.variables)

    def shift(self, **exps):
        """Multiply by a monomial with unit coefficient."""
        add = tuple(exps.get(v, 0) for v in self.variables)
        return MultiPoly(
            {tuple(a + b for a, b in zip(e, add)): c for e, c in self.terms.items()},
            self.variables,
        )

    def dilate(self, var, factor):
        """Substitute ``var -> var**factor``."""
        idx = self.variables.index(var)
        return MultiPoly(
            {e[:idx] + (e[idx] * factor,) + e[idx + 1:]: c for e, c in self.terms.items()},
            self.variables,
        )

    def embed(self, variables):
        """The same polynomial viewed over a superset of its variables."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for p, x in zip(pos, e):
                new[p] = x
            terms[tuple(new)] = c
        return MultiPoly(terms, variables)

    def coefficient(self, **exps):
        """Coefficient of a monomial in the given variables.

        Returns an ``int`` when every variable is fixed, otherwise a
        polynomial in the remaining variables.
        """
        fixed = {self.variables.index(v): e for v, e in exps.items()}
        rest = [i for i in range(len(self.variables)) if i not in fixed]
        terms = {}
        for e, c in self.terms.items():
            if all(e[i] == x for i, x in fixed.items()):
                key = tuple(e[i] for i in rest)
                terms[key] = terms.get(key, 0) + c
        if not rest:
            return terms.get((), 0)
        return MultiPoly(terms, tuple(self.variables[i] for i in rest))

    def degree(self, var="q"):
        idx = self.variables.index(var)
        return max((e[idx] for e in self.terms), default=None)

    def min_degree(self, var="q"):
        idx = self.variables.index(var)
        return min((e[idx] for e in self.terms), default=None)

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self.terms for x in e)

    def require_polynomial(self):
        if not self.is_polynomial():
            bad = min(self.terms)
            raise InvariantError(f"negative exponent {bad} in a polynomial result")
        return self

    def coefficients(self, var="q") -> list[int]:
        """Dense coefficient list of a univariate polynomial."""
        if len(self.variables) != 1 or self.variables[0] != var:
            raise ValueError("dense coefficients need a univariate polynomial")
        self.require_polynomial()
        deg = self.degree(var)
        out = [0] * ((deg + 1) if deg is not None else 0)
        for (e,), c in self.terms.items():
            out[e] = c
        return out

    def to_json(self) -> list[dict]:
        return [
            dict(zip(self.variables, e), coef=c) for e, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, data, variables=DEFAULT_VARS):
        return cls({tuple(t[v] for v in variables): t["coef"] for t in data}, variables)

    def __repr__(self):
        return f"MultiPoly({self.terms!r}, variables={self.variables!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        if len(self.variables) == 1:
            low = self.min_degree(self.variables[0])
            if low > 0 and len(self.terms) > 1:
                v = self.variables[0]
                inner = self.shift(**{v: -low})
                return f"{_power(v, low)}*({_format_terms(inner)})"
        return _format_terms(self)


def _power(var, e):
    return var if e == 1 else f"{var}^{e}"


def _format_terms(p: MultiPoly) -> str:
    # sort by total degree, then by exponent tuple
    items = sorted(p.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    pieces = []
    for e, c in items:
        mono = "*".join(_power(v, x) for v, x in zip(p.variables, e) if x)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


# --- q-binomials ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _qbinom_coeffs(n: int, k: int) -> tuple[int, ...]:
    if k < 0 or n < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    a = _qbinom_coeffs(n - 1, k - 1)
    b = _qbinom_coeffs(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def qbinom(n: int, k: int, step: int = 1, variables=("q",)) -> MultiPoly:
    """Gaussian binomial ``[n, k]`` in ``q**step``; zero unless ``0 <= k <= n``."""
    poly = MultiPoly.from_coefficients(_qbinom_coeffs(n, k), "q", variables)
    return poly.dilate("q", step) if step != 1 else poly


def _q_factorial_coeffs(n: int) -> list[int]:
    out = [1]
    for i in range(1, n + 1):
        # multiply by 1 + q + ... + q^(i-1)
        new = [0] * (len(out) + i - 1)
        for j, c in enumerate(out):
            for t in range(i):
                new[j + t] += c
        out = new
    return out


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    if not den or den[0] == 0:
        raise ZeroDivisionError("divisor must have a non-zero constant term")
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out)):
        q, r = divmod(num[i], den[0])
        if r:
            raise InvariantError("polynomial division is not exact")
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[len(out):]):
        raise InvariantError("polynomial division is not exact")
    return out


def q_multinomial(top: int, bottoms, step: int = 1) -> MultiPoly:
    """``[top]! / prod [b]!`` by exact division of q-factorials; 0 if any ``b < 0``."""
    bottoms = list(bottoms)
    if top < 0 or any(b < 0 for b in bottoms):
        return MultiPoly({}, ("q",))
    coeffs = _q_factorial_coeffs(top)
    for b in bottoms:
        coeffs = _exact_divide(coeffs, _q_factorial_coeffs(b))
    return MultiPoly.from_coefficients(coeffs).dilate("q", step)


# --- q-shifted factorials -------------------------------------------------------


def _q_degree(z: MultiPoly) -> int:
    if len(z.terms) != 1:
        raise DomainError("expected a monomial")
    return z.min_degree("q")


def poch_truncated(z: MultiPoly, k, step: int, max_degree: int) -> MultiPoly:
    """``(z; Q)_k = prod_{i<k} (1 - z Q^i)`` with ``Q = q**step``, truncated.

    ``k`` may be ``math.inf`` when ``z`` has positive q-degree.
    """
    dz = _q_degree(z)
    if k == math.inf:
        if dz <= 0:
            raise DomainError("infinite product (z;Q)_inf needs z of positive q-degree")
        k = max(0, (max_degree - dz) // step + 1)
    out = MultiPoly.constant(1, z.variables)
    for i in range(int(k)):
        factor = 1 - z.shift(q=i * step)
        out = out.mul(factor, max_degree)
    return out.truncate(max_degree)


def inv_poch_truncated(z: MultiPoly, k: int, step: int, max_degree: int) -> MultiPoly:
    """``1 / (z; Q)_k`` via ``sum_l [l+k-1, l]_Q z**l``, truncated."""
    dz = _q_degree(z)
    if dz <= 0:
        raise DomainError("series expansion needs z of positive q-degree")
    if k == 0:
        return MultiPoly.constant(1, z.variables)
    out = MultiPoly({}, z.variables)
    zl = MultiPoly.constant(1, z.variables)
    for l in itertools.count():
        if l * dz > max_degree:
            break
        coef = qbinom(l + k - 1, l, step).embed(z.variables)
        out = out + coef.mul(zl, max_degree)
        zl = zl.mul(z, max_degree)
    return out.truncate(max_degree)


# --- generating functions ------------------------------------------------------


def _empty_block_terms(s: int, budget: int) -> list[MultiPoly]:
    """``[E_1, E_2, ...]`` with ``E_k = C Q^k / (CQ; Q)_k`` truncated at ``budget``."""
    cq = MultiPoly.monomial(q=s, C=1)
    out = []
    for k in range(1, budget // s + 1):
        head = MultiPoly.monomial(q=s * k, C=1)
        out.append(head.mul(inv_poch_truncated(cq, k, s, budget - s * k), budget))
    return out


def gf_empty(s: int, max_degree: int) -> MultiPoly:
    """``1 + sum_k R^k C Q^k / (CQ; Q)_k``: partitions with all parts divisible by ``s``."""
    if s < 1:
        raise DomainError("s must be positive")
    out = MultiPoly.constant(1)
    for k, block in enumerate(_empty_block_terms(s, max_degree), 1):
        out = out + block.shift(R=k)
    return out.truncate(max_degree)


def gf_sum_form(s: int, rv, max_degree: int) -> MultiPoly:
    """Single-sum generating function of partitions with remainder sequence ``rv``,
    weighted by ``R^r C^c q^|lambda|``, exact up to ``q**max_degree``."""
    rv = check_remainder_vector(rv, s)
    m = len(rv)
    if m == 0:
        return gf_empty(s, max_degree)
    lead = sum(rv) + s * (math.comb(m, 2) - wmaj(rv))
    budget = max_degree - lead
    if budget < 0:
        return MultiPoly({})
    blocks = _empty_block_terms(s, budget)
    out = MultiPoly({})
    for i in range(m, m + budget // s + 1):
        inner = MultiPoly.monomial(R=i - m)
        for k, block in enumerate(blocks, 1):
            inner = inner + block.shift(R=max(i - m, k - m))
        weight = qbinom(i - 1, m - 1, s).embed(DEFAULT_VARS).shift(q=s * (i - m))
        out = out + weight.mul(inner, budget)
    return out.shift(q=lead).truncate(max_degree).require_polynomial()


def d_vector(rv, gamma) -> tuple[int, ...]:
    """0/1 weights: ``d_j = 0`` iff ``rv`` weakly descends into j and the rows are adjacent."""
    rv, gamma = tuple(rv), tuple(gamma)
    if len(rv) != len(gamma):
        raise DomainError("remainder vector and position sequence differ in length")
    return tuple(
        0 if j > 0 and rv[j - 1] >= rv[j] and gamma[j] == gamma[j - 1] + 1 else 1
        for j in range(len(rv))
    )


def position_sequences(m: int, last: int):
    """All ``1 <= g_1 < ... < g_m`` with ``g_m = last``."""
    if m == 0:
        if last == 0:
            yield ()
        return
    for head in itertools.combinations(range(1, last), m - 1):
        yield head + (last,)


def gf_position_sum(s: int, rv, max_degree: int) -> MultiPoly:
    """Generating function as an explicit sum over row position sequences,
    each weighted through the 0/1 vector :func:`d_vector`."""
    rv = check_remainder_vector(rv, s)
    m = len(rv)
    if m == 0:
        return gf_empty(s, max_degree)
    budget = max_degree - sum(rv)
    if budget < 0:
        return MultiPoly({})
    blocks = _empty_block_terms(s, budget)
    out = MultiPoly({})
    # d_1 = 1 and g_1 >= last - m + 1, so every weight is at least Q^(last - m)
    for last in range(m, m + budget // s + 1):
        weights = {}
        for gamma in position_sequences(m, last):
            e = s * sum(d * (g - 1) for d, g in zip(d_vector(rv, gamma), gamma))
            if e <= budget:
                weights[e] = weights.get(e, 0) + 1
        inner = MultiPoly.monomial(R=last - m)
        for k, block in enumerate(blocks, 1):
            inner = inner + block.shift(R=max(last - m, k - m))
        weight = MultiPoly({(e, 0, 0): c for e, c in weights.items()})
        out = out + weight.mul(inner, budget)
    return out.shift(q=sum(rv)).truncate(max_degree)


@lru_cache(maxsize=None)
def _gf_closed(s, rv, r, c):
    m = len(rv)
    if r < 0 or c < 0:
        return MultiPoly({}, ("q",))
    e = s * (-wmaj(rv) + math.comb(m, 2) + r + c)
    if r == 0 and c == 0:
        # [m-2, 0] is an empty product even for m <= 1; the other summand vanishes
        return MultiPoly.constant(1, ("q",)).shift(q=sum(rv) + e)
    first = qbinom(r + m - 1, m - 1, s) * qbinom(r + c + m - 2, c, s)
    second = (qbinom(r + m, m, s) * qbinom(r + c + m - 2, c - 1, s)).shift(q=s * (m - 1))
    return (first + second).shift(q=sum(rv) + e)


def gf_closed(s: int, rv, r: int, c: int) -> MultiPoly:
    """Polynomial in q counting partitions with remainder sequence ``rv`` and
    statistics ``(r_s, c_s) = (r, c)`` by size."""
    rv = check_remainder_vector(rv, s)
    return _gf_closed(s, rv, r, c).require_polynomial()


def gf_symmetric(s: int, rv, r: int, c: int) -> MultiPoly:
    """Same polynomial as :func:`gf_closed`, written with q-multinomials
    so that the symmetry in ``r`` and ``c`` is manifest."""
    rv = check_remainder_vector(rv, s)
    m = len(rv)
    if m == 0 and r == 0 and c == 0:
        return MultiPoly.constant(1, ("q",))
    e = s * (-wmaj(rv) + math.comb(m, 2) + r + c)
    first = q_multinomial(r + c + m - 1, (r, c, m - 1), s)
    second = q_multinomial(r + c + m - 2, (r - 1, c - 1, m), s).shift(q=s * (m - 1))
    return (first + second).shift(q=sum(rv) + e).require_polynomial()


def bf_product(s: int, max_degree: int, max_t_degree: int) -> MultiPoly:
    """``(Q;Q)_inf / ((q;q)_inf (tQ;Q)_inf)`` in variables ``(t, q)``, truncated in both."""
    if s < 1:
        raise DomainError("s must be positive")
    vars_ = ("t", "q")
    out = MultiPoly.constant(1, vars_)
    # 1/(q;q)_inf
    for i in range(1, max_degree + 1):
        geom = MultiPoly({(0, i * j): 1 for j in range(max_degree // i + 1)}, vars_)
        out = out.mul(geom, max_degree)
    # 1/(tQ;Q)_inf
    for i in range(1, max_degree // s + 1):
        geom = MultiPoly(
            {(j, s * i * j): 1 for j in range(min(max_t_degree, max_degree // (s * i)) + 1)},
            vars_,
        )
        out = out.mul(geom, max_degree)
    out = poch_truncated(MultiPoly.monomial(q=s, variables=vars_), math.inf, s, max_degree).mul(
        out, max_degree
    )
    return MultiPoly({e: c for e, c in out.terms.items() if e[0] <= max_t_degree}, vars_)
