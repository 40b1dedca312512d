"""Exact sparse multivariate polynomials over the rationals.

Monomials are packed into a single Python int: one 9-bit field per variable
(8 value bits plus a guard bit used for the divisibility test) with the total
degree stored above all fields.  With that layout, monomial multiplication is
integer addition and comparing packed keys is graded-lex comparison, with
``x`` the most significant variable.

Coefficients are ``int`` whenever possible and ``Fraction`` otherwise.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

ALPHABET: tuple[str, ...] = (
    "x", "y", "tu", "td", "uu", "ud", "tuu", "tdd", "tud", "tdu",
    "a", "b", "su", "sd", "t",
)
NVARS = len(ALPHABET)
VAR_INDEX = {name: i for i, name in enumerate(ALPHABET)}

_FIELD = 9
_MAXEXP = 255
_DEG_SHIFT = _FIELD * NVARS
_FIELDS_MASK = (1 << _DEG_SHIFT) - 1
_GUARDS = sum(1 << (_FIELD * i + 8) for i in range(NVARS))
_SHIFTS = tuple(_FIELD * (NVARS - 1 - i) for i in range(NVARS))

Rational = Union[int, Fraction]
Coeff = Rational


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def pack(exponents: Sequence[int]) -> int:
    """Pack a full exponent vector (one entry per alphabet variable)."""
    key = 0
    total = 0
    for e, s in zip(exponents, _SHIFTS):
        if e < 0 or e > _MAXEXP:
            raise ValueError(f"exponent {e} out of range")
        key |= e << s
        total += e
    return key | (total << _DEG_SHIFT)


def unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> s) & 0xFF for s in _SHIFTS)


def _key_degree(key: int) -> int:
    return key >> _DEG_SHIFT


def _divides(small: int, big: int) -> bool:
    f = ((big & _FIELDS_MASK) | _GUARDS) - (small & _FIELDS_MASK)
    return f & _GUARDS == _GUARDS


class Poly:
    """Immutable polynomial; ``terms`` maps packed monomials to coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None, *, _trusted: bool = False):
        if _trusted:
            self._t = terms  # type: ignore[assignment]
        else:
            self._t = {k: _norm(c) for k, c in (terms or {}).items() if c != 0}
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c: Rational) -> "Poly":
        c = _norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return cls({0: c} if c != 0 else {}, _trusted=True)

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        if name not in VAR_INDEX:
            raise KeyError(f"unknown variable {name!r}")
        exps = [0] * NVARS
        exps[VAR_INDEX[name]] = power
        return cls({pack(exps): 1}, _trusted=True)

    @classmethod
    def monomial(cls, coeff: Rational, powers: Mapping[str, int]) -> "Poly":
        exps = [0] * NVARS
        for name, e in powers.items():
            exps[VAR_INDEX[name]] += e
        return cls({pack(exps): coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], Rational]]) -> "Poly":
        out: dict[int, Rational] = {}
        for powers, c in terms:
            exps = [0] * NVARS
            for name, e in powers.items():
                exps[VAR_INDEX[name]] += e
            k = pack(exps)
            out[k] = out.get(k, 0) + c
        return cls(out)

    # -- basic queries -----------------------------------------------------
    @property
    def terms(self) -> dict[int, Rational]:
        return self._t

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> Rational:
        return self._t.get(0, 0)

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return _key_degree(max(self._t))

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self._t:
            return -1
        s = _SHIFTS[VAR_INDEX[name]]
        return max((k >> s) & 0xFF for k in self._t)

    def variables(self) -> set[str]:
        seen = 0
        for k in self._t:
            seen |= k
        return {n for n, s in zip(ALPHABET, _SHIFTS) if (seen >> s) & 0xFF}

    def leading(self) -> tuple[int, Rational]:
        k = max(self._t)
        return k, self._t[k]

    def items(self) -> Iterator[tuple[dict[str, int], Rational]]:
        """Yield (powers, coefficient) in graded-lex descending order."""
        for k in sorted(self._t, reverse=True):
            exps = unpack(k)
            yield {n: e for n, e in zip(ALPHABET, exps) if e}, self._t[k]

    # -- ring operations ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: other} if other != 0 else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if not other._t:
            return self
        if not self._t:
            return other
        a, b = (self._t, other._t) if len(self._t) >= len(other._t) else (other._t, self._t)
        out = dict(a)
        for k, c in b.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = _norm(v) if isinstance(v, Fraction) else v
                else:
                    del out[k]
        return Poly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({k: -c for k, c in self._t.items()}, _trusted=True)

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if not other._t:
            return self
        out = dict(self._t)
        for k, c in other._t.items():
            v = out.get(k)
            if v is None:
                out[k] = -c
            else:
                v = v - c
                if v:
                    out[k] = _norm(v) if isinstance(v, Fraction) else v
                else:
                    del out[k]
        return Poly(out, _trusted=True)

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c: Rational) -> "Poly":
        if c == 0:
            return ZERO
        if c == 1:
            return self
        return Poly({k: _norm(v * c) for k, v in self._t.items()}, _trusted=True)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if _key_degree(max(a)) + _key_degree(max(b)) > _MAXEXP:
            raise OverflowError("polynomial degree exceeds packed exponent range")
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return Poly({ka + kb: ca for ka, ca in a.items()}, _trusted=True)
            return Poly({ka + kb: _norm(ca * cb) for ka, ca in a.items()}, _trusted=True)
        out: dict[int, Rational] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Poly({k: _norm(c) for k, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divexact(self, d: "Poly") -> "Poly":
        """Quotient ``self / d``; raises ArithmeticError if it is not exact."""
        if not d._t:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._t:
            return ZERO
        if len(d._t) == 1:
            (kd, cd), = d._t.items()
            out = {}
            for k, c in self._t.items():
                if not _divides(kd, k):
                    raise ArithmeticError("inexact polynomial division")
                out[k - kd] = _norm(Fraction(c, cd) if isinstance(c, int) and isinstance(cd, int) else c / cd)
            return Poly(out, _trusted=True)
        kd, cd = d.leading()
        dterms = [(k, c) for k, c in d._t.items() if k != kd]
        rem = dict(self._t)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quo: dict[int, Rational] = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.pop(k, None)
            if c is None:
                continue
            while heap and -heap[0] == k:
                heapq.heappop(heap)
            if not _divides(kd, k):
                raise ArithmeticError("inexact polynomial division")
            qk = k - kd
            qc = Fraction(c, cd) if isinstance(c, int) and isinstance(cd, int) else c / cd
            qc = _norm(qc)
            quo[qk] = qc
            for k2, c2 in dterms:
                kk = qk + k2
                v = rem.get(kk)
                if v is None:
                    rem[kk] = -qc * c2
                    heapq.heappush(heap, -kk)
                else:
                    v = v - qc * c2
                    if v:
                        rem[kk] = v
                    else:
                        del rem[kk]
        return Poly(quo, _trusted=True)

    # -- evaluation and substitution --------------------------------------
    def eval(self, point: Mapping[str, Rational]) -> Rational:
        """Exact value at ``point``; every occurring variable must be assigned."""
        names = self.variables()
        missing = names - set(point)
        if missing:
            raise KeyError(f"unassigned variables: {sorted(missing)}")
        active = [(s, Fraction(point[n]) if not isinstance(point[n], (int, Fraction)) else point[n])
                  for n, s in zip(ALPHABET, _SHIFTS) if n in names]
        total: Rational = 0
        for k, c in self._t.items():
            v = c
            for s, val in active:
                e = (k >> s) & 0xFF
                if e:
                    v = v * val ** e
            total += v
        return _norm(total) if isinstance(total, Fraction) else total

    def eval_mod(self, point: Mapping[str, int], p: int) -> int:
        """Value modulo the prime ``p`` with integer coordinates in ``point``."""
        names = self.variables()
        active = [(s, point[n] % p) for n, s in zip(ALPHABET, _SHIFTS) if n in names]
        total = 0
        for k, c in self._t.items():
            if isinstance(c, Fraction):
                v = c.numerator * pow(c.denominator, -1, p) % p
            else:
                v = c % p
            for s, val in active:
                e = (k >> s) & 0xFF
                if e:
                    v = v * pow(val, e, p) % p
            total += v
        return total % p

    def subs(self, mapping: Mapping[str, Union["Poly", Rational]]) -> "Poly":
        """Substitute polynomials (or numbers) for variables simultaneously."""
        repl = {VAR_INDEX[n]: (v if isinstance(v, Poly) else Poly.const(v)) for n, v in mapping.items()}
        keep_mask = 0
        for i in range(NVARS):
            if i not in repl:
                keep_mask |= 0xFF << _SHIFTS[i]
        cache: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in cache:
                cache[key] = repl[i] ** e
            return cache[key]

        acc: dict[int, Rational] = {}
        for k, c in self._t.items():
            kept = k & keep_mask
            kept_deg = sum((kept >> s) & 0xFF for s in _SHIFTS)
            base = Poly({kept | (kept_deg << _DEG_SHIFT): c}, _trusted=True)
            for i, _ in repl.items():
                e = (k >> _SHIFTS[i]) & 0xFF
                if e:
                    base = base * power(i, e)
                    if not base:
                        break
            for kk, cc in base._t.items():
                acc[kk] = acc.get(kk, 0) + cc
        return Poly(acc)

    def coefficients_in(self, name: str) -> dict[int, "Poly"]:
        """Split by powers of one variable: ``{e: coefficient polynomial}``."""
        i = VAR_INDEX[name]
        s = _SHIFTS[i]
        out: dict[int, dict[int, Rational]] = {}
        for k, c in self._t.items():
            e = (k >> s) & 0xFF
            out.setdefault(e, {})[k - (e << s) - (e << _DEG_SHIFT)] = c
        return {e: Poly(t, _trusted=True) for e, t in out.items()}

    def homogeneous_parts(self, names: Sequence[str]) -> dict[int, "Poly"]:
        """Group terms by their joint degree in ``names``."""
        shifts = [_SHIFTS[VAR_INDEX[n]] for n in names]
        out: dict[int, dict[int, Rational]] = {}
        for k, c in self._t.items():
            d = sum((k >> s) & 0xFF for s in shifts)
            out.setdefault(d, {})[k] = c
        return {d: Poly(t, _trusted=True) for d, t in out.items()}

    # -- text form -----------------------------------------------------------
    def to_text(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for i, (powers, c) in enumerate(self.items()):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in powers.items())
            neg = c < 0
            mag = -c if neg else c
            body = str(mag) if not mono else (mono if mag == 1 and not neg else f"{mag}*{mono}")
            if i == 0:
                parts.append(("-" + body) if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


ZERO = Poly({}, _trusted=True)
ONE = Poly({0: 1}, _trusted=True)

_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str) -> Poly:
    """Inverse of :meth:`Poly.to_text`."""
    text = text.strip()
    if text == "0":
        return ZERO
    # split on top-level +/- that separate terms ("- 1*uu", "+ x")
    tokens = re.split(r"\s+([+-])\s+", text)
    first = tokens[0]
    terms = [("-", first[1:]) if first.startswith("-") else ("+", first)]
    terms += list(zip(tokens[1::2], tokens[2::2]))
    out = ZERO
    for sign, body in terms:
        coeff: Rational = 1
        powers: dict[str, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff = _norm(Fraction(factor))
            else:
                name, _, e = factor.partition("^")
                if name not in VAR_INDEX:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                powers[name] = powers.get(name, 0) + (int(e) if e else 1)
        out = out + Poly.monomial(-coeff if sign == "-" else coeff, powers)
    return out


def var(name: str) -> Poly:
    return Poly.var(name)


def const(c: Rational) -> Poly:
    return Poly.const(c)


# -- matrices -------------------------------------------------------------

PolyMatrix = list[list[Poly]]


def as_poly_matrix(rows: Sequence[Sequence[Union[Poly, Rational]]]) -> PolyMatrix:
    return [[e if isinstance(e, Poly) else Poly.const(e) for e in row] for row in rows]


def mat_shape(m: Sequence[Sequence[object]]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def mat_mul(a: Sequence[Sequence[Poly]], b: Sequence[Sequence[Poly]]) -> PolyMatrix:
    n, k = mat_shape(a)
    k2, p = mat_shape(b)
    if k != k2:
        raise ValueError("dimension mismatch")
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = ZERO
            for r in range(k):
                x, y = a[i][r], b[r][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_add(a: Sequence[Sequence[Poly]], b: Sequence[Sequence[Poly]]) -> PolyMatrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Sequence[Sequence[Poly]], b: Sequence[Sequence[Poly]]) -> PolyMatrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Sequence[Sequence[Poly]], c: Union[Poly, Rational]) -> PolyMatrix:
    return [[x * c for x in row] for row in a]


def identity(n: int) -> PolyMatrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def det_fraction_free(m: Sequence[Sequence[Union[Poly, Rational]]]) -> Poly:
    """Determinant by Bareiss elimination with exact polynomial division.

    Pivots are chosen among the remaining rows and columns to be the entry
    with the fewest terms, which keeps matrices like ``I - M`` cheap.
    """
    n, k = mat_shape(m)
    if n != k:
        raise ValueError(f"determinant of non-square {n}x{k} matrix")
    if n == 0:
        return ONE
    a = as_poly_matrix(m)
    sign = 1
    prev = ONE
    for step in range(n - 1):
        best = None
        for i in range(step, n):
            row = a[i]
            for j in range(step, n):
                e = row[j]
                if e:
                    cost = (len(e), e.total_degree())
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == (1, 0):
                            break
            if best is not None and best[0] == (1, 0):
                break
        if best is None:
            return ZERO
        _, pi, pj = best
        if pi != step:
            a[step], a[pi] = a[pi], a[step]
            sign = -sign
        if pj != step:
            for row in a:
                row[step], row[pj] = row[pj], row[step]
            sign = -sign
        piv = a[step][step]
        prow = a[step]
        for i in range(step + 1, n):
            row = a[i]
            lead = row[step]
            for j in range(step + 1, n):
                v = piv * row[j] if row[j] else ZERO
                if lead and prow[j]:
                    v = v - lead * prow[j]
                if prev != ONE and v:
                    v = v.divexact(prev)
                row[j] = v
            row[step] = ZERO
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_cofactor(m: Sequence[Sequence[Union[Poly, Rational]]]) -> Poly:
    """Laplace expansion along the first row; the test oracle for small sizes."""
    n, k = mat_shape(m)
    if n != k:
        raise ValueError(f"determinant of non-square {n}x{k} matrix")
    a = as_poly_matrix(m)

    def rec(rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
        if not rows:
            return ONE
        r = rows[0]
        total = ZERO
        for idx, c in enumerate(cols):
            e = a[r][c]
            if not e:
                continue
            minor = rec(rows[1:], cols[:idx] + cols[idx + 1:])
            term = e * minor
            total = total - term if idx % 2 else total + term
        return total

    return rec(tuple(range(n)), tuple(range(n)))


def _int_square(a: Sequence[Sequence[int]]) -> int:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    return n


def char_matrix(a: Sequence[Sequence[Rational]]) -> PolyMatrix:
    """xI - A as a polynomial matrix."""
    n = _int_square(a)
    x = Poly.var("x")
    return [[(x if i == j else ZERO) - a[i][j] for j in range(n)] for i in range(n)]


def adjugate_char_matrix(a: Sequence[Sequence[Rational]]) -> PolyMatrix:
    """adj(xI - A) for a square rational matrix A.

    Signed minors up to 6x6; Faddeev-LeVerrier recurrence above that.
    """
    n = _int_square(a)
    if n == 0:
        return []
    if n <= 6:
        return _adjugate_minors(char_matrix(a))
    return _adjugate_faddeev(a)


def _adjugate_minors(xm: PolyMatrix) -> PolyMatrix:
    n = len(xm)
    if n == 1:
        return [[ONE]]
    adj = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for r, row in enumerate(xm) if r != i]
            c = det_cofactor(minor) if n <= 4 else det_fraction_free(minor)
            adj[j][i] = -c if (i + j) % 2 else c
    return adj


def _adjugate_faddeev(a: Sequence[Sequence[Rational]]) -> PolyMatrix:
    # adj(xI - A) = sum_{k=1..n} N_k x^{n-k}, N_1 = I, N_k = A N_{k-1} + c_{k-1} I
    n = len(a)
    A = [[Fraction(v) for v in row] for row in a]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    nk = ident
    mats = [nk]
    c = Fraction(0)
    for k in range(1, n):
        an = [[sum(A[i][r] * nk[r][j] for r in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(an[i][i] for i in range(n)) / k
        nk = [[an[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        mats.append(nk)
    x = Poly.var("x")
    out = [[ZERO] * n for _ in range(n)]
    for k, mk in enumerate(mats, start=1):
        xp = x ** (n - k)
        for i in range(n):
            for j in range(n):
                if mk[i][j]:
                    out[i][j] = out[i][j] + xp * mk[i][j]
    return out


def charpoly(a: Sequence[Sequence[Rational]]) -> Poly:
    """det(xI - A) via Hessenberg reduction over the rationals."""
    n = _int_square(a)
    h = [[Fraction(v) for v in row] for row in a]
    for col in range(n - 2):
        piv = next((r for r in range(col + 1, n) if h[r][col] != 0), None)
        if piv is None:
            continue
        if piv != col + 1:
            h[piv], h[col + 1] = h[col + 1], h[piv]
            for row in h:
                row[piv], row[col + 1] = row[col + 1], row[piv]
        p = h[col + 1][col]
        for r in range(col + 2, n):
            f = h[r][col] / p
            if f:
                hr, hp = h[r], h[col + 1]
                for j in range(n):
                    hr[j] -= f * hp[j]
                for row in h:
                    row[col + 1] += f * row[r]
    # characteristic polynomials of leading principal blocks, as coefficient lists
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for m in range(1, n + 1):
        prev = polys[-1]
        cur = [Fraction(0)] + prev  # x * p_{m-1}
        hmm = h[m - 1][m - 1]
        for i, c in enumerate(prev):
            cur[i] -= hmm * c
        t = Fraction(1)
        for i in range(1, m):
            t *= h[m - i][m - i - 1]
            coef = t * h[m - i - 1][m - 1]
            if coef:
                for j, c in enumerate(polys[m - i - 1]):
                    cur[j] -= coef * c
        polys.append(cur)
    return univariate(polys[-1])


def univariate(coeffs: Sequence[Rational], name: str = "x") -> Poly:
    """Polynomial sum_k coeffs[k] * name^k."""
    shift = _SHIFTS[VAR_INDEX[name]]
    return Poly({(k << shift) | (k << _DEG_SHIFT): c for k, c in enumerate(coeffs) if c})


# -- fingerprints ------------------------------------------------------------

FINGERPRINT_PRIME = (1 << 61) - 1
_MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One step of splitmix64: returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def fingerprint_points(seed: int, count: int = 2) -> list[dict[str, int]]:
    """Pseudorandom evaluation points in [1, p) for every alphabet variable."""
    state = seed & _MASK64
    points = []
    for _ in range(count):
        pt = {}
        for name in ALPHABET:
            state, out = splitmix64(state)
            pt[name] = out % (FINGERPRINT_PRIME - 1) + 1
        points.append(pt)
    return points


def combine_values(values: Sequence[int]) -> int:
    """Mix modular evaluations into one 64-bit fingerprint."""
    h = 0x6A09E667F3BCC908
    for v in values:
        _, h = splitmix64(h ^ v)
    return h


def fingerprint(p: Poly, seed: int, points: int = 2) -> int:
    vals = [p.eval_mod(pt, FINGERPRINT_PRIME) for pt in fingerprint_points(seed, points)]
    return combine_values(vals)


def det_mod(m: Sequence[Sequence[int]], p: int = FINGERPRINT_PRIME) -> int:
    """Determinant of an integer matrix modulo a prime."""
    a = [[v % p for v in row] for row in m]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        pv = a[c][c]
        det = det * pv % p
        inv = pow(pv, -1, p)
        rc = a[c]
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            if f:
                rr = a[r]
                for j in range(c + 1, n):
                    rr[j] = (rr[j] - f * rc[j]) % p
    return det % p
