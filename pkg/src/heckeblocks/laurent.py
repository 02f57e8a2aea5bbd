"""Exact integer Laurent polynomials in one variable v.

Sparse canonical form: a dict mapping exponent (possibly negative) to a
nonzero integer coefficient.  Instances are treated as immutable.
"""

from __future__ import annotations

from .errors import NonExactDivision


class LaurentPoly:
    """Integer Laurent polynomial, canonical sparse form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {k: c for k, c in coeffs.items() if c != 0}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def min_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self.coeffs)

    def max_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def coeff(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            new = out.get(k, 0) + c
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {k: -c for k, c in self.coeffs.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            new = out.get(k, 0) - c
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            res = LaurentPoly.__new__(LaurentPoly)
            res.coeffs = {} if other == 0 else {k: c * other for k, c in self.coeffs.items()}
            return res
        out: dict = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                new = out.get(k, 0) + c1 * c2
                if new:
                    out[k] = new
                else:
                    out.pop(k, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def shift(self, exp: int) -> "LaurentPoly":
        """Multiply by v^exp."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {k + exp: c for k, c in self.coeffs.items()}
        return res

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^{-1}."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {-k: c for k, c in self.coeffs.items()}
        return res

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Divide with zero remainder required."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        rem = dict(self.coeffs)
        d_top = divisor.max_degree()
        d_lead = divisor.coeffs[d_top]
        # an exact quotient has no exponent below this bound
        lo = self.min_degree() - divisor.min_degree()
        out: dict = {}
        while rem:
            top = max(rem)
            q, r = divmod(rem[top], d_lead)
            shift = top - d_top
            if r != 0 or shift < lo:
                raise NonExactDivision(f"{self} is not divisible by {divisor}")
            out[shift] = q
            for k, c in divisor.coeffs.items():
                kk = k + shift
                new = rem.get(kk, 0) - q * c
                if new:
                    rem[kk] = new
                else:
                    rem.pop(kk, None)
        return LaurentPoly(out)

    # -- specializations -----------------------------------------------------

    def eval_at_one(self) -> int:
        return sum(self.coeffs.values())

    def derivative_at_one(self) -> int:
        return sum(k * c for k, c in self.coeffs.items())

    # -- cone membership -------------------------------------------------------

    def in_v_lattice(self) -> bool:
        """All terms of strictly positive degree (membership in vZ[v])."""
        return all(k >= 1 for k in self.coeffs)

    def in_nonneg_poly(self) -> bool:
        """All exponents >= 0 and all coefficients >= 0 (N_0[v])."""
        return all(k >= 0 and c >= 0 for k, c in self.coeffs.items())

    def in_nonneg_symmetric(self) -> bool:
        """Membership in N_0[v + v^{-1}]: greedy top-degree extraction."""
        rem = dict(self.coeffs)
        while rem:
            top = max(rem)
            if top < 0:
                return False
            c = rem[top]
            if c < 0:
                return False
            # subtract c * (v + v^{-1})^top
            binom = 1
            for j in range(top + 1):
                kk = top - 2 * j
                new = rem.get(kk, 0) - c * binom
                if new:
                    rem[kk] = new
                else:
                    rem.pop(kk, None)
                binom = binom * (top - j) // (j + 1)
        return True

    def symmetric_completion(self) -> "LaurentPoly":
        """The bar-symmetric polynomial matching this one in degrees <= 0.

        For c(v) with terms c_0 + sum_{k>0} c_{-k} v^{-k}, returns
        c_0 + sum_{k>0} c_{-k} (v^k + v^{-k}).
        """
        out: dict = {}
        for k, c in self.coeffs.items():
            if k == 0:
                out[0] = out.get(0, 0) + c
            elif k < 0:
                out[k] = out.get(k, 0) + c
                out[-k] = out.get(-k, 0) + c
        return LaurentPoly(out)

    def has_nonpositive_term(self) -> bool:
        return any(k <= 0 for k in self.coeffs)

    # -- text form ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"

    def format(self) -> str:
        """Human/golden-file form, e.g. "3v^2", "v + v^-1", "0"."""
        if not self.coeffs:
            return "0"
        terms = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                vpart = "v" if k == 1 else f"v^{k}"
                body = vpart if mag == 1 else f"{mag}{vpart}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def parse(text: str) -> "LaurentPoly":
        """Inverse of format (also accepts compact forms like "v+v^-1")."""
        text = text.strip().replace(" ", "")
        if text in ("", "0"):
            return LaurentPoly.zero()
        # split into signed terms
        out: dict = {}
        i = 0
        sign = 1
        if text[0] in "+-":
            sign = -1 if text[0] == "-" else 1
            i = 1
        term = ""
        for ch in text[i:] + "+":
            if ch in "+-" and term and term[-1] != "^":
                exp, coeff = _parse_term(term)
                new = out.get(exp, 0) + sign * coeff
                if new:
                    out[exp] = new
                else:
                    out.pop(exp, None)
                sign = -1 if ch == "-" else 1
                term = ""
            else:
                term += ch
        return LaurentPoly(out)


def _parse_term(term: str):
    """Parse one unsigned term like "3v^2", "v", "v^-1", "7" -> (exp, coeff)."""
    if "v" not in term:
        return 0, int(term)
    head, _, tail = term.partition("v")
    coeff = int(head) if head else 1
    if tail.startswith("^"):
        exp = int(tail[1:])
    elif tail == "":
        exp = 1
    else:
        raise ValueError(f"cannot parse term {term!r}")
    return exp, coeff


def quantum_int(a: int) -> LaurentPoly:
    """[a] = v^{a-1} + v^{a-3} + ... + v^{1-a}."""
    return LaurentPoly({a - 1 - 2 * j: 1 for j in range(a)})


def quantum_factorial(a: int) -> LaurentPoly:
    """[a]! = [1][2]...[a]."""
    out = LaurentPoly.one()
    for j in range(2, a + 1):
        out = out * quantum_int(j)
    return out
