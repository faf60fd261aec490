"""Dense integer polynomials with exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial over the integers; coefficients ascending by degree.

    The representation is normalized: no trailing zero coefficients, and the
    zero polynomial is the empty tuple.
    """

    coefficients: tuple

    @staticmethod
    def from_coefficients(coeffs) -> "IntPolynomial":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return IntPolynomial(tuple(int(c) for c in coeffs))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def monomial(coeff: int, power: int) -> "IntPolynomial":
        if coeff == 0:
            return IntPolynomial(())
        return IntPolynomial((0,) * power + (coeff,))

    @staticmethod
    def linear_root(root: int) -> "IntPolynomial":
        """The factor (t - root)."""
        return IntPolynomial((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __bool__(self):
        return bool(self.coefficients)

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_coefficients(out)

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def evaluate(self, x: int) -> int:
        val = 0
        for c in reversed(self.coefficients):
            val = val * x + c
        return val

    def text(self) -> str:
        """Human-readable form such as 't^4 - 4t^3 + 6t^2 - 3t'."""
        if not self.coefficients:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def integer_roots(p: IntPolynomial):
    """Multiset of integer roots if p splits into integer linear factors, else None.

    Only monic polynomials are considered (the leading coefficient must be 1);
    characteristic polynomials of central arrangements are always monic.
    """
    coeffs = list(p.coefficients)
    if not coeffs or coeffs[-1] != 1:
        return None
    roots = []
    while len(coeffs) > 1:
        if coeffs[0] == 0:
            roots.append(0)
            coeffs = coeffs[1:]
            continue
        const = abs(coeffs[0])
        found = None
        for k in range(1, const + 1):
            if const % k:
                continue
            for cand in (k, -k):
                # synthetic division by (t - cand)
                rem = 0
                for c in reversed(coeffs):
                    rem = rem * cand + c
                if rem == 0:
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            return None
        out = [0] * (len(coeffs) - 1)
        carry = 0
        for i in range(len(coeffs) - 1, 0, -1):
            carry = coeffs[i] + carry * found
            out[i - 1] = carry
        roots.append(found)
        coeffs = out
    return tuple(sorted(roots))
