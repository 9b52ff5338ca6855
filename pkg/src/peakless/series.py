"""Truncated power series and polynomials with exact integer coefficients.

A Series keeps coefficients c_0..c_N for a fixed truncation order N; all
arithmetic truncates to the smaller operand order, so precision loss is
always explicit at the call site.  Inversion requires a constant term of
+1 or -1, which keeps every coefficient an exact integer; whenever that
precondition fails something is wrong upstream, so it raises instead of
falling back to rationals.

Polynomials are plain tuples of ints, lowest degree first, with a handful
of helper functions; `poly_divide_series` expands an exact rational
function num/den into a Series.
"""


def poly_trim(coeffs):
    """Drop trailing zero coefficients; the zero polynomial becomes (0,)."""
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim(
        tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))
    )


def poly_sub(a, b):
    n = max(len(a), len(b))
    return poly_trim(
        tuple((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))
    )


def poly_neg(a):
    return tuple(-c for c in a)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim(out)


class Series:
    """Power series truncated at a fixed order, exact int coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = tuple(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("need coefficients or an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) <= order:
            coeffs = coeffs + (0,) * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "coeffs", coeffs)

    # Series is immutable; block attribute assignment despite __slots__.
    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def zero(cls, order):
        return cls((0,), order)

    @classmethod
    def one(cls, order):
        return cls((1,), order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Series(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        n = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other):
        n = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, ai in enumerate(self.coeffs[: n + 1]):
            if ai:
                for j in range(n + 1 - i):
                    bj = other.coeffs[j]
                    if bj:
                        out[i + j] += ai * bj
        return Series(out)

    def shift(self, k):
        """Multiply by z^k, truncating at the same order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        n = self.order
        if k > n:
            return Series.zero(n)
        return Series((0,) * k + self.coeffs[: n + 1 - k])

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs, order)

    def inverse(self):
        """Multiplicative inverse to the same order; needs c_0 in {1, -1}."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(
                f"series inverse needs a constant term of +1 or -1, got {c0}"
            )
        n = self.order
        out = [c0] + [0] * n
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                aj = self.coeffs[j]
                if aj:
                    acc += aj * out[k - j]
            out[k] = -c0 * acc  # 1/c0 == c0 for a unit constant term
        return Series(out)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "z" if k == 1 else f"z^{k}"
                sign = "-" if c < 0 else ("+" if terms else "")
                lead = f"{sign} " if terms else sign
                terms.append(f"{lead}{mag}{var}")
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        return f"Series({list(self.coeffs)!r})"


def poly_divide_series(num, den, order):
    """Expand num/den as a Series to the given order, exactly.

    Both arguments are polynomial coefficient sequences (lowest degree
    first).  The denominator needs a unit constant term, same as
    `Series.inverse`, so the long division stays in the integers.
    """
    num = tuple(num)
    den = tuple(den)
    if not den or den[0] not in (1, -1):
        raise ValueError(
            f"denominator needs a constant term of +1 or -1, got {den[0] if den else None}"
        )
    d0 = den[0]
    out = [0] * (order + 1)
    for k in range(order + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            dj = den[j]
            if dj:
                acc -= dj * out[k - j]
        out[k] = acc * d0
    return Series(out)


def poly_to_series(coeffs, order):
    """View a polynomial as a Series truncated at the given order."""
    return Series(tuple(coeffs), order)
