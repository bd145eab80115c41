"""Sparse exact-integer multivariate polynomials and their Z_p quotient forms.

A polynomial is a term table mapping exponent tuples to nonzero integer
coefficients over a fixed, ordered tuple of variable names.  Coefficients are
Python ints, so arithmetic never overflows.  Values are treated as immutable:
every operation returns a new object.
"""

from __future__ import annotations

import re


class VariableMismatchError(ValueError):
    """Operands declare different variable tuples."""


class NonDivisibleTermError(ValueError):
    """A term is not divisible by the requested monomial."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    return p


class Polynomial:
    """Sparse polynomial with exact integer coefficients.

    ``terms`` maps exponent tuples (one entry per variable, all >= 0) to
    nonzero coefficients.  Equality is exact term-table equality.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=()):
        variables = tuple(variables)
        width = len(variables)
        table = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != width:
                raise ValueError(
                    f"exponent tuple {exps} does not match variables {variables}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = int(coeff)
            if coeff:
                table[exps] = table.get(exps, 0) + coeff
                if not table[exps]:
                    del table[exps]
        self.variables = variables
        self.terms = table

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, ())

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        zeros = (0,) * len(variables)
        return cls(variables, {zeros: int(value)})

    @classmethod
    def monomial(cls, variables, exps, coefficient=1):
        return cls(variables, {tuple(exps): coefficient})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"{name!r} is not one of {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    # -- helpers -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise VariableMismatchError(
                    f"variable sets differ: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def degree(self, name=None) -> int:
        """Largest exponent of ``name`` (total degree if None); -1 for zero."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def evaluate(self, values: dict) -> int:
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise ValueError(f"no value for variables {missing}")
        total = 0
        for exps, coeff in self.terms.items():
            prod = coeff
            for name, e in zip(self.variables, exps):
                if e:
                    prod *= values[name] ** e
            total += prod
        return total

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = table.get(exps, 0) + coeff
            if acc:
                table[exps] = acc
            elif exps in table:
                del table[exps]
        out = Polynomial.__new__(Polynomial)
        out.variables = self.variables
        out.terms = table
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.variables = self.variables
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = table.get(exps, 0) + c1 * c2
                if acc:
                    table[exps] = acc
                elif exps in table:
                    del table[exps]
        out = Polynomial.__new__(Polynomial)
        out.variables = self.variables
        out.terms = table
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return render_terms(self.variables, self.terms)

    def __repr__(self):
        return f"Polynomial({self.variables!r}, {self.terms!r})"


class ModPolynomial:
    """A polynomial over Z_p: coefficients normalized into 0..p-1."""

    __slots__ = ("polynomial", "modulus")

    def __init__(self, polynomial: Polynomial, modulus: int):
        _require_prime(modulus)
        table = {}
        for exps, coeff in polynomial.terms.items():
            c = coeff % modulus
            if c:
                table[exps] = c
        self.polynomial = Polynomial(polynomial.variables, table)
        self.modulus = modulus

    @property
    def variables(self):
        return self.polynomial.variables

    @property
    def terms(self):
        return self.polynomial.terms

    def _coerce(self, other):
        if isinstance(other, ModPolynomial):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"moduli differ: {self.modulus} vs {other.modulus}"
                )
            return other
        if isinstance(other, (Polynomial, int)):
            if isinstance(other, int):
                other = Polynomial.constant(self.variables, other)
            return ModPolynomial(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModPolynomial(self.polynomial + other.polynomial, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModPolynomial(self.polynomial - other.polynomial, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModPolynomial(self.polynomial * other.polynomial, self.modulus)

    __rmul__ = __mul__

    def fold_variable(self, name: str) -> "ModPolynomial":
        """Canonical representative modulo ``name``^p - ``name``.

        Exponents e >= 1 fold into the window 1..p-1 via
        ((e - 1) mod (p - 1)) + 1; exponent 0 is untouched.  Two
        ModPolynomials are congruent modulo (p, v^p - v) iff their folded
        forms are identical term tables.
        """
        try:
            i = self.variables.index(name)
        except ValueError:
            raise ValueError(f"{name!r} is not one of {self.variables}") from None
        p = self.modulus
        window = p - 1
        table = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e >= 1:
                folded = (e - 1) % window + 1
                if folded != e:
                    exps = exps[:i] + (folded,) + exps[i + 1 :]
            acc = (table.get(exps, 0) + coeff) % p
            if acc:
                table[exps] = acc
            elif exps in table:
                del table[exps]
        return ModPolynomial(Polynomial(self.variables, table), p)

    def fold(self, names) -> "ModPolynomial":
        out = self
        for name in names:
            out = out.fold_variable(name)
        return out

    def __eq__(self, other):
        if not isinstance(other, ModPolynomial):
            return NotImplemented
        return self.modulus == other.modulus and self.polynomial == other.polynomial

    def __bool__(self):
        return bool(self.polynomial)

    def __str__(self):
        return str(self.polynomial)

    def __repr__(self):
        return f"ModPolynomial({self.polynomial!r}, {self.modulus})"


# -- module-level operations ------------------------------------------


def reduce_mod_p(a: Polynomial, p: int) -> ModPolynomial:
    """Reduce coefficients into 0..p-1, pruning terms that vanish."""
    return ModPolynomial(a, p)


def fold_variable(a: ModPolynomial, name: str) -> ModPolynomial:
    return a.fold_variable(name)


def power_mod(a: ModPolynomial, k: int, fold_names) -> ModPolynomial:
    """a**k with exponent folding applied after every multiplication.

    Folding each listed variable as we go keeps intermediate exponents inside
    the 1..p-1 window, so the term table stays small even for large k.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("exponent must be a positive integer")
    fold_names = tuple(fold_names)
    result = a.fold(fold_names)
    for _ in range(k - 1):
        result = (result * a).fold(fold_names)
    return result


def substitute(a: Polynomial, mapping: dict, variables=None) -> Polynomial:
    """Simultaneously replace variables of ``a`` by values in ``mapping``.

    Values are ints or Polynomials over the target variable tuple
    (``variables``, defaulting to ``a.variables``).  Variables not mapped must
    exist in the target set and map to themselves.
    """
    target = tuple(variables) if variables is not None else a.variables
    unknown = [v for v in mapping if v not in a.variables]
    if unknown:
        raise ValueError(f"mapping for unknown variables {unknown}")
    images = {}
    for name in a.variables:
        if name in mapping:
            value = mapping[name]
            if isinstance(value, int):
                value = Polynomial.constant(target, value)
            elif value.variables != target:
                raise VariableMismatchError(
                    f"image of {name!r} is over {value.variables}, expected {target}"
                )
            images[name] = value
        else:
            images[name] = Polynomial.variable(target, name)

    power_cache = {}

    def image_power(name, e):
        key = (name, e)
        cached = power_cache.get(key)
        if cached is None:
            cached = images[name] ** e
            power_cache[key] = cached
        return cached

    result = Polynomial.zero(target)
    for exps, coeff in a.terms.items():
        term = Polynomial.constant(target, coeff)
        for name, e in zip(a.variables, exps):
            if e:
                term = term * image_power(name, e)
        result = result + term
    return result


def divide_exact_monomial(a: Polynomial, monomial: dict) -> Polynomial:
    """Exact quotient of ``a`` by a monomial given as {variable: exponent}.

    Raises NonDivisibleTermError if any term of ``a`` has an exponent below
    the divisor's.
    """
    unknown = [v for v in monomial if v not in a.variables]
    if unknown:
        raise ValueError(f"monomial uses unknown variables {unknown}")
    offsets = tuple(int(monomial.get(v, 0)) for v in a.variables)
    if any(o < 0 for o in offsets):
        raise ValueError("monomial exponents must be non-negative")
    table = {}
    for exps, coeff in a.terms.items():
        shifted = tuple(e - o for e, o in zip(exps, offsets))
        if any(e < 0 for e in shifted):
            raise NonDivisibleTermError(
                f"term {render_terms(a.variables, {exps: coeff})} is not divisible "
                f"by {render_terms(a.variables, {offsets: 1})}"
            )
        table[shifted] = coeff
    return Polynomial(a.variables, table)


# -- text form ---------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([^\W\d]\w*)|([+\-*^])|(\S)", re.UNICODE)


def render_terms(variables, terms) -> str:
    """Render a term table: ascending exponents with the last variable most
    significant, ``^`` for powers, ``*`` between factors, unit coefficients
    omitted.  The zero polynomial renders as ``0``."""
    if not terms:
        return "0"
    pieces = []
    for exps, coeff in sorted(terms.items(), key=lambda kv: tuple(reversed(kv[0]))):
        factors = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(variables, exps)
            if e
        )
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = factors
        else:
            body = f"{mag}*{factors}"
        pieces.append((coeff < 0, body))
    negative, body = pieces[0]
    out = ("-" if negative else "") + body
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


def parse_polynomial(text: str, variables) -> Polynomial:
    """Parse the textual polynomial grammar produced by render_terms."""
    variables = tuple(variables)
    index = {name: i for i, name in enumerate(variables)}
    width = len(variables)

    tokens = []
    for m in _TOKEN.finditer(text):
        number, name, op, junk = m.groups()
        if junk:
            raise ValueError(f"unexpected character {junk!r} in polynomial")
        if number is not None:
            tokens.append(("int", int(number)))
        elif name is not None:
            tokens.append(("var", name))
        else:
            tokens.append(("op", op))
    tokens.append(("end", None))

    pos = 0

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_factor(exps):
        kind, value = take()
        if kind == "int":
            return value
        if kind == "var":
            if value not in index:
                raise ValueError(f"unknown variable {value!r}")
            e = 1
            if peek() == ("op", "^"):
                take()
                kind2, value2 = take()
                if kind2 != "int":
                    raise ValueError("expected integer exponent after '^'")
                e = value2
            exps[index[value]] += e
            return 1
        raise ValueError(f"unexpected token {value!r} in term")

    table = {}
    sign = 1
    kind, value = peek()
    if kind == "op" and value in "+-":
        take()
        sign = -1 if value == "-" else 1
    while True:
        exps = [0] * width
        coeff = sign * parse_factor(exps)
        while peek() == ("op", "*"):
            take()
            coeff *= parse_factor(exps)
        key = tuple(exps)
        acc = table.get(key, 0) + coeff
        if acc:
            table[key] = acc
        elif key in table:
            del table[key]
        kind, value = peek()
        if kind == "end":
            break
        if kind == "op" and value in "+-":
            take()
            sign = -1 if value == "-" else 1
        else:
            raise ValueError(f"expected '+' or '-' before {value!r}")
    return Polynomial(variables, table)
