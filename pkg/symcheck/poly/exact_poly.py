"""
Exact Polynomials - sparse multivariate polynomials over the rationals.

Every polynomial lives in a VariableSpace(n): two disjoint blocks of
variables x1..xn and y1..yn, ordered x before y and by index inside each
block. Exponent keys are dense tuples of length 2n (x exponents first), so
structural equality of the term dictionaries is polynomial equality.

Coefficients are ints or fractions.Fraction; zero coefficients are never
stored. Canonical order for rendering is graded lexicographic: total degree
first, then the exponent tuple, both descending.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

Scalar = Union[int, Fraction]
Key = Tuple[int, ...]

BLOCKS = ("x", "y", "total")

_NAME = re.compile(r"^([xy])(\d+)$")


class VariableSpaceError(ValueError):
    """Operands live in different variable spaces, or a variable is unbound."""


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a non-zero remainder."""


@dataclass(frozen=True)
class VariableSpace:
    """Variables x1..xn and y1..yn; slot i-1 holds x_i and slot n+i-1 holds y_i."""
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise VariableSpaceError(f"variable count must be positive, got {self.n}")

    @property
    def size(self) -> int:
        return 2 * self.n

    def slot(self, name: str) -> int:
        match = _NAME.match(name)
        if not match:
            raise VariableSpaceError(f"unknown variable name '{name}'")
        index = int(match.group(2))
        if not 1 <= index <= self.n:
            raise VariableSpaceError(f"variable '{name}' is outside VariableSpace({self.n})")
        return index - 1 if match.group(1) == "x" else self.n + index - 1

    def name(self, slot: int) -> str:
        if slot < self.n:
            return f"x{slot + 1}"
        return f"y{slot - self.n + 1}"

    def names(self, block: str = "total") -> List[str]:
        return [self.name(s) for s in self.block_slots(block)]

    def block_slots(self, block: str) -> range:
        if block == "x":
            return range(0, self.n)
        if block == "y":
            return range(self.n, 2 * self.n)
        if block == "total":
            return range(0, 2 * self.n)
        raise ValueError(f"unknown block '{block}' (expected one of {BLOCKS})")

    def key_degree(self, key: Key, block: str = "total") -> int:
        if block == "x":
            return sum(key[: self.n])
        if block == "y":
            return sum(key[self.n:])
        if block == "total":
            return sum(key)
        raise ValueError(f"unknown block '{block}' (expected one of {BLOCKS})")

    def key_from(self, exponents: Mapping[str, int]) -> Key:
        key = [0] * self.size
        for name, e in exponents.items():
            if e < 0:
                raise VariableSpaceError(f"negative exponent {e} for '{name}'")
            key[self.slot(name)] += e
        return tuple(key)


def _normalize(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class ExactPoly:
    """Immutable sparse polynomial; see the module docstring for conventions."""

    __slots__ = ("space", "terms")
    __hash__ = None

    def __init__(self, space: VariableSpace, terms: Optional[Mapping[Key, Scalar]] = None):
        clean: Dict[Key, Scalar] = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != space.size:
                raise VariableSpaceError(f"exponent key {key} does not fit VariableSpace({space.n})")
            if c:
                clean[key] = _normalize(clean.get(key, 0) + c)
                if not clean[key]:
                    del clean[key]
        self.space = space
        self.terms = clean

    @classmethod
    def _raw(cls, space: VariableSpace, terms: Dict[Key, Scalar]) -> "ExactPoly":
        poly = cls.__new__(cls)
        poly.space = space
        poly.terms = terms
        return poly

    # ---- constructors ----

    @classmethod
    def zero(cls, space: VariableSpace) -> "ExactPoly":
        return cls._raw(space, {})

    @classmethod
    def constant(cls, space: VariableSpace, c: Scalar) -> "ExactPoly":
        return cls._raw(space, {(0,) * space.size: _normalize(c)} if c else {})

    @classmethod
    def one(cls, space: VariableSpace) -> "ExactPoly":
        return cls.constant(space, 1)

    @classmethod
    def var(cls, space: VariableSpace, name: str) -> "ExactPoly":
        key = [0] * space.size
        key[space.slot(name)] = 1
        return cls._raw(space, {tuple(key): 1})

    @classmethod
    def monomial(cls, space: VariableSpace, exponents: Union[Mapping[str, int], Key], coeff: Scalar = 1) -> "ExactPoly":
        key = space.key_from(exponents) if isinstance(exponents, Mapping) else tuple(exponents)
        return cls(space, {key: coeff})

    # ---- arithmetic ----

    def _coerce(self, other) -> Optional["ExactPoly"]:
        if isinstance(other, ExactPoly):
            if other.space != self.space:
                raise VariableSpaceError(
                    f"mismatched variable spaces: VariableSpace({self.space.n}) vs VariableSpace({other.space.n})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPoly.constant(self.space, other)
        return None

    def _combine(self, other: "ExactPoly", sign: int) -> "ExactPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            value = _normalize(out.get(key, 0) + sign * c)
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return ExactPoly._raw(self.space, out)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._combine(self, -1)

    def __neg__(self):
        return ExactPoly._raw(self.space, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Key, Scalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
        return ExactPoly._raw(self.space, {k: _normalize(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "ExactPoly":
        if not c:
            return ExactPoly.zero(self.space)
        return ExactPoly._raw(self.space, {k: _normalize(v * c) for k, v in self.terms.items()})

    def __truediv__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(Fraction(1) / c)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent}")
        result = ExactPoly.one(self.space)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ExactPoly.constant(self.space, other).terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # ---- grading ----

    def degrees(self, block: str = "total") -> List[int]:
        return sorted({self.space.key_degree(k, block) for k in self.terms})

    def degree(self, block: str = "total") -> int:
        """Largest degree in the chosen grading; -1 for the zero polynomial."""
        found = self.degrees(block)
        return found[-1] if found else -1

    def is_homogeneous(self, degree: Optional[int] = None, block: str = "total") -> bool:
        found = self.degrees(block)
        if not found:
            return True
        return len(found) == 1 and (degree is None or found[0] == degree)

    def truncate(self, block: str, max_degree: int) -> "ExactPoly":
        """Drop every term whose degree in `block` exceeds max_degree."""
        return self.select(lambda key: self.space.key_degree(key, block) <= max_degree)

    def select(self, keep: Callable[[Key], bool]) -> "ExactPoly":
        return ExactPoly._raw(self.space, {k: c for k, c in self.terms.items() if keep(k)})

    def pieces(self, block: str) -> Dict[int, "ExactPoly"]:
        """Split into homogeneous components of the chosen grading."""
        out: Dict[int, Dict[Key, Scalar]] = {}
        for key, c in self.terms.items():
            out.setdefault(self.space.key_degree(key, block), {})[key] = c
        return {d: ExactPoly._raw(self.space, t) for d, t in out.items()}

    def variables(self) -> List[int]:
        used = set()
        for key in self.terms:
            used.update(i for i, e in enumerate(key) if e)
        return sorted(used)

    def coefficient(self, exponents: Union[Mapping[str, int], Key]) -> Scalar:
        key = self.space.key_from(exponents) if isinstance(exponents, Mapping) else tuple(exponents)
        return self.terms.get(key, 0)

    # ---- substitution and division ----

    def substitute(self, bindings: Mapping[str, "ExactPoly"], target: Optional[VariableSpace] = None) -> "ExactPoly":
        """
        Image under the ring morphism sending each bound variable to its binding.

        The result lives in `target` (default: the space of the bindings, or
        of self when nothing is bound).

        Raises:
            VariableSpaceError: a variable occurring in self has no binding,
                or a binding lives outside the target space.
        """
        images = {self.space.slot(name): poly for name, poly in bindings.items()}
        if target is None:
            target = next(iter(images.values())).space if images else self.space
        for slot, poly in images.items():
            if poly.space != target:
                raise VariableSpaceError(f"binding for '{self.space.name(slot)}' is not in VariableSpace({target.n})")
        missing = [self.space.name(s) for s in self.variables() if s not in images]
        if missing:
            raise VariableSpaceError(f"unbound variable(s) {', '.join(missing)}")

        if all(len(p.terms) == 1 for p in images.values()):
            single = {s: next(iter(p.terms.items())) for s, p in images.items()}
            out: Dict[Key, Scalar] = {}
            for key, c in self.terms.items():
                new = [0] * target.size
                coeff = c
                for slot, e in enumerate(key):
                    if not e:
                        continue
                    image_key, image_c = single[slot]
                    for t, f in enumerate(image_key):
                        if f:
                            new[t] += f * e
                    coeff = coeff * image_c ** e
                new_key = tuple(new)
                out[new_key] = out.get(new_key, 0) + coeff
            return ExactPoly(target, out)

        powers: Dict[Tuple[int, int], ExactPoly] = {}
        result = ExactPoly.zero(target)
        for key, c in self.terms.items():
            term = ExactPoly.constant(target, c)
            for slot, e in enumerate(key):
                if e:
                    if (slot, e) not in powers:
                        powers[(slot, e)] = images[slot] ** e
                    term = term * powers[(slot, e)]
            result = result + term
        return result

    def leading_key(self) -> Key:
        """Lexicographically largest exponent key (x block first)."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self.terms)

    def exact_divide(self, divisor: "ExactPoly") -> "ExactPoly":
        """
        Quotient of an exact division by repeated leading-term elimination.

        Raises:
            ZeroDivisionError: divisor is zero.
            ExactDivisionError: the division leaves a remainder.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.leading_key()
        lead_c = divisor.terms[lead]
        remainder = dict(self.terms)
        quotient: Dict[Key, Scalar] = {}
        while remainder:
            top = max(remainder)
            shift = tuple(a - b for a, b in zip(top, lead))
            if min(shift) < 0:
                leftover = ExactPoly._raw(self.space, {top: remainder[top]})
                raise ExactDivisionError(
                    f"remainder term {leftover} is not divisible by the leading term of {divisor}"
                )
            c = Fraction(remainder[top]) / lead_c
            quotient[shift] = _normalize(c)
            for key, d in divisor.terms.items():
                k = tuple(a + b for a, b in zip(key, shift))
                value = _normalize(remainder.get(k, 0) - c * d)
                if value:
                    remainder[k] = value
                else:
                    remainder.pop(k, None)
        return ExactPoly._raw(self.space, quotient)

    # ---- rendering ----

    def sorted_terms(self) -> List[Tuple[Key, Scalar]]:
        return sorted(self.terms.items(), key=lambda kc: (sum(kc[0]), kc[0]), reverse=True)

    def _monomial_str(self, key: Key) -> str:
        factors = []
        for slot, e in enumerate(key):
            if e == 1:
                factors.append(self.space.name(slot))
            elif e > 1:
                factors.append(f"{self.space.name(slot)}^{e}")
        return "*".join(factors)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (key, c) in enumerate(self.sorted_terms()):
            mono = self._monomial_str(key)
            magnitude = abs(c)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if i == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"ExactPoly(n={self.space.n}, {self})"


def block_bindings(
    source: VariableSpace,
    source_block: str,
    target: VariableSpace,
    target_block: str,
    power: int = 1,
) -> Dict[str, ExactPoly]:
    """Bindings v_i -> w_i**power from one block onto another, index by index."""
    bindings = {}
    target_names = target.names(target_block)
    for i, name in enumerate(source.names(source_block)):
        bindings[name] = ExactPoly.var(target, target_names[i]) ** power
    return bindings


def move_block(p: ExactPoly, source_block: str, target_block: str, power: int = 1) -> ExactPoly:
    """Rename a polynomial in one block onto the other block (optionally v_i -> w_i^power)."""
    bindings = block_bindings(p.space, source_block, p.space, target_block, power)
    return p.substitute(bindings, p.space)


def truncated_product(a: ExactPoly, b: ExactPoly, block: str, max_degree: int) -> ExactPoly:
    """a*b with every term above max_degree in `block` discarded before accumulation."""
    a._coerce(b)
    space = a.space
    lhs = [(k, c, space.key_degree(k, block)) for k, c in a.terms.items()]
    rhs = [(k, c, space.key_degree(k, block)) for k, c in b.terms.items()]
    out: Dict[Key, Scalar] = {}
    for k1, c1, d1 in lhs:
        if d1 > max_degree:
            continue
        for k2, c2, d2 in rhs:
            if d1 + d2 > max_degree:
                continue
            key = tuple(x + y for x, y in zip(k1, k2))
            out[key] = out.get(key, 0) + c1 * c2
    return ExactPoly._raw(space, {k: _normalize(c) for k, c in out.items() if c})


def graded_exp(arg: ExactPoly, block: str = "y", max_degree: int = 0) -> ExactPoly:
    """
    exp(arg) truncated to degree <= max_degree in `block`.

    Uses d*E_d = sum_k k*A_k*E_(d-k) on the homogeneous pieces A_k of arg,
    which equals sum_k arg^k / k! through that degree.

    Raises:
        VariableSpaceError: arg has a non-zero component of block-degree 0.
    """
    pieces = arg.pieces(block)
    if 0 in pieces:
        raise VariableSpaceError(f"exp argument has a {block}-degree 0 component: {pieces[0]}")
    series = [ExactPoly.one(arg.space)]
    for d in range(1, max_degree + 1):
        acc = ExactPoly.zero(arg.space)
        for k in range(1, d + 1):
            if k in pieces:
                acc = acc + pieces[k] * series[d - k] * k
        series.append(acc / d)
    return sum_polys(series, arg.space)


def sum_polys(polys: Iterable[ExactPoly], space: VariableSpace) -> ExactPoly:
    out: Dict[Key, Scalar] = {}
    for p in polys:
        if p.space != space:
            raise VariableSpaceError("mismatched variable spaces in sum")
        for key, c in p.terms.items():
            out[key] = out.get(key, 0) + c
    return ExactPoly._raw(space, {k: _normalize(c) for k, c in out.items() if c})
