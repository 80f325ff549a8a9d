"""Ring descriptor grammar.

  desc  := term (' x ' term)*          products, left-associative
  term  := 'Z/<n>'
         | 'GF(<p>)'                   prime fields, an alias for Z/p
         | 'GF(<p>)[x]/(<poly>)'
         | 'table:<path>'              JSON operation tables
  poly  := monic polynomial in x with '^' powers, e.g. x^3+2x+1

Syntax errors carry a 1-based column; non-monic polynomials and
composite field characteristics get their own named errors.
"""

from __future__ import annotations

import json

from . import gfpoly
from .errors import (
    DescriptorSyntaxError,
    InvalidRingError,
    NonMonicPolynomialError,
    NonPrimeModulusError,
)
from .factorint import is_probable_prime
from .ring import PolyQuot, Product, RingDesc, Table, Zmod, product_of, table_from_json, validate_ring


def parse_ring_desc(text: str) -> RingDesc:
    parts = _split_product(text)
    factors = [_parse_term(term, offset) for term, offset in parts]
    return product_of(factors)


def _split_product(text: str) -> list[tuple[str, int]]:
    """Split on top-level ' x ' separators, tracking source columns."""
    depth = 0
    parts = []
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise DescriptorSyntaxError("unbalanced bracket", column=i + 1)
        elif depth == 0 and text.startswith(" x ", i):
            parts.append((text[start:i], start))
            i += 3
            start = i
            continue
        i += 1
    if depth != 0:
        raise DescriptorSyntaxError("unbalanced bracket", column=len(text))
    parts.append((text[start:], start))
    return parts


def _parse_term(term: str, offset: int) -> RingDesc:
    stripped = term.strip()
    col = offset + term.index(stripped[0]) + 1 if stripped else offset + 1
    if not stripped:
        raise DescriptorSyntaxError("empty ring descriptor", column=col)
    if stripped.startswith("Z/"):
        digits = stripped[2:]
        if not digits.isdigit():
            raise DescriptorSyntaxError(f"expected an integer after 'Z/'", column=col + 2)
        return validate_ring(Zmod(int(digits)))
    if stripped.startswith("GF("):
        close = stripped.find(")")
        if close < 0:
            raise DescriptorSyntaxError("missing ')' after field characteristic", column=col + 3)
        digits = stripped[3:close]
        if not digits.isdigit():
            raise DescriptorSyntaxError("field characteristic must be an integer", column=col + 3)
        p = int(digits)
        if not is_probable_prime(p):
            raise NonPrimeModulusError(f"{p} is not prime", column=col + 3)
        rest = stripped[close + 1:]
        if not rest:
            return validate_ring(Zmod(p))
        if not rest.startswith("[x]/(") or not rest.endswith(")"):
            raise DescriptorSyntaxError(
                "expected '[x]/(<poly>)' after the field", column=col + close + 1)
        poly_text = rest[len("[x]/("):-1]
        f = parse_poly(poly_text, p, column=col + close + 1 + len("[x]/("))
        return validate_ring(PolyQuot(p, f))
    if stripped.startswith("table:"):
        path = stripped[len("table:"):]
        if not path:
            raise DescriptorSyntaxError("missing path after 'table:'", column=col + 6)
        try:
            with open(path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InvalidRingError(f"cannot read table file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidRingError(f"table file {path} is not valid JSON: {exc}") from exc
        return table_from_json(data, path=path)
    raise DescriptorSyntaxError(f"unrecognized ring descriptor {stripped!r}", column=col)


def parse_poly(text: str, p: int, column: int = 1) -> tuple[int, ...]:
    """Parse ``x^3+2x+1`` style polynomials into low-first coefficient tuples."""
    s = text.replace(" ", "")
    if not s:
        raise DescriptorSyntaxError("empty polynomial", column=column)
    s = s.replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    coeffs: dict[int, int] = {}
    for raw in s.split("+"):
        if not raw:
            raise DescriptorSyntaxError("malformed polynomial term", column=column)
        term = raw
        sign = 1
        if term.startswith("-"):
            sign = -1
            term = term[1:]
        if not term:
            raise DescriptorSyntaxError("dangling sign in polynomial", column=column)
        if "x" not in term:
            if not term.isdigit():
                raise DescriptorSyntaxError(f"bad constant term {raw!r}", column=column)
            coeffs[0] = coeffs.get(0, 0) + sign * int(term)
            continue
        head, _, tail = term.partition("x")
        if head and not head.isdigit():
            raise DescriptorSyntaxError(f"bad coefficient in {raw!r}", column=column)
        c = int(head) if head else 1
        if tail:
            if not tail.startswith("^") or not tail[1:].isdigit():
                raise DescriptorSyntaxError(f"bad exponent in {raw!r}", column=column)
            e = int(tail[1:])
        else:
            e = 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
    degree = max(coeffs)
    out = [coeffs.get(i, 0) % p for i in range(degree + 1)]
    f = gfpoly.trim(out)
    if gfpoly.deg(f) < 1:
        raise DescriptorSyntaxError("quotient polynomial must have degree >= 1", column=column)
    if not gfpoly.is_monic(f):
        raise NonMonicPolynomialError(
            f"polynomial {text!r} is not monic over GF({p})", column=column)
    return f


def render_ring_desc(ring: RingDesc) -> str:
    """Canonical text form; parses back to an equal descriptor whenever
    the descriptor is parseable (anonymous tables render as table#<size>)."""
    if isinstance(ring, Zmod):
        return f"Z/{ring.n}"
    if isinstance(ring, PolyQuot):
        return f"GF({ring.p})[x]/({gfpoly.render(ring.f)})"
    if isinstance(ring, Product):
        return " x ".join(render_ring_desc(f) for f in ring.factors)
    if isinstance(ring, Table):
        return f"table:{ring.path}" if ring.path else f"table#{ring.size}"
    raise InvalidRingError(f"unknown descriptor {ring!r}")
