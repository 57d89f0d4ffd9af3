"""Plain-text input documents.

    # comment
    ring 3 32003
    module 2
    twists 0 1
    gen [x1*x2 + x3^2, x1]
    gen [0, x2^2 - 3*x1*x3]

Polynomials use integer coefficients, the variables x1..xn and the operators
``+ - * ^`` with parentheses; products must be written with ``*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import DEFAULT_PRIME, FreeModule, Polynomial, Ring, Vector, format_vector, is_prime
from .groebner import Submodule

MAX_EXPONENT = 10_000


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Document:
    ring: Ring
    module: FreeModule
    submodule: Submodule


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|([-+*^(),\[\]]))")


def _tokenize(text: str, line: int, col0: int) -> list:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise DocumentError(f"unexpected character {text[bad]!r}", line, col0 + bad + 1)
        kind = "int" if m.group(1) else "var" if m.group(2) else m.group(3)
        value = m.group(1) or m.group(2) or m.group(3)
        out.append((kind, value, col0 + m.start(m.lastindex) + 1))
        pos = m.end()
    out.append(("end", "", col0 + len(text) + 1))
    return out


class _Parser:
    """Recursive descent over one ``gen`` line.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' int]
    atom   := int | var | '(' expr ')'
    """

    def __init__(self, tokens, ring: Ring, line: int):
        self.toks = tokens
        self.i = 0
        self.ring = ring
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of line" if kind == "end" else repr(kind)
            got = "end of line" if tok[0] == "end" else repr(tok[1])
            raise DocumentError(f"expected {want}, found {got}", self.line, tok[2])
        self.i += 1
        return tok

    def vector(self) -> list:
        self.take("[")
        entries = [self.expr()]
        while self.peek()[0] == ",":
            self.take(",")
            entries.append(self.expr())
        self.take("]")
        self.take("end")
        return entries

    def expr(self) -> Polynomial:
        neg = False
        if self.peek()[0] == "-":
            self.take("-")
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[0] in "+-":
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.take("int")
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise DocumentError(f"exponent {e} exceeds the limit {MAX_EXPONENT}", self.line, tok[2])
            base = base ** e
        return base

    def atom(self) -> Polynomial:
        kind, value, col = self.peek()
        if kind == "int":
            self.take()
            return Polynomial.constant(self.ring, int(value))
        if kind == "var":
            self.take()
            i = int(value[1:])
            if not 1 <= i <= self.ring.n:
                raise DocumentError(f"variable {value} outside x1..x{self.ring.n}", self.line, col)
            return self.ring.var(i)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        got = "end of line" if kind == "end" else repr(value)
        raise DocumentError(f"expected a number, variable or '(', found {got}", self.line, col)


def _ints(words, line, col0, what):
    out = []
    for w, c in words:
        if not re.fullmatch(r"-?\d+", w):
            raise DocumentError(f"{what} expects integers, found {w!r}", line, col0 + c + 1)
        out.append(int(w))
    return out


def _split(text: str):
    return [(m.group(), m.start()) for m in re.finditer(r"\S+", text)]


def parse(text: str) -> Document:
    ring = module = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        words = _split(body)
        key, kcol = words[0]
        rest = words[1:]
        if key == "ring":
            if ring is not None:
                raise DocumentError("duplicate ring line", lineno, kcol + 1)
            vals = _ints(rest, lineno, 0, "ring")
            if len(vals) not in (1, 2):
                raise DocumentError("ring expects: ring <n> [<p>]", lineno, kcol + 1)
            n, p = vals[0], vals[1] if len(vals) == 2 else DEFAULT_PRIME
            if n < 1:
                raise DocumentError(f"number of variables must be positive, got {n}", lineno, rest[0][1] + 1)
            if not is_prime(p):
                raise DocumentError(f"{p} is not prime", lineno, rest[1][1] + 1)
            ring = Ring(n, p)
        elif key == "module":
            if ring is None:
                raise DocumentError("module line before ring line", lineno, kcol + 1)
            vals = _ints(rest, lineno, 0, "module")
            if len(vals) != 1 or vals[0] < 1:
                raise DocumentError("module expects one positive rank", lineno, kcol + 1)
            module = FreeModule((0,) * vals[0])
        elif key == "twists":
            if module is None:
                raise DocumentError("twists line before module line", lineno, kcol + 1)
            if gens:
                raise DocumentError("twists must precede the generators", lineno, kcol + 1)
            vals = _ints(rest, lineno, 0, "twists")
            if len(vals) != module.rank:
                raise DocumentError(f"expected {module.rank} twists, found {len(vals)}", lineno, kcol + 1)
            module = FreeModule(tuple(vals))
        elif key == "gen":
            if ring is None or module is None:
                raise DocumentError("gen line before ring and module lines", lineno, kcol + 1)
            start = kcol + len(key)
            parser = _Parser(_tokenize(body[start:], lineno, start), ring, lineno)
            entries = parser.vector()
            if len(entries) != module.rank:
                raise DocumentError(f"generator has {len(entries)} entries, module rank is {module.rank}", lineno)
            v = Vector.from_polys(ring, module, entries)
            if not v.is_homogeneous():
                raise DocumentError(
                    f"generator {len(gens) + 1} is not homogeneous (twisted degrees {sorted(v.degrees())})", lineno
                )
            gens.append(v)
        else:
            raise DocumentError(f"unknown keyword {key!r}", lineno, kcol + 1)
    if ring is None:
        raise DocumentError("missing ring line")
    if module is None:
        module = FreeModule((0,))
    return Document(ring, module, Submodule(ring, module, tuple(gens)))


def format_document(doc: Document) -> str:
    """Canonical text; parse(format_document(d)) reproduces d."""
    lines = [
        f"ring {doc.ring.n} {doc.ring.p}",
        f"module {doc.module.rank}",
        "twists " + " ".join(str(t) for t in doc.module.twists),
    ]
    lines += [f"gen {format_vector(g)}" for g in doc.submodule.generators]
    return "\n".join(lines) + "\n"


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
