"""Algebraic expression ASTs: parsing, canonical rendering, comparison.

Expressions are immutable trees built from seven node kinds: integer
literals, single-letter variables, n-ary sums and products, binary
division and exponentiation, and unary negation. Operand order is
significant everywhere ("1+x" and "x+1" are different states), so no
node ever reorders its children.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Expression",
    "Integer",
    "Variable",
    "Add",
    "Mul",
    "Div",
    "Pow",
    "Neg",
    "ParseError",
    "parse",
    "canonicalize",
    "canonical_string",
    "structurally_equal",
    "walk",
    "node_count",
    "depth",
]

# Nesting deeper than this is rejected by the parser and the renderer so
# that malicious inputs cannot blow the interpreter stack.
MAX_DEPTH = 500


class ParseError(ValueError):
    """Raised for input that does not match the expression grammar."""

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.message = message


class Expression:
    """Base class for AST nodes."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Integer(Expression):
    """An integer literal. Arbitrary precision, may be negative when
    built programmatically; the parser only ever produces nonnegative
    values (a leading minus sign parses as Neg)."""

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int):
            raise TypeError(f"Integer value must be int, got {type(self.value).__name__}")


@dataclass(frozen=True, slots=True)
class Variable(Expression):
    """A single lowercase-letter variable."""

    name: str

    def __post_init__(self):
        if len(self.name) != 1 or not ("a" <= self.name <= "z"):
            raise ValueError(f"variable must be a single lowercase letter, got {self.name!r}")


@dataclass(frozen=True, slots=True)
class Add(Expression):
    """An ordered n-ary sum. Subtraction is represented as Neg children."""

    children: tuple[Expression, ...]

    def __init__(self, *children: Expression):
        if len(children) == 1 and isinstance(children[0], (tuple, list)):
            children = tuple(children[0])
        if len(children) < 2:
            raise ValueError("Add requires at least 2 children")
        object.__setattr__(self, "children", tuple(children))


@dataclass(frozen=True, slots=True)
class Mul(Expression):
    """An ordered n-ary product."""

    children: tuple[Expression, ...]

    def __init__(self, *children: Expression):
        if len(children) == 1 and isinstance(children[0], (tuple, list)):
            children = tuple(children[0])
        if len(children) < 2:
            raise ValueError("Mul requires at least 2 children")
        object.__setattr__(self, "children", tuple(children))


@dataclass(frozen=True, slots=True)
class Div(Expression):
    """Binary division: numerator / denominator."""

    numerator: Expression
    denominator: Expression


@dataclass(frozen=True, slots=True)
class Pow(Expression):
    """Binary exponentiation: base ^ exponent (right-associative)."""

    base: Expression
    exponent: Expression


@dataclass(frozen=True, slots=True)
class Neg(Expression):
    """Unary negation."""

    child: Expression


# ---------------------------------------------------------------------------
# Tokenizer

_T_INT = "int"
_T_VAR = "var"
_T_OP = "op"
_T_LPAREN = "("
_T_RPAREN = ")"
_T_END = "end"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split input into (kind, lexeme, position) tokens; whitespace ignored."""
    tokens: list[tuple[str, str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append((_T_INT, text[start:i], start))
        elif "a" <= ch <= "z":
            tokens.append((_T_VAR, ch, i))
            i += 1
        elif ch in "+-*/^":
            tokens.append((_T_OP, ch, i))
            i += 1
        elif ch == "(":
            tokens.append((_T_LPAREN, ch, i))
            i += 1
        elif ch == ")":
            tokens.append((_T_RPAREN, ch, i))
            i += 1
        else:
            raise ParseError(i, f"unexpected character {ch!r}")
    tokens.append((_T_END, "", n))
    return tokens


# ---------------------------------------------------------------------------
# Recursive-descent parser
#
# expr   := term (('+'|'-') term)*          n-ary, left-to-right
# term   := unary (('*'|'/') unary)*        '*' collects n-ary, '/' binds left
# unary  := '-' unary | power
# power  := atom ('^' unary)?               right-associative
# atom   := INTEGER | VARIABLE | '(' expr ')'


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.pos = 0
        self.depth = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError(self.peek()[2], "expression nested too deeply")

    def _leave(self):
        self.depth -= 1

    def parse_expr(self) -> Expression:
        self._enter()
        terms = [self.parse_term()]
        while True:
            kind, lex, _ = self.peek()
            if kind == _T_OP and lex in "+-":
                self.advance()
                term = self.parse_term()
                terms.append(Neg(term) if lex == "-" else term)
            else:
                break
        self._leave()
        return terms[0] if len(terms) == 1 else Add(*terms)

    def parse_term(self) -> Expression:
        self._enter()
        factors = [self.parse_unary()]
        while True:
            kind, lex, _ = self.peek()
            if kind == _T_OP and lex in "*/":
                self.advance()
                rhs = self.parse_unary()
                if lex == "*":
                    factors.append(rhs)
                else:
                    num = factors[0] if len(factors) == 1 else Mul(*factors)
                    factors = [Div(num, rhs)]
            else:
                break
        self._leave()
        return factors[0] if len(factors) == 1 else Mul(*factors)

    def parse_unary(self) -> Expression:
        self._enter()
        kind, lex, _ = self.peek()
        if kind == _T_OP and lex == "-":
            self.advance()
            out = Neg(self.parse_unary())
        else:
            out = self.parse_power()
        self._leave()
        return out

    def parse_power(self) -> Expression:
        self._enter()
        base = self.parse_atom()
        kind, lex, _ = self.peek()
        if kind == _T_OP and lex == "^":
            self.advance()
            base = Pow(base, self.parse_unary())
        self._leave()
        return base

    def parse_atom(self) -> Expression:
        kind, lex, pos = self.peek()
        if kind == _T_INT:
            self.advance()
            return Integer(int(lex))
        if kind == _T_VAR:
            self.advance()
            return Variable(lex)
        if kind == _T_LPAREN:
            self.advance()
            inner = self.parse_expr()
            kind, _, pos = self.peek()
            if kind != _T_RPAREN:
                raise ParseError(pos, "expected ')'")
            self.advance()
            return inner
        if kind == _T_END:
            raise ParseError(pos, "unexpected end of input")
        raise ParseError(pos, f"unexpected token {lex!r}")


def parse(text: str) -> Expression:
    """Parse an expression string into an AST.

    Grammar: nonnegative integers, single lowercase-letter variables,
    ``+ - * / ^`` and parentheses. ``^`` binds tightest and is
    right-associative, then unary minus, then ``* /``, then ``+ -``
    (both left-associative). Implicit multiplication is rejected.

    Raises ParseError (with a character position) on any malformed input.
    """
    if not isinstance(text, str):
        raise ParseError(0, "input must be a string")
    if not text.strip():
        raise ParseError(0, "empty input")
    parser = _Parser(_tokenize(text))
    expr = parser.parse_expr()
    kind, lex, pos = parser.peek()
    if kind != _T_END:
        raise ParseError(pos, f"unexpected token {lex!r}")
    return expr


# ---------------------------------------------------------------------------
# Canonicalization and rendering

def canonicalize(e: Expression) -> Expression:
    """Flatten directly nested Add/Mul nodes and rewrite negative integer
    literals as Neg of their absolute value. Child order is preserved."""
    return _canon(e, 0)


def _canon(e: Expression, d: int) -> Expression:
    if d > MAX_DEPTH:
        raise ValueError("expression nested too deeply")
    if isinstance(e, Integer):
        return Neg(Integer(-e.value)) if e.value < 0 else e
    if isinstance(e, Variable):
        return e
    if isinstance(e, Add):
        flat: list[Expression] = []
        for c in e.children:
            cc = _canon(c, d + 1)
            flat.extend(cc.children if isinstance(cc, Add) else (cc,))
        return Add(*flat)
    if isinstance(e, Mul):
        flat = []
        for c in e.children:
            cc = _canon(c, d + 1)
            flat.extend(cc.children if isinstance(cc, Mul) else (cc,))
        return Mul(*flat)
    if isinstance(e, Div):
        return Div(_canon(e.numerator, d + 1), _canon(e.denominator, d + 1))
    if isinstance(e, Pow):
        return Pow(_canon(e.base, d + 1), _canon(e.exponent, d + 1))
    if isinstance(e, Neg):
        return Neg(_canon(e.child, d + 1))
    raise TypeError(f"not an Expression: {e!r}")


# Precedence levels used to decide where parentheses are required.
_P_ADD, _P_MUL, _P_NEG, _P_POW, _P_ATOM = 1, 2, 3, 4, 5


def _prec(e: Expression) -> int:
    if isinstance(e, Add):
        return _P_ADD
    if isinstance(e, (Mul, Div)):
        return _P_MUL
    if isinstance(e, Neg):
        return _P_NEG
    if isinstance(e, Integer):
        return _P_NEG if e.value < 0 else _P_ATOM
    if isinstance(e, Pow):
        return _P_POW
    return _P_ATOM


def _wrap(e: Expression, min_prec: int) -> str:
    s = _render(e)
    return f"({s})" if _prec(e) < min_prec else s


def _render(e: Expression) -> str:
    if isinstance(e, Integer):
        return str(e.value)
    if isinstance(e, Variable):
        return e.name
    if isinstance(e, Add):
        # A Neg child after the first is printed as subtraction; its operand
        # sits in term position, so only a nested Add needs parentheses.
        parts = [_wrap(e.children[0], _P_MUL)]
        for c in e.children[1:]:
            if isinstance(c, Neg):
                parts.append("-" + _wrap(c.child, _P_MUL))
            else:
                parts.append("+" + _wrap(c, _P_MUL))
        return "".join(parts)
    if isinstance(e, Mul):
        parts = [_wrap(e.children[0], _P_MUL)]
        for c in e.children[1:]:
            parts.append("*" + _wrap(c, _P_NEG))
        return "".join(parts)
    if isinstance(e, Div):
        return _wrap(e.numerator, _P_MUL) + "/" + _wrap(e.denominator, _P_NEG)
    if isinstance(e, Pow):
        return _wrap(e.base, _P_ATOM) + "^" + _wrap(e.exponent, _P_NEG)
    if isinstance(e, Neg):
        return "-" + _wrap(e.child, _P_NEG)
    raise TypeError(f"not an Expression: {e!r}")


def canonical_string(e: Expression) -> str:
    """Render an expression with the minimal parentheses needed for the
    string to parse back to ``canonicalize(e)``. Deterministic; never
    reorders operands."""
    return _render(canonicalize(e))


def structurally_equal(a: Expression, b: Expression) -> bool:
    """True iff the two ASTs are identical, including operand order."""
    return a == b


# ---------------------------------------------------------------------------
# Traversal helpers

def walk(e: Expression):
    """Yield every node in the tree, parents before children."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (Add, Mul)):
            stack.extend(reversed(node.children))
        elif isinstance(node, Div):
            stack.append(node.denominator)
            stack.append(node.numerator)
        elif isinstance(node, Pow):
            stack.append(node.exponent)
            stack.append(node.base)
        elif isinstance(node, Neg):
            stack.append(node.child)


def node_count(e: Expression) -> int:
    return sum(1 for _ in walk(e))


def depth(e: Expression) -> int:
    """Height of the tree; a lone leaf has depth 1."""
    if isinstance(e, (Integer, Variable)):
        return 1
    if isinstance(e, (Add, Mul)):
        return 1 + max(depth(c) for c in e.children)
    if isinstance(e, Div):
        return 1 + max(depth(e.numerator), depth(e.denominator))
    if isinstance(e, Pow):
        return 1 + max(depth(e.base), depth(e.exponent))
    if isinstance(e, Neg):
        return 1 + depth(e.child)
    raise TypeError(f"not an Expression: {e!r}")
