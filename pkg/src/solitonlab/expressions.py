"""Symbolic scalar expressions on a coordinate chart.

This module is the foundation of the package.  It provides:

  1. a small immutable expression tree (constants, variables, the four
     arithmetic operations, negation, constant powers, the primitives
     exp / ln / sin / cos / sqrt, and opaque univariate profiles backed
     by numeric callables);
  2. smart constructors that fold the obvious algebraic identities so
     that derivatives stay readable;
  3. exact symbolic differentiation;
  4. plain float evaluation with explicit domain checking;
  5. a recursive-descent parser for the grammar below, reporting the
     character offset of any failure;
  6. a precedence-aware pretty printer whose output re-parses to an
     equivalent tree;
  7. ScalarField, the chart-aware wrapper the rest of the package
     consumes.

Grammar accepted by parse_expression (whitespace insignificant):

    expr   :=  term (('+' | '-') term)*
    term   :=  unary (('*' | '/') unary)*
    unary  :=  '-' unary | power
    power  :=  atom ('^' unary)?
    atom   :=  number | ident | ident '(' expr ')' | '(' expr ')'

Exponents must fold to a constant at parse time.  The recognised
function names are exp, ln, sin, cos, sqrt; any other identifier
followed by '(' is a syntax error, and any identifier outside the
supplied chart is an UnknownVariableError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

from .errors import DomainError, ExpressionSyntaxError, UnknownVariableError

__all__ = [
    "Node",
    "Const",
    "Var",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Pow",
    "Call",
    "External",
    "add",
    "sub",
    "mul",
    "div",
    "neg",
    "pow_",
    "call",
    "external",
    "differentiate",
    "evaluate",
    "free_variables",
    "format_expression",
    "parse_expression",
    "ScalarField",
    "constant_field",
    "coordinate_field",
    "exp",
    "ln",
    "sin",
    "cos",
    "sqrt",
    "FUNCTION_NAMES",
]


# =====================================================================
# Node types
# =====================================================================

@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Div:
    num: "Node"
    den: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: float


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


@dataclass(frozen=True, eq=False)
class External:
    """Opaque univariate profile known only through callables.

    ``funcs`` holds the profile and its derivatives in order: value,
    first derivative, second derivative, ...  Differentiating shifts
    that tuple left; once it is exhausted no further derivative exists.
    Identity-based equality: two External nodes are the same node only
    if they are the same object.
    """

    name: str
    funcs: tuple[Callable[[float], float], ...]
    arg: "Node"


Node = Union[Const, Var, Neg, Add, Sub, Mul, Div, Pow, Call, External]

FUNCTION_NAMES = ("exp", "ln", "sin", "cos", "sqrt")

ZERO = Const(0.0)
ONE = Const(1.0)


def _is_const(node: Node, value: float | None = None) -> bool:
    if not isinstance(node, Const):
        return False
    return value is None or node.value == value


# =====================================================================
# Smart constructors
# =====================================================================

def add(left: Node, right: Node) -> Node:
    if _is_const(left) and _is_const(right):
        return Const(left.value + right.value)
    if _is_const(left, 0.0):
        return right
    if _is_const(right, 0.0):
        return left
    return Add(left, right)


def sub(left: Node, right: Node) -> Node:
    if _is_const(left) and _is_const(right):
        return Const(left.value - right.value)
    if _is_const(right, 0.0):
        return left
    if _is_const(left, 0.0):
        return neg(right)
    if left == right:
        return Const(0.0)
    return Sub(left, right)


def mul(left: Node, right: Node) -> Node:
    if _is_const(left) and _is_const(right):
        return Const(left.value * right.value)
    if _is_const(left, 0.0) or _is_const(right, 0.0):
        return Const(0.0)
    if _is_const(left, 1.0):
        return right
    if _is_const(right, 1.0):
        return left
    if _is_const(left, -1.0):
        return neg(right)
    if _is_const(right, -1.0):
        return neg(left)
    return Mul(left, right)


def div(num: Node, den: Node) -> Node:
    if _is_const(den, 0.0):
        raise DomainError("division by the constant zero")
    if _is_const(num) and _is_const(den):
        return Const(num.value / den.value)
    if _is_const(num, 0.0):
        return Const(0.0)
    if _is_const(den, 1.0):
        return num
    if num == den:
        return Const(1.0)
    return Div(num, den)


def neg(arg: Node) -> Node:
    if isinstance(arg, Const):
        return Const(-arg.value)
    if isinstance(arg, Neg):
        return arg.arg
    return Neg(arg)


def _pow_value(base: float, exponent: float) -> float:
    if float(exponent).is_integer():
        k = int(exponent)
        if base == 0.0 and k < 0:
            raise DomainError("zero raised to a negative power")
        return base ** k
    if base < 0.0:
        raise DomainError("fractional power of a negative base")
    if base == 0.0 and exponent < 0.0:
        raise DomainError("zero raised to a negative power")
    return base ** exponent


def pow_(base: Node, exponent: float) -> Node:
    exponent = float(exponent)
    if exponent == 0.0:
        return Const(1.0)
    if exponent == 1.0:
        return base
    if isinstance(base, Const):
        return Const(_pow_value(base.value, exponent))
    return Pow(base, exponent)


_CALL_TABLE: dict[str, Callable[[float], float]] = {
    "exp": math.exp,
    "ln": math.log,
    "sin": math.sin,
    "cos": math.cos,
    "sqrt": math.sqrt,
}


def _call_value(func: str, x: float) -> float:
    if func == "ln" and x <= 0.0:
        raise DomainError("ln of a non-positive argument")
    if func == "sqrt" and x < 0.0:
        raise DomainError("sqrt of a negative argument")
    try:
        return _CALL_TABLE[func](x)
    except OverflowError as exc:
        raise DomainError(f"overflow in {func}") from exc


def call(func: str, arg: Node) -> Node:
    if func not in _CALL_TABLE:
        raise ValueError(f"unsupported function '{func}'")
    if isinstance(arg, Const):
        return Const(_call_value(func, arg.value))
    return Call(func, arg)


def external(
    name: str,
    funcs: Sequence[Callable[[float], float]],
    arg: Node,
) -> Node:
    if len(funcs) == 0:
        raise ValueError("external profile needs at least a value callable")
    return External(name, tuple(funcs), arg)


# =====================================================================
# Structural queries
# =====================================================================

def free_variables(node: Node) -> frozenset[str]:
    if isinstance(node, Const):
        return frozenset()
    if isinstance(node, Var):
        return frozenset((node.name,))
    if isinstance(node, Neg):
        return free_variables(node.arg)
    if isinstance(node, (Add, Sub, Mul)):
        return free_variables(node.left) | free_variables(node.right)
    if isinstance(node, Div):
        return free_variables(node.num) | free_variables(node.den)
    if isinstance(node, Pow):
        return free_variables(node.base)
    if isinstance(node, (Call, External)):
        return free_variables(node.arg)
    raise TypeError(f"not an expression node: {node!r}")


# =====================================================================
# Differentiation
# =====================================================================

def differentiate(node: Node, var: str) -> Node:
    if isinstance(node, Const):
        return ZERO
    if isinstance(node, Var):
        return ONE if node.name == var else ZERO
    if isinstance(node, Neg):
        return neg(differentiate(node.arg, var))
    if isinstance(node, Add):
        return add(differentiate(node.left, var), differentiate(node.right, var))
    if isinstance(node, Sub):
        return sub(differentiate(node.left, var), differentiate(node.right, var))
    if isinstance(node, Mul):
        return add(
            mul(differentiate(node.left, var), node.right),
            mul(node.left, differentiate(node.right, var)),
        )
    if isinstance(node, Div):
        # (u/v)' = u'/v - u v'/v^2, assembled over the common denominator.
        u, v = node.num, node.den
        return div(
            sub(mul(differentiate(u, var), v), mul(u, differentiate(v, var))),
            mul(v, v),
        )
    if isinstance(node, Pow):
        inner = differentiate(node.base, var)
        return mul(mul(Const(node.exponent), pow_(node.base, node.exponent - 1.0)), inner)
    if isinstance(node, Call):
        inner = differentiate(node.arg, var)
        u = node.arg
        if node.func == "exp":
            outer: Node = call("exp", u)
        elif node.func == "ln":
            return div(inner, u)
        elif node.func == "sin":
            outer = call("cos", u)
        elif node.func == "cos":
            outer = neg(call("sin", u))
        elif node.func == "sqrt":
            return div(inner, mul(Const(2.0), call("sqrt", u)))
        else:  # pragma: no cover - constructor rejects other names
            raise ValueError(f"unsupported function '{node.func}'")
        return mul(outer, inner)
    if isinstance(node, External):
        if len(node.funcs) < 2:
            raise DomainError(
                f"profile '{node.name}' supplies no further derivatives"
            )
        inner = differentiate(node.arg, var)
        return mul(External(node.name + "'", node.funcs[1:], node.arg), inner)
    raise TypeError(f"not an expression node: {node!r}")


# =====================================================================
# Evaluation
# =====================================================================

def evaluate(node: Node, env: Mapping[str, float]) -> float:
    out = _evaluate(node, env, {})
    if not math.isfinite(out):
        raise DomainError("expression evaluated to a non-finite value")
    return out


def _evaluate(node: Node, env: Mapping[str, float], memo: dict[int, float]) -> float:
    key = id(node)
    if key in memo:
        return memo[key]
    if isinstance(node, Const):
        out = node.value
    elif isinstance(node, Var):
        try:
            out = float(env[node.name])
        except KeyError:
            raise UnknownVariableError(node.name) from None
    elif isinstance(node, Neg):
        out = -_evaluate(node.arg, env, memo)
    elif isinstance(node, Add):
        out = _evaluate(node.left, env, memo) + _evaluate(node.right, env, memo)
    elif isinstance(node, Sub):
        out = _evaluate(node.left, env, memo) - _evaluate(node.right, env, memo)
    elif isinstance(node, Mul):
        out = _evaluate(node.left, env, memo) * _evaluate(node.right, env, memo)
    elif isinstance(node, Div):
        den = _evaluate(node.den, env, memo)
        if den == 0.0:
            raise DomainError("division by zero")
        out = _evaluate(node.num, env, memo) / den
    elif isinstance(node, Pow):
        out = _pow_value(_evaluate(node.base, env, memo), node.exponent)
    elif isinstance(node, Call):
        out = _call_value(node.func, _evaluate(node.arg, env, memo))
    elif isinstance(node, External):
        out = float(node.funcs[0](_evaluate(node.arg, env, memo)))
    else:
        raise TypeError(f"not an expression node: {node!r}")
    memo[key] = out
    return out


# =====================================================================
# Pretty printing
# =====================================================================

# Precedence levels, loosest binding first.
_ADD, _TERM, _UNARY, _POWER, _ATOM = 1, 2, 3, 4, 5


def _level(node: Node) -> int:
    if isinstance(node, (Add, Sub)):
        return _ADD
    if isinstance(node, (Mul, Div)):
        return _TERM
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Const) and node.value < 0.0:
        return _UNARY
    if isinstance(node, Pow):
        return _POWER
    return _ATOM


def _fmt_number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def _wrap(node: Node, minimum: int) -> str:
    text = format_expression(node)
    if _level(node) < minimum:
        return f"({text})"
    return text


def format_expression(node: Node) -> str:
    if isinstance(node, Const):
        return _fmt_number(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return "-" + _wrap(node.arg, _UNARY)
    if isinstance(node, Add):
        return f"{_wrap(node.left, _ADD)} + {_wrap(node.right, _ADD + 1)}"
    if isinstance(node, Sub):
        return f"{_wrap(node.left, _ADD)} - {_wrap(node.right, _ADD + 1)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, _TERM)}*{_wrap(node.right, _TERM + 1)}"
    if isinstance(node, Div):
        return f"{_wrap(node.num, _TERM)}/{_wrap(node.den, _TERM + 1)}"
    if isinstance(node, Pow):
        expo = node.exponent
        expo_text = _fmt_number(expo) if expo >= 0.0 else f"({_fmt_number(expo)})"
        return f"{_wrap(node.base, _ATOM)}^{expo_text}"
    if isinstance(node, Call):
        return f"{node.func}({format_expression(node.arg)})"
    if isinstance(node, External):
        return f"{node.name}({format_expression(node.arg)})"
    raise TypeError(f"not an expression node: {node!r}")


# =====================================================================
# Parser
# =====================================================================

_OPERATOR_CHARS = set("+-*/^()")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num' | 'ident' | 'op' | 'end'
    text: str
    offset: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPERATOR_CHARS:
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            start = i
            while i < n and source[i].isdigit():
                i += 1
            if i < n and source[i] == ".":
                i += 1
                while i < n and source[i].isdigit():
                    i += 1
            if i < n and source[i] in "eE":
                j = i + 1
                if j < n and source[j] in "+-":
                    j += 1
                if j < n and source[j].isdigit():
                    i = j
                    while i < n and source[i].isdigit():
                        i += 1
                else:
                    raise ExpressionSyntaxError("malformed number", start)
            tokens.append(_Token("num", source[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(_Token("ident", source[start:i], start))
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, source: str, chart: Sequence[str] | None) -> None:
        self.tokens = _tokenize(source)
        self.pos = 0
        self.chart = None if chart is None else tuple(chart)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, symbol: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != symbol:
            raise ExpressionSyntaxError(f"expected '{symbol}'", tok.offset)
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExpressionSyntaxError(f"unexpected trailing input {tok.text!r}", tok.offset)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                node = add(node, rhs) if tok.text == "+" else sub(node, rhs)
            else:
                return node

    def term(self) -> Node:
        node = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.advance()
                rhs = self.unary()
                node = mul(node, rhs) if tok.text == "*" else div(node, rhs)
            else:
                return node

    def unary(self) -> Node:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            expo = self.unary()
            if not isinstance(expo, Const):
                raise ExpressionSyntaxError("exponent must be a constant", tok.offset)
            return pow_(base, expo.value)
        return base

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Const(float(tok.text))
        if tok.kind == "ident":
            self.advance()
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "(":
                if tok.text not in _CALL_TABLE:
                    raise ExpressionSyntaxError(f"unknown function '{tok.text}'", tok.offset)
                self.advance()
                inner = self.expr()
                self.expect_op(")")
                return call(tok.text, inner)
            if self.chart is not None and tok.text not in self.chart:
                raise UnknownVariableError(tok.text, tok.offset)
            return Var(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok.kind == "end":
            raise ExpressionSyntaxError("unexpected end of input", tok.offset)
        raise ExpressionSyntaxError(f"unexpected token {tok.text!r}", tok.offset)


# =====================================================================
# Chart-aware scalar fields
# =====================================================================

FieldLike = Union["ScalarField", float, int, str]


@dataclass(frozen=True)
class ScalarField:
    """A scalar function of the chart coordinates.

    ``chart`` fixes the coordinate names and their order; evaluation
    takes points as sequences in that order.  Arithmetic between fields
    requires identical charts.
    """

    chart: tuple[str, ...]
    root: Node

    def __post_init__(self) -> None:
        loose = free_variables(self.root) - set(self.chart)
        if loose:
            raise UnknownVariableError(sorted(loose)[0])

    # -- evaluation ---------------------------------------------------

    def __call__(self, point: Sequence[float]) -> float:
        if len(point) != len(self.chart):
            raise ValueError(
                f"point has {len(point)} entries, chart has {len(self.chart)}"
            )
        env = {name: float(v) for name, v in zip(self.chart, point)}
        return evaluate(self.root, env)

    # -- calculus -----------------------------------------------------

    def diff(self, var: str) -> "ScalarField":
        if var not in self.chart:
            raise UnknownVariableError(var)
        return ScalarField(self.chart, differentiate(self.root, var))

    # -- combination --------------------------------------------------

    def _coerce(self, other: FieldLike) -> Node:
        if isinstance(other, ScalarField):
            if other.chart != self.chart:
                raise ValueError(
                    f"chart mismatch: {self.chart} vs {other.chart}"
                )
            return other.root
        if isinstance(other, (int, float)):
            return Const(float(other))
        if isinstance(other, str):
            return parse_expression(other, self.chart).root
        raise TypeError(f"cannot combine ScalarField with {type(other).__name__}")

    def __add__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, add(self.root, self._coerce(other)))

    def __radd__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, add(self._coerce(other), self.root))

    def __sub__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, sub(self.root, self._coerce(other)))

    def __rsub__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, sub(self._coerce(other), self.root))

    def __mul__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, mul(self.root, self._coerce(other)))

    def __rmul__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, mul(self._coerce(other), self.root))

    def __truediv__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, div(self.root, self._coerce(other)))

    def __rtruediv__(self, other: FieldLike) -> "ScalarField":
        return ScalarField(self.chart, div(self._coerce(other), self.root))

    def __pow__(self, exponent: float) -> "ScalarField":
        return ScalarField(self.chart, pow_(self.root, float(exponent)))

    def __neg__(self) -> "ScalarField":
        return ScalarField(self.chart, neg(self.root))

    # -- misc ---------------------------------------------------------

    def with_chart(self, chart: Sequence[str]) -> "ScalarField":
        return ScalarField(tuple(chart), self.root)

    def __str__(self) -> str:
        return format_expression(self.root)


def parse_expression(source: str, chart: Sequence[str]) -> ScalarField:
    chart_t = tuple(chart)
    if len(set(chart_t)) != len(chart_t):
        raise ValueError(f"chart has repeated names: {chart_t}")
    root = _Parser(source, chart_t).parse()
    return ScalarField(chart_t, root)


def constant_field(chart: Sequence[str], value: float) -> ScalarField:
    return ScalarField(tuple(chart), Const(float(value)))


def coordinate_field(chart: Sequence[str], name: str) -> ScalarField:
    if name not in chart:
        raise UnknownVariableError(name)
    return ScalarField(tuple(chart), Var(name))


def _lift(func: str, field: ScalarField) -> ScalarField:
    return ScalarField(field.chart, call(func, field.root))


def exp(field: ScalarField) -> ScalarField:
    return _lift("exp", field)


def ln(field: ScalarField) -> ScalarField:
    return _lift("ln", field)


def sin(field: ScalarField) -> ScalarField:
    return _lift("sin", field)


def cos(field: ScalarField) -> ScalarField:
    return _lift("cos", field)


def sqrt(field: ScalarField) -> ScalarField:
    return _lift("sqrt", field)
