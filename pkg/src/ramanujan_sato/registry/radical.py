"""Closed-form radical expressions (nested square roots) and their ball evaluation."""

import ast
from dataclasses import dataclass
from fractions import Fraction

from ..numerics.ball import DEFAULT_PREC, Ball, BallDomainError
from ..numerics.rational import format_rational


class RadicalParseError(ValueError):
    pass


class RadicalDomainError(BallDomainError):
    """A square root was applied to a subexpression that is not provably positive."""


@dataclass(frozen=True)
class RadicalExpr:
    """Expression tree node: ``op`` is one of num, neg, add, sub, mul, div, pow, sqrt."""

    op: str
    args: tuple = ()
    value: Fraction = None

    def evaluate(self, prec=DEFAULT_PREC):
        op = self.op
        if op == "num":
            return Ball.exact(self.value, prec)
        if op == "sqrt":
            inner = self.args[0].evaluate(prec)
            if not inner.is_positive():
                raise RadicalDomainError(f"square root of a non-positive quantity: sqrt({self.args[0]}) with {self.args[0]} ~ {inner}")
            return inner.sqrt(str(self.args[0]))
        if op == "neg":
            return -self.args[0].evaluate(prec)
        if op == "pow":
            return self.args[0].evaluate(prec) ** int(self.value)
        a, b = (arg.evaluate(prec) for arg in self.args)
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        if op == "div":
            return a / b
        raise ValueError(f"unknown radical node {op!r}")

    @property
    def depth(self):
        """Nesting depth of square roots."""
        inner = max((a.depth for a in self.args), default=0)
        return inner + (1 if self.op == "sqrt" else 0)

    def __str__(self):
        op = self.op
        if op == "num":
            return format_rational(self.value)
        if op == "sqrt":
            return f"sqrt({self.args[0]})"
        if op == "neg":
            return f"-({self.args[0]})"
        if op == "pow":
            return f"({self.args[0]})**{int(self.value)}"
        sym = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[op]
        return f"({self.args[0]} {sym} {self.args[1]})"


_BINOPS = {ast.Add: "add", ast.Sub: "sub", ast.Mult: "mul", ast.Div: "div"}


def parse_radical(text):
    """Parse e.g. ``"-4*(-2 + sqrt(2))*sqrt(6*(577 - 408*sqrt(2)))"``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise RadicalParseError(f"cannot parse radical expression {text!r}: {exc.msg} at column {exc.offset}") from None
    return _convert(tree.body, text)


def _convert(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return RadicalExpr("num", value=Fraction(node.value))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _convert(node.operand, text)
        if isinstance(node.op, ast.UAdd):
            return inner
        if inner.op == "num":
            return RadicalExpr("num", value=-inner.value)
        return RadicalExpr("neg", (inner,))
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _convert(node.left, text)
        right = _convert(node.right, text)
        op = _BINOPS[type(node.op)]
        if op == "div" and left.op == "num" and right.op == "num":
            return RadicalExpr("num", value=left.value / right.value)
        return RadicalExpr(op, (left, right))
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
        base = _convert(node.left, text)
        exp = node.right
        if isinstance(exp, ast.Constant) and isinstance(exp.value, int) and exp.value >= 0:
            return RadicalExpr("pow", (base,), Fraction(exp.value))
        raise RadicalParseError(f"only non-negative integer powers are allowed in {text!r}")
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "sqrt"
        and len(node.args) == 1
        and not node.keywords
    ):
        return RadicalExpr("sqrt", (_convert(node.args[0], text),))
    raise RadicalParseError(
        f"unsupported construct {ast.dump(node)[:40]}... at column {getattr(node, 'col_offset', 0) + 1} in {text!r}"
    )


def eval_radical(expr, prec=DEFAULT_PREC):
    if isinstance(expr, str):
        expr = parse_radical(expr)
    return expr.evaluate(prec)
