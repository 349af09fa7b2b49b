"""Phase-encoding functions and the two-layer feature-map circuit.

A 2-d input x is encoded through three phase functions (phi1, phi2,
phi12) into the circuit U_phi H H U_phi H H acting on |00>, where U_phi
is the diagonal two-qubit phase gate.  Five built-in choices of phi12
are provided (ids ``ef1`` .. ``ef5``); phi1 and phi2 are fixed to the
raw coordinates for all of them.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from typing import Callable

from .states import StateVector, apply_diagonal_phase, apply_hadamard_all, zero_state

PhaseFunction = Callable[[float, float], float]


class EncodingError(ValueError):
    """An encoding function produced a non-finite phase."""


@dataclass(frozen=True)
class EncodingSpec:
    """The triple of phase functions selecting one feature map."""

    id: str
    phi1: PhaseFunction
    phi2: PhaseFunction
    phi12: PhaseFunction


def _coord1(x1, x2):
    return x1


def _coord2(x1, x2):
    return x2


_BUILTIN_PHI12 = {
    "ef1": lambda x1, x2: math.pi * x1 * x2,
    "ef2": lambda x1, x2: (math.pi / 2.0) * (1.0 - x1) * (1.0 - x2),
    "ef3": lambda x1, x2: math.exp(abs(x1 - x2) ** 2 / (8.0 / math.log(math.pi))),
    "ef4": lambda x1, x2: math.pi / (3.0 * math.cos(x1) * math.cos(x2)),
    "ef5": lambda x1, x2: math.pi * math.cos(x1) * math.cos(x2),
}

BUILTIN_IDS = tuple(_BUILTIN_PHI12)


def builtin(encoding_id: str) -> EncodingSpec:
    """Return one of the built-in specs ``ef1`` .. ``ef5``."""
    key = encoding_id.lower()
    if key not in _BUILTIN_PHI12:
        raise ValueError(f"unknown encoding id {encoding_id!r}; expected one of {BUILTIN_IDS}")
    return EncodingSpec(key, _coord1, _coord2, _BUILTIN_PHI12[key])


def custom(phi12: PhaseFunction, phi1: PhaseFunction = _coord1,
           phi2: PhaseFunction = _coord2) -> EncodingSpec:
    """A user-supplied spec; defaults keep phi1, phi2 as the raw coordinates."""
    return EncodingSpec("custom", phi1, phi2, phi12)


def eval_encoding(spec: EncodingSpec, x) -> tuple[float, float, float]:
    """Evaluate the three phases at x, checking finiteness."""
    x1, x2 = float(x[0]), float(x[1])
    if not (math.isfinite(x1) and math.isfinite(x2)):
        raise EncodingError("input point is not finite")
    out = []
    for name, fn in (("phi1", spec.phi1), ("phi2", spec.phi2), ("phi12", spec.phi12)):
        try:
            v = float(fn(x1, x2))
        except (ArithmeticError, ValueError) as exc:
            raise EncodingError(f"{name} failed at x=({x1}, {x2}): {exc}") from exc
        if not math.isfinite(v):
            raise EncodingError(f"{name} is not finite at x=({x1}, {x2}): {v}")
        out.append(v)
    return tuple(out)


def feature_state(spec: EncodingSpec, x) -> StateVector:
    """|Phi(x)> = U_phi (H x H) U_phi (H x H) |00>.

    The diagonal layer U_phi follows the phase-gate (u1) sequence
    convention: basis state b picks up exp(-i/2 * (phi1 z1 + phi2 z2 +
    phi12 z1 z2)), which is the convention under which the closed-form
    coefficient table of :mod:`qkmap.pauli` holds exactly.
    """
    p1, p2, p12 = eval_encoding(spec, x)
    state = zero_state(2)
    for _ in range(2):
        state = apply_hadamard_all(state)
        state = apply_diagonal_phase(
            state, [-0.5 * p1, -0.5 * p2], {(1, 2): -0.5 * p12}
        )
    return state


# --- expression mini-language --------------------------------------------
#
# Custom phase functions can be given as text expressions over x1 and x2.
# Grammar: numbers, x1, x2, pi, the functions sin, cos, exp, abs, ln, the
# operators + - * / and ^ (or **) for power, unary minus, parentheses.
# Whitespace-insensitive, standard precedence.

_EXPR_FUNCS = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "abs": abs,
    "ln": math.log,
}

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def _validate_expr(node: ast.AST, text: str) -> None:
    if isinstance(node, ast.Expression):
        _validate_expr(node.body, text)
    elif isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        _validate_expr(node.left, text)
        _validate_expr(node.right, text)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        _validate_expr(node.operand, text)
    elif isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _EXPR_FUNCS:
            raise ValueError(f"unknown function in expression {text!r}")
        if len(node.args) != 1 or node.keywords:
            raise ValueError(f"functions take exactly one argument: {text!r}")
        _validate_expr(node.args[0], text)
    elif isinstance(node, ast.Name):
        if node.id not in ("x1", "x2", "pi"):
            raise ValueError(f"unknown name {node.id!r} in expression {text!r}")
    elif isinstance(node, ast.Constant):
        if not isinstance(node.value, (int, float)):
            raise ValueError(f"non-numeric constant in expression {text!r}")
    else:
        raise ValueError(f"unsupported syntax in expression {text!r}")


def parse_phase_expression(text: str) -> PhaseFunction:
    """Compile a mini-language expression to a phase function of (x1, x2)."""
    source = text.replace("^", "**").strip()
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {text!r}: {exc}") from exc
    _validate_expr(tree, text)
    code = compile(tree, "<phase-expression>", "eval")
    env = {"__builtins__": {}, "pi": math.pi, **_EXPR_FUNCS}

    def fn(x1: float, x2: float) -> float:
        return eval(code, env, {"x1": x1, "x2": x2})

    return fn
