"""Plain-text expression grammar.

    expr    := variables of the field, integers, p/q, + - * / ^, parentheses

`parse(to_text(f)) == f` for every field element.
"""

from __future__ import annotations

import re
from tokenize import TokenError

from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from exact_kernel.errors import ExpressionSyntaxError
from exact_kernel.field import VARIABLE_NAMES, K, RatFunc

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<op>[-+*/^()]))")
_LOCALS = dict(zip(VARIABLE_NAMES, K.symbols))
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _check_tokens(text: str) -> None:
    position = 0
    previous_op = ""
    end = len(text.rstrip())
    while position < end:
        match = _TOKEN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"unexpected character {text[position:position + 1]!r} at {position}")
        name, op = match.group("name"), match.group("op")
        if name is not None and name not in _LOCALS:
            raise ExpressionSyntaxError(f"unknown variable {name!r}")
        if op == "*" and previous_op == "*":
            raise ExpressionSyntaxError("use ^ for powers")
        previous_op = op or ""
        position = match.end()


def parse(text: str) -> RatFunc:
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression")
    _check_tokens(text)
    try:
        expr = parse_expr(text, local_dict=dict(_LOCALS), transformations=_TRANSFORMATIONS)
        return K.from_expr(expr)
    except (SyntaxError, TokenError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ExpressionSyntaxError(f"cannot parse {text!r}: {exc}") from exc
