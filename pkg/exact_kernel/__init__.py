from exact_kernel.derivation import D_T, Derivation, derive
from exact_kernel.field import (
    K,
    RatFunc,
    as_ratfunc,
    c,
    g,
    gp,
    p,
    rat,
    substitute,
    t,
    th_0,
    th_1,
    th_inf,
    th_x,
    to_text,
    u,
    u1,
    x,
)
from exact_kernel.identity import ZeroTestMode, certify_zero, is_zero
from exact_kernel.operators import GaugeLog, LinOp
