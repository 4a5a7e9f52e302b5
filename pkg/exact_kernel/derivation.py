from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from exact_kernel.errors import InertSymbolError
from exact_kernel.field import INERT_SYMBOLS, K, RatFunc, as_ratfunc, name_of, t, variables_of


@dataclass(frozen=True, eq=False)
class Derivation:
    """A map generator -> image, extended to the field by the Leibniz rule.

    Generators without an image map to zero, except the inert symbols, which
    must be given an image explicitly before anything depending on them can
    be differentiated.
    """

    name: str
    images: Mapping[RatFunc, RatFunc] = field(default_factory=dict)

    def __call__(self, f: RatFunc) -> RatFunc:
        return derive(self, f)

    def with_image(self, var: RatFunc, image) -> "Derivation":
        images = dict(self.images)
        images[var] = as_ratfunc(image)
        return Derivation(self.name, images)


def derive(d: Derivation, f: RatFunc) -> RatFunc:
    f = as_ratfunc(f)
    result = K.zero
    for var in variables_of(f):
        image = d.images.get(var)
        if image is None:
            if var in INERT_SYMBOLS:
                raise InertSymbolError(name_of(var))
            continue
        if image:
            result += image * f.diff(var)
    return result


# partial t-derivative; every inert symbol is a function of x alone
D_T = Derivation("d_t", {t: K.one, **{symbol: K.zero for symbol in INERT_SYMBOLS}})
