"""A small corpus of presentations used by the tests and demos.

``no_2_torsion`` marks groups known to have no elements of order 2, for
which the torsion floor ``3**T(G) >= |Tor(G^ab)|`` applies.  The marking is
by hand, since no algorithm can decide it in general.
"""

from dataclasses import dataclass
from typing import List

from .families import builtin_templates, instantiate_torus_cover, seifert, surface
from .presentation import Presentation, parse_presentation


@dataclass(frozen=True)
class Fixture:
    name: str
    presentation: Presentation
    no_2_torsion: bool
    abelian: bool = False


def corpus() -> List[Fixture]:
    tm = builtin_templates()
    return [
        Fixture("free1", parse_presentation("< x | >"), True, abelian=True),
        Fixture("free2", parse_presentation("< x, y | >"), True),
        Fixture("cyclic5", parse_presentation("< x | x^5 >"), True, abelian=True),
        Fixture("cyclic6", parse_presentation("< x | x^6 >"), False, abelian=True),
        Fixture("cyclic9", parse_presentation("< x | x^9 >"), True, abelian=True),
        Fixture("z3xz3", parse_presentation("< a, b | a^3, b^3, a b a^-1 b^-1 >"), True, abelian=True),
        Fixture("z2", parse_presentation("< a, b | a b a^-1 b^-1 >"), True, abelian=True),
        Fixture("s3", parse_presentation("< a, b | a^2, b^2, (a b)^3 >"), False),
        Fixture("trefoil", parse_presentation("< x, y | x y x y^-1 x^-1 y^-1 >"), True),
        Fixture("surface2", surface(2).presentation, True),
        Fixture("seifert1_3", seifert(1, 3).presentation, True),
        Fixture("figure8_base", instantiate_torus_cover(tm["figure8"], 1, 1).presentation, True),
        Fixture("magic_base", instantiate_torus_cover(tm["magic"], 1, 1).presentation, True),
    ]


def no_2_torsion_corpus() -> List[Fixture]:
    return [f for f in corpus() if f.no_2_torsion]
