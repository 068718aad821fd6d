"""The torsion floor and Seifert bundles.

Without 2-torsion, a presentation with T triangles has abelian torsion of
order at most 3^T.  Cyclic groups show the floor is far from tight.  Circle
bundles over surfaces have torsion of order |e| in their abelianization, yet
their stable cost tends to 0 along the fibre-unwrapping covers.
"""

from splength.abelian import smith_form_of, torsion_lower_bound
from splength.estimator import family_sweep
from splength.families import seifert
from splength.presentation import parse_presentation, tcost


def main():
    for k in (5, 9, 27, 81):
        p = parse_presentation(f"< x | x^{k} >")
        tb = torsion_lower_bound(p, no_2_torsion=True)
        print(f"Z/{k}: cost {tcost(p)}, floor {tb.value}")

    for e in (1, 3, 5):
        p = seifert(1, e).presentation
        print(f"seifert(1, {e}): cost {tcost(p)}, abelianization {smith_form_of(p).describe()}")

    print(family_sweep("seifert", {"g": [2], "e": [1], "d": range(1, 31)}).summary())


if __name__ == "__main__":
    main()
