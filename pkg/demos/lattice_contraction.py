"""Contracting the inside of a fundamental parallelogram.

A finite-index sublattice of Z^2 gives a cover of a torus-like complex.
Triangles lying strictly inside the fundamental parallelogram can be
collapsed, and only those touching its boundary survive.  As the sublattice
is dilated, the boundary share falls like perimeter over area.
"""

from splength.lattice import (LatticeBasis, builtin_layouts, contraction_sweep, epsilon_r,
                              fundamental_domain_contraction, lll_reduce, reduced_basis_certificate,
                              relative_to_absolute_bound)
from splength.report import decimal_string


def main():
    sub = LatticeBasis.parse("3,-1;1,4")
    layout = builtin_layouts()["fig8proof"]
    c = fundamental_domain_contraction(layout, sub)
    print(f"sublattice {sub.format()}: {c.interior_contracted} of {c.total_triangles} triangles contracted")

    for k, cnt in contraction_sweep(layout, sub, [1, 2, 5, 10, 20]):
        print(f"  k={k:2d}: boundary share {decimal_string(cnt.boundary_ratio)}")

    skewed = LatticeBasis.parse("7,2;30,9")
    red = lll_reduce(skewed)
    cert = reduced_basis_certificate(red)
    print(f"LLL: {skewed.format()} -> {red.format()}, covolume {cert.covolume}, "
          f"witness {cert.epsilon_witness} >= eps_2 = {epsilon_r(2)}")

    for size in (10, 100, 1000):
        bound = relative_to_absolute_bound(6, (size, size), epsilon_r(2))
        print(f"  norms {size}: absolute bound {decimal_string(bound)}")


if __name__ == "__main__":
    main()
