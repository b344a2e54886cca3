"""Scan the word oracle across the critical separation.

For each delta the certificate verdict is compared with the shortest-word
search. Below the critical value, mixed-kind pairs at (3, 3) pick up
finite-order products f g^-1 (triangle-group relations) at specific
separations; the script lists them and checks each relation directly.

    python scripts/oracle_scan.py --m 3 --n 3 --kind-g point
"""
import argparse
import math
import sys

import numpy as np

from chyp.certify import certify_spec, critical_delta
from chyp.hermitian import group_inverse, identity_distance
from chyp.isometries import order_of_elliptic
from chyp.pairs import PairSpec, make_pair
from chyp.words import verify_freeness


def triangle_delta_33(k):
    """Separation where the mixed-kind (3, 3) pair has f g^-1 of finite order.

    The order is k for odd k and 2k for even k.
    """
    return math.acosh((math.cos(math.pi / k) + 0.25) / 0.75)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--kind-f", default="line", choices=["line", "point"])
    ap.add_argument("--kind-g", default="point", choices=["line", "point"])
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--points", type=int, default=12)
    args = ap.parse_args()

    dc = critical_delta(args.m, args.n)
    print(f"critical delta {dc:.12f}")
    print(f"{'delta':>8} {'verdict':>13} {'min_dist':>10} {'worst word':>20}")
    for d in np.linspace(0.2 * dc, 1.8 * dc, args.points):
        spec = PairSpec(args.m, args.n, float(d), 0.0, args.kind_f, args.kind_g)
        rep = certify_spec(spec)
        fr = verify_freeness(*make_pair(spec), args.m, args.n, args.depth)
        print(f"{d:8.4f} {rep.verdict.value:>13} {fr.min_identity_distance:10.3g} {str(fr.worst_word):>20}")

    if args.kind_f != args.kind_g and (args.m, args.n) == (3, 3):
        print("\nfinite-order products f g^-1 below the critical value:")
        for k in (4, 5, 6, 7, 8):
            d = triangle_delta_33(k)
            F, G = make_pair(PairSpec(3, 3, d, 0.0, args.kind_f, args.kind_g))
            X = F @ group_inverse(G)
            order = order_of_elliptic(X)
            dist = identity_distance(np.linalg.matrix_power(X, order))
            print(f"  k={k}: delta = {d:.12f}  order(f g^-1) = {order:>2}  residual {dist:.1e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
