from math import comb


def smoothstep(lam, order=2):
    """
    Smoothstep polynomial of degree 2*order - 1 evaluated at lam in [0, 1].

    p(0) = 0, p(1) = 1 and derivatives 1..order-1 vanish at both ends.
    order 1 is the identity, order 2 is 3x^2 - 2x^3, order 3 is 10x^3 - 15x^4 + 6x^5.
    """
    complement = 1.0 - lam
    total = sum(comb(order - 1 + j, j) * complement ** j for j in range(order))
    return lam ** order * total
