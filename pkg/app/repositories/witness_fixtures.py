"""
Cliques named in the planarity and ring-graph arguments.

Each entry fixes an exponent shape (alpha for m, beta for n, over
p1..p4) that violates the corresponding bound, and the K5 or K4 that the
argument exhibits there, as exponent vectors.
"""

from typing import List

from app.schemas.fixture_schema import ProofWitness


def _w(theorem, case, alpha, beta, kind, *members) -> ProofWitness:
    return ProofWitness(
        theorem=theorem, case=case, alpha=alpha, beta=beta, kind=kind, members=list(members)
    )


PROOF_WITNESSES: List[ProofWitness] = [
    # planarity: more than three primes in n
    _w("planar", "s' >= 4", (1, 1, 1, 1), (1, 1, 1, 1), "K5",
       (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 0, 0)),
    # one prime in n
    _w("planar", "s' = 1, beta1 >= 6", (6,), (6,), "K5",
       (1,), (2,), (3,), (4,), (5,)),
    _w("planar", "s' = 1, s >= 4", (1, 1, 1, 1), (1, 0, 0, 0), "K5",
       (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)),
    _w("planar", "s' = 1, s = 2, alpha2 >= 5", (1, 5), (1, 0), "K5",
       (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)),
    _w("planar", "s' = 1, s = 2, beta1 >= 3", (3, 1), (3, 0), "K5",
       (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)),
    _w("planar", "s' = 1, s = 2, beta1 = 2, alpha2 >= 2", (2, 2), (2, 0), "K5",
       (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)),
    _w("planar", "s' = 1, s = 3, alpha2 >= 2", (1, 2, 1), (1, 0, 0), "K5",
       (0, 1, 0), (0, 0, 1), (0, 2, 0), (0, 1, 1), (0, 2, 1)),
    _w("planar", "s' = 1, s = 3, beta1 >= 2", (2, 1, 1), (2, 0, 0), "K5",
       (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1)),
    # two primes in n
    _w("planar", "s' = 2, beta1, beta2 >= 2", (2, 2), (2, 2), "K5",
       (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)),
    _w("planar", "s' = 2, beta2 >= 2, alpha1 >= 2", (2, 2), (1, 2), "K5",
       (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)),
    _w("planar", "s' = 2, beta2 >= 2, s >= 3", (1, 2, 1), (1, 2, 0), "K5",
       (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1)),
    _w("planar", "s' = 2, beta2 >= 3", (1, 3), (1, 3), "K5",
       (1, 0), (0, 1), (0, 2), (1, 1), (1, 2)),
    _w("planar", "s' = 2, beta2 = 2, alpha2 >= 5", (1, 5), (1, 2), "K5",
       (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)),
    _w("planar", "s' = 2, beta2 = 1, s >= 3, alpha3 >= 2", (1, 1, 2), (1, 1, 0), "K5",
       (1, 0, 0), (0, 0, 1), (0, 0, 2), (1, 0, 1), (1, 0, 2)),
    _w("planar", "s' = 2, beta2 = 1, s >= 3, alpha1 >= 2", (2, 1, 1), (1, 1, 0), "K5",
       (1, 0, 0), (2, 0, 0), (0, 0, 1), (1, 0, 1), (2, 0, 1)),
    _w("planar", "s' = 2, s = 2, alpha1 >= 5", (5, 1), (1, 1), "K5",
       (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)),
    # three primes in n
    _w("planar", "s' = 3, s >= 4", (1, 1, 1, 1), (1, 1, 1, 0), "K5",
       (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 1)),
    _w("planar", "s' = 3, alpha1 >= 3", (3, 1, 1), (1, 1, 1), "K5",
       (1, 0, 0), (2, 0, 0), (3, 0, 0), (0, 1, 0), (0, 0, 1)),
    _w("planar", "s' = 3, beta1 >= 2", (2, 1, 1), (2, 1, 1), "K5",
       (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1)),
    _w("planar", "s' = 3, alpha1 = alpha2 = 2", (2, 2, 1), (1, 1, 1), "K5",
       (1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 2, 0), (1, 1, 0)),
    _w("planar", "s' = 3, m = p1 p2 p3^2", (1, 1, 2), (1, 1, 1), "K5",
       (0, 0, 1), (0, 0, 2), (0, 1, 1), (0, 1, 2), (0, 1, 0)),
    # ring graphs
    _w("ring", "case 1, beta1 = 5", (5,), (5,), "K4",
       (1,), (2,), (3,), (4,)),
    _w("ring", "case 2, alpha2 = 4", (1, 4), (1, 0), "K4",
       (0, 1), (0, 2), (0, 3), (0, 4)),
    _w("ring", "case 5, alpha2 = 4", (1, 4), (1, 2), "K4",
       (0, 1), (0, 2), (0, 3), (0, 4)),
    _w("ring", "case 7, alpha1 = 4", (4, 1), (1, 1), "K4",
       (1, 0), (2, 0), (3, 0), (4, 0)),
]
