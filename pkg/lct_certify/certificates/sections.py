"""Section counts fed into the certificate combinator."""

from __future__ import annotations

from lct_certify.arith import binomial


def h0_projective(N: int, d: int) -> int:
    """h^0(P^N, O(d))."""
    if N < 1 or d < 0:
        raise ValueError("need N >= 1 and d >= 0")
    return binomial(N + d, d)


def h0_k3(k: int, H2: int) -> int:
    """h^0(S, O(kH)) on a K3 surface with (H^2) = H2, by Riemann-Roch."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if H2 <= 0 or H2 % 2:
        raise ValueError("H2 must be even and positive on a K3 surface")
    if k == 0:
        return 1
    return k * k * H2 // 2 + 2
