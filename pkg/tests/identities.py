"""Intermediate identities as (label, engine thunk, expected text) fixtures.

``expected_to_hold`` is False for printed displays that carry an extra term
the engine does not produce; the acceptance suite reports those.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ncresidue.jets import evaluate_at_boundary, jet_derivative
from ncresidue.jets.boundary import BoundaryValue
from ncresidue.jets.symbols import build_sigma_minus2

N = 7


def _s2() -> BoundaryValue:
    return evaluate_at_boundary(build_sigma_minus2())


def _d(*dirs: tuple[str, int]) -> BoundaryValue:
    e = build_sigma_minus2()
    for d in dirs:
        e = jet_derivative(e, d)
    return evaluate_at_boundary(e)


XN = ("x", N)
XIN = ("xi", N)


@dataclass(frozen=True)
class Identity:
    label: str
    compute: Callable[[], BoundaryValue]
    expected: str
    expected_to_hold: bool = True


CURV = "(R(2,a,2,b)+R(2,b,2,a)) xi(a) xi(b)"

IDENTITIES = [
    Identity("d3 xin sigma2", lambda: _s2().xi_n_derivative(3), "(24xin-24xin^3)/(1+xin^2)^4"),
    Identity("d2 xn sigma2", lambda: _d(XN, XN), "2h1^2/(1+xin^2)^3 - h2/(1+xin^2)^2"),
    Identity("pi+ d2 xn sigma2", lambda: _d(XN, XN).pi_plus(),
             "h1^2(-3i xin^2-9xin+8i)/(8(xin-i)^3) + h2(2+i xin)/(4(xin-i)^2)"),
    Identity("d2 xi' sigma2", lambda: _d(("xi", 2), ("xi", 2)),
             "-2/(1+xin^2)^2 + 8xi(2)xi(2)/(1+xin^2)^3"),
    Identity("pi+ d2 xi' sigma2", lambda: _d(("xi", 2), ("xi", 2)).pi_plus(),
             "(2+i xin)/(2(xin-i)^2) + (-3i xin^2-9xin+8i)xi(2)xi(2)/(2(xin-i)^3)"),
    Identity("d2 x' sigma2 (printed)", lambda: _d(("x", 2), ("x", 2)),
             f"{CURV}/(3(1+xin^2)^2) + 2h1^2/(1+xin^2)^3", expected_to_hold=False),
    Identity("d2 x' dxin sigma2 (printed)", lambda: _d(("x", 2), ("x", 2), XIN),
             f"-4xin {CURV}/(3(1+xin^2)^3) - 12xin h1^2/(1+xin^2)^4", expected_to_hold=False),
    Identity("d2 x' sigma2 (curvature part)", lambda: _d(("x", 2), ("x", 2)), f"{CURV}/(3(1+xin^2)^2)"),
    Identity("d2 x' dxin sigma2 (curvature part)", lambda: _d(("x", 2), ("x", 2), XIN),
             f"-4xin {CURV}/(3(1+xin^2)^3)"),
    Identity("dx' dxn sigma2", lambda: _d(("x", 3), XN), "0"),
    Identity("dxin pi+ dxn sigma2", lambda: _d(XN).pi_plus().xi_n_derivative(1), "h1(-3-i xin)/(4(xin-i)^3)"),
    Identity("d2 xin dxn sigma2", lambda: _d(XN).xi_n_derivative(2), "h1(4-20xin^2)/(1+xin^2)^4"),
    Identity("d2 xin pi+ sigma2", lambda: _s2().pi_plus().xi_n_derivative(2), "-i/(xin-i)^3"),
    Identity("dxin d2 xn sigma2", lambda: _d(XN, XN).xi_n_derivative(1),
             "4xin h2/(1+xin^2)^3 - 12xin h1^2/(1+xin^2)^4"),
    Identity("pi+ dxn sigma2", lambda: _d(XN).pi_plus(), "h1(2+i xin)/(4(xin-i)^2)"),
    Identity("d2 xin pi+ dxn sigma2", lambda: _d(XN).pi_plus().xi_n_derivative(2), "h1(4+i xin)/(2(xin-i)^4)"),
    Identity("dxi' sigma2", lambda: _d(("xi", 3)), "-2xi(3)/(1+xin^2)^2"),
    Identity("dxin pi+ dxi' sigma2", lambda: _d(("xi", 3)).pi_plus().xi_n_derivative(1),
             "(-3-i xin)xi(3)/(2(xin-i)^3)"),
    Identity("d2 xin sigma2", lambda: _s2().xi_n_derivative(2), "(6xin^2-2)/(1+xin^2)^3"),
    Identity("dxin pi+ sigma2", lambda: _s2().pi_plus().xi_n_derivative(1), "i/(2(xin-i)^2)"),
    Identity("dxin sigma2", lambda: _s2().xi_n_derivative(1), "-2xin/(1+xin^2)^2"),
    Identity("dx' sigma2", lambda: _d(("x", 4)), "0"),
]


def holds(identity: Identity) -> bool:
    from ncresidue.jets.grammar import parse_boundary_value

    return identity.compute().equals_on_sphere(parse_boundary_value(identity.expected))
