"""Closed-form success probability, output fidelity and gain."""

from __future__ import annotations

from ..errors import DomainError


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must be in [0, 1], got {value}")


def closed_p1(t: float) -> float:
    """Entangled-branch success probability t^3 (1 - t)."""
    _check_unit("t", t)
    return t**3 * (1.0 - t)


def closed_p2(t: float) -> float:
    """Vacuum-branch success probability t^4."""
    _check_unit("t", t)
    return t**4


def closed_p_total(eta: float, t: float) -> float:
    """(1 - 2 eta) t^4 + eta t^3."""
    _check_unit("eta", eta)
    _check_unit("t", t)
    return (1.0 - 2.0 * eta) * t**4 + eta * t**3


def closed_eta_prime(eta: float, t: float) -> float | None:
    """eta (1-t) / (eta (1-t) + (1-eta) t), or None where it is 0/0."""
    _check_unit("eta", eta)
    _check_unit("t", t)
    numerator = eta * (1.0 - t)
    denominator = numerator + (1.0 - eta) * t
    if denominator == 0.0:
        return None
    return numerator / denominator


def closed_g(eta: float, t: float) -> float | None:
    """Amplification factor eta'/eta; None when eta = 0 or eta' is undefined."""
    _check_unit("eta", eta)
    _check_unit("t", t)
    if eta == 0.0:
        return None
    denominator = eta * (1.0 - t) + (1.0 - eta) * t
    if denominator == 0.0:
        return None
    return (1.0 - t) / denominator


def amplification_threshold() -> float:
    """g > 1 exactly when t is below this value (for 0 < eta < 1)."""
    return 0.5


def closed_max_p_total(eta: float, t_max: float = 0.5) -> tuple[float, float]:
    """Maximum of P_t over [0, t_max] as (argmax t, value).

    dP_t/dt = t^2 (4 (1 - 2 eta) t + 3 eta), so the only interior critical point
    is t = 3 eta / (4 (2 eta - 1)) when eta > 1/2.
    """
    _check_unit("eta", eta)
    _check_unit("t_max", t_max)
    candidates = [0.0, t_max]
    if eta > 0.5:
        critical = 3.0 * eta / (4.0 * (2.0 * eta - 1.0))
        if critical <= t_max:
            candidates.append(critical)
    best = max(candidates, key=lambda t: closed_p_total(eta, t))
    return best, closed_p_total(eta, best)
