"""Independent reference computations used to check the closed forms.

Nothing here imports the package; each oracle re-derives its answer from the
defining inequality or equation by brute force.
"""
import math


def bisect_breakeven(t_q, t_c, degree, speedup, rate, iterations=400):
    """Solve M * t_q / R == M**degree * t_c / S for M by bisection on log M.

    The gap g(M) = log T_C(M) - log T_Q(M) is increasing in M for degree > 1.
    """
    # runtimes are compared in log space so extreme M neither overflows nor underflows
    def gap(log_m):
        log_quantum = log_m + math.log(t_q) - math.log(rate)
        log_classical = degree * log_m + math.log(t_c) - math.log(speedup)
        return log_classical - log_quantum

    lo, hi = -1.0, 1.0
    while gap(lo) > 0:
        lo *= 2
    while gap(hi) < 0:
        hi *= 2
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0:
            lo = mid
        else:
            hi = mid
    m = math.exp(0.5 * (lo + hi))
    return m, m * t_q / rate


def scan_code_distance(gates, qubits, p, p_th, gate_prefactor, prefactor, budget, max_distance=99):
    """Every odd distance from 3 upward, first one meeting the budget; None if none does."""
    for d in range(3, max_distance + 1):
        if d % 2 == 0:
            continue
        per_round = prefactor * math.pow(p / p_th, (d + 1) / 2)
        rounds = gate_prefactor * d * gates
        if per_round * rounds * qubits <= budget:
            return d
    return None


def amdahl(alpha, p):
    return 1.0 / (alpha + (1.0 - alpha) / p)


def gustafson(alpha, p):
    return alpha + (1.0 - alpha) * p
