"""Named identity checks behind the ``verify`` CLI command.

Every library invariant is exercised with seeded random sampling and reported
as a :class:`CheckResult` (name, max observed error, tolerance). Suites mirror
the module layout so a failure names the identity that broke.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import amplitudes as amp
from . import clifford as cl
from . import correlations as corr
from . import lorentz as lo
from . import spin as sp
from . import states as st
from .sampling import (
    random_complex3,
    random_direction,
    random_onshell_momentum,
    random_sl2,
    rng_for,
)

__all__ = ["CheckResult", "RunReport", "run_all", "SUITES"]


@dataclass(frozen=True)
class CheckResult:
    """One named identity check: max observed error against its tolerance."""

    name: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


@dataclass(frozen=True)
class RunReport:
    """All checks of one suite plus the wall time spent running them."""

    suite: str
    checks: tuple[CheckResult, ...]
    wall_time: float

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    @property
    def max_error(self) -> float:
        return max((c.max_error for c in self.checks), default=0.0)


class _Collector:
    def __init__(self, tol_override: float | None):
        self.tol_override = tol_override
        self.errors: dict[str, float] = {}
        self.tols: dict[str, float] = {}

    def add(self, name: str, err: float, tol: float) -> None:
        self.errors[name] = max(self.errors.get(name, 0.0), float(err))
        self.tols[name] = tol if self.tol_override is None else self.tol_override

    def results(self) -> tuple[CheckResult, ...]:
        return tuple(
            CheckResult(name=n, max_error=self.errors[n], tolerance=self.tols[n])
            for n in self.errors
        )


def _mdiff(x, y) -> float:
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))


# ---------------------------------------------------------------- clifford


def _suite_clifford(samples: int, seed: int, out: _Collector) -> None:
    rng = rng_for(seed)
    eye4 = np.eye(4)
    err = 0.0
    for mu in range(4):
        for nu in range(4):
            anti = cl.GAMMA[mu] @ cl.GAMMA[nu] + cl.GAMMA[nu] @ cl.GAMMA[mu]
            err = max(err, _mdiff(anti, 2.0 * cl.METRIC[mu, nu] * eye4))
    out.add("clifford.anticommutator", err, 1e-14)

    c = cl.CHARGE_CONJUGATION
    c_inv = c.conj().T  # unitary
    err = max(_mdiff(c @ c.conj().T, eye4), _mdiff(c.T, -c))
    out.add("clifford.charge_conj_structure", err, 1e-14)
    err = 0.0
    for mu in range(4):
        err = max(err, _mdiff(c @ cl.GAMMA[mu].T @ c_inv, -cl.GAMMA[mu]))
    out.add("clifford.conjugation_flip", err, 1e-14)

    err = _mdiff(cl.GAMMA5, np.diag([1, 1, -1, -1]))
    for mu in range(4):
        err = max(err, _mdiff(cl.GAMMA5 @ cl.GAMMA[mu] + cl.GAMMA[mu] @ cl.GAMMA5, 0 * eye4))
    out.add("clifford.gamma5", err, 1e-14)

    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k], eps[j, i, k] = 1.0, -1.0
    err = 0.0
    for i in range(3):
        for j in range(3):
            prod = cl.PAULI[i + 1] @ cl.PAULI[j + 1]
            expect = (i == j) * cl.PAULI[0] + 1j * sum(
                eps[i, j, k] * cl.PAULI[k + 1] for k in range(3)
            )
            err = max(err, _mdiff(prod, expect))
    out.add("clifford.pauli_algebra", err, 1e-14)

    err = 0.0
    for i in range(1, 4):
        err = max(err, _mdiff(cl.PAULI[2] @ cl.PAULI[i].T @ cl.PAULI[2], -cl.PAULI[i]))
    out.add("clifford.sigma2_transpose_flip", err, 1e-14)

    err = 0.0
    for _ in range(max(1, samples // 10)):
        k = rng.normal(size=4) * 3.0
        err = max(err, _mdiff(cl.feynman_slash(k) @ cl.feynman_slash(k),
                              lo.minkowski_dot(k, k) * eye4))
    out.add("clifford.slash_square", err, 1e-12)


# ----------------------------------------------------------------- lorentz


def _suite_lorentz(samples: int, seed: int, out: _Collector) -> None:
    rng = rng_for(seed)
    g = np.diag([1.0, -1.0, -1.0, -1.0])
    for _ in range(max(1, samples)):
        k = random_onshell_momentum(rng)
        p = random_onshell_momentum(rng)
        a1 = random_sl2(rng)
        a2 = random_sl2(rng)

        boost = lo.standard_boost_sl2(k)
        out.add("lorentz.boost_rest_property",
                _mdiff(boost @ (1.0 * cl.PAULI[0]) @ boost.conj().T, cl.sigma_map(k)), 1e-10)
        det = boost[0, 0] * boost[1, 1] - boost[0, 1] * boost[1, 0]
        herm = _mdiff(boost, boost.conj().T)
        eigs = np.linalg.eigvalsh(boost)
        out.add("lorentz.boost_unimodular_hermitian_positive",
                max(abs(det - 1.0), herm, max(0.0, -float(eigs.min()))), 1e-10)

        lam = lo.sl2_to_lorentz(a1)
        out.add("lorentz.covering_map",
                _mdiff(cl.sigma_map(lam @ k), a1 @ cl.sigma_map(k) @ a1.conj().T), 1e-10)
        out.add("lorentz.homomorphism",
                _mdiff(lo.sl2_to_lorentz(a1 @ a2), lam @ lo.sl2_to_lorentz(a2)), 1e-10)
        out.add("lorentz.dot_invariance",
                abs(lo.minkowski_dot(lam @ k, lam @ p) - lo.minkowski_dot(k, p)), 1e-10)
        defect = max(_mdiff(lam.T @ g @ lam, g),
                     abs(np.linalg.det(lam) - 1.0),
                     max(0.0, 1.0 - lam[0, 0]))
        out.add("lorentz.proper_orthochronous", defect, 1e-10)

        u = lo.wigner_rotation(a1, k)
        out.add("lorentz.wigner_su2",
                max(_mdiff(u @ u.conj().T, np.eye(2)),
                    abs(u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0] - 1.0)), 1e-10)
        out.add("lorentz.bispinor_vector_law", lo.bispinor_vector_defect(a1), 1e-10)


# -------------------------------------------------------------- amplitudes


def _suite_amplitudes(samples: int, seed: int, out: _Collector) -> None:
    rng = rng_for(seed)
    eye2 = np.eye(2)
    m = 1.0
    for _ in range(max(1, samples)):
        k = random_onshell_momentum(rng, m)
        v = amp.amplitude_v(k, m)
        vb = amp.vbar(v)
        slash = cl.feynman_slash(k)

        out.add("amplitudes.slash_eigen", _mdiff(slash @ v.matrix, m * v.matrix), 1e-11)
        out.add("amplitudes.vbar_normalization", _mdiff(vb @ v.matrix, eye2), 1e-11)
        out.add("amplitudes.parity_flip",
                _mdiff(cl.GAMMA[0] @ v.matrix, amp.amplitude_v(lo.parity_flip(k), m).matrix),
                1e-11)
        err = 0.0
        for mu in range(4):
            err = max(err, _mdiff(vb @ cl.GAMMA[mu] @ v.matrix, (k[mu] / m) * eye2))
        out.add("amplitudes.vector_current", err, 1e-11)
        out.add("amplitudes.completeness",
                _mdiff(v.matrix @ vb, (slash + m * np.eye(4)) / (2.0 * m)), 1e-11)

        a = random_sl2(rng)
        lam_k = lo.apply_lorentz(lo.sl2_to_lorentz(a), k)
        rot = lo.wigner_rotation(a, k, m)
        d = lo.bispinor_rep(a)
        v_out = amp.amplitude_v(lam_k, m).matrix
        out.add("amplitudes.covariance_transpose",
                _mdiff(v_out, d @ v.matrix @ rot.T), 1e-11)
        out.add("amplitudes.covariance_adjoint",
                _mdiff(v_out @ cl.PAULI[2], d @ v.matrix @ cl.PAULI[2] @ rot.conj().T), 1e-11)


# -------------------------------------------------------------------- spin


def _suite_spin(samples: int, seed: int, out: _Collector) -> None:
    rng = rng_for(seed)
    m = 1.0
    eps = {(0, 1): 2, (1, 2): 0, (2, 0): 1}
    for _ in range(max(1, samples)):
        k = random_onshell_momentum(rng, m)
        v = amp.amplitude_v(k, m)
        sm = sp.spin_matrices(k, m)
        sc = sp.spin_covariant(k, m)
        err_std = 0.0
        err_cov = 0.0
        for i in range(3):
            target = v.matrix @ (cl.PAULI[i + 1].T / 2.0)
            err_std = max(err_std, _mdiff(sm.s[i] @ v.matrix, target))
            err_cov = max(err_cov, _mdiff(sc.s[i] @ v.matrix, target))
        out.add("spin.action_standard_basis", err_std, 1e-10)
        out.add("spin.action_covariant_basis", err_cov, 1e-10)

        gen = sp.spin_su2_generators(k, m)
        err = 0.0
        for (i, j), l in eps.items():
            err = max(err, _mdiff(gen[i] @ gen[j] - gen[j] @ gen[i], 1j * gen[l]))
            err = max(err, _mdiff(gen[i], cl.PAULI[i + 1] / 2.0))
        out.add("spin.su2_commutators", err, 1e-12)

        a = random_direction(rng)
        eigs = np.sort(np.linalg.eigvals(sp.spin_projection_2x2(k, a, m)).real)
        out.add("spin.projection_eigenvalues",
                max(abs(eigs[0] + 0.5), abs(eigs[1] - 0.5)), 1e-10)

    rest = np.array([m, 0.0, 0.0, 0.0])
    pl = sp.pauli_lubanski(rest, m)
    sm = sp.spin_matrices(rest, m)
    err = _mdiff(pl.w0, np.zeros((4, 4)))
    for i in range(3):
        block = np.zeros((4, 4), dtype=complex)
        block[:2, :2] = cl.PAULI[i + 1]
        block[2:, 2:] = cl.PAULI[i + 1]
        err = max(err, _mdiff(pl.w[i], -(m / 2.0) * block))
        err = max(err, _mdiff(sm.s[i], -0.5 * block))
    out.add("spin.rest_frame_forms", err, 1e-12)


# ------------------------------------------------------------------ states


def _suite_states(samples: int, seed: int, out: _Collector) -> None:
    rng = rng_for(seed)
    m = 1.0
    for _ in range(max(1, samples)):
        k = random_onshell_momentum(rng, m)
        p = random_onshell_momentum(rng, m)
        vk = amp.amplitude_v(k, m).matrix
        vp = amp.amplitude_v(p, m).matrix
        out.add("states.longitudinal_annihilation",
                float(np.max(np.abs(vk.T @ cl.CHARGE_CONJUGATION @ cl.feynman_slash(k + p) @ vp))),
                1e-10)

        kern = st.pseudoscalar_kernel(k, p, m)
        a1 = random_sl2(rng)
        lam = lo.sl2_to_lorentz(a1)
        kern_out = st.pseudoscalar_kernel(lam @ k, lam @ p, m)
        rot_k = lo.wigner_rotation(a1, k, m)
        rot_p = lo.wigner_rotation(a1, p, m)
        out.add("states.pseudoscalar_covariance",
                _mdiff(kern_out.matrix, rot_k @ kern.matrix @ rot_p.T), 1e-10)
        out.add("states.trace_invariance",
                abs(st.kernel_norm_trace(kern_out.matrix) - st.kernel_norm_trace(kern.matrix)),
                1e-9)

    # scale invariance and ensemble/mask consistency at a handful of configurations
    for _ in range(max(1, samples // 50)):
        beta = rng.uniform(0.1, 0.99)
        e0 = m / np.sqrt(1.0 - beta * beta)
        kmag = beta * e0
        moms = [np.concatenate(([e0], kmag * random_direction(rng))) for _ in range(3)]
        kernels = [st.pseudoscalar_kernel(kk, lo.parity_flip(kk), m) for kk in moms]
        a = random_direction(rng)
        b = random_direction(rng)
        sharp_val = corr.correlate_oracle(st.sharp_ensemble(kernels[0]), a, b).value

        scaled = st.StateKernel(matrix=(0.3 + 1.7j) * kernels[0].matrix,
                                k=kernels[0].k, p=kernels[0].p, label=kernels[0].label)
        out.add("states.kernel_scale_invariance",
                abs(corr.correlate_oracle(st.sharp_ensemble(scaled), a, b).value - sharp_val),
                1e-12)

        ens = st.ensemble([(0.5, kernels[0]), (0.5, kernels[0])])
        out.add("states.ensemble_sharp_consistency",
                abs(corr.correlate_oracle(ens, a, b).value - sharp_val), 1e-12)
        mixed = st.ensemble([(1.0, kernels[0]), (2.0, kernels[1]), (0.5, kernels[2])])
        masked = corr.correlate_oracle(mixed, a, b,
                                       mask_a=[True, False, False],
                                       mask_b=[True, True, False]).value
        out.add("states.masked_ensemble_sharp", abs(masked - sharp_val), 1e-12)


# ------------------------------------------------------------ correlations


def _pseudoscalar_trace_expressions(k, p, m, a, b):
    """Independent closed expressions for the oracle's numerator and denominator traces."""
    kv, pv = k[1:], p[1:]
    kp = lo.minkowski_dot(k, p)
    big_k = np.cross(kv, pv)
    den = (m * m + kp) / (m * m)
    num = (
        -(a @ b) * (m * m + kp)
        - big_k @ np.cross(a, b)
        + (
            (b @ pv) * (big_k @ np.cross(a, kv))
            - (a @ kv) * (big_k @ np.cross(b, pv))
            + 2.0 * (np.cross(big_k, a) @ np.cross(big_k, b))
        )
        / ((m + k[0]) * (m + p[0]))
    ) / (m * m)
    return num, den


def _suite_correlations(samples: int, seed: int, out: _Collector) -> None:
    rng = rng_for(seed)
    m = 1.0

    for _ in range(max(1, samples)):
        k = random_onshell_momentum(rng, m)
        p = random_onshell_momentum(rng, m)
        a = random_direction(rng)
        b = random_direction(rng)
        res = corr.correlate_oracle(st.sharp_ensemble(st.pseudoscalar_kernel(k, p, m)), a, b)
        closed = corr.correlation_pseudoscalar_sharp(k, p, m, a, b)
        out.add("correlations.oracle_vs_pseudoscalar_closed", abs(res.value - closed), 1e-9)
        num, den = _pseudoscalar_trace_expressions(k, p, m, a, b)
        out.add("correlations.pseudoscalar_trace_identities",
                max(abs(res.numerator - num), abs(res.denominator - den)), 1e-10)
        out.add("correlations.boundedness", max(0.0, abs(res.value) - 1.0), 1e-9)

    half = max(1, samples // 2)
    betas = [0.0, 0.5, 0.9, 0.98, 0.999]
    for i in range(half):
        n = random_direction(rng)
        a = random_direction(rng)
        b = random_direction(rng)
        beta = betas[i % len(betas)]
        k = lo.cmf_momentum(beta, n, m)
        p = lo.parity_flip(k)

        res = corr.correlate_oracle(st.sharp_ensemble(st.pseudoscalar_kernel(k, p, m)), a, b)
        out.add("correlations.cmf_singlet", abs(res.value + a @ b), 1e-12)
        res_swap = corr.correlate_oracle(st.sharp_ensemble(st.pseudoscalar_kernel(k, p, m)), b, a)
        out.add("correlations.cmf_exchange_symmetry", abs(res.value - res_swap.value), 1e-12)

        phi4 = np.concatenate(([0.0], random_complex3(rng)))
        resv = corr.correlate_oracle(st.sharp_ensemble(st.vector_kernel(k, p, phi4, m)), a, b)
        closed_v = corr.correlation_vector_cmf(k, m, phi4[1:], a, b)
        out.add("correlations.oracle_vs_vector_closed_cmf", abs(resv.value - closed_v), 1e-9)
        out.add("correlations.boundedness", max(0.0, abs(resv.value) - 1.0), 1e-9)

        cz = corr.correlation_czachor_cmf(n, beta, a, b)
        out.add("correlations.boundedness", max(0.0, abs(cz) - 1.0), 1e-9)
        tr = corr.correlation_triplet_nonrel(phi4[1:], a, b)
        out.add("correlations.boundedness", max(0.0, abs(tr) - 1.0), 1e-9)

    for _ in range(half):
        n = random_direction(rng)
        # Czachor ultrarelativistic limit away from transverse directions
        while True:
            a = random_direction(rng)
            b = random_direction(rng)
            if abs(n @ a) > 0.1 and abs(n @ b) > 0.1:
                break
        out.add("correlations.czachor_ultra_limit",
                abs(corr.correlation_czachor_cmf(n, 1.0 - 1e-8, a, b)
                    - corr.correlation_czachor_ultra(n, a, b)), 1e-3)

        # vector ultrarelativistic limit with transverse measurement directions,
        # where the finite-speed terms carrying (a.n)(b.n) weights vanish
        u = random_direction(rng)
        u = u - (u @ n) * n
        u /= np.linalg.norm(u)
        w = np.cross(n, u)
        ta, tb = rng.uniform(0.0, 2.0 * np.pi, 2)
        a_t = np.cos(ta) * u + np.sin(ta) * w
        b_t = np.cos(tb) * u + np.sin(tb) * w
        while True:
            phi = random_complex3(rng)
            phi2 = float(np.sum(np.abs(phi) ** 2))
            if phi2 - abs(n @ phi) ** 2 > 0.1 * phi2:
                break
        k_u = lo.cmf_momentum(1.0 - 1e-6, n, m)
        out.add("correlations.vector_ultra_limit",
                abs(corr.correlation_vector_cmf(k_u, m, phi, a_t, b_t)
                    - corr.correlation_vector_ultra(n, phi, a_t, b_t)), 1e-4)

        # nonrelativistic limit
        a = random_direction(rng)
        b = random_direction(rng)
        phi = random_complex3(rng)
        k_s = lo.cmf_momentum(1e-3, n, m)
        out.add("correlations.vector_nonrel_limit",
                abs(corr.correlation_vector_cmf(k_s, m, phi, a, b)
                    - corr.correlation_triplet_nonrel(phi, a, b)), 1e-5)

        # triplet reduction for flight direction perpendicular to a real polarization
        phi_r = random_direction(rng)
        n_perp = random_direction(rng)
        n_perp = n_perp - (n_perp @ phi_r) * phi_r
        norm = np.linalg.norm(n_perp)
        if norm < 1e-6:
            continue
        n_perp /= norm
        k_t = lo.cmf_momentum(rng.uniform(0.0, 0.99), n_perp, m)
        out.add("correlations.vector_triplet_reduction",
                abs(corr.correlation_vector_cmf(k_t, m, phi_r, a, b)
                    - corr.correlation_triplet_nonrel(phi_r, a, b)), 1e-10)


SUITES = (
    ("clifford", _suite_clifford),
    ("lorentz", _suite_lorentz),
    ("amplitudes", _suite_amplitudes),
    ("spin", _suite_spin),
    ("states", _suite_states),
    ("correlations", _suite_correlations),
)


def run_all(
    samples: int = 1000, seed: int = 7, tol_override: float | None = None
) -> list[RunReport]:
    """Run every suite; per-suite sample counts follow the module contracts.

    ``tol_override`` replaces every check tolerance (useful to force the
    failure path); ``seed`` pins all sampling.
    """
    reports = []
    for idx, (name, fn) in enumerate(SUITES):
        n = samples if name in ("clifford", "lorentz", "amplitudes", "correlations") else max(1, samples // 2)
        collector = _Collector(tol_override)
        start = time.perf_counter()
        fn(n, seed + 1000 * idx, collector)
        reports.append(RunReport(suite=name, checks=collector.results(),
                                 wall_time=time.perf_counter() - start))
    return reports
