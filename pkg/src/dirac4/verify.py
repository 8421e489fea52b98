"""Seeded invariant suite behind ``dirac4 verify-all``.

Every check compares a closed-form law against a dense 4x4 oracle built
here from the Pauli matrices, independently of the compiled kernels. Each
check draws from its own generator seeded by ``(seed, check index)``, so
running the checks in any order or in parallel gives the same numbers.
"""

from dataclasses import dataclass, field

import numpy as np

from . import basis, factor, kernels, matgen, params, pseudo, reference_forms as ref, unitary
from .errors import Dirac4Error

I4 = np.eye(4)
_SIGMA = np.stack([np.eye(2), *matgen.PAULI]).astype(complex)


def dense(P):
    """Oracle matrices of a ``(..., 4, 4)`` parameter stack."""
    P = np.asarray(P, dtype=complex)
    s = lambda v, sg: np.einsum("...i,ijk->...jk", v * sg, _SIGMA)
    plus, minus = np.array([1, 1, 1, 1]), np.array([1, -1, -1, -1])
    tl = s(P[..., 0, :], plus)
    br = s(P[..., 1, :], minus)
    tr = s(P[..., 2, :], minus)
    bl = -s(P[..., 3, :], plus)
    top = np.concatenate([tl, tr], axis=-1)
    bottom = np.concatenate([bl, br], axis=-1)
    return np.concatenate([top, bottom], axis=-2)


def _inf(A):
    """Largest entry magnitude, reduced over everything."""
    return float(np.max(np.abs(A))) if np.size(A) else 0.0


@dataclass
class CheckResult:
    """Outcome of one batch. ``worst`` is the largest measured error."""

    index: int
    name: str
    count: int = 0
    failures: int = 0
    worst: float = 0.0
    tol: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.failures == 0

    def record(self, err, tol=None):
        """Account for one sample with error ``err``."""
        tol = self.tol if tol is None else tol
        self.count += 1
        self.worst = max(self.worst, float(err))
        if not float(err) <= tol:
            self.failures += 1

    def record_array(self, errs, tol=None):
        errs = np.asarray(errs, dtype=float).ravel()
        tol = self.tol if tol is None else tol
        self.count += errs.size
        if errs.size:
            self.worst = max(self.worst, float(np.max(errs)))
        self.failures += int(np.sum(~(errs <= tol)))

    def fail(self, n=1):
        self.count += n
        self.failures += n

    def to_json(self):
        return {"index": self.index, "name": self.name, "passed": self.passed,
                "count": self.count, "failures": self.failures,
                "worst": self.worst, "tol": self.tol, "details": self.details}


def rng_for(seed, index):
    """Generator of check ``index`` under master ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


# --------------------------------------------------------------- fixtures

def check_fixtures(rng, res):
    """Identity, the curvilinear ``G_3`` layout and the elementary catalogue."""
    res.tol = 1e-14
    one = params.ParamsKMNL.identity()
    res.record(abs(params.determinant(one) - 1))
    res.record(_inf(params.to_matrix(one) - I4))
    for rho, alpha in rng.uniform(-np.pi, np.pi, (16, 2)):
        D = np.diag([np.exp(1j * rho), np.exp(-1j * rho)])
        c, s = np.cos(alpha), np.sin(alpha)
        layout = np.block([[c * D, s * D], [-s * D, c * D]])
        res.record(_inf(dense(unitary.build_two_param(3, rho, alpha).as_array()) - layout))
    agree, differ = [], []
    for name in matgen.GENERATOR_NAMES:
        for t in rng.uniform(-np.pi, np.pi, 4):
            E = factor.elementary_exp(name, t)
            u, d = unitary.unitarity_defect(E)
            res.record(max(u, d), tol=1e-15)
        t = 0.7
        dev = _inf(factor.elementary_exp(name, t) - ref.layout_matrix(ref.UNITARY_EXPONENTIALS[name], t))
        (agree if dev <= 1e-15 else differ).append(name)
    res.details = {"catalogue_matches_layout": len(agree), "catalogue_differs": differ}


# ----------------------------------------------------------- algebraic laws

def check_homomorphism(rng, res, n=1000):
    res.tol = 1e-12
    P1, P2 = params.random_params(rng, n), params.random_params(rng, n)
    errs = np.abs(dense(kernels.compose(P1, P2)) - dense(P1) @ dense(P2)).max(axis=(1, 2))
    res.record_array(errs)


def check_inverse(rng, res, n=1000):
    res.tol = 1e-10
    P = params.random_params(rng, n)
    D = kernels.det_expanded(P)
    inv = kernels.adjugate(P) / D[:, None, None]
    res.record_array(np.abs(dense(inv) @ dense(P) - I4).max(axis=(1, 2)))
    res.details = {"min_abs_det": float(np.min(np.abs(D)))}


def check_determinant(rng, res, n=1000):
    res.tol = 1e-10
    P = params.random_params(rng, n)
    e, c = kernels.det_expanded(P), kernels.det_compact(P)
    lu = np.linalg.det(dense(P))
    res.record_array(np.abs(e - lu) / np.abs(lu))
    forms = np.abs(e - c) / np.maximum(np.abs(e), 1.0)
    res.record_array(forms, tol=1e-12)
    res.details = {"worst_expanded_vs_compact": float(np.max(forms))}


def check_unitarity(rng, res, n=1000):
    res.tol = 1e-10
    for U in unitary.haar_su4(rng, n):
        res.record(unitary.unitarity_residual(params.from_matrix(U)).max_abs())
    smallest = np.inf
    for G in unitary.random_det1(rng, n):
        r = unitary.unitarity_residual(params.from_matrix(G)).max_abs()
        smallest = min(smallest, r)
        if not r > 1e-3:
            res.fail()
        else:
            res.count += 1
    res.details = {"smallest_control_residual": float(smallest)}


def _special_unitary_error(G):
    u, d = unitary.unitarity_defect(G)
    return max(u, d)


def check_subgroups(rng, res, n_four=500):
    res.tol = 1e-12
    grid = np.linspace(-np.pi, np.pi, 32)
    for axis in (1, 2, 3):
        for rho in grid:
            for alpha in grid:
                res.record(_special_unitary_error(dense(unitary.build_two_param(axis, rho, alpha).as_array())))
    for alpha in np.linspace(-np.pi, np.pi, 64):
        res.record(_special_unitary_error(dense(unitary.g0(alpha).as_array())))
    fours = [unitary.random_four_param(rng) for _ in range(n_four)]
    mats = [dense(unitary.build_four_param(f).as_array()) for f in fours]
    for G in mats:
        res.record(_special_unitary_error(G))
    gibbs = 0.0
    for i in range(n_four):
        j = (i + 1) % n_four
        try:
            f = unitary.gibbs_compose(fours[i], fours[j])
        except Dirac4Error:
            continue
        err = _inf(dense(unitary.build_four_param(f, atol=1e-10).as_array()) - mats[i] @ mats[j])
        gibbs = max(gibbs, err)
        res.record(err)
    res.details = {"worst_gibbs": gibbs}


def check_tables(rng, res):
    res.tol = 0.0
    gb = matgen.build_dirac_generators()
    table = matgen.derive_mult_table(gb)
    units = {1, -1, 1j, -1j}
    for (m, n), (c, r) in table.product.items():
        exact = np.array_equal(gb.generator(m) @ gb.generator(n), c * gb.generator(r))
        res.record(0.0 if exact and c in units else 1.0)
    bad = matgen.table_associativity_failures(table, gb)
    res.count += 15 ** 3 - len(bad)
    res.fail(len(bad))
    combos = basis.lambda_from_dirac_combos()   # raises on any inexact identity
    res.count += len(combos)
    printed = matgen.reconcile_mult_table(table, ref.PRODUCT_TABLE)
    res.details = {"combination_identities": len(combos), "associativity_triples": 15 ** 3,
                   "tabulated_cells_differing": [f"{r['row']}*{r['col']}" for r in printed]}


def check_sl3(rng, res, n=500):
    res.tol = 1e-12
    shape = 0
    for _ in range(n):
        s1, s2 = basis.random_sl3(rng), basis.random_sl3(rng)
        s = basis.compose_sl3(s1, s2)
        res.record(_inf(s.matrix() - s1.matrix() @ s2.matrix()))
        full = dense(params.compose(basis.embed(s1), basis.embed(s2)).as_array())
        res.record(_inf(full - s.matrix()))
        M = s.matrix()
        if not (np.all(M[3, :3] == 0) and np.all(M[:3, 3] == 0)):
            shape += 1
    res.failures += shape
    res.details = {"shape_violations": shape}


def _random_coords(rng, dyadic=False):
    if dyadic:
        z = (rng.integers(-8, 9, 16) + 1j * rng.integers(-8, 9, 16)) / 4
    else:
        z = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    return factor.DiracCoords.from_vector(z)


def check_dirac_law(rng, res, n=1000):
    res.tol = 1e-12
    between = 0.0
    for _ in range(n):
        d1, d2 = _random_coords(rng), _random_coords(rng)
        oracle = factor.dirac_coords(factor.coords_matrix(d1) @ factor.coords_matrix(d2)).as_vector()
        cyc = factor.compose_dirac_coords(d1, d2).as_vector()
        lng = factor.compose_dirac_coords_long(d1, d2).as_vector()
        res.record(max(_inf(cyc - oracle), _inf(lng - oracle)))
        between = max(between, _inf(cyc - lng))
    inexact = 0
    for _ in range(n):
        d1, d2 = _random_coords(rng, True), _random_coords(rng, True)
        if not np.array_equal(factor.compose_dirac_coords(d1, d2).as_vector(),
                              factor.compose_dirac_coords_long(d1, d2).as_vector()):
            inexact += 1
    res.count += n
    res.failures += inexact
    res.details = {"random_forms_difference": between, "dyadic_inexact": inexact}


def _sphere_point(rng):
    x = rng.standard_normal(4)
    return x / np.linalg.norm(x)


def check_su2_triples(rng, res, pairs=200):
    res.tol = 1e-13
    gb = matgen.build_dirac_generators()
    triples = factor.su2_triples()
    for t in triples:
        G = [gb.generator(g) for g in t.generators]
        for g in G:
            res.record(0.0 if np.array_equal(g @ g, I4) else 1.0, tol=0.0)
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            res.record(0.0 if np.array_equal(G[i] @ G[j], t.sign * 1j * G[k]) else 1.0, tol=0.0)
        for _ in range(pairs):
            x, y = _sphere_point(rng), _sphere_point(rng)
            z = factor.su2_compose(t, x, y)
            res.record(_inf(factor.su2_matrix(t, z) - factor.su2_matrix(t, y) @ factor.su2_matrix(t, x)))
    res.details = {"triples": len(triples), "signs": sorted({t.sign for t in triples})}


def check_factorization(rng, res, n=200):
    res.tol = 1e-8
    failures, restarts, iters = [], [], 0
    inputs = unitary.haar_su4(rng, n)
    for i, U in enumerate(inputs):
        try:
            fit = factor.fit_factorization(U, seed=i, max_restarts=8, tol=1e-8)
        except Dirac4Error as exc:
            failures.append({"input": i, "best_residual": exc.context.get("best_residual")})
            res.fail()
            continue
        recon = _inf(factor.factor_product(fit.angles) - U)
        res.record(recon)
        if recon > res.tol or fit.restarts > 8:
            failures.append({"input": i, "residual": recon, "restarts": fit.restarts})
        restarts.append(fit.restarts)
        iters += fit.iterations
    res.details = {"success_rate": (n - len(failures)) / n, "failed_inputs": failures,
                   "max_restarts_used": max(restarts, default=0), "total_iterations": iters}


def check_pseudo(rng, res, pairs=500):
    res.tol = 1e-14
    su22 = pseudo.build_pseudo_generators("su22")
    su31 = pseudo.build_pseudo_generators("su31")
    bad22 = pseudo.eta_compatibility_failures(su22)
    bad31 = pseudo.eta_compatibility_failures(su31)
    eta31_exact = np.array_equal(pseudo.su31_eta_from_dirac(), pseudo.Signature.SU31.eta)
    res.count += 30
    res.failures += len(bad22) + len(bad31) + (0 if eta31_exact else 1)
    # absolute roundoff in G^+ eta G grows like exp(2|chi|) eps; the
    # absolute bound applies on |chi| <= 2 and a scaled bound beyond
    for sig in ("su22", "su31"):
        for g in range(1, 16):
            for chi in np.linspace(-2, 2, 21):
                G = pseudo.pseudo_elementary_exp(sig, g, chi)
                res.record(max(pseudo.pseudo_unitarity_defect(G, sig)))
            for chi in (-8.0, 5.0, 12.0):
                G = pseudo.pseudo_elementary_exp(sig, g, chi)
                res.record(pseudo.pseudo_unitarity_defect(G, sig)[0] / _inf(G) ** 2)
    layouts_ok = []
    for name, layout in ref.PSEUDO_EXPONENTIALS.items():
        G = pseudo.pseudo_elementary_exp("su22", name, 0.7)
        if _inf(G - ref.layout_matrix(layout, 0.7)) <= 1e-15:
            layouts_ok.append(name)
    eta = pseudo.Signature.SU22.eta
    norm = comp = 0.0
    for _ in range(pairs):
        x, y = pseudo.random_su11(rng), pseudo.random_su11(rng)
        z = pseudo.su11_compose(x, y)
        Mx, My, Mz = pseudo.su11_matrix(x), pseudo.su11_matrix(y), pseudo.su11_matrix(z)
        scale = max(1.0, _inf(My @ Mx))
        c = _inf(Mz - My @ Mx) / scale
        q = abs(pseudo.su11_norm(z) - 1)
        e = _inf(Mz.conj().T @ eta @ Mz - eta) / scale ** 2
        comp, norm = max(comp, c), max(norm, q)
        res.record(max(c, q, e), tol=1e-12)
    res.details = {"su22_not_eta_compatible": bad22, "su31_not_eta_compatible": bad31,
                   "su31_eta_from_dirac_exact": bool(eta31_exact),
                   "tabulated_layouts_matching": len(layouts_ok),
                   "su11_worst_composition": comp, "su11_worst_norm": norm}


CHECKS = (
    ("fixtures", check_fixtures),
    ("homomorphism", check_homomorphism),
    ("inverse", check_inverse),
    ("determinant", check_determinant),
    ("unitarity", check_unitarity),
    ("subgroups", check_subgroups),
    ("generator_tables", check_tables),
    ("sl3", check_sl3),
    ("dirac_coordinate_law", check_dirac_law),
    ("su2_triples", check_su2_triples),
    ("factorization", check_factorization),
    ("pseudo_unitary", check_pseudo),
)


def run_check(index, seed):
    """Run the check ``CHECKS[index]`` with its own generator."""
    name, fn = CHECKS[index]
    res = CheckResult(index, name)
    try:
        fn(rng_for(seed, index), res)
    except Dirac4Error as exc:
        res.failures += 1
        res.details = dict(res.details, error=exc.to_dict())
    return res


def run_all(seed):
    """All checks in index order."""
    return [run_check(i, seed) for i in range(len(CHECKS))]
