"""Verification suites behind ``bethe-cherednik verify``.

Each suite returns a report ``{suite, n, trials, passed, first_failure}``.
With ``fault=True`` one constant inside the suite is perturbed; every
suite must then fail, which is how the suites themselves are tested.
"""
from .calogero import char_poly, cm_psi, cm_psi_quotient, cm_universal_poly, conjugate, generic_cm_point
from .cherednik import HElement, _check_bound, spherical_poly, symmetrizer, universal_central_poly
from .gaudin import (
    V1Element,
    _integer_matrix,
    bethe_poly_apply,
    extract_bethe_coeffs,
    iota,
    specialized_bethe_matrices,
    matrices_commute,
    specialized_commute,
    verify_ZB,
)
from .golden import golden_checks
from .multisym import power_sum, power_sums_in_p, substitute_p
from .polyrep import dunkl_apply, intertwining_check, polyrep_check
from .poly import MultiPoly, zl_vars
from .quasiexp import qexp_psi, verify_wilson, wilson_space
from .randomgen import distinct_rationals, make_rng, random_invertible, random_v1_monomials, random_zl_poly, small_rationals
from .series import BiPoly, TruncSeries
from .symgroup import all_perms
from .upoly import UPoly

__all__ = ["SUITES", "run_suite"]


def _report(suite, n, trials, failure):
    return {
        "suite": suite,
        "n": n,
        "trials": trials,
        "passed": failure is None,
        "first_failure": failure,
    }


def suite_zb(n, seed, trials, fault):
    trials = 20 if trials is None else trials
    rng = make_rng(seed)
    samples = [V1Element.basis(n, t) for t in all_perms(n)]
    samples += random_v1_monomials(rng, n, trials)
    if fault:
        ok, info = _zb_with_fault(n, samples)
    else:
        ok, info = verify_ZB(n, samples)
    failure = None if ok else dict(info, identity="iota P^B = P^Z iota")
    return _report("zb", n, len(samples), failure)


def _zb_with_fault(n, samples):
    """Z=B with P^Z's constant coefficient shifted by 1."""
    pz = universal_central_poly(n)
    pz = pz + BiPoly({(0, 0): HElement.one(n)})
    for vec in samples:
        lhs = bethe_poly_apply(vec)
        h = iota(vec)
        for key in sorted(set(lhs.terms) | set(pz.terms)):
            left = iota(lhs.terms[key]) if key in lhs.terms else HElement.zero(n)
            right = pz.terms[key] * h if key in pz.terms else HElement.zero(n)
            if left != right:
                return False, {"sample": vec.to_json(), "uv_degree": list(key)}
    return True, None


def suite_satake(n, seed, trials, fault):
    e = symmetrizer(n)
    if fault:
        e = e + e
    pz = universal_central_poly(n)
    pu = spherical_poly(n)
    failure = None
    for key in sorted(set(pz.terms) | set(pu.terms)):
        left = pz.terms[key] * e if key in pz.terms else HElement.zero(n)
        right = pu.terms.get(key, HElement.zero(n))
        if left != right:
            failure = {"identity": "P^Z e = P^U", "uv_degree": list(key)}
            break
    if failure is None and e * pu.terms[(n, n)] != pu.terms[(n, n)]:
        failure = {"identity": "e P^U = P^U", "uv_degree": [n, n]}
    return _report("satake", n, 1, failure)


def suite_wilson(n, seed, trials, fault):
    trials = 10 if trials is None else trials
    rng = make_rng(seed)
    failure = None
    for t in range(trials):
        l0 = distinct_rationals(rng, n)
        d = small_rationals(rng, n)
        if fault:
            ok, checks = _wilson_fault(l0, d)
        else:
            ok, checks = verify_wilson(l0, d, 8)
        if not ok:
            failure = {
                "identity": "Psi^C = Psi^W",
                "trial": t,
                "l0": [str(x) for x in l0],
                "d": [str(x) for x in d],
                "checks": checks,
            }
            break
    return _report("wilson", n, trials, failure)


def _wilson_fault(l0, d):
    """Pair the point for ``d`` with the space built for d shifted by one."""
    point = generic_cm_point(l0, d)
    space = wilson_space(l0, [d[0] + 1] + d[1:])
    ok = cm_psi(point, 8) == qexp_psi(space, 8)
    return ok, {"psi": ok}


def suite_bethe_comm(n, seed, trials, fault):
    failure = None
    if n <= 3:
        table = extract_bethe_coeffs(n)
        mats = [(i, j, table[i][j]) for i in range(n + 1) for j in range(n + 1)]
        vs = zl_vars(n)
        if fault:
            k = next(k for k, (i, j, _) in enumerate(mats) if (i, j) == (n, 0))
            m = [list(row) for row in mats[k][2]]
            m[0][0] = m[0][0] + MultiPoly.var(vs, "z1")
            mats[k] = (n, 0, m)
        # b_{i0} are the coefficients of w(u) = prod (u - z_i), as scalars
        w = MultiPoly.const(vs + ("u",), 1)
        for k in range(1, n + 1):
            w = w * (MultiPoly.var(vs + ("u",), "u") - MultiPoly.var(vs + ("u",), f"z{k}"))
        wcoef = {key[0]: c for key, c in w.split(("u",)).items()}
        for i, j, m in mats:
            if j == 0:
                want = wcoef.get(n - i, MultiPoly.zero(vs))
                if any(m[r][c] != (want if r == c else 0) for r in range(len(m)) for c in range(len(m))):
                    failure = {"identity": "b_i0 = coefficient of w(u)", "i": i}
                    break
        for a in range(len(mats)):
            if failure:
                break
            for b in range(a + 1, len(mats)):
                if not matrices_commute(mats[a][2], mats[b][2]):
                    failure = {"identity": "[b_ij, b_kl] = 0", "pair": [mats[a][:2], mats[b][:2]]}
                    break
        count = 1
    else:
        count = 20 if trials is None else trials
        rng = make_rng(seed)
        for t in range(count):
            z0 = distinct_rationals(rng, n)
            l0 = small_rationals(rng, n)
            if fault:
                bad = _comm_fault(z0, l0)
            else:
                bad = specialized_commute(z0, l0)
            if bad:
                failure = {"identity": "[b_ij, b_kl] = 0", "trial": t, "pair": [list(bad[0]), list(bad[1])], "z0": [str(x) for x in z0]}
                break
    return _report("bethe-comm", n, count, failure)


def _comm_fault(z0, l0):
    mats = specialized_bethe_matrices(z0, l0)
    keys = sorted(mats)
    m = [list(row) for row in mats[keys[0]]]
    m[0][0] += 1
    mats[keys[0]] = m
    ints = {k: _integer_matrix(mats[k]) for k in keys}
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            x, y = ints[keys[a]], ints[keys[b]]
            if not (x.dot(y) == y.dot(x)).all():
                return keys[a], keys[b]
    return None


def suite_dunkl(n, seed, trials, fault):
    trials = 25 if trials is None else trials
    rng = make_rng(seed)
    samples = [random_zl_poly(rng, n) for _ in range(trials)]
    vs = zl_vars(n)
    def faulty(i, p):
        res = dunkl_apply(i, p)
        return res - MultiPoly.var(vs, "z1") * p if i == 1 else res

    op = faulty if fault else dunkl_apply
    ok, info = polyrep_check(samples, n, op)
    if ok:
        ok, info = intertwining_check(samples, n, op)
    return _report("dunkl", n, trials, None if ok else info)


def suite_n2_golden(n, seed, trials, fault):
    checks = golden_checks(fault=fault)
    failed = [k for k, v in checks.items() if not v["passed"]]
    failure = None
    if failed:
        failure = {"identity": failed[0], "failed_fixtures": failed, "detail": checks[failed[0]]}
    return _report("n2-golden", 2, len(checks), failure)


def suite_multisym(n, seed, trials, fault):
    found = power_sums_in_p(n, 3)
    failure = None
    for (k, l), expr in sorted(found.items()):
        got = substitute_p(expr, n)
        if fault and (k, l) == (1, 1):
            got = got + 1
        if got != power_sum(k, l, n):
            failure = {"identity": f"tr(L^{k} Z^{l}) from p_ij", "k": k, "l": l}
            break
    return _report("multisym", n, len(found), failure)


def suite_cm_identity(n, seed, trials, fault):
    trials = 10 if trials is None else trials
    rng = make_rng(seed)
    failure = None
    order = 8
    for t in range(trials):
        l0 = distinct_rationals(rng, n)
        d = small_rationals(rng, n)
        p = generic_cm_point(l0, d)
        g = random_invertible(rng, n)
        q = conjugate(p, g)
        psi = cm_psi(p, order)
        quotient = cm_psi_quotient(p, order)
        if fault:
            quotient = quotient + TruncSeries(order, {(1, 1): 1})
        checks = {
            "quotient": psi == quotient,
            "conjugation_psi": cm_psi(q, order) == psi,
            "conjugation_poly": cm_universal_poly(q) == cm_universal_poly(p),
            "charpoly_row": _charpoly_row(p),
        }
        if not all(checks.values()):
            failure = {"identity": "Psi^C det(u-Z) det(v-L) = P^C", "trial": t, "point": p.to_json(), "checks": checks}
            break
    return _report("cm-identity", n, trials, failure)


def _charpoly_row(p):
    """det(u - Z) = sum_i m_i0 u^(N-i) and det(v - L) = sum_j m_0j v^(N-j)."""
    pc = cm_universal_poly(p)
    n = p.n
    zrow = UPoly([pc.coeff(i, n) for i in range(n + 1)])
    lrow = UPoly([pc.coeff(n, j) for j in range(n + 1)])
    return zrow == char_poly(p.z) and lrow == char_poly(p.lam)


SUITES = {
    "zb": suite_zb,
    "satake": suite_satake,
    "wilson": suite_wilson,
    "bethe-comm": suite_bethe_comm,
    "dunkl": suite_dunkl,
    "n2-golden": suite_n2_golden,
    "multisym": suite_multisym,
    "cm-identity": suite_cm_identity,
}


def run_suite(name, n=2, seed=0, trials=None, fault=False):
    """Run one suite; raises KeyError for unknown names and NBoundError over the bound."""
    if name not in SUITES:
        raise KeyError(name)
    if name == "n2-golden":
        n = 2
    _check_bound(n)
    return SUITES[name](n, seed, trials, fault)
