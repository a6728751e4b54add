"""Command-line surface: every pipeline behind one executable with
machine-readable output.

Exit codes: 0 success, 1 verification/integrity failure, 2 usage error.
All numbers in JSON output are exact decimal strings (floats appear only in
``verify`` output for numeric-modularity residuals, labeled as such).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

FORMATS = ("plain", "json", "csv")


def canonical_json(obj) -> str:
    """The one JSON encoding used everywhere, so output round-trips byte-for-byte."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _record(command: str, parameters: dict, result, provenance: list[str]) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "result": result,
        "provenance": provenance,
    }


def _series_terms(series) -> list[dict]:
    return [
        {"e": e, "num": str(c.numerator), "den": str(c.denominator)}
        for e, c in sorted(series.coeffs.items())
    ]


def _emit(record: dict, fmt: str, csv_rows, out) -> None:
    if fmt == "json":
        out.write(canonical_json(record))
    elif fmt == "csv":
        header, rows = csv_rows
        out.write(header + "\n")
        for row in rows:
            out.write(",".join(str(x) for x in row) + "\n")
    else:
        _emit_plain(record, out)


def _emit_plain(record: dict, out) -> None:
    out.write(f"# {record['command']}")
    if record["parameters"]:
        params = " ".join(f"{k}={v}" for k, v in sorted(record["parameters"].items()))
        out.write(f" ({params})")
    out.write("\n")
    _plain_value(record["result"], out, indent="")
    out.write(f"# via: {', '.join(record['provenance'])}\n")


def _plain_value(value, out, indent: str) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                out.write(f"{indent}{k}:\n")
                _plain_value(v, out, indent + "  ")
            else:
                out.write(f"{indent}{k}: {v}\n")
    elif isinstance(value, list):
        for v in value:
            _plain_value(v, out, indent)
    else:
        out.write(f"{indent}{value}\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_theta(args, out) -> int:
    from .vvmf import assemble_theta, solve_psi

    prec = max(2, args.terms)
    heegner = assemble_theta(solve_psi(prec))
    rows = []
    for d, deg in sorted(heegner.degrees.items()):
        exp = Fraction(d, 6)
        if exp < args.terms:
            rows.append((d, exp.numerator, exp.denominator, deg))
    result = {
        "constant": str(heegner.theta.coefficient(0)),
        "degrees": [
            {"d": d, "exp_num": en, "exp_den": ed, "deg": str(deg)}
            for d, en, ed, deg in rows
        ],
    }
    record = _record(
        "theta",
        {"terms": args.terms, "format": args.format},
        result,
        [
            "vector-eisenstein-euler-products",
            "rankin-cohen-weight11-basis",
            "two-constraint-solve",
            "coset-contraction",
        ],
    )
    csv_rows = ("d,exp_num,exp_den,deg", [(d, en, ed, deg) for d, en, ed, deg in rows])
    if args.format == "plain":
        out.write(f"Theta(q) constant term: {result['constant']}\n")
        for d, en, ed, deg in rows:
            out.write(f"deg(C_{d}) = {deg}   (q^{en}/{ed})\n")
        out.write("# via: " + ", ".join(record["provenance"]) + "\n")
    else:
        _emit(record, args.format, csv_rows, out)
    return 0


def cmd_eisenstein(args, out) -> int:
    from .eisenstein import eisenstein_chi, eisenstein_level1, vv_eisenstein
    from .fqm import w_prime_form

    k, terms = args.k, args.terms
    if k % 2 == 0:
        series = {"scalar": eisenstein_level1(k, terms)}
        provenance = ["bernoulli-divisor-sums"]
    elif k == 1:
        series = {"scalar": eisenstein_chi(1, terms)}
        provenance = ["character-divisor-sums"]
    else:
        form = vv_eisenstein(w_prime_form(), k, terms)
        series = {f"v{i}": form.component(i) for i in range(3)}
        provenance = ["local-euler-products", "bernoulli-l-value"]
    result = {name: _series_terms(s) for name, s in series.items()}
    record = _record(
        "eisenstein", {"k": k, "terms": terms, "format": args.format}, result, provenance
    )
    rows = [
        (name, t["e"], s.den, t["num"], t["den"])
        for name, s in series.items()
        for t in _series_terms(s)
    ]
    if args.format == "plain":
        for name, s in series.items():
            out.write(f"{name}: {s}\n")
        out.write("# via: " + ", ".join(provenance) + "\n")
    else:
        _emit(record, args.format, ("component,e,exp_den,num,den", rows), out)
    return 0


def cmd_dim(args, out) -> int:
    from .vvmf import dim_formula

    value = dim_formula(args.k)
    record = _record(
        "dim", {"k": args.k}, {"dimension": value}, ["cyclotomic-gauss-sum-formula"]
    )
    if args.format == "plain":
        out.write(f"dim at weight {args.k}: {value}\n")
    else:
        _emit(record, args.format, ("k,dim", [(args.k, value)]), out)
    return 0


def cmd_degree(args, out) -> int:
    from . import schubert
    from .vvmf import assemble_theta, solve_psi

    d = args.d
    values: dict[str, int] = {}
    if args.method in ("modular", "all"):
        prec = max(2, int(Fraction(d, 6)) + 1)
        values["modular"] = assemble_theta(solve_psi(prec)).degree(d)
    if args.method in ("schubert", "all"):
        values["schubert"] = (
            schubert.degree_c6_recurrence() if d == 6 else schubert.degree_c8_recurrence()
        )
    if args.method in ("segre", "all"):
        values["segre"] = (
            schubert.degree_c6_segre() if d == 6 else schubert.degree_c8_segre()
        )
    agree = len(set(values.values())) == 1
    record = _record(
        "degree",
        {"d": d, "method": args.method},
        {"values": {k: str(v) for k, v in values.items()}, "agree": agree},
        [f"path-{name}" for name in values],
    )
    if args.format == "plain":
        for name, v in values.items():
            out.write(f"deg(C_{d}) via {name}: {v}\n")
        if not agree:
            out.write("DISAGREEMENT between paths\n")
    else:
        _emit(
            record,
            args.format,
            ("method,value", [(k, v) for k, v in values.items()]),
            out,
        )
    return 0 if agree else 1


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _suite_milgram(gram=None):
    from .fqm import (
        E8_GRAM,
        U_GRAM,
        W_GRAM,
        W_PRIME_GRAM,
        discriminant_form,
        gauss_milgram_check,
    )

    grams = {
        "W": W_GRAM,
        "U": U_GRAM,
        "E8": E8_GRAM,
        "W-negative": W_PRIME_GRAM,
    }
    if gram is not None:
        grams["user-lattice"] = tuple(tuple(row) for row in gram)
    return [
        (f"gauss-milgram-{name}", lambda g=g: gauss_milgram_check(discriminant_form(g)))
        for name, g in grams.items()
    ]


def _suite_weil(gram=None):
    import random

    from .fqm import Mp2Element, WeilRep, w_prime_form, _mat_mul_cyc

    form = w_prime_form()
    rep = WeilRep(form, dual=True)
    rng = random.Random(20240817)

    def random_element(max_len=10):
        g = Mp2Element.identity()
        for _ in range(rng.randint(1, max_len)):
            tok = rng.choice(["S", "T", "T-"])
            g = g * (
                Mp2Element.S() if tok == "S" else Mp2Element.T(1 if tok == "T" else -1)
            )
        return g

    def unitary_and_homomorphic():
        for _ in range(50):
            g1, g2 = random_element(6), random_element(6)
            if not rep.is_unitary(rep.rho(g1)):
                return False
            if rep.rho(g1 * g2) != _mat_mul_cyc(rep.rho(g1), rep.rho(g2)):
                return False
        return True

    def closed_form_matches():
        found = 0
        while found < 20:
            g = random_element()
            if g.c % 3 == 0:
                found += 1
                if rep.rho(g) != rep.rho_gamma0_formula(g):
                    return False
        return True

    return [
        ("weil-unitary-homomorphic-50-words", unitary_and_homomorphic),
        ("gamma0-closed-form-20-elements", closed_form_matches),
    ]


def _suite_eisenstein(gram=None):
    from .eisenstein import theta_series_rank10, vv_eisenstein
    from .fqm import w_prime_form

    def oracle_equivalence():
        e5 = vv_eisenstein(w_prime_form(), 5, 4)
        twice = theta_series_rank10(4).scale(2)
        return all(e5.component(i) == twice.component(i) for i in range(3))

    def alpha_conventions_agree():
        from .eisenstein import eisenstein_chi

        return eisenstein_chi(1, 30, "character") == eisenstein_chi(
            1, 30, "legendre"
        ) and eisenstein_chi(3, 30, "character") == eisenstein_chi(3, 30, "legendre")

    return [
        ("eisenstein-equals-twice-theta", oracle_equivalence),
        ("character-sum-conventions-agree", alpha_conventions_agree),
    ]


def _suite_modularity(gram=None):
    from .fqm import Mp2Element
    from .vvmf import basis_weight11, numeric_modularity_check, solve_psi

    def residual_f0():
        f0, _ = basis_weight11(30)
        return numeric_modularity_check(f0, Mp2Element.S(), 1j, 1e-6) < 1e-6

    def residual_psi():
        psi = solve_psi(30)
        return numeric_modularity_check(psi, Mp2Element.S(), 1j, 1e-6) < 1e-6

    return [
        ("s-transform-residual-bracket-basis", residual_f0),
        ("s-transform-residual-degree-series", residual_psi),
    ]


def _suite_qseries(gram=None):
    import random

    from .qseries import QSeries

    rng = random.Random(99)

    def random_series(den, prec):
        terms = {
            e: Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            for e in range(rng.randint(0, 3) or 0, prec * den)
        }
        return QSeries(terms, den, prec)

    def ring_axioms():
        for _ in range(200):
            den = rng.choice((1, 3))
            f, g, h = (random_series(den, 10) for _ in range(3))
            if (f * g) * h != f * (g * h):
                return False
            if f * (g + h) != f * g + f * h:
                return False
        return True

    def leibniz():
        for _ in range(50):
            den = rng.choice((1, 3))
            f, g = (random_series(den, 10) for _ in range(2))
            if (f * g).derivative() != f.derivative() * g + f * g.derivative():
                return False
        return True

    def truncation_soundness():
        for _ in range(50):
            f, g = (random_series(1, 20) for _ in range(2))
            full = (f * g).truncate(10)
            short = f.truncate(10) * g.truncate(10)
            if full != short.truncate(10):
                return False
        return True

    return [
        ("qseries-ring-axioms-200", ring_axioms),
        ("qseries-leibniz-50", leibniz),
        ("qseries-truncation-soundness-50", truncation_soundness),
    ]


def _suite_schubert(gram=None):
    from .schubert import RingClassGr36, box_partitions

    s = RingClassGr36.sigma

    def top_power():
        return (s(1) ** 9).as_dict() == {(3, 3, 3): 42}

    def poincare():
        for lam in box_partitions():
            comp = tuple(3 - x for x in reversed(lam))
            for mu in box_partitions():
                if sum(mu) == 9 - sum(lam):
                    got = (RingClassGr36(((lam, 1),)) * RingClassGr36(((mu, 1),))).degree()
                    if got != (1 if mu == comp else 0):
                        return False
        return True

    def associativity():
        gens = [s(1), s(2), s(3)]
        for a in gens:
            for b in gens:
                for c in gens:
                    if (a * b) * c != a * (b * c):
                        return False
        return True

    return [
        ("schubert-top-power-42", top_power),
        ("schubert-poincare-pairing", poincare),
        ("schubert-lr-associativity", associativity),
    ]


def _suite_degrees(gram=None):
    from . import schubert
    from .vvmf import assemble_theta, solve_psi

    def all_paths():
        heegner = assemble_theta(solve_psi(3))
        return (
            heegner.degree(6)
            == schubert.degree_c6_recurrence()
            == schubert.degree_c6_segre()
            == 192
            and heegner.degree(8)
            == schubert.degree_c8_recurrence()
            == schubert.degree_c8_segre()
            == 3402
        )

    return [("degrees-all-paths-agree", all_paths)]


SUITES = {
    "milgram": _suite_milgram,
    "weil": _suite_weil,
    "eisenstein": _suite_eisenstein,
    "modularity": _suite_modularity,
    "qseries": _suite_qseries,
    "schubert": _suite_schubert,
    "degrees": _suite_degrees,
}


def cmd_verify(args, out) -> int:
    gram = None
    if args.gram:
        gram = json.loads(args.gram)
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        for prop, check in SUITES[name](gram):
            try:
                ok = bool(check())
            except Exception as exc:  # a crash is a failure with a reason
                ok = False
                prop = f"{prop} [{type(exc).__name__}: {exc}]"
            results.append((name, prop, ok))
    record = _record(
        "verify",
        {"suite": args.suite},
        [{"suite": s, "property": p, "status": "pass" if ok else "FAIL"} for s, p, ok in results],
        ["named-invariant-suites"],
    )
    if args.format == "plain":
        for s, p, ok in results:
            out.write(f"{'pass' if ok else 'FAIL'}  {s}: {p}\n")
    else:
        _emit(
            record,
            args.format,
            ("suite,property,status", [(s, p, "pass" if ok else "FAIL") for s, p, ok in results]),
            out,
        )
    return 0 if all(ok for _, _, ok in results) else 1


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicforms",
        description="Exact degrees of special cubic fourfold divisors: "
        "modular forms pipeline and intersection-theory cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_theta = sub.add_parser("theta", help="degree generating series")
    p_theta.add_argument("--terms", type=int, default=4, help="integer q-steps")
    p_theta.add_argument("--format", choices=FORMATS, default="plain")
    p_theta.set_defaults(func=cmd_theta)

    p_eis = sub.add_parser("eisenstein", help="Eisenstein series expansions")
    p_eis.add_argument("--k", type=int, default=5, help="weight")
    p_eis.add_argument("--terms", type=int, default=4)
    p_eis.add_argument("--format", choices=FORMATS, default="plain")
    p_eis.set_defaults(func=cmd_eisenstein)

    p_dim = sub.add_parser("dim", help="dimension of the weight-k space")
    p_dim.add_argument("--k", type=int, required=True)
    p_dim.add_argument("--format", choices=FORMATS, default="plain")
    p_dim.set_defaults(func=cmd_dim)

    p_deg = sub.add_parser("degree", help="one divisor degree, by chosen method(s)")
    p_deg.add_argument("--d", type=int, required=True, choices=(6, 8))
    p_deg.add_argument(
        "--method", choices=("modular", "schubert", "segre", "all"), default="all"
    )
    p_deg.add_argument("--format", choices=FORMATS, default="plain")
    p_deg.set_defaults(func=cmd_degree)

    p_ver = sub.add_parser("verify", help="run a named invariant suite")
    p_ver.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p_ver.add_argument(
        "--gram", help="optional JSON Gram matrix for the milgram suite"
    )
    p_ver.add_argument("--format", choices=FORMATS, default="plain")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        # integrity failures exit 1, bad parameter domains exit 2
        return 1 if isinstance(exc, ArithmeticError) else 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
