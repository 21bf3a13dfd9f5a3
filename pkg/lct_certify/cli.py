"""Click CLI: lct, sigma, threshold, volume-curve and replication subcommands."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import click

from lct_certify import __version__
from lct_certify.arith import format_rational, parse_rational
from lct_certify.certificates import hypersurface_lct_bound
from lct_certify.errors import CertifyError, DegenerateNormalError, InconclusivePrecisionError, NoneFoundError
from lct_certify.kstability import (
    RestrictedVolumeProfile,
    VolumeCurve,
    beta,
    beta_sign_certificate,
    check_barycenter_bound,
    tau_of,
    vol_from_restricted,
)
from lct_certify.lattice import (
    SigmaResult,
    parse_vertices,
    pick_certificate,
    sigma_exact_2d,
    sigma_lower_bound,
    sigma_upper_search,
    witness_to_record,
)
from lct_certify.models import Cert, CertifyConfig, CheckStatus, Exactness, SigmaMethod, ThresholdKind
from lct_certify.monomial import MonomialIdeal, colength, lct_monomial, supporting_normal
from lct_certify.replication import SigmaCache, build_report, dump_report, replicate_all, write_report
from lct_certify.surface import DivisorClass, IntersectionForm, gamma_mult_bound, max_mult_from_selfint
from lct_certify.thresholds import ThresholdQuery, conditional_N, min_n, verify_sufficiency_reductions

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"

_KIND_CHOICES = [kind.value for kind in ThresholdKind]
_CERT_CHOICES = [cert.value for cert in Cert]
_METHOD_CHOICES = [method.value for method in SigmaMethod]


class PrecisionExit(click.ClickException):
    """An enclosure could not decide a comparison at the requested precision."""
    exit_code = 3


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(str(value))
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


RATIONAL = RationalType()


class CertifyGroup(click.Group):
    """Maps library errors onto exit codes for every subcommand."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except InconclusivePrecisionError as exc:
            raise PrecisionExit(str(exc)) from exc
        except CertifyError as exc:
            raise click.ClickException(str(exc)) from exc
        except ValueError as exc:
            raise click.UsageError(str(exc), ctx) from exc


@dataclass
class CliState:
    config: CertifyConfig
    as_json: bool = False

    def emit(self, payload: dict, text: str) -> None:
        if self.as_json:
            click.echo(json.dumps(payload, indent=2, sort_keys=True))
        else:
            click.echo(text)


pass_state = click.make_pass_decorator(CliState)


@click.group(cls=CertifyGroup)
@click.version_option(version=__version__)
@click.option("--json", "as_json", is_flag=True, help="Print JSON instead of text")
@click.option("--cache", "cache_path", type=click.Path(dir_okay=False, path_type=Path), help="Sigma cache file")
@click.option("--seed", default=0, show_default=True, help="Seed for randomized searches")
@click.option("--precision", type=click.IntRange(0, 50), help="Decimal digits for enclosures of e")
@click.option("--workers", default=4, show_default=True, type=click.IntRange(1), help="Thread pool size")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging")
@click.pass_context
def cli(ctx, as_json: bool, cache_path: Path | None, seed: int, precision: int | None, workers: int, verbose: bool):
    """lct-certify: exact certificates for log canonical thresholds and dimension bounds."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, format=LOG_FORMAT)
    config = CertifyConfig(cache_path=cache_path, precision=precision, seed=seed, workers=workers)
    ctx.obj = CliState(config, as_json)


def _fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else format_rational(q)


def _vec(values) -> str:
    return "(" + ", ".join(_fmt(v) for v in values) + ")"


# -- monomial ideals -------------------------------------------------------


@cli.command("lct-monomial")
@click.argument("ideal_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@pass_state
def lct_monomial_cmd(state: CliState, ideal_file: Path):
    """Log canonical threshold and colength of a monomial ideal."""
    ideal = MonomialIdeal.from_file(ideal_file)
    lct = lct_monomial(ideal)
    length = colength(ideal)
    try:
        normal = supporting_normal(ideal).supporting_normal
    except DegenerateNormalError as exc:
        normal = exc.normal
    payload = {
        "dimension": ideal.dimension,
        "generators": [list(g) for g in ideal.generators],
        "lct": format_rational(lct),
        "colength": length,
        "supporting_normal": [format_rational(x) for x in normal],
    }
    lines = [
        f"lct = {_fmt(lct)}",
        f"colength = {'infinite' if length is None else length}",
        f"supporting normal = {_vec(normal)}",
    ]
    state.emit(payload, "\n".join(lines))


# -- sigma -----------------------------------------------------------------


def _describe_witness(result: SigmaResult) -> str:
    name = "sigma" if result.strict else "sigma-bar"
    lines = [
        f"{name}_({result.n},{_fmt(result.lam)}) = {result.value} [{result.exactness.value}]",
        f"  a = {_vec(result.a)}",
    ]
    if result.included:
        lines.append("  included: " + " ".join(_vec(p) for p in result.included))
    if result.excluded:
        lines.append("  excluded: " + " ".join(_vec(p) for p in result.excluded))
    return "\n".join(lines)


@cli.command()
@click.option("--n", "n", required=True, type=click.IntRange(1), help="Dimension")
@click.option("--lambda", "lam", required=True, type=RATIONAL, help="lambda as p/q")
@click.option("--strict/--closed", default=True, help="sigma (a.x < 1 condition) or its closed variant")
@click.option("--exact2d", "mode", flag_value="exact2d", help="Exact plane value with witness")
@click.option("--bounds", "mode", flag_value="bounds", default=True, help="Certified lower bounds")
@click.option("--search", "mode", flag_value="search", help="Witnessed upper bound by search")
@click.option("--method", type=click.Choice(_METHOD_CHOICES), help="Only this lower-bound method")
@click.option("--budget", type=click.IntRange(1), help="Candidate covectors for --search")
@pass_state
def sigma(state: CliState, n: int, lam: Fraction, strict: bool, mode: str, method: str | None, budget: int | None):
    """Lower bounds, exact plane values or searched upper bounds for sigma."""
    config = state.config
    if mode == "bounds":
        methods = [SigmaMethod(method)] if method else list(SigmaMethod)
        bounds = []
        for m in methods:
            try:
                bounds.append(sigma_lower_bound(n, lam, strict, m))
            except CertifyError:
                if method:
                    raise
        if not bounds:
            raise click.ClickException(f"no lower-bound method applies to n={n}, lambda={_fmt(lam)}")
        payload = {
            "n": n,
            "lambda": format_rational(lam),
            "strict": strict,
            "bounds": [
                {"method": b.method.value, "value": format_rational(b.value),
                 "bound_strict": b.bound_strict, "min_count": b.min_count}
                for b in bounds
            ],
        }
        text = "\n".join(
            f"{b.method.value}: {'>' if b.bound_strict else '>='} {_fmt(b.value)} (count >= {b.min_count})"
            for b in bounds
        )
        state.emit(payload, text)
        return

    cache = SigmaCache(config.cache_path) if config.cache_path else None
    result = cache.get(n, lam, strict) if cache else None
    if mode == "exact2d":
        if n != 2:
            raise click.UsageError("--exact2d needs --n 2")
        if lam.denominator != 1:
            raise click.UsageError("--exact2d needs an integer lambda")
        if result is None or result.exactness != Exactness.EXACT:
            result = sigma_exact_2d(int(lam), strict)
            if cache:
                cache.put(result)
    else:
        if result is None:
            result = sigma_upper_search(n, lam, strict, budget or config.search_budget, config.seed)
            if cache:
                cache.put(result)
    state.emit(witness_to_record(result), _describe_witness(result))


@cli.command()
@click.option("--vertices", required=True, help='Lattice polygon as "x,y x,y ..."')
@pass_state
def pick(state: CliState, vertices: str):
    """Pick's theorem on a simple lattice polygon, checked by brute force."""
    cert = pick_certificate(parse_vertices(vertices))
    payload = {
        "area": format_rational(cert.area),
        "boundary": cert.boundary,
        "interior": cert.interior,
        "total": cert.total,
    }
    text = f"area = {_fmt(cert.area)}\nboundary = {cert.boundary}\ninterior = {cert.interior}\ntotal = {cert.total}"
    state.emit(payload, text)


# -- thresholds -------------------------------------------------------------


def _table_text(report) -> str:
    lines = [f"{'n':>5}  {'pass':<5} {'cert':<7} lhs / rhs"]
    for row in report.table:
        rhs = "-" if row.rhs is None else _fmt(row.rhs)
        cert = row.cert.value if row.cert else "-"
        note = f"  ({row.note})" if row.note else ""
        lines.append(f"{row.n:>5}  {str(row.passed):<5} {cert:<7} {row.lhs} / {rhs}{note}")
    return "\n".join(lines)


@cli.command()
@click.option("--which", required=True, type=click.Choice(_KIND_CHOICES), help="Inequality to certify")
@click.option("--r", "r", required=True, type=click.IntRange(1), help="Codimension")
@click.option("--m", "m", default=1, show_default=True, type=click.IntRange(1), help="Index (conditional only)")
@click.option("--cert", default=Cert.BEST.value, show_default=True, type=click.Choice(_CERT_CHOICES))
@click.option("--limit", default=100, show_default=True, type=click.IntRange(1), help="Largest n tried")
@click.option("--claim", type=click.IntRange(1), help="Also judge a claimed admissible n")
@click.pass_context
def threshold(ctx, which: str, r: int, m: int, cert: str, limit: int, claim: int | None):
    """Minimal dimension passing a threshold inequality, with the full table."""
    state: CliState = ctx.obj
    kind = ThresholdKind(which)
    try:
        if kind == ThresholdKind.CONDITIONAL:
            report = conditional_N(r, m, limit, state.config.workers)
        else:
            report = min_n(ThresholdQuery(r, m, Cert(cert)), kind, limit, state.config.workers)
    except NoneFoundError as exc:
        state.emit(exc.report.to_dict(), _table_text(exc.report) + f"\nno passing n up to {limit}")
        ctx.exit(1)

    payload = report.to_dict()
    text = _table_text(report) + f"\nminimal_n = {report.minimal_n}"
    if not report.monotone_tail:
        text += f"\nnon-monotone tail at {report.violations}"
    claim_ok = True
    if claim is not None:
        claim_ok = report.passes(claim) and all(row.passed for row in report.table if row.n >= claim)
        payload["claim"] = {"n": claim, "valid": claim_ok}
        text += f"\nclaim {claim} {'valid' if claim_ok else 'not valid'}"
    state.emit(payload, text)
    if not claim_ok:
        ctx.exit(1)


@cli.command()
@click.option("--r-max", default=10, show_default=True, type=click.IntRange(1))
@click.option("--a-max", default=60, show_default=True, type=click.IntRange(1))
@click.pass_context
def reductions(ctx, r_max: int, a_max: int):
    """Exponential reductions behind n = 6r and n = 10r, plus direct checks."""
    state: CliState = ctx.obj
    report = verify_sufficiency_reductions(r_max, a_max, state.config.precision)
    payload = {
        "digits": report.digits,
        "exponential": {k: {str(a): ok for a, ok in v.items()} for k, v in report.exponential.items()},
        "direct": {k: {str(r): ok for r, ok in v.items()} for k, v in report.direct.items()},
        "all_pass": report.all_pass,
    }
    lines = []
    for group in (report.exponential, report.direct):
        for label, results in group.items():
            failed = [k for k, ok in results.items() if not ok]
            lines.append(f"{label}: {'PASS' if not failed else f'FAIL at {failed}'}")
    state.emit(payload, "\n".join(lines))
    if not report.all_pass:
        ctx.exit(1)


@cli.command()
@click.option("--n", "n", required=True, type=click.IntRange(1))
@click.option("--d", "d", required=True, type=click.IntRange(1))
@pass_state
def hypersurface(state: CliState, n: int, d: int):
    """lct lower bound for a hyperplane section on a smooth degree-d hypersurface."""
    bound = hypersurface_lct_bound(n, d)
    payload = {"n": n, "d": d, "lct_lower_bound": format_rational(bound.lct)}
    state.emit(payload, f"lct >= {_fmt(bound.lct)}")


# -- volume curves ----------------------------------------------------------


def _load_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"{path}: {exc}") from exc


@cli.command("beta")
@click.option("--curve", "curve_file", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--A", "A", default="1", type=RATIONAL, show_default=True, help="Log discrepancy A_X(F)")
@pass_state
def beta_cmd(state: CliState, curve_file: Path, A: Fraction):
    """beta = A * L^n - integral of vol(L - xF), from a volume curve or a restricted profile."""
    data = _load_json(curve_file)
    if "eta" in data:
        profile = RestrictedVolumeProfile.from_json(data)
        curve = vol_from_restricted(profile)
        value = beta(A, curve)
        sign = beta_sign_certificate(A, profile.tau, profile.eta, profile.dim_n).value
    else:
        curve = VolumeCurve.from_json(data)
        value = beta(A, curve)
        sign = None
    tau = tau_of(curve)
    payload = {"beta": format_rational(value), "tau": format_rational(tau), "Ln": format_rational(curve.Ln)}
    text = f"beta = {_fmt(value)}\ntau = {_fmt(tau)}\nL^n = {_fmt(curve.Ln)}"
    if sign is not None:
        payload["sign_from_barycenter_bound"] = sign
        text += f"\nbarycenter bound gives: {sign}"
    state.emit(payload, text)


@cli.command()
@click.option("--profile", "profile_file", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_context
def barycenter(ctx, profile_file: Path):
    """Check b <= tau/(n+1) + (n-1)eta/(n+1) for a restricted-volume profile."""
    state: CliState = ctx.obj
    profile = RestrictedVolumeProfile.from_json(_load_json(profile_file))
    check = check_barycenter_bound(profile)
    payload = {
        "barycenter": format_rational(check.b),
        "bound": format_rational(check.bound),
        "holds": check.holds,
        "equality": check.equality,
        "weak_bound": format_rational(check.fujita_bound),
        "weak_bound_holds": check.fujita_holds,
    }
    rel = "=" if check.equality else ("<" if check.holds else ">")
    text = f"b = {_fmt(check.b)} {rel} {_fmt(check.bound)}\nweak bound n*tau/(n+1) = {_fmt(check.fujita_bound)}"
    state.emit(payload, text)
    if not check.holds:
        ctx.exit(1)


cli.add_command(barycenter, name="lemma42")


# -- surfaces ---------------------------------------------------------------


@cli.group()
def surface():
    """Intersection arithmetic on surfaces."""


@surface.command()
@click.option("--form", "form_text", default="6,1;1,-2", show_default=True, help="Gram matrix, rows split by ';'")
@click.option("--labels", default="H,C", show_default=True)
@click.option("--base", default="2,0", show_default=True, help="Coefficients of the base class")
@click.option("--curve-index", default=1, show_default=True, type=click.IntRange(0))
@click.option("--lower", default=-2, show_default=True, help="Lower bound on the self-intersection")
@pass_state
def selfint(state: CliState, form_text: str, labels: str, base: str, curve_index: int, lower: int):
    """Largest s with (base - s*curve)^2 >= lower."""
    form = IntersectionForm.parse(form_text, labels)
    base_class = DivisorClass(tuple(parse_rational(c) for c in base.split(",")))
    s = max_mult_from_selfint(form, base_class, curve_index, lower)
    state.emit({"s_max": s}, f"s <= {s}")


@surface.command()
@click.option("--d", "d", default=6, show_default=True, type=click.IntRange(0))
@click.option("--m2h", default=6, show_default=True, type=click.IntRange(0), help="(M^2.H)")
@pass_state
def gamma(state: CliState, d: int, m2h: int):
    """d/3 + (2/3) sqrt(M^2.H), compared exactly with 4."""
    bound = gamma_mult_bound(d, m2h)
    state.emit(
        {"value": str(bound.value), "less_than_4": bound.less_than_4},
        f"{bound.value} {'<' if bound.less_than_4 else '>='} 4",
    )


# -- replication ------------------------------------------------------------


@cli.command()
@click.option("--json", "out", type=click.Path(dir_okay=False, path_type=Path), help="Write the report here")
@click.pass_context
def replicate(ctx, out: Path | None):
    """Recompute every published number; exit 1 if any check fails."""
    state: CliState = ctx.obj
    checks = replicate_all(state.config)
    report = build_report(checks)
    if out:
        write_report(report, out)
    if state.as_json:
        click.echo(dump_report(report), nl=False)
    else:
        colors = {CheckStatus.PASS: "green", CheckStatus.FAIL: "red", CheckStatus.NOT_REPRODUCED: "yellow"}
        for check in checks:
            status = click.style(f"{check.status.value:<15}", fg=colors[check.status])
            click.echo(f"{status} {check.id}: {check.computed} (expected {check.expected})")
            if check.annotation:
                click.echo(click.style(f"{'':<16}{check.annotation}", dim=True))
        summary = report["summary"]
        click.echo(
            f"\n{summary['pass']} pass, {summary['fail']} fail, {summary['not_reproduced']} not reproduced"
        )
    if report["summary"]["fail"]:
        ctx.exit(1)


def run_cli(argv: list[str] | None = None) -> int:
    """Run the CLI without exiting the interpreter; returns the exit code."""
    try:
        rv = cli.main(args=argv, prog_name="lct-certify", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return rv if isinstance(rv, int) else 0
