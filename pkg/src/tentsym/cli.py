"""Command-line front end.

Exit codes: 0 for any answered query (an inadmissible verdict is an answer,
not an error), 1 for domain errors, 2 for usage errors.
"""

from __future__ import annotations

import csv
import json
import sys
from fractions import Fraction

import click

from .admissibility import (
    KappaInvalid,
    TypeKind,
    TypeMismatch,
    backward_admissible,
    classify,
    classify_prefix,
    forward_admissible,
    max_backward_itinerary,
    validate_kappa,
)
from .height import c_word, height, lhe_rhe
from .sequences import BiSeqEP, ParseError, SeqEP, format_seq, parse_seq
from .tentmap import NotRealizable, SlopeOutOfRange, kneading, make_tent, realize_backward

DOMAIN_ERRORS = (
    KappaInvalid,
    TypeMismatch,
    NotRealizable,
    SlopeOutOfRange,
    ParseError,
    ValueError,
    ZeroDivisionError,
)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"not a rational number: {text} ({exc})")


def _one_sided(text: str) -> SeqEP:
    s = parse_seq(text)
    if not isinstance(s, SeqEP):
        raise click.UsageError(f"expected a one-sided sequence literal, got {text!r}")
    return s


def _bi(text: str) -> BiSeqEP:
    s = parse_seq(text)
    if not isinstance(s, BiSeqEP):
        raise click.UsageError(f"expected a bi-infinite sequence literal, got {text!r}")
    return s


def _emit(fmt: str, plain: str, payload: dict) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(payload.keys())
        writer.writerow(payload.values())
    else:
        click.echo(plain)


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "json", "csv"]),
    default="plain",
    show_default=True,
)


@click.group()
def main() -> None:
    """Symbolic dynamics of tent maps: words, heights, admissibility."""


def _wrap(fn):
    """Turn domain exceptions into exit code 1 with the diagnostic printed."""

    def run(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except click.ClickException:
            raise
        except DOMAIN_ERRORS as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@main.command()
@click.argument("q")
@format_option
@_wrap
def cq(q: str, fmt: str) -> None:
    """Print the cutting word c_q for rational q = m/n."""
    word = c_word(_fraction(q))
    _emit(fmt, word, {"q": q, "c_q": word})


@main.command()
@click.argument("q")
@format_option
@_wrap
def lhe(q: str, fmt: str) -> None:
    """Print the left height extreme (w_q 1)^inf."""
    s = lhe_rhe(_fraction(q))[0]
    _emit(fmt, format_seq(s), {"q": q, "lhe": format_seq(s)})


@main.command()
@click.argument("q")
@format_option
@_wrap
def rhe(q: str, fmt: str) -> None:
    """Print the right height extreme c_q (1 w-hat_q)^inf."""
    s = lhe_rhe(_fraction(q))[1]
    _emit(fmt, format_seq(s), {"q": q, "rhe": format_seq(s)})


@main.command(name="height")
@click.argument("seq")
@format_option
@_wrap
def height_cmd(seq: str, fmt: str) -> None:
    """Exact height of a one-sided sequence literal PRE(PER)."""
    q = height(_one_sided(seq))
    _emit(fmt, str(q), {"seq": seq, "height": str(q)})


@main.command(name="classify")
@click.option("--kappa", "kappa_text", default=None, help="exact sequence literal")
@click.option("--prefix", "prefix_text", default=None, help="finite kneading prefix")
@format_option
@_wrap
def classify_cmd(kappa_text, prefix_text, fmt: str) -> None:
    """Kneading type of an exact kappa, or what a prefix certifies."""
    if (kappa_text is None) == (prefix_text is None):
        raise click.UsageError("exactly one of --kappa / --prefix is required")
    if kappa_text is not None:
        ktype = classify(validate_kappa(_one_sided(kappa_text)))
        plain = f"{ktype.kind.value} q={ktype.q}"
        _emit(fmt, plain, {"kind": ktype.kind.value, "q": str(ktype.q)})
        return
    ktype = classify_prefix(prefix_text)
    if ktype is None:
        _emit(fmt, "undecided", {"kind": "undecided"})
    elif ktype.kind is TypeKind.INTERIOR:
        _emit(
            fmt,
            f"interior q={ktype.q}",
            {"kind": "interior", "q": str(ktype.q)},
        )
    else:
        b = ktype.bracket
        _emit(
            fmt,
            f"irrational-or-unresolved height in ({b.lo}, {b.hi})",
            {"kind": ktype.kind.value, "lo": str(b.lo), "hi": str(b.hi)},
        )


@main.command(name="kneading")
@click.argument("slope")
@click.option("--depth", type=int, default=64, show_default=True)
@format_option
@_wrap
def kneading_cmd(slope: str, depth: int, fmt: str) -> None:
    """Kneading sequence of the tent map with slope p/q, to the given depth."""
    result = kneading(make_tent(_fraction(slope)), depth)
    if result.is_exact:
        text = format_seq(result.exact)
        _emit(fmt, text, {"slope": slope, "exact": text, "eps": result.eps})
    else:
        _emit(fmt, result.prefix, {"slope": slope, "prefix": result.prefix})


def _verdict_cmd(check):
    def run(kappa_text: str, biseq: str, fmt: str) -> None:
        verdict = check(_bi(biseq), validate_kappa(_one_sided(kappa_text)))
        if fmt == "json":
            click.echo(verdict.to_json())
            return
        if verdict.admissible:
            _emit(fmt, "admissible", {"admissible": True})
        else:
            plain = (
                f"inadmissible: condition {verdict.condition}"
                f" at shift {verdict.shift_index}: {verdict.detail}"
            )
            _emit(
                fmt,
                plain,
                {
                    "admissible": False,
                    "condition": verdict.condition,
                    "shift_index": verdict.shift_index,
                    "detail": verdict.detail,
                },
            )

    return run


@main.command(name="check-forward")
@click.option("--kappa", "kappa_text", required=True)
@click.argument("biseq")
@format_option
@_wrap
def check_forward(kappa_text: str, biseq: str, fmt: str) -> None:
    """Forward admissibility of a bi-infinite sequence under kappa."""
    _verdict_cmd(forward_admissible)(kappa_text, biseq, fmt)


@main.command(name="check-backward")
@click.option("--kappa", "kappa_text", required=True)
@click.argument("biseq")
@format_option
@_wrap
def check_backward(kappa_text: str, biseq: str, fmt: str) -> None:
    """Backward admissibility of a bi-infinite sequence under kappa."""
    _verdict_cmd(backward_admissible)(kappa_text, biseq, fmt)


@main.command(name="max-backward")
@click.option("--kappa", "kappa_text", required=True)
@format_option
@_wrap
def max_backward(kappa_text: str, fmt: str) -> None:
    """Greatest realizable backward itinerary under an interior-type kappa."""
    top, witness = max_backward_itinerary(validate_kappa(_one_sided(kappa_text)))
    plain = f"{format_seq(top)} witness {format_seq(witness)}"
    _emit(
        fmt,
        plain,
        {"max_backward": format_seq(top), "witness": format_seq(witness)},
    )


@main.command(name="realize")
@click.option("--lambda", "slope", required=True, help="rational slope p/q")
@click.argument("biseq")
@click.option("--depth", type=int, default=10, show_default=True)
@format_option
@_wrap
def realize(slope: str, biseq: str, depth: int, fmt: str) -> None:
    """Realize a bi-infinite itinerary as an exact orbit window."""
    real = realize_backward(make_tent(_fraction(slope)), _bi(biseq), depth)
    if fmt == "json":
        click.echo(
            json.dumps({str(r): str(x) for r, x in sorted(real.points.items())})
        )
        return
    S = _bi(biseq)
    if fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["r", "numerator", "denominator", "symbol"])
        for r, x in sorted(real.points.items()):
            writer.writerow([r, x.numerator, x.denominator, S.symbol(r)])
        return
    for r, x in sorted(real.points.items()):
        click.echo(f"{r}\t{x}\t{S.symbol(r)}")


@main.command(name="scan")
@click.option("--q", "q_text", required=True)
@click.option("--kappas", "kappas_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@_wrap
def scan(q_text: str, kappas_path: str, out_path: str) -> None:
    """Run max-backward over a file of interior-type kappas of height q and
    write CSV rows (kappa, q, max_backward, witness); the max column is
    constant across the whole file."""
    q = _fraction(q_text)
    rows = []
    with open(kappas_path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            kappa = validate_kappa(_one_sided(line))
            ktype = classify(kappa)
            if ktype.kind is not TypeKind.INTERIOR or ktype.q != q:
                raise KappaInvalid(
                    f"line {lineno}: {line} is {ktype.kind.value}"
                    f" at height {ktype.q}, expected interior at {q}"
                )
            top, witness = max_backward_itinerary(kappa)
            rows.append(
                [format_seq(kappa.seq), str(q), format_seq(top), format_seq(witness)]
            )
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["kappa", "q", "max_backward", "witness"])
        writer.writerows(rows)
    click.echo(f"wrote {len(rows)} rows to {out_path}")


if __name__ == "__main__":
    main()
