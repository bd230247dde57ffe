"""Command-line front end: per-line tests, classification, reconstruction, demos.

Exit codes: 0 pass / "in A", 1 fail / "not in A", 2 inconclusive,
3 computation error (e.g. a radial inconsistency surfaced by --force),
64 configuration or usage error.

Function specs accept three forms:

* named examples: ``counterexample`` (|z1|^2), ``globevnik:K``
  (z2^K / conj(z2)), ``conj-z1``, ``conj-z2``;
* inline expressions over z1, z2 and conj(z1), conj(z2), e.g.
  ``"2*z1^2+z1*z2+3"`` (real scalars bare, complex scalars parenthesized
  as ``(1+2i)``);
* a path to a monomial file with lines ``c_re c_im | a1 a2 | b1 b2``.

Complex scalars in points and flags use the form ``re+imi``
(e.g. ``-0.2+0.1i``).  A ``--config`` file of ``key = value`` lines supplies
defaults; explicit flags win.  Randomized commands require ``--seed``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import boundary, exttest, geometry, reconstruct, spectral

__all__ = ["main", "CliError", "UnknownDemo", "parse_complex", "parse_point", "parse_function_spec"]

DEMO_NAMES = ("counterexample", "globevnik", "exterior-insufficiency", "projection-lemma")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3
EXIT_USAGE = 64


class CliError(Exception):
    """Configuration / usage error: exits with code 64."""


class UnknownDemo(ValueError):
    """Requested demo name is not one of the shipped scenarios."""


def parse_complex(text: str) -> complex:
    """Parse 're', 'imi', or 're+imi' (e.g. '-0.2+0.1i', '3', '0.5i', 'i')."""
    s = text.strip().replace(" ", "")
    if not s:
        raise CliError("empty complex literal")
    try:
        return complex(float(s), 0.0)
    except ValueError:
        pass
    if not s.endswith("i"):
        raise CliError(f"cannot parse complex literal {text!r}")
    body = s[:-1]
    # Split off the real part at the last top-level sign (not an exponent sign).
    split = -1
    for idx in range(len(body) - 1, 0, -1):
        if body[idx] in "+-" and body[idx - 1] not in "eE":
            split = idx
            break
    re_part, im_part = (body[:split], body[split:]) if split > 0 else ("", body)
    try:
        re_val = float(re_part) if re_part else 0.0
        if im_part in ("", "+"):
            im_val = 1.0
        elif im_part == "-":
            im_val = -1.0
        else:
            im_val = float(im_part)
    except ValueError as exc:
        raise CliError(f"cannot parse complex literal {text!r}") from exc
    return complex(re_val, im_val)


def parse_point(text: str, n: int = 2) -> np.ndarray:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != n:
        raise CliError(f"expected {n} comma-separated components, got {text!r}")
    return np.array([parse_complex(p) for p in parts], dtype=complex)


def _split_top_level(s: str, seps: str):
    """Split on separators at parenthesis depth 0, keeping sign separators."""
    parts = []
    current = ""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise CliError(f"unbalanced parentheses in {s!r}")
        if depth == 0 and ch in seps and i > 0 and s[i - 1] not in "eE*^(+-":
            parts.append(current)
            current = ch if ch in "+-" else ""
            if ch not in "+-":
                current = ""
            continue
        current += ch
    if depth != 0:
        raise CliError(f"unbalanced parentheses in {s!r}")
    parts.append(current)
    return [p for p in parts if p not in ("", "+")]


def _parse_factor(token: str, n: int) -> boundary.MonomialSum:
    token = token.strip()
    if not token:
        raise CliError("empty factor in expression")
    power = 1
    if "^" in token:
        token, _, exp = token.rpartition("^")
        try:
            power = int(exp)
        except ValueError as exc:
            raise CliError(f"bad exponent in {token!r}^{exp!r}") from exc
        if power < 0:
            raise CliError("negative exponents are not part of the monomial language")
    conjugate = False
    if token.startswith("conj(") and token.endswith(")"):
        conjugate = True
        token = token[5:-1]
    if token.startswith("(") and token.endswith(")"):
        token = token[1:-1]
    if token.startswith("z"):
        try:
            j = int(token[1:]) - 1
        except ValueError as exc:
            raise CliError(f"bad variable {token!r}") from exc
        if not 0 <= j < n:
            raise CliError(f"variable {token!r} out of range for C^{n}")
        alpha = [0] * n
        beta = [0] * n
        (beta if conjugate else alpha)[j] = power
        return boundary.monomial(1.0, tuple(alpha), tuple(beta))
    value = parse_complex(token)
    if conjugate:
        value = value.conjugate()
    return boundary.MonomialSum.constant(value**power, n=n)


def parse_expression(text: str, n: int = 2) -> boundary.MonomialSum:
    """Parse the monomial mini-language, e.g. '2*z1^2+z1*z2+3'."""
    s = text.replace(" ", "")
    if not s:
        raise CliError("empty function expression")
    total = boundary.MonomialSum.constant(0.0, n=n)
    for term in _split_top_level(s, "+-"):
        sign = 1.0
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise CliError(f"dangling sign in expression {text!r}")
        product = boundary.MonomialSum.constant(sign, n=n)
        for factor in term.split("*"):
            product = product * _parse_factor(factor, n)
        total = total + product
    return total


def parse_function_spec(spec: str, n: int = 2):
    """Resolve a --fn argument to a boundary function."""
    spec = spec.strip()
    if spec == "counterexample":
        return boundary.example_counterexample()
    if spec.startswith("globevnik"):
        _, _, rest = spec.partition(":")
        try:
            k = int(rest) if rest else 2
        except ValueError as exc:
            raise CliError(f"bad order in {spec!r}") from exc
        return boundary.example_globevnik(k)
    if spec in ("conj-z1", "conj-z2"):
        j = 0 if spec == "conj-z1" else 1
        beta = [0] * n
        beta[j] = 1
        return boundary.monomial(1.0, (0,) * n, tuple(beta))
    path = spec[1:] if spec.startswith("@") else spec
    if spec.startswith("@") or os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return boundary.parse_monomial_text(fh.read(), n=n)
        except (OSError, ValueError) as exc:
            raise CliError(f"cannot load monomial file {path!r}: {exc}") from exc
    return parse_expression(spec, n=n)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2, which means
        raise CliError(message)  # "inconclusive" here; route to 64 instead.


def _build_parser() -> _Parser:
    parser = _Parser(prog="holoball", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="file of key = value defaults")
        p.add_argument("--seed", help="RNG seed (required for randomized commands)")
        p.add_argument("--tol", help="relative tolerance (default 1e-8)")
        p.add_argument("--n-phi", help="angular quadrature size (default 512)")
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--plot-out", help="write plot-ready CSV data here")

    p = sub.add_parser("moment-test", help="per-line extension test (FFT + contour moments)")
    common(p)
    p.add_argument("--fn", help="boundary function spec")
    p.add_argument("--line-through", help="point on the line, e.g. 0.5,0")
    p.add_argument("--dir", help="line direction, e.g. 1,1 (normalized)")
    p.add_argument("--n", help="circle sample count (default 256)")
    p.add_argument("--moments", help="number of exterior moment poles (default 10)")

    p = sub.add_parser("classify", help="two-bunch ball-algebra membership test")
    common(p)
    p.add_argument("--fn", help="boundary function spec")
    p.add_argument("--a", help="first base point, e.g. 0.3,0")
    p.add_argument("--b", help="second base point, e.g. -0.2+0.1i,0")
    p.add_argument("--v-max", help="slice truncation (default 12)")
    p.add_argument("--n-circle", help="samples per test circle (default 128)")
    p.add_argument("--n-grid", help="angular samples per grid radius (default 64)")

    p = sub.add_parser("reconstruct", help="fit the double power series extension")
    common(p)
    p.add_argument("--fn", help="boundary function spec")
    p.add_argument("--a", help="classification base point (default 0.3,0)")
    p.add_argument("--b", help="classification base point (default -0.4,0)")
    p.add_argument("--v-max", help="z2 truncation (default 12)")
    p.add_argument("--m-max", help="z1 truncation (default 16)")
    p.add_argument("--force", action="store_true", help="skip the classification gate")

    p = sub.add_parser("demo", help="narrative scenarios with plot-ready CSV output")
    common(p)
    p.add_argument("name", help="one of: " + ", ".join(DEMO_NAMES))
    p.add_argument("--a", help="bunch center for projection-lemma (default 0.5,0)")

    return parser


def _load_config(path: str) -> dict:
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise CliError(f"{path}:{lineno}: expected 'key = value'")
                key, _, value = line.partition("=")
                values[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise CliError(f"cannot read config {path!r}: {exc}") from exc
    return values


def _merge_config(args: argparse.Namespace):
    if getattr(args, "config", None):
        for key, value in _load_config(args.config).items():
            if getattr(args, key, None) in (None, False):
                setattr(args, key, value)


def _get(args, name, convert, default):
    value = getattr(args, name, None)
    if value is None:
        return default
    try:
        return convert(value)
    except (TypeError, ValueError) as exc:
        raise CliError(f"bad value for --{name.replace('_', '-')}: {value!r}") from exc


def _require_seed(args) -> int:
    seed = getattr(args, "seed", None)
    if seed is None:
        raise CliError("this command draws random samples; --seed is required")
    try:
        return int(seed)
    except ValueError as exc:
        raise CliError(f"bad --seed value {args.seed!r}") from exc


def _emit_json(args, payload: dict):
    text = json.dumps(payload, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_csv(args, header, rows):
    if not getattr(args, "plot_out", None):
        return
    with open(args.plot_out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _verdict_exit(verdict: str) -> int:
    return {
        "pass": EXIT_PASS,
        "in A": EXIT_PASS,
        "fail": EXIT_FAIL,
        "not in A": EXIT_FAIL,
        "inconclusive": EXIT_INCONCLUSIVE,
    }[verdict]


def _resolve_line(args):
    if getattr(args, "line_through", None) or getattr(args, "dir", None):
        if not (getattr(args, "line_through", None) and getattr(args, "dir", None)):
            raise CliError("--line-through and --dir must be given together")
        return geometry.make_line(parse_point(args.line_through), parse_point(args.dir))
    rng = np.random.default_rng(_require_seed(args))
    point = 0.8 * rng.random() * geometry.random_directions(2, 1, rng)[0]
    return geometry.make_line(point, geometry.random_directions(2, 1, rng)[0])


def cmd_moment_test(args) -> int:
    if not getattr(args, "fn", None):
        raise CliError("moment-test requires --fn")
    f = parse_function_spec(args.fn)
    tol = _get(args, "tol", float, exttest.DEFAULT_TOL)
    n = _get(args, "n", int, 256)
    line = _resolve_line(args)
    report = exttest.holomorphic_extension_test(f, line, n=n, tol=tol)
    n_moments = _get(args, "moments", int, 10)
    circle = geometry.sphere_intersection(line)
    poles = circle.radius + 0.5 + 0.25 * np.arange(n_moments)
    moments = [abs(exttest.moment_integral(f, line, t, n=n)) for t in poles]
    payload = report.to_json_dict()
    payload["residuals"] = [report.residual] + [m for m in moments]
    payload["params"]["moment_poles"] = [float(t) for t in poles]
    _emit_json(args, payload)
    _write_csv(
        args,
        ["pole_re", "pole_im", "moment_abs"],
        [[float(t), 0.0, m] for t, m in zip(poles, moments)],
    )
    return _verdict_exit(report.verdict)


def cmd_classify(args) -> int:
    if not getattr(args, "fn", None):
        raise CliError("classify requires --fn")
    f = parse_function_spec(args.fn)
    a = parse_point(args.a) if getattr(args, "a", None) else np.array([0.3, 0.0], dtype=complex)
    b = parse_point(args.b) if getattr(args, "b", None) else np.array([-0.4, 0.0], dtype=complex)
    boundary_center = max(abs(np.linalg.norm(a)), abs(np.linalg.norm(b))) >= 1.0 - 1e-6
    seed = _require_seed(args) if boundary_center else _get(args, "seed", int, 0)
    report = exttest.two_bunch_classify(
        f,
        a,
        b,
        v_max=_get(args, "v_max", int, spectral.DEFAULT_V_MAX),
        n_circle=_get(args, "n_circle", int, 128),
        n_grid=_get(args, "n_grid", int, 64),
        n_phi=_get(args, "n_phi", int, spectral.DEFAULT_N_PHI),
        tol=_get(args, "tol", float, exttest.DEFAULT_TOL),
        seed=seed,
    )
    _emit_json(args, report.to_json_dict())
    _write_csv(
        args,
        ["nu", "kind", "residual", "verdict"],
        [[s.nu, s.kind, s.residual, s.verdict] for s in report.slices],
    )
    return _verdict_exit(report.verdict)


def cmd_reconstruct(args) -> int:
    if not getattr(args, "fn", None):
        raise CliError("reconstruct requires --fn")
    f = parse_function_spec(args.fn)
    tol = _get(args, "tol", float, exttest.DEFAULT_TOL)
    v_max = _get(args, "v_max", int, spectral.DEFAULT_V_MAX)
    m_max = _get(args, "m_max", int, 16)
    n_phi = _get(args, "n_phi", int, spectral.DEFAULT_N_PHI)
    a = parse_point(args.a) if getattr(args, "a", None) else np.array([0.3, 0.0], dtype=complex)
    b = parse_point(args.b) if getattr(args, "b", None) else np.array([-0.4, 0.0], dtype=complex)
    classification = None
    if not args.force:
        classification = exttest.two_bunch_classify(f, a, b, v_max=v_max, n_phi=n_phi, tol=tol)
        if classification.verdict != "in A":
            _emit_json(args, classification.to_json_dict())
            return _verdict_exit(classification.verdict)
    model = reconstruct.assemble_extension(
        f, v_max=v_max, m_max=m_max, n_phi=n_phi, tol=tol,
        seed=_get(args, "seed", int, 0),
    )
    payload = model.to_json_dict()
    if classification is not None:
        payload["classification"] = classification.verdict
    _emit_json(args, payload)
    _write_csv(
        args,
        ["nu", "mu", "re", "im"],
        [[e["nu"], e["mu"], e["re"], e["im"]] for e in model.coefficient_entries()],
    )
    return EXIT_PASS


def _demo_counterexample(args, tol):
    f = boundary.example_counterexample()
    bunch = exttest.bunch_test(f, np.zeros(2, dtype=complex), count=200, tol=tol,
                               seed=_get(args, "seed", int, 0))
    report = exttest.two_bunch_classify(f, np.zeros(2, dtype=complex),
                                        np.array([0.5, 0.0], dtype=complex), tol=tol)
    print("demo: one bunch is not enough")
    print("function: |z1|^2 on the unit sphere of C^2")
    print(f"bunch at the origin: 200 random lines, worst residual "
          f"{bunch.worst_residual:.3e} (every circle restriction is constant)")
    print(f"two-bunch classification against b = (0.5, 0): {report.verdict}")
    print("the function extends along every line through 0 yet is the boundary")
    print("value of no holomorphic function: one bunch cannot decide membership.")
    rows = [[i, r] for i, r in enumerate(bunch.residuals)]
    _write_csv(args, ["line_index", "residual"], rows)
    ok = bunch.verdict == "pass" and report.verdict == "not in A"
    return EXIT_PASS if ok else EXIT_FAIL


def _demo_globevnik(args, tol):
    f = boundary.example_globevnik(2)
    seed = _get(args, "seed", int, 0)
    a = np.array([0.3, 0.0], dtype=complex)
    b = np.array([-0.4, 0.0], dtype=complex)
    bunch_a = exttest.bunch_test(f, a, count=200, tol=tol, seed=seed)
    bunch_b = exttest.bunch_test(f, b, count=200, tol=tol, seed=seed + 1)
    bad_line = geometry.line_through_points(
        np.array([0.0, 0.5], dtype=complex), np.array([0.5, 0.65], dtype=complex)
    )
    bad = exttest.holomorphic_extension_test(f, bad_line, tol=tol)
    order = spectral.vanishing_order(f, 3)
    report = exttest.two_bunch_classify(f, a, b, tol=tol)
    print("demo: extension along two bunches without membership")
    print("function: z2^2 / conj(z2) on the unit sphere of C^2")
    print(f"bunch at (0.3, 0): worst residual {bunch_a.worst_residual:.3e}")
    print(f"bunch at (-0.4, 0): worst residual {bunch_b.worst_residual:.3e}")
    print(f"generic line avoiding z2 = 0: residual {bad.relative:.3e} (fails)")
    print(f"slice nu=3 boundary exponent: {order.exponent:.3f} (grows like 1/(1-|z1|^2))")
    print(f"classification: {report.verdict}")
    for note in report.notes:
        print(f"note: {note}")
    _write_csv(
        args,
        ["bunch", "line_index", "residual"],
        [["a", i, r] for i, r in enumerate(bunch_a.residuals)]
        + [["b", i, r] for i, r in enumerate(bunch_b.residuals)],
    )
    ok = (
        bunch_a.verdict == "pass"
        and bunch_b.verdict == "pass"
        and bad.verdict == "fail"
        and report.verdict == "not in A"
    )
    return EXIT_PASS if ok else EXIT_FAIL


def _demo_exterior(args, tol):
    f = boundary.example_counterexample()
    rows = []
    worst_spread = 0.0
    offsets = [r * np.exp(2j * np.pi * k / 6) for r in (0.25, 0.5, 0.75) for k in range(6)]
    for axis in (0, 1):
        direction = np.zeros(2, dtype=complex)
        direction[axis] = 1.0
        for c in offsets:
            base = np.zeros(2, dtype=complex)
            base[1 - axis] = c
            line = geometry.make_line(base, direction)
            samples = geometry.sample_circle(geometry.sphere_intersection(line), 128)
            values = f(samples.points)
            spread = float(np.max(np.abs(values - values.mean())))
            worst_spread = max(worst_spread, spread)
            rows.append([axis + 1, c.real, c.imag, spread])
    report = exttest.two_bunch_classify(
        f, np.zeros(2, dtype=complex), np.array([0.5, 0.0], dtype=complex), tol=tol
    )
    print("demo: lines parallel to the coordinate axes are not enough")
    print("function: |z1|^2 on the unit sphere of C^2")
    print(f"restrictions to {len(rows)} lines parallel to a coordinate axis are constant;")
    print(f"worst spread {worst_spread:.3e}")
    print("(such a family is a bunch through points at infinity in the direction space)")
    print(f"two-bunch classification at interior points: {report.verdict}")
    _write_csv(args, ["axis", "offset_re", "offset_im", "spread"], rows)
    ok = worst_spread <= 1e-12 and report.verdict == "not in A"
    return EXIT_PASS if ok else EXIT_FAIL


def _demo_projection(args, tol):
    seed = _require_seed(args)
    a1 = complex(parse_point(args.a)[0]) if getattr(args, "a", None) else 0.5
    rng = np.random.default_rng(seed)
    point = np.array([a1, 0.0], dtype=complex)
    lines, _ = geometry.random_lines_through(point, 24, rng)
    rows = []
    worst = 0.0
    for i, line in enumerate(lines):
        try:
            circle = geometry.project_to_hyperbolic_circle(line, a1)
        except geometry.VerticalLine:
            continue
        samples = geometry.sample_circle(geometry.sphere_intersection(line), 256)
        u = np.abs(geometry.disc_automorphism(a1, samples.points[:, 0]))
        std = float(np.std(u))
        worst = max(worst, std)
        rows.append([i, circle.radius, std])
    print("demo: sphere circles of a bunch project to circles of constant")
    print(f"pseudo-hyperbolic distance from the bunch center a1 = {a1}")
    print(f"{len(rows)} random lines through (a1, 0); worst |u_a1| spread {worst:.3e}")
    for i, r, std in rows[:8]:
        print(f"  line {i:2d}: radius {r:.6f}, std {std:.2e}")
    _write_csv(args, ["line_index", "radius", "std"], rows)
    return EXIT_PASS if worst <= 1e-10 else EXIT_FAIL


def cmd_demo(args) -> int:
    tol = _get(args, "tol", float, exttest.DEFAULT_TOL)
    if args.name == "counterexample":
        return _demo_counterexample(args, tol)
    if args.name == "globevnik":
        return _demo_globevnik(args, tol)
    if args.name == "exterior-insufficiency":
        return _demo_exterior(args, tol)
    if args.name == "projection-lemma":
        return _demo_projection(args, tol)
    raise UnknownDemo(f"unknown demo {args.name!r}; expected one of {', '.join(DEMO_NAMES)}")


# Flags whose values may start with '-' (negative coordinates); argparse
# would otherwise read them as option strings.
_POINT_FLAGS = ("--a", "--b", "--line-through", "--dir")


def _join_point_flags(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _POINT_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = _build_parser().parse_args(_join_point_flags(list(argv)))
        _merge_config(args)
        handler = {
            "moment-test": cmd_moment_test,
            "classify": cmd_classify,
            "reconstruct": cmd_reconstruct,
            "demo": cmd_demo,
        }[args.command]
        return handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
