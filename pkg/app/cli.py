"""Command-line entry point: ``fockkit <subcommand> [flags]``.

Every subcommand prints one JSON document (keys sorted, rationals as "a/b")
or, with ``--out csv``, a CSV table. Domain errors print
``{"error": code, "detail": ...}`` and exit with status 1; flag errors exit
with status 2.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any

import pandas as pd
from pydantic import ValidationError

from app.fockkit import (
    AffinePermutation,
    CherednikParams,
    ChevalleyOp,
    Composition,
    CoxeterContext,
    DunklParams,
    FockkitError,
    FockLabel,
    InvalidInput,
    MultiPartition,
    PiVariant,
    Settings,
    WedgeVector,
    alpha_map,
    alpha_to_wedge,
    alternating_sum_kl_minus,
    antidominant_rep,
    block_decomposition_numbers,
    block_weight,
    canonical_Gminus,
    character_matrix,
    charge_weight,
    check_theta_pairing_identity,
    cherednik_order,
    chevalley_apply,
    chevalley_standard,
    configure_cache,
    conjecture_hypotheses,
    decode_index,
    decomposition_matrices,
    dump_csv,
    dump_json,
    encode_index,
    euler_grading_check,
    jordan_holder_leq,
    kl_poly,
    load_settings,
    order_triangle_leq,
    param_convert,
    parabolic_decomposition_numbers,
    params_from_block,
    params_from_charge,
    parabolic_kl_minus,
    payload_frame,
    predicted_decomposition,
    theta,
    triangle_leq_block,
    underline_alpha,
    verify_relations,
    wedge_to_alpha,
    yvonne_delta_plus,
)

logger = logging.getLogger(__name__)

Result = tuple[Any, pd.DataFrame | None]
Handler = Callable[[argparse.Namespace, Settings], Result]

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


# =========================================================================
# ARGUMENT PARSING HELPERS
# =========================================================================


def _ints(text: str) -> tuple[int, ...]:
    """Comma- or dot-separated integers; ``-`` or an empty string is the empty tuple."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        return tuple(int(x) for x in text.replace(".", ",").split(",") if x.strip() != "")
    except ValueError as exc:
        raise InvalidInput(f"not a list of integers: {text!r}") from exc


def _int_flag(text: str) -> tuple[int, ...]:
    try:
        return _ints(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(exc.detail) from exc


def _multipartition(text: str) -> MultiPartition:
    """A multipartition written as JSON, e.g. ``[[2,1],[],[1]]``."""
    try:
        components = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"multipartition must be a JSON array of arrays, got {text!r}") from exc
    if not isinstance(components, list) or not all(isinstance(c, list) for c in components):
        raise InvalidInput(f"multipartition must be a JSON array of arrays, got {text!r}")
    return MultiPartition(components=components)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name, None) is None]
    if missing:
        flags = ", ".join("--" + name.replace("_", "-") for name in missing)
        raise InvalidInput(f"{args.command} needs {flags}")


def _element(ctx: CoxeterContext, text: str) -> AffinePermutation:
    word = _ints(text)
    bad = [i for i in word if i not in ctx.simple_indices()]
    if bad:
        raise InvalidInput(f"letters {bad} are not simple reflections of {ctx.kind.value}, m={ctx.m}")
    return AffinePermutation.from_word(word, ctx.m)


def _composition(text: str) -> Composition:
    return Composition(parts=text)


def _label(args: argparse.Namespace) -> FockLabel:
    _require(args, "lam", "nu", "s", "e")
    return FockLabel(lam=args.lam, nu=args.nu, s=args.s, e=args.e)


def _cherednik_params(args: argparse.Namespace) -> CherednikParams:
    _require(args, "h")
    return CherednikParams(h=args.h, H=args.H or ())


def _dunkl_params(args: argparse.Namespace) -> DunklParams | CherednikParams:
    if getattr(args, "h", None) is not None:
        return _cherednik_params(args)
    _require(args, "k")
    return DunklParams(level=args.l, k=args.k, gamma=args.gamma or ())


def _lambda_rows(expansion: dict[FockLabel, Any]) -> list[dict[str, Any]]:
    return [
        {"lambda": list(label.lam), "coeff": expansion[label]}
        for label in sorted(expansion, key=lambda x: x.lam, reverse=True)
    ]


# =========================================================================
# SUBCOMMANDS
# =========================================================================


def cmd_decode(args: argparse.Namespace, settings: Settings) -> Result:
    return decode_index(args.a, args.e, args.l).to_json(), None


def cmd_encode(args: argparse.Namespace, settings: Settings) -> Result:
    return {"a": encode_index(args.phi, args.p, args.e, args.l)}, None


def cmd_bijection(args: argparse.Namespace, settings: Settings) -> Result:
    if args.wedge is not None:
        _require(args, "l")
        alpha, nu = wedge_to_alpha(_ints(args.wedge), args.e, args.l)
        return {"alpha": list(alpha), "nu": nu.to_json()}, None
    _require(args, "alpha", "mu")
    return {"wedge": list(alpha_to_wedge(_ints(args.alpha), _composition(args.mu), args.e))}, None


def cmd_alpha(args: argparse.Namespace, settings: Settings) -> Result:
    return list(alpha_map(args.lam, _composition(args.nu), args.s)), None


def cmd_underline_alpha(args: argparse.Namespace, settings: Settings) -> Result:
    nu = _composition(args.nu)
    if args.l is not None and args.l != nu.level:
        raise InvalidInput(f"--l {args.l} does not match nu of level {nu.level}")
    return list(underline_alpha(args.lam, nu, args.s, args.e)), None


def cmd_chevalley(args: argparse.Namespace, settings: Settings) -> Result:
    op = ChevalleyOp.parse(args.op, args.e)
    if args.wedge is not None:
        _require(args, "l")
        result = chevalley_apply(op, WedgeVector.wedge(*_ints(args.wedge)), args.e, args.l)
        return result.to_json(), None
    return _lambda_rows(chevalley_standard(op, _label(args))), None


def cmd_gminus(args: argparse.Namespace, settings: Settings) -> Result:
    expansion = canonical_Gminus(_label(args), q_analog=args.q_analog)
    return _lambda_rows(expansion), None


def cmd_decomp(args: argparse.Namespace, settings: Settings) -> Result:
    delta, nabla = decomposition_matrices(args.n, _composition(args.s), args.e, settings.workers)
    chosen = delta if args.matrix == "delta" else nabla
    payload = {"delta_minus": delta, "nabla_minus": nabla, "charge": list(delta.charge)}
    return payload, chosen.to_frame()


def cmd_yvonne(args: argparse.Namespace, settings: Settings) -> Result:
    plus = yvonne_delta_plus(args.n, _composition(args.s), args.e, settings.workers)
    return {"delta_plus": plus, "charge": list(plus.charge)}, plus.to_frame()


def cmd_multiplicities(args: argparse.Namespace, settings: Settings) -> Result:
    if args.s is not None:
        _require(args, "e")
        matrix = block_decomposition_numbers(args.n, _composition(args.s), args.e)
    else:
        _require(args, "nu", "kappa")
        matrix = parabolic_decomposition_numbers(args.n, _composition(args.nu), args.kappa)
    return {"multiplicities": matrix, "charge": list(matrix.charge)}, matrix.to_frame()


def cmd_predict(args: argparse.Namespace, settings: Settings) -> Result:
    matrix = predicted_decomposition(args.n, _composition(args.s), args.e, settings.workers)
    return {"predicted": matrix, "charge": list(matrix.charge)}, matrix.to_frame()


def cmd_kl(args: argparse.Namespace, settings: Settings) -> Result:
    ctx = CoxeterContext(kind=args.kind, m=args.m)
    poly = kl_poly(ctx, _element(ctx, args.v), _element(ctx, args.w))
    return {"coeffs": poly, "poly": str(poly)}, None


def cmd_pkl(args: argparse.Namespace, settings: Settings) -> Result:
    ctx = CoxeterContext(kind=args.kind, m=args.m, parabolic=args.J)
    u, w = _element(ctx, args.u), _element(ctx, args.w)
    if args.method == "alternating":
        poly = alternating_sum_kl_minus(ctx, u, w)
    else:
        poly = parabolic_kl_minus(ctx, u, w)
    return {"coeffs": poly, "poly": str(poly)}, None


def cmd_charmat(args: argparse.Namespace, settings: Settings) -> Result:
    nu = _composition(args.nu)
    weight = block_weight(_multipartition(args.lam), nu, args.kappa)
    gamma, _ = antidominant_rep(weight)
    matrix = character_matrix(gamma, nu, [weight])
    payload = {
        "labels": matrix.labels,
        "parabolic": sorted(matrix.context.parabolic),
        "entries": matrix.entries,
        "inverse": matrix.inverse,
    }
    return payload, matrix.to_frame(inverse=args.inverse)


def cmd_theta(args: argparse.Namespace, settings: Settings) -> Result:
    return {"theta": theta(_multipartition(args.lam), _cherednik_params(args))}, None


def cmd_order(args: argparse.Namespace, settings: Settings) -> Result:
    relation = cherednik_order(
        _multipartition(args.lam), _multipartition(args.mu), _cherednik_params(args)
    )
    return {"relation": relation}, None


def cmd_check_identity(args: argparse.Namespace, settings: Settings) -> Result:
    holds = check_theta_pairing_identity(
        _multipartition(args.lam), _multipartition(args.mu), _composition(args.nu), args.kappa
    )
    return {"holds": holds}, None


def cmd_triangle_order(args: argparse.Namespace, settings: Settings) -> Result:
    lam, mu = _multipartition(args.lam), _multipartition(args.mu)
    if args.variant == PiVariant.CHARGE.value:
        _require(args, "s", "e")
        s = _composition(args.s)
        leq = order_triangle_leq(
            charge_weight(lam, s, args.e), charge_weight(mu, s, args.e), s, -args.e,
            settings.node_budget,
        )
    else:
        _require(args, "nu", "kappa")
        leq = triangle_leq_block(lam, mu, _composition(args.nu), args.kappa, settings.node_budget)
    return {"leq": leq}, None


def cmd_jh_order(args: argparse.Namespace, settings: Settings) -> Result:
    nu = _composition(args.nu)
    lam = block_weight(_multipartition(args.lam), nu, args.kappa)
    mu = block_weight(_multipartition(args.mu), nu, args.kappa)
    return {"leq": jordan_holder_leq(lam, mu, nu)}, None


def cmd_dunkl_check(args: argparse.Namespace, settings: Settings) -> Result:
    report = verify_relations(
        args.n, args.l, _dunkl_params(args), args.maxdeg, perturb=args.perturb,
        workers=settings.workers,
    )
    return report.to_json(), None


def cmd_euler_check(args: argparse.Namespace, settings: Settings) -> Result:
    report = euler_grading_check(
        args.n, args.l, _dunkl_params(args), args.maxdeg, workers=settings.workers
    )
    return report.to_json(), None


def cmd_params(args: argparse.Namespace, settings: Settings) -> Result:
    if args.h is not None:
        params = _cherednik_params(args)
    elif args.nu is not None:
        _require(args, "kappa")
        params = params_from_block(_composition(args.nu), args.kappa)
    else:
        _require(args, "s", "e")
        params = params_from_charge(_composition(args.s), args.e)
    return param_convert(params).to_json(), None


def cmd_hypotheses(args: argparse.Namespace, settings: Settings) -> Result:
    return conjecture_hypotheses(args.n, _composition(args.s), args.e).to_json(), None


# =========================================================================
# PARSER
# =========================================================================


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=["json", "csv"], default="json")
    common.add_argument("--cache", default=None, help="KL cache file (default: $FOCKKIT_CACHE)")
    common.add_argument("--budget", type=int, default=None, help="node budget for order searches")
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--log-level", default=None)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockkit", description=__doc__.splitlines()[0], allow_abbrev=False
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    def add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, allow_abbrev=False)
        p.set_defaults(handler=handler)
        return p

    p = add("decode", cmd_decode, "decode an index a into (c, p, r, phi)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--a", type=int, required=True)

    p = add("encode", cmd_encode, "encode (phi, p) into an index a")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--phi", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("bij-a7", cmd_bijection, "wedge tuple to (alpha, nu), or back with --alpha --mu")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--wedge")
    p.add_argument("--alpha")
    p.add_argument("--mu")

    p = add("alpha", cmd_alpha, "alpha(lambda, nu, s)")
    p.add_argument("--nu", required=True)
    p.add_argument("--s", type=_int_flag, required=True)
    p.add_argument("--lambda", dest="lam", type=_int_flag, required=True)

    p = add("underline-alpha", cmd_underline_alpha, "the wedge tuple of a Fock label")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--nu", required=True)
    p.add_argument("--s", type=_int_flag, required=True)
    p.add_argument("--lambda", dest="lam", type=_int_flag, required=True)

    p = add("chevalley", cmd_chevalley, "apply e_a or f_a to a wedge or a Fock label")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--op", required=True, help="f0, e_1, ...")
    p.add_argument("--l", type=int)
    p.add_argument("--wedge")
    p.add_argument("--nu")
    p.add_argument("--s", type=_int_flag)
    p.add_argument("--lambda", dest="lam", type=_int_flag)

    p = add("gminus", cmd_gminus, "expand the canonical vector G(mu)^- in standard vectors")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--s", type=_int_flag, required=True)
    p.add_argument("--lambda", dest="lam", type=_int_flag, required=True)
    p.add_argument("--q-analog", action="store_true")

    p = add("decomp", cmd_decomp, "the matrices Delta^- and Nabla^-")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--matrix", choices=["delta", "nabla"], default="nabla")

    p = add("yvonne", cmd_yvonne, "the matrix Delta^+ by transpose relabeling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--e", type=int, required=True)

    p = add("multiplicities", cmd_multiplicities, "[Delta_lambda : S_mu] from the category O route")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s")
    p.add_argument("--e", type=int)
    p.add_argument("--nu")
    p.add_argument("--kappa")

    p = add("predict", cmd_predict, "predicted decomposition numbers read off Delta^+")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--e", type=int, required=True)

    p = add("kl", cmd_kl, "ordinary Kazhdan-Lusztig polynomial P_{v,w}")
    p.add_argument("--kind", choices=["finite-A", "affine-A"], default="finite-A")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--v", required=True, help="reduced word, e.g. 2,1,3 ('-' for identity)")
    p.add_argument("--w", required=True)

    p = add("pkl", cmd_pkl, "parabolic Kazhdan-Lusztig polynomial P^{J,-1}_{u,w}")
    p.add_argument("--kind", choices=["finite-A", "affine-A"], default="affine-A")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--J", type=_int_flag, default=())
    p.add_argument("--u", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--method", choices=["recursion", "alternating"], default="recursion")

    p = add("charmat", cmd_charmat, "character matrix of the block of Delta_{lambda,nu,kappa}")
    p.add_argument("--nu", required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="JSON, e.g. [[1],[],[],[]]")
    p.add_argument("--inverse", action="store_true", help="CSV of the inverse matrix")

    p = add("theta", cmd_theta, "theta_lambda for parameters (h, H)")
    p.add_argument("--h", required=True)
    p.add_argument("--H", default="")
    p.add_argument("--lambda", dest="lam", required=True)

    p = add("order", cmd_order, "compare Delta_lambda and Delta_mu by theta")
    p.add_argument("--h", required=True)
    p.add_argument("--H", default="")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("check63", cmd_check_identity, "theta difference against the weight pairing")
    p.add_argument("--nu", required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("triangle-order", cmd_triangle_order, "lambda below mu in the order generated by reflections")
    p.add_argument("--variant", choices=[v.value for v in PiVariant], default=PiVariant.BLOCK.value)
    p.add_argument("--nu")
    p.add_argument("--kappa")
    p.add_argument("--s")
    p.add_argument("--e", type=int)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("jh-order", cmd_jh_order, "lambda below mu in the Jordan-Holder order")
    p.add_argument("--nu", required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    for name, handler, help_text in (
        ("dunkl-check", cmd_dunkl_check, "verify the defining relations with Dunkl operators"),
        ("euler-check", cmd_euler_check, "verify the grading by the Euler element"),
    ):
        p = add(name, handler, help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--l", type=int, required=True)
        p.add_argument("--k")
        p.add_argument("--gamma", default="")
        p.add_argument("--h")
        p.add_argument("--H", default="")
        p.add_argument("--maxdeg", type=int, default=3)
        if name == "dunkl-check":
            p.add_argument("--perturb", action="store_true")

    p = add("params", cmd_params, "convert (h, H) to (k, gamma) and root-of-unity exponents")
    p.add_argument("--h")
    p.add_argument("--H", default="")
    p.add_argument("--nu")
    p.add_argument("--kappa")
    p.add_argument("--s")
    p.add_argument("--e", type=int)

    p = add("hypotheses", cmd_hypotheses, "check the hypotheses of the dimension conjecture")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--e", type=int, required=True)

    return parser


# =========================================================================
# ENTRY POINT
# =========================================================================


def _render(payload: Any, frame: pd.DataFrame | None, out: str) -> str:
    if out == "csv":
        if frame is not None:
            return dump_csv(frame)
        return dump_csv(payload_frame(payload), index=False)
    return dump_json(payload) + "\n"


def run(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand; argparse exits with status 2 on flag errors."""
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(
            cache_path=args.cache,
            node_budget=args.budget,
            workers=args.workers,
            log_level=args.log_level,
        )
        logging.basicConfig(level=settings.log_level, format=LOG_FORMAT, stream=sys.stderr)
        configure_cache(settings.cache_path)
        try:
            payload, frame = args.handler(args, settings)
        except ValidationError as exc:
            raise InvalidInput(str(exc)) from exc
        sys.stdout.write(_render(payload, frame, args.out))
    except FockkitError as exc:
        logger.debug("%s failed: %s", args.command, exc)
        sys.stdout.write(json.dumps(exc.to_dict(), sort_keys=True) + "\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
