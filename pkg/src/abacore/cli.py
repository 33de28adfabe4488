"""Command-line front end.

Every library operation is exposed as a subcommand with ``--json`` and
plain-text output.  Exit codes: 0 on success, 2 when a value is outside an
operation's domain (the library error message is printed verbatim), 1 for
usage errors.

Value syntax on the command line: partitions are comma-separated parts
("6,3,2,1,1"), multipartitions join components with '|' ("3,1|2,1", with
"-" or the empty string for an empty component), charge tuples are
comma-separated integers, group words are space-separated tokens
("s1 t T").  Tokens starting with a minus sign are accepted as flag values
without escaping.
"""

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

from .abacus import render_abacus
from .actions import (
    act_charge_e,
    act_charge_l,
    duality_transport,
    psi,
    sigma_ordinary,
    sigma_star,
)
from .blocks import (
    BlockId,
    block_action,
    block_id,
    blocks_of,
    is_scopes,
    orbit_equivalent,
    realize_multicharge,
    reachable_multicharges,
    uglov_set,
)
from .nodes import boundary_nodes, i_signature
from .partitions import Symbol
from .quotients import (
    core_data,
    generalized_core,
    is_core,
    level_rank_transpose,
    tau_e,
    tau_e_inverse,
    tau_l,
    tau_l_inverse,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _ints(text, what):
    out = []
    for tok in str(text).split(","):
        tok = tok.strip()
        if not tok:
            raise UsageError(f"empty entry in {what}: {text!r}")
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"invalid {what}: {tok!r}") from None
    return tuple(out)


def parse_partition(text):
    text = str(text).strip()
    if text in ("", "-"):
        return ()
    return _ints(text, "partition part")


def parse_mp(text):
    return tuple(parse_partition(c) for c in str(text).split("|"))


def parse_charges(text):
    return _ints(text, "charge")


def parse_window(text):
    lo, sep, hi = str(text).partition(":")
    if not sep:
        raise UsageError(f"window must look like lo:hi, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"window must look like lo:hi, got {text!r}") from None


def _merge_negative_values(argv):
    """Join "--flag" "-3,1" into "--flag=-3,1" so argparse accepts it."""
    out = []
    skip = False
    for pos, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[pos + 1] if pos + 1 < len(argv) else None
        if (
            tok.startswith("--")
            and "=" not in tok
            and nxt is not None
            and nxt.startswith("-")
            and (len(nxt) == 1 or nxt[1].isdigit() or nxt[1] in ",|-")
        ):
            out.append(f"{tok}={nxt}")
            skip = True
        else:
            out.append(tok)
    return out


def _plist(p):
    return [int(x) for x in p]


def _pmp(mp):
    return [_plist(c) for c in mp]


def _node_json(node):
    if node is None:
        return None
    return {"row": node.row, "col": node.col, "comp": node.comp}


def _block_json(b):
    return {
        "core_multicharge": _plist(b.core_multicharge),
        "weight": b.weight,
        "e": b.e,
        "l": b.l,
        "m": b.m,
    }


def _text_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (int, str)):
        return str(v)
    if isinstance(v, dict):
        if set(v) == {"row", "col", "comp"}:
            return f"({v['row']},{v['col']},{v['comp']})"
        return " ".join(f"{k}={_text_value(x)}" for k, x in v.items())
    items = list(v)
    if not items:
        return "-"
    if all(isinstance(x, int) for x in items):
        return ",".join(str(x) for x in items)
    if all(
        isinstance(x, (list, tuple)) and all(isinstance(y, int) for y in x)
        for x in items
    ):
        return "|".join(",".join(str(y) for y in x) or "-" for x in items)
    return "; ".join(_text_value(x) for x in items)


def _text_lines(payload):
    return "\n".join(f"{k}: {_text_value(v)}" for k, v in payload.items())


def _cmd_core(a):
    data = core_data(parse_partition(a.partition), a.m, a.e)
    return {
        "core_multicharge": _plist(data.core_multicharge),
        "core_partition": _plist(data.core_partition),
        "weight": data.weight,
    }


def _cmd_quotient(a):
    quotient, charges = tau_e(parse_partition(a.partition), a.m, a.e)
    return {"quotient": _pmp(quotient), "core_multicharge": _plist(charges)}


def _cmd_uglov(a):
    mp, charges = tau_l(parse_partition(a.partition), a.m, a.e, a.l)
    return {"mp": _pmp(mp), "charges": _plist(charges)}


def _cmd_from_quotient(a):
    p, m = tau_e_inverse(parse_mp(a.quotient), parse_charges(a.charges))
    return {"partition": _plist(p), "m": m}


def _cmd_transpose(a):
    mp_e, s_e = level_rank_transpose(parse_mp(a.mp), parse_charges(a.charges), a.e)
    return {"mp": _pmp(mp_e), "charges": _plist(s_e)}


def _cmd_gencore(a):
    g = generalized_core(parse_mp(a.mp), parse_charges(a.charges), a.e)
    return {
        "core_mp": _pmp(g.core_mp),
        "core_charges": _plist(g.core_charges),
        "weight": g.weight,
    }


def _cmd_weight(a):
    g = generalized_core(parse_mp(a.mp), parse_charges(a.charges), a.e)
    return {"weight": g.weight}


def _cmd_iscore(a):
    return {"is_core": is_core(parse_mp(a.mp), parse_charges(a.charges), a.e)}


def _cmd_nodes(a):
    mp, charges = parse_mp(a.mp), parse_charges(a.charges)
    addable, removable = boundary_nodes(mp, charges, a.e, a.i)
    sig = i_signature(mp, charges, a.e, a.i)
    return {
        "addable": [_node_json(n) for n in addable],
        "removable": [_node_json(n) for n in removable],
        "word": sig.word,
        "reduced": sig.reduced_word,
        "good_addable": _node_json(sig.good_addable),
        "good_removable": _node_json(sig.good_removable),
    }


def _cmd_render(a):
    mp, charges = parse_mp(a.mp), parse_charges(a.charges)
    if len(charges) != len(mp):
        raise ValueError("charges do not match the number of components")
    if a.window is not None:
        lo, hi = parse_window(a.window)
    else:
        lo = min(s - len(p) for p, s in zip(mp, charges)) - 2
        hi = max(s - 1 + (p[0] if p else 0) for p, s in zip(mp, charges)) + 2
    art = render_abacus([Symbol(p, s) for p, s in zip(mp, charges)], (lo, hi))
    return {"window": [lo, hi], "lines": art.split("\n")}, art


def _cmd_act_e(a):
    return {"charges": _plist(act_charge_e(a.word, parse_charges(a.charges), a.l))}


def _cmd_act_l(a):
    return {"charges": _plist(act_charge_l(parse_charges(a.charges), a.word, a.e))}


def _cmd_psi(a):
    mp, charges = psi(parse_mp(a.mp), parse_charges(a.charges), a.word, a.e)
    return {"mp": _pmp(mp), "charges": _plist(charges)}


def _cmd_sigma(a):
    mp = sigma_ordinary(a.i, parse_mp(a.mp), parse_charges(a.charges), a.e)
    return {"mp": _pmp(mp)}


def _cmd_star(a):
    mp = sigma_star(a.i, parse_mp(a.mp), parse_charges(a.charges), a.e)
    return {"mp": _pmp(mp)}


def _cmd_duality_check(a):
    mp, charges = parse_mp(a.mp), parse_charges(a.charges)
    star = sigma_star(a.i, mp, charges, a.e)
    transport = duality_transport(a.i, mp, charges, a.e)
    return {
        "star": _pmp(star),
        "transport": _pmp(transport),
        "agree": star == transport,
    }


def _cmd_block(a):
    return _block_json(block_id(parse_mp(a.mp), parse_charges(a.charges), a.e))


def _cmd_blocks(a):
    decomposition = blocks_of(a.n, parse_charges(a.charges), a.e)
    payload = [
        {"block": _block_json(b), "members": [_pmp(mp) for mp in members]}
        for b, members in decomposition.items()
    ]
    lines = []
    for entry in payload:
        lines.append(f"block: {_text_value(entry['block'])}")
        for mp in entry["members"]:
            lines.append("  " + _text_value(mp))
    return payload, "\n".join(lines)


def _cmd_uglov_set(a):
    members = sorted(uglov_set(parse_charges(a.charges), a.e, a.n))
    payload = {"size": len(members), "members": [_pmp(mp) for mp in members]}
    lines = [f"size: {len(members)}"]
    lines.extend(_text_value(_pmp(mp)) for mp in members)
    return payload, "\n".join(lines)


def _mk_block(core_text, weight, e, l):
    core = parse_charges(core_text)
    return BlockId(core, weight, e, l, sum(core))


def _cmd_scopes(a):
    b = _mk_block(a.core, a.weight, a.e, a.l)
    return {"scopes": is_scopes(b, a.i, a.l)}


def _cmd_block_act(a):
    b = _mk_block(a.core, a.weight, a.e, a.l)
    return _block_json(block_action(a.word, b, a.l))


def _cmd_orbit_eq(a):
    b1 = _mk_block(a.core_a, a.weight_a, a.e, a.l)
    b2 = _mk_block(a.core_b, a.weight_b, a.e, a.l)
    return {"equivalent": orbit_equivalent(b1, b2, a.l)}


def _cmd_realize(a):
    start = parse_charges(a.start)
    witness = realize_multicharge(start, parse_charges(a.target), a.e)
    g = generalized_core(witness, start, a.e)
    return {
        "witness": _pmp(witness),
        "core_charges": _plist(g.core_charges),
        "weight": g.weight,
    }


def _cmd_reachable(a):
    found = sorted(reachable_multicharges(parse_charges(a.start), a.e, a.bound))
    payload = {"size": len(found), "charges": [_plist(c) for c in found]}
    lines = [f"size: {len(found)}"]
    lines.extend(_text_value(_plist(c)) for c in found)
    return payload, "\n".join(lines)


def _build_parser():
    parser = _Parser(prog="abacore", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def cmd(name, handler, help_text, *flags):
        p = sub.add_parser(name, help=help_text, description=help_text)
        for args, kwargs in flags:
            p.add_argument(*args, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(handler=handler)
        return p

    def flag(name, **kwargs):
        return ((name,), kwargs)

    f_e = flag("--e", type=int, required=True, help="modulus (at least 2)")
    f_l = flag("--l", type=int, required=True, help="level")
    f_m = flag("--m", type=int, default=0, help="charge of the partition (default 0)")
    f_i = flag("--i", type=int, required=True, help="residue")
    f_partition = flag("--partition", required=True, help="partition, e.g. 6,3,2,1,1")
    f_mp = flag("--mp", required=True, help="multipartition, e.g. 3,1|2,1")
    f_charges = flag("--charges", required=True, help="charge tuple, e.g. 0,-1,1")
    f_word = flag("--word", required=True, help="group word, e.g. 's1 t T'")
    f_weight = flag("--weight", type=int, default=0, help="block weight (default 0)")

    cmd("core", _cmd_core, "e-core data of a charged partition", f_partition, f_m, f_e)
    cmd(
        "quotient",
        _cmd_quotient,
        "e-quotient and core charges of a charged partition",
        f_partition,
        f_m,
        f_e,
    )
    cmd(
        "uglov",
        _cmd_uglov,
        "level-l decomposition of a charged partition",
        f_partition,
        f_m,
        f_e,
        f_l,
    )
    cmd(
        "from-quotient",
        _cmd_from_quotient,
        "rebuild the charged partition from an e-quotient and core charges",
        flag("--quotient", required=True, help="e-quotient, e.g. 2,1|2|2,1,1"),
        f_charges,
    )
    cmd(
        "transpose",
        _cmd_transpose,
        "level-rank transpose of a charged multipartition",
        f_mp,
        f_charges,
        f_e,
    )
    cmd(
        "gencore",
        _cmd_gencore,
        "generalized e-core, core charges and weight",
        f_mp,
        f_charges,
        f_e,
    )
    cmd("weight", _cmd_weight, "generalized-core weight", f_mp, f_charges, f_e)
    cmd("iscore", _cmd_iscore, "test whether the multipartition is a core", f_mp, f_charges, f_e)
    cmd(
        "nodes",
        _cmd_nodes,
        "addable/removable i-nodes, signature and good nodes",
        f_mp,
        f_charges,
        f_e,
        f_i,
    )
    cmd(
        "render",
        _cmd_render,
        "draw the abacus of a charged multipartition",
        f_mp,
        f_charges,
        flag("--window", help="position window lo:hi (default: around the beads)"),
    )
    cmd(
        "act-e",
        _cmd_act_e,
        "left action of a group word on an e-charge tuple",
        f_word,
        f_charges,
        f_l,
    )
    cmd(
        "act-l",
        _cmd_act_l,
        "right action of a group word on an l-charge tuple",
        f_word,
        f_charges,
        f_e,
    )
    cmd(
        "psi",
        _cmd_psi,
        "component-level action of a group word on a charged multipartition",
        f_word,
        f_mp,
        f_charges,
        f_e,
    )
    cmd(
        "sigma",
        _cmd_sigma,
        "toggle all addable and removable i-nodes",
        f_i,
        f_mp,
        f_charges,
        f_e,
    )
    cmd(
        "star",
        _cmd_star,
        "crystal-side involution at residue i",
        f_i,
        f_mp,
        f_charges,
        f_e,
    )
    cmd(
        "duality-check",
        _cmd_duality_check,
        "compare the crystal-side involution with its transpose-side transport",
        f_i,
        f_mp,
        f_charges,
        f_e,
    )
    cmd("block", _cmd_block, "block label of a charged multipartition", f_mp, f_charges, f_e)
    cmd(
        "blocks",
        _cmd_blocks,
        "decompose all multipartitions of size n into blocks",
        flag("--n", type=int, required=True, help="total size"),
        f_charges,
        f_e,
    )
    cmd(
        "uglov-set",
        _cmd_uglov_set,
        "multipartitions of size n reachable by adding good nodes",
        f_charges,
        f_e,
        flag("--n", type=int, required=True, help="total size"),
    )
    cmd(
        "scopes",
        _cmd_scopes,
        "charge-gap test for blocks without addable i-nodes",
        flag("--core", required=True, help="core charge tuple"),
        f_weight,
        f_e,
        f_l,
        f_i,
    )
    cmd(
        "block-act",
        _cmd_block_act,
        "act on a block label by a group word",
        f_word,
        flag("--core", required=True, help="core charge tuple"),
        f_weight,
        f_e,
        f_l,
    )
    cmd(
        "orbit-eq",
        _cmd_orbit_eq,
        "whether two block labels lie in one orbit of the swap generators",
        flag("--core-a", required=True, help="first core charge tuple"),
        flag("--core-b", required=True, help="second core charge tuple"),
        flag("--weight-a", type=int, default=0, help="first block weight (default 0)"),
        flag("--weight-b", type=int, default=0, help="second block weight (default 0)"),
        f_e,
        f_l,
    )
    cmd(
        "realize",
        _cmd_realize,
        "multipartition charged at start whose core charges equal target",
        flag("--start", required=True, help="starting charge tuple"),
        flag("--target", required=True, help="target core charge tuple"),
        f_e,
    )
    cmd(
        "reachable",
        _cmd_reachable,
        "core charge tuples of all multipartitions up to a size bound",
        flag("--start", required=True, help="starting charge tuple"),
        f_e,
        flag("--bound", type=int, required=True, help="largest multipartition size"),
    )
    return parser


def run(argv):
    """Execute one CLI invocation; returns (exit code, output text)."""
    argv = _merge_negative_values([str(t) for t in argv])
    parser = _build_parser()
    buf = io.StringIO()
    try:
        with redirect_stdout(buf), redirect_stderr(buf):
            args = parser.parse_args(argv)
    except UsageError as exc:
        return 1, str(exc)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 0
        return (0 if code == 0 else 1), buf.getvalue().rstrip("\n")
    try:
        result = args.handler(args)
    except UsageError as exc:
        return 1, str(exc)
    except ValueError as exc:
        return 2, str(exc)
    payload, text = result if isinstance(result, tuple) else (result, None)
    if args.json:
        return 0, json.dumps(payload, separators=(",", ":"))
    if text is None:
        text = _text_lines(payload)
    return 0, text


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text)
    return code
