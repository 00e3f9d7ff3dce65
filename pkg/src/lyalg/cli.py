"""Command line front end: ``lyalg COMMAND FILE [options]``.

Exit status is 0 when the check passes (or the computation succeeds), 1 when
a mathematical property fails and 2 on unusable input.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import io
from .algebra import check_ly_axioms
from .cohomology import cohomology_dims, defmap_cohomology_dims
from .deformation import (
    DEFAULT_BUDGET,
    check_deformation_map,
    classify_complements,
    enumerate_deformation_maps,
)
from .fields import FieldError, field_from_spec
from .linfty import VData, derived_brackets, mc_check_pi, mc_equation, twist
from .lts import (
    LieTripleSystem,
    LtsMatchedPair,
    check_lts,
    check_lts_deformation_map,
    check_lts_matched_pair,
    lts_bicrossed,
)
from .matched_pairs import Inclusion, bicrossed, canonical_matched_pair, check_matched_pair
from .report import Report, StructureError
from .representations import Representation, adjoint, check_representation

PASS, FAIL, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _matrix_lines(F, M, indent="  "):
    return [indent + " ".join(F.format(v) for v in row) for row in np.asarray(M)]


def _cochain_lines(F, C):
    """Nonzero entries of a cochain, 1-based, I part before II part."""
    out = []
    for part, T in (("I", C.I), ("II", C.II)):
        if T is None:
            continue
        T = np.asarray(T)
        for idx in zip(*np.nonzero(T != 0)):
            out.append(f"  {part}[{' '.join(str(int(i) + 1) for i in idx)}] = {F.format(T[idx])}")
    return out


def _report(out, rep: Report, F):
    out.extend(rep.lines(F))
    return PASS if rep else FAIL


# loaders


def _field(args):
    return field_from_spec(args.field) if args.field else None


def _path(args):
    p = args.file
    if not os.path.exists(p) and args.fixtures_dir:
        cand = os.path.join(args.fixtures_dir, p)
        if os.path.exists(cand):
            return cand
    return p


def _is_bundle(text):
    for line in text.splitlines():
        toks = line.split("#", 1)[0].split()
        if toks:
            return toks[:2] == ["format", "bundle"]
    return False


def _load(args):
    path = _path(args)
    try:
        text = io.read_text(path)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    if _is_bundle(text):
        return io.parse_bundle(text, _field(args), path=path)
    return io.parse_algebra(text, _field(args), path=path)


def _algebra(args):
    obj = _load(args)
    if isinstance(obj, io.Bundle):
        names = list(obj.algebras)
        if len(names) != 1:
            raise InputError("expected a single algebra")
        return obj.algebras[names[0]]
    return obj


def _bundle(args, *needs):
    obj = _load(args)
    if not isinstance(obj, io.Bundle):
        raise InputError("this command needs a bundle file")
    for n in needs:
        if n in ("g", "h", "E"):
            obj.algebra(n)
        elif n in io.ACTIONS:
            if n not in obj.actions:
                raise InputError(f"bundle has no {n} data")
        else:
            obj.map(n)
    return obj


def _pair(args, *maps):
    b = _bundle(args, "g", "h", *maps)
    return b, b.matched_pair()


def _valid_pair(args, *maps):
    b, mp = _pair(args, *maps)
    rep = check_matched_pair(mp, full=True)
    if not rep:
        raise StructureError("not a matched pair: " + "; ".join(rep.failed_names()), rep)
    return b, mp.validate()


def _map(b, name, shape):
    M = b.map(name)
    if M.shape != shape:
        raise InputError(f"map {name} has shape {M.shape}, expected {shape}")
    return M


def _as_lts(A):
    if np.any(np.asarray(A.c) != 0):
        raise InputError("a Lie triple system must have zero binary bracket")
    return LieTripleSystem(A.F, A.t)


def _lts_pair(args, *maps):
    b = _bundle(args, "g", "h", "mu", "nu", *maps)
    return b, LtsMatchedPair(_as_lts(b.algebra("g")), _as_lts(b.algebra("h")), b.actions["mu"], b.actions["nu"])


# commands


def cmd_check_ly(args, out):
    A = _algebra(args)
    return _report(out, check_ly_axioms(A), A.F)


def cmd_check_rep(args, out):
    b = _bundle(args, "g", "rho", "mu")
    rep = Representation(b.algebra("g"), b.actions["rho"], b.actions["mu"])
    return _report(out, check_representation(rep), b.F)


def cmd_check_mp(args, out):
    _, mp = _pair(args)
    return _report(out, check_matched_pair(mp, full=True), mp.F)


def cmd_bicrossed(args, out):
    _, mp = _valid_pair(args)
    out.append(io.serialize_algebra(bicrossed(mp)).rstrip("\n"))
    return PASS


def _inclusion(args):
    b = _bundle(args, "E", "g_span", "h_span")
    return Inclusion(b.algebra("E"), b.map("g_span"), b.map("h_span"))


def cmd_canonical_mp(args, out):
    mp = canonical_matched_pair(_inclusion(args))
    out.append(io.serialize_matched_pair(mp).rstrip("\n"))
    return PASS


def cmd_check_defmap(args, out):
    b, mp = _valid_pair(args, "r")
    r = _map(b, "r", (mp.g.dim, mp.h.dim))
    return _report(out, check_deformation_map(mp, r), mp.F)


def cmd_enumerate_defmaps(args, out):
    _, mp = _valid_pair(args)
    maps = enumerate_deformation_maps(mp, args.budget)
    out.append(f"{len(maps)} deformation maps")
    for i, d in enumerate(maps, 1):
        out.append(f"map {i}")
        out.extend(_matrix_lines(mp.F, d.r))
    return PASS


def cmd_classify_complements(args, out):
    census = classify_complements(_inclusion(args), args.budget)
    F = census.matched_pair.F
    out.append(f"{len(census.maps)} deformation maps")
    for i, d in enumerate(census.maps, 1):
        out.append(f"map {i}")
        out.extend(_matrix_lines(F, d.r))
    out.append(f"{len(census.classes)} classes")
    for cls in census.classes:
        out.append("  {" + ", ".join(str(i + 1) for i in cls) + "}")
    out.append(f"factorization index {census.factorization_index}")
    return PASS


def _dims_lines(dims):
    return [f"H^{n} {d}" for n, d in dims]


def cmd_cohomology(args, out):
    obj = _load(args)
    if isinstance(obj, io.Bundle):
        b = _bundle(args, "g", "rho", "mu")
        rep = Representation(b.algebra("g"), b.actions["rho"], b.actions["mu"]).validate()
        A = rep.algebra
    else:
        A = obj.validate()
        rep = adjoint(A)
    out.extend(_dims_lines(cohomology_dims(A.validate(), rep, args.max_degree)))
    return PASS


def cmd_defmap_cohomology(args, out):
    b, mp = _valid_pair(args, "r")
    r = _map(b, "r", (mp.g.dim, mp.h.dim))
    out.extend(_dims_lines(defmap_cohomology_dims(mp, r, args.max_degree)))
    return PASS


def cmd_mc_check(args, out):
    A = _algebra(args)
    ok = mc_check_pi(A)
    out.append("pi squares to zero" if ok else "pi does not square to zero")
    return PASS if ok else FAIL


def cmd_derived_brackets(args, out):
    _, mp = _valid_pair(args)
    ls = derived_brackets(VData(mp))
    vd, F = ls.vd, mp.F
    basis = list(vd.basis(0))
    out.append(f"degree 0 has dimension {len(basis)}")
    for i, P in enumerate(basis, 1):
        lines = _cochain_lines(F, ls.l1(P))
        if lines:
            out.append(f"l1(b{i})")
            out.extend(lines)
    for i, P in enumerate(basis, 1):
        for j, Q in enumerate(basis[i - 1:], i):
            lines = _cochain_lines(F, ls.l2(P, Q))
            if lines:
                out.append(f"l2(b{i}, b{j})")
                out.extend(lines)
    for i, P in enumerate(basis, 1):
        for j, Q in enumerate(basis[i - 1:], i):
            for k, S in enumerate(basis[j - 1:], j):
                lines = _cochain_lines(F, ls.l3(P, Q, S))
                if lines:
                    out.append(f"l3(b{i}, b{j}, b{k})")
                    out.extend(lines)
    return PASS


def cmd_mc_equation(args, out):
    b, mp = _valid_pair(args, "r")
    r = _map(b, "r", (mp.g.dim, mp.h.dim))
    res = mc_equation(derived_brackets(VData(mp)), r)
    lines = _cochain_lines(mp.F, res)
    if lines:
        out.append("Maurer-Cartan residual")
        out.extend(lines)
        return FAIL
    out.append("r solves the Maurer-Cartan equation")
    return PASS


def cmd_twist_check(args, out):
    b, mp = _valid_pair(args, "r", "r2")
    shape = (mp.g.dim, mp.h.dim)
    r, r2 = _map(b, "r", shape), _map(b, "r2", shape)
    base = derived_brackets(VData(mp))
    F = mp.F
    lhs = mc_equation(twist(base, r), r2)
    rhs = mc_equation(base, F.normalize(r + r2))
    if not np.array_equal(lhs.flat(), rhs.flat()):
        out.append("twisted and shifted Maurer-Cartan residuals differ")
        return FAIL
    out.append("twisted residual at r2 equals base residual at r + r2")
    ok = not np.any(lhs.flat() != 0)
    out.append("r + r2 is a deformation map" if ok else "r + r2 is not a deformation map")
    return PASS


def cmd_lts_check(args, out):
    s = _as_lts(_algebra(args))
    return _report(out, check_lts(s), s.F)


def cmd_lts_check_mp(args, out):
    _, pair = _lts_pair(args)
    return _report(out, check_lts_matched_pair(pair.g, pair.h, pair.Mu, pair.Nu), pair.F)


def cmd_lts_bicrossed(args, out):
    _, pair = _lts_pair(args)
    rep = check_lts_matched_pair(pair.g, pair.h, pair.Mu, pair.Nu)
    if not rep:
        raise StructureError("not an LTS matched pair: " + "; ".join(rep.failed_names()), rep)
    s = lts_bicrossed(pair)
    out.append(io.serialize_algebra(s.as_ly()).rstrip("\n"))
    return PASS


def cmd_lts_check_defmap(args, out):
    b, pair = _lts_pair(args, "r")
    r = _map(b, "r", (pair.g.dim, pair.h.dim))
    return _report(out, check_lts_deformation_map(pair, r), pair.F)


COMMANDS = {
    "check-ly": (cmd_check_ly, "check the Lie-Yamaguti axioms of an algebra"),
    "check-rep": (cmd_check_rep, "check a representation (g, rho, mu) from a bundle"),
    "check-mp": (cmd_check_mp, "check the matched pair conditions of a bundle"),
    "bicrossed": (cmd_bicrossed, "print the bicrossed product of a matched pair"),
    "canonical-mp": (cmd_canonical_mp, "extract the matched pair of E = g + h from spans"),
    "check-defmap": (cmd_check_defmap, "check that map r is a deformation map"),
    "enumerate-defmaps": (cmd_enumerate_defmaps, "list all deformation maps over GF(p)"),
    "classify-complements": (cmd_classify_complements, "classify the complements of g in E"),
    "cohomology": (cmd_cohomology, "cohomology dimensions with adjoint or bundle coefficients"),
    "defmap-cohomology": (cmd_defmap_cohomology, "cohomology dimensions of a deformation map"),
    "mc-check": (cmd_mc_check, "test whether the structure element squares to zero"),
    "derived-brackets": (cmd_derived_brackets, "print l1, l2, l3 on degree-0 basis elements"),
    "mc-equation": (cmd_mc_equation, "evaluate the Maurer-Cartan equation at map r"),
    "twist-check": (cmd_twist_check, "compare the twisted equation at r2 with the base one at r + r2"),
    "lts-check": (cmd_lts_check, "check the Lie triple system axioms"),
    "lts-check-mp": (cmd_lts_check_mp, "check a matched pair of Lie triple systems"),
    "lts-bicrossed": (cmd_lts_bicrossed, "print the bicrossed Lie triple system"),
    "lts-check-defmap": (cmd_lts_check_defmap, "check an LTS deformation map r"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser():
    p = _Parser(prog="lyalg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="algebra or bundle file")
        sp.add_argument("--field", help="override or assert the field, e.g. Q or 'GF 5'")
        sp.add_argument("--max-degree", type=int, default=3, help="cohomology ceiling (default 3)")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration cap on candidate maps")
        sp.add_argument("--fixtures-dir", help="directory searched for FILE when it is not found as given")
    return p


def run_command(argv):
    """Run one command; return (exit status, report text)."""
    out = []
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise InputError("missing command")
        status = COMMANDS[args.command][0](args, out)
    except InputError as e:
        return BAD_INPUT, f"error: {e}\n"
    except (io.ParseError, FieldError, ValueError) as e:
        if isinstance(e, StructureError):
            lines = [f"invalid input structure: {e}"]
            if e.report is not None:
                lines += e.report.lines()
            return BAD_INPUT, "\n".join(lines) + "\n"
        return BAD_INPUT, f"error: {e}\n"
    return status, "\n".join(out) + "\n"


def main(argv=None):
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status != BAD_INPUT else sys.stderr
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
