"""Line-oriented text formats for algebras and bundles.

An algebra file::

    format algebra 1
    field GF 2
    dim 2
    b 1 2 1 1          # [e1, e2] has e1-coefficient 1
    t 1 2 2 1 1        # [[e1, e2, e2]] has e1-coefficient 1

A bundle holds named algebras, sparse action tensors and dense maps::

    format bundle 1
    field Q
    algebra g
      dim 2
      b 1 2 1 1
    end
    algebra h
      dim 2
    end
    rho 1 1 2 1        # rho(e1) eps1 has eps2-coefficient 1
    map r
      1 0
      0 1
    end

Indices are 1-based; omitted entries are zero.  Binary entries and the
first two ternary slots are completed antisymmetrically; giving both
orientations is allowed only when they agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import LieYamagutiAlgebra
from .fields import Field, FieldError, field_from_spec

ACTIONS = {
    # name: (index owners, antisymmetric-in-first-two)
    "rho": ("g", "v", "v"),
    "mu": ("g", "g", "v", "v"),
    "psi": ("h", "g", "g"),
    "nu": ("h", "h", "g", "g"),
}


class ParseError(ValueError):
    def __init__(self, msg, line=None, path=None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {msg}".strip())
        self.msg, self.line, self.path = msg, line, path


def _strip(text):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


class _Sparse:
    """Collects sparse entries with antisymmetric completion in the first two slots."""

    def __init__(self, F, shape, antisym, what):
        self.F, self.shape, self.antisym, self.what = F, shape, antisym, what
        self.given = {}

    def put(self, no, idx, val):
        for i, n in zip(idx, self.shape):
            if not 1 <= i <= n:
                raise ParseError(f"{self.what} index {i} out of range 1..{n}", no)
        idx = tuple(i - 1 for i in idx)
        if idx in self.given:
            raise ParseError(f"duplicate {self.what} entry {' '.join(str(i + 1) for i in idx)}", no)
        if self.antisym:
            if idx[0] == idx[1] and val != 0:
                raise ParseError(f"{self.what} entry with equal antisymmetric indices must be 0", no)
            swapped = (idx[1], idx[0]) + idx[2:]
            if swapped in self.given and self.F.normalize(np.asarray([self.given[swapped][1] + val], dtype=self.F.dtype))[0] != 0:
                raise ParseError(
                    f"inconsistent antisymmetric {self.what} entries "
                    f"{' '.join(str(i + 1) for i in swapped)} and {' '.join(str(i + 1) for i in idx)}",
                    no,
                )
        self.given[idx] = (no, val)

    def array(self):
        F = self.F
        T = F.zeros(self.shape)
        for idx, (_, val) in self.given.items():
            T[idx] = val
            if self.antisym and idx[0] != idx[1]:
                T[(idx[1], idx[0]) + idx[2:]] = -val
        return F.normalize(T)


def _value(F, tok, no):
    try:
        return F.parse(tok)
    except (ValueError, ZeroDivisionError, FieldError) as e:
        raise ParseError(f"bad coefficient {tok!r} for {F}: {e}", no) from None


def _ints(toks, no):
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(f"expected integer indices, got {' '.join(toks)}", no) from None


def _field(toks, no, override):
    spec = " ".join(toks)
    try:
        F = field_from_spec(spec)
    except FieldError as e:
        raise ParseError(str(e), no) from None
    if override is not None and override != F:
        raise ParseError(f"file declares field {F} but {override} was requested", no)
    return F


@dataclass
class _AlgebraBlock:
    dim: int = None
    entries: list = dc_field(default_factory=list)
    line: int = 0


def _build_algebra(F, blk: _AlgebraBlock, name=""):
    if blk.dim is None:
        raise ParseError("missing dim", blk.line)
    n = blk.dim
    c = _Sparse(F, (n, n, n), True, "binary")
    t = _Sparse(F, (n, n, n, n), True, "ternary")
    for no, kind, idx, val in blk.entries:
        (c if kind == "b" else t).put(no, idx, val)
    return LieYamagutiAlgebra(F, c.array(), t.array(), name=name)


def _algebra_line(F, blk, no, toks):
    key = toks[0]
    if key == "dim":
        if len(toks) != 2 or blk.dim is not None:
            raise ParseError("dim must be given once as 'dim n'", no)
        (d,) = _ints(toks[1:], no)
        if d < 0:
            raise ParseError("dimension must be non-negative", no)
        blk.dim = d
        return True
    if key in ("b", "t"):
        arity = 3 if key == "b" else 4
        if len(toks) != arity + 2:
            raise ParseError(f"'{key}' entry needs {arity} indices and a coefficient", no)
        if blk.dim is None:
            raise ParseError("dim must come before entries", no)
        blk.entries.append((no, key, _ints(toks[1:-1], no), _value(F, toks[-1], no)))
        return True
    return False


def parse_algebra(text: str, field: Field = None, path=None) -> LieYamagutiAlgebra:
    """Parse an algebra file into an (unvalidated) candidate."""
    F = field
    blk = _AlgebraBlock()
    seen_format = False
    try:
        for no, toks in _strip(text):
            if toks[0] == "format":
                if toks[1:] != ["algebra", "1"]:
                    raise ParseError(f"unsupported format line {' '.join(toks)}", no)
                seen_format = True
            elif toks[0] == "field":
                F = _field(toks[1:], no, field)
            elif F is None:
                raise ParseError("field must be declared before contents", no)
            elif not _algebra_line(F, blk, no, toks):
                raise ParseError(f"unknown line {' '.join(toks)!r}", no)
        if not seen_format:
            raise ParseError("missing 'format algebra 1' header", 1)
        if F is None:
            raise ParseError("no field declared", 1)
        return _build_algebra(F, blk)
    except ParseError as e:
        if path is not None:
            raise ParseError(e.msg, e.line, path) from None
        raise


@dataclass
class Bundle:
    F: Field
    algebras: dict
    module_dim: int = None
    actions: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)

    def algebra(self, name):
        if name not in self.algebras:
            raise ParseError(f"bundle has no algebra {name!r}")
        return self.algebras[name]

    def map(self, name):
        if name not in self.maps:
            raise ParseError(f"bundle has no map {name!r}")
        return self.maps[name]

    def action(self, name):
        return self.actions[name]

    def matched_pair(self):
        from .matched_pairs import MatchedPair

        g, h = self.algebra("g"), self.algebra("h")
        a = self.actions
        return MatchedPair(g, h, a["rho"], a["mu"], a["psi"], a["nu"])

    def representation(self):
        from .representations import Representation

        return Representation(self.algebra("g"), self.actions["rho"], self.actions["mu"])


def parse_bundle(text: str, field: Field = None, path=None) -> Bundle:
    F = field
    blocks = {}
    current = None
    cur_map = None
    sparse = {}
    module_dim = None
    maps = {}
    seen_format = False
    pending = []  # action entries, resolved once dimensions are known
    try:
        for no, toks in _strip(text):
            key = toks[0]
            if cur_map is not None:
                name, rows, start = cur_map
                if key == "end":
                    maps[name] = (start, rows)
                    cur_map = None
                else:
                    rows.append((no, [_value(F, v, no) for v in toks]))
                continue
            if current is not None:
                name, blk = current
                if key == "end":
                    current = None
                elif not _algebra_line(F, blk, no, toks):
                    raise ParseError(f"unknown line in algebra block {' '.join(toks)!r}", no)
                continue
            if key == "format":
                if toks[1:] != ["bundle", "1"]:
                    raise ParseError(f"unsupported format line {' '.join(toks)}", no)
                seen_format = True
            elif key == "field":
                F = _field(toks[1:], no, field)
            elif F is None:
                raise ParseError("field must be declared before contents", no)
            elif key == "algebra":
                if len(toks) != 2 or toks[1] in blocks:
                    raise ParseError("algebra blocks need a unique name", no)
                blk = _AlgebraBlock(line=no)
                blocks[toks[1]] = blk
                current = (toks[1], blk)
            elif key == "module":
                if len(toks) != 3 or toks[1] != "dim":
                    raise ParseError("expected 'module dim m'", no)
                (module_dim,) = _ints(toks[2:], no)
            elif key == "map":
                if len(toks) != 2 or toks[1] in maps:
                    raise ParseError("map blocks need a unique name", no)
                cur_map = (toks[1], [], no)
            elif key in ACTIONS:
                arity = len(ACTIONS[key])
                if len(toks) != arity + 2:
                    raise ParseError(f"'{key}' entry needs {arity} indices and a coefficient", no)
                pending.append((no, key, _ints(toks[1:-1], no), _value(F, toks[-1], no)))
            else:
                raise ParseError(f"unknown line {' '.join(toks)!r}", no)
        if current is not None or cur_map is not None:
            raise ParseError("unterminated block (missing 'end')")
        if not seen_format:
            raise ParseError("missing 'format bundle 1' header", 1)
        if F is None:
            raise ParseError("no field declared", 1)
        algebras = {name: _build_algebra(F, blk, name) for name, blk in blocks.items()}
        dims = {name: A.dim for name, A in algebras.items()}
        if "g" in dims:
            vdim = module_dim if module_dim is not None else dims.get("h")
            own = {"g": dims["g"], "h": dims.get("h"), "v": vdim}
            for name, owners in ACTIONS.items():
                if any(own[o] is None for o in owners):
                    continue
                shape = tuple(own[o] for o in owners)
                sparse[name] = _Sparse(F, shape, False, name)
        for no, key, idx, val in pending:
            if key not in sparse:
                raise ParseError(f"'{key}' entries need the algebras they refer to", no)
            sparse[key].put(no, idx, val)
        actions = {name: sp.array() for name, sp in sparse.items()}
        out_maps = {}
        for name, (start, rows) in maps.items():
            widths = {len(r) for _, r in rows}
            if len(widths) > 1:
                raise ParseError(f"map {name!r} has rows of different lengths", start)
            M = F.array([r for _, r in rows]) if rows else F.zeros((0, 0))
            out_maps[name] = M
        return Bundle(F, algebras, module_dim, actions, out_maps)
    except ParseError as e:
        if path is not None:
            raise ParseError(e.msg, e.line, path) from None
        raise


# serialization


def _entries(F, T, key, antisym=True):
    out = []
    for idx in zip(*np.nonzero(np.asarray(T) != 0)):
        idx = tuple(int(i) for i in idx)
        if antisym and idx[0] > idx[1]:
            continue
        out.append(f"{key} {' '.join(str(i + 1) for i in idx)} {F.format(T[idx])}")
    return out


def _algebra_body(A: LieYamagutiAlgebra):
    return [f"dim {A.dim}"] + _entries(A.F, A.c, "b") + _entries(A.F, A.t, "t")


def serialize_algebra(A: LieYamagutiAlgebra) -> str:
    lines = ["format algebra 1", f"field {field_spec(A.F)}"] + _algebra_body(A)
    return "\n".join(lines) + "\n"


def field_spec(F):
    return "Q" if F.char == 0 else f"GF {F.char}"


def serialize_matrix(F, M):
    return ["  " + " ".join(F.format(v) for v in row) for row in np.asarray(M)]


def serialize_bundle(F, algebras: dict, actions: dict = None, maps: dict = None, module_dim=None) -> str:
    lines = ["format bundle 1", f"field {field_spec(F)}"]
    for name, A in algebras.items():
        lines.append(f"algebra {name}")
        lines += ["  " + s for s in _algebra_body(A)]
        lines.append("end")
    if module_dim is not None:
        lines.append(f"module dim {module_dim}")
    for name in ACTIONS:
        if actions and name in actions:
            lines += _entries(F, actions[name], name, antisym=False)
    for name, M in (maps or {}).items():
        lines.append(f"map {name}")
        lines += serialize_matrix(F, M)
        lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_matched_pair(mp, maps=None) -> str:
    acts = {"rho": mp.R, "mu": mp.Mu, "psi": mp.Psi, "nu": mp.Nu}
    return serialize_bundle(mp.F, {"g": mp.g, "h": mp.h}, acts, maps)


def read_text(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_algebra(path, field=None):
    return parse_algebra(read_text(path), field, path=str(path))


def load_bundle(path, field=None):
    return parse_bundle(read_text(path), field, path=str(path))
