"""JSON scenario files: group definitions, subgroups, gamma, representation selectors.

A scenario names groups (by builder or permutation generators), subgroups
of them, optionally a quotient isomorphism gamma given as element pairs, and
the command to run.  :func:`run` returns ``(report, exit_code)``.
"""

import json

import numpy as np
import jsonschema

from . import __version__
from .chartable import (CharacterError, ClassFunction, InternalInvariantError,
                        inner_product, register_groups)
from .clifford import (clifford_decompose, eqeq_verify, mackey_correspondence,
                       rieffel_partition, squarefree_multfree)
from .functors import combine, decomposition_report, induce, outer_tensor, pullback, restrict
from .groups import (DEFAULT_CAP, GroupError, alternating_group, center,
                     closure_from_generators, cyclic_group, dihedral_group, direct_product,
                     heisenberg, heisenberg_center, quaternion_group, quotient, quotient_iso,
                     subgroup, symmetric_group, trivial_subgroup, vector_space, whole_group,
                     wreath_base, wreath_product)
from .theta import (ThetaError, classify, graph_setup, multiplicity_matrix, prop_second_check,
                    prop_third_check, rieffel_bigraphic_classify, round_trip, strong_gelfand_theta_check,
                    verify_main_theorem)

COMMANDS = ["table", "decompose", "clifford", "rieffel", "theta classify",
            "theta verify-main", "props check"]

_element = {"oneOf": [{"type": "integer", "minimum": 0}, {"type": "array"}]}
_rep = {"type": "object"}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "thetarep scenario",
    "type": "object",
    "required": ["groups", "command"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": COMMANDS},
        "groups": {
            "type": "object", "minProperties": 1,
            "additionalProperties": {
                "type": "object",
                "oneOf": [
                    {"required": ["builder"]},
                    {"required": ["generators"]},
                    {"required": ["product"]},
                ],
                "properties": {
                    "builder": {"enum": ["symmetric", "alternating", "cyclic", "dihedral",
                                         "quaternion", "heisenberg", "vector_space", "wreath"]},
                    "args": {"type": "array", "items": {"type": "integer"}},
                    "generators": {"type": "array",
                                   "items": {"type": "array", "items": {"type": "integer"}}},
                    "degree": {"type": "integer", "minimum": 1},
                    "product": {"type": "array", "items": {"type": "string"},
                                "minItems": 2, "maxItems": 2},
                },
                "additionalProperties": False,
            },
        },
        "subgroups": {
            "type": "object",
            "additionalProperties": {
                "type": "object", "required": ["group"],
                "properties": {
                    "group": {"type": "string"},
                    "generators": {"type": "array", "items": _element},
                    "builder": {"enum": ["center", "trivial", "whole", "heisenberg_center",
                                         "wreath_base"]},
                },
                "additionalProperties": False,
            },
        },
        "graph": {
            "type": "object", "required": ["G1", "H1", "G2", "H2", "gamma"],
            "properties": {
                "G1": {"type": "string"}, "H1": {"type": "string"},
                "G2": {"type": "string"}, "H2": {"type": "string"},
                "gamma": {"type": "array",
                          "items": {"type": "array", "items": _element,
                                    "minItems": 2, "maxItems": 2}},
            },
            "additionalProperties": False,
        },
        "group": {"type": "string"},
        "subgroup": {"type": "string"},
        "rep": _rep,
    },
}


class ScenarioError(ValueError):
    pass


_BUILDERS = {
    "symmetric": symmetric_group, "alternating": alternating_group, "cyclic": cyclic_group,
    "dihedral": dihedral_group, "heisenberg": heisenberg, "vector_space": vector_space,
    "wreath": wreath_product,
}


def _tupled(x):
    return tuple(_tupled(v) for v in x) if isinstance(x, list) else x


def element(G, spec):
    """An element given by index, permutation image list, or stored label."""
    if isinstance(spec, int):
        if not 0 <= spec < G.order:
            raise ScenarioError(f"element index {spec} out of range for {G.name}")
        return spec
    try:
        return G.index_of(spec)
    except GroupError:
        return G.index_of(_tupled(spec))


class Context:
    """Resolved groups, subgroups, graph setup and session prime of a scenario."""

    def __init__(self, doc, cap=DEFAULT_CAP):
        self.doc = doc
        self.cap = cap
        self.groups = {}
        for name in doc["groups"]:
            self._group(name, set())
        self.subgroups = {name: self._subgroup(name, spec)
                          for name, spec in doc.get("subgroups", {}).items()}
        self.setup = None
        extra = []
        if "graph" in doc:
            g = doc["graph"]
            G1, G2 = self.group(g["G1"]), self.group(g["G2"])
            H1, H2 = self.subgroup(g["H1"]), self.subgroup(g["H2"])
            if H1.parent is not G1 or H2.parent is not G2:
                raise ScenarioError("graph: H1, H2 must be subgroups of G1, G2")
            d, c = quotient(G1, H1), quotient(G2, H2)
            pairs = [(element(G1, a), element(G2, b)) for a, b in g["gamma"]]
            gamma = quotient_iso(d, c, pairs)
            self.setup = graph_setup(G1, H1, G2, H2, gamma, cap=cap)
            extra.append(self.setup.X)
        # every named group is registered before the prime is chosen
        self.P = register_groups(*self.groups.values(), *extra)

    def _group(self, name, stack):
        if name in self.groups:
            return self.groups[name]
        if name in stack:
            raise ScenarioError(f"groups: cyclic reference through {name!r}")
        spec = self.doc["groups"].get(name)
        if spec is None:
            raise ScenarioError(f"unknown group {name!r}")
        if "builder" in spec:
            args = spec.get("args", [])
            if spec["builder"] == "quaternion":
                G = quaternion_group()
            else:
                G = _BUILDERS[spec["builder"]](*args, cap=self.cap)
        elif "generators" in spec:
            G = closure_from_generators(spec["generators"], cap=self.cap,
                                        degree=spec.get("degree"), name=name)
        else:
            a, b = (self._group(n, stack | {name}) for n in spec["product"])
            G = direct_product(a, b, cap=self.cap)
        G.name = name
        self.groups[name] = G
        return G

    def group(self, name):
        if name not in self.groups:
            raise ScenarioError(f"unknown group {name!r}")
        return self.groups[name]

    def _subgroup(self, name, spec):
        G = self.group(spec["group"])
        if "generators" in spec:
            return subgroup(G, [element(G, e) for e in spec["generators"]], name=name)
        kind = spec.get("builder", "trivial")
        H = {"center": center, "trivial": trivial_subgroup, "whole": whole_group,
             "heisenberg_center": heisenberg_center, "wreath_base": wreath_base}[kind](G)
        H.name = name
        return H

    def subgroup(self, name):
        if name not in self.subgroups:
            raise ScenarioError(f"unknown subgroup {name!r}")
        return self.subgroups[name]

    # representation selectors ------------------------------------------------

    def rep(self, spec, K):
        """A class function of the FiniteGroup ``K`` from a selector object."""
        T = self.P.table(K)
        if "irrep" in spec:
            k = spec["irrep"]
            if not 0 <= k < len(T):
                raise ScenarioError(f"irrep {k} out of range ({len(T)} irreducibles)")
            return T[k]
        if "degree" in spec:
            hits = [i for i, d in enumerate(T.degrees) if d == spec["degree"]]
            k = spec.get("index", 0)
            if k >= len(hits):
                raise ScenarioError(f"no irreducible #{k} of degree {spec['degree']}")
            return T[hits[k]]
        if "mult" in spec:
            m = spec["mult"]
            coeffs = {int(k): int(v) for k, v in m.items()} if isinstance(m, dict) \
                else dict(enumerate(m))
            if any(v < 0 or not 0 <= k < len(T) for k, v in coeffs.items()):
                raise ScenarioError("mult: indices out of range or negative multiplicities")
            return combine(T, coeffs)
        if "values" in spec:
            vals = spec["values"]
            if len(vals) != K.classes.class_count:
                raise ScenarioError("values: one entry per conjugacy class expected")
            return ClassFunction(K, vals, self.P.p, "given")
        if "outer" in spec:
            if K.factors is None:
                raise ScenarioError("outer: group is not a direct product")
            a, b = (self.rep(s, F) for s, F in zip(spec["outer"], K.factors))
            return outer_tensor(a, b, K)
        if "pullback" in spec:
            S = self.setup
            if S is None or K is not S.Gamma.group:
                raise ScenarioError("pullback selects a character of Gamma; add a graph")
            side = spec["pullback"].get("side", 0)
            G = (S.G1, S.G2)[side]
            chi = self.rep(spec["pullback"]["rep"], G)
            proj = (S.Gamma.embedding // S.G2.order, S.Gamma.embedding % S.G2.order)[side]
            return pullback(chi, proj, K)
        if "induce" in spec:
            H = self.subgroup(spec["induce"]["subgroup"])
            if H.parent is not K:
                raise ScenarioError("induce: subgroup of a different group")
            return induce(self.rep(spec["induce"]["rep"], H.group), H)
        if "restrict" in spec:
            H = self.subgroup(spec["restrict"]["subgroup"])
            if H.group is not K:
                raise ScenarioError("restrict: target is not this subgroup")
            return restrict(self.rep(spec["restrict"]["rep"], H.parent), H)
        raise ScenarioError(f"unrecognised representation selector {sorted(spec)}")


# commands ------------------------------------------------------------------

def _label(G, x):
    lab = G.labels[int(x)]
    return list(lab) if isinstance(lab, tuple) else lab


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    return x


def table_report(G, P):
    T = P.table(G)
    D = G.classes
    return {
        "group": G.name, "order": G.order,
        "classes": [{"rep": _label(G, r), "size": int(s), "element_order": int(G.element_orders[r])}
                    for r, s in zip(D.reps, D.sizes)],
        "degrees": T.degrees,
        "values_mod_p": T.matrix.tolist(),
    }


def _cmd_table(ctx):
    G = ctx.group(ctx.doc.get("group") or next(iter(ctx.groups)))
    return {"table": table_report(G, ctx.P)}, True


def _target(ctx):
    if "subgroup" in ctx.doc and "group" not in ctx.doc:
        return ctx.subgroup(ctx.doc["subgroup"]).group
    return ctx.group(ctx.doc.get("group") or next(iter(ctx.groups)))


def _cmd_decompose(ctx):
    K = _target(ctx)
    phi = ctx.rep(ctx.doc.get("rep", {"irrep": 0}), K)
    return {"group": K.name, "degree": phi.degree,
            "decomposition": decomposition_report(phi, ctx.P.table(K))}, True


def _normal_pair(ctx):
    H = ctx.subgroup(ctx.doc["subgroup"])
    if not H.is_normal:
        raise ScenarioError(f"subgroup {H.name!r} is not normal")
    return H.parent, H


def _cmd_clifford(ctx):
    G, H = _normal_pair(ctx)
    P = ctx.P
    rows = [clifford_decompose(H, pi, P).to_dict() for pi in P.table(G)]
    mackey = [{"sigma": i, "pairs": mackey_correspondence(H, s, P)}
              for i, s in enumerate(P.table(H.group))]
    out = {"G": G.name, "H": H.name, "index": H.index, "clifford": rows, "mackey": mackey}
    ok = True
    if quotient(G, H).quotient.is_abelian:
        eq = [eqeq_verify(H, pi, P).to_dict() for pi in P.table(G)]
        out["eqeq"] = eq
        out["squarefree"] = squarefree_multfree(H, P)
        ok = all(all(r["checks"].values()) for r in eq) and out["squarefree"]["corollary_holds"]
    return out, ok


def _cmd_rieffel(ctx):
    G, H = _normal_pair(ctx)
    R = rieffel_partition(H, ctx.P)
    return {"G": G.name, "H": H.name, "partition": R.to_dict()}, True


def _cmd_theta_classify(ctx):
    K = _target(ctx)
    Pi = ctx.rep(ctx.doc.get("rep", {"irrep": 0}), K)
    M = multiplicity_matrix(Pi, ctx.P)
    round_trip(M)
    C = classify(M)
    return {"group": K.name, "matrix": M.to_dict(), **C.to_dict()}, True


def _require_setup(ctx):
    if ctx.setup is None:
        raise ScenarioError("this command needs a 'graph' section")
    return ctx.setup


def _cmd_verify_main(ctx):
    S = _require_setup(ctx)
    rho = ctx.rep(ctx.doc.get("rep", {"irrep": 0}), S.Gamma.group)
    out = {"orders": S.orders, **verify_main_theorem(S, rho, ctx.P)}
    return out, out["equivalent"]


def _cmd_props(ctx):
    S = _require_setup(ctx)
    P = ctx.P
    rho = ctx.rep(ctx.doc.get("rep", {"irrep": 0}), S.Gamma.group)
    out = {"orders": S.orders}
    ok = True
    if S.gamma.domain.quotient.is_abelian and inner_product(rho, rho) == 1:
        out["prop_second"] = prop_second_check(S, rho, P)
        out["prop_third"] = prop_third_check(S, rho, P)
        ok = not (out["prop_second"]["finding"] or out["prop_third"]["finding"])
    else:
        out["abelian_props"] = "inapplicable: needs abelian G1/H1 and irreducible rho"
    rb = rieffel_bigraphic_classify(S, rho, P)
    sg = strong_gelfand_theta_check(induce(rho, S.Gamma), P)
    out["rieffel_bigraphic"] = rb
    out["strong_gelfand"] = sg
    ok = ok and rb["iff_holds"] and rb["supports_correspond"] \
        and sg["part1_holds"] and sg["part2_holds"]
    return out, ok


_DISPATCH = {
    "table": _cmd_table, "decompose": _cmd_decompose, "clifford": _cmd_clifford,
    "rieffel": _cmd_rieffel, "theta classify": _cmd_theta_classify,
    "theta verify-main": _cmd_verify_main, "props check": _cmd_props,
}

INPUT_ERRORS = (ScenarioError, GroupError, CharacterError, ThetaError,
                jsonschema.ValidationError)


def load(text):
    """Parse and validate a scenario document; errors carry line or field locations."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise ScenarioError(f"field {where}: {e.message}")
    return doc


def envelope(command, ctx_prime, orders, body, ok):
    return _jsonable({"version": __version__, "command": command, "prime": ctx_prime,
                      "orders": orders, "ok": ok, "result": body})


def run(doc, cap=DEFAULT_CAP, command=None):
    """Execute a validated scenario; returns (report, exit code)."""
    command = command or doc["command"]
    try:
        ctx = Context(doc, cap=cap)
        body, ok = _DISPATCH[command](ctx)
    except INPUT_ERRORS as exc:
        return {"version": __version__, "command": command, "error": str(exc)}, 2
    except InternalInvariantError as exc:
        return {"version": __version__, "command": command,
                "error": f"internal invariant failed: {exc}"}, 1
    orders = {name: G.order for name, G in ctx.groups.items()}
    return envelope(command, ctx.P.p, orders, body, ok), 0 if ok else 1
