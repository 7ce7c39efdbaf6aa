"""Tiny builder for JSONL fact records used by gen_fixtures.py."""

import json


def T(head, *args):
    return {"head": head, "args": list(args)}


def P(name, tpe):
    return {"name": name, "type": tpe}


def plist(*params, implicit=False):
    return {"implicit": implicit, "params": list(params)}


def method(ret, lists=(), tparams=()):
    return {"typeParams": list(tparams), "paramLists": list(lists), "ret": ret}


def value(tpe):
    return {"type": tpe}


def typesig(tparams=(), parents=(), ctor=None):
    sig = {"typeParams": list(tparams), "parents": list(parents)}
    if ctor is not None:
        sig["ctor"] = list(ctor)
    return sig


class Module:
    """Collects records of one module; `at` sets the current file."""

    def __init__(self, module_id, path="", path_kind=None):
        self.id = module_id
        self.path = path
        self.path_kind = path_kind
        self.records = []
        self._line = 1

    def at(self, path, path_kind=None):
        self.path = path
        self.path_kind = path_kind
        self._line = 1
        return self

    def _range(self, rng):
        if rng is not None:
            return list(rng)
        r = [self._line, 1, self._line, 40]
        self._line += 2
        return r

    def _located(self, rec, rng):
        rec["path"] = self.path
        rec["range"] = self._range(rng)
        if self.path_kind:
            rec["pathKind"] = self.path_kind
        return rec

    def decl(self, sym, kind, sig, implicit=False, visibility="PUBLIC", scope="TOP_LEVEL", language="SCALA",
             rng=None):
        rec = {"kind": "declaration", "id": sym, "module": self.id, "declKind": kind, "language": language,
               "implicit": implicit, "visibility": visibility, "scope": scope}
        self._located(rec, rng)
        rec["fromImplicitClass"] = False
        rec["signature"] = sig
        self.records.append(rec)
        return sym

    def callsite(self, callee, implicit_args=(), type_args=(), synthetic=False, rng=None):
        rec = {"kind": "callsite", "module": self.id, "callee": callee}
        self._located(rec, rng)
        rec["typeArgs"] = list(type_args)
        rec["implicitArgs"] = list(implicit_args)
        rec["syntheticCall"] = synthetic
        self.records.append(rec)

    def synthetic(self, tree):
        rec = {"kind": "synthetic", "module": self.id, "path": self.path, "tree": tree}
        if self.path_kind:
            rec["pathKind"] = self.path_kind
        self.records.append(rec)


# Argument trees of resolved call sites.
def ref(sym):
    return {"ref": sym}


def call(sym, type_args=(), args=()):
    return {"call": sym, "typeArgs": list(type_args), "args": list(args)}


# Synthetic trees.
def original(rng, symbol=None):
    node = {"tag": "original", "range": list(rng)}
    if symbol:
        node["symbol"] = symbol
    return node


def idref(sym):
    return {"tag": "idref", "symbol": sym}


def select(qual, sym):
    return {"tag": "select", "qual": qual, "id": idref(sym)}


def typeapply(fn, *targs):
    return {"tag": "typeapply", "fn": fn, "typeArgs": list(targs)}


def apply(fn, *args):
    return {"tag": "apply", "fn": fn, "args": list(args)}


def project(pid, stars, commits, first, last, dup, in_index):
    return {"kind": "project", "id": pid, "stars": stars, "commits": commits, "firstCommit": first,
            "lastCommit": last, "dupRatio": dup, "inIndex": in_index}


def module_meta(mid, project_id, group, artifact, version, platform="JVM", scala="2.13.12", loc_main=0, loc_test=0,
                total=0, test_total=None):
    rec = {"kind": "module", "id": mid, "project": project_id, "group": group, "artifact": artifact,
           "version": version, "platform": platform, "scalaVersion": scala, "locMain": loc_main,
           "locTest": loc_test, "totalCallSites": total}
    if test_total is not None:
        rec["testCallSites"] = test_total
    return rec


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in records:
            f.write(json.dumps(r, separators=(",", ":"), ensure_ascii=False) + "\n")


def write_json(path, obj):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write("\n")
