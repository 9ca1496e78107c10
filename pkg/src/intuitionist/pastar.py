"""Hilbert-style proofs in PA extended by a constant ``w`` and the axioms ``w > n``.

A proof is a list of numbered lines, each with a formula and a
justification: an axiom-scheme instance (given by explicit bindings of the
scheme's metavariables), an ``OMEGA n`` axiom ``(< (num n) w)``, a true
variable-free numeral comparison (``NUMFACT``), modus ponens or
generalization.  :func:`eliminate_omega` turns a proof of ``A(w)`` into a
plain PA proof of ``A(m)``, where ``m`` is one more than the largest ``n``
used by an ``OMEGA`` line.

Text format, one proof line per text line::

    <index> | <formula> | <justification>

Terms are ``0``, ``(s t)``, ``(+ t t)``, ``(* t t)``, a variable, ``w`` or
``(num k)``; formulas are ``(= t t)``, ``(< t t)``, ``(not f)``,
``(imp f f)`` and ``(forall x f)``.  Justifications are ``PA <id> [k=v ...]``,
``LOGIC <id> [k=v ...]``, ``OMEGA <n>``, ``NUMFACT``, ``MP <i> <j>`` and
``GEN <i> <var>``.  Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Optional, Union

__all__ = [
    "Num", "Succ", "Plus", "Times", "Var", "Omega", "OMEGA",
    "Eq", "Lt", "Not", "Imp", "Forall",
    "PAAxiom", "LogicAxiom", "OmegaGt", "NumeralFact", "MP", "Gen",
    "ProofLine", "Proof", "OmegaReport",
    "ProofError", "ProofSyntaxError",
    "SCHEMES",
    "parse_term", "parse_formula", "parse_proof", "format_proof",
    "check", "collect_omega_instances", "omega_report", "eliminate_omega",
    "contains_omega", "succ", "proof_from_lines",
]


# --- terms ----------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    """The numeral ``k``; ``Num(0)`` is zero."""

    k: int

    def __str__(self):
        return "0" if self.k == 0 else f"(num {self.k})"


@dataclass(frozen=True)
class Succ:
    arg: "Term"

    def __str__(self):
        return f"(s {self.arg})"


@dataclass(frozen=True)
class Plus:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"(+ {self.left} {self.right})"


@dataclass(frozen=True)
class Times:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"(* {self.left} {self.right})"


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Omega:
    def __str__(self):
        return "w"


OMEGA = Omega()
Term = Union[Num, Succ, Plus, Times, Var, Omega]


def succ(t: Term) -> Term:
    """Successor, folding ``s`` applied to a numeral into the next numeral."""
    return Num(t.k + 1) if isinstance(t, Num) else Succ(t)


# --- formulas -------------------------------------------------------------


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term

    def __str__(self):
        return f"(= {self.left} {self.right})"


@dataclass(frozen=True)
class Lt:
    left: Term
    right: Term

    def __str__(self):
        return f"(< {self.left} {self.right})"


@dataclass(frozen=True)
class Not:
    body: "Formula"

    def __str__(self):
        return f"(not {self.body})"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"(imp {self.left} {self.right})"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"

    def __str__(self):
        return f"(forall {self.var} {self.body})"


Formula = Union[Eq, Lt, Not, Imp, Forall]


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Succ):
        return term_vars(t.arg)
    if isinstance(t, (Plus, Times)):
        return term_vars(t.left) | term_vars(t.right)
    return set()


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, (Eq, Lt)):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, Imp):
        return free_vars(f.left) | free_vars(f.right)
    return free_vars(f.body) - {f.var}


def map_terms(f: Formula, fn: Callable[[Term], Term], bound: frozenset = frozenset()) -> Formula:
    """Rebuild ``f`` applying ``fn(term, bound_vars)`` to each atomic argument."""
    if isinstance(f, Eq):
        return Eq(fn(f.left, bound), fn(f.right, bound))
    if isinstance(f, Lt):
        return Lt(fn(f.left, bound), fn(f.right, bound))
    if isinstance(f, Not):
        return Not(map_terms(f.body, fn, bound))
    if isinstance(f, Imp):
        return Imp(map_terms(f.left, fn, bound), map_terms(f.right, fn, bound))
    return Forall(f.var, map_terms(f.body, fn, bound | {f.var}))


def subst_term(t: Term, name: str, value: Term) -> Term:
    if isinstance(t, Var):
        return value if t.name == name else t
    if isinstance(t, Succ):
        return succ(subst_term(t.arg, name, value))
    if isinstance(t, Plus):
        return Plus(subst_term(t.left, name, value), subst_term(t.right, name, value))
    if isinstance(t, Times):
        return Times(subst_term(t.left, name, value), subst_term(t.right, name, value))
    return t


def subst(f: Formula, name: str, value: Term) -> Formula:
    """Replace free occurrences of variable ``name`` in ``f`` by ``value``."""
    if isinstance(f, Eq):
        return Eq(subst_term(f.left, name, value), subst_term(f.right, name, value))
    if isinstance(f, Lt):
        return Lt(subst_term(f.left, name, value), subst_term(f.right, name, value))
    if isinstance(f, Not):
        return Not(subst(f.body, name, value))
    if isinstance(f, Imp):
        return Imp(subst(f.left, name, value), subst(f.right, name, value))
    if f.var == name:
        return f
    return Forall(f.var, subst(f.body, name, value))


def free_for(value: Term, name: str, f: Formula) -> bool:
    """True when substituting ``value`` for ``name`` in ``f`` captures nothing."""
    vs = term_vars(value)

    def walk(g: Formula, bound: frozenset) -> bool:
        if isinstance(g, (Eq, Lt)):
            if name in term_vars(g.left) | term_vars(g.right):
                return not (bound & vs)
            return True
        if isinstance(g, Not):
            return walk(g.body, bound)
        if isinstance(g, Imp):
            return walk(g.left, bound) and walk(g.right, bound)
        if g.var == name:
            return True
        return walk(g.body, bound | {g.var})

    return walk(f, frozenset())


def _replace_omega_term(t: Term, value: Term) -> Term:
    if isinstance(t, Omega):
        return value
    if isinstance(t, Succ):
        return succ(_replace_omega_term(t.arg, value))
    if isinstance(t, Plus):
        return Plus(_replace_omega_term(t.left, value), _replace_omega_term(t.right, value))
    if isinstance(t, Times):
        return Times(_replace_omega_term(t.left, value), _replace_omega_term(t.right, value))
    return t


def replace_omega(f: Formula, value: Term) -> Formula:
    return map_terms(f, lambda t, _bound: _replace_omega_term(t, value))


def _term_has_omega(t: Term) -> bool:
    if isinstance(t, Omega):
        return True
    if isinstance(t, Succ):
        return _term_has_omega(t.arg)
    if isinstance(t, (Plus, Times)):
        return _term_has_omega(t.left) or _term_has_omega(t.right)
    return False


def formula_has_omega(f: Formula) -> bool:
    if isinstance(f, (Eq, Lt)):
        return _term_has_omega(f.left) or _term_has_omega(f.right)
    if isinstance(f, Not):
        return formula_has_omega(f.body)
    if isinstance(f, Imp):
        return formula_has_omega(f.left) or formula_has_omega(f.right)
    return formula_has_omega(f.body)


def evaluate_term(t: Term) -> int:
    if isinstance(t, Num):
        return t.k
    if isinstance(t, Succ):
        return evaluate_term(t.arg) + 1
    if isinstance(t, Plus):
        return evaluate_term(t.left) + evaluate_term(t.right)
    if isinstance(t, Times):
        return evaluate_term(t.left) * evaluate_term(t.right)
    raise ValueError(f"term {t} is not a closed numeral expression")


# --- axiom schemes --------------------------------------------------------

ZERO = Num(0)


@dataclass(frozen=True)
class Scheme:
    family: str  # "PA" or "LOGIC"
    name: str
    params: tuple[tuple[str, str], ...]  # (metavariable, kind) with kind in formula/term/var
    build: Callable[..., Formula]
    # optional side condition on bindings; returns an error message or None
    side: Optional[Callable[..., Optional[str]]] = None


def _not_free_for(t_name: str, x_name: str, a_name: str):
    def side(**b):
        if not free_for(b[t_name], b[x_name], b[a_name]):
            return f"term {b[t_name]} is not free for {b[x_name]} in {b[a_name]}"
        return None

    return side


def _eq_subst_side(**b):
    for t in ("t", "u"):
        if not free_for(b[t], b["x"], b["A"]):
            return f"term {b[t]} is not free for {b['x']} in {b['A']}"
    return None


def _qimp_side(**b):
    if b["x"] in free_vars(b["A"]):
        return f"variable {b['x']} occurs free in {b['A']}"
    return None


_F, _T, _V = "formula", "term", "var"

SCHEMES: dict[tuple[str, str], Scheme] = {}


def _scheme(family, name, params, build, side=None):
    SCHEMES[(family, name)] = Scheme(family, name, tuple(params), build, side)


_scheme("LOGIC", "ID", [("A", _F)], lambda A: Imp(A, A))
_scheme("LOGIC", "K", [("A", _F), ("B", _F)], lambda A, B: Imp(A, Imp(B, A)))
_scheme(
    "LOGIC", "S", [("A", _F), ("B", _F), ("C", _F)],
    lambda A, B, C: Imp(Imp(A, Imp(B, C)), Imp(Imp(A, B), Imp(A, C))),
)
_scheme("LOGIC", "CP", [("A", _F), ("B", _F)], lambda A, B: Imp(Imp(Not(A), Not(B)), Imp(B, A)))
_scheme("LOGIC", "DNE", [("A", _F)], lambda A: Imp(Not(Not(A)), A))
_scheme(
    "LOGIC", "INST", [("A", _F), ("x", _V), ("t", _T)],
    lambda A, x, t: Imp(Forall(x, A), subst(A, x, t)),
    _not_free_for("t", "x", "A"),
)
_scheme(
    "LOGIC", "QIMP", [("A", _F), ("B", _F), ("x", _V)],
    lambda A, B, x: Imp(Forall(x, Imp(A, B)), Imp(A, Forall(x, B))),
    _qimp_side,
)
_scheme("LOGIC", "EQREFL", [("t", _T)], lambda t: Eq(t, t))
_scheme(
    "LOGIC", "EQSUBST", [("A", _F), ("x", _V), ("t", _T), ("u", _T)],
    lambda A, x, t, u: Imp(Eq(t, u), Imp(subst(A, x, t), subst(A, x, u))),
    _eq_subst_side,
)

_scheme("PA", "SUCC_NZ", [("t", _T)], lambda t: Not(Eq(succ(t), ZERO)))
_scheme("PA", "SUCC_INJ", [("t", _T), ("u", _T)], lambda t, u: Imp(Eq(succ(t), succ(u)), Eq(t, u)))
_scheme("PA", "ADD_ZERO", [("t", _T)], lambda t: Eq(Plus(t, ZERO), t))
_scheme("PA", "ADD_SUCC", [("t", _T), ("u", _T)], lambda t, u: Eq(Plus(t, succ(u)), succ(Plus(t, u))))
_scheme("PA", "MUL_ZERO", [("t", _T)], lambda t: Eq(Times(t, ZERO), ZERO))
_scheme("PA", "MUL_SUCC", [("t", _T), ("u", _T)], lambda t, u: Eq(Times(t, succ(u)), Plus(Times(t, u), t)))
_scheme("PA", "LT_ZERO", [("t", _T)], lambda t: Not(Lt(t, ZERO)))
_scheme("PA", "LT_SUCC", [("t", _T)], lambda t: Lt(t, succ(t)))
_scheme("PA", "LT_STEP", [("t", _T), ("u", _T)], lambda t, u: Imp(Lt(t, u), Lt(t, succ(u))))
_scheme(
    "PA", "LT_CASES", [("t", _T), ("u", _T)],
    lambda t, u: Imp(Lt(t, succ(u)), Imp(Not(Lt(t, u)), Eq(t, u))),
)
_scheme(
    "PA", "IND", [("A", _F), ("x", _V)],
    lambda A, x: Imp(
        subst(A, x, ZERO),
        Imp(Forall(x, Imp(A, subst(A, x, succ(Var(x))))), Forall(x, A)),
    ),
)


# --- justifications and proofs --------------------------------------------

Binding = Union[Term, Formula, str]


def _format_binding(value: Binding) -> str:
    return value if isinstance(value, str) else str(value)


@dataclass(frozen=True)
class PAAxiom:
    scheme: str
    bindings: tuple[tuple[str, Binding], ...] = ()

    family = "PA"

    def __str__(self):
        return " ".join([self.family, self.scheme] + [f"{k}={_format_binding(v)}" for k, v in self.bindings])


@dataclass(frozen=True)
class LogicAxiom(PAAxiom):
    family = "LOGIC"


@dataclass(frozen=True)
class OmegaGt:
    n: int

    def __str__(self):
        return f"OMEGA {self.n}"


@dataclass(frozen=True)
class NumeralFact:
    def __str__(self):
        return "NUMFACT"


@dataclass(frozen=True)
class MP:
    minor: int
    major: int

    def __str__(self):
        return f"MP {self.minor} {self.major}"


@dataclass(frozen=True)
class Gen:
    source: int
    var: str

    def __str__(self):
        return f"GEN {self.source} {self.var}"


Justification = Union[PAAxiom, LogicAxiom, OmegaGt, NumeralFact, MP, Gen]


@dataclass(frozen=True)
class ProofLine:
    index: int
    formula: Formula
    just: Justification

    def __str__(self):
        return f"{self.index} | {self.formula} | {self.just}"


@dataclass(frozen=True)
class Proof:
    lines: tuple[ProofLine, ...]

    @property
    def conclusion(self) -> Optional[Formula]:
        return self.lines[-1].formula if self.lines else None

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)


@dataclass(frozen=True)
class OmegaReport:
    instances: frozenset[int]
    m: int


class ProofError(Exception):
    """A proof line fails to check.  ``kind`` names the error class."""

    def __init__(self, index: Optional[int], kind: str, reason: str):
        self.index = index
        self.kind = kind
        self.reason = reason
        where = "proof" if index is None else f"line {index}"
        super().__init__(f"{where}: {reason}")


class ProofSyntaxError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


# --- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_IDENT = re.compile(r"[a-z][a-z0-9_']*\Z")
_RESERVED = {"w", "s", "num", "not", "imp", "forall"}


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


def _read_sexpr(tokens: list[str], pos: int):
    if pos >= len(tokens):
        raise ValueError("unexpected end of expression")
    tok = tokens[pos]
    if tok == ")":
        raise ValueError("unexpected ')'")
    if tok != "(":
        return tok, pos + 1
    items, pos = [], pos + 1
    while True:
        if pos >= len(tokens):
            raise ValueError("missing ')'")
        if tokens[pos] == ")":
            return items, pos + 1
        item, pos = _read_sexpr(tokens, pos)
        items.append(item)


def _variable(tok) -> str:
    if not isinstance(tok, str) or not _IDENT.match(tok) or tok in _RESERVED:
        raise ValueError(f"bad variable {tok!r}")
    return tok


def _natural(tok) -> int:
    if not isinstance(tok, str) or not tok.isdigit():
        raise ValueError(f"expected a natural number, got {tok!r}")
    return int(tok)


def _term_from(sx) -> Term:
    if isinstance(sx, str):
        if sx == "0":
            return ZERO
        if sx == "w":
            return OMEGA
        return Var(_variable(sx))
    if not sx:
        raise ValueError("empty term")
    head, args = sx[0], sx[1:]
    if head == "s" and len(args) == 1:
        return succ(_term_from(args[0]))
    if head == "num" and len(args) == 1:
        return Num(_natural(args[0]))
    if head == "+" and len(args) == 2:
        return Plus(_term_from(args[0]), _term_from(args[1]))
    if head == "*" and len(args) == 2:
        return Times(_term_from(args[0]), _term_from(args[1]))
    raise ValueError(f"bad term {sx!r}")


def _formula_from(sx) -> Formula:
    if isinstance(sx, str) or not sx:
        raise ValueError(f"bad formula {sx!r}")
    head, args = sx[0], sx[1:]
    if head == "=" and len(args) == 2:
        return Eq(_term_from(args[0]), _term_from(args[1]))
    if head == "<" and len(args) == 2:
        return Lt(_term_from(args[0]), _term_from(args[1]))
    if head == "not" and len(args) == 1:
        return Not(_formula_from(args[0]))
    if head == "imp" and len(args) == 2:
        return Imp(_formula_from(args[0]), _formula_from(args[1]))
    if head == "forall" and len(args) == 2:
        return Forall(_variable(args[0]), _formula_from(args[1]))
    raise ValueError(f"bad formula {sx!r}")


def _parse_whole(text: str, conv):
    tokens = _tokenize(text)
    sx, pos = _read_sexpr(tokens, 0)
    if pos != len(tokens):
        raise ValueError("trailing tokens")
    return conv(sx)


def parse_term(text: str) -> Term:
    return _parse_whole(text, _term_from)


def parse_formula(text: str) -> Formula:
    return _parse_whole(text, _formula_from)


def _parse_justification(text: str) -> Justification:
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("missing justification")
    head = tokens[0]
    rest = tokens[1:]
    if head in ("PA", "LOGIC"):
        if not rest:
            raise ValueError(f"{head} needs a scheme id")
        scheme, pos = rest[0], 1
        bindings = []
        while pos < len(rest):
            name, eq, value = rest[pos].partition("=")
            if not eq or not name:
                raise ValueError(f"bad binding {rest[pos]!r}")
            pos += 1
            if value:
                # the value was glued to the name, e.g. t=0 or x=y
                sx = value
            else:
                sx, pos = _read_sexpr(rest, pos)
            bindings.append((name, sx))
        cls = PAAxiom if head == "PA" else LogicAxiom
        return cls(scheme, tuple(_convert_binding(head, scheme, n, sx) for n, sx in bindings))
    if head == "OMEGA" and len(rest) == 1:
        return OmegaGt(_natural(rest[0]))
    if head == "NUMFACT" and not rest:
        return NumeralFact()
    if head == "MP" and len(rest) == 2:
        return MP(_natural(rest[0]), _natural(rest[1]))
    if head == "GEN" and len(rest) == 2:
        return Gen(_natural(rest[0]), _variable(rest[1]))
    raise ValueError(f"bad justification {text.strip()!r}")


def _convert_binding(family: str, scheme: str, name: str, sx) -> tuple[str, Binding]:
    """Parse a binding according to the scheme's declared kind.

    Unknown schemes or metavariables are kept as raw text so the checker can
    report them as binding errors rather than syntax errors.
    """
    spec = SCHEMES.get((family, scheme))
    kind = dict(spec.params).get(name) if spec else None
    if kind == _F:
        return name, _formula_from(sx)
    if kind == _T:
        return name, _term_from(sx)
    if kind == _V:
        return name, _variable(sx)
    return name, _unparse(sx)


def _unparse(sx) -> str:
    return sx if isinstance(sx, str) else "(" + " ".join(_unparse(x) for x in sx) + ")"


def parse_proof(text: str) -> Proof:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("|")
        if len(parts) != 3:
            raise ProofSyntaxError(lineno, "expected '<index> | <formula> | <justification>'")
        try:
            index = _natural(parts[0].strip())
            formula = parse_formula(parts[1])
            just = _parse_justification(parts[2])
        except ValueError as exc:
            raise ProofSyntaxError(lineno, str(exc)) from None
        lines.append(ProofLine(index, formula, just))
    return Proof(tuple(lines))


def format_proof(proof: Proof) -> str:
    return "".join(f"{line}\n" for line in proof.lines)


# --- checking -------------------------------------------------------------


def _instantiate(line: ProofLine, just: PAAxiom) -> Formula:
    spec = SCHEMES.get((just.family, just.scheme))
    if spec is None:
        raise ProofError(line.index, "unknown-scheme", f"unknown scheme {just.family} {just.scheme}")
    given = [name for name, _ in just.bindings]
    expected = [name for name, _ in spec.params]
    if len(given) != len(set(given)) or set(given) != set(expected):
        raise ProofError(
            line.index,
            "binding-mismatch",
            f"{just.scheme} takes bindings {expected}, got {given}",
        )
    values = dict(just.bindings)
    for name, kind in spec.params:
        value = values[name]
        if kind == _F:
            ok = isinstance(value, (Eq, Lt, Not, Imp, Forall))
        elif kind == _V:
            ok = isinstance(value, str)
        else:
            ok = isinstance(value, (Num, Succ, Plus, Times, Var, Omega))
        if not ok:
            raise ProofError(line.index, "binding-mismatch", f"binding {name} must be a {kind}")
    if spec.side is not None:
        problem = spec.side(**values)
        if problem:
            raise ProofError(line.index, "side-condition", problem)
    return spec.build(**values)


def _is_numeral_comparison(f: Formula) -> bool:
    if isinstance(f, Not):
        f = f.body
    if not isinstance(f, (Eq, Lt)):
        return False
    return not free_vars(f) and not formula_has_omega(f)


def _evaluate(f: Formula) -> bool:
    if isinstance(f, Not):
        return not _evaluate(f.body)
    a, b = evaluate_term(f.left), evaluate_term(f.right)
    return a == b if isinstance(f, Eq) else a < b


def check(proof: Proof) -> None:
    """Raise :class:`ProofError` at the first bad line; return None if the proof checks."""
    seen: dict[int, Formula] = {}
    all_indices = {line.index for line in proof.lines}
    last = None

    def cited(line: ProofLine, i: int) -> Formula:
        if i in seen:
            return seen[i]
        if i in all_indices:
            raise ProofError(line.index, "forward-reference", f"forward reference to line {i}")
        raise ProofError(line.index, "unknown-line", f"reference to missing line {i}")

    for line in proof.lines:
        if last is not None and line.index <= last:
            raise ProofError(line.index, "bad-index", "line indices must increase")
        last = line.index
        just, f = line.just, line.formula
        if isinstance(just, PAAxiom):
            expected = _instantiate(line, just)
            if expected != f:
                raise ProofError(
                    line.index, "not-an-instance", f"formula is not {just.family} {just.scheme} instance {expected}"
                )
        elif isinstance(just, OmegaGt):
            if f != Lt(Num(just.n), OMEGA):
                raise ProofError(line.index, "schema-mismatch", "schema instance mismatch")
        elif isinstance(just, NumeralFact):
            if not _is_numeral_comparison(f):
                raise ProofError(line.index, "false-numeral-fact", "not a variable-free numeral comparison")
            if not _evaluate(f):
                raise ProofError(line.index, "false-numeral-fact", f"numeral fact {f} is false")
        elif isinstance(just, MP):
            minor, major = cited(line, just.minor), cited(line, just.major)
            if major != Imp(minor, f):
                raise ProofError(line.index, "mp-mismatch", f"line {just.major} is not (imp <line {just.minor}> <this>)")
        elif isinstance(just, Gen):
            if f != Forall(just.var, cited(line, just.source)):
                raise ProofError(line.index, "gen-mismatch", f"formula is not (forall {just.var} <line {just.source}>)")
        else:  # pragma: no cover
            raise ProofError(line.index, "unknown-rule", f"unknown justification {just!r}")
        seen[line.index] = f


def collect_omega_instances(proof: Proof) -> frozenset[int]:
    check(proof)
    return frozenset(line.just.n for line in proof.lines if isinstance(line.just, OmegaGt))


def omega_report(proof: Proof) -> OmegaReport:
    instances = collect_omega_instances(proof)
    return OmegaReport(instances, max(instances) + 1 if instances else 1)


def contains_omega(proof: Proof) -> bool:
    for line in proof.lines:
        if formula_has_omega(line.formula):
            return True
        if isinstance(line.just, PAAxiom):
            for _, v in line.just.bindings:
                if isinstance(v, (Eq, Lt, Not, Imp, Forall)) and formula_has_omega(v):
                    return True
                if isinstance(v, (Num, Succ, Plus, Times, Var, Omega)) and _term_has_omega(v):
                    return True
    return False


def _replace_binding(value: Binding, numeral: Num) -> Binding:
    if isinstance(value, (Eq, Lt, Not, Imp, Forall)):
        return replace_omega(value, numeral)
    if isinstance(value, (Num, Succ, Plus, Times, Var, Omega)):
        return _replace_omega_term(value, numeral)
    return value


def eliminate_omega(proof: Proof) -> Proof:
    """Replace ``w`` by the numeral ``m`` throughout a checked proof.

    ``OMEGA n`` lines become ``NUMFACT`` lines ``(< (num n) (num m))``; every
    other justification keeps its shape with ``w`` replaced in its bindings.
    The result is re-checked before it is returned.
    """
    report = omega_report(proof)
    numeral = Num(report.m)
    out = []
    for line in proof.lines:
        f = replace_omega(line.formula, numeral)
        just = line.just
        if isinstance(just, OmegaGt):
            just = NumeralFact()
        elif isinstance(just, PAAxiom):
            just = replace(just, bindings=tuple((k, _replace_binding(v, numeral)) for k, v in just.bindings))
        out.append(ProofLine(line.index, f, just))
    result = Proof(tuple(out))
    check(result)
    return result


def proof_from_lines(entries: Iterable[tuple[Formula, Justification]]) -> Proof:
    """Number ``(formula, justification)`` pairs from 1."""
    return Proof(tuple(ProofLine(i, f, j) for i, (f, j) in enumerate(entries, 1)))

