"""Parser for the KB language and for query formulas.

The KB language is line oriented: one statement per line, terminated by a
dot.  ``#`` starts a comment.  Declarations may appear anywhere in the file;
statements are resolved against the full declaration set.

    const a, b.
    pred Bird/1, Flies/1.
    abpred Ab/1.
    fact Bird(tweety).
    fact -Flies(chilly).
    all g1: Bird(x) -> Flies(x).
    def g2: Bird(x) ~> Flies(x) [uncertain].
    default d1: Bird(x) : Flies(x) / Flies(x).
    ael a1: Bird(x) & -B(-Flies(x)) -> Flies(x).
    flag unique-names.

Formula connectives: ``-`` ``&`` ``|`` ``->`` ``B(...)`` ``=`` ``!=``.
Identifiers not declared as constants are schema variables; they are only
legal where a schema is expected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import KbSyntaxError
from .kb import AelFormula, DefaultRule, Generalisation, KnowledgeBase, PredicateDecl
from .syntax import (
    EQ,
    FALSE,
    TRUE,
    And,
    Atom,
    Belief,
    Formula,
    Implies,
    Not,
    Or,
    Term,
    const,
    equality,
    free_vars,
    var,
)

ANNOTATION_TAGS = ("incomplete", "uncertain", "vague", "simplified")
FLAG_NAMES = ("unique-names", "domain-closure")
_RESERVED = ("B", "true", "false")

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<arrow>->)
      | (?P<squig>~>)
      | (?P<neq>!=)
      | (?P<ident>[A-Za-z0-9_]+)
      | (?P<punct>[().,:/&|=\[\]-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    col: int


def _tokenize(text: str, line: int) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise KbSyntaxError(f"unexpected character {text[pos]!r}", line, pos + 1)
        if m.lastgroup != "ws":
            kind = m.lastgroup
            value = m.group()
            if kind == "punct":
                kind = value
            tokens.append(_Token(kind, value, pos + 1))
        pos = m.end()
    return tokens


class _Declarations:
    def __init__(self) -> None:
        self.constants: set[str] = set()
        self.predicates: dict[str, PredicateDecl] = {}
        self.flags: set[str] = set()

    def add_predicate(self, name: str, arity: int, abnormality: bool, line: int) -> None:
        if name in _RESERVED or name == EQ:
            raise KbSyntaxError(f"predicate name {name!r} is reserved", line)
        existing = self.predicates.get(name)
        decl = PredicateDecl(name, arity, abnormality)
        if existing is not None and existing != decl:
            raise KbSyntaxError(f"conflicting declaration for predicate {name!r}", line)
        self.predicates[name] = decl


class _FormulaParser:
    """Recursive descent over one token stream."""

    def __init__(self, tokens: list[_Token], decls: _Declarations, line: int, allow_vars: bool):
        self.tokens = tokens
        self.decls = decls
        self.line = line
        self.allow_vars = allow_vars
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise KbSyntaxError("unexpected end of statement", self.line)
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise KbSyntaxError(f"expected {kind!r}, found {tok.value!r}", self.line, tok.col)
        return tok

    def formula(self) -> Formula:
        left = self.disjunction()
        tok = self.peek()
        if tok is not None and tok.kind == "arrow":
            self.next()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        out = self.conjunction()
        while (tok := self.peek()) is not None and tok.kind == "|":
            self.next()
            out = Or(out, self.conjunction())
        return out

    def conjunction(self) -> Formula:
        out = self.unary()
        while (tok := self.peek()) is not None and tok.kind == "&":
            self.next()
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        tok = self.peek()
        if tok is not None and tok.kind == "-":
            self.next()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.next()
        if tok.kind == "(":
            inner = self.formula()
            self.expect(")")
            return inner
        if tok.kind != "ident":
            raise KbSyntaxError(f"expected a formula, found {tok.value!r}", self.line, tok.col)
        name = tok.value
        if name == "true":
            return TRUE
        if name == "false":
            return FALSE
        if name == "B":
            self.expect("(")
            body = self.formula()
            self.expect(")")
            return Belief(body)
        nxt = self.peek()
        if nxt is not None and nxt.kind == "(":
            return self.pred_atom(tok)
        if nxt is not None and nxt.kind in ("=", "neq"):
            op = self.next()
            right = self.term(self.ident())
            atom = equality(self.term(tok), right)
            return Not(atom) if op.kind == "neq" else atom
        # bare identifier: a declared 0-ary predicate
        decl = self.decls.predicates.get(name)
        if decl is None or decl.arity != 0:
            raise KbSyntaxError(f"undeclared symbol {name!r}", self.line, tok.col)
        return Atom(name, (), decl.abnormality)

    def pred_atom(self, head: _Token) -> Atom:
        decl = self.decls.predicates.get(head.value)
        if decl is None:
            raise KbSyntaxError(f"undeclared symbol {head.value!r}", self.line, head.col)
        self.expect("(")
        args: list[Term] = []
        if self.peek() is not None and self.peek().kind != ")":
            args.append(self.term(self.ident()))
            while self.peek() is not None and self.peek().kind == ",":
                self.next()
                args.append(self.term(self.ident()))
        self.expect(")")
        if len(args) != decl.arity:
            raise KbSyntaxError(
                f"arity mismatch: {head.value}/{decl.arity} applied to {len(args)} arguments",
                self.line,
                head.col,
            )
        return Atom(head.value, tuple(args), decl.abnormality)

    def ident(self) -> _Token:
        tok = self.next()
        if tok.kind != "ident":
            raise KbSyntaxError(f"expected an identifier, found {tok.value!r}", self.line, tok.col)
        return tok

    def term(self, tok: _Token) -> Term:
        if tok.value in self.decls.constants:
            return const(tok.value)
        if not self.allow_vars:
            raise KbSyntaxError(f"undeclared symbol {tok.value!r}", self.line, tok.col)
        if tok.value in _RESERVED:
            raise KbSyntaxError(f"{tok.value!r} is reserved", self.line, tok.col)
        return var(tok.value)

    def at_end(self) -> bool:
        return self.pos == len(self.tokens)


@dataclass(frozen=True)
class _Statement:
    keyword: str
    tokens: list[_Token]
    raw: str
    line: int


def _split_statements(text: str) -> list[_Statement]:
    statements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if not line.rstrip().endswith("."):
            raise KbSyntaxError("statement must end with '.'", lineno, len(line.rstrip()))
        # dots only terminate statements, so a line may carry several
        pos = 0
        while pos < len(line):
            dot = line.find(".", pos)
            if dot < 0:
                if line[pos:].strip():
                    raise KbSyntaxError("statement must end with '.'", lineno, pos + 1)
                break
            body = line[pos:dot].strip()
            if body:
                tokens = _tokenize(body, lineno)
                if not tokens or tokens[0].kind != "ident":
                    raise KbSyntaxError("statement must start with a keyword", lineno, pos + 1)
                statements.append(_Statement(tokens[0].value, tokens[1:], body, lineno))
            pos = dot + 1
    return statements


def parse_kb(text: str) -> KnowledgeBase:
    """Parse KB-language source into a validated KnowledgeBase."""
    statements = _split_statements(text)
    decls = _Declarations()

    # declarations first, so statement order in the file does not matter
    for st in statements:
        if st.keyword == "const":
            for tok in _ident_list(st):
                if tok.value in _RESERVED:
                    raise KbSyntaxError(f"constant name {tok.value!r} is reserved", st.line, tok.col)
                decls.constants.add(tok.value)
        elif st.keyword in ("pred", "abpred"):
            for name_tok, arity_tok in _signature_list(st):
                decls.add_predicate(name_tok.value, int(arity_tok.value), st.keyword == "abpred", st.line)
        elif st.keyword == "flag":
            name = st.raw[len("flag"):].strip()
            if name not in FLAG_NAMES:
                raise KbSyntaxError(f"unknown flag {name!r}", st.line)
            decls.flags.add(name)
        elif st.keyword not in ("fact", "all", "def", "default", "ael"):
            raise KbSyntaxError(f"unknown statement keyword {st.keyword!r}", st.line, 1)

    facts: list[Formula] = []
    gens: list[Generalisation] = []
    defaults: list[DefaultRule] = []
    aels: list[AelFormula] = []
    seen_ids: set[str] = set()

    def fresh_id(tok: _Token, line: int) -> str:
        if tok.value in seen_ids:
            raise KbSyntaxError(f"duplicate statement id {tok.value!r}", line, tok.col)
        seen_ids.add(tok.value)
        return tok.value

    for st in statements:
        if st.keyword == "fact":
            p = _FormulaParser(st.tokens, decls, st.line, allow_vars=False)
            f = p.formula()
            _require_end(p)
            facts.append(f)
        elif st.keyword in ("all", "def"):
            p = _FormulaParser(st.tokens, decls, st.line, allow_vars=True)
            gen_id = fresh_id(p.ident(), st.line)
            p.expect(":")
            if st.keyword == "all":
                body = p.formula()
                if not isinstance(body, Implies):
                    raise KbSyntaxError("universal generalisation must be an implication", st.line)
                ant, cons = body.left, body.right
            else:
                ant = p.formula()
                p.expect("squig")
                cons = p.formula()
            annotation = _annotation(p, st.line)
            _require_end(p)
            _check_gen_vars(ant, cons, st.line)
            gens.append(Generalisation(gen_id, "all" if st.keyword == "all" else "def", ant, cons, annotation))
        elif st.keyword == "default":
            p = _FormulaParser(st.tokens, decls, st.line, allow_vars=True)
            rule_id = fresh_id(p.ident(), st.line)
            p.expect(":")
            prereq = p.formula()
            p.expect(":")
            justif = p.formula()
            p.expect("/")
            concl = p.formula()
            _require_end(p)
            escaped = (free_vars(justif) | free_vars(concl)) - free_vars(prereq)
            if escaped:
                raise KbSyntaxError(
                    f"variable {sorted(escaped)[0]!r} escapes the prerequisite of default {rule_id!r}",
                    st.line,
                )
            defaults.append(DefaultRule(rule_id, prereq, justif, concl))
        elif st.keyword == "ael":
            p = _FormulaParser(st.tokens, decls, st.line, allow_vars=True)
            ael_id = fresh_id(p.ident(), st.line)
            p.expect(":")
            f = p.formula()
            _require_end(p)
            aels.append(AelFormula(ael_id, f))

    return KnowledgeBase(
        constants=tuple(sorted(decls.constants)),
        predicates=tuple(sorted(decls.predicates.values())),
        facts=tuple(facts),
        generalisations=tuple(gens),
        defaults=tuple(defaults),
        ael_formulas=tuple(aels),
        unique_names="unique-names" in decls.flags,
        domain_closure="domain-closure" in decls.flags,
    )


def parse_formula(text: str, kb: KnowledgeBase, allow_vars: bool = False) -> Formula:
    """Parse one query formula against a KB's declarations."""
    decls = _Declarations()
    decls.constants = set(kb.constants)
    decls.predicates = {p.name: p for p in kb.predicates}
    tokens = _tokenize(text, 1)
    p = _FormulaParser(tokens, decls, 1, allow_vars=allow_vars)
    f = p.formula()
    _require_end(p)
    return f


def _require_end(p: _FormulaParser) -> None:
    if not p.at_end():
        tok = p.peek()
        raise KbSyntaxError(f"unexpected trailing {tok.value!r}", p.line, tok.col)


def _annotation(p: _FormulaParser, line: int) -> str | None:
    tok = p.peek()
    if tok is None or tok.kind != "[":
        return None
    p.next()
    tag = p.ident().value
    p.expect("]")
    if tag not in ANNOTATION_TAGS:
        raise KbSyntaxError(f"unknown annotation {tag!r}; expected one of {ANNOTATION_TAGS}", line)
    return tag


def _check_gen_vars(ant: Formula, cons: Formula, line: int) -> None:
    shared = free_vars(ant) & free_vars(cons)
    total = free_vars(ant) | free_vars(cons)
    if len(total) != 1 or len(shared) != 1:
        raise KbSyntaxError(
            "generalisation must use exactly one variable, shared by antecedent and consequent",
            line,
        )


def _ident_list(st: _Statement) -> list[_Token]:
    p = _FormulaParser(st.tokens, _Declarations(), st.line, allow_vars=True)
    out = [p.ident()]
    while p.peek() is not None:
        p.expect(",")
        out.append(p.ident())
    return out


def _signature_list(st: _Statement) -> list[tuple[_Token, _Token]]:
    p = _FormulaParser(st.tokens, _Declarations(), st.line, allow_vars=True)
    out = []
    while True:
        name = p.ident()
        p.expect("/")
        arity = p.ident()
        if not arity.value.isdigit():
            raise KbSyntaxError(f"arity must be a number, found {arity.value!r}", st.line, arity.col)
        out.append((name, arity))
        if p.peek() is None:
            return out
        p.expect(",")
