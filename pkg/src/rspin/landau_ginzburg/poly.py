"""Multivariate polynomials with exact cyclotomic coefficients.

Variables are kept in a canonical sorted order; operations align variable
sets automatically.  Division by a single polynomial is the plain long
division in graded-reverse-lexicographic order, used where exactness is
guaranteed (difference quotients, twisted-identity entries).
"""

from __future__ import annotations

from ..scalars import Cyc, as_cyc, format_scalar


class PolyError(ValueError):
    pass


def _merge_vars(a_vars, b_vars):
    if a_vars == b_vars:
        return a_vars
    return tuple(sorted(set(a_vars) | set(b_vars)))


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms):
        self.vars = tuple(variables)
        self.terms = {}
        for exp, coeff in terms.items():
            coeff = as_cyc(coeff)
            if coeff:
                self.terms[tuple(exp)] = coeff

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(variables=()):
        return Poly(variables, {})

    @staticmethod
    def const(value, variables=()):
        variables = tuple(variables)
        return Poly(variables, {(0,) * len(variables): as_cyc(value)})

    @staticmethod
    def variable(name, variables=None):
        if variables is None:
            variables = (name,)
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise PolyError("variable %r not among %r" % (name, variables))
        return Poly(variables, {exp: Cyc.one()})

    def align(self, variables):
        variables = tuple(variables)
        if variables == self.vars:
            return self
        index = {v: k for k, v in enumerate(variables)}
        for v in self.vars:
            if v not in index:
                raise PolyError("cannot drop variable %r" % v)
        terms = {}
        for exp, coeff in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.vars, exp):
                new[index[v]] = e
            terms[tuple(new)] = coeff
        return Poly(variables, terms)

    @staticmethod
    def _aligned(a, b):
        variables = _merge_vars(a.vars, b.vars)
        return a.align(variables), b.align(variables), variables

    # -- basic queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        zero_exp = (0,) * len(self.vars)
        return self.terms.get(zero_exp, Cyc.zero())

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Cyc.zero())

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return self.is_zero()
            other = Poly.const(other, self.vars)
        a, b, _ = Poly._aligned(self, other)
        return a.terms == b.terms

    def __hash__(self):
        raise TypeError("Poly is not hashable")

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other, self.vars)
        a, b, variables = Poly._aligned(self, other)
        terms = dict(a.terms)
        for exp, coeff in b.terms.items():
            acc = terms.get(exp)
            total = coeff if acc is None else acc + coeff
            if total:
                terms[exp] = total
            elif acc is not None:
                del terms[exp]
        return Poly(variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b, variables = Poly._aligned(self, other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                acc = terms.get(exp)
                total = prod if acc is None else acc + prod
                if total:
                    terms[exp] = total
                elif acc is not None:
                    del terms[exp]
        return Poly(variables, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value):
        value = as_cyc(value)
        return Poly(self.vars, {e: value * c for e, c in self.terms.items()})

    def __pow__(self, k):
        result = Poly.const(1, self.vars)
        for _ in range(k):
            result = result * self
        return result

    # -- calculus and substitution ----------------------------------------------

    def derivative(self, name):
        if name not in self.vars:
            return Poly.zero(self.vars)
        i = self.vars.index(name)
        terms = {}
        for exp, coeff in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            terms[tuple(new)] = coeff * exp[i]
        return Poly(self.vars, terms)

    def substitute(self, mapping):
        """Substitute variables by scalar multiples of variables or constants.

        mapping: name -> (coef, new_name or None); unlisted variables are kept.
        """
        new_names = set()
        for v in self.vars:
            if v in mapping:
                _, nn = mapping[v]
                if nn is not None:
                    new_names.add(nn)
            else:
                new_names.add(v)
        variables = tuple(sorted(new_names))
        index = {v: k for k, v in enumerate(variables)}
        terms = {}
        for exp, coeff in self.terms.items():
            new_exp = [0] * len(variables)
            value = coeff
            dead = False
            for v, e in zip(self.vars, exp):
                if e == 0:
                    continue
                if v in mapping:
                    coef, nn = mapping[v]
                    coef = as_cyc(coef)
                    if nn is None:
                        if not coef:
                            dead = True
                            break
                        value = value * coef ** e
                    else:
                        value = value * coef ** e
                        new_exp[index[nn]] += e
                else:
                    new_exp[index[v]] += e
            if dead:
                continue
            key = tuple(new_exp)
            acc = terms.get(key)
            total = value if acc is None else acc + value
            if total:
                terms[key] = total
            elif acc is not None:
                del terms[key]
        return Poly(variables, terms)

    def rename(self, mapping):
        return self.substitute({old: (1, new) for old, new in mapping.items()})

    def eval_zero(self):
        """Value at the origin."""
        return self.constant_term()

    # -- division -----------------------------------------------------------------

    def divide_exact(self, divisor):
        """Quotient self/divisor; raises PolyError when the division is inexact."""
        a, b, variables = Poly._aligned(self, divisor)
        if b.is_zero():
            raise PolyError("division by the zero polynomial")
        quot = Poly.zero(variables)
        rem = a
        lead_b = _leading_term(b)
        while rem.terms:
            lead_r = _leading_term(rem)
            exp = tuple(x - y for x, y in zip(lead_r[0], lead_b[0]))
            if any(e < 0 for e in exp):
                raise PolyError("inexact polynomial division")
            coeff = lead_r[1] / lead_b[1]
            mono = Poly(variables, {exp: coeff})
            quot = quot + mono
            rem = rem - mono * b
        return quot

    # -- printing -------------------------------------------------------------------

    def __repr__(self):
        return "Poly(%s)" % format_poly(self)


def grevlex_key(exp):
    """Sort key: graded reverse lexicographic (largest last for sorted())."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _leading_term(p):
    exp = max(p.terms, key=grevlex_key)
    return exp, p.terms[exp]


def leading_term(p):
    return _leading_term(p)


def format_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for exp in sorted(p.terms, key=grevlex_key, reverse=True):
        coeff = p.terms[exp]
        mono = "*".join(
            ("%s" % v if e == 1 else "%s^%d" % (v, e))
            for v, e in zip(p.vars, exp) if e
        )
        c = format_scalar(coeff)
        if mono:
            if c == "1":
                body = mono
            elif c == "-1":
                body = "-" + mono
            else:
                cs = c if ("+" not in c and "-" not in c.lstrip("-")) else "(%s)" % c
                body = "%s*%s" % (cs, mono)
        else:
            body = c if ("+" not in c) else "(%s)" % c
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append("- " + body[1:])
        else:
            parts.append("+ " + body)
    return " ".join(parts)


# -- parsing: `x^3 + y^3`, `2*x^2*y - 1/3`, zeta via `z` is NOT used here ------

def parse_poly(text, order=1, variables=None):
    """Parse a polynomial; variables are inferred and sorted unless given."""
    tokens = _poly_tokenize(text)
    parser = _PolyParser(tokens, order)
    p = parser.parse_expr()
    if parser.pos != len(tokens):
        raise PolyError("trailing tokens in polynomial %r" % text)
    if variables is not None:
        p = p.align(tuple(sorted(set(variables) | set(p.vars))))
    return p


def _poly_tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_'~"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise PolyError("unexpected character %r in polynomial %r" % (ch, text))
    return tokens


class _PolyParser:
    def __init__(self, tokens, order):
        self.tokens = tokens
        self.pos = 0
        self.order = order

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise PolyError("unexpected end of polynomial")
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise PolyError("expected %r, found %r" % (kind, tok[0]))
        self.pos += 1
        return tok

    def parse_expr(self):
        if self.peek() == "-":
            self.take()
            value = -self.parse_term()
        else:
            if self.peek() == "+":
                self.take()
            value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            term = self.parse_term()
            value = value + term if op == "+" else value - term
        return value

    def parse_term(self):
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.parse_factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.degree() > 0:
                    raise PolyError("polynomial division is not part of the input syntax")
                value = value.scale(rhs.constant_term().inverse())
        return value

    def parse_factor(self):
        kind = self.peek()
        if kind == "int":
            n = self.take()[1]
            value = Poly.const(Cyc.rational(n, self.order))
        elif kind == "name":
            # every name is a variable; cyclotomic coefficients only arise
            # internally, never in the input syntax for potentials
            value = Poly.variable(self.take()[1])
        elif kind == "(":
            self.take()
            value = self.parse_expr()
            self.take(")")
            return self._maybe_power(value)
        elif kind == "-":
            self.take()
            return -self.parse_factor()
        else:
            raise PolyError("cannot parse polynomial near %r" % (kind,))
        return self._maybe_power(value)

    def _maybe_power(self, value):
        if self.peek() == "^":
            self.take()
            if self.peek() == "-":
                raise PolyError("negative exponents are not polynomial")
            n = self.take("int")[1]
            value = value ** n
        return value
