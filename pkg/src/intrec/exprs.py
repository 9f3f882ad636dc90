"""Expression text: parsing into rational functions and deterministic printing.

The grammar is tiny and LL(1): integers, named variables, + - * / ^ with the
usual precedence (^ binds tightest, then unary minus, then * and /, then
+ and -), parentheses, and nonnegative integer exponents only.  Implicit
multiplication is rejected rather than guessed.  Printing is the inverse
contract: every printed polynomial or rational function re-parses to an
equal value, and output is byte-stable across runs.

Display convention: polynomials in t print lowest power first (series
style), polynomials in x or n print highest power first.
"""

from .errors import DivisionByZeroExpr, ParseError, UnknownVariable, ZeroDenominator
from . import poly as P
from .poly import Poly
from .ratfunc import RatFunc

# -- tokenizer ---------------------------------------------------------------

_OPS = set("+-*/^()")
# ASCII only: str.isdigit accepts superscripts etc. that int() rejects
_DIGITS = set("0123456789")
_LETTERS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")


def _tokens(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            out.append((ch, ch, i))
            i += 1
            continue
        if ch in _DIGITS:
            j = i
            while j < len(text) and text[j] in _DIGITS:
                j += 1
            out.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in _LETTERS:
            j = i
            while j < len(text) and (text[j] in _LETTERS or text[j] in _DIGITS):
                j += 1
            out.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, i)
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, allowed):
        self.toks = _tokens(text)
        self.pos = 0
        self.allowed = allowed

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %s, found %r" % (kind, tok[1]), tok[2])
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take()
        exps = [self._exponent()]
        while self.peek()[0] == "^":
            self.take()
            exps.append(self._exponent())
        k = exps[-1]
        for e in reversed(exps[:-1]):
            k = e**k
        return ("pow", base, k)

    def _exponent(self):
        kind, val, pos = self.peek()
        if kind != "int":
            raise ParseError("exponent must be a nonnegative integer literal", pos)
        self.take()
        return val

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return ("int", val)
        if kind == "name":
            if val not in self.allowed:
                raise UnknownVariable(val, pos)
            return ("var", val)
        if kind == "(":
            node = self.expr()
            self.take(")")
            return node
        raise ParseError("unexpected %s" % ("end of input" if kind == "end" else repr(val)), pos)


def parse(text, allowed_vars):
    """AST for `text`; raises ParseError / UnknownVariable with positions."""
    p = _Parser(text, set(allowed_vars))
    node = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError("trailing input starting at %r" % (tok[1],), tok[2])
    return node


def lower(node, default_var="x"):
    """Evaluate an AST in exact rational-function arithmetic."""

    def walk(nd):
        tag = nd[0]
        if tag == "int":
            return nd[1]
        if tag == "var":
            return RatFunc(Poly.variable(nd[1]))
        if tag == "neg":
            return -walk(nd[1])
        if tag == "pow":
            return walk(nd[1]) ** nd[2]
        a, b = walk(nd[1]), walk(nd[2])
        if tag == "add":
            return a + b
        if tag == "sub":
            return a - b
        if tag == "mul":
            return a * b
        try:
            if isinstance(a, P.NUM_TYPES) and isinstance(b, P.NUM_TYPES):
                return P.num_div(a, b)
            return a / b
        except (ZeroDenominator, ZeroDivisionError):
            raise DivisionByZeroExpr("division by an expression that is identically zero")

    v = walk(node)
    if not isinstance(v, RatFunc):
        v = RatFunc(Poly.const(default_var, v))
    return v


def parse_ratfunc(text, allowed_vars, default_var="x"):
    return lower(parse(text, allowed_vars), default_var)


# -- printing ----------------------------------------------------------------


def fmt_rational(v):
    return str(v)


def _fmt_monomial(coeff, var, k, inner=None):
    """One term "c*v^k"; returns (sign, body) with sign in {+1, -1}."""
    sign = 1
    if inner is not None:
        body, single = inner
        if k == 0:
            return sign, body if single else "(%s)" % body
        head = body if single else "(%s)" % body
        if body == "1" and single:
            head = None
    else:
        if isinstance(coeff, P.NUM_TYPES) and coeff < 0:
            sign = -1
            coeff = -coeff
        head = None if coeff == 1 else fmt_rational(coeff)
    if k == 0:
        return sign, head if head is not None else "1"
    vp = var if k == 1 else "%s^%d" % (var, k)
    return sign, vp if head is None else "%s*%s" % (head, vp)


def fmt_poly(p):
    """Deterministic text form; ascending for t, descending for x and n."""
    if p.is_zero():
        return "0"
    indices = range(len(p.coeffs)) if p.var == "t" else range(len(p.coeffs) - 1, -1, -1)
    parts = []
    for k in indices:
        c = p.coeffs[k]
        if not c:
            continue
        if isinstance(c, Poly):
            body = fmt_poly(c)
            single = not _has_top_pm(body)
            if body.startswith("-") and single:
                sign, piece = _fmt_monomial(None, p.var, k, inner=(body[1:], True))
                sign = -sign
            else:
                sign, piece = _fmt_monomial(None, p.var, k, inner=(body, single))
        else:
            sign, piece = _fmt_monomial(c, p.var, k)
        parts.append((sign, piece))
    out = []
    for i, (sign, piece) in enumerate(parts):
        if i == 0:
            out.append("-" + piece if sign < 0 else piece)
        else:
            out.append(("-" if sign < 0 else "+") + piece)
    return "".join(out)


def _has_top_pm(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
    return False


def fmt_ratfunc(r):
    num = fmt_poly(r.num)
    if r.den.is_constant() and r.den.constant() == 1:
        return num
    den = fmt_poly(r.den)
    ns = "(%s)" % num if _has_top_pm(num) else num
    ds = den if _single_factor(den) else "(%s)" % den
    return "%s/%s" % (ns, ds)


def _single_factor(s):
    # safe as a division's right operand only if a lone atom (no operators)
    return all(op not in s for op in "+-*/^(")
