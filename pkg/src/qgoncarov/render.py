"""LaTeX rendering for Q(q) values, x-polynomials and symbolic expansions."""

from qgoncarov.goncarov import goncarov_terms


def _frac_latex(c):
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def qpoly_latex(p):
    if p.is_zero():
        return "0"
    out = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _frac_latex(mag)
        else:
            qk = "q" if k == 1 else f"q^{{{k}}}"
            body = qk if mag == 1 else _frac_latex(mag) + qk
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(sign + body)
    return "".join(out)


def qrat_latex(r):
    if r.is_polynomial():
        return qpoly_latex(r.num)
    return rf"\frac{{{qpoly_latex(r.num)}}}{{{qpoly_latex(r.den)}}}"


def xpoly_latex(f):
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if not c:
            continue
        xk = "" if k == 0 else ("x" if k == 1 else f"x^{{{k}}}")
        if c == 1 and xk:
            body = xk
        elif xk:
            body = rf"\left({qrat_latex(c)}\right){xk}"
        else:
            body = qrat_latex(c)
        terms.append(body)
    return " + ".join(terms)


def qbinom_latex(n, k):
    """``[n]_q`` when the binomial is ``[n, 1]`` or ``[n, n-1]``, otherwise a genfrac bracket."""
    if k == 1 or k == n - 1:
        return f"[{n}]_q"
    return rf"\genfrac{{[}}{{]}}{{0pt}}{{}}{{{n}}}{{{k}}}_q"


def symbolic_latex(n):
    """``t_n`` over generic ``p_k`` and nodes ``z_j``, grouped by ``p_i(x)`` from the top degree."""
    by_degree = {}
    for t in goncarov_terms(n):
        by_degree.setdefault(t.degree, []).append(t)
    pieces = []
    for d in sorted(by_degree, reverse=True):
        for t in by_degree[d]:
            factors = "".join(qbinom_latex(hi, lo) for hi, lo in t.binomials if 0 < lo < hi)
            nodes = "".join(f"p_{k}(z_{j})" for k, j in sorted(t.nodes, key=lambda kj: kj[1]))
            xpart = f"p_{d}(x)" if d > 0 else ""
            body = factors + (" " if factors and (nodes or xpart) else "") + nodes + xpart
            if not body:
                body = "1"
            sign = "-" if t.sign < 0 else ("+" if pieces else "")
            pieces.append(sign + body)
    return "".join(pieces)
