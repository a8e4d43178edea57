"""JSON encodings for the library types.

Rationals always travel as strings ("3/7", "-2"); JSON numbers are accepted
on input only when they are integers. Structural errors carry a JSON path
such as ``$.psis[1][0]``; syntax errors carry ``line L, column C``.
"""

import hashlib
import json
from fractions import Fraction

from .connection import ConnectionData
from .errors import SpecError
from .grassmann import GrassmannElement, members
from .morphism import ClassifyingPoint, EvenOperator, PullbackData
from .polyfun import Polynomial


def fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value, where="$"):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SpecError(f"expected a rational string like '3/7', got {json.dumps(value)}", where)
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"bad rational {value!r} ({exc})", where) from None


def _vector(value, n, where):
    if not isinstance(value, list):
        raise SpecError("expected a list", where)
    if n is not None and len(value) != n:
        raise SpecError(f"expected {n} entries, got {len(value)}", where)
    return [parse_rational(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _posint(obj, key, where="$"):
    value = obj.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise SpecError(f"'{key}' must be a positive integer", f"{where}.{key}")
    return value


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None


def load_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(str(exc), str(path)) from None
    return loads(text)


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest(obj):
    return "sha256:" + hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


# -- morphism specs ---------------------------------------------------------


def pullback_from_json(obj, k_override=None):
    if not isinstance(obj, dict):
        raise SpecError("morphism spec must be a JSON object", "$")
    k = _posint(obj, "k")
    n = _posint(obj, "n")
    phi = _vector(obj.get("phi"), n, "$.phi")
    raw_psis = obj.get("psis")
    if not isinstance(raw_psis, list):
        raise SpecError("expected a list of odd vectors", "$.psis")
    if len(raw_psis) != k:
        raise SpecError(f"expected {k} odd vectors, got {len(raw_psis)}", "$.psis")
    psis = [_vector(p, n, f"$.psis[{i}]") for i, p in enumerate(raw_psis)]
    if k_override is not None and k_override != k:
        if k_override < k:
            raise SpecError(f"--k {k_override} is smaller than the input's k={k}", "$.k")
        psis += [[Fraction(0)] * n for _ in range(k_override - k)]
        k = k_override
    evens = {}
    raw_evens = obj.get("evens", [])
    if not isinstance(raw_evens, list):
        raise SpecError("expected a list of even-sector records", "$.evens")
    for i, rec in enumerate(raw_evens):
        where = f"$.evens[{i}]"
        if not isinstance(rec, dict):
            raise SpecError("expected an object", where)
        idx = rec.get("indices")
        if (
            not isinstance(idx, list)
            or len(idx) < 2
            or any(isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= k for x in idx)
            or idx != sorted(set(idx))
        ):
            raise SpecError(f"indices must be a strictly increasing list of >= 2 generators in 1..{k}", f"{where}.indices")
        A = _vector(rec.get("A", ["0"] * n), n, f"{where}.A")
        B_raw = rec.get("B", [["0"] * n for _ in range(n)])
        if not isinstance(B_raw, list) or len(B_raw) != n:
            raise SpecError(f"expected an {n}x{n} matrix", f"{where}.B")
        B = [_vector(row, n, f"{where}.B[{r}]") for r, row in enumerate(B_raw)]
        key = tuple(idx)
        if key in evens:
            raise SpecError(f"duplicate even sector {idx}", where)
        evens[key] = EvenOperator(n, A, B)
    return PullbackData(k, n, phi, psis, evens)


def operator_to_json(op):
    return {"A": [fmt(a) for a in op.A], "B": [[fmt(b) for b in row] for row in op.B]}


def pullback_to_json(d):
    """Canonical morphism spec: zero even sectors omitted, B symmetrized."""
    evens = []
    for mask in sorted(d.evens, key=lambda m: (bin(m).count("1"), members(m))):
        rec = {"indices": list(members(mask))}
        rec.update(operator_to_json(d.evens[mask]))
        evens.append(rec)
    return {
        "k": d.k,
        "n": d.n,
        "phi": [fmt(x) for x in d.phi],
        "psis": [[fmt(x) for x in p] for p in d.psis],
        "evens": evens,
    }


def canonicalize_spec(obj):
    return pullback_to_json(pullback_from_json(obj))


# -- classifying points -------------------------------------------------------


def classifying_point_to_json(c):
    return {
        "phi": [fmt(x) for x in c.phi],
        "psi1": [fmt(x) for x in c.psi1],
        "psi2": [fmt(x) for x in c.psi2],
        "parity": c.parity_tag,
    }


def classifying_point_from_json(obj):
    """Parse without enforcing the minor constraint; the caller decides how to fail."""
    if not isinstance(obj, dict):
        raise SpecError("classifying point must be a JSON object", "$")
    phi = _vector(obj.get("phi"), None, "$.phi")
    n = len(phi)
    if n < 1:
        raise SpecError("phi must be nonempty", "$.phi")
    psi1 = _vector(obj.get("psi1"), n, "$.psi1")
    psi2 = _vector(obj.get("psi2"), n, "$.psi2")
    parity = obj.get("parity", "odd")
    if parity != "odd":
        raise SpecError("parity must be 'odd'", "$.parity")
    return phi, psi1, psi2


def classifying_point(obj):
    phi, psi1, psi2 = classifying_point_from_json(obj)
    return ClassifyingPoint(phi, psi1, psi2)


# -- connections --------------------------------------------------------------


def connection_from_json(obj):
    if not isinstance(obj, dict):
        raise SpecError("connection must be a JSON object", "$")
    n = _posint(obj, "n")
    gamma = obj.get("gamma")
    if not isinstance(gamma, list):
        raise SpecError("expected a dense Christoffel array", "$.gamma")
    if len(gamma) == n**3 and all(not isinstance(x, list) for x in gamma):
        flat = [parse_rational(x, f"$.gamma[{i}]") for i, x in enumerate(gamma)]
        it = iter(flat)
        return ConnectionData(n, [[[next(it) for _ in range(n)] for _ in range(n)] for _ in range(n)])
    if len(gamma) != n:
        raise SpecError(f"expected {n} planes (upper index m)", "$.gamma")
    planes = []
    for m, plane in enumerate(gamma):
        if not isinstance(plane, list) or len(plane) != n:
            raise SpecError(f"expected {n} rows", f"$.gamma[{m}]")
        planes.append([_vector(row, n, f"$.gamma[{m}][{i}]") for i, row in enumerate(plane)])
    return ConnectionData(n, planes)


def connection_to_json(c):
    return {"n": c.n, "gamma": [[[fmt(x) for x in row] for row in plane] for plane in c.gamma]}


# -- algebra elements ---------------------------------------------------------


def grassmann_to_json(a):
    return [
        {"indices": list(idx), "num": str(c.numerator), "den": str(c.denominator)} for idx, c in a.terms()
    ]


def grassmann_from_json(k, entries):
    coeffs = {}
    for e in entries:
        c = Fraction(int(e["num"]), int(e["den"]))
        coeffs[tuple(e["indices"])] = coeffs.get(tuple(e["indices"]), 0) + c
    return GrassmannElement(k, coeffs)


def polynomial_to_json(f):
    return [
        {"exponents": list(e), "num": str(c.numerator), "den": str(c.denominator)} for e, c in f.sorted_terms()
    ]


def polynomial_from_json(n, entries):
    return Polynomial(n, {tuple(e["exponents"]): Fraction(int(e["num"]), int(e["den"])) for e in entries})


def violation_to_json(v):
    return {
        "f": str(v.f),
        "g": str(v.g),
        "f_terms": polynomial_to_json(v.f),
        "g_terms": polynomial_to_json(v.g),
        "basis_set": list(v.basis_set),
        "lhs": fmt(v.lhs),
        "rhs": fmt(v.rhs),
    }
