#!/usr/bin/env python3
"""Regenerates corpus/ from factorizations.

Polynomials are written as slice products of simple factors; the product is
expanded here with plain quaternion convolution so the JSON files carry only
coefficients. Run from the repository root: python3 tools/make_corpus.py
"""

import json
from pathlib import Path


def qmul(a, b):
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return (w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2)


def q(v):
    return tuple(float(t) for t in v) if isinstance(v, (list, tuple)) else (float(v), 0.0, 0.0, 0.0)


def product(*factors):
    out = [q(1)]
    for f in factors:
        f = [q(c) for c in f]
        res = [(0.0, 0.0, 0.0, 0.0)] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                c = qmul(a, b)
                res[i + j] = tuple(s + t for s, t in zip(res[i + j], c))
        out = res
    return out


def lin(y):
    """x - y"""
    y = q(y)
    return [tuple(-t for t in y), 1]


def sph(alpha, beta):
    """x^2 - 2 alpha x + alpha^2 + beta^2: vanishes on the sphere alpha + beta S"""
    return [alpha * alpha + beta * beta, -2 * alpha, 1]


def const(c):
    return [c]


def encode(coeffs):
    out = []
    for c in coeffs:
        c = q(c)
        c = tuple(0.0 if abs(t) < 1e-15 else round(t, 15) for t in c)
        out.append(c[0] if c[1:] == (0.0, 0.0, 0.0) else list(c))
    return out


I, J, K = (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


def u(w, x, y, z):
    return (w, x, y, z)


POLY = [
    ("p01", 1.0, "x - 1/2", product(lin(0.5))),
    ("p02", 0.8, "(x + 0.4)(x - 0.3j): negative real zero, isolated zero",
     product(lin(-0.4), lin(u(0, 0, 0.3, 0)))),
    ("p03", 1.0, "x^2 + 1/4: spherical zero", product(sph(0, 0.5))),
    ("p04", 1.0, "(x - 0.5i)(x - 0.4j): two isolated zeros",
     product(lin(u(0, 0.5, 0, 0)), lin(u(0, 0, 0.4, 0)))),
    ("p05", 1.0, "(x - 0.2 - 0.5i)(x - 0.2 - 0.5j): isolated zero of total multiplicity 2",
     product(lin(u(0.2, 0.5, 0, 0)), lin(u(0.2, 0, 0.5, 0)))),
    ("p06", 1.0, "(x - 0.3)(x^2 + 0.36)(x - 0.5k)(1 + i + j)",
     product(lin(0.3), sph(0, 0.6), lin(u(0, 0, 0, 0.5)), const(u(1, 1, 1, 0)))),
    ("p07", 1.5, "(x + 0.6)(x - 0.2)(x - 0.1 - 0.4j)(x^2 - 0.4x + 0.53)",
     product(lin(-0.6), lin(0.2), lin(u(0.1, 0, 0.4, 0)), sph(0.2, 0.7))),
    ("p08", 1.0, "(x - 0.9(0.6i + 0.8j))(x + 0.3): zero at 0.9 r",
     product(lin(u(0, 0.54, 0.72, 0)), lin(-0.3))),
    ("p09", 1.0, "(x - 2k)(x - 0.5): one zero outside the ball",
     product(lin(u(0, 0, 0, 2)), lin(0.5))),
    ("p10", 1.5, "(x^2 + 1)(x - 1.1)(x - 0.3 - 0.8k)(x + 0.7i)(x - 0.4)",
     product(sph(0, 1), lin(1.1), lin(u(0.3, 0, 0, 0.8)), lin(u(0, -0.7, 0, 0)), lin(0.4))),
    ("p11", 1.5, "(x - 0.5)^2 (x^2 + 0.49)(x - 0.6j)(x - 0.6i)(x + 1)",
     product(lin(0.5), lin(0.5), sph(0, 0.7), lin(u(0, 0, 0.6, 0)), lin(u(0, 0.6, 0, 0)),
             lin(-1))),
    ("p12", 0.8, "(x - 0.3)(x + 0.5)(x^2 - 0.2x + 0.26)(x - 0.1 - 0.3i - 0.2j)(x - 0.6k)"
     "(x - 0.2j)(x + 0.45)(2 - k)",
     product(lin(0.3), lin(-0.5), sph(0.1, 0.5), lin(u(0.1, 0.3, 0.2, 0)), lin(u(0, 0, 0, 0.6)),
             lin(u(0, 0, 0.2, 0)), lin(-0.45), const(u(2, 0, 0, -1)))),
]

RATIONAL = [
    ("q01", 2.0, "(x^2 + 1)^-1 (x + i): nonuniform pole sphere", sph(0, 1), lin(u(0, -1, 0, 0))),
    ("q02", 1.0, "(x - 1/2)^-1 (x + 2): real pole", lin(0.5), lin(-2)),
    ("q03", 1.0, "(x^2 + 0.25)^-1 (x - 0.4)(x + 0.2k): uniform pole sphere",
     sph(0, 0.5), product(lin(0.4), lin(u(0, 0, 0, -0.2)))),
    ("q04", 1.0, "((x + 0.5)(x^2 + 0.16)(x^2 + 0.49))^-1 (x - 0.4i)(x - 0.3)(x - 0.2j): "
     "real pole, nonuniform and uniform spheres",
     product(lin(-0.5), sph(0, 0.4), sph(0, 0.7)),
     product(lin(u(0, 0.4, 0, 0)), lin(0.3), lin(u(0, 0, 0.2, 0)))),
    ("q05", 2.0, "((x^2 + 1)^2)^-1 (x + i)(x - 3)",
     product(sph(0, 1), sph(0, 1)), product(lin(u(0, -1, 0, 0)), lin(3))),
    ("q06", 1.0, "((x + 0.5)^2)^-1 (x - 0.3k): double real pole",
     product(lin(-0.5), lin(-0.5)), lin(u(0, 0, 0, 0.3))),
]


def main():
    root = Path(__file__).resolve().parent.parent / "corpus"
    manifest = {"polynomial": [], "rational": []}
    for name, r, note, coeffs in POLY:
        path = root / "poly" / f"{name}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"name": name, "note": note, "r": r, "coeffs": encode(coeffs)},
                                   indent=2) + "\n")
        manifest["polynomial"].append(f"poly/{name}.json")
    for name, r, note, den, num in RATIONAL:
        path = root / "rational" / f"{name}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"name": name, "note": note, "r": r, "den": encode(den),
                                    "num": encode(num)}, indent=2) + "\n")
        manifest["rational"].append(f"rational/{name}.json")
    (root / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
