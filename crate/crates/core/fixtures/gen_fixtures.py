"""Regenerate the bundled finite-group fixtures.

Each group is given by generating matrices of a faithful unitary representation.
Elements are enumerated breadth-first from the identity; one-dimensional characters
are found by exhaustive search over roots of unity; the remaining irreducibles are
supplied explicitly.
"""
import itertools
import json
import pathlib

import numpy as np


def closure(gens):
    dim = gens[0].shape[0]
    elems = [np.eye(dim, dtype=complex)]
    words = [[]]
    i = 0
    while i < len(elems):
        for k, g in enumerate(gens):
            m = elems[i] @ g
            if not any(np.allclose(m, e) for e in elems):
                elems.append(m)
                words.append(words[i] + [k])
        i += 1
    return elems, words


def index_of(elems, m):
    for i, e in enumerate(elems):
        if np.allclose(e, m):
            return i
    raise ValueError("not closed")


def mult_table(elems):
    return [[index_of(elems, a @ b) for b in elems] for a in elems]


def rep_from_words(words, images):
    out = []
    for w in words:
        m = np.eye(images[0].shape[0], dtype=complex)
        for k in w:
            m = m @ images[k]
        out.append(m)
    return out


def is_hom(table, mats):
    n = len(mats)
    return all(
        np.allclose(mats[a] @ mats[b], mats[table[a][b]]) for a in range(n) for b in range(n)
    )


def characters(table, words, ngens):
    n = len(table)
    roots = [np.exp(2j * np.pi * k / n) for k in range(n)]
    found = []
    for choice in itertools.product(range(n), repeat=ngens):
        images = [np.array([[roots[c]]]) for c in choice]
        mats = rep_from_words(words, images)
        if not is_hom(table, mats):
            continue
        if any(all(np.allclose(a, b) for a, b in zip(mats, f)) for f in found):
            continue
        found.append(mats)
    return found


def clean(z):
    re, im = float(np.real(z)), float(np.imag(z))
    re = 0.0 if abs(re) < 1e-15 else round(re, 16)
    im = 0.0 if abs(im) < 1e-15 else round(im, 16)
    return [re, im]


def encode(mats):
    return [[[clean(z) for z in row] for row in m] for m in mats]


def build(name, gens, extra):
    elems, words = closure(gens)
    table = mult_table(elems)
    chars = characters(table, words, len(gens))
    irreps = []
    for k, mats in enumerate(chars):
        label = "triv" if k == 0 else f"chi{k}"
        irreps.append({"label": label, "dim": 1, "matrices": encode(mats)})
    for label, images in extra:
        mats = rep_from_words(words, images)
        assert is_hom(table, mats)
        irreps.append({"label": label, "dim": images[0].shape[0], "matrices": encode(mats)})
    assert sum(r["dim"] ** 2 for r in irreps) == len(elems), name
    return {"name": name, "order": len(elems), "mult_table": table, "irreps": irreps}


def cyclic(n):
    z = np.exp(2j * np.pi / n)
    return [np.array([[z]])]


def rot(theta):
    return np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]], dtype=complex)


REFL = np.array([[1, 0], [0, -1]], dtype=complex)


def main():
    here = pathlib.Path(__file__).parent
    groups = {
        "z2": (cyclic(2), []),
        "z3": (cyclic(3), []),
        "z4": (cyclic(4), []),
        "z2xz2": ([np.diag([-1, 1]).astype(complex), np.diag([1, -1]).astype(complex)], []),
        "s3": ([rot(2 * np.pi / 3), REFL], [("std", [rot(2 * np.pi / 3), REFL])]),
        "d4": ([rot(np.pi / 2), REFL], [("std", [rot(np.pi / 2), REFL])]),
        "q8": (
            [np.array([[1j, 0], [0, -1j]]), np.array([[0, 1], [-1, 0]], dtype=complex)],
            [("std", [np.array([[1j, 0], [0, -1j]]), np.array([[0, 1], [-1, 0]], dtype=complex)])],
        ),
    }
    for name, (gens, extra) in groups.items():
        data = build(name, gens, extra)
        (here / f"{name}.json").write_text(json.dumps(data, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
