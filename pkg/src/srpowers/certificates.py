"""Deterministic text form of shelling and linear-quotient certificates.

    shelling n=3 method=check steps=2
    1 {1 2}
    2 {2 3} : {2}

    linear-quotients n=4 steps=3
    1 x1*x3
    2 x2*x3 : 1/x1
    3 x2*x4 : 2/x3 2/x3

A linear-quotient witness ``k/xt`` on row i says u_k : u_i = x_t (k counted
from 1) and covers the j-th earlier generator, in order.
"""

from __future__ import annotations

import re

from .complexes import face_key
from .dsl import parse_ideal
from .ideals import render_monomial
from .quotients import LinearQuotientCertificate
from .shelling import ShellingCertificate


class CertificateFormatError(ValueError):
    pass


def _face(f) -> str:
    return "{" + " ".join(map(str, face_key(f))) + "}"


def _monomial(u, n: int) -> tuple:
    return parse_ideal(f"ideal n={n}: {u}").generators[0]


def serialize_shelling(cert: ShellingCertificate) -> str:
    lines = [f"shelling n={cert.n} method={cert.method} steps={len(cert.order)}"]
    for i, (F, wits) in enumerate(zip(cert.order, cert.witnesses), start=1):
        row = f"{i} {_face(F)}"
        if i > 1:
            row += " : " + " ".join(_face(w) for w in wits)
        lines.append(row)
    return "\n".join(lines) + "\n"


def serialize_linear_quotients(cert: LinearQuotientCertificate) -> str:
    lines = [f"linear-quotients n={cert.arity} steps={len(cert.order)}"]
    for i, (u, wits) in enumerate(zip(cert.order, cert.witnesses), start=1):
        row = f"{i} {render_monomial(u)}"
        if i > 1:
            row += " : " + " ".join(f"{k + 1}/x{t}" for k, t in wits)
        lines.append(row)
    return "\n".join(lines) + "\n"


def serialize(cert) -> str:
    if isinstance(cert, ShellingCertificate):
        return serialize_shelling(cert)
    return serialize_linear_quotients(cert)


_HEADER = re.compile(r"(shelling|linear-quotients) n=(\d+)(?: method=(\S+))? steps=(\d+)$")
_FACE = re.compile(r"\{([\d ]*)\}")


def _rows(lines, steps):
    if len(lines) != steps:
        raise CertificateFormatError(f"expected {steps} rows, found {len(lines)}")
    for i, line in enumerate(lines, start=1):
        head, sep, tail = line.partition(" :")
        number, _, body = head.partition(" ")
        if number != str(i):
            raise CertificateFormatError(f"row {i} is numbered {number!r}")
        if bool(sep) != (i > 1):
            raise CertificateFormatError(f"row {i}: witnesses belong to rows 2 onward")
        yield body.strip(), tail.strip()


def parse_certificate(text: str):
    lines = [ln.rstrip() for ln in text.strip().splitlines()]
    if not lines:
        raise CertificateFormatError("empty certificate")
    m = _HEADER.match(lines[0])
    if m is None:
        raise CertificateFormatError(f"bad header {lines[0]!r}")
    kind, n, method, steps = m.group(1), int(m.group(2)), m.group(3), int(m.group(4))
    if kind == "shelling":
        order, witnesses = [], []
        for body, tail in _rows(lines[1:], steps):
            faces = _FACE.findall(body)
            if len(faces) != 1:
                raise CertificateFormatError(f"bad facet {body!r}")
            order.append(frozenset(int(v) for v in faces[0].split()))
            witnesses.append(tuple(frozenset(int(v) for v in f.split()) for f in _FACE.findall(tail)))
        return ShellingCertificate(n, tuple(order), tuple(witnesses), method=method or "check")
    order, witnesses = [], []
    for body, tail in _rows(lines[1:], steps):
        order.append(_monomial(body, n))
        row = []
        for item in tail.split():
            k, _, t = item.partition("/x")
            row.append((int(k) - 1, int(t)))
        witnesses.append(tuple(row))
    return LinearQuotientCertificate(n, tuple(order), tuple(witnesses))


def roundtrip_revalidates(cert) -> bool:
    """Serialize, parse back and revalidate from the parsed data alone."""
    text = serialize(cert)
    back = parse_certificate(text)
    return back == cert and serialize(back) == text and back.revalidate()
