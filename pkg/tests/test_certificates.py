import pytest

from srpowers import (
    check_linear_quotients,
    check_shelling,
    enumerate_pure_complexes,
    find_shelling,
    parse_certificate,
    parse_complex,
    parse_ideal,
    serialize,
    theorem2_dual_generators,
    theorem2_order,
    theorem3_shelling,
)
from srpowers.certificates import CertificateFormatError, roundtrip_revalidates
from srpowers.dim1 import diameter_at_most_two


def test_shelling_text_format():
    delta = parse_complex("complex n=3 {1 2} {2 3}")
    text = serialize(check_shelling(delta, [0, 1]))
    assert text == "shelling n=3 method=check steps=2\n1 {1 2}\n2 {2 3} : {2}\n"
    assert parse_certificate(text) == check_shelling(delta, [0, 1])


def test_linear_quotient_text_format():
    I = parse_ideal("ideal n=4: x1*x3, x2*x3, x2*x4")
    cert = check_linear_quotients(I, I.generators)
    text = serialize(cert)
    assert text.splitlines()[0] == "linear-quotients n=4 steps=3"
    assert text.splitlines()[2] == "2 x2*x3 : 1/x1"
    assert parse_certificate(text) == cert


def test_searched_shellings_roundtrip():
    for delta in enumerate_pure_complexes(5, 2):
        cert = find_shelling(delta)
        if cert is not None:
            assert roundtrip_revalidates(cert)


def test_dim1_certificates_roundtrip():
    for delta in enumerate_pure_complexes(5, 1, up_to_isomorphism=True):
        if diameter_at_most_two(delta):
            cert = theorem3_shelling(delta)
            assert roundtrip_revalidates(cert)
            assert parse_certificate(serialize(cert)).method == cert.method


def test_linear_quotient_certificates_roundtrip():
    delta = parse_complex("complex n=4 {1 2} {1 3} {1 4} {2 3} {2 4} {3 4}")
    for m in (1, 2, 3):
        J, ctx = theorem2_dual_generators(delta, m)
        assert roundtrip_revalidates(check_linear_quotients(J, theorem2_order(J, ctx)))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "shelling n=3 steps=2\n1 {1 2}\n",
        "shelling n=3 steps=1\n2 {1 2}\n",
        "shelling n=3 steps=1\n1 {1 2} : {1}\n",
        "shelling n=3 steps=2\n1 {1 2}\n2 {2 3}\n",
        "tree n=3 steps=1\n1 {1}\n",
    ],
)
def test_malformed_certificates(text):
    with pytest.raises(CertificateFormatError):
        parse_certificate(text)


def test_tampered_certificate_fails_revalidation():
    delta = parse_complex("complex n=4 {1 2} {2 3} {3 4}")
    text = serialize(check_shelling(delta, [0, 1, 2]))
    swapped = text.replace("3 {3 4} : {3}", "3 {3 4} : {4}")
    assert not parse_certificate(swapped).revalidate()
