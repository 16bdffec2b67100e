import pytest

from vcbent.cyclotomic import RootScalar
from vcbent.genperm import (
    GenPerm,
    as_dense,
    compose,
    conjugate_by_c,
    gamma,
    kron,
    pauli_z,
    scale,
)
from vcbent.permexpr import ExprParseError, conjugate_expr, evaluate, parse, render

CANONICAL = [
    "I",
    "kron(N,N)",
    "compose(Zc,XT)",
    "w^1*P12",
    "-X",
    "-w^2*kron(P01,X)",
    "blockdiag(I,I,X)",
    "diag(w^2,1,w,1,1,1,w,1,w^2)",
    "kron(w^1*P12,compose(P01,compose(N,Z)))",
    "blockdiag(w^2*Z,I,w^1*Zc)",
]


@pytest.mark.parametrize("text", CANONICAL)
def test_parse_render_round_trip(text):
    node = parse(text)
    assert parse(render(node)) == node


def test_whitespace_and_w_forms_tolerated():
    assert parse("kron( N , N )") == parse("kron(N,N)")
    assert parse("diag(w,1,w^1)") == parse("diag(w^1,1,w)")
    assert parse("w*X") == parse("w^1*X")


def test_parse_errors():
    for bad in ("", "kron(N)", "diag()", "Q", "kron(N,N) X", "w^2", "diag(2,1,1)"):
        with pytest.raises(ExprParseError):
            parse(bad)


def test_evaluate_atoms():
    assert evaluate(parse("I")) == gamma("I")
    assert evaluate(parse("Z")) == pauli_z(3)
    assert evaluate(parse("Zc")) == pauli_z(3, conjugated=True)
    assert evaluate(parse("XT")) == gamma("XT")


def test_evaluate_structures():
    assert evaluate(parse("kron(N,N)")) == kron(gamma("N"), gamma("N"))
    assert evaluate(parse("compose(Zc,XT)")) == compose(pauli_z(3, conjugated=True), gamma("XT"))
    assert evaluate(parse("w^1*P12")) == scale(gamma("P12"), RootScalar(3, 1, 1))
    assert evaluate(parse("-X")) == scale(gamma("X"), RootScalar(3, -1, 0))
    diag = evaluate(parse("diag(w^2,1,w,1,1,1,w,1,w^2)"))
    assert diag == GenPerm.from_diag(3, [RootScalar(3, 1, k) for k in (2, 0, 1, 0, 0, 0, 1, 0, 2)])


def test_case3_equivalent_permutations():
    from vcbent.bentlab import circular_spectrum, spectrum_is_bent
    from vcbent.genperm import apply
    from vcbent.mvfunction import MvFunction

    f = MvFunction.from_digits(3, 2, "000012021")
    s = circular_spectrum(f)
    p_diag = evaluate(parse("diag(w^2,1,w,1,1,1,w,1,w^2)"))
    p_kron = evaluate(parse("kron(w^1*P12,compose(P01,compose(N,Z)))"))
    g1 = spectrum_is_bent(apply(p_diag, s))
    g2 = spectrum_is_bent(apply(p_kron, s))
    assert g1 == g2 == MvFunction.from_digits(3, 2, "102012222")


@pytest.mark.parametrize(
    "text",
    [
        "I",
        "Z",
        "Zc",
        "kron(N,N)",
        "kron(w^1*P12,compose(P01,compose(N,Z)))",
        "compose(P01,X)",
        "-w^1*N",
        "blockdiag(w^2*Z,I,w^1*Zc)",
        "blockdiag(I,I,P12)",
        "diag(w^2,1,w,1,1,1,w,1,w^2)",
    ],
)
def test_conjugate_expr_agrees_with_dense_route(text):
    node = parse(text)
    structural = conjugate_expr(node)
    dense = conjugate_by_c(evaluate(node))
    assert type(structural) is type(dense)
    assert as_dense(structural) == as_dense(dense)
